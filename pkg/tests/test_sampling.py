"""Seeded samplers: determinism, exact laws, Monte-Carlo agreement."""

import cmath
import math

import numpy as np
import pytest
from scipy import stats

from widlaws import (
    EMPTY_LEVY,
    LatticeMeasure,
    LevyMeasure,
    PadicCharacter,
    PadicInt,
    PadicIntegers,
    PadicSubgroup,
    Quadruplet,
    Solenoid,
    SolenoidCharacter,
    SolenoidPoint,
    SolenoidSubgroup,
    Torus,
    TorusCharacter,
    TorusPoint,
    TorusSubgroup,
    char_mean,
    circular_distance,
    empirical_cf,
    ft_quadruplet,
    make_rng,
    quadruplet_sampler,
    sample_compound_poisson,
    sample_normal,
    sample_padic_haar,
    sample_padic_wid,
    sample_poisson_count,
    sample_solenoid_haar,
    sample_solenoid_wid,
    sample_torus_wid,
    sample_uniform_digit,
    sample_uniform_real,
    trivial_quadruplet,
)

N = 100_000


def mc_tol(n, c=4.0):
    return c / math.sqrt(n)


# ---------------------------------------------------------------------------
# rng streams

def test_streams_are_reproducible_and_distinct():
    a = make_rng(123, 0).uniform(size=64)
    b = make_rng(123, 0).uniform(size=64)
    c = make_rng(123, 1).uniform(size=64)
    d = make_rng(124, 0).uniform(size=64)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert not np.array_equal(a, d)


# ---------------------------------------------------------------------------
# scalar blocks

def test_uniform_real_contract():
    with pytest.raises(ValueError):
        sample_uniform_real(make_rng(0), 1.0, 1.0)
    xs = sample_uniform_real(make_rng(1), 0.0, 2 * math.pi, size=N)
    assert np.all((xs >= 0.0) & (xs < 2 * math.pi))
    # CLT: uniform std dev is (hi-lo)/sqrt(12)
    assert abs(xs.mean() - math.pi) <= 4 * (2 * math.pi / math.sqrt(12)) / math.sqrt(N)
    again = sample_uniform_real(make_rng(1), 0.0, 2 * math.pi, size=N)
    assert np.array_equal(xs, again)
    one = sample_uniform_real(make_rng(2), -1.0, 1.0)
    assert isinstance(one, float) and -1.0 <= one < 1.0


def test_uniform_digit_frequencies():
    ds = sample_uniform_digit(make_rng(3), 2, size=N)
    assert set(np.unique(ds)) <= {0, 1}
    assert abs(ds.mean() - 0.5) <= 4 * 0.5 / math.sqrt(N)
    ds5 = sample_uniform_digit(make_rng(4), 5, size=N)
    assert ds5.min() >= 0 and ds5.max() <= 4
    counts = np.bincount(ds5, minlength=5)
    chi2_stat = float(((counts - N / 5) ** 2 / (N / 5)).sum())
    assert chi2_stat < stats.chi2.ppf(0.999, df=4)


def test_normal_moments():
    assert sample_normal(make_rng(5), 0.0) == 0.0
    assert np.all(sample_normal(make_rng(5), 0.0, size=10) == 0.0)
    xs = sample_normal(make_rng(6), 1.0, size=N)
    assert abs(xs.mean()) <= 4 / math.sqrt(N)
    ys = sample_normal(make_rng(7), 2.0, size=N)
    # var of the sample variance of N(0, s2) is ~ 2 s2^2 / n
    assert abs(ys.var(ddof=1) - 2.0) <= 4 * 2.0 * math.sqrt(2) / math.sqrt(N)
    with pytest.raises(ValueError):
        sample_normal(make_rng(8), -0.1)


def test_poisson_counts():
    assert sample_poisson_count(make_rng(9), 0.0) == 0
    ks = sample_poisson_count(make_rng(10), 3.0, size=N)
    assert abs(ks.mean() - 3.0) <= 4 * math.sqrt(3) / math.sqrt(N)
    k1 = sample_poisson_count(make_rng(11), 1.0, size=N)
    p0 = float((k1 == 0).mean())
    assert abs(p0 - math.exp(-1)) <= 4 * 0.5 / math.sqrt(N)
    with pytest.raises(ValueError):
        sample_poisson_count(make_rng(12), -1.0)


def test_compound_poisson_empty_measure_is_origin():
    empty = LatticeMeasure(True, 2, ())
    reals, ints = sample_compound_poisson(make_rng(13), empty, size=50)
    assert np.all(reals == 0.0) and np.all(ints == 0)
    r, k = sample_compound_poisson(make_rng(13), empty)
    assert r == 0.0 and k == (0, 0)


def test_compound_poisson_single_atom_matches_closed_form():
    lam = 1.3
    m = LatticeMeasure(True, 0, ((1.0, (), lam),))
    reals, _ = sample_compound_poisson(make_rng(14), m, size=N)
    # single unit jump: the real coordinate is the Poisson count itself
    assert np.allclose(reals, np.round(reals))
    for t in (0.7, 2.0):
        emp = np.exp(1j * t * reals).mean()
        want = cmath.exp(lam * (cmath.exp(1j * t) - 1))
        assert abs(emp - want) <= mc_tol(N)


def test_compound_poisson_two_atoms_product_form():
    m = LatticeMeasure(True, 1, ((0.5, (2,), 0.8), (-1.0, (1,), 0.4)))
    reals, ints = sample_compound_poisson(make_rng(15), m, size=N)
    for t, w in ((0.9, 1.1), (-0.3, 2.0)):
        emp = np.exp(1j * (t * reals + w * ints[:, 0])).mean()
        want = cmath.exp(
            0.8 * (cmath.exp(1j * (t * 0.5 + w * 2)) - 1)
            + 0.4 * (cmath.exp(1j * (t * -1.0 + w * 1)) - 1)
        )
        assert abs(emp - want) <= mc_tol(N)


# ---------------------------------------------------------------------------
# circle quadruplets

def test_torus_trivial_quadruplet_is_identity():
    q = trivial_quadruplet(Torus())
    assert np.all(sample_torus_wid(make_rng(16), q, size=100) == 0.0)
    assert sample_torus_wid(make_rng(16), q) == TorusPoint.identity()


def test_torus_haar_kills_nontrivial_characters():
    q = Quadruplet(Torus(), TorusSubgroup.full(), TorusPoint.identity(), 0.0, EMPTY_LEVY)
    sampler = quadruplet_sampler(q)
    for stream, ell in enumerate((1, -3, 8)):
        emp = empirical_cf(sampler, TorusCharacter(ell), N, make_rng(17, stream))
        assert abs(emp) <= mc_tol(N)


def test_torus_gauss_block():
    q = Quadruplet(Torus(), TorusSubgroup.trivial(), TorusPoint.identity(), 1.0, EMPTY_LEVY)
    emp = empirical_cf(quadruplet_sampler(q), TorusCharacter(1), N, make_rng(18))
    assert abs(emp - math.exp(-0.5)) <= mc_tol(N)


# ---------------------------------------------------------------------------
# p-adic quadruplets

def test_padic_haar_block():
    q = Quadruplet(PadicIntegers(3), PadicSubgroup(0), PadicInt.zero(3, 3), 0.0, EMPTY_LEVY)
    sampler = quadruplet_sampler(q, depth=3)
    for stream, (d, ell) in enumerate(((0, 1), (1, 5), (3, 40))):
        emp = empirical_cf(sampler, PadicCharacter(d, ell), N, make_rng(19, stream))
        assert abs(emp) <= mc_tol(N)
    digits = sample_padic_haar(make_rng(20), 3, 3, size=1000)
    assert digits.shape == (1000, 4) and digits.min() >= 0 and digits.max() <= 2


def test_padic_deterministic_when_subgroup_below_depth():
    a = PadicInt(2, (1, 0, 1, 1))
    q = Quadruplet(PadicIntegers(2), PadicSubgroup(4), a, 0.0, EMPTY_LEVY)
    out = sample_padic_wid(make_rng(21), q, 3, size=200)
    assert np.all(out == np.array(a.digits))
    assert sample_padic_wid(make_rng(21), q, 3) == a


def test_padic_gen_poisson_block():
    eta = LevyMeasure(((PadicInt(2, (1, 0, 1, 0)), 0.8),))
    q = Quadruplet(PadicIntegers(2), PadicSubgroup(4), PadicInt.zero(2, 3), 0.0, eta)
    sampler = quadruplet_sampler(q, depth=3)
    for stream, (d, ell) in enumerate(((0, 1), (2, 3), (3, 5))):
        chi = PadicCharacter(d, ell)
        emp = empirical_cf(sampler, chi, N, make_rng(22, stream))
        assert abs(emp - ft_quadruplet(q, chi)) <= mc_tol(N)


# ---------------------------------------------------------------------------
# solenoid quadruplets

def test_solenoid_trivial_quadruplet_is_identity():
    q = trivial_quadruplet(Solenoid(2), depth=3)
    assert np.all(sample_solenoid_wid(make_rng(23), q, 3, size=100) == 0.0)


def test_solenoid_gauss_block():
    p = 2
    q = Quadruplet(Solenoid(p), SolenoidSubgroup.trivial(), SolenoidPoint.identity(p, 3), 1.0, EMPTY_LEVY)
    sampler = quadruplet_sampler(q, depth=3)
    for stream, (d, ell) in enumerate(((0, 1), (2, 3), (3, -5))):
        chi = SolenoidCharacter(d, ell)
        emp = empirical_cf(sampler, chi, N, make_rng(24, stream))
        want = math.exp(-(ell**2) / (2 * p ** (2 * d)))
        assert abs(emp - want) <= mc_tol(N)


def test_solenoid_shift_only_reproduces_the_point():
    p = 2
    a = SolenoidPoint(p, 3, 1.234)
    q = Quadruplet(Solenoid(p), SolenoidSubgroup.trivial(), a, 0.0, EMPTY_LEVY)
    out = sample_solenoid_wid(make_rng(25), q, 3, size=50)
    assert np.all(circular_distance(out, a.deep_angle) <= 1e-12)
    pt = sample_solenoid_wid(make_rng(25), q, 3)
    for j in range(4):
        assert circular_distance(pt.coordinate_angle(j), a.coordinate_angle(j)) <= 1e-12


def test_solenoid_haar_block():
    from widlaws import SolenoidSamples

    p, depth = 2, 3
    sampler = lambda rng, n: SolenoidSamples(p, depth, sample_solenoid_haar(rng, p, depth, size=n))
    for stream, (d, ell) in enumerate(((0, 1), (1, 2), (3, 3), (0, 2), (0, 3))):
        emp = empirical_cf(sampler, SolenoidCharacter(d, ell), N, make_rng(26, stream))
        assert abs(emp) <= mc_tol(N)
    # trivial characters are exactly 1 for every sample
    batch = sampler(make_rng(27), 5000)
    for d in range(depth + 1):
        assert char_mean(batch, SolenoidCharacter(d, 0)) == 1 + 0j


def test_solenoid_full_subgroup_dispatches_to_haar():
    p = 2
    eta = LevyMeasure(((SolenoidPoint(p, 3, 0.9), 0.7),))
    q = Quadruplet(Solenoid(p), SolenoidSubgroup.full(), SolenoidPoint(p, 3, 0.5), 0.3, eta)
    sampler = quadruplet_sampler(q, depth=3)
    for stream, (d, ell) in enumerate(((0, 1), (2, 4))):
        chi = SolenoidCharacter(d, ell)
        emp = empirical_cf(sampler, chi, N, make_rng(28, stream))
        assert ft_quadruplet(q, chi) == 0
        assert abs(emp) <= mc_tol(N)


# ---------------------------------------------------------------------------
# cross-block properties

def test_convolution_property():
    eta = LevyMeasure(((TorusPoint(2.1), 0.6),))
    q1 = Quadruplet(Torus(), TorusSubgroup.cyclic(2), TorusPoint(0.4), 0.2, EMPTY_LEVY)
    q2 = Quadruplet(Torus(), TorusSubgroup.trivial(), TorusPoint(-0.9), 0.0, eta)
    s1 = quadruplet_sampler(q1)
    s2 = quadruplet_sampler(q2)
    rng = make_rng(29)
    a = s1(rng, N)
    b = s2(rng, N)
    from widlaws import combine_samples

    both = combine_samples(a, b)
    for ell in (0, 1, 2, -3):
        chi = TorusCharacter(ell)
        want = ft_quadruplet(q1, chi) * ft_quadruplet(q2, chi)
        assert abs(char_mean(both, chi) - want) <= mc_tol(N)


def test_sampler_requires_matching_group():
    q = trivial_quadruplet(Torus())
    with pytest.raises(ValueError):
        sample_padic_wid(make_rng(0), q, 2)
    with pytest.raises(ValueError):
        sample_solenoid_wid(make_rng(0), q, 2)
    qp = trivial_quadruplet(PadicIntegers(2), depth=2)
    with pytest.raises(ValueError):
        sample_torus_wid(make_rng(0), qp)


def test_shift_depth_must_cover_requested_depth():
    qp = trivial_quadruplet(PadicIntegers(2), depth=2)
    with pytest.raises(ValueError, match="digits"):
        sample_padic_wid(make_rng(0), qp, 5)
    qs = trivial_quadruplet(Solenoid(2), depth=2)
    with pytest.raises(ValueError, match="coordinates"):
        sample_solenoid_wid(make_rng(0), qs, 5)
