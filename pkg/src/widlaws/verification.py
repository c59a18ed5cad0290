"""Monte-Carlo and exact verification of the sampled laws.

The central object is the comparison of an empirical characteristic
function (the mean of a character over N independent draws) against the
closed-form transform of the target law, one row per character, with
tolerance c/sqrt(N) (default c=4, about a 4-sigma test per row: each
summand has modulus one, so either component of the empirical mean has
standard deviation at most 1/sqrt(N) and the per-row false-failure
probability sits below 1e-4).

Every row owns its own RNG stream (stream index = row position in the
character-sorted order), so rows are statistically independent and a
report is bit-reproducible for a fixed seed regardless of evaluation
order.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import groups
from .characters import (
    PadicCharacter,
    SolenoidCharacter,
    TorusCharacter,
    angle_cutoff,
    character_label,
)
from .groups import (
    PadicIntegers,
    Solenoid,
    Torus,
    canonical_angle,
    padic_digit_matrix,
)
from .measures import Quadruplet, ft_quadruplet, validate_quadruplet
from .sampling import (
    _padic_digits,
    _solenoid_deep,
    _torus_angles,
    make_rng,
)


# ---------------------------------------------------------------------------
# sample batches

@dataclass(frozen=True)
class TorusSamples:
    angles: np.ndarray

    def __len__(self):
        return len(self.angles)


@dataclass(frozen=True)
class PadicSamples:
    p: int
    digits: np.ndarray  # (n, depth+1) int64

    def __len__(self):
        return len(self.digits)


@dataclass(frozen=True)
class SolenoidSamples:
    p: int
    depth: int
    deep_angles: np.ndarray

    def __len__(self):
        return len(self.deep_angles)


def combine_samples(a, b):
    """Group product of two equally sized batches, elementwise."""
    if isinstance(a, TorusSamples):
        return TorusSamples(canonical_angle(a.angles + b.angles))
    if isinstance(a, PadicSamples):
        if a.p != b.p or a.digits.shape != b.digits.shape:
            raise ValueError("mismatched p-adic batches")
        return PadicSamples(a.p, padic_digit_matrix(a.p, a.digits + b.digits))
    if isinstance(a, SolenoidSamples):
        if a.p != b.p or a.depth != b.depth:
            raise ValueError("mismatched solenoid batches")
        return SolenoidSamples(a.p, a.depth, canonical_angle(a.deep_angles + b.deep_angles))
    raise TypeError(f"not a sample batch: {a!r}")


def char_mean(batch, chi) -> complex:
    """Mean of the character over the batch — the empirical CF."""
    if isinstance(batch, TorusSamples):
        if not isinstance(chi, TorusCharacter):
            raise TypeError("character/batch mismatch")
        return complex(np.exp(1j * canonical_angle(chi.ell * batch.angles)).mean())
    if isinstance(batch, PadicSamples):
        if not isinstance(chi, PadicCharacter):
            raise TypeError("character/batch mismatch")
        depth = batch.digits.shape[1] - 1
        if chi.d > depth:
            raise ValueError("character depth exceeds sample depth")
        modulus = batch.p ** (chi.d + 1)
        if not 0 <= chi.ell < modulus:
            raise ValueError(f"character frequency {chi.ell} outside 0..{modulus - 1}")
        powers = batch.p ** np.arange(chi.d + 1, dtype=np.int64)
        vals = batch.digits[:, : chi.d + 1] @ powers
        num = np.mod(chi.ell * vals, modulus)
        return complex(np.exp(2j * np.pi * num / modulus).mean())
    if isinstance(batch, SolenoidSamples):
        if not isinstance(chi, SolenoidCharacter):
            raise TypeError("character/batch mismatch")
        if chi.d > batch.depth:
            raise ValueError("character depth exceeds sample depth")
        coord = canonical_angle(batch.p ** (batch.depth - chi.d) * batch.deep_angles)
        return complex(np.exp(1j * canonical_angle(chi.ell * coord)).mean())
    raise TypeError(f"not a sample batch: {batch!r}")


def quadruplet_sampler(q: Quadruplet, depth: int | None = None):
    """Batch sampler (rng, n) -> samples for the quadruplet's group.

    depth defaults to the depth of the quadruplet's shift element; it is
    ignored on the circle.
    """
    validate_quadruplet(q)
    if isinstance(q.group, Torus):
        return lambda rng, n: TorusSamples(_torus_angles(rng, q, n))
    if depth is None:
        depth = q.shift.depth
    if isinstance(q.group, PadicIntegers):
        p = q.group.p
        return lambda rng, n: PadicSamples(p, _padic_digits(rng, q, depth, n))
    p, d = q.group.p, depth
    return lambda rng, n: SolenoidSamples(p, d, _solenoid_deep(rng, q, d, n))


def empirical_cf(sampler, chi, n: int, rng) -> complex:
    """(1/n) * sum of chi over n fresh draws from the sampler."""
    if n < 1:
        raise ValueError("need at least one sample")
    return char_mean(sampler(rng, n), chi)


# ---------------------------------------------------------------------------
# character sets and reports

def default_characters(group, depth: int = 3, max_ell: int = 8):
    """The stock verification character set.

    Circle: frequencies -max_ell..max_ell.  p-adic integers: every
    (d, ell) with d <= min(3, depth).  Solenoid: d <= min(3, depth) and
    |ell| <= max_ell.  The depth cap keeps every character evaluable on
    depth-limited samples; the stock set covers every annihilator
    regime (divisible and indivisible frequencies) at desk-scale cost.
    """
    if isinstance(group, Torus):
        return [TorusCharacter(ell) for ell in range(-max_ell, max_ell + 1)]
    dmax = min(3, depth)
    if isinstance(group, PadicIntegers):
        return [
            PadicCharacter(d, ell)
            for d in range(dmax + 1)
            for ell in range(group.p ** (d + 1))
        ]
    if isinstance(group, Solenoid):
        return [
            SolenoidCharacter(d, ell)
            for d in range(dmax + 1)
            for ell in range(-max_ell, max_ell + 1)
        ]
    raise TypeError(f"not a group descriptor: {group!r}")


def _char_key(chi):
    return (getattr(chi, "d", 0), chi.ell)


@dataclass(frozen=True)
class ComparisonRow:
    label: str
    theory: complex
    empirical: complex
    abs_error: float
    tolerance: float
    passed: bool


@dataclass
class VerificationReport:
    config: dict
    rows: list = field(default_factory=list)
    overall_pass: bool = True
    wall_time: float = 0.0


def _row(label, theory, empirical, tolerance) -> ComparisonRow:
    err = abs(theory - empirical)
    return ComparisonRow(label, theory, empirical, err, tolerance, err <= tolerance)


def describe_quadruplet(q: Quadruplet) -> dict:
    """JSON-ready summary of a quadruplet (used in report config echoes)."""
    if isinstance(q.group, Torus):
        sub = {"kind": "full"} if q.subgroup.order is None else {
            "kind": "cyclic",
            "r": q.subgroup.order,
        }
        shift = {"angle": q.shift.angle}
        eta = [{"point": pt.angle, "mass": m} for pt, m in q.levy.atoms]
        head = {"group": "torus"}
    elif isinstance(q.group, PadicIntegers):
        sub = {"kind": "lambda", "r": q.subgroup.zero_digits}
        shift = {"digits": list(q.shift.digits)}
        eta = [{"point": list(pt.digits), "mass": m} for pt, m in q.levy.atoms]
        head = {"group": "padic", "p": q.group.p}
    else:
        sub = {"kind": "full" if q.subgroup.whole else "trivial"}
        shift = {"deep_angle": q.shift.deep_angle}
        eta = [{"point": pt.deep_angle, "mass": m} for pt, m in q.levy.atoms]
        head = {"group": "solenoid", "p": q.group.p}
    head.update({"H": sub, "a": shift, "b": q.gauss_b, "eta": eta})
    return head


def run_suite(
    q: Quadruplet,
    characters,
    samples: int,
    seed: int,
    tolerance_c: float = 4.0,
    depth: int | None = None,
) -> VerificationReport:
    """Empirical-vs-closed-form comparison, one row per character.

    Each row draws `samples` fresh elements from its own RNG stream and
    is accepted when |theory - empirical| <= tolerance_c / sqrt(samples).
    """
    start = time.perf_counter()
    if samples < 1:
        raise ValueError("samples must be >= 1")
    sampler = quadruplet_sampler(q, depth)
    tol = tolerance_c / math.sqrt(samples)
    config = {
        "quadruplet": describe_quadruplet(q),
        "samples": samples,
        "seed": seed,
        "tolerance_c": tolerance_c,
    }
    if depth is not None or not isinstance(q.group, Torus):
        config["depth"] = depth if depth is not None else q.shift.depth
    report = VerificationReport(config=config)
    for idx, chi in enumerate(sorted(characters, key=_char_key)):
        emp = empirical_cf(sampler, chi, samples, make_rng(seed, stream=idx))
        report.rows.append(_row(character_label(chi), ft_quadruplet(q, chi), emp, tol))
    report.overall_pass = all(r.passed for r in report.rows)
    report.wall_time = time.perf_counter() - start
    return report


def check_compatibility(
    q: Quadruplet,
    n: int,
    samples: int,
    seed: int,
    tolerance_c: float = 4.0,
) -> VerificationReport:
    """Marginal agreement between the depth-n and depth-(n+1) samplers.

    Both runs are compared, at every stock character of depth <= n-1,
    against the shared closed form; the deeper run must reproduce the
    shallower marginals.
    """
    start = time.perf_counter()
    if isinstance(q.group, Torus):
        raise ValueError("compatibility check applies to the p-adic and solenoid samplers")
    if n < 1:
        raise ValueError("n must be >= 1")
    validate_quadruplet(q)
    chars = sorted(default_characters(q.group, depth=n - 1), key=_char_key)
    tol = tolerance_c / math.sqrt(samples)
    config = {
        "check": "compatibility",
        "n": n,
        "quadruplet": describe_quadruplet(q),
        "samples": samples,
        "seed": seed,
        "tolerance_c": tolerance_c,
    }
    report = VerificationReport(config=config)
    stream = 0
    for d in (n, n + 1):
        sampler = quadruplet_sampler(q, depth=d)
        for chi in chars:
            emp = empirical_cf(sampler, chi, samples, make_rng(seed, stream=stream))
            stream += 1
            report.rows.append(
                _row(f"{character_label(chi)} @depth={d}", ft_quadruplet(q, chi), emp, tol)
            )
    report.overall_pass = all(r.passed for r in report.rows)
    report.wall_time = time.perf_counter() - start
    return report


def _effectively_trivial_subgroup(q: Quadruplet, depth: int | None) -> bool:
    if isinstance(q.group, Torus):
        return q.subgroup.order == 1
    if isinstance(q.group, PadicIntegers):
        d = q.shift.depth if depth is None else depth
        return q.subgroup.zero_digits >= d + 1
    return not q.subgroup.whole


def check_divisibility(
    q: Quadruplet,
    n: int,
    samples: int,
    seed: int,
    tolerance_c: float = 4.0,
    depth: int | None = None,
    characters=None,
) -> VerificationReport:
    """n-th convolution root realized by parameter scaling.

    Draws n independent batches with parameters (b/n, eta/n), multiplies
    them in the group, and compares the empirical CF of the product
    against the unscaled closed form.
    """
    start = time.perf_counter()
    if n < 2:
        raise ValueError("n must be >= 2")
    validate_quadruplet(q)
    if not (_effectively_trivial_subgroup(q, depth) and q.shift.is_identity()):
        raise ValueError("divisibility check requires centered measure")
    scaled = Quadruplet(q.group, q.subgroup, q.shift, q.gauss_b / n, q.levy.scaled(1.0 / n))
    sampler = quadruplet_sampler(scaled, depth)
    if characters is None:
        d = depth
        if d is None:
            d = 3 if isinstance(q.group, Torus) else q.shift.depth
        characters = default_characters(q.group, depth=d)
    chars = sorted(characters, key=_char_key)
    tol = tolerance_c / math.sqrt(samples)
    config = {
        "check": "divisibility",
        "n": n,
        "quadruplet": describe_quadruplet(q),
        "samples": samples,
        "seed": seed,
        "tolerance_c": tolerance_c,
    }
    report = VerificationReport(config=config)
    for idx, chi in enumerate(chars):
        rng = make_rng(seed, stream=idx)
        batch = sampler(rng, samples)
        for _ in range(n - 1):
            batch = combine_samples(batch, sampler(rng, samples))
        report.rows.append(
            _row(character_label(chi), ft_quadruplet(q, chi), char_mean(batch, chi), tol)
        )
    report.overall_pass = all(r.passed for r in report.rows)
    report.wall_time = time.perf_counter() - start
    return report


def check_compare_inequality(group, characters, grid_size: int = 1000):
    """Pointwise grid check of the two-sided centering bound
    (1/4)g^2 <= 1 - Re(chi) <= (1/2)g^2 near the identity.

    The grid spans the neighborhood chosen so the pairing g stays within
    pi/4 and, on the solenoid, so that the base coordinate does not wrap
    (|arg y_0| < pi/2, keeping the cutoff linear).  1 - Re(chi) is
    evaluated as 2*sin(u/2)**2 (no cancellation at tiny angles), and the
    lower bound is tested with an absolute 1e-12 slack.  Returns a list
    of (character label, passed) pairs.
    """
    if grid_size < 2:
        raise ValueError("grid_size must be >= 2")
    results = []
    for chi in sorted(characters, key=_char_key):
        ell = chi.ell
        if isinstance(group, Torus):
            if not isinstance(chi, TorusCharacter):
                raise TypeError("character/group mismatch")
            theta_max = math.pi / (4 * (abs(ell) + 1))
            theta = np.linspace(-theta_max, theta_max, grid_size)
            g = ell * angle_cutoff(theta)
            one_minus_re = 2.0 * np.sin(canonical_angle(ell * theta) / 2.0) ** 2
        elif isinstance(group, Solenoid):
            if not isinstance(chi, SolenoidCharacter):
                raise TypeError("character/group mismatch")
            pd = group.p ** chi.d
            theta_max = min(math.pi / (4 * (abs(ell) + 1)), math.pi / (2 * pd))
            theta = np.linspace(-theta_max, theta_max, grid_size)
            arg0 = canonical_angle(pd * theta)
            g = ell * angle_cutoff(arg0) / pd
            one_minus_re = 2.0 * np.sin(canonical_angle(ell * theta) / 2.0) ** 2
        else:
            raise ValueError(
                "the centering bound is checked on the circle and the solenoid only"
            )
        lower_ok = np.all(0.25 * g**2 <= one_minus_re + 1e-12)
        upper_ok = np.all(one_minus_re <= 0.5 * g**2)
        results.append((character_label(chi), bool(lower_ok and upper_ok)))
    return results


def oracle_padic_arithmetic(trials: int, seed: int, primes=(2, 3, 5), depth: int = 15) -> bool:
    """Cross-check the digit arithmetic against exact integer arithmetic.

    For `trials` random pairs per prime, addition, negation, and natural
    multiples must agree bit-exactly with big-integer arithmetic modulo
    p**(depth+1) re-expanded in base p; additionally x + (-x) = 0 and
    the p-th multiple always has leading digit 0.
    """
    rng = make_rng(seed, stream=0)
    for p in primes:
        modulus = p ** (depth + 1)
        xs = rng.integers(0, p, size=(trials, depth + 1))
        ys = rng.integers(0, p, size=(trials, depth + 1))
        ks = rng.integers(0, 1000, size=trials)
        for i in range(trials):
            x = groups.PadicInt(p, tuple(int(v) for v in xs[i]))
            y = groups.PadicInt(p, tuple(int(v) for v in ys[i]))
            xv, yv = x.to_int(), y.to_int()
            if groups.padic_add(x, y) != groups.PadicInt.from_int(p, (xv + yv) % modulus, depth):
                return False
            neg = groups.padic_neg(x)
            if neg != groups.PadicInt.from_int(p, -xv, depth):
                return False
            if not groups.padic_add(x, neg).is_identity():
                return False
            k = int(ks[i])
            if groups.padic_mul_nat(k, x) != groups.PadicInt.from_int(p, k * xv, depth):
                return False
            if groups.padic_mul_nat(p, x).digits[0] != 0:
                return False
    return True
