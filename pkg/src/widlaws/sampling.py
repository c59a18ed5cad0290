"""Deterministic, seedable exact samplers for every building block.

Randomness comes from numpy Generators over the counter-based Philox
bit generator, keyed by a 64-bit seed plus a stream index through
SeedSequence(seed, spawn_key=(stream,)): the same pair always replays
the same sequence and distinct stream indices give statistically
independent streams.  Poisson counts use the generator's exact routine
(inversion for small means, transformed rejection for large ones) and
normal draws its exact ziggurat, so every sampler below realizes its
target law exactly, never through a normal approximation.

Each sampler consumes randomness in a fixed documented order (Haar
layer, then Gauss, then jump count, then jump selection); degenerate
layers (trivial subgroup, zero variance, empty jump measure) consume
nothing.  With size=None a single group element is returned; with
size=n the raw array form (angles, digit matrix, deepest angles).
"""

from __future__ import annotations

import math

import numpy as np

from .groups import (
    PadicInt,
    PadicIntegers,
    Solenoid,
    SolenoidPoint,
    Torus,
    TorusPoint,
    TWO_PI,
    canonical_angle,
    padic_digit_matrix,
    solenoid_lift,
    solenoid_lift_matrix,
    validate_prime,
)
from .measures import (
    LatticeMeasure,
    Quadruplet,
    local_mean_drift,
    pushforward_padic,
    pushforward_solenoid,
    pushforward_torus,
    validate_quadruplet,
)


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Deterministic generator for the (seed, stream) pair."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(stream),))
    return np.random.Generator(np.random.Philox(ss))


# ---------------------------------------------------------------------------
# scalar building blocks

def sample_uniform_real(rng, lo: float, hi: float, size=None):
    """Uniform on [lo, hi)."""
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi})")
    out = rng.uniform(lo, hi, size=1 if size is None else size)
    return float(out[0]) if size is None else out


def sample_uniform_digit(rng, p: int, size=None):
    """Uniform on {0, ..., p-1}."""
    validate_prime(p)
    out = rng.integers(0, p, size=1 if size is None else size, dtype=np.int64)
    return int(out[0]) if size is None else out


def sample_normal(rng, variance: float, size=None):
    """Centered normal with the given variance; variance 0 returns exact
    zeros without consuming randomness."""
    if variance < 0:
        raise ValueError("variance must be >= 0")
    n = 1 if size is None else size
    if variance == 0:
        out = np.zeros(n)
    else:
        out = rng.normal(0.0, math.sqrt(variance), size=n)
    return float(out[0]) if size is None else out


def sample_poisson_count(rng, lam: float, size=None):
    """Exact Poisson counts with mean lam; lam 0 returns zeros without
    consuming randomness."""
    if lam < 0 or not math.isfinite(lam):
        raise ValueError("Poisson mean must be finite and >= 0")
    n = 1 if size is None else size
    if lam == 0:
        out = np.zeros(n, dtype=np.int64)
    else:
        out = rng.poisson(lam, size=n).astype(np.int64)
    return int(out[0]) if size is None else out


def sample_compound_poisson(rng, measure: LatticeMeasure, size=None):
    """Poisson(total mass) many jumps, each an atom picked with
    probability mass/total, summed coordinatewise on R x Z^k.

    Atom selection walks a precomputed cumulative mass table by binary
    search over uniforms.  Returns (real part, integer part): floats of
    shape (n,) and an int64 matrix of shape (n, k); with size=None a
    single (float, tuple) pair.  The empty measure yields the origin
    and consumes nothing.
    """
    n = 1 if size is None else int(size)
    k = measure.int_dim
    reals = np.zeros(n)
    ints = np.zeros((n, k), dtype=np.int64)
    if len(measure.atoms) > 0:
        atom_real = np.array([x for x, _, _ in measure.atoms])
        atom_ints = np.array([ki for _, ki, _ in measure.atoms], dtype=np.int64).reshape(
            len(measure.atoms), k
        )
        masses = np.array([m for _, _, m in measure.atoms])
        total = masses.sum()
        counts = rng.poisson(total, size=n)
        jumps = int(counts.sum())
        if jumps > 0:
            cum = np.cumsum(masses) / total
            picks = np.searchsorted(cum, rng.random(jumps), side="right")
            picks = np.minimum(picks, len(masses) - 1)
            owner = np.repeat(np.arange(n), counts)
            reals = np.bincount(owner, weights=atom_real[picks], minlength=n)
            for j in range(k):
                col = np.bincount(owner, weights=atom_ints[picks, j], minlength=n)
                ints[:, j] = col.astype(np.int64)
    if size is None:
        return float(reals[0]), tuple(int(v) for v in ints[0])
    return reals, ints


# ---------------------------------------------------------------------------
# full quadruplet samplers

def _torus_angles(rng, q: Quadruplet, n: int) -> np.ndarray:
    angles = np.zeros(n)
    order = q.subgroup.order
    if order is None:
        angles += rng.uniform(0.0, TWO_PI, size=n)
    elif order > 1:
        angles += rng.integers(0, order, size=n) * (TWO_PI / order)
    angles += q.shift.angle
    if q.gauss_b > 0:
        angles += rng.normal(0.0, math.sqrt(q.gauss_b), size=n)
    if not q.levy.is_empty():
        jumps, _ = sample_compound_poisson(rng, pushforward_torus(q.levy), size=n)
        angles += jumps - local_mean_drift(q.group, q.levy)
    return canonical_angle(angles)


def sample_torus_wid(rng, q: Quadruplet, size=None):
    """Draw from a circle quadruplet: exp(i(U + arg a + X + Y)) with U the
    Haar layer of the subgroup, X the Gauss layer, Y the centered
    compound-Poisson layer."""
    if not isinstance(q.group, Torus):
        raise ValueError("quadruplet is not on the circle")
    validate_quadruplet(q)
    out = _torus_angles(rng, q, 1 if size is None else size)
    return TorusPoint(float(out[0])) if size is None else out


def _padic_digits(rng, q: Quadruplet, depth: int, n: int) -> np.ndarray:
    p = q.group.p
    width = depth + 1
    if q.shift.depth < depth:
        raise ValueError(f"shift carries digits 0..{q.shift.depth}, need 0..{depth}")
    totals = np.zeros((n, width), dtype=np.int64)
    start = min(q.subgroup.zero_digits, width)
    if start < width:
        totals[:, start:] = rng.integers(0, p, size=(n, width - start), dtype=np.int64)
    totals += np.array(q.shift.digits[:width], dtype=np.int64)
    if not q.levy.is_empty():
        _, jumps = sample_compound_poisson(rng, pushforward_padic(q.levy, depth), size=n)
        totals += jumps
    return padic_digit_matrix(p, totals)


def sample_padic_wid(rng, q: Quadruplet, depth: int, size=None):
    """Draw digits 0..depth from a p-adic quadruplet.

    Uniform digits above the subgroup's zero prefix, plus the shift's
    digits, plus one compound-Poisson draw of digit-prefix jump vectors,
    all pushed through the carry normalization; the law of the retained
    digits is exact.
    """
    if not isinstance(q.group, PadicIntegers):
        raise ValueError("quadruplet is not on the p-adic integers")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    validate_quadruplet(q)
    out = _padic_digits(rng, q, depth, 1 if size is None else size)
    if size is None:
        return PadicInt(q.group.p, tuple(int(d) for d in out[0]))
    return out


def _solenoid_deep(rng, q: Quadruplet, depth: int, n: int) -> np.ndarray:
    p = q.group.p
    if q.subgroup.whole:
        return _solenoid_haar_deep(rng, p, depth, n)
    if q.shift.depth < depth:
        raise ValueError(f"shift carries coordinates 0..{q.shift.depth}, need 0..{depth}")
    t0, a_ints = solenoid_lift(q.shift)
    y0 = np.full(n, t0)
    ints = np.tile(np.array(a_ints[:depth], dtype=np.int64), (n, 1)) if depth > 0 else np.zeros(
        (n, 0), dtype=np.int64
    )
    if q.gauss_b > 0:
        y0 = y0 + rng.normal(0.0, math.sqrt(q.gauss_b), size=n)
    if not q.levy.is_empty():
        jr, ji = sample_compound_poisson(rng, pushforward_solenoid(q.levy, depth), size=n)
        y0 = y0 + jr - local_mean_drift(q.group, q.levy)
        ints = ints + ji
    return solenoid_lift_matrix(p, depth, y0, ints)


def _solenoid_haar_deep(rng, p: int, depth: int, n: int) -> np.ndarray:
    u0 = rng.uniform(0.0, TWO_PI, size=n)
    digits = rng.integers(0, p, size=(n, depth), dtype=np.int64)
    return solenoid_lift_matrix(p, depth, u0, digits)


def sample_solenoid_wid(rng, q: Quadruplet, depth: int, size=None):
    """Draw deepest angles (coordinate index = depth) from a solenoid
    quadruplet.

    With the trivial subgroup: lift the shift, add the Gauss layer to
    the real coordinate and a centered compound-Poisson draw to the
    whole lift, then map back down.  With the full subgroup the Haar
    layer absorbs everything and the draw is pure Haar.
    """
    if not isinstance(q.group, Solenoid):
        raise ValueError("quadruplet is not on the solenoid")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    validate_quadruplet(q)
    out = _solenoid_deep(rng, q, depth, 1 if size is None else size)
    if size is None:
        return SolenoidPoint(q.group.p, depth, float(out[0]))
    return out


def sample_solenoid_haar(rng, p: int, depth: int, size=None):
    """Haar draw on the solenoid: a uniform angle at the top of the tower
    refined by uniform base-p digits down to the requested depth."""
    validate_prime(p)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    out = _solenoid_haar_deep(rng, p, depth, 1 if size is None else size)
    return SolenoidPoint(p, depth, float(out[0])) if size is None else out


def sample_padic_haar(rng, p: int, depth: int, size=None):
    """Haar draw on the p-adic integers: every digit independent uniform."""
    validate_prime(p)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    n = 1 if size is None else size
    out = rng.integers(0, p, size=(n, depth + 1), dtype=np.int64)
    if size is None:
        return PadicInt(p, tuple(int(d) for d in out[0]))
    return out
