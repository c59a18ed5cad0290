"""Quadruplet data model and closed-form Fourier transforms.

Every weakly infinitely divisible law handled by this library is the
convolution of four blocks: the Haar measure of a compact subgroup, a
point mass, a symmetric Gauss measure, and a centered (generalized)
Poisson measure driven by a finite atomic Levy measure.  This module
owns the validated container for those four parameters, the finite
lattice measures obtained by pushing a Levy measure forward to products
of subgroups of the real line, and the exact Fourier transform of every
block and of the full convolution.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .characters import annihilates, angle_cutoff, eval_char, local_inner_product, quadratic_form
from .groups import (
    PadicInt,
    PadicIntegers,
    PadicSubgroup,
    Solenoid,
    SolenoidPoint,
    SolenoidSubgroup,
    Torus,
    TorusPoint,
    TorusSubgroup,
    solenoid_lift,
)

_IDENTITY_MESSAGE = "Levy measure must satisfy η({e})=0: atom at the identity"


@dataclass(frozen=True)
class LevyMeasure:
    """Finite atomic Levy measure: a tuple of (point, mass) atoms.

    Duplicate points are merged by summing masses at construction; atoms
    at the identity are rejected (η({e})=0) and masses must be positive
    and finite.  Finiteness of the atom list makes both Levy-measure
    integrability conditions automatic.
    """

    atoms: tuple = field(default=())

    def __post_init__(self):
        merged = {}
        order = []
        for point, mass in self.atoms:
            mass = float(mass)
            if not math.isfinite(mass) or mass <= 0:
                raise ValueError(f"atom mass must be positive and finite, got {mass}")
            if point.is_identity():
                raise ValueError(_IDENTITY_MESSAGE)
            if point in merged:
                merged[point] += mass
            else:
                merged[point] = mass
                order.append(point)
        object.__setattr__(self, "atoms", tuple((pt, merged[pt]) for pt in order))

    @property
    def total_mass(self) -> float:
        return sum(m for _, m in self.atoms)

    def is_empty(self) -> bool:
        return len(self.atoms) == 0

    def scaled(self, factor: float) -> "LevyMeasure":
        """Same atoms with every mass multiplied by factor > 0."""
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return LevyMeasure(tuple((pt, m * factor) for pt, m in self.atoms))


EMPTY_LEVY = LevyMeasure(())


@dataclass(frozen=True)
class Quadruplet:
    """Parameters (subgroup, shift, gauss_b, levy) of one law.

    The law itself is Haar(subgroup) * point-mass(shift) *
    Gauss(gauss_b) * centered-Poisson(levy); see ft_quadruplet for its
    transform and the sampling module for exact draws.
    """

    group: object
    subgroup: object
    shift: object
    gauss_b: float
    levy: LevyMeasure


def trivial_quadruplet(group, depth: int = 0) -> Quadruplet:
    """The point mass at the identity, as a quadruplet."""
    if isinstance(group, Torus):
        return Quadruplet(group, TorusSubgroup.trivial(), TorusPoint.identity(), 0.0, EMPTY_LEVY)
    if isinstance(group, PadicIntegers):
        return Quadruplet(
            group, PadicSubgroup(depth + 1), PadicInt.zero(group.p, depth), 0.0, EMPTY_LEVY
        )
    if isinstance(group, Solenoid):
        return Quadruplet(
            group, SolenoidSubgroup.trivial(), SolenoidPoint.identity(group.p, depth), 0.0, EMPTY_LEVY
        )
    raise TypeError(f"not a group descriptor: {group!r}")


def validate_quadruplet(q: Quadruplet):
    """Raise ValueError on any broken invariant; return None when valid.

    Checks: component/group type agreement, shared p and depth, a
    nonnegative finite Gauss scale, and zero Gauss scale on the p-adic
    integers (no nontrivial Gauss measure exists there).
    """
    b = q.gauss_b
    if not (isinstance(b, (int, float)) and math.isfinite(b)) or b < 0:
        raise ValueError(f"gauss_b must be a finite nonnegative real, got {b!r}")

    def check_points(expected_type, same=lambda a, b: None):
        if not isinstance(q.shift, expected_type):
            raise ValueError(f"shift must be a {expected_type.__name__}")
        for pt, _ in q.levy.atoms:
            if not isinstance(pt, expected_type):
                raise ValueError(f"Levy atom must be a {expected_type.__name__}")
            same(q.shift, pt)

    if isinstance(q.group, Torus):
        if not isinstance(q.subgroup, TorusSubgroup):
            raise ValueError("subgroup must be a TorusSubgroup")
        check_points(TorusPoint)
    elif isinstance(q.group, PadicIntegers):
        if not isinstance(q.subgroup, PadicSubgroup):
            raise ValueError("subgroup must be a PadicSubgroup")
        if b != 0:
            raise ValueError(
                "no nontrivial Gauss measure exists on the p-adic integers (gauss_b must be 0)"
            )

        def same(a, c):
            if a.p != q.group.p or c.p != q.group.p:
                raise ValueError("element prime does not match the group")
            if len(a.digits) != len(c.digits):
                raise ValueError("p-adic elements must share their digit length")

        check_points(PadicInt, same)
        if q.shift.p != q.group.p:
            raise ValueError("element prime does not match the group")
    elif isinstance(q.group, Solenoid):
        if not isinstance(q.subgroup, SolenoidSubgroup):
            raise ValueError("subgroup must be a SolenoidSubgroup")

        def same(a, c):
            if a.p != q.group.p or c.p != q.group.p:
                raise ValueError("element prime does not match the group")
            if a.depth != c.depth:
                raise ValueError("solenoid elements must share their depth")

        check_points(SolenoidPoint, same)
        if q.shift.p != q.group.p:
            raise ValueError("element prime does not match the group")
    else:
        raise ValueError(f"not a group descriptor: {q.group!r}")


# ---------------------------------------------------------------------------
# closed-form Fourier transforms of the four blocks

def ft_haar(group, subgroup, chi) -> complex:
    """Indicator of the annihilator: 1 if chi is trivial on the subgroup,
    else 0."""
    return 1.0 + 0.0j if annihilates(group, subgroup, chi) else 0.0 + 0.0j


def ft_dirac(a, chi) -> complex:
    """Transform of the point mass at a: just chi(a)."""
    return eval_char(chi, a)


def ft_gauss(group, b: float, chi) -> complex:
    return complex(math.exp(-quadratic_form(group, b, chi) / 2.0))


def ft_compound_poisson(eta: LevyMeasure, chi) -> complex:
    """exp( sum_atoms mass * (chi(point) - 1) )."""
    acc = 0.0 + 0.0j
    for pt, m in eta.atoms:
        acc += m * (eval_char(chi, pt) - 1.0)
    return cmath.exp(acc)


def ft_gen_poisson(group, eta: LevyMeasure, chi) -> complex:
    """exp( sum_atoms mass * (chi(point) - 1 - i*g(point, chi)) ).

    On the p-adic integers g vanishes, so this coincides with
    ft_compound_poisson there.
    """
    acc = 0.0 + 0.0j
    for pt, m in eta.atoms:
        acc += m * (eval_char(chi, pt) - 1.0 - 1j * local_inner_product(group, pt, chi))
    return cmath.exp(acc)


def ft_quadruplet(q: Quadruplet, chi) -> complex:
    """Product of the four block transforms."""
    return (
        ft_haar(q.group, q.subgroup, chi)
        * ft_dirac(q.shift, chi)
        * ft_gauss(q.group, q.gauss_b, chi)
        * ft_gen_poisson(q.group, q.levy, chi)
    )


def local_mean_drift(group, eta: LevyMeasure) -> float:
    """Scalar drift s realizing the local mean of eta.

    Subtracting s from the real coordinate of a compound-Poisson draw
    turns it into the centered (generalized) Poisson draw: at transform
    level the drift enters as exp(i*ell*s) on the circle and
    exp(i*ell*s / p**d) on the solenoid, and vanishes identically on the
    p-adic integers.
    """
    if isinstance(group, PadicIntegers):
        return 0.0
    if isinstance(group, Torus):
        return sum(m * angle_cutoff(pt.angle) for pt, m in eta.atoms)
    if isinstance(group, Solenoid):
        return sum(m * angle_cutoff(pt.coordinate_angle(0)) for pt, m in eta.atoms)
    raise TypeError(f"not a group descriptor: {group!r}")


# ---------------------------------------------------------------------------
# pushforwards to lattice measures on R x Z^n

@dataclass(frozen=True)
class LatticeMeasure:
    """Finite atomic measure on R x Z^n (has_real) or on Z^n alone.

    Atoms are (real coordinate, integer tuple, mass); the origin is
    excluded by construction.  int_dim is the length of every integer
    tuple (0 gives a measure on R alone).
    """

    has_real: bool
    int_dim: int
    atoms: tuple = field(default=())

    def __post_init__(self):
        merged = {}
        order = []
        for x, ints, mass in self.atoms:
            x = float(x) if self.has_real else 0.0
            ints = tuple(int(k) for k in ints)
            mass = float(mass)
            if len(ints) != self.int_dim:
                raise ValueError(f"integer tuple must have length {self.int_dim}")
            if mass <= 0 or not math.isfinite(mass):
                raise ValueError(f"atom mass must be positive and finite, got {mass}")
            if x == 0.0 and all(k == 0 for k in ints):
                raise ValueError("lattice measure carries no atom at the origin")
            key = (x, ints)
            if key in merged:
                merged[key] += mass
            else:
                merged[key] = mass
                order.append(key)
        object.__setattr__(
            self, "atoms", tuple((x, ints, merged[(x, ints)]) for x, ints in order)
        )

    @property
    def total_mass(self) -> float:
        return sum(m for _, _, m in self.atoms)


def pushforward_torus(eta: LevyMeasure) -> LatticeMeasure:
    """Image on R under the angle map: atoms (arg point, mass)."""
    return LatticeMeasure(True, 0, tuple((pt.angle, (), m) for pt, m in eta.atoms))


def pushforward_padic(eta: LevyMeasure, n: int) -> LatticeMeasure:
    """Image on Z^(n+1) under the digit-prefix map x -> (x_0, ..., x_n).

    Atoms whose prefix is all zero map to the origin and are dropped;
    the remaining mass is exactly the mass outside the depth-(n+1)
    zero-prefix subgroup.
    """
    if n < 0:
        raise ValueError("prefix depth must be >= 0")
    atoms = []
    for pt, m in eta.atoms:
        if n > pt.depth:
            raise ValueError(
                f"prefix depth {n} exceeds atom depth {pt.depth}"
            )
        prefix = pt.digits[: n + 1]
        if any(d != 0 for d in prefix):
            atoms.append((0.0, prefix, m))
    return LatticeMeasure(False, n + 1, tuple(atoms))


def pushforward_solenoid(eta: LevyMeasure, n: int) -> LatticeMeasure:
    """Image on R x Z^n under the canonical lift truncated at index n.

    Atoms lifting to the origin of R x Z^n are dropped.
    """
    if n < 0:
        raise ValueError("lift depth must be >= 0")
    atoms = []
    for pt, m in eta.atoms:
        if n > pt.depth:
            raise ValueError(f"lift depth {n} exceeds atom depth {pt.depth}")
        y0, ints = solenoid_lift(pt)
        ints = ints[:n]
        if y0 != 0.0 or any(k != 0 for k in ints):
            atoms.append((y0, ints, m))
    return LatticeMeasure(True, n, tuple(atoms))
