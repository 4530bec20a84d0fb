"""Projective-space and multi-qubit fans, chart atlases, and the subset-product map."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .geometry import (Cone, Fan, Polytope, dual_cone, fan_from_maximal,
                       is_simplicial, make_fan, pos_hull)
from .linalg import det_int, solve_columns
from .monoid import hilbert_basis
from .segre import PureState, check_shape, minor_value, segre_minors


def _unit(dim: int, axis: int, sign: int = 1) -> tuple[int, ...]:
    return tuple(sign * int(i == axis) for i in range(dim))


def projective_space_fan(n: int) -> Fan:
    """The complete fan of CP^n: pos{e_1..e_n} plus the cones replacing one
    e_i by -(e_1 + ... + e_n)."""
    if n < 1:
        raise ValueError("projective dimension must be at least 1")
    minus_sum = tuple(-1 for _ in range(n))
    maximal = [pos_hull([_unit(n, i) for i in range(n)], n)]
    for i in range(n):
        gens = [_unit(n, j) for j in range(n) if j != i] + [minus_sum]
        maximal.append(pos_hull(gens, n))
    return fan_from_maximal(maximal)


def multiqubit_polytope(m: int) -> Polytope:
    """The cube with all 2^m sign vectors as vertices."""
    if not 1 <= m <= 10:
        raise ValueError("party count must be between 1 and 10")
    vertices = tuple(sorted(product((-1, 1), repeat=m)))
    return Polytope(m, vertices)


def multiqubit_fan(m: int) -> Fan:
    """The complete fan of (CP^1)^m: the 2^m orthants and all their faces."""
    if not 1 <= m <= 10:
        raise ValueError("party count must be between 1 and 10")
    cones = []
    for k in range(m + 1):
        for axes in combinations(range(m), k):
            for signs in product((1, -1), repeat=k):
                gens = sorted(_unit(m, a, s) for a, s in zip(axes, signs))
                cones.append(Cone(m, tuple(gens)))
    return make_fan(cones, m)


@dataclass(frozen=True)
class Chart:
    """Coordinates of one affine chart: the dual monoid's minimal generators."""

    cone: Cone
    coordinates: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ChartAtlas:
    """One chart per maximal cone, with monomial transition maps.

    Each transition (i, j, T) holds the integer exponent matrix expressing
    chart j's coordinates as Laurent monomials of chart i's: coordinate c of
    chart j is the monomial with exponent row T[c] in chart i's coordinates.
    Transitions exist for facet-adjacent chart pairs; fetch one with
    ``transition(i, j)``.
    """

    fan: Fan
    charts: tuple[Chart, ...]
    transitions: tuple[tuple[int, int, tuple[tuple[int, ...], ...]], ...]

    def transition(self, i: int, j: int):
        for a, b, mat in self.transitions:
            if (a, b) == (i, j):
                return mat
        raise KeyError(f"no transition between charts {i} and {j}")


def chart_atlas(fan: Fan) -> ChartAtlas:
    """Affine charts of a complete fan with smooth simplicial maximal cones.

    Adjacency is read off the simplicial structure: two maximal cones are
    facet-adjacent exactly when they share all but one generator.
    """
    maximal = fan.maximal_cones()
    charts = []
    facet_owners: dict[frozenset, list[int]] = {}
    for pos_idx, cone in enumerate(maximal):
        if not is_simplicial(cone):
            raise ValueError(f"maximal cone {cone.generators} is not simplicial")
        if cone.rank != fan.dim or abs(det_int(cone.generators)) != 1:
            raise ValueError(f"maximal cone {cone.generators} is not smooth")
        coords = hilbert_basis(dual_cone(cone)).generators
        charts.append(Chart(cone, coords))
        for drop in range(len(cone.generators)):
            key = frozenset(g for t, g in enumerate(cone.generators)
                            if t != drop)
            facet_owners.setdefault(key, []).append(pos_idx)
    adjacent = set()
    for owners in facet_owners.values():
        for i, j in product(owners, repeat=2):
            if i != j:
                adjacent.add((i, j))
    transitions = []
    for i, j in sorted(adjacent):
        rows = []
        for b in charts[j].coordinates:
            coeffs = solve_columns(charts[i].coordinates, b)
            if coeffs is None or any(c.denominator != 1 for c in coeffs):
                raise ValueError("chart coordinates do not form a lattice basis")
            rows.append(tuple(int(c) for c in coeffs))
        transitions.append((i, j, tuple(rows)))
    return ChartAtlas(fan, tuple(charts), tuple(transitions))


@dataclass(frozen=True)
class Subvariety:
    """A torus-invariant subvariety of a multi-qubit fan, with a display label."""

    cone: Cone
    kind: str
    description: str


def invariant_subvarieties(fan: Fan) -> tuple[Subvariety, ...]:
    """Ray and fixed-point subvarieties of multiqubit_fan(m), m <= 3.

    Ray +e_j pins factor j to 0, ray -e_j pins it to the point at infinity;
    each orthant is a torus fixed point.
    """
    m = None
    for candidate in (1, 2, 3):
        if fan == multiqubit_fan(candidate):
            m = candidate
            break
    if m is None:
        raise ValueError("unsupported fan: expected multiqubit_fan(m), m <= 3")
    out = []
    for cone in fan.cones:
        if len(cone.generators) == 1:
            g = cone.generators[0]
            axis = next(i for i, x in enumerate(g) if x != 0)
            parts = ["CP1"] * m
            parts[axis] = "{0}" if g[axis] > 0 else "{inf}"
            out.append(Subvariety(cone, "ray", " x ".join(parts)))
    for cone in fan.cones:
        if len(cone.generators) == m:
            point = ["?"] * m
            for g in cone.generators:
                axis = next(i for i, x in enumerate(g) if x != 0)
                point[axis] = "0" if g[axis] > 0 else "inf"
            out.append(Subvariety(cone, "fixed_point", "(" + ", ".join(point) + ")"))
    return tuple(out)


@dataclass(frozen=True)
class ParameterizationMap:
    """The 2^m subset-product exponent vectors of {0,1}^m, lexicographic.

    Amplitude index (k_1,...,k_m) carries the monomial prod_j z_j^(k_j); the
    first exponent is the constant monomial, the last the full product.
    """

    m: int
    exponents: tuple[tuple[int, ...], ...]


def parameterization(m: int) -> ParameterizationMap:
    if not 1 <= m <= 10:
        raise ValueError("party count must be between 1 and 10")
    return ParameterizationMap(m, tuple(product((0, 1), repeat=m)))


def parameterization_image(pm: ParameterizationMap, z_point) -> PureState:
    """The amplitude tensor of the parameterization at a torus point."""
    z = tuple(z_point)
    if len(z) != pm.m:
        raise ValueError("expected one coordinate per party")
    amps = {}
    for idx in pm.exponents:
        value = 1
        for zj, e in zip(z, idx):
            if e:
                value = value * zj
        amps[idx] = value
    return PureState((2,) * pm.m, amps)


def verify_parameterization(m: int, z_point) -> bool:
    """True iff the image tensor satisfies every canonical minor exactly."""
    z = tuple(z_point)
    if any(not zj for zj in z):
        raise ValueError("all torus coordinates must be nonzero")
    state = parameterization_image(parameterization(m), z)
    shape = check_shape((2,) * m)
    for minor in segre_minors(shape):
        if minor_value(state, minor):
            return False
    return True
