"""Integer truncations of the field graphs, with no modular reduction.

Restricting every coordinate to an explicit integer box makes the defining
equations hold over the plain integers, so the resulting bipartite graph
embeds into the field graph for any prime larger than every coordinate and
inherits its cycle structure.  The boxes follow fixed fractional-power
bounds evaluated exactly: closed ranges with floored upper ends (and ceiled
lower ends where a lower bound exists).

Edge generation walks the free coordinate and substitutes forward; a brute
force pass over all point/line pairs cross-checks the result whenever the
instance is small enough, which covers every desk-scale run.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .algebraic import (
    BudgetExceededError,
    CoordLabel,
    LUParams,
    WengerParams,
    lu_edge,
    lu_equation_plan,
    lu_labels,
    wenger_edge,
)
from .exactmath import ceil_pow, floor_pow, is_prime, next_prime, prime_in_window
from .graphs import BipartiteGraph

__all__ = [
    "LUTruncationSpec",
    "WengerTruncationSpec",
    "TruncatedArrangement",
    "lu_point_range",
    "lu_line_range",
    "wenger_point_range",
    "wenger_line_range",
    "lu_edge_free",
    "wenger_edge_free",
    "build_truncated",
    "max_coordinate",
    "embedding_prime",
    "verify_subgraph_embedding",
    "DEFAULT_BOX_BUDGET",
    "DEFAULT_CROSS_CHECK_LIMIT",
]

DEFAULT_BOX_BUDGET = 1_000_000
# Pair count below which build_truncated always re-derives the edge set by
# brute force; both n=64 reference instances fall under it.
DEFAULT_CROSS_CHECK_LIMIT = 400_000


@dataclass(frozen=True)
class LUTruncationSpec:
    """Size parameters of a layered truncation: odd k >= 3 and scale n >= 1."""

    k: int
    n: int

    def __post_init__(self):
        if self.k < 3 or self.k % 2 == 0:
            raise ValueError(f"layered truncation requires odd k >= 3, got {self.k}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")

    @property
    def family(self) -> str:
        return "lu"

    @property
    def exponent_step(self) -> Fraction:
        """The exponent unit 4 / (k^2 + 6k - 3); coordinate bounds are multiples of it."""
        return Fraction(4, self.k * self.k + 6 * self.k - 3)


@dataclass(frozen=True)
class WengerTruncationSpec:
    """Size parameters of a positional truncation: k in {2, 3, 5} and n >= 1."""

    k: int
    n: int

    def __post_init__(self):
        if self.k not in (2, 3, 5):
            raise ValueError(f"positional truncation requires k in {{2, 3, 5}}, got {self.k}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")

    @property
    def family(self) -> str:
        return "wenger"

    @property
    def exponent_step(self) -> Fraction:
        """The exponent unit 2 / (k(k+1))."""
        return Fraction(2, self.k * (self.k + 1))


def lu_point_range(label: CoordLabel, spec: LUTruncationSpec) -> tuple[int, int]:
    """Closed coordinate range [0, hi] of a point coordinate.

    The first coordinate is bounded by n**step; a pair or primed coordinate
    with indices (i, j) by n**((i+j) * step).
    """
    step = spec.exponent_step
    if label.kind == "first":
        return 0, floor_pow(spec.n, step, 1)
    return 0, floor_pow(spec.n, (label.i + label.j) * step, 1)


def lu_line_range(label: CoordLabel, spec: LUTruncationSpec) -> tuple[int, int]:
    """Closed coordinate range [0, hi] of a line-parameter coordinate.

    Scales are chosen so that forward substitution from any in-box point
    lands inside the box for every choice of the free first coordinate:
    2 for the first coordinate, 3 for pairs (i,i) and (i+1,i), 4 for pairs
    (i,i+1) and for primed coordinates.
    """
    step = spec.exponent_step
    if label.kind == "first":
        return 0, floor_pow(spec.n, step, 2)
    if label.kind == "primed":
        return 0, floor_pow(spec.n, 2 * label.i * step, 4)
    a, b = label.i, label.j
    scale = 4 if b == a + 1 else 3
    return 0, floor_pow(spec.n, (a + b) * step, scale)


def wenger_point_range(i: int, spec: WengerTruncationSpec) -> tuple[int, int]:
    """Closed range [0, hi] of point coordinate i (0-based).

    hi = 2**(2(k-i-1)) * n**((k-i) * step), which degenerates to n**step for
    the last coordinate.
    """
    k = spec.k
    if not 0 <= i <= k - 1:
        raise ValueError(f"coordinate index {i} out of range 0..{k - 1}")
    return 0, floor_pow(spec.n, (k - i) * spec.exponent_step, 2 ** (2 * (k - i - 1)))


def wenger_line_range(i: int, spec: WengerTruncationSpec) -> tuple[int, int]:
    """Closed range [lo, hi] of line-parameter coordinate i (0-based).

    The lower end is the exact ceiling of half the upper bound (of n**step
    for the last coordinate); the upper end matches the point box except for
    the last coordinate, where it doubles.
    """
    k = spec.k
    if not 0 <= i <= k - 1:
        raise ValueError(f"coordinate index {i} out of range 0..{k - 1}")
    step = spec.exponent_step
    if i == k - 1:
        return ceil_pow(spec.n, step, 1), floor_pow(spec.n, step, 2)
    exponent = (k - i) * step
    return (
        ceil_pow(spec.n, exponent, 2 ** (2 * (k - i - 1) - 1)),
        floor_pow(spec.n, exponent, 2 ** (2 * (k - i - 1))),
    )


def lu_edge_free(u, v, k: int) -> bool:
    """The layered equations over the plain integers (no modulus)."""
    for t, (uses_v1, src) in enumerate(lu_equation_plan(k), start=1):
        rhs = v[0] * u[src] if uses_v1 else u[0] * v[src]
        if v[t] - u[t] != rhs:
            return False
    return True


def wenger_edge_free(u, v, k: int) -> bool:
    """The relations v_j = u_j + u_{j+1} * v_{k-1} over the plain integers."""
    last = v[k - 1]
    return all(v[j] == u[j] + u[j + 1] * last for j in range(k - 1))


@dataclass(frozen=True)
class TruncatedArrangement:
    """Integer points, integer line parameters, and their incidence pairs.

    points and line_params are full coordinate boxes in lexicographic order;
    edges is the sorted tuple of (point index, line index) pairs satisfying
    the no-modulus equations.
    """

    family: str
    k: int
    n: int
    points: tuple[tuple[int, ...], ...]
    line_params: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    _edge_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_edge_set", frozenset(self.edges))

    @property
    def spec(self):
        if self.family == "lu":
            return LUTruncationSpec(self.k, self.n)
        return WengerTruncationSpec(self.k, self.n)

    @property
    def edge_set(self) -> frozenset:
        return self._edge_set

    def to_bipartite_graph(self) -> BipartiteGraph:
        """The incidence graph: points on the left, line parameters on the right."""
        return BipartiteGraph(len(self.points), len(self.line_params), self.edges)


def _point_ranges(spec) -> list[tuple[int, int]]:
    if isinstance(spec, LUTruncationSpec):
        return [lu_point_range(label, spec) for label in lu_labels(spec.k)]
    return [wenger_point_range(i, spec) for i in range(spec.k)]


def _line_ranges(spec) -> list[tuple[int, int]]:
    if isinstance(spec, LUTruncationSpec):
        return [lu_line_range(label, spec) for label in lu_labels(spec.k)]
    return [wenger_line_range(i, spec) for i in range(spec.k)]


def _box_size(ranges) -> int:
    size = 1
    for lo, hi in ranges:
        size *= max(0, hi - lo + 1)
    return size


def _lu_edges(spec, points, line_ranges, line_index) -> list[tuple[int, int]]:
    plan = lu_equation_plan(spec.k)
    v1_lo, v1_hi = line_ranges[0]
    edges = []
    for pi, u in enumerate(points):
        for v1 in range(v1_lo, v1_hi + 1):
            v = [v1] + [0] * (spec.k - 1)
            ok = True
            for t, (uses_v1, src) in enumerate(plan, start=1):
                rhs = v[0] * u[src] if uses_v1 else u[0] * v[src]
                v[t] = u[t] + rhs
                lo, hi = line_ranges[t]
                if not lo <= v[t] <= hi:
                    ok = False
                    break
            if ok:
                edges.append((pi, line_index[tuple(v)]))
    return edges


def _wenger_edges(spec, line_params, point_ranges, point_index) -> list[tuple[int, int]]:
    k = spec.k
    last_hi = point_ranges[k - 1][1]
    edges = []
    for lj, v in enumerate(line_params):
        vk = v[k - 1]
        for last in range(last_hi + 1):
            u = [0] * k
            u[k - 1] = last
            ok = True
            for i in range(k - 2, -1, -1):
                u[i] = v[i] - vk * u[i + 1]
                lo, hi = point_ranges[i]
                if not lo <= u[i] <= hi:
                    ok = False
                    break
            if ok:
                edges.append((point_index[tuple(u)], lj))
    return edges


def build_truncated(
    spec,
    box_budget: int = DEFAULT_BOX_BUDGET,
    cross_check_limit: int = DEFAULT_CROSS_CHECK_LIMIT,
) -> TruncatedArrangement:
    """Materialize the boxes and the no-modulus edge set for a truncation spec.

    Edges come from walking the free coordinate (the line's first coordinate
    for the layered family, the point's last coordinate for the positional
    family) and substituting the remaining coordinates over the integers,
    keeping a candidate only when it lands inside the partner box.  When
    |points| * |lines| <= cross_check_limit the edge set is re-derived by
    evaluating the defining equations on every pair and the two must agree.

    Raises BudgetExceededError when either box exceeds box_budget, and
    ValueError when a line box is empty (impossible for n >= 1, kept as a
    guard).
    """
    point_ranges = _point_ranges(spec)
    line_ranges = _line_ranges(spec)
    n_points = _box_size(point_ranges)
    n_lines = _box_size(line_ranges)
    if n_points > box_budget or n_lines > box_budget:
        raise BudgetExceededError(
            f"box sizes {n_points} x {n_lines} exceed the budget of {box_budget}"
        )
    if n_lines == 0 or n_points == 0:
        warnings.warn(
            f"degenerate truncation at n={spec.n}: an empty coordinate box",
            stacklevel=2,
        )
        raise ValueError(f"empty coordinate box for spec {spec}")

    points = tuple(product(*(range(lo, hi + 1) for lo, hi in point_ranges)))
    line_params = tuple(product(*(range(lo, hi + 1) for lo, hi in line_ranges)))

    if isinstance(spec, LUTruncationSpec):
        line_index = {v: j for j, v in enumerate(line_params)}
        edges = _lu_edges(spec, points, line_ranges, line_index)
        predicate = lu_edge_free
    else:
        point_index = {u: i for i, u in enumerate(points)}
        edges = _wenger_edges(spec, line_params, point_ranges, point_index)
        predicate = wenger_edge_free

    edges = tuple(sorted(edges))
    if n_points * n_lines <= cross_check_limit:
        brute = tuple(
            sorted(
                (pi, lj)
                for pi, u in enumerate(points)
                for lj, v in enumerate(line_params)
                if predicate(u, v, spec.k)
            )
        )
        if brute != edges:
            raise AssertionError(
                "substitution edge set disagrees with the brute-force predicate"
            )
    return TruncatedArrangement(spec.family, spec.k, spec.n, points, line_params, edges)


def max_coordinate(spec) -> int:
    """Largest coordinate value occurring anywhere in the two boxes."""
    return max(hi for _, hi in _point_ranges(spec) + _line_ranges(spec))


def embedding_prime(spec, mode: str = "minimal") -> int:
    """A prime modulus under which the truncation is a legal residue structure.

    'minimal' returns the smallest prime exceeding every coordinate, which
    is all the subgraph property needs at desk scale.  'paper_window'
    searches the much larger window (4 n**(8/k), 8 n**(8/k)) for the layered
    family and (2**(2k) n**(2/k), 2**(2k+1) n**(2/k)) for the positional
    one, with both ends evaluated exactly.
    """
    if mode == "minimal":
        return next_prime(max(1, max_coordinate(spec)))
    if mode == "paper_window":
        if isinstance(spec, LUTruncationSpec):
            exponent = Fraction(8, spec.k)
            lo = floor_pow(spec.n, exponent, 4)
            hi = ceil_pow(spec.n, exponent, 8)
        else:
            exponent = Fraction(2, spec.k)
            lo = floor_pow(spec.n, exponent, 2 ** (2 * spec.k))
            hi = ceil_pow(spec.n, exponent, 2 ** (2 * spec.k + 1))
        p = prime_in_window(lo, hi)
        if p is None:
            raise ValueError(f"no prime in the window ({lo}, {hi})")
        return p
    raise ValueError(f"unknown mode {mode!r}; use 'minimal' or 'paper_window'")


def verify_subgraph_embedding(arr: TruncatedArrangement, q: int) -> bool:
    """Whether reducing mod prime q embeds the truncation into the field graph.

    True iff every coordinate lies in [0, q) and every stored edge satisfies
    the parent graph's modular equations.  Integer equality already implies
    every congruence, so a failure can only come from an out-of-range
    coordinate; the edge predicates are still re-run rather than trusted.
    """
    if not is_prime(q):
        raise ValueError(f"modulus must be prime, got {q}")
    for tup in arr.points + arr.line_params:
        for c in tup:
            if not 0 <= c < q:
                return False
    if arr.family == "lu":
        params = LUParams(arr.k, q)
        edge_ok = lambda u, v: lu_edge(u, v, params)
    else:
        params = WengerParams(arr.k, q)
        edge_ok = lambda u, v: wenger_edge(u, v, params)
    return all(edge_ok(arr.points[pi], arr.line_params[lj]) for pi, lj in arr.edges)
