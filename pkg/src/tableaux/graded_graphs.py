"""Graded graphs on Z^k and exact path counting.

A graph here is an induced subgraph of the ambient lattice: a membership
predicate selects the vertex set, and every edge raises exactly one
coordinate by one (multiplication by one variable, in monomial language).
The number of directed paths between two vertices is the generalized
binomial coefficient this package computes three independent ways:

* a brute-force level-by-level DP (the oracle; `count_paths_dp`),
* closed-form products (module `formulas`),
* coefficient extraction against a weight series (`weighted_path_count`).

A weight series for a base vertex v is a coefficient table phi on the
monomials of degree deg(v) such that

  1. phi has coefficient 1 at v,
  2. coefficient 0 at every other vertex of the same degree,
  3. for every non-vertex w (of degree between deg v and the bound) with some
     w + e_i a vertex, the coefficient of w in phi * (x_1+..+x_k)^(deg w - deg v)
     vanishes.

Under those conditions the path count from v to a vertex u is the coefficient
of u in phi * (x_1+..+x_k)^(deg u - deg v).  `construct_weight_series` builds
such a table whenever the vertex set is minimum-closed and coordinate-convex,
by solving the constraints degree by degree; each constraint is settled on a
pivot monomial no other constraint of the same or lower degree can reach.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .multipoly import Coeff, MultiPoly, exact_compositions, multinomial
from .reports import VerifyReport, failed, passed

Vertex = tuple[int, ...]


def degree(v: Vertex) -> int:
    return sum(v)


def vector_min(u: Vertex, w: Vertex) -> Vertex:
    return tuple(min(a, b) for a, b in zip(u, w))


def majorates(w: Vertex, u: Vertex) -> bool:
    """w majorates u when min(u, w) == u, i.e. u <= w entrywise."""
    return all(a <= b for a, b in zip(u, w))


class GradedGraph:
    """Base: a membership predicate plus the induced +e_i edges."""

    name = "graph"

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("need k >= 1")
        self.k = k

    def contains(self, v: Vertex) -> bool:
        raise NotImplementedError

    def base_vertex(self) -> Vertex:
        """Canonical minimal vertex used as the default source."""
        raise NotImplementedError

    def out_neighbors(self, v: Vertex) -> list[Vertex]:
        if not self.contains(v):
            raise ValueError(f"{v} is not a vertex")
        result = []
        for i in range(self.k):
            w = _bump(v, i)
            if self.contains(w):
                result.append(w)
        return result

    def in_neighbors(self, v: Vertex) -> list[Vertex]:
        if not self.contains(v):
            raise ValueError(f"{v} is not a vertex")
        result = []
        for i in range(self.k):
            if v[i] == 0 and self._non_negative:
                continue
            w = _bump(v, i, -1)
            if self.contains(w):
                result.append(w)
        return result

    # The three lattice families live in N^k; explicit boxes may not.
    _non_negative = True

    def vertices_of_degree(self, d: int) -> list[Vertex]:
        if d < 0:
            return []
        return [v for v in exact_compositions(self.k, d) if self.contains(v)]


def _bump(v: Vertex, i: int, step: int = 1) -> Vertex:
    return v[:i] + (v[i] + step,) + v[i + 1:]


class PascalGraph(GradedGraph):
    """All of N^k; paths are lattice words, counted by multinomials."""

    name = "pascal"

    def contains(self, v: Vertex) -> bool:
        return len(v) == self.k and all(isinstance(c, int) and c >= 0 for c in v)

    def base_vertex(self) -> Vertex:
        return (0,) * self.k


class RestrictedYoungGraph(GradedGraph):
    """Strictly increasing coordinates 0 <= c_1 < c_2 < ... < c_k.

    Vertices encode Young diagrams with at most k rows; paths from the
    minimal vertex (0, 1, .., k-1) are standard Young tableaux.
    """

    name = "young"

    def contains(self, v: Vertex) -> bool:
        if len(v) != self.k or v[0] < 0:
            return False
        return all(a < b for a, b in zip(v, v[1:]))

    def base_vertex(self) -> Vertex:
        return tuple(range(self.k))


class StrictPartitionGraph(GradedGraph):
    """Weakly increasing coordinates, equal entries allowed only at zero.

    Vertices encode partitions into distinct parts (at most k of them).
    """

    name = "strict"

    def contains(self, v: Vertex) -> bool:
        if len(v) != self.k or v[0] < 0:
            return False
        for a, b in zip(v, v[1:]):
            if a > b or (a == b and a != 0):
                return False
        return True

    def base_vertex(self) -> Vertex:
        return (0,) * self.k


class CustomBoxGraph(GradedGraph):
    """Explicit vertex table; used for negative tests of the hypotheses."""

    name = "custom"
    _non_negative = False

    def __init__(self, k: int, vertices: Iterable[Vertex]):
        super().__init__(k)
        self.vertices = frozenset(tuple(v) for v in vertices)
        for v in self.vertices:
            if len(v) != k:
                raise ValueError(f"vertex {v} has wrong dimension")

    def contains(self, v: Vertex) -> bool:
        return tuple(v) in self.vertices

    def base_vertex(self) -> Vertex:
        if not self.vertices:
            raise ValueError("empty graph")
        return min(self.vertices, key=lambda v: (degree(v), v))

    def vertices_of_degree(self, d: int) -> list[Vertex]:
        return sorted(v for v in self.vertices if degree(v) == d)


GRAPH_KINDS: dict[str, type[GradedGraph]] = {
    "pascal": PascalGraph,
    "young": RestrictedYoungGraph,
    "strict": StrictPartitionGraph,
}


def make_graph(kind: str, k: int) -> GradedGraph:
    try:
        return GRAPH_KINDS[kind](k)
    except KeyError:
        raise ValueError(f"unknown graph kind {kind!r}") from None


# -- the DP oracle -----------------------------------------------------------

def count_paths_dp(graph: GradedGraph, v: Vertex, u: Vertex) -> int:
    """Number of monotone paths from v to u, by explicit level-by-level DP.

    Edges only raise entries, so every intermediate vertex stays inside the
    entrywise box between v and u; the sweep enforces the upper face.
    """
    v, u = tuple(v), tuple(u)
    if not graph.contains(v):
        raise ValueError(f"source {v} is not a vertex")
    if not graph.contains(u):
        raise ValueError(f"target {u} is not a vertex")
    if degree(u) < degree(v) or not majorates(u, v):
        return 0
    counts: dict[Vertex, int] = {v: 1}
    for _ in range(degree(u) - degree(v)):
        nxt: dict[Vertex, int] = {}
        for w, c in counts.items():
            for w2 in graph.out_neighbors(w):
                if majorates(u, w2):
                    nxt[w2] = nxt.get(w2, 0) + c
        counts = nxt
    return counts.get(u, 0)


def path_count_table(graph: GradedGraph, v: Vertex,
                     max_degree: int) -> dict[Vertex, int]:
    """Path counts from v to every vertex of degree <= max_degree, in one sweep."""
    v = tuple(v)
    if not graph.contains(v):
        raise ValueError(f"source {v} is not a vertex")
    table: dict[Vertex, int] = {v: 1}
    frontier: dict[Vertex, int] = {v: 1}
    for _ in range(degree(v), max_degree):
        nxt: dict[Vertex, int] = {}
        for w, c in frontier.items():
            for w2 in graph.out_neighbors(w):
                nxt[w2] = nxt.get(w2, 0) + c
        table.update(nxt)
        frontier = nxt
    return table


# -- hypothesis checks --------------------------------------------------------

def check_minimum_closed(graph: GradedGraph, box_bound: int) -> VerifyReport:
    """Entrywise minimum of any two vertices inside [0, bound]^k is a vertex."""
    started = time.perf_counter()
    params = {"graph": graph.name, "k": graph.k, "box_bound": box_bound}
    box_vertices = [v for v in itertools.product(range(box_bound + 1), repeat=graph.k)
                    if graph.contains(v)]
    for u, w in itertools.combinations(box_vertices, 2):
        m = vector_min(u, w)
        if not graph.contains(m):
            return failed("minimum_closed", params,
                          {"pair": [u, w], "minimum": m}, started)
    return passed("minimum_closed", params, started)


def check_coordinate_convex(graph: GradedGraph, box_bound: int) -> VerifyReport:
    """Each coordinate line through the vertex set has no gaps in [0, bound]^k."""
    started = time.perf_counter()
    params = {"graph": graph.name, "k": graph.k, "box_bound": box_bound}
    box_vertices = [v for v in itertools.product(range(box_bound + 1), repeat=graph.k)
                    if graph.contains(v)]
    vertex_set = set(box_vertices)
    for v in box_vertices:
        for i in range(graph.k):
            for top in range(v[i] + 2, box_bound + 1):
                far = v[:i] + (top,) + v[i + 1:]
                if far not in vertex_set:
                    continue
                for mid in range(v[i] + 1, top):
                    between = v[:i] + (mid,) + v[i + 1:]
                    if not graph.contains(between):
                        return failed("coordinate_convex", params,
                                      {"endpoints": [v, far], "gap": between},
                                      started)
    return passed("coordinate_convex", params, started)


# -- constraint monomials and the weight series -------------------------------

def constraint_monomials(graph: GradedGraph, v: Vertex, bound: int) -> list[Vertex]:
    """Monomials that carry a linear constraint on a weight series for v:
    every vertex of degree deg(v), plus every non-vertex u with
    deg(v) <= deg(u) <= bound such that some u + e_i is a vertex.

    Sorted by degree then lexicographically.
    """
    v = tuple(v)
    if not graph.contains(v):
        raise ValueError(f"{v} is not a vertex")
    base = degree(v)
    if bound < base:
        raise ValueError("bound below the base degree")
    found: set[Vertex] = set(graph.vertices_of_degree(base))
    for d in range(base, bound + 1):
        for w in graph.vertices_of_degree(d + 1):
            for i in range(graph.k):
                u = _bump(w, i, -1)
                if degree(u) >= base and not graph.contains(u):
                    found.add(u)
    return sorted(found, key=lambda m: (degree(m), m))


def _pivot_monomial(graph: GradedGraph, v: Vertex, u: Vertex) -> Vertex:
    """The coefficient slot used to settle u's constraint: u itself at the
    base degree, otherwise u lowered along the smallest direction that exits
    into the vertex set."""
    drop = degree(u) - degree(v)
    if drop == 0:
        return u
    for i in range(graph.k):
        if graph.contains(_bump(u, i)):
            return _bump(u, i, -drop)
    raise ValueError(f"{u} is not a constraint monomial")


class SeriesConstructionError(ValueError):
    """Raised when the weight-series construction detects that the graph
    violates the minimum-closure / convexity hypotheses."""

    def __init__(self, message: str, monomial: Vertex | None = None):
        super().__init__(message)
        self.monomial = monomial


@dataclass
class WeightSeries:
    """Sparse coefficient table of a weight series for ``base``.

    All keys have total degree equal to deg(base); entries may be negative
    integers.  ``degree_bound`` is the largest constraint degree the table
    was solved for (and hence the largest target degree it certifies)."""

    base: Vertex
    coeffs: dict[Vertex, Coeff] = field(default_factory=dict)
    degree_bound: int = 0

    def coefficient(self, exps: Vertex) -> Coeff:
        return self.coeffs.get(tuple(exps), 0)

    def sorted_items(self) -> list[tuple[Vertex, Coeff]]:
        return sorted(self.coeffs.items())


def construct_weight_series(graph: GradedGraph, v: Vertex, bound: int) -> WeightSeries:
    """Solve the weight-series constraints for v up to the given degree bound.

    Runs the two hypothesis checks on the enclosing box first; any violation
    (including a pivot collision during the solve) raises
    ``SeriesConstructionError`` with the offending monomial.
    """
    v = tuple(v)
    if not graph.contains(v):
        raise ValueError(f"{v} is not a vertex")
    box = max([bound + 1, *(abs(c) for c in v), 1])
    for check in (check_minimum_closed, check_coordinate_convex):
        report = check(graph, box)
        if not report.ok:
            raise SeriesConstructionError(
                f"{report.identity} fails: {report.witness}",
                monomial=tuple(report.witness["pair" if "pair" in report.witness
                                              else "endpoints"][0]))

    coeffs: dict[Vertex, Coeff] = {}
    for u in constraint_monomials(graph, v, bound):
        target = 1 if u == v else 0
        pivot = _pivot_monomial(graph, v, u)
        if pivot in coeffs:
            raise SeriesConstructionError(
                f"pivot collision at {pivot} while settling {u}", monomial=u)
        acc: Coeff = 0
        for e, c in coeffs.items():
            if majorates(u, e):
                acc += c * multinomial(tuple(a - b for a, b in zip(u, e)))
        # the pivot's own weight in the constraint is exactly 1
        value = target - acc
        if value:
            coeffs[pivot] = value
    series = WeightSeries(base=v, coeffs=coeffs, degree_bound=bound)
    if series.coefficient(v) != 1:
        raise SeriesConstructionError("base coefficient is not 1", monomial=v)
    return series


CoefficientFn = Callable[[Vertex], Coeff]


def _coefficient_source(phi: object) -> tuple[Mapping[Vertex, Coeff] | None, CoefficientFn]:
    """Normalize the accepted phi forms to (finite table or None, lookup fn)."""
    if isinstance(phi, WeightSeries):
        return phi.coeffs, phi.coefficient
    if isinstance(phi, MultiPoly):
        return phi.terms, phi.coefficient
    if callable(phi):
        return None, phi  # closed-form coefficient extractor
    raise TypeError(f"unsupported weight-series form: {type(phi)!r}")


def _extract_coefficient(table: Mapping[Vertex, Coeff] | None, fn: CoefficientFn,
                         w: Vertex, steps: int, k: int) -> Coeff:
    """Coefficient of w in phi * (x_1+..+x_k)^steps, over the finite support."""
    total: Coeff = 0
    if table is not None:
        for e, c in table.items():
            if majorates(w, e) and degree(w) - degree(e) == steps:
                total += c * multinomial(tuple(a - b for a, b in zip(w, e)))
        return total
    for delta in exact_compositions(k, steps):
        e = tuple(a - b for a, b in zip(w, delta))
        c = fn(e)
        if c:
            total += c * multinomial(delta)
    return total


def verify_weight_conditions(graph: GradedGraph, v: Vertex, phi: object,
                             bound: int) -> VerifyReport:
    """Check the three weight-series conditions for v up to the degree bound.

    ``phi`` may be a WeightSeries, a MultiPoly, or a coefficient callable.
    Condition 3 uses the exponent deg(w) - deg(v).
    """
    started = time.perf_counter()
    v = tuple(v)
    params = {"graph": graph.name, "k": graph.k, "v": v, "bound": bound}
    if not graph.contains(v):
        raise ValueError(f"{v} is not a vertex")
    if bound < degree(v):
        raise ValueError("bound below the base degree")
    table, fn = _coefficient_source(phi)

    if fn(v) != 1:
        return failed("weight_conditions", params,
                      {"condition": "base coefficient", "monomial": v,
                       "value": fn(v)}, started)
    for other in graph.vertices_of_degree(degree(v)):
        if other != v and fn(other) != 0:
            return failed("weight_conditions", params,
                          {"condition": "same-degree vertex", "monomial": other,
                           "value": fn(other)}, started)
    for w in constraint_monomials(graph, v, bound):
        if graph.contains(w):
            continue
        steps = degree(w) - degree(v)
        value = _extract_coefficient(table, fn, w, steps, graph.k)
        if value != 0:
            return failed("weight_conditions", params,
                          {"condition": "boundary vanishing", "monomial": w,
                           "value": value}, started)
    return passed("weight_conditions", params, started)


def weighted_path_count(graph: GradedGraph, phi: object, v: Vertex,
                        u: Vertex) -> int:
    """Path count from v to u read off as the coefficient of u in
    phi * (x_1+..+x_k)^(deg u - deg v)."""
    v, u = tuple(v), tuple(u)
    if not graph.contains(v) or not graph.contains(u):
        raise ValueError("endpoints must be vertices")
    steps = degree(u) - degree(v)
    if steps < 0:
        return 0
    if isinstance(phi, WeightSeries):
        if phi.base != v:
            raise ValueError(f"series base {phi.base} does not match source {v}")
        if phi.degree_bound < degree(u):
            raise ValueError(
                f"series bound {phi.degree_bound} below target degree {degree(u)}")
    table, fn = _coefficient_source(phi)
    value = _extract_coefficient(table, fn, u, steps, graph.k)
    if value != int(value):
        raise ArithmeticError(f"non-integer path count {value} at {u}")
    return int(value)
