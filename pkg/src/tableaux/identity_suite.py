"""Mechanical verification of the polynomial identities behind the counts.

Every check returns a VerifyReport and compares exact polynomials (or exact
rational limits), never floats.  The ``perturb`` flag on each check injects a
stray monomial into one side first; the perturbed run must come back failed,
which is how the negative controls prove the comparisons have teeth.

Cross-validation helpers pit every closed-form count against the DP oracle,
and the weight-series construction against both, over seeded samples.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from math import factorial
from typing import Sequence

from .formulas import (multinomial_paths, strict_partition_to_vertex,
                       strict_skew_count, strict_vertex_to_partition,
                       syt_count, syt_count_hook, young_path_count,
                       young_vertex_to_partition)
from .graded_graphs import (GradedGraph, SeriesConstructionError,
                            construct_weight_series, count_paths_dp, degree,
                            make_graph, path_count_table,
                            verify_weight_conditions, weighted_path_count)
from .laurent import (LimitInfiniteError, alternating_ratio,
                      check_antipolynomial_vanishes,
                      check_trailing_negative_coeffs, default_truncation,
                      evaluate_with_limits, polynomial_component,
                      strict_path_series, strict_skew_path_series,
                      verify_pfaffian_product)
from .multipoly import (MultiPoly, exact_compositions, falling_alternant,
                        falling_alternant_at, ff_of_poly, ff_poly, grlex_key,
                        multinomial, power_alternant)
from .reports import VerifyReport, failed, passed

# anchor vertices exercised by the default sweep, per dimension
SWEEP_ANCHORS: dict[int, list[tuple[int, ...]]] = {
    1: [(0,), (1,), (2,)],
    2: [(0, 1), (0, 2), (1, 3)],
    3: [(0, 1, 2), (0, 1, 3), (0, 2, 4)],
}


def _variable_sum(k: int) -> MultiPoly:
    total = MultiPoly.zero(k)
    for i in range(k):
        total = total + MultiPoly.var(k, i)
    return total


def _ascending_difference_product(k: int) -> MultiPoly:
    """prod over i<j of (x_j - x_i)."""
    result = MultiPoly.one(k)
    for i in range(k):
        for j in range(i + 1, k):
            result = result * (MultiPoly.var(k, j) - MultiPoly.var(k, i))
    return result


def _compare(identity: str, params: dict, started: float,
             sides: list[tuple[str, MultiPoly, MultiPoly]]) -> VerifyReport:
    """Pass iff every (form, lhs, rhs) is an exact polynomial equality."""
    for form, lhs, rhs in sides:
        if lhs == rhs:
            continue
        diff = lhs - rhs
        top = max(diff.terms, key=grlex_key)
        return failed(identity, params,
                      {"form": form, "monomial": top, "difference": diff.terms[top]},
                      started)
    return passed(identity, params, started)


def _perturbed(poly: MultiPoly, flag: bool) -> MultiPoly:
    return poly + MultiPoly.var(poly.k, 0) if flag else poly


# -- full lattice identities ---------------------------------------------------

def check_vandermonde(k: int, n: int, perturb: bool = False) -> VerifyReport:
    """ff(x_1+..+x_k, n) expanded over compositions, and the same identity
    for binomial polynomials."""
    started = time.perf_counter()
    params = {"k": k, "n": n, "perturbed": perturb}
    lhs_ff = _perturbed(ff_of_poly(_variable_sum(k), n), perturb)
    rhs_ff = MultiPoly.zero(k)
    rhs_bin = MultiPoly.zero(k)
    for comp in exact_compositions(k, n):
        term = MultiPoly.const(k, multinomial(comp))
        term_bin = MultiPoly.one(k)
        for i, c in enumerate(comp):
            if c:
                fell = ff_poly(k, i, c)
                term = term * fell
                term_bin = term_bin * (fell * Fraction(1, factorial(c)))
        rhs_ff = rhs_ff + term
        rhs_bin = rhs_bin + term_bin
    lhs_bin = lhs_ff * Fraction(1, factorial(n))
    return _compare("vandermonde_convolution", params, started,
                    [("falling_factorial", lhs_ff, rhs_ff),
                     ("binomial", lhs_bin, rhs_bin)])


def check_multinomial(k: int, n: int, perturb: bool = False) -> VerifyReport:
    """(x_1+..+x_k)^n as the sum of multinomial monomials."""
    started = time.perf_counter()
    params = {"k": k, "n": n, "perturbed": perturb}
    lhs = _perturbed(_variable_sum(k) ** n, perturb)
    rhs = MultiPoly.zero(k)
    for comp in exact_compositions(k, n):
        rhs = rhs + MultiPoly.monomial(k, comp, multinomial(comp))
    return _compare("multinomial_expansion", params, started,
                    [("power", lhs, rhs)])


# -- strictly increasing coordinates -------------------------------------------

def check_hook_identity(k: int, steps: int, perturb: bool = False) -> VerifyReport:
    """prod(x_j - x_i) * ff(sum(x) - k(k-1)/2, steps) equals the sum over
    compositions c of steps + k(k-1)/2 of
    steps!/prod(c_i!) * prod(c_j - c_i) * prod ff(x_i, c_i),
    plus the top-homogeneous (power) form of the same identity."""
    started = time.perf_counter()
    params = {"k": k, "steps": steps, "perturbed": perturb}
    base = k * (k - 1) // 2
    diffs = _ascending_difference_product(k)
    lhs_ff = _perturbed(diffs * ff_of_poly(_variable_sum(k) - base, steps), perturb)
    lhs_pw = _perturbed(diffs * _variable_sum(k) ** steps, perturb)
    rhs_ff = MultiPoly.zero(k)
    rhs_pw = MultiPoly.zero(k)
    for comp in exact_compositions(k, steps + base):
        spread = 1
        for i in range(k):
            for j in range(i + 1, k):
                spread *= comp[j] - comp[i]
        if not spread:
            continue
        weight = Fraction(factorial(steps) * spread)
        for c in comp:
            weight /= factorial(c)
        term = MultiPoly.const(k, weight)
        for i, c in enumerate(comp):
            if c:
                term = term * ff_poly(k, i, c)
        rhs_ff = rhs_ff + term
        rhs_pw = rhs_pw + MultiPoly.monomial(k, comp, weight)
    return _compare("hook_expansion", params, started,
                    [("falling_factorial", lhs_ff, rhs_ff),
                     ("power", lhs_pw, rhs_pw)])


def check_skew_identity(k: int, anchor: Sequence[int], steps: int,
                        perturb: bool = False) -> VerifyReport:
    """The anchored form: det(ff(x_i, a_j)) * ff(sum(x) - |a|, steps) equals
    the composition sum weighted by det(ff(c_i, a_j)), and likewise with the
    power alternant det(x_i^{a_j}) on the left.  At the staircase anchor
    (0..k-1) the alternant collapses to prod(x_j - x_i), recovering the
    un-anchored identity."""
    started = time.perf_counter()
    anchor = tuple(anchor)
    params = {"k": k, "anchor": anchor, "steps": steps, "perturbed": perturb}
    weight_sum = sum(anchor)
    falling = falling_alternant(anchor)
    lhs_ff = _perturbed(falling * ff_of_poly(_variable_sum(k) - weight_sum, steps),
                        perturb)
    lhs_pw = _perturbed(power_alternant(anchor) * _variable_sum(k) ** steps,
                        perturb)
    rhs_ff = MultiPoly.zero(k)
    rhs_pw = MultiPoly.zero(k)
    for comp in exact_compositions(k, steps + weight_sum):
        spread = falling_alternant_at(anchor, comp)
        if not spread:
            continue
        weight = Fraction(factorial(steps)) * spread
        for c in comp:
            weight /= factorial(c)
        term = MultiPoly.const(k, weight)
        for i, c in enumerate(comp):
            if c:
                term = term * ff_poly(k, i, c)
        rhs_ff = rhs_ff + term
        rhs_pw = rhs_pw + MultiPoly.monomial(k, comp, weight)
    sides = [("falling_factorial", lhs_ff, rhs_ff), ("power", lhs_pw, rhs_pw)]
    if anchor == tuple(range(k)):
        sides.append(("staircase_collapse", falling,
                      _ascending_difference_product(k)))
    return _compare("anchored_hook_expansion", params, started, sides)


# -- distinct parts ------------------------------------------------------------

def check_polycomponent(k: int, n: int, perturb: bool = False) -> VerifyReport:
    """The polynomial component of prod(ratios) * ff(sum(x), n):

    * equals the top-layer closed form with limit-evaluated ratio values,
    * differs from the full function by a part vanishing at every lattice
      point of the simplex sum <= n,
    * has zero coefficients at every trailing-negative exponent pattern.
    """
    started = time.perf_counter()
    fn = strict_path_series(k, n)
    params = {"k": k, "n": n, "perturbed": perturb,
              "truncation": default_truncation(fn, n)}
    part = _perturbed(polynomial_component(fn, n), perturb)

    ratio = alternating_ratio(k)
    closed = MultiPoly.zero(k)
    for comp in exact_compositions(k, n):
        try:
            value = evaluate_with_limits(ratio, comp)
        except LimitInfiniteError:
            return failed("polynomial_component", params,
                          {"part": "closed_form", "point": comp,
                           "reason": "infinite limit"}, started)
        if not value:
            continue
        weight = Fraction(factorial(n)) * value
        for c in comp:
            weight /= factorial(c)
        term = MultiPoly.const(k, weight)
        for i, c in enumerate(comp):
            if c:
                term = term * ff_poly(k, i, c)
        closed = closed + term
    if part != closed:
        diff = part - closed
        top = max(diff.terms, key=grlex_key)
        return failed("polynomial_component", params,
                      {"part": "closed_form", "monomial": top,
                       "difference": diff.terms[top]}, started)

    anti = check_antipolynomial_vanishes(fn, part, n)
    if not anti.ok:
        return failed("polynomial_component", params,
                      {"part": "antipolynomial", **(anti.witness or {})}, started)
    probes = check_trailing_negative_coeffs(fn, n, n + 2)
    if not probes.ok:
        return failed("polynomial_component", params,
                      {"part": "trailing_negative", **(probes.witness or {})},
                      started)
    return passed("polynomial_component", params, started)


def check_skew_polycomponent(sigma: Sequence[int], k: int, n: int,
                             perturb: bool = False) -> VerifyReport:
    """Same three checks for the skew series anchored at a distinct-parts
    partition sigma: prod(ratios) * psi_sigma * ff(sum(x) - |sigma|, n - |sigma|).
    The closed form weights are limit values of the anchored weight function."""
    from .formulas import skew_weight_fn

    started = time.perf_counter()
    sigma = tuple(sigma)
    m = sum(sigma)
    if n < m:
        raise ValueError(f"need n >= {m}")
    v = strict_partition_to_vertex(sigma, k)
    fn = strict_skew_path_series(v, n)
    params = {"sigma": sigma, "k": k, "n": n, "perturbed": perturb,
              "truncation": default_truncation(fn, n)}
    part = _perturbed(polynomial_component(fn, n), perturb)

    anchored = skew_weight_fn(sigma, k)
    closed = MultiPoly.zero(k)
    for comp in exact_compositions(k, n):
        try:
            value = evaluate_with_limits(anchored, comp)
        except LimitInfiniteError:
            return failed("skew_polynomial_component", params,
                          {"part": "closed_form", "point": comp,
                           "reason": "infinite limit"}, started)
        if not value:
            continue
        weight = Fraction(factorial(n - m)) * value
        for c in comp:
            weight /= factorial(c)
        term = MultiPoly.const(k, weight)
        for i, c in enumerate(comp):
            if c:
                term = term * ff_poly(k, i, c)
        closed = closed + term
    if part != closed:
        diff = part - closed
        top = max(diff.terms, key=grlex_key)
        return failed("skew_polynomial_component", params,
                      {"part": "closed_form", "monomial": top,
                       "difference": diff.terms[top]}, started)

    anti = check_antipolynomial_vanishes(fn, part, n)
    if not anti.ok:
        return failed("skew_polynomial_component", params,
                      {"part": "antipolynomial", **(anti.witness or {})}, started)
    probes = check_trailing_negative_coeffs(fn, n, n + 2)
    if not probes.ok:
        return failed("skew_polynomial_component", params,
                      {"part": "trailing_negative", **(probes.witness or {})},
                      started)
    return passed("skew_polynomial_component", params, started)


# -- cross validation against the DP oracle -------------------------------------

def _formula_routes(graph: GradedGraph, v: tuple[int, ...],
                    u: tuple[int, ...]) -> dict[str, int]:
    if graph.name == "pascal":
        return {"multinomial": multinomial_paths(v, u)}
    if graph.name == "young":
        routes = {"determinant": young_path_count(v, u)}
        if v == graph.base_vertex():
            routes["ratio_product"] = syt_count(u)
            routes["hooks"] = syt_count_hook(young_vertex_to_partition(u))
        return routes
    if graph.name == "strict":
        return {"anchored_limit": strict_skew_count(
            strict_vertex_to_partition(v), strict_vertex_to_partition(u),
            graph.k)}
    raise ValueError(f"no closed form for graph {graph.name!r}")


def check_counts_from_base(kind: str, k: int, steps: int) -> VerifyReport:
    """Every closed-form route against the DP table, from the base vertex to
    every vertex within ``steps`` levels."""
    started = time.perf_counter()
    graph = make_graph(kind, k)
    base = graph.base_vertex()
    table = path_count_table(graph, base, degree(base) + steps)
    params = {"graph": kind, "k": k, "steps": steps, "targets": len(table)}
    for u in sorted(table, key=lambda w: (degree(w), w)):
        values = {"dp": table[u]}
        values.update(_formula_routes(graph, base, u))
        if len(set(values.values())) != 1:
            return failed("counts_from_base", params,
                          {"vertex": u, **values}, started)
    return passed("counts_from_base", params, started)


def check_skew_pairs(kind: str, k: int, steps: int, pairs: int,
                     seed: int) -> VerifyReport:
    """Seeded random source/target pairs: skew closed form against the DP."""
    started = time.perf_counter()
    rng = random.Random(seed)
    graph = make_graph(kind, k)
    base_deg = degree(graph.base_vertex())
    params = {"graph": kind, "k": k, "steps": steps, "pairs": pairs}
    levels = {d: graph.vertices_of_degree(base_deg + d) for d in range(steps + 1)}
    for _ in range(pairs):
        d1 = rng.randint(0, steps)
        d2 = rng.randint(d1, steps)
        v = rng.choice(levels[d1])
        u = rng.choice(levels[d2])
        dp = count_paths_dp(graph, v, u)
        for route, value in _formula_routes(graph, v, u).items():
            if value != dp:
                return failed("skew_pairs", params,
                              {"source": v, "target": u, "dp": dp, route: value},
                              started, seed=seed)
    return passed("skew_pairs", params, started, seed=seed)


def check_series_construction(kind: str, k: int, steps: int) -> VerifyReport:
    """Construct a weight series at the base vertex, verify the defining
    conditions, and match its counts against the DP on every target."""
    started = time.perf_counter()
    graph = make_graph(kind, k)
    v = graph.base_vertex()
    bound = degree(v) + steps
    params = {"graph": kind, "k": k, "bound": bound}
    try:
        phi = construct_weight_series(graph, v, bound)
    except SeriesConstructionError as exc:
        return failed("series_construction", params,
                      {"reason": str(exc), "monomial": exc.monomial}, started)
    params["support"] = len(phi.coeffs)
    conditions = verify_weight_conditions(graph, v, phi, bound)
    if not conditions.ok:
        return failed("series_construction", params,
                      {"part": "conditions", **(conditions.witness or {})}, started)
    table = path_count_table(graph, v, bound)
    for u in sorted(table, key=lambda w: (degree(w), w)):
        counted = weighted_path_count(graph, phi, v, u)
        if counted != table[u]:
            return failed("series_construction", params,
                          {"vertex": u, "dp": table[u], "series": counted},
                          started)
    return passed("series_construction", params, started)


# -- sweeps ---------------------------------------------------------------------

DEFAULT_SKEW_ANCHORS: list[tuple[int, ...]] = [(), (1,), (2,), (2, 1)]


def default_sweep() -> list[VerifyReport]:
    """The whole battery at its documented default sizes."""
    reports: list[VerifyReport] = []
    for k in (1, 2, 3):
        for n in range(6):
            reports.append(check_vandermonde(k, n))
            reports.append(check_multinomial(k, n))
            reports.append(check_hook_identity(k, n))
        for anchor in SWEEP_ANCHORS[k]:
            for steps in range(4):
                reports.append(check_skew_identity(k, anchor, steps))
    for k in (2, 3):
        for n in range(5):
            reports.append(check_polycomponent(k, n))
    for sigma in DEFAULT_SKEW_ANCHORS:
        for k in (2, 3):
            if k < len(sigma):
                continue
            m = sum(sigma)
            for n in range(m, m + 4):
                reports.append(check_skew_polycomponent(sigma, k, n))
    for k in (2, 4, 6):
        reports.append(verify_pfaffian_product(k))
    for kind in ("pascal", "young", "strict"):
        reports.append(check_counts_from_base(kind, 3, 6))
        reports.append(check_series_construction(kind, 3, 6))
    return reports


def negative_controls() -> list[VerifyReport]:
    """Perturbed reruns that must fail; each is wrapped so the control itself
    passes exactly when the tampering was caught."""
    probes = [
        check_vandermonde(2, 3, perturb=True),
        check_multinomial(2, 3, perturb=True),
        check_hook_identity(2, 2, perturb=True),
        check_skew_identity(2, (1, 3), 2, perturb=True),
        check_polycomponent(2, 2, perturb=True),
        check_skew_polycomponent((1,), 2, 3, perturb=True),
    ]
    controls = []
    for rep in probes:
        caught = not rep.ok
        controls.append(VerifyReport(
            identity=rep.identity + "_control",
            params=rep.params,
            status="pass" if caught else "fail",
            witness=None if caught else {"reason": "perturbation went unnoticed"},
            millis=rep.millis))
    return controls
