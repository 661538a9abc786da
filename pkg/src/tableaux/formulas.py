"""Closed-form path counts and the partition codecs behind them.

Vertices of the lattice graphs are ascending coordinate tuples; partitions
are written with rows in decreasing order.  The codecs here translate
between the two pictures:

* a strictly increasing tuple (c_1 < ... < c_k) encodes the Young diagram
  with rows c_k - (k-1) >= c_{k-1} - (k-2) >= ...,
* a weakly increasing tuple with repeats only at zero encodes a partition
  into distinct parts (the positive entries, read backwards).

Counts come from product and determinant formulas: multinomials for the
full lattice, the ratio product / hook lengths / falling-factorial
determinant family for the Young case, and a symmetrized weight polynomial
combined with exact limit evaluation for the distinct-parts case.
"""

from __future__ import annotations

import itertools
import time
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .laurent import RationalFn, difference_product, evaluate_with_limits
from .multipoly import (MultiPoly, _perm_sign, divide_exact_linear,
                        falling_alternant_at, ff_poly, multinomial)
from .reports import VerifyReport, failed, passed

Vertex = tuple[int, ...]
Rows = tuple[int, ...]

SYMMETRIZATION_CAP = 7


# -- validation ---------------------------------------------------------------

def _checked_young_vertex(v: Sequence[int]) -> Vertex:
    v = tuple(int(c) for c in v)
    if not v or v[0] < 0 or any(a >= b for a, b in zip(v, v[1:])):
        raise ValueError(f"{v} is not a strictly increasing non-negative tuple")
    return v


def _checked_strict_vertex(v: Sequence[int]) -> Vertex:
    v = tuple(int(c) for c in v)
    ok = bool(v) and v[0] >= 0 and all(
        a < b or (a == b == 0) for a, b in zip(v, v[1:]))
    if not ok:
        raise ValueError(f"{v} must increase weakly, with repeats only at zero")
    return v


def _checked_partition(rows: Sequence[int]) -> Rows:
    rows = tuple(int(r) for r in rows)
    if any(a < b for a, b in zip(rows, rows[1:])) or any(r < 0 for r in rows):
        raise ValueError(f"{rows} is not a partition (weakly decreasing, non-negative)")
    while rows and rows[-1] == 0:
        rows = rows[:-1]
    return rows


def _checked_strict_partition(rows: Sequence[int]) -> Rows:
    rows = _checked_partition(rows)
    if any(a == b for a, b in zip(rows, rows[1:])):
        raise ValueError(f"{rows} has repeated parts")
    return rows


# -- codecs -------------------------------------------------------------------

def young_vertex_to_partition(v: Sequence[int]) -> Rows:
    v = _checked_young_vertex(v)
    k = len(v)
    rows = tuple(v[k - 1 - j] - (k - 1 - j) for j in range(k))
    while rows and rows[-1] == 0:
        rows = rows[:-1]
    return rows


def partition_to_young_vertex(rows: Sequence[int], k: int) -> Vertex:
    rows = _checked_partition(rows)
    if k < len(rows):
        raise ValueError(f"need k >= {len(rows)} coordinates for {rows}")
    padded = list(rows) + [0] * (k - len(rows))
    return tuple(padded[k - 1 - i] + i for i in range(k))


def strict_vertex_to_partition(v: Sequence[int]) -> Rows:
    v = _checked_strict_vertex(v)
    return tuple(c for c in reversed(v) if c > 0)


def strict_partition_to_vertex(rows: Sequence[int], k: int) -> Vertex:
    rows = _checked_strict_partition(rows)
    if k < len(rows):
        raise ValueError(f"need k >= {len(rows)} coordinates for {rows}")
    return (0,) * (k - len(rows)) + tuple(reversed(rows))


def parse_partition(text: str) -> Rows:
    """Rows from comma-separated text; '-' or '' is the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        rows = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None
    return _checked_partition(rows)


def format_partition(rows: Sequence[int]) -> str:
    rows = tuple(rows)
    return ",".join(str(r) for r in rows) if rows else "-"


# -- full lattice -------------------------------------------------------------

def multinomial_paths(v_from: Sequence[int], v_to: Sequence[int]) -> int:
    """Paths in the full lattice: the multinomial of the coordinate gaps."""
    v_from, v_to = tuple(v_from), tuple(v_to)
    if len(v_from) != len(v_to):
        raise ValueError("dimension mismatch")
    if any(c < 0 for c in v_from) or any(c < 0 for c in v_to):
        raise ValueError("lattice vertices have non-negative coordinates")
    diffs = [b - a for a, b in zip(v_from, v_to)]
    if any(d < 0 for d in diffs):
        return 0
    return multinomial(diffs)


# -- strictly increasing coordinates ------------------------------------------

def syt_count(v: Sequence[int]) -> int:
    """Paths from (0, 1, .., k-1) to v: the ratio-product formula
    steps! / prod(v_i!) * prod_{i<j} (v_j - v_i)."""
    v = _checked_young_vertex(v)
    k = len(v)
    steps = sum(v) - k * (k - 1) // 2
    value = Fraction(factorial(steps))
    for c in v:
        value /= factorial(c)
    for i in range(k):
        for j in range(i + 1, k):
            value *= v[j] - v[i]
    if value.denominator != 1:
        raise ArithmeticError(f"non-integer count {value} at {v}")
    return int(value)


def young_path_count(v_from: Sequence[int], v_to: Sequence[int]) -> int:
    """Paths between two strictly increasing tuples: the determinant formula
    steps! / prod(u_i!) * det(ff(u_i, v_j))."""
    v = _checked_young_vertex(v_from)
    u = _checked_young_vertex(v_to)
    if len(v) != len(u):
        raise ValueError("dimension mismatch")
    if not all(a <= b for a, b in zip(v, u)):
        return 0
    value = Fraction(factorial(sum(u) - sum(v)))
    for c in u:
        value /= factorial(c)
    value *= Fraction(falling_alternant_at(v, u))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integer count {value} for {v} -> {u}")
    return int(value)


def hook_lengths(rows: Sequence[int]) -> list[list[int]]:
    """Hook length of each cell: arm + leg + 1."""
    rows = _checked_partition(rows)
    grid: list[list[int]] = []
    for r, width in enumerate(rows):
        line = []
        for c in range(width):
            arm = width - c - 1
            leg = sum(1 for r2 in range(r + 1, len(rows)) if rows[r2] > c)
            line.append(arm + leg + 1)
        grid.append(line)
    return grid


def hook_product(rows: Sequence[int]) -> int:
    """Product of all hook lengths, cross-checked against the coordinate
    encoding: it must equal prod(m_i!) / prod_{i<j} (m_j - m_i) where m is
    the vertex for the partition on exactly its number of rows."""
    rows = _checked_partition(rows)
    product = 1
    for line in hook_lengths(rows):
        for h in line:
            product *= h
    if rows:
        m = partition_to_young_vertex(rows, len(rows))
        expected = Fraction(1)
        for c in m:
            expected *= factorial(c)
        for i in range(len(m)):
            for j in range(i + 1, len(m)):
                expected /= m[j] - m[i]
        if expected != product:
            raise ArithmeticError(
                f"hook product {product} disagrees with {expected} for {rows}")
    return product


def check_hook_length_claim(rows: Sequence[int]) -> VerifyReport:
    """Report form of the hook-product cross-check."""
    started = time.perf_counter()
    rows = _checked_partition(rows)
    params = {"partition": rows}
    product = 1
    for line in hook_lengths(rows):
        for h in line:
            product *= h
    expected = Fraction(1)
    if rows:
        m = partition_to_young_vertex(rows, len(rows))
        for c in m:
            expected *= factorial(c)
        for i in range(len(m)):
            for j in range(i + 1, len(m)):
                expected /= m[j] - m[i]
    if expected != product:
        return failed("hook_length_product", params,
                      {"hooks": product, "ratio": expected}, started)
    return passed("hook_length_product", params, started)


def syt_count_hook(rows: Sequence[int]) -> int:
    """Cell count factorial over the hook product."""
    rows = _checked_partition(rows)
    cells = sum(rows)
    product = hook_product(rows)
    if factorial(cells) % product:
        raise ArithmeticError(f"hook product {product} does not divide {cells}!")
    return factorial(cells) // product


# -- distinct parts -----------------------------------------------------------

def strict_count(rows: Sequence[int]) -> int:
    """Paths from the origin to a distinct-parts partition:
    n! / prod(m_i!) * prod_{i<j} (m_i - m_j)/(m_i + m_j)."""
    rows = _checked_strict_partition(rows)
    if not rows:
        return 1
    value = Fraction(factorial(sum(rows)))
    for r in rows:
        value /= factorial(r)
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            value *= Fraction(rows[i] - rows[j], rows[i] + rows[j])
    if value.denominator != 1:
        raise ArithmeticError(f"non-integer count {value} at {rows}")
    return int(value)


@lru_cache(maxsize=None)
def _skew_weight_polynomial(rows: Rows, k: int) -> MultiPoly:
    ell = len(rows)
    total = MultiPoly.zero(k)
    for perm in itertools.permutations(range(k)):
        term = MultiPoly.const(k, _perm_sign(perm))
        for i in range(ell):
            term = term * ff_poly(k, perm[i], rows[i])
        for i in range(ell):
            for j in range(i + 1, k):
                term = term * (MultiPoly.var(k, perm[i]) + MultiPoly.var(k, perm[j]))
        for i in range(ell, k):
            for j in range(i + 1, k):
                term = term * (MultiPoly.var(k, perm[i]) - MultiPoly.var(k, perm[j]))
        total = total + term
    for a, b in itertools.combinations(range(k), 2):
        total = divide_exact_linear(total, a, b)
    result = total * Fraction(1, factorial(k - ell))
    if result.degree() != sum(rows):
        raise ArithmeticError(
            f"weight polynomial for {rows} has degree {result.degree()}")
    return result


def skew_weight_polynomial(rows: Sequence[int], k: int) -> MultiPoly:
    """The symmetric polynomial of degree sum(rows) in k variables obtained
    by symmetrizing ff(x_1, m_1)..ff(x_l, m_l) against the pair ratios
    (x_i + x_j)/(x_i - x_j); the anchor weight for skew counts below."""
    rows = _checked_strict_partition(rows)
    if k < len(rows):
        raise ValueError(f"need k >= {len(rows)} variables for {rows}")
    if k > SYMMETRIZATION_CAP:
        raise ValueError(f"symmetrization is capped at k = {SYMMETRIZATION_CAP}")
    return _skew_weight_polynomial(rows, k)


def skew_weight_fn(rows: Sequence[int], k: int) -> RationalFn:
    """The weight polynomial times prod (x_i - x_j)/(x_i + x_j)."""
    psi = skew_weight_polynomial(rows, k)
    pairs = {p: 1 for p in itertools.combinations(range(k), 2)}
    return RationalFn(k, difference_product(k) * psi, pairs)


def strict_skew_count(rows_from: Sequence[int], rows_to: Sequence[int],
                      k: int) -> int:
    """Paths between two distinct-parts partitions inside k coordinates:
    (n-m)! / prod(n_i!) times the anchored weight function evaluated (with
    exact limits) at the descending zero-padded target."""
    frm = _checked_strict_partition(rows_from)
    to = _checked_strict_partition(rows_to)
    if k < len(frm) or k < len(to):
        raise ValueError(f"need k >= {max(len(frm), len(to))} coordinates")
    v = strict_partition_to_vertex(frm, k)
    u = strict_partition_to_vertex(to, k)
    if not all(a <= b for a, b in zip(v, u)):
        return 0
    fn = skew_weight_fn(frm, k)
    point = tuple(reversed(u))
    value = evaluate_with_limits(fn, point)
    scale = Fraction(factorial(sum(to) - sum(frm)))
    for r in to:
        scale /= factorial(r)
    total = scale * value
    if total.denominator != 1:
        raise ArithmeticError(f"non-integer count {total} for {frm} -> {to}")
    return int(total)
