"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial in k variables is stored as a dict mapping exponent tuples
(length k, entries >= 0) to nonzero coefficients.  Coefficients are Python
ints or ``fractions.Fraction``; both interoperate exactly, so no floating
point ever enters a computation.  The zero polynomial is the empty dict.

Besides ring arithmetic this module provides the interpolation and expansion
primitives the rest of the package is built on:

* falling factorials of a variable or of an arbitrary polynomial,
* interpolation on a combinatorial simplex (the grid of points A(t_1..t_k)
  with t_i indexing per-coordinate node sets and sum(t) <= n),
* expansion of a polynomial through its top simplex layer in the falling
  factorial basis,
* alternants: determinants det(x_i^{m_j}) and det(ff(x_i, m_j)),
* exact division by a difference of variables (used to clear symmetrized
  denominators).

Term order everywhere is graded lexicographic, leading term first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator, Mapping, Sequence

Exponents = tuple[int, ...]
Coeff = int | Fraction


def grlex_key(exponents: Exponents) -> tuple[int, Exponents]:
    return (sum(exponents), exponents)


class MultiPoly:
    """Sparse polynomial with exact rational coefficients."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[Exponents, Coeff] | None = None):
        if k < 1:
            raise ValueError("need at least one variable")
        self.k = k
        clean: dict[Exponents, Coeff] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != k:
                raise ValueError(f"exponent tuple {exps} has wrong length for k={k}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if coeff:
                clean[tuple(exps)] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, k: int) -> "MultiPoly":
        return cls(k)

    @classmethod
    def const(cls, k: int, value: Coeff) -> "MultiPoly":
        return cls(k, {(0,) * k: value})

    @classmethod
    def one(cls, k: int) -> "MultiPoly":
        return cls.const(k, 1)

    @classmethod
    def var(cls, k: int, index: int) -> "MultiPoly":
        if not 0 <= index < k:
            raise ValueError(f"variable index {index} out of range for k={k}")
        exps = tuple(1 if i == index else 0 for i in range(k))
        return cls(k, {exps: 1})

    @classmethod
    def monomial(cls, k: int, exps: Exponents, coeff: Coeff = 1) -> "MultiPoly":
        return cls(k, {tuple(exps): coeff})

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "MultiPoly") -> None:
        if self.k != other.k:
            raise ValueError(f"dimension mismatch: {self.k} vs {other.k}")

    def __add__(self, other: "MultiPoly | Coeff") -> "MultiPoly":
        other = _as_poly(other, self.k)
        self._check_compatible(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = out.get(exps, 0) + coeff
            if new:
                out[exps] = new
            else:
                out.pop(exps, None)
        result = MultiPoly.__new__(MultiPoly)
        result.k = self.k
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        result = MultiPoly.__new__(MultiPoly)
        result.k = self.k
        result.terms = {e: -c for e, c in self.terms.items()}
        return result

    def __sub__(self, other: "MultiPoly | Coeff") -> "MultiPoly":
        return self + (-_as_poly(other, self.k))

    def __rsub__(self, other: Coeff) -> "MultiPoly":
        return _as_poly(other, self.k) - self

    def __mul__(self, other: "MultiPoly | Coeff") -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            result = MultiPoly.__new__(MultiPoly)
            result.k = self.k
            result.terms = {e: c * other for e, c in self.terms.items()} if other else {}
            return result
        self._check_compatible(other)
        out: dict[Exponents, Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                new = out.get(exps, 0) + c1 * c2
                if new:
                    out[exps] = new
                else:
                    del out[exps]
        result = MultiPoly.__new__(MultiPoly)
        result.k = self.k
        result.terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.one(self.k)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = _as_poly(other, self.k)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"MultiPoly({self.k}, {canonical_text(self)!r})"

    # -- queries -----------------------------------------------------------

    def degree(self) -> int | float:
        """Total degree; -inf for the zero polynomial."""
        if not self.terms:
            return float("-inf")
        return max(sum(e) for e in self.terms)

    def coefficient(self, exps: Exponents) -> Coeff:
        return self.terms.get(tuple(exps), 0)

    def evaluate(self, point: Sequence[Coeff]) -> Coeff:
        if len(point) != self.k:
            raise ValueError("point has wrong dimension")
        total: Coeff = 0
        for exps, coeff in self.terms.items():
            value = coeff
            for base, power in zip(point, exps):
                if power:
                    value *= base ** power
            total += value
        return total

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def leading_homogeneous(self) -> "MultiPoly":
        """The homogeneous part of top total degree."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading part")
        top = max(sum(e) for e in self.terms)
        return MultiPoly(self.k, {e: c for e, c in self.terms.items() if sum(e) == top})

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Compose with the given images: variable i is replaced by images[i]."""
        if len(images) != self.k:
            raise ValueError("need one image per variable")
        k_out = images[0].k
        if any(img.k != k_out for img in images):
            raise ValueError("images must share a dimension")
        total = MultiPoly.zero(k_out)
        for exps, coeff in self.terms.items():
            term = MultiPoly.const(k_out, coeff)
            for img, power in zip(images, exps):
                if power:
                    term = term * img ** power
            total = total + term
        return total


def _as_poly(value: "MultiPoly | Coeff", k: int) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    return MultiPoly.const(k, value)


def canonical_text(poly: MultiPoly) -> str:
    """Deterministic rendering: graded-lex descending, every exponent shown."""
    if not poly.terms:
        return "0"
    parts = []
    for exps in sorted(poly.terms, key=grlex_key, reverse=True):
        coeff = Fraction(poly.terms[exps])
        vars_text = " ".join(f"x{i + 1}^{e}" for i, e in enumerate(exps))
        parts.append(f"{coeff} * {vars_text}")
    return " + ".join(parts)


# -- falling factorials ----------------------------------------------------

def falling_factorial(x: Coeff, n: int) -> Coeff:
    """x(x-1)...(x-n+1); empty product is 1."""
    if n < 0:
        raise ValueError("negative length")
    value: Coeff = 1
    for j in range(n):
        value *= x - j
    return value


def ff_poly(k: int, index: int, n: int) -> MultiPoly:
    """The falling factorial of variable ``index`` as a polynomial."""
    return ff_of_poly(MultiPoly.var(k, index), n)


def ff_of_poly(poly: MultiPoly, n: int) -> MultiPoly:
    if n < 0:
        raise ValueError("negative length")
    result = MultiPoly.one(poly.k)
    for j in range(n):
        result = result * (poly - j)
    return result


def multinomial(parts: Sequence[int]) -> int:
    """(sum parts)! / prod(parts!); parts must be non-negative."""
    if any(p < 0 for p in parts):
        raise ValueError("negative part")
    value = factorial(sum(parts))
    for p in parts:
        value //= factorial(p)
    return value


# -- exponent enumeration ---------------------------------------------------

def exact_compositions(k: int, total: int) -> Iterator[Exponents]:
    """All tuples of k non-negative ints summing to exactly ``total``."""
    if k == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in exact_compositions(k - 1, total - head):
            yield (head,) + rest


def bounded_exponents(k: int, max_total: int) -> Iterator[Exponents]:
    """All tuples of k non-negative ints with sum <= max_total."""
    for total in range(max_total + 1):
        yield from exact_compositions(k, total)


# -- simplex interpolation ---------------------------------------------------

@dataclass(frozen=True)
class SimplexSpec:
    """Per-coordinate node sets A_1..A_k (each n+1 distinct rationals) and the
    simplex order n.  Point A(t_1..t_k) takes the t_i-th node in coordinate i.
    """

    nodes: tuple[tuple[Coeff, ...], ...]
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative simplex order")
        for row in self.nodes:
            if len(row) != self.n + 1:
                raise ValueError("each node set needs n+1 entries")
            if len(set(row)) != len(row):
                raise ValueError(f"repeated node in {row}")

    @property
    def k(self) -> int:
        return len(self.nodes)

    @classmethod
    def standard(cls, k: int, n: int) -> "SimplexSpec":
        return cls(tuple(tuple(range(n + 1)) for _ in range(k)), n)

    def point(self, t: Exponents) -> tuple[Coeff, ...]:
        return tuple(self.nodes[i][t[i]] for i in range(self.k))

    def points(self) -> Iterator[tuple[Exponents, tuple[Coeff, ...]]]:
        for t in bounded_exponents(self.k, self.n):
            yield t, self.point(t)


def interpolate_on_simplex(spec: SimplexSpec,
                           values: Mapping[tuple, Coeff]) -> MultiPoly:
    """The unique polynomial of degree <= n taking the given values on the
    simplex points.

    ``values`` must be keyed by the points A(t) themselves, covering the
    simplex exactly.  The polynomial is built layer by layer: the correction
    for a top-layer point A(t) uses the product of (x_i - a_is) over s < t_i,
    which vanishes at every other simplex point of order <= sum(t).
    """
    expected = {tuple(pt) for _, pt in spec.points()}
    provided = {tuple(p) for p in values}
    if provided != expected:
        missing = sorted(expected - provided)
        extra = sorted(provided - expected)
        raise ValueError(f"value table mismatch: missing {missing[:3]}, extra {extra[:3]}")

    k = spec.k
    result = MultiPoly.zero(k)
    for level in range(spec.n + 1):
        for t in exact_compositions(k, level):
            pt = spec.point(t)
            gap = values[pt] - result.evaluate(pt)
            if not gap:
                continue
            basis = MultiPoly.one(k)
            for i in range(k):
                for s in range(t[i]):
                    basis = basis * (MultiPoly.var(k, i) - spec.nodes[i][s])
            result = result + basis * (Fraction(gap) / Fraction(basis.evaluate(pt)))
    return result


def top_layer_expansion(poly: MultiPoly, n: int) -> MultiPoly:
    """Expand a polynomial through its top simplex layer.

    Requires deg(poly) <= n and poly vanishing at every lattice point with
    non-negative entries summing to < n.  Returns
    sum over c with sum(c)=n of  poly(c)/prod(c_i!) * prod_i ff(x_i, c_i),
    which then equals ``poly`` itself.
    """
    if poly.degree() > n:
        raise ValueError(f"degree {poly.degree()} exceeds {n}")
    k = poly.k
    for c in bounded_exponents(k, n - 1):
        if poly.evaluate(c):
            raise ValueError(f"does not vanish at {c}")
    result = MultiPoly.zero(k)
    for c in exact_compositions(k, n):
        value = poly.evaluate(c)
        if not value:
            continue
        weight = Fraction(value)
        for ci in c:
            weight /= factorial(ci)
        term = MultiPoly.const(k, weight)
        for i, ci in enumerate(c):
            if ci:
                term = term * ff_poly(k, i, ci)
        result = result + term
    return result


# -- alternants --------------------------------------------------------------

def power_alternant(exponents: Sequence[int]) -> MultiPoly:
    """det(x_i ^ m_j) for the k exponents m; zero when exponents repeat."""
    k = len(exponents)
    result = MultiPoly.zero(k)
    for perm in itertools.permutations(range(k)):
        exps = tuple(exponents[perm[i]] for i in range(k))
        result = result + MultiPoly.monomial(k, exps, _perm_sign(perm))
    return result


def falling_alternant(exponents: Sequence[int]) -> MultiPoly:
    """det(ff(x_i, m_j)) for the k exponents m."""
    k = len(exponents)
    result = MultiPoly.zero(k)
    for perm in itertools.permutations(range(k)):
        term = MultiPoly.const(k, _perm_sign(perm))
        for i in range(k):
            term = term * ff_poly(k, i, exponents[perm[i]])
        result = result + term
    return result


def falling_alternant_at(exponents: Sequence[int], point: Sequence[Coeff]) -> Coeff:
    """det(ff(point_i, m_j)) evaluated numerically."""
    k = len(exponents)
    if len(point) != k:
        raise ValueError("point has wrong dimension")
    rows = [[falling_factorial(point[i], m) for m in exponents] for i in range(k)]
    return det_exact(rows)


def det_exact(rows: Sequence[Sequence[Coeff]]) -> Coeff:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(rows)
    mat = [[Fraction(v) for v in row] for row in rows]
    sign = 1
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if mat[r][col]), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            mat[col], mat[pivot_row] = mat[pivot_row], mat[col]
            sign = -sign
        pivot = mat[col][col]
        for r in range(col + 1, n):
            if mat[r][col]:
                factor = mat[r][col] / pivot
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[col])]
    result = Fraction(sign)
    for i in range(n):
        result *= mat[i][i]
    return result


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


# -- exact division ----------------------------------------------------------

def divide_exact_linear(poly: MultiPoly, a: int, b: int) -> MultiPoly:
    """Exact quotient poly / (x_a - x_b); raises if the division leaves a
    remainder.  Synthetic division treating poly as univariate in x_a."""
    if a == b:
        raise ValueError("need two distinct variables")
    k = poly.k
    layers: dict[int, dict[Exponents, Coeff]] = {}
    for exps, coeff in poly.terms.items():
        d = exps[a]
        stripped = exps[:a] + (0,) + exps[a + 1:]
        layers.setdefault(d, {})[stripped] = coeff
    if not layers:
        return MultiPoly.zero(k)

    top = max(layers)
    quotient: dict[Exponents, Coeff] = {}
    carry: dict[Exponents, Coeff] = {}
    for d in range(top, 0, -1):
        layer = dict(layers.get(d, {}))
        for exps, coeff in carry.items():
            layer[exps] = layer.get(exps, 0) + coeff
        # q_{d-1} = P_d + x_b * q_d, accumulated into the quotient at x_a^{d-1}
        next_carry: dict[Exponents, Coeff] = {}
        for exps, coeff in layer.items():
            if not coeff:
                continue
            quotient[exps[:a] + (d - 1,) + exps[a + 1:]] = coeff
            shifted = exps[:b] + (exps[b] + 1,) + exps[b + 1:]
            next_carry[shifted] = next_carry.get(shifted, 0) + coeff
        carry = next_carry
    remainder = dict(layers.get(0, {}))
    for exps, coeff in carry.items():
        new = remainder.get(exps, 0) + coeff
        if new:
            remainder[exps] = new
        else:
            remainder.pop(exps, None)
    if any(remainder.values()):
        raise ArithmeticError("division by difference of variables is not exact")
    return MultiPoly(k, quotient)
