"""Exact special values of the spectral zeta function of a (q+1)-regular tree.

The Laplacian spectrum of the infinite (q+1)-regular tree induces a spectral
zeta function whose values at negative integers are integer polynomials in the
branching number q, and whose values at positive integers are rationals built
from a family of monic palindromic integer polynomials.  Everything in this
module is computed with exact integer and rational arithmetic; three
independent routes to the negative values cross-check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .exact import Fraction as _Fraction  # noqa: F401  (re-export convenience)
from .exact import IntPoly, RatPoly, Series, poly_eval, series_sqrt

MAX_WALK_LENGTH = 64

_Q = RatPoly.variable()
_HALF = Fraction(1, 2)


def _poly_series(polys, order):
    """Series over RatPoly coefficients, zero-padded to the requested order."""
    cs = list(polys)[:order]
    cs += [RatPoly()] * (order - len(cs))
    return Series(cs)


def count_closed_walks(q: int, n: int) -> int:
    """Number of length-n closed walks at a vertex of the (q+1)-regular tree.

    Dynamic programming over the distance from the starting vertex: from the
    root there are q+1 outward steps, from anywhere else q outward and one
    inward.  Serves as the independent oracle for the generating-function
    route.
    """
    if q < 1:
        raise DomainError("branching number must be at least 1")
    if n < 0:
        raise DomainError("walk length must be non-negative")
    if n > MAX_WALK_LENGTH:
        raise DomainError(f"walk length capped at {MAX_WALK_LENGTH}")
    ways = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for d, c in ways.items():
            out = c * (q + 1 if d == 0 else q)
            nxt[d + 1] = nxt.get(d + 1, 0) + out
            if d >= 1:
                nxt[d - 1] = nxt.get(d - 1, 0) + c
        ways = nxt
    return ways.get(0, 0)


@lru_cache(maxsize=None)
def moment_polynomials(n_max: int) -> tuple[IntPoly, ...]:
    """Closed-walk counts at the root as polynomials in q, for lengths 0..n_max.

    Expands the closed form of the walk generating function
    ((q+1) sqrt(1 - 4 q z^2) - (q - 1)) / (2 (1 - (q+1)^2 z^2)).
    """
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    order = n_max + 1
    radicand = _poly_series([RatPoly.constant(1), RatPoly(), _Q * (-4)], order)
    radical = series_sqrt(radicand)
    numerator = radical * (_Q + 1) - _poly_series([_Q - 1], order)
    denominator = _poly_series([RatPoly.constant(1), RatPoly(), -((_Q + 1) ** 2)], order)
    f = (numerator * _HALF) / denominator
    return tuple(c.to_intpoly() for c in f.coeffs)


NEG_VALUE_METHODS = ("closed_form", "moments", "series")


@lru_cache(maxsize=None)
def negative_value_table(m_max: int, method: str = "closed_form") -> tuple[IntPoly, ...]:
    """Zeta values at 0, -1, ..., -m_max as integer polynomials in q."""
    if m_max < 0:
        raise DomainError("m_max must be non-negative")
    if method == "closed_form":
        return tuple(_neg_value_closed_form(m) for m in range(m_max + 1))
    if method == "moments":
        walks = moment_polynomials(m_max)
        return tuple(_neg_value_from_moments(m, walks) for m in range(m_max + 1))
    if method == "series":
        return _neg_values_series(m_max)
    raise DomainError(f"unknown method {method!r}; choose from {NEG_VALUE_METHODS}")


def zeta_neg(m: int, method: str = "closed_form") -> IntPoly:
    """Zeta value at -m as an integer polynomial in the branching number."""
    if m < 0:
        raise DomainError("m must be non-negative")
    return negative_value_table(m, method)[m]


def _neg_value_closed_form(m: int) -> IntPoly:
    # sum of squared binomials minus a (q-1)-weighted correction double sum
    coeffs = [0] * (m + 2)
    for k in range(m + 1):
        coeffs[m - k] += math.comb(m, k) ** 2
    for j in range(1, m // 2 + 1):
        for k in range(m - 2 * j + 1):
            b = math.comb(m, k) * math.comb(m, 2 * j + k)
            e = m - 2 * j - k
            coeffs[e + 1] -= b
            coeffs[e] += b
    return IntPoly(coeffs)


def _neg_value_from_moments(m: int, walks) -> IntPoly:
    # binomial transform of the walk counts against powers of q+1
    qp1 = IntPoly((1, 1))
    acc = IntPoly()
    for j in range(m + 1):
        term = walks[j] * (qp1 ** (m - j)) * math.comb(m, j)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def _neg_values_series(m_max: int) -> tuple[IntPoly, ...]:
    # coefficient extraction from the closed generating function
    # ((q+1) sqrt(1 - 2(q+1) z + (q-1)^2 z^2) + z (q^2-1) - (q-1)) / (2 (1 - 2(q+1) z))
    order = m_max + 1
    radicand = _poly_series(
        [RatPoly.constant(1), (_Q + 1) * (-2), (_Q - 1) ** 2], order
    )
    radical = series_sqrt(radicand)
    numerator = radical * (_Q + 1) + _poly_series([-(_Q - 1), _Q * _Q - 1], order)
    denominator = _poly_series([RatPoly.constant(1), (_Q + 1) * (-2)], order)
    g = (numerator * _HALF) / denominator
    return tuple(c.to_intpoly() for c in g.coeffs)


def _list_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _list_add_into(acc: list[int], term: list[int]) -> list[int]:
    if len(term) > len(acc):
        acc, term = term, acc
    for i, t in enumerate(term):
        acc[i] += t
    return acc


@lru_cache(maxsize=None)
def _value_poly_lists(n_max: int) -> tuple[tuple[int, ...], ...]:
    # recursion over raw coefficient lists; IntPoly wrapping happens once at the end
    qm1sq = [1, -2, 1]
    p: list[list[int]] = [[1], [1]]  # index 0 unused by the sums
    for n in range(1, n_max):
        conv_a: list[int] = [0]
        for j in range(1, n + 1):
            conv_a = _list_add_into(conv_a, _list_mul(p[j], p[n + 1 - j]))
        conv_b: list[int] = [0]
        for j in range(1, n):
            conv_b = _list_add_into(conv_b, _list_mul(p[j], p[n - j]))
        term_a = [0] + [2 * c for c in conv_a]  # 2 q * conv_a
        term_b = [0] + [-c for c in _list_mul(qm1sq, conv_b)]  # -q (q-1)^2 * conv_b
        nxt = _list_add_into(term_a, term_b)
        nxt = _list_add_into(nxt, _list_mul(qm1sq, p[n]))
        p.append(nxt)
    return tuple(tuple(c) for c in p[1:])


def value_polynomials(n_max: int) -> tuple[IntPoly, ...]:
    """The monic palindromic polynomials carrying the positive special values.

    Index k of the returned tuple holds the polynomial for the value at k+1;
    the quadratic functional equation of their generating series yields the
    recursion used here, seeded by the constant first polynomial.
    """
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    # round the table size up so repeated calls share a handful of cached builds
    size = max(8, n_max)
    if size & (size - 1):
        size = 1 << size.bit_length()
    return tuple(IntPoly(c) for c in _value_poly_lists(size)[:n_max])


def zeta_pos(q: int, n: int) -> Fraction:
    """Zeta value at the positive integer n, exactly."""
    if not isinstance(q, int) or q < 2:
        raise DomainError("branching number must be an integer >= 2 (q = 1 has its own line function)")
    if n < 1:
        raise DomainError("n must be a positive integer")
    p = value_polynomials(n)[n - 1]
    return Fraction(q * p.evaluate(q), (q - 1) ** (2 * n - 1) * (q + 1) ** n)


def positive_value_sequence(q: int, n_max: int) -> list[Fraction]:
    """Positive-integer zeta values a_0..a_n_max via the quadratic recursion.

    Independent of the value-polynomial route: only the closed-walk quadratic
    feeds this recursion, so it cross-checks ``zeta_pos``.
    """
    if not isinstance(q, int) or q < 2:
        raise DomainError("branching number must be an integer >= 2")
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    a = [Fraction(1)]
    if n_max >= 1:
        a.append(Fraction(q, q * q - 1))
    for n in range(2, n_max + 1):
        acc = Fraction(0)
        for j in range(1, n):
            acc += a[j] * a[n - j]
        acc *= 2 * (q + 1)
        for j in range(1, n - 1):
            acc -= a[j] * a[n - 1 - j]
        acc += (q - 1) * a[n - 1]
        a.append(acc / (q * q - 1))
    return a


def zeta_integer(q: int, k: int) -> Fraction:
    """Zeta value at any integer: polynomial evaluation for k <= 0, exact rational for k >= 1."""
    if k >= 1:
        return zeta_pos(q, k)
    return poly_eval(zeta_neg(-k), q)


def two_step_defect(q: int, n: int) -> Fraction:
    """Residual of the exact two-step functional relation at integer offset n.

    Zero for every integer n; computed with exact rationals on both sides so
    a nonzero result is a genuine counterexample, not round-off.
    """
    if not isinstance(q, int) or q < 2:
        raise DomainError("branching number must be an integer >= 2")
    lhs = zeta_integer(q, -n) - 2 * (q + 1) * zeta_integer(q, 1 - n)
    rhs = Fraction(q - 1) ** (2 * n - 1) * (
        zeta_integer(q, n - 1) - 2 * (q + 1) * zeta_integer(q, n)
    )
    return lhs - rhs


DEFAULT_TABLE_DEPTH = 50


@dataclass(frozen=True)
class SpecialValueTable:
    """Bundled exact special values for one branching number.

    ``neg_values[m]`` is the integer zeta value at -m; ``pos_values[n-1]`` the
    rational value at n; ``value_polys[n-1]`` the polynomial behind it.
    """

    q: int
    neg_values: tuple[int, ...]
    pos_values: tuple[Fraction, ...]
    value_polys: tuple[IntPoly, ...]

    @classmethod
    def build(cls, q: int, depth: int = DEFAULT_TABLE_DEPTH) -> "SpecialValueTable":
        if not isinstance(q, int) or q < 2:
            raise DomainError("branching number must be an integer >= 2")
        if depth < 1:
            raise DomainError("depth must be positive")
        polys = value_polynomials(depth)
        neg = tuple(int(poly_eval(p, q)) for p in negative_value_table(depth))
        pos = tuple(zeta_pos(q, n) for n in range(1, depth + 1))
        return cls(q=q, neg_values=neg, pos_values=pos, value_polys=polys)


SMALL_ROOT_CANDIDATES = tuple(
    Fraction(s * n, d)
    for s in (1, -1)
    for n, d in ((1, 1), (2, 1), (3, 1), (5, 1), (7, 1), (1, 2), (1, 3), (1, 5), (1, 7))
)


def value_poly_small_rational_roots(n: int) -> list[Fraction]:
    """Small-candidate rational roots of the n-th value polynomial.

    Monic with constant coefficient 1, so the rational root theorem already
    confines candidates to ±1; a few more candidates are checked for free.
    Expected to be empty for every n.
    """
    p = value_polynomials(n)[n - 1]
    return [x for x in SMALL_ROOT_CANDIDATES if p.evaluate(x) == 0]
