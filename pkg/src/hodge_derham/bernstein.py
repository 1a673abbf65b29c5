"""Bernstein-filtration Hilbert functions of monomial localizations.

The filtration on ``T_sigma`` is by total absolute degree: ``F_v`` is spanned
by the ``x^a`` with ``sum |a_i| <= v``.  Its Hilbert function is a
polynomial of degree n with leading coefficient ``2^|sigma| / n!``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial

from .cech import MonomialLocalization, cech_term
from .errors import InputError, InvariantViolation


def hilbert_function(loc: MonomialLocalization, v: int) -> int:
    """Number of exponent vectors of ``T_sigma`` with ``sum |a_i| <= v``."""
    if v < 0:
        raise InputError("filtration index must be nonnegative")
    # counts[k] = number of vectors over the coordinates seen so far with sum |a_i| = k
    counts = [1] + [0] * v
    for i in range(loc.n):
        ways = [1] + [2 if i in loc.sigma else 1] * v
        counts = [sum(counts[k - j] * ways[j] for j in range(k + 1)) for k in range(v + 1)]
    return sum(counts)


def _forward_differences(values: list[int]) -> list[int]:
    """Leading entries ``Delta^k h(v0)`` of the difference table."""
    out = []
    row = list(values)
    while row:
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return out


def _newton_eval(diffs: list[int], v0: int, v: int) -> Fraction:
    total = Fraction(0)
    binom = Fraction(1)
    for k, dk in enumerate(diffs):
        total += dk * binom
        binom = binom * (v - v0 - k) / (k + 1)
    return total


@dataclass
class HilbertData:
    samples: list[tuple[int, int]]
    fitted_degree: int
    leading_multiplicity: int
    threshold: int = 0


def bernstein_dimension(loc: MonomialLocalization) -> HilbertData:
    """Fit the Hilbert polynomial on ``v = n+1 .. 2n+2`` and check it against ``v = 0 .. max(3n, 2n+2)``.

    Returns the samples, the degree (the Bernstein dimension) and the
    multiplicity ``leading coefficient * degree!``.
    """
    n = loc.n
    v0 = n + 1
    fit = [hilbert_function(loc, v) for v in range(v0, 2 * n + 3)]
    diffs = _forward_differences(fit)
    degree = max((k for k, d in enumerate(diffs) if d), default=0)
    if degree == len(diffs) - 1:
        raise InvariantViolation("not enough samples to determine the Hilbert polynomial")
    samples = [(v, hilbert_function(loc, v)) for v in range(0, max(3 * n, 2 * n + 2) + 1)]
    for v, h in samples:
        if _newton_eval(diffs, v0, v) != h:
            raise InvariantViolation(f"Hilbert polynomial fit fails at v = {v}")
    for (_, h1), (_, h2) in zip(samples, samples[1:]):
        if h2 < h1:
            raise InvariantViolation("Hilbert function is not nondecreasing")
    # Delta^d of a degree-d polynomial is d! * leading coefficient
    return HilbertData(samples, degree, diffs[degree])


def bernstein_bound_check(loc: MonomialLocalization) -> bool:
    d = bernstein_dimension(loc).fitted_degree
    return loc.n <= d <= 2 * loc.n


def leading_coefficient(data: HilbertData) -> Fraction:
    return Fraction(data.leading_multiplicity, factorial(data.fitted_degree))


def lattice_count(loc: MonomialLocalization, v: int) -> int:
    """Brute-force enumeration of the same count as ``hilbert_function``."""
    ranges = [range(-v, v + 1) if i in loc.sigma else range(0, v + 1) for i in range(loc.n)]
    return sum(1 for a in product(*ranges) if sum(abs(x) for x in a) <= v)


def cech_dimension_bound(spec) -> int:
    """Largest Bernstein dimension among the Cech terms of ``spec``.

    Local cohomology modules are subquotients of these terms, so their
    dimension is bounded by this number (holonomic modules are closed under
    subquotients).
    """
    return max(
        bernstein_dimension(loc).fitted_degree
        for t in range(spec.m + 1)
        for loc in set(cech_term(spec, t))
    )
