"""Hilbert series, dimension, multiplicity and lengths of graded quotients.

For a homogeneous ideal I in a polynomial ring with n variables, the
Hilbert series of R/I is N(t) / (1-t)^n for an integer polynomial N
computed combinatorially from the leading monomials of any Groebner
basis (the Hilbert function of R/I equals that of R/in(I)).  Cancelling
all factors (1-t) dividing N gives the reduced form  Ñ(t) / (1-t)^d:

* d is the pole order, i.e. the Krull dimension of R/I (the dimension
  of the affine cone); the associated projective scheme has dimension
  d - 1, and is empty when d <= 0;
* Ñ(1) is a positive integer: the degree/multiplicity e0 of R/I, which
  for d = 0 equals the K-vector-space length of R/I;
* expanding Ñ(t)/(1-t)^d in binomials gives the Hilbert polynomial,
  which agrees with the Hilbert function in all large degrees.

The recursion used for N is the standard pivot-variable splitting
N(I) = N(I + (v)) + t * N(I : v), with the base case of pairwise
coprime monomial generators, where N is a product of (1 - t^deg).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Optional, Sequence, Tuple

from .groebner import Ideal
from .poly_core import Monomial, TermOrder, mono_degree, mono_divides


# ---------------------------------------------------------------------------
# numerator combinatorics on monomial sets
# ---------------------------------------------------------------------------


def _minimalize(monos: Sequence[Monomial]) -> Tuple[Monomial, ...]:
    """Drop monomials divisible by another one of the set."""
    ordered = sorted(set(monos), key=lambda m: (mono_degree(m), m))
    kept: list = []
    for m in ordered:
        if not any(mono_divides(k, m) for k in kept):
            kept.append(m)
    return tuple(kept)


def _poly_mul(a: Dict[int, int], b: Dict[int, int]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for i, ca in a.items():
        for j, cb in b.items():
            out[i + j] = out.get(i + j, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def _pairwise_coprime(monos: Sequence[Monomial]) -> bool:
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in monos]
    for i in range(len(supports)):
        for j in range(i):
            if supports[i] & supports[j]:
                return False
    return True


def _numerator_of_monomials(
    monos: Sequence[Monomial], nvars: int
) -> Dict[int, int]:
    """N(t) with HS(R/I) = N(t)/(1-t)^nvars for the monomial ideal I.

    Returns a sparse {degree: coefficient} dict; the zero ring yields {}.
    """
    cache: Dict[frozenset, Dict[int, int]] = {}

    def rec(ms: Tuple[Monomial, ...]) -> Dict[int, int]:
        key = frozenset(ms)
        hit = cache.get(key)
        if hit is not None:
            return hit
        if not ms:
            result: Dict[int, int] = {0: 1}
        elif any(mono_degree(m) == 0 for m in ms):
            result = {}
        elif _pairwise_coprime(ms):
            result = {0: 1}
            for m in ms:
                result = _poly_mul(result, {0: 1, mono_degree(m): -1})
        else:
            counts = [0] * nvars
            for m in ms:
                for i, e in enumerate(m):
                    if e:
                        counts[i] += 1
            pivot = max(range(nvars), key=lambda i: (counts[i], -i))
            ev = tuple(1 if i == pivot else 0 for i in range(nvars))
            plus = _minimalize(
                tuple(m for m in ms if m[pivot] == 0) + (ev,)
            )
            colon = _minimalize(
                tuple(
                    tuple(e - 1 if i == pivot and e else e for i, e in enumerate(m))
                    for m in ms
                )
            )
            left = rec(plus)
            right = rec(colon)
            result = dict(left)
            for d, c in right.items():
                result[d + 1] = result.get(d + 1, 0) + c
            result = {k: v for k, v in result.items() if v}
        cache[key] = result
        return result

    return rec(_minimalize(monos))


def _dense(num: Dict[int, int]) -> Tuple[int, ...]:
    if not num:
        return ()
    top = max(num)
    return tuple(num.get(d, 0) for d in range(top + 1))


def hilbert_numerator(ideal: Ideal) -> Tuple[int, ...]:
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of R/I for
    an ideal I generated by monomials.

    Returned as the tuple of integer coefficients (index = degree of t);
    the full ring (I = 0) gives (1,) and the zero ring gives ().  A
    generator with more than one term raises ValueError.
    """
    monos = []
    for g in ideal.gens:
        if len(g.terms) != 1:
            raise ValueError("hilbert_numerator requires monomial generators")
        monos.append(g.terms[0][0])
    return _dense(_numerator_of_monomials(monos, ideal.ring.nvars))


def _divide_by_one_minus_t(num: Dict[int, int]) -> Optional[Dict[int, int]]:
    """num / (1-t) when exact (i.e. num(1) == 0), else None."""
    if not num:
        return None
    top = max(num)
    q: Dict[int, int] = {}
    carry = 0
    for d in range(top + 1):
        carry += num.get(d, 0)
        if carry:
            q[d] = carry
    if carry:
        return None
    return q


# ---------------------------------------------------------------------------
# HilbertData
# ---------------------------------------------------------------------------


class HilbertData:
    """Reduced Hilbert-series data of a graded quotient R/I.

    Attributes:
        dimension:          Krull dimension of R/I (pole order of the
                            series); -1 for the zero ring (unit ideal).
        multiplicity:       degree e0 of R/I: the value Ñ(1) of the
                            reduced numerator; equals the length of R/I
                            when the dimension is 0, and 0 for the zero
                            ring.
        numerator:          reduced numerator coefficients (index = the
                            degree of t).
        hilbert_polynomial: coefficients (ascending, exact rationals) of
                            the polynomial agreeing with the Hilbert
                            function in all large degrees; empty for
                            dimension <= 0, where that polynomial is 0.
        length:             total K-dimension of R/I when it is finite
                            (dimension <= 0), None otherwise.
        nvars:              ambient variable count.
    """

    def __init__(self, nvars: int, dimension: int, multiplicity: int,
                 numerator: Tuple[int, ...]):
        self.nvars = nvars
        self.dimension = dimension
        self.multiplicity = multiplicity
        self.numerator = numerator
        self.hilbert_polynomial = self._polynomial_coefficients()
        if dimension < 0:
            self.length: Optional[int] = 0
        elif dimension == 0:
            self.length = multiplicity
        else:
            self.length = None

    @property
    def is_zero_ring(self) -> bool:
        return self.dimension < 0

    @property
    def projective_dimension(self) -> int:
        """Dimension of the projective scheme Proj(R/I); -1 when empty."""
        return max(self.dimension - 1, -1)

    def _polynomial_coefficients(self) -> Tuple[Fraction, ...]:
        """Hilbert polynomial as ascending coefficients in the degree m.

        From the reduced series: HF(m) = sum_i ñ_i * C(m - i + d - 1, d - 1)
        for m >= deg Ñ, and each binomial is a degree-(d-1) polynomial
        in m, namely prod_{j=1..d-1} (m - i + d - 1 - (j-1)) / (d-1)!.
        """
        d = self.dimension
        if d <= 0:
            return ()
        coeffs = [Fraction(0)] * d
        fact = 1
        for j in range(1, d):
            fact *= j
        for i, c in enumerate(self.numerator):
            if not c:
                continue
            # prod over the d-1 linear factors (m + (d - i - j)) for j=1..d-1
            prod = [Fraction(1)]
            for j in range(1, d):
                shift = Fraction(d - i - j)
                nxt = [Fraction(0)] * (len(prod) + 1)
                for k, a in enumerate(prod):
                    nxt[k] += a * shift
                    nxt[k + 1] += a
                prod = nxt
            for k, a in enumerate(prod):
                coeffs[k] += Fraction(c) * a / fact
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)

    def hilbert_function(self, degree: int) -> int:
        """dim_K (R/I)_degree, from the reduced series."""
        if degree < 0:
            return 0
        d = self.dimension
        if d < 0:
            return 0
        if d == 0:
            return (
                self.numerator[degree] if degree < len(self.numerator) else 0
            )
        total = 0
        for i, c in enumerate(self.numerator):
            if degree >= i:
                total += c * comb(degree - i + d - 1, d - 1)
        return total

    def hilbert_polynomial_value(self, degree: int) -> Fraction:
        """Value of the Hilbert polynomial at the given degree."""
        total = Fraction(0)
        power = Fraction(1)
        for c in self.hilbert_polynomial:
            total += c * power
            power *= degree
        return total

    def __repr__(self) -> str:
        if self.is_zero_ring:
            return "HilbertData(zero ring)"
        return "HilbertData(dim=%d, mult=%d, numerator=%r)" % (
            self.dimension,
            self.multiplicity,
            self.numerator,
        )


def hilbert_data(ideal: Ideal, order: Optional[TermOrder] = None) -> HilbertData:
    """Dimension / multiplicity / reduced numerator / Hilbert polynomial
    of R/I.

    I must be homogeneous.  The result does not depend on the term order
    used for the underlying Groebner basis.
    """
    if not ideal.is_homogeneous():
        raise ValueError("Hilbert data requires a homogeneous ideal")
    ring = ideal.ring
    gb = ideal.groebner(order if order is not None else ring.order)
    if gb.is_unit():
        return HilbertData(ring.nvars, -1, 0, ())
    num = _numerator_of_monomials(gb.leading_monomials(), ring.nvars)
    cancels = 0
    while True:
        q = _divide_by_one_minus_t(num)
        if q is None:
            break
        num = q
        cancels += 1
    dimension = ring.nvars - cancels
    dense = _dense(num)
    multiplicity = sum(dense)
    return HilbertData(ring.nvars, dimension, multiplicity, dense)


def dimension(ideal: Ideal, order: Optional[TermOrder] = None) -> int:
    """Krull dimension of R/I (the affine cone); -1 for the unit ideal."""
    return hilbert_data(ideal, order).dimension


def multiplicity(ideal: Ideal, order: Optional[TermOrder] = None) -> int:
    """Degree/multiplicity e0 of R/I: Ñ(1); the length of R/I when dim = 0."""
    return hilbert_data(ideal, order).multiplicity


def intersection_length(a: Ideal, b: Ideal) -> int:
    """Length of the finite scheme cut out by the sum of the two ideals:
    the multiplicity e0 of R/(a+b).

    The intersection must be finite as a projective scheme, i.e. the
    cone dimension of the sum must be at most 1; dimension 2 or more
    raises ValueError.  An artinian sum (cone dimension 0: projectively
    empty intersection) yields its K-vector-space length, and the unit
    ideal yields 0.
    """
    if a.ring != b.ring:
        raise ValueError("ring mismatch")
    hd = hilbert_data(a + b)
    if hd.dimension >= 2:
        raise ValueError(
            "positive-dimensional intersection (cone dimension %d)"
            % hd.dimension
        )
    return hd.multiplicity
