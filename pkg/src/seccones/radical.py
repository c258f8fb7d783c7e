"""Radicals of polynomial ideals.

Three strategies, from cheap to general:

1. monomial ideals: the radical is generated by the squarefree parts of
   the generators (combinatorial, no Groebner computation);
2. zero-dimensional ideals: contracting to each K[x_i] gives a nonzero
   univariate eliminant; replacing every eliminant by its squarefree
   part yields a radical ideal (an ideal containing a squarefree
   univariate polynomial in every variable is radical);
3. positive dimension: pick a maximal independent set U of variables
   modulo the initial ideal, so the ideal becomes zero-dimensional over
   the rational function field K(U).  Add the relative squarefree parts
   of the eliminants of the dependent variables, saturate by the product
   h of the leading U-coefficients involved to obtain the radical of the
   generic part, and recurse on I + (h), which is strictly larger
   because no nonzero element of K[U] lies in I.  The intersection of
   the two branches is the radical.

Everything assumes a field of characteristic zero or, over F_p, input
whose eliminants stay separable; the inseparable multivariate case
raises NotImplementedError rather than returning a wrong answer.
"""

from __future__ import annotations

from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .poly_core import (
    Monomial,
    PolyRing,
    Polynomial,
    PrimeField,
    elim_order,
    leading_data_in_var,
    mono_degree,
)
from .groebner import Ideal
from .ideal_ops import eliminate, intersect, saturate_by_poly

_MAX_DEPTH = 16


# ---------------------------------------------------------------------------
# monomial ideals
# ---------------------------------------------------------------------------


def _monomial_generators(ideal: Ideal) -> Optional[List[Monomial]]:
    """The leading monomials if the reduced basis is all monomials, else None."""
    gb = ideal.groebner()
    monos = []
    for g in gb.polys:
        if len(g.terms) != 1:
            return None
        monos.append(g.terms[0][0])
    return monos


def _radical_of_monomials(ring: PolyRing, monos: Sequence[Monomial]) -> Ideal:
    seen = set()
    for m in monos:
        seen.add(tuple(1 if e else 0 for e in m))
    # drop non-minimal squarefree monomials
    kept = []
    ordered = sorted(seen, key=lambda m: (mono_degree(m), m))
    for m in ordered:
        if not any(all(x <= y for x, y in zip(k, m)) for k in kept):
            kept.append(m)
    one = ring.field.one
    return Ideal(ring, [Polynomial(ring, ((m, one),)) for m in kept])


# ---------------------------------------------------------------------------
# dimension and independent sets from the initial ideal
# ---------------------------------------------------------------------------


def _independent(lms: Sequence[Monomial], subset: Tuple[int, ...]) -> bool:
    s = set(subset)
    for m in lms:
        if all((e == 0 or i in s) for i, e in enumerate(m)):
            return False
    return True


def _max_independent_set(lms: Sequence[Monomial], nvars: int) -> Tuple[int, ...]:
    """The lexicographically first independent set of maximal size.

    A set U of variable positions is independent modulo the monomial
    ideal when no generator is supported inside U; the maximal size is
    the Krull dimension of the quotient.
    """
    for size in range(nvars, 0, -1):
        for subset in combinations(range(nvars), size):
            if _independent(lms, subset):
                return subset
    return ()


# ---------------------------------------------------------------------------
# univariate squarefree parts
# ---------------------------------------------------------------------------


def _univariate_coeffs(f: Polynomial, var: int) -> dict:
    coeffs: dict = {}
    for m, c in f.terms:
        if any(e and i != var for i, e in enumerate(m)):
            raise ValueError("polynomial is not univariate in the given variable")
        coeffs[m[var]] = c
    return coeffs


def _univariate_from_coeffs(ring: PolyRing, var: int, coeffs: dict) -> Polynomial:
    acc = {}
    for e, c in coeffs.items():
        mono = tuple(e if i == var else 0 for i in range(ring.nvars))
        acc[mono] = c
    return ring.from_dict(acc)


def _uni_derivative(field, coeffs: dict) -> dict:
    out = {}
    for e, c in coeffs.items():
        if e:
            d = field.mul(field.from_int(e), c)
            if not field.is_zero(d):
                out[e - 1] = d
    return out


def _uni_divmod(field, a: dict, b: dict) -> Tuple[dict, dict]:
    db = max(b)
    lb = b[db]
    q: dict = {}
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        c = field.div(r[dr], lb)
        q[dr - db] = c
        for e, cb in b.items():
            k = dr - db + e
            s = field.sub(r.get(k, field.zero), field.mul(c, cb))
            if field.is_zero(s):
                r.pop(k, None)
            else:
                r[k] = s
    return q, r

def _uni_gcd(field, a: dict, b: dict) -> dict:
    a, b = dict(a), dict(b)
    while b:
        _, r = _uni_divmod(field, a, b)
        a, b = b, r
    if a:
        inv = field.inv(a[max(a)])
        a = {e: field.mul(inv, c) for e, c in a.items()}
    return a


def _uni_squarefree(field, coeffs: dict) -> dict:
    """Squarefree part of a nonzero univariate polynomial (monic output)."""
    if max(coeffs) == 0:
        return {0: field.one}
    deriv = _uni_derivative(field, coeffs)
    if not deriv:
        # characteristic p and f = g(x^p); F_p is perfect, so the p-th
        # root has the same coefficients at exponents divided by p
        p = field.characteristic
        root = {e // p: c for e, c in coeffs.items()}
        return _uni_squarefree(field, root)
    g = _uni_gcd(field, coeffs, deriv)
    q, r = _uni_divmod(field, coeffs, g)
    if r:
        raise RuntimeError("squarefree division was not exact")
    inv = field.inv(q[max(q)])
    return {e: field.mul(inv, c) for e, c in q.items()}


# ---------------------------------------------------------------------------
# zero-dimensional radical
# ---------------------------------------------------------------------------


def _radical_zero_dim(ideal: Ideal) -> Ideal:
    """Radical of an ideal with finite vanishing set (any characteristic
    with separable or F_p-perfect eliminants)."""
    ring = ideal.ring
    field = ring.field
    current = ideal
    for _ in range(ring.nvars + 2):
        changed = False
        for v in range(ring.nvars):
            others = tuple(i for i in range(ring.nvars) if i != v)
            contraction = eliminate(current, others, subring=False)
            if not contraction.gens:
                raise ValueError(
                    "ideal is not zero-dimensional: no eliminant for %s"
                    % ring.variables[v]
                )
            f = contraction.gens[0]
            coeffs = _univariate_coeffs(f, v)
            sf = _uni_squarefree(field, coeffs)
            if sf != coeffs:
                s = _univariate_from_coeffs(ring, v, sf)
                if not current.contains(s):
                    current = current + Ideal(ring, [s])
                    changed = True
        if not changed:
            return current
    raise RuntimeError("zero-dimensional radical did not stabilize")


# ---------------------------------------------------------------------------
# general radical
# ---------------------------------------------------------------------------


def _derivative(f: Polynomial, var: int) -> Polynomial:
    field = f.ring.field
    acc = {}
    for m, c in f.terms:
        e = m[var]
        if e:
            d = field.mul(field.from_int(e), c)
            if not field.is_zero(d):
                m2 = tuple(x - 1 if i == var else x for i, x in enumerate(m))
                acc[m2] = field.add(acc.get(m2, field.zero), d)
    return f.ring.from_dict(acc)


def _min_degree_element(gens: Sequence[Polynomial], var: int) -> Polynomial:
    return min(
        enumerate(gens), key=lambda t: (t[1].degree_in(var), t[0])
    )[1]


def _pseudo_quotient(f: Polynomial, g: Polynomial, var: int) -> Polynomial:
    """q with lc_g^k * f = q * g for some k, valid when g | f over the
    rational function field in the other variables."""
    ring = f.ring
    dg, lcg = leading_data_in_var(g, var)
    q = ring.zero()
    r = f
    guard = f.degree_in(var) - dg + 2
    while not r.is_zero() and r.degree_in(var) >= dg:
        if guard < 0:
            raise RuntimeError("pseudo-division did not terminate")
        guard -= 1
        dr, lcr = leading_data_in_var(r, var)
        shift = tuple(
            dr - dg if i == var else 0 for i in range(ring.nvars)
        )
        step = Polynomial(ring, ((shift, ring.field.one),)) * lcr
        q = q * lcg + step
        r = r * lcg - step * g
    if not r.is_zero():
        raise RuntimeError("relative squarefree division was not exact")
    return q


def _leading_block_coefficient(g: Polynomial, dep: Sequence[int], order) -> Polynomial:
    """The coefficient (a polynomial in the other variables) of the
    largest dep-monomial appearing in g, under the given block order."""
    okey = order.key(g.ring.nvars)
    lead = max((m for m, _ in g.terms), key=okey)
    pattern = tuple(lead[i] for i in dep)
    acc = {}
    depset = set(dep)
    for m, c in g.terms:
        if tuple(m[i] for i in dep) == pattern:
            stripped = tuple(0 if i in depset else e for i, e in enumerate(m))
            acc[stripped] = c
    return g.ring.from_dict(acc)


def _relative_squarefree(ideal: Ideal, dep: Sequence[int], j: int) -> Polynomial:
    """Squarefree part over K(U) of the eliminant of variable j."""
    ring = ideal.ring
    other_dep = tuple(i for i in dep if i != j)
    contraction = (
        eliminate(ideal, other_dep, subring=False) if other_dep else ideal
    )
    if not contraction.gens:
        raise RuntimeError(
            "no eliminant for %s: independent set was not maximal"
            % ring.variables[j]
        )
    sub_gb = contraction.groebner(elim_order((j,)))
    f = _min_degree_element(sub_gb.polys, j)
    if f.degree_in(j) == 0:
        raise RuntimeError("eliminant lies in the independent variables")
    df = _derivative(f, j)
    if df.is_zero():
        if isinstance(ring.field, PrimeField):
            raise NotImplementedError(
                "radical over F_p with an inseparable eliminant"
            )
        raise RuntimeError("zero derivative of a positive-degree eliminant")
    pair_gb = Ideal(ring, [f, df]).groebner(elim_order((j,)))
    g0 = _min_degree_element(pair_gb.polys, j)
    if g0.degree_in(j) == 0:
        return f
    return _pseudo_quotient(f, g0, j)


def _radical_general(ideal: Ideal, depth: int) -> Ideal:
    if depth > _MAX_DEPTH:
        raise RuntimeError("radical recursion exceeded its depth cap")
    ring = ideal.ring
    gb = ideal.groebner()
    if len(gb) == 0:
        return Ideal(ring, [])
    if gb.is_unit():
        return Ideal(ring, [ring.one()])
    monos = _monomial_generators(ideal)
    if monos is not None:
        return _radical_of_monomials(ring, monos)
    lms = gb.leading_monomials()
    independent = _max_independent_set(lms, ring.nvars)
    if not independent:
        return _radical_zero_dim(ideal)
    dep = tuple(i for i in range(ring.nvars) if i not in set(independent))
    border = elim_order(dep)
    factors: List[Polynomial] = []

    def harvest(source: Ideal):
        for g in source.groebner(border).polys:
            lc = _leading_block_coefficient(g, dep, border)
            if lc.is_constant():
                continue
            if all(lc != seen for seen in factors):
                factors.append(lc)

    harvest(ideal)
    squarefree_parts = [
        _relative_squarefree(ideal, dep, j) for j in dep
    ]
    enriched = ideal + Ideal(ring, squarefree_parts)
    harvest(enriched)
    if not factors:
        return enriched
    generic = enriched
    for h in factors:
        generic = saturate_by_poly(generic, h)
    hprod = ring.one()
    for h in factors:
        hprod = hprod * h
    rest = _radical_general(ideal + Ideal(ring, [hprod]), depth + 1)
    return intersect(generic, rest)


def radical(ideal: Ideal) -> Ideal:
    """The radical √I, as an ideal with its reduced degrevlex basis
    attached.  Works for any ideal over Q; over F_p an inseparable
    positive-dimensional case raises NotImplementedError instead of
    risking a wrong answer."""
    return _radical_general(ideal, 0)
