"""Reduced Groebner bases via Buchberger's algorithm, and the Ideal type.

The engine is deliberately classical: normal selection (smallest lcm
first), the coprime and chain criteria to discard useless pairs, full
tail reduction, and a final minimalization + interreduction pass so the
returned basis is *the* reduced Groebner basis of the ideal for the
requested order -- unique, monic, and sorted.  All arithmetic is exact.

Determinism contract: given the same generators in the same order and
the same term order, every run produces the identical reduced basis,
and the reduced basis itself does not depend on the generator order at
all (uniqueness of reduced Groebner bases).
"""

from __future__ import annotations

import threading
from typing import Iterable, List, Optional, Sequence

from .poly_core import (
    DEGREVLEX,
    Field,
    Monomial,
    PolyRing,
    Polynomial,
    TermOrder,
    mono_degree,
    mono_div,
    mono_divides,
    mono_gcd,
    mono_lcm,
    mono_mul,
    mono_one,
)


# ---------------------------------------------------------------------------
# internal working form: dict of terms + cached sort keys
# ---------------------------------------------------------------------------


class _Work:
    """A basis element in working form for one fixed term order."""

    __slots__ = ("lm", "lc", "tail")

    def __init__(self, lm: Monomial, lc, tail: tuple):
        self.lm = lm
        self.lc = lc
        # tail: tuple of (monomial, coefficient), any order (lm excluded)
        self.tail = tail


def _to_work(f: Polynomial, okey) -> Optional[_Work]:
    """Monic working copy; keeping reducers monic tames coefficient growth."""
    if f.is_zero():
        return None
    terms = sorted(f.terms, key=lambda t: okey(t[0]), reverse=True)
    lm, lc = terms[0]
    field = f.ring.field
    if not field.eq(lc, field.one):
        inv = field.inv(lc)
        terms = [(m, field.mul(inv, c)) for m, c in terms]
        lc = field.one
    return _Work(lm, lc, tuple(terms[1:]))


def _from_dict(ring: PolyRing, acc: dict) -> Polynomial:
    return ring.from_dict(acc)


def _reduce_full(acc: dict, basis: Sequence[_Work], okey, field: Field) -> dict:
    """Fully reduce the polynomial given as {mono: coeff} modulo basis.

    Deterministic: always cancels the largest reducible monomial first
    and always uses the first basis element (in list order) whose leading
    monomial divides it.  Returns the normal form as a dict.
    """
    keys = {m: okey(m) for m in acc}
    out: dict = {}
    while acc:
        m = max(acc, key=keys.__getitem__)
        c = acc.pop(m)
        del keys[m]
        red = None
        for g in basis:
            if mono_divides(g.lm, m):
                red = g
                break
        if red is None:
            out[m] = c
            continue
        t = mono_div(m, red.lm)
        factor = field.div(c, red.lc)
        for mm, cc in red.tail:
            m2 = mono_mul(mm, t)
            s = field.sub(acc.get(m2, field.zero), field.mul(factor, cc))
            if field.is_zero(s):
                if m2 in acc:
                    del acc[m2]
                    del keys[m2]
            else:
                if m2 not in acc:
                    keys[m2] = okey(m2)
                acc[m2] = s
    return out


def _spoly_dict(f: _Work, g: _Work, field: Field) -> dict:
    """The S-polynomial of f and g as a term dict."""
    L = mono_lcm(f.lm, g.lm)
    tf = mono_div(L, f.lm)
    tg = mono_div(L, g.lm)
    acc: dict = {}
    inv_f = field.inv(f.lc)
    for mm, cc in f.tail:
        m2 = mono_mul(mm, tf)
        s = field.add(acc.get(m2, field.zero), field.mul(inv_f, cc))
        if field.is_zero(s):
            acc.pop(m2, None)
        else:
            acc[m2] = s
    inv_g = field.inv(g.lc)
    for mm, cc in g.tail:
        m2 = mono_mul(mm, tg)
        s = field.sub(acc.get(m2, field.zero), field.mul(inv_g, cc))
        if field.is_zero(s):
            acc.pop(m2, None)
        else:
            acc[m2] = s
    return acc


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------


def buchberger_reduced(
    generators: Iterable[Polynomial],
    ring: PolyRing,
    order: TermOrder,
    strategy: str = "normal",
    stats: Optional[dict] = None,
) -> List[Polynomial]:
    """Compute the reduced Groebner basis of the generated ideal.

    Returns monic polynomials sorted by ascending leading monomial; the
    zero ideal yields the empty list.  ``strategy`` selects the pair
    order: "normal" (smallest lcm first) or "sugar" (smallest sugar
    degree first, lcm as tie-break); both give the same reduced basis.
    If ``stats`` is a dict it is filled with pair/reduction counters.
    """
    if strategy not in ("normal", "sugar"):
        raise ValueError("unknown selection strategy %r" % strategy)
    okey = order.key(ring.nvars)
    field = ring.field
    work: List[_Work] = []
    sugar: List[int] = []
    for f in generators:
        if f.ring != ring:
            raise ValueError("generator ring mismatch")
        w = _to_work(f, okey)
        if w is not None:
            work.append(w)
            sugar.append(mono_degree(w.lm) if not w.tail else max(
                mono_degree(m) for m in [w.lm] + [t[0] for t in w.tail]
            ))
    pairs = {(i, j) for i in range(len(work)) for j in range(i)}
    counters = {
        "pairs_total": len(pairs),
        "pairs_coprime_skipped": 0,
        "pairs_chain_skipped": 0,
        "pairs_reduced_to_zero": 0,
        "basis_elements_added": 0,
    }

    def pair_sugar(i: int, j: int, L: Monomial) -> int:
        si = sugar[i] + mono_degree(L) - mono_degree(work[i].lm)
        sj = sugar[j] + mono_degree(L) - mono_degree(work[j].lm)
        return max(si, sj)

    def selection_key(p):
        L = mono_lcm(work[p[0]].lm, work[p[1]].lm)
        if strategy == "sugar":
            return (pair_sugar(p[0], p[1], L), okey(L), p)
        return (okey(L), p)

    def chain_criterion(i: int, j: int, L: Monomial) -> bool:
        for k in range(len(work)):
            if k == i or k == j:
                continue
            if not mono_divides(work[k].lm, L):
                continue
            a = (max(i, k), min(i, k))
            b = (max(j, k), min(j, k))
            if a not in pairs and b not in pairs:
                return True
        return False

    while pairs:
        i, j = min(pairs, key=selection_key)
        pairs.discard((i, j))
        fi, fj = work[i], work[j]
        L = mono_lcm(fi.lm, fj.lm)
        if mono_gcd(fi.lm, fj.lm) == mono_one(ring.nvars):
            counters["pairs_coprime_skipped"] += 1
            continue
        if chain_criterion(i, j, L):
            counters["pairs_chain_skipped"] += 1
            continue
        rem = _reduce_full(_spoly_dict(fi, fj, field), work, okey, field)
        if not rem:
            counters["pairs_reduced_to_zero"] += 1
            continue
        terms = sorted(rem.items(), key=lambda t: okey(t[0]), reverse=True)
        lm, lc = terms[0]
        if not field.eq(lc, field.one):
            inv = field.inv(lc)
            terms = [(m, field.mul(inv, c)) for m, c in terms]
            lc = field.one
        new = _Work(lm, lc, tuple(terms[1:]))
        work.append(new)
        sugar.append(max(mono_degree(m) for m, _ in terms))
        counters["basis_elements_added"] += 1
        t = len(work) - 1
        for k in range(t):
            pairs.add((t, k))
        counters["pairs_total"] += t

    # Minimalize: drop elements whose leading monomial is divisible by
    # another element's leading monomial (prefer keeping earlier, smaller lm).
    order_idx = sorted(range(len(work)), key=lambda i: okey(work[i].lm))
    minimal: List[_Work] = []
    for i in order_idx:
        lm = work[i].lm
        if any(mono_divides(g.lm, lm) for g in minimal):
            continue
        minimal.append(work[i])

    # Interreduce: replace each element by its normal form modulo the others.
    reduced: List[Polynomial] = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        acc = {g.lm: g.lc}
        for mm, cc in g.tail:
            acc[mm] = cc
        nf = _reduce_full(acc, others, okey, field)
        if not nf:
            continue  # cannot happen for minimal lms, kept for safety
        poly = _from_dict(ring, nf)
        reduced.append(poly.monic())
    reduced.sort(key=lambda f: okey(_lm_under(f, okey)))
    if stats is not None:
        stats.update(counters)
        stats["basis_size"] = len(reduced)
    return reduced


def _lm_under(f: Polynomial, okey) -> Monomial:
    return max((m for m, _ in f.terms), key=okey)


# ---------------------------------------------------------------------------
# public normal form
# ---------------------------------------------------------------------------


def normal_form(
    f: Polynomial, basis: Sequence[Polynomial], order: TermOrder
) -> Polynomial:
    """Fully reduce f modulo the basis under the given order.

    When the basis is a Groebner basis this is the unique normal form;
    for an arbitrary basis it is still deterministic (largest reducible
    term first, first applicable divisor in list order).
    """
    ring = f.ring
    okey = order.key(ring.nvars)
    work = [w for w in (_to_work(g, okey) for g in basis) if w is not None]
    acc = dict(f.terms)
    return _from_dict(ring, _reduce_full(acc, work, okey, ring.field))


# ---------------------------------------------------------------------------
# GroebnerBasis / Ideal
# ---------------------------------------------------------------------------


class GroebnerBasis:
    """A reduced Groebner basis, frozen together with its term order."""

    def __init__(self, ring: PolyRing, order: TermOrder, polys: Sequence[Polynomial]):
        self.ring = ring
        self.order = order
        self.polys = tuple(polys)
        self.reduced = True
        okey = order.key(ring.nvars)
        self._okey = okey
        self._work = [
            w for w in (_to_work(g, okey) for g in self.polys) if w is not None
        ]

    def verify(self) -> bool:
        """Re-certify the defining properties: monic and fully reduced
        generators, and every S-polynomial reducing to zero."""
        field = self.ring.field
        for idx, w in enumerate(self._work):
            if not field.eq(w.lc, field.one):
                return False
            for other_idx, other in enumerate(self._work):
                if other_idx == idx:
                    continue
                if mono_divides(other.lm, w.lm):
                    return False
                if any(mono_divides(other.lm, m) for m, _ in w.tail):
                    return False
        for i in range(len(self._work)):
            for j in range(i):
                s = _spoly_dict(self._work[i], self._work[j], field)
                if _reduce_full(s, self._work, self._okey, field):
                    return False
        return True

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def leading_monomials(self) -> List[Monomial]:
        return [w.lm for w in self._work]

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("ring mismatch")
        acc = dict(f.terms)
        return _from_dict(
            self.ring, _reduce_full(acc, self._work, self._okey, self.ring.field)
        )

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant() and not self.polys[0].is_zero()

    def __repr__(self) -> str:
        return "GroebnerBasis(%d elements, %r)" % (len(self.polys), self.order)


class Ideal:
    """An ideal of a polynomial ring, with per-order Groebner basis cache.

    The cache is guarded by a lock so an Ideal can be shared between
    threads; each (ideal, order) pair is computed at most once.
    """

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial]):
        gens = []
        for g in generators:
            if isinstance(g, str):
                from .poly_core import parse_polynomial

                g = parse_polynomial(g, ring)
            if g.ring != ring:
                raise ValueError("generator ring mismatch")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.gens = tuple(gens)
        self._gb_cache: dict = {}
        self._lock = threading.Lock()

    # -- Groebner bases -------------------------------------------------------

    def groebner(self, order: Optional[TermOrder] = None) -> GroebnerBasis:
        if order is None:
            order = self.ring.order
        with self._lock:
            gb = self._gb_cache.get(order)
        if gb is not None:
            return gb
        polys = buchberger_reduced(self.gens, self.ring, order)
        gb = GroebnerBasis(self.ring, order, polys)
        with self._lock:
            self._gb_cache.setdefault(order, gb)
            return self._gb_cache[order]

    # -- membership and comparison --------------------------------------------

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        return self.groebner(DEGREVLEX).contains(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        gb = self.groebner(DEGREVLEX)
        return all(gb.contains(g) for g in other.gens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        if self.gens == other.gens:
            return True
        return (
            self.groebner(DEGREVLEX).polys == other.groebner(DEGREVLEX).polys
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.groebner(DEGREVLEX).polys))

    # -- simple structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.gens)

    def is_unit(self) -> bool:
        return self.groebner(DEGREVLEX).is_unit()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def plus(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise ValueError("ring mismatch")
        return Ideal(self.ring, self.gens + other.gens)

    def __add__(self, other: "Ideal") -> "Ideal":
        return self.plus(other)

    def reduced_generators(self, order: Optional[TermOrder] = None) -> List[Polynomial]:
        """The reduced Groebner basis as a plain list (canonical generators)."""
        return list(self.groebner(order).polys)

    def __repr__(self) -> str:
        inside = ", ".join(repr(g) for g in self.gens[:4])
        if len(self.gens) > 4:
            inside += ", ... (%d generators)" % len(self.gens)
        return "Ideal(%s)" % inside


def initial_ideal(ideal: Ideal, order: Optional[TermOrder] = None) -> Ideal:
    """The monomial ideal of leading monomials under the given order."""
    ring = ideal.ring
    if order is None:
        order = ring.order
    gb = ideal.groebner(order)
    gens = []
    for w in gb._work:
        gens.append(Polynomial(ring, ((w.lm, ring.field.one),)))
    return Ideal(ring, gens)


def ideal_membership(f: Polynomial, ideal: Ideal) -> bool:
    """f in I, decided by normal form against a degrevlex Groebner basis."""
    return ideal.contains(f)
