"""Ideal-theoretic operations: elimination, intersection, quotient,
saturation (with saturation index), subring contraction/extension,
radical membership and ideal equality.

All operations are exact and deterministic.  Variable elimination is the
workhorse: it is implemented through block elimination orders, and the
other operations (intersection via the auxiliary-variable trick,
saturation via iterated quotients or the inverted-element trick) reduce
to it.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .poly_core import (
    DEGREVLEX,
    PolyRing,
    Polynomial,
    elim_order,
    mono_div,
    mono_divides,
)
from .groebner import Ideal


# ---------------------------------------------------------------------------
# moving polynomials between rings
# ---------------------------------------------------------------------------


def map_polynomial(
    f: Polynomial, target: PolyRing, position_map: Sequence[Optional[int]]
) -> Polynomial:
    """Rename variables: source variable i becomes target variable
    position_map[i].  A None entry means the source variable must not
    occur in f."""
    acc: dict = {}
    field = target.field
    for m, c in f.terms:
        e = [0] * target.nvars
        for i, exp in enumerate(m):
            if not exp:
                continue
            j = position_map[i]
            if j is None:
                raise ValueError(
                    "polynomial uses variable %r outside the target ring"
                    % (f.ring.variables[i],)
                )
            e[j] += exp
        key = tuple(e)
        s = field.add(acc.get(key, field.zero), c)
        if field.is_zero(s):
            acc.pop(key, None)
        else:
            acc[key] = s
    return target.from_dict(acc)


def _fresh_name(base: str, taken: Sequence[str]) -> str:
    name = base
    while name in taken:
        name = name + "_"
    return name


class SubringEmbedding:
    """K[subset of the variables] sitting inside the big ring.

    ``kept`` lists the big-ring positions of the subring variables in
    ascending order; the subring reuses the same names and field, with a
    degrevlex default order.
    """

    def __init__(self, big: PolyRing, kept: Sequence[int]):
        kept = tuple(sorted(kept))
        if not kept:
            raise ValueError("subring needs at least one variable")
        if kept[-1] >= big.nvars or kept[0] < 0:
            raise ValueError("kept positions out of range")
        self.big = big
        self.kept = kept
        self.dropped = tuple(i for i in range(big.nvars) if i not in set(kept))
        self.sub = PolyRing(
            tuple(big.variables[i] for i in kept), big.field, DEGREVLEX
        )
        self._down: List[Optional[int]] = [None] * big.nvars
        for s, b in enumerate(kept):
            self._down[b] = s

    def lift(self, f: Polynomial) -> Polynomial:
        """Subring polynomial viewed in the big ring."""
        if f.ring != self.sub:
            raise ValueError("lift expects a subring polynomial")
        return map_polynomial(f, self.big, list(self.kept))

    def restrict(self, f: Polynomial) -> Polynomial:
        """Big-ring polynomial moved down; it must avoid dropped variables."""
        if f.ring != self.big:
            raise ValueError("restrict expects a big-ring polynomial")
        return map_polynomial(f, self.sub, self._down)

    def extend_ideal(self, ideal: Ideal) -> Ideal:
        if ideal.ring != self.sub:
            raise ValueError("extend expects a subring ideal")
        return Ideal(self.big, [self.lift(g) for g in ideal.gens])

    def contract_ideal(self, ideal: Ideal) -> Ideal:
        """The intersection of the ideal with the subring."""
        if ideal.ring != self.big:
            raise ValueError("contract expects a big-ring ideal")
        kept = _eliminate_ambient(ideal, self.dropped)
        return Ideal(self.sub, [self.restrict(g) for g in kept])


def extend(ideal: Ideal, big: PolyRing) -> Ideal:
    """A subring ideal reinterpreted in a larger ring, matching variables
    by name; raises if a subring variable is missing from the big ring."""
    sub = ideal.ring
    positions: List[Optional[int]] = []
    for name in sub.variables:
        if name not in big.variables:
            raise ValueError(
                "embedding mismatch: variable %r not in the big ring" % name
            )
        positions.append(big.index(name))
    return Ideal(big, [map_polynomial(g, big, positions) for g in ideal.gens])


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------


def _eliminate_ambient(ideal: Ideal, drop: Sequence[int]) -> List[Polynomial]:
    """Generators of I ∩ K[remaining variables], still living in the big
    ring.

    They are read off the reduced Groebner basis for the block order
    that puts the dropped variables first: the basis elements free of
    dropped variables form a reduced Groebner basis of the elimination
    ideal for the induced degrevlex order on the remaining variables.
    """
    drop = tuple(sorted(set(drop)))
    if not drop:
        return list(ideal.groebner(DEGREVLEX).polys)
    if len(drop) >= ideal.ring.nvars:
        raise ValueError("cannot eliminate every variable")
    gb = ideal.groebner(elim_order(drop))
    dropset = set(drop)
    return [g for g in gb.polys if not (g.variables_used() & dropset)]


def eliminate(ideal: Ideal, drop, subring: bool = True):
    """The elimination ideal I ∩ K[remaining variables].

    ``drop`` lists the variables to eliminate, as indices or names.  By
    default the result lives in the subring on the remaining variables
    (returned as an Ideal of that ring); with subring=False it is
    returned as an ideal of the original ring instead, which several
    internal constructions prefer.
    """
    drop = [
        ideal.ring.index(v) if isinstance(v, str) else v for v in drop
    ]
    kept_polys = _eliminate_ambient(ideal, drop)
    if not subring:
        return Ideal(ideal.ring, kept_polys)
    dropset = set(drop)
    kept_positions = [i for i in range(ideal.ring.nvars) if i not in dropset]
    emb = SubringEmbedding(ideal.ring, kept_positions)
    return Ideal(emb.sub, [emb.restrict(g) for g in kept_polys])


# ---------------------------------------------------------------------------
# intersection
# ---------------------------------------------------------------------------


def _with_scaffold_variable(ring: PolyRing) -> Tuple[PolyRing, List[int]]:
    """A ring with one fresh variable in front; returns it and the position
    map old -> new (shift by one)."""
    name = _fresh_name("t", ring.variables)
    big = PolyRing((name,) + ring.variables, ring.field, DEGREVLEX)
    return big, [i + 1 for i in range(ring.nvars)]


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """I ∩ J via the auxiliary variable t: (t·I + (1-t)·J) ∩ K[x]."""
    if a.ring != b.ring:
        raise ValueError("ring mismatch")
    ring = a.ring
    big, shift = _with_scaffold_variable(ring)
    t = big.gen(0)
    one_minus_t = big.one() - t
    gens = [t * map_polynomial(f, big, shift) for f in a.gens]
    gens += [one_minus_t * map_polynomial(g, big, shift) for g in b.gens]
    kept = _eliminate_ambient(Ideal(big, gens), (0,))
    down: List[Optional[int]] = [None] + list(range(ring.nvars))
    return Ideal(ring, [map_polynomial(g, ring, down) for g in kept])


def intersect_many(ideals: Sequence[Ideal]) -> Ideal:
    if not ideals:
        raise ValueError("need at least one ideal")
    acc = ideals[0]
    for nxt in ideals[1:]:
        acc = intersect(acc, nxt)
    return acc


# ---------------------------------------------------------------------------
# quotient
# ---------------------------------------------------------------------------


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g when g divides f exactly; raises ValueError otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    field = ring.field
    q: dict = {}
    rem = f
    g_lm = g.leading_monomial()
    g_lc = g.leading_coefficient()
    while not rem.is_zero():
        m = rem.leading_monomial()
        c = rem.leading_coefficient()
        if not mono_divides(g_lm, m):
            raise ValueError("polynomial division is not exact")
        qm = mono_div(m, g_lm)
        qc = field.div(c, g_lc)
        q[qm] = field.add(q.get(qm, field.zero), qc)
        rem = rem - Polynomial(ring, ((qm, qc),)) * g
    return ring.from_dict(q)


def quotient_by_poly(ideal: Ideal, f: Polynomial) -> Ideal:
    """I : f = (I ∩ (f)) / f for a single nonzero polynomial."""
    if f.is_zero():
        raise ZeroDivisionError("quotient by the zero polynomial")
    meet = intersect(ideal, Ideal(ideal.ring, [f]))
    return Ideal(ideal.ring, [exact_divide(g, f) for g in meet.gens])


def quotient(ideal: Ideal, other) -> Ideal:
    """The colon ideal I : J (or I : f)."""
    if isinstance(other, Polynomial):
        return quotient_by_poly(ideal, other)
    if other.ring != ideal.ring:
        raise ValueError("ring mismatch")
    gens = [g for g in other.gens if not g.is_zero()]
    if not gens:
        raise ZeroDivisionError("quotient by the zero ideal")
    parts = [quotient_by_poly(ideal, g) for g in gens]
    return intersect_many(parts)


# ---------------------------------------------------------------------------
# saturation
# ---------------------------------------------------------------------------


def saturate(ideal: Ideal, other) -> Tuple[Ideal, int]:
    """The saturation I : J^∞ together with its saturation index.

    Iterates the quotient I, I:J, I:J², ... until it stabilizes; the
    index is the least s with I : J^s = I : J^(s+1), i.e. 0 when I is
    already saturated.
    """
    current = ideal
    index = 0
    while True:
        nxt = quotient(current, other)
        if nxt == current:
            return current, index
        current = nxt
        index += 1


def saturate_by_poly(ideal: Ideal, f: Polynomial) -> Ideal:
    """I : f^∞ in one Groebner computation, via a fresh inverse variable:
    (I + (1 - t·f)) ∩ K[x]."""
    if f.is_zero():
        raise ZeroDivisionError("saturation by the zero polynomial")
    ring = ideal.ring
    big, shift = _with_scaffold_variable(ring)
    t = big.gen(0)
    gens = [map_polynomial(g, big, shift) for g in ideal.gens]
    gens.append(big.one() - t * map_polynomial(f, big, shift))
    kept = _eliminate_ambient(Ideal(big, gens), (0,))
    down: List[Optional[int]] = [None] + list(range(ring.nvars))
    return Ideal(ring, [map_polynomial(g, ring, down) for g in kept])


def saturate_by_variable(ideal: Ideal, var_index: int) -> Ideal:
    """I : x_v^∞ for a homogeneous ideal, in a single Groebner computation.

    Uses the reduced basis for the block order that eliminates every
    variable except x_v (equivalently: degrevlex with x_v last); for a
    homogeneous ideal, dividing each basis element by its highest possible
    power of x_v generates the saturation.  Falls back to the generic
    inverse-variable method for inhomogeneous input.
    """
    ring = ideal.ring
    if not ideal.is_homogeneous():
        return saturate_by_poly(ideal, ring.gen(var_index))
    block = tuple(i for i in range(ring.nvars) if i != var_index)
    gb = ideal.groebner(elim_order(block))
    out = []
    for g in gb.polys:
        k = min(m[var_index] for m, _ in g.terms)
        if k:
            e = [0] * ring.nvars
            e[var_index] = k
            out.append(
                exact_divide(g, Polynomial(ring, ((tuple(e), ring.field.one),)))
            )
        else:
            out.append(g)
    return Ideal(ring, out)


def saturate_homogeneous(ideal: Ideal) -> Ideal:
    """Saturation with respect to the irrelevant maximal ideal (x_0..x_n):
    the intersection over all variables of I : x_i^∞."""
    ring = ideal.ring
    parts = [saturate_by_variable(ideal, i) for i in range(ring.nvars)]
    return intersect_many(parts)


# ---------------------------------------------------------------------------
# radical membership, equality
# ---------------------------------------------------------------------------


def radical_membership(f: Polynomial, ideal: Ideal) -> bool:
    """f ∈ √I, by the inverse-variable criterion: 1 ∈ I + (1 - t·f)."""
    if f.is_zero():
        return True
    ring = ideal.ring
    big, shift = _with_scaffold_variable(ring)
    t = big.gen(0)
    gens = [map_polynomial(g, big, shift) for g in ideal.gens]
    gens.append(big.one() - t * map_polynomial(f, big, shift))
    return Ideal(big, gens).is_unit()


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    """Equality of ideals via their unique reduced Groebner bases."""
    return a == b
