"""Partial elimination ideals, secant cones and loci, and projection
fibre lengths.

Setting: Z = Proj(R/I) for a homogeneous ideal I in R = K[x0..xn], and a
closed point p used as the centre of the linear projection
pi_p : P^n \\ {p} -> P^{n-1}.

After a linear change of coordinates moving p to (1:0:...:0), write
elements of the transformed ideal as polynomials in the first variable.
The k-th partial elimination ideal K_k collects the leading coefficients
(which live in the subring S generated by the other variables) of all
elements whose degree in the first variable is at most k.  These form an
ascending chain starting at the elimination ideal K_0 = I ∩ S, and they
control the fibres of pi_p: the fibre over a target point q has length
1 + max{k : K_k ⊆ (ideal of q)}.

The whole chain falls out of a single Groebner basis G for the block
order eliminating the first variable: for each k, the leading
coefficients of the members of G with first-variable degree ≤ k are a
Groebner basis of K_k in the induced order on S.

Built on top of the chain:

* secant cones (radical of the extension of K_{k-1}) and secant loci;
* single-projection fibre lengths, cross-checked at runtime against the
  multiplicity of the scheme-theoretic fibre — the library fails loudly
  if the two computations ever disagree;
* relative chains for a second projection applied after a first one;
* clever decompositions (when two centres' contractions re-assemble the
  ideal up to saturation) and the resulting product formula for fibre
  lengths of projections from a line;
* a degree-wise linear-algebra oracle computing graded pieces of K_k
  directly from the definition, independent of the Groebner route;
* generators for determinantal fixtures (minor ideals, rational normal
  scrolls).
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import List, Optional, Sequence, Tuple, Union

from .poly_core import (
    DEGREVLEX,
    ClosedPoint,
    LinearMap,
    PolyRing,
    Polynomial,
    build_point_transform,
    elim_order,
    leading_data_in_var,
)
from .groebner import GroebnerBasis, Ideal
from .ideal_ops import (
    SubringEmbedding,
    map_polynomial,
    saturate_by_variable,
    saturate_homogeneous,
)
from .hilbert import hilbert_data, intersection_length
from .radical import radical


class PreconditionError(ValueError):
    """A geometric precondition of the requested operation fails."""


class InternalConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


# ---------------------------------------------------------------------------
# the chain
# ---------------------------------------------------------------------------


class PEIChain:
    """The partial elimination ideals of an ideal at a projection centre.

    Attributes:
        ideal:           the input ideal, in the original ring.
        point:           the projection centre p.
        transform:       the linear substitution moving p's ideal onto
                         the last n variables (applied to polynomials).
        working_ring:    the ring holding the transformed ideal; its
                         first variable is the direction of p, and the
                         remaining variables are named after the
                         original coordinates they restrict to.
        embedding:       the subring embedding of those remaining
                         variables.
        subring:         S, the polynomial ring of the projection target.
        working_basis:   reduced Groebner basis of the transformed ideal
                         under the block order eliminating the first
                         variable.
        k0:              the largest first-variable degree over that
                         basis; the chain is K_0 ⊆ ... ⊆ K_{k0}, and
                         K_k = K_{k0} for every k > k0 (the unit ideal
                         whenever p is off the scheme).
        ideals:          tuple of the chain ideals K_0..K_{k0} in S,
                         each stored by its reduced Groebner basis.
        point_on_scheme: whether every generator of the ideal vanishes
                         at p.
        iso_warning:     set on relative chains when the first
                         projection could not be certified injective.
    """

    def __init__(
        self,
        ideal: Ideal,
        point: ClosedPoint,
        transform: LinearMap,
        working_ring: PolyRing,
        embedding: SubringEmbedding,
        working_basis: GroebnerBasis,
        k0: int,
        ideals: Tuple[Ideal, ...],
        point_on_scheme: bool,
    ):
        self.ideal = ideal
        self.point = point
        self.transform = transform
        self.working_ring = working_ring
        self.embedding = embedding
        self.subring = embedding.sub
        self.working_basis = working_basis
        self.k0 = k0
        self.ideals = ideals
        self.point_on_scheme = point_on_scheme
        self.iso_warning = False

    # -- moving polynomials around ------------------------------------

    def to_working(self, f: Polynomial) -> Polynomial:
        """Original-ring polynomial rewritten in the moved coordinates."""
        moved = self.transform.apply(f)
        if self.working_ring == self.ideal.ring:
            return moved
        return map_polynomial(
            moved, self.working_ring, list(range(self.working_ring.nvars))
        )

    def from_working(self, f: Polynomial) -> Polynomial:
        """Working-ring polynomial pulled back to the original ring."""
        ring = self.ideal.ring
        if self.working_ring != ring:
            f = map_polynomial(f, ring, list(range(ring.nvars)))
        return self.transform.inverse().apply(f)

    def to_ambient(self, f: Polynomial) -> Polynomial:
        """Subring polynomial pulled back to the original ring."""
        return self.from_working(self.embedding.lift(f))

    # -- chain access ---------------------------------------------------

    def partial_ideal(self, k: int) -> Ideal:
        """K_k as an ideal of the subring (K_{-1} = 0; stable past k0)."""
        if k < 0:
            return Ideal(self.subring, [])
        return self.ideals[min(k, self.k0)]

    def ambient_ideal(self, k: int) -> Ideal:
        """The extension K_k·R pulled back to the original coordinates."""
        ring = self.ideal.ring
        return Ideal(
            ring, [self.to_ambient(g) for g in self.partial_ideal(k).gens]
        )

    @property
    def first_unit_index(self) -> Optional[int]:
        """Least k with K_k = S, or None if the chain stays proper."""
        for k, ide in enumerate(self.ideals):
            if ide.is_unit():
                return k
        return None

    def max_contained_index(self, target: Ideal) -> int:
        """max{k : K_k ⊆ target}, or -1 when even K_0 is not contained.

        The chain is ascending, so the first failure stops the scan.  If
        every stored ideal is contained (possible only when the chain
        never reaches the unit ideal, e.g. for a centre on the scheme),
        the reported maximum is k0, where the chain stabilizes.
        """
        if target.ring != self.subring:
            raise ValueError("containment target must live in the subring")
        best = -1
        for k, ide in enumerate(self.ideals):
            if not target.contains_ideal(ide):
                break
            best = k
        return best

    def __repr__(self) -> str:
        return "PEIChain(k0=%d, point=%r, on_scheme=%r)" % (
            self.k0,
            self.point,
            self.point_on_scheme,
        )


def _working_ring_for(p: ClosedPoint) -> PolyRing:
    """The ring of the moved coordinates: p's direction first, then the
    target coordinates, named after the original variables (for a centre
    with several nonzero coordinates the non-pivot names stand for the
    corresponding linear forms of p's ideal)."""
    ring = p.ring
    names = (ring.variables[p.pivot],) + tuple(
        ring.variables[j] for j in range(ring.nvars) if j != p.pivot
    )
    if names == ring.variables:
        return ring
    return PolyRing(names, ring.field, DEGREVLEX)


def pei_chain(ideal: Ideal, point: ClosedPoint) -> PEIChain:
    """The full chain of partial elimination ideals of the ideal at the
    given projection centre.

    The ideal must be homogeneous.  A centre lying on the scheme is
    permitted (the chain itself is defined regardless); operations with
    genuine projection semantics check the flag and refuse.
    """
    ring = ideal.ring
    if point.ring != ring:
        raise ValueError("point and ideal must share a ring")
    if not ideal.is_homogeneous():
        raise ValueError(
            "partial elimination ideals require a homogeneous ideal"
        )
    field = ring.field
    on_scheme = all(
        field.is_zero(g.evaluate(point.coordinates)) for g in ideal.gens
    )
    transform = build_point_transform(point)
    working = _working_ring_for(point)
    embedding = SubringEmbedding(working, range(1, working.nvars))

    def to_working(f: Polynomial) -> Polynomial:
        moved = transform.apply(f)
        if working == ring:
            return moved
        return map_polynomial(moved, working, list(range(working.nvars)))

    moved_ideal = Ideal(working, [to_working(g) for g in ideal.gens])
    basis = moved_ideal.groebner(elim_order((0,)))
    k0 = max((g.degree_in(0) for g in basis.polys), default=0)

    chain: List[Ideal] = []
    for k in range(k0 + 1):
        coeffs = [
            embedding.restrict(leading_data_in_var(g, 0)[1])
            for g in basis.polys
            if g.degree_in(0) <= k
        ]
        raw = Ideal(embedding.sub, coeffs)
        chain.append(Ideal(embedding.sub, raw.reduced_generators()))

    return PEIChain(
        ideal,
        point,
        transform,
        working,
        embedding,
        basis,
        k0,
        tuple(chain),
        on_scheme,
    )


def _subring_point(chain: PEIChain, q) -> ClosedPoint:
    """Interpret q as a closed point of the chain's target space."""
    if isinstance(q, ClosedPoint):
        if q.ring == chain.subring:
            return q
        if q.ring.nvars == chain.subring.nvars:
            return ClosedPoint(chain.subring, q.coordinates)
        raise ValueError(
            "target point needs %d coordinates, got %d"
            % (chain.subring.nvars, q.ring.nvars)
        )
    coords = list(q)
    if len(coords) != chain.subring.nvars:
        raise ValueError(
            "target point needs %d coordinates, got %d"
            % (chain.subring.nvars, len(coords))
        )
    return ClosedPoint(chain.subring, coords)


def _require_off_scheme(chain: PEIChain) -> None:
    if chain.point_on_scheme:
        raise PreconditionError(
            "outer projection required: the centre lies on the scheme"
        )


# ---------------------------------------------------------------------------
# degree-wise linear-algebra oracle
# ---------------------------------------------------------------------------


_FEASIBLE_MONOMIALS = 10_000


def _monomials_of_degree(nvars: int, degree: int):
    """All exponent tuples of the given total degree, deterministically."""
    if nvars == 1:
        yield (degree,)
        return
    for e in range(degree, -1, -1):
        for rest in _monomials_of_degree(nvars - 1, degree - e):
            yield (e,) + rest


def _rref(rows: List[List], field) -> Tuple[List[List], List[int]]:
    """Reduced row echelon form; returns the nonzero rows and the pivot
    column of each."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pr = next(
            (i for i in range(r, len(rows)) if not field.is_zero(rows[i][col])),
            None,
        )
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][col])
        rows[r] = [field.mul(inv, v) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not field.is_zero(rows[i][col]):
                factor = rows[i][col]
                rows[i] = [
                    field.sub(v, field.mul(factor, w))
                    for v, w in zip(rows[i], rows[r])
                ]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def pei_oracle_degree(
    ideal: Ideal, point: ClosedPoint, k: int, d: int
) -> List[Polynomial]:
    """A vector-space basis of the degree-d part of K_k, computed by
    brute-force linear algebra straight from the definition.

    In the moved coordinates, the degree-(d+k) slice of the ideal is
    spanned by monomial multiples of the generators.  Row-reducing that
    span with the columns ordered so that monomials of first-variable
    degree > k come first isolates the subspace of elements with
    first-variable degree ≤ k; reading off their coefficients on the
    x0^k-block and reducing again gives (K_k)_d.

    Entirely independent of the Groebner-basis route — this is the
    oracle the chain computation is tested against.
    """
    if k < 0 or d < 0:
        raise ValueError("k and d must be non-negative")
    ring = ideal.ring
    if point.ring != ring:
        raise ValueError("point and ideal must share a ring")
    if not ideal.is_homogeneous():
        raise ValueError(
            "partial elimination ideals require a homogeneous ideal"
        )
    n = ring.nvars
    width = comb(d + k + n - 1, n - 1)
    if width > _FEASIBLE_MONOMIALS:
        raise ValueError(
            "infeasible dimension: %d monomials of degree %d" % (width, d + k)
        )
    field = ring.field
    transform = build_point_transform(point)
    working = _working_ring_for(point)
    embedding = SubringEmbedding(working, range(1, n))
    ident = list(range(n))

    def to_working(f: Polynomial) -> Polynomial:
        moved = transform.apply(f)
        return moved if working == ring else map_polynomial(moved, working, ident)

    gens = [to_working(g) for g in ideal.gens if not g.is_zero()]

    # columns: degree-(d+k) monomials, first-variable degree descending,
    # so the block with exponent > k sits in front
    ekey = elim_order((0,)).key(n)
    cols = sorted(_monomials_of_degree(n, d + k), key=ekey, reverse=True)
    col_index = {m: i for i, m in enumerate(cols)}

    rows: List[List] = []
    for g in gens:
        e = g.total_degree()
        if e > d + k:
            continue
        for m in _monomials_of_degree(n, d + k - e):
            row = [field.zero] * len(cols)
            for gm, gc in g.terms:
                prod = tuple(a + b for a, b in zip(m, gm))
                row[col_index[prod]] = field.add(row[col_index[prod]], gc)
            rows.append(row)

    reduced, pivots = _rref(rows, field)

    # rows whose pivot lies in the low block have no support on the
    # high block at all, and they span exactly the degree slice of the
    # ideal with first-variable degree ≤ k
    low_rows = [
        row for row, piv in zip(reduced, pivots) if cols[piv][0] <= k
    ]

    # coefficients on the x0^k block, indexed by target monomials
    sub_cols = [m for m in cols if m[0] == k]
    projected = [
        [row[col_index[m]] for m in sub_cols] for row in low_rows
    ]
    basis_rows, _ = _rref(projected, field)

    sub = embedding.sub
    out = []
    for row in basis_rows:
        acc = {}
        for m, c in zip(sub_cols, row):
            if not field.is_zero(c):
                acc[m[1:]] = c
        poly = sub.from_dict(acc)
        if not poly.is_zero():
            out.append(poly)
    return out


# ---------------------------------------------------------------------------
# secant cones and loci
# ---------------------------------------------------------------------------


class SecantResult:
    """A k-secant computation at a projection centre.

    Attributes:
        k:               the secancy order (lines meeting the scheme in
                         length ≥ k).
        cone:            radical ideal of the k-secant cone with vertex
                         at the centre (original coordinates).
        locus:           ideal of the k-secant locus: input plus cone.
        saturated_locus: the locus saturated by the irrelevant ideal, if
                         it was requested; else None.
        is_empty:        whether the cone is empty (K_{k-1} already the
                         whole subring).
    """

    def __init__(
        self,
        k: int,
        cone: Ideal,
        locus: Ideal,
        saturated_locus: Optional[Ideal],
        is_empty: bool,
    ):
        self.k = k
        self.cone = cone
        self.locus = locus
        self.saturated_locus = saturated_locus
        self.is_empty = is_empty

    def __repr__(self) -> str:
        return "SecantResult(k=%d, empty=%r)" % (self.k, self.is_empty)


def secant_cone(
    ideal: Ideal, point: ClosedPoint, k: int, saturate: bool = False
) -> SecantResult:
    """The k-secant cone of the scheme with vertex at the centre: the
    union of the centre and all lines through it meeting the scheme in
    length at least k, with its reduced structure — computed as the
    radical of the extension of K_{k-1}."""
    if k < 1:
        raise ValueError("secancy order k must be at least 1")
    chain = pei_chain(ideal, point)
    _require_off_scheme(chain)
    prev = chain.partial_ideal(k - 1)
    cone = radical(chain.ambient_ideal(k - 1))
    locus = ideal + cone
    saturated = saturate_homogeneous(locus) if saturate else None
    return SecantResult(k, cone, locus, saturated, prev.is_unit())


def secant_locus(
    ideal: Ideal, point: ClosedPoint, k: int, saturate: bool = False
) -> Ideal:
    """The k-secant locus: the part of the scheme swept out by k-secant
    lines through the centre, as the sum of the ideal and the cone
    ideal (saturated by the irrelevant ideal on request)."""
    result = secant_cone(ideal, point, k, saturate=saturate)
    return result.saturated_locus if saturate else result.locus


# ---------------------------------------------------------------------------
# fibre lengths
# ---------------------------------------------------------------------------


def _chain_fibre_length(chain: PEIChain, q: ClosedPoint) -> Tuple[int, Ideal]:
    """Fibre length over q read off the chain, plus q's subring ideal."""
    target = Ideal(chain.subring, q.forms())
    return 1 + chain.max_contained_index(target), target


def fibre_length(ideal: Ideal, point: ClosedPoint, q) -> int:
    """Length of the projection fibre over the target point q.

    Computed from the chain as 1 + max{k : K_k ⊆ (ideal of q)}, then
    cross-checked against the multiplicity of the scheme-theoretic
    fibre (the intersection with the line through the centre and q); a
    disagreement raises InternalConsistencyError.  A target point off
    the projected scheme yields 0.
    """
    chain = pei_chain(ideal, point)
    _require_off_scheme(chain)
    qpt = _subring_point(chain, q)
    length, target = _chain_fibre_length(chain, qpt)

    line = Ideal(
        ideal.ring, [chain.to_ambient(f) for f in target.gens]
    )
    if length == 0:
        hd = hilbert_data(ideal + line)
        if hd.dimension > 0:
            raise InternalConsistencyError(
                "chain sees an empty fibre but the intersection is nonempty"
            )
        return 0
    direct = intersection_length(ideal, line)
    if direct != length:
        raise InternalConsistencyError(
            "fibre length mismatch: chain gives %d, intersection gives %d"
            % (length, direct)
        )
    return length


def is_isomorphic_projection(ideal: Ideal, point: ClosedPoint) -> bool:
    """Whether the projection from the centre maps the scheme
    isomorphically onto its image: true exactly when K_1 contains every
    subring variable."""
    chain = pei_chain(ideal, point)
    _require_off_scheme(chain)
    return _chain_certifies_isomorphism(chain)


def _chain_certifies_isomorphism(chain: PEIChain) -> bool:
    k1 = chain.partial_ideal(1)
    return all(k1.contains(v) for v in chain.subring.gens())


def pei_relative_chain(
    ideal: Ideal, drop_point: ClosedPoint, second_point
) -> PEIChain:
    """The chain of the image ideal under a first projection, at a
    second centre given in the intermediate coordinates.

    The composite is faithful to fibre lengths when the first projection
    maps the scheme isomorphically onto its image; when that
    certification fails the chain is still returned, flagged with
    iso_warning.
    """
    first = pei_chain(ideal, drop_point)
    _require_off_scheme(first)
    image_ideal = first.ideals[0]
    second = _subring_point(first, second_point)
    relative = pei_chain(image_ideal, second)
    relative.iso_warning = not _chain_certifies_isomorphism(first)
    return relative


# ---------------------------------------------------------------------------
# projections from a line: clever decompositions and double fibres
# ---------------------------------------------------------------------------


def _line_ideal(p: ClosedPoint, p2: ClosedPoint) -> Ideal:
    """The ideal of the line spanned by two distinct points: the kernel
    of their coordinate matrix, as linear forms."""
    ring = p.ring
    field = ring.field
    rows, pivots = _rref([list(p.coordinates), list(p2.coordinates)], field)
    if len(rows) != 2:
        raise ValueError("the two centres must be distinct")
    n = ring.nvars
    pivot_set = set(pivots)
    forms = []
    for free in range(n):
        if free in pivot_set:
            continue
        acc = {}
        e = [0] * n
        e[free] = 1
        acc[tuple(e)] = field.one
        for i, col in enumerate(pivots):
            c = rows[i][free]
            if not field.is_zero(c):
                e = [0] * n
                e[col] = 1
                acc[tuple(e)] = field.neg(c)
        forms.append(ring.from_dict(acc))
    return Ideal(ring, forms)


_POWER_CAP = 8
_CLEVER_CACHE: dict = {}
_CLEVER_CACHE_LIMIT = 32


def _in_variable_saturation(
    f: Polynomial,
    total: Ideal,
    var_index: int,
    saturations: dict,
) -> bool:
    """f ∈ total : x_v^∞.  Small powers x_v^k·f are tried against the
    cached basis of total first; only an inconclusive scan pays for the
    exact saturation (one Groebner basis per variable, then cached)."""
    ring = total.ring
    v = ring.gen(var_index)
    candidate = f
    for _ in range(_POWER_CAP + 1):
        if total.contains(candidate):
            return True
        candidate = candidate * v
    sat = saturations.get(var_index)
    if sat is None:
        sat = saturations[var_index] = saturate_by_variable(total, var_index)
    return sat.contains(f)


def clever_decomposition_check(
    ideal: Ideal, p: ClosedPoint, p2: ClosedPoint
) -> Tuple[bool, Optional[Polynomial]]:
    """Whether projecting to the two centres' contractions loses nothing:
    the sum of the two contracted-and-re-extended ideals must have the
    same saturation as the ideal itself.

    Returns (True, None) on success, else (False, witness) with a
    canonical generator of the (saturation of the) ideal missing from
    the saturated sum.  Preconditions: distinct centres, both off the
    scheme, and the line they span must not meet the scheme.
    """
    if p == p2:
        raise ValueError("the two centres must be distinct")
    key = (ideal, p, p2)
    cached = _CLEVER_CACHE.get(key)
    if cached is not None:
        return cached
    chain_a = pei_chain(ideal, p)
    _require_off_scheme(chain_a)
    chain_b = pei_chain(ideal, p2)
    _require_off_scheme(chain_b)

    line = _line_ideal(p, p2)
    if hilbert_data(ideal + line).dimension > 0:
        raise PreconditionError(
            "the line through the two centres meets the scheme"
        )

    part_a = chain_a.ambient_ideal(0)
    part_b = chain_b.ambient_ideal(0)
    total = part_a + part_b
    # The sum sits inside the ideal, so its saturation sits inside the
    # ideal's.  The saturations agree exactly when every canonical
    # generator of the ideal lies in the saturated sum, which is the
    # intersection of the quotients (sum : x_i^inf).
    ring = ideal.ring
    saturations: dict = {}
    result: Tuple[bool, Optional[Polynomial]] = (True, None)
    for g in ideal.reduced_generators():
        if not all(
            _in_variable_saturation(g, total, i, saturations)
            for i in range(ring.nvars)
        ):
            result = (False, g)
            break
    while len(_CLEVER_CACHE) >= _CLEVER_CACHE_LIMIT:
        _CLEVER_CACHE.pop(next(iter(_CLEVER_CACHE)))
    _CLEVER_CACHE[key] = _CLEVER_CACHE[(ideal, p2, p)] = result
    return result


def double_projection_fibre_length(
    ideal: Ideal, p: ClosedPoint, p2: ClosedPoint, q
) -> int:
    """Fibre length of the projection from the line spanned by the two
    centres, over a point q of the common target space.

    Requires the centres to form a clever decomposition; then the length
    is the product (k+1)(k'+1) of the two relative chain indices at q,
    cross-checked against the multiplicity of the intersection with the
    plane spanned by the line and q."""
    ok, _ = clever_decomposition_check(ideal, p, p2)
    if not ok:
        raise PreconditionError(
            "not a clever decomposition: the product formula does not apply"
        )

    factors = []
    ambient_q: Optional[Ideal] = None
    for centre, other in ((p, p2), (p2, p)):
        first = pei_chain(ideal, centre)
        image = ClosedPoint(
            first.subring,
            [f.evaluate(other.coordinates) for f in centre.forms()],
        )
        relative = pei_chain(first.ideals[0], image)
        qpt = _subring_point(relative, q)
        target = Ideal(relative.subring, qpt.forms())
        factors.append(1 + relative.max_contained_index(target))
        if ambient_q is None:
            ambient_q = Ideal(
                ideal.ring,
                [
                    first.to_ambient(relative.to_ambient(f))
                    for f in target.gens
                ],
            )

    value = factors[0] * factors[1]
    if value == 0:
        hd = hilbert_data(ideal + ambient_q)
        if hd.dimension > 0:
            raise InternalConsistencyError(
                "chains see an empty fibre but the intersection is nonempty"
            )
        return 0
    direct = intersection_length(ideal, ambient_q)
    if direct != value:
        raise InternalConsistencyError(
            "double fibre length mismatch: product formula gives %d, "
            "intersection gives %d" % (value, direct)
        )
    return value


# ---------------------------------------------------------------------------
# determinantal fixtures
# ---------------------------------------------------------------------------


def _det(matrix: List[List[Polynomial]], ring: PolyRing) -> Polynomial:
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = ring.zero()
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = entry * _det(minor, ring)
        total = total + term if j % 2 == 0 else total - term
    return total


def minors_ideal(
    rows: Sequence[Sequence[Polynomial]], size: int
) -> Ideal:
    """The ideal of all size × size minors of a matrix of polynomials."""
    if not rows or not rows[0]:
        raise ValueError("matrix must be non-empty")
    ring = rows[0][0].ring
    nrows = len(rows)
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("matrix rows must have equal length")
    if size < 1 or size > min(nrows, ncols):
        raise ValueError("minor size out of range")
    gens = []
    for rsel in combinations(range(nrows), size):
        for csel in combinations(range(ncols), size):
            sub = [[rows[i][j] for j in csel] for i in rsel]
            gens.append(_det(sub, ring))
    return Ideal(ring, gens)


def scroll_ideal(ring: PolyRing, widths: Sequence[int]) -> Ideal:
    """The ideal of the rational normal scroll with the given block
    widths: the 2 × 2 minors of the two-row catalecticant with one block
    of a_i consecutive columns per width a_i (using a_i + 1 consecutive
    variables)."""
    widths = list(widths)
    if not widths or any(a < 1 for a in widths):
        raise ValueError("scroll widths must be positive")
    needed = sum(a + 1 for a in widths)
    if ring.nvars != needed:
        raise ValueError(
            "scroll with widths %r needs %d variables, ring has %d"
            % (widths, needed, ring.nvars)
        )
    top: List[Polynomial] = []
    bottom: List[Polynomial] = []
    offset = 0
    for a in widths:
        for j in range(a):
            top.append(ring.gen(offset + j))
            bottom.append(ring.gen(offset + j + 1))
        offset += a + 1
    return minors_ideal([top, bottom], 2)
