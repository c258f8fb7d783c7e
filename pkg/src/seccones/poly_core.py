"""Exact sparse multivariate polynomials over Q or a prime field.

This module provides the arithmetic bottom layer of the package:

* coefficient fields (arbitrary-precision rationals, prime fields),
* monomials as dense exponent tuples plus the three supported term orders
  (lex, degrevlex, and block elimination orders),
* immutable sparse polynomials in canonical sorted form,
* a small text parser / formatter for polynomials,
* invertible linear changes of coordinates, and
* closed points of projective space together with the coordinate
  transform that moves a point to (1:0:...:0).

Everything here is a pure function over immutable data; values can be
shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Union


# ---------------------------------------------------------------------------
# coefficient fields
# ---------------------------------------------------------------------------


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3_215_031_751 (covers 2^31)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field Q; scalars are `fractions.Fraction` in lowest terms."""

    characteristic = 0

    def __repr__(self) -> str:
        return "QQ"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def from_pair(self, num: int, den: int) -> Fraction:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return Fraction(num, den)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a: Fraction, b: Fraction) -> Fraction:
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    def is_zero(self, a: Fraction) -> bool:
        return not a

    def eq(self, a: Fraction, b: Fraction) -> bool:
        return a == b

    def fmt(self, a: Fraction) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return "%d/%d" % (a.numerator, a.denominator)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")


class PrimeField:
    """The field F_p for a prime p < 2^31; scalars are ints in [0, p)."""

    def __init__(self, p: int):
        if not (2 <= p < 2**31):
            raise ValueError("prime must satisfy 2 <= p < 2^31, got %r" % (p,))
        if not _is_prime(p):
            raise ValueError("%d is not prime" % p)
        self.p = p
        self.characteristic = p

    def __repr__(self) -> str:
        return "Fp(%d)" % self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def from_pair(self, num: int, den: int) -> int:
        return self.mul(self.from_int(num), self.inv(self.from_int(den)))

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: int) -> bool:
        return a == 0

    def eq(self, a: int, b: int) -> bool:
        return a == b

    def fmt(self, a: int) -> str:
        return str(a)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Fp", self.p))


QQ = RationalField()

Field = Union[RationalField, PrimeField]
Scalar = Union[Fraction, int]


# ---------------------------------------------------------------------------
# monomials
# ---------------------------------------------------------------------------

Monomial = tuple  # exponent tuple, one entry per ring variable


def mono_one(nvars: int) -> Monomial:
    return (0,) * nvars


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a | b, i.e. every exponent of a is <= the one of b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


# ---------------------------------------------------------------------------
# term orders
# ---------------------------------------------------------------------------


class TermOrder:
    """A multiplicative total order on monomials, given by a sort key.

    The key function is monotone: key(a) < key(b) iff a < b in the order.
    Three flavours are supported:

    * ``lex``            -- pure lexicographic, first variable biggest;
    * ``degrevlex``      -- degree, then reverse lexicographic;
    * ``elim(block)``    -- eliminate the given variable positions: compare
      by total degree inside the block, then degrevlex within the block,
      then degrevlex on the remaining variables.  Any monomial containing
      a block variable exceeds every block-free monomial, so the block-free
      part of a reduced basis generates the contraction of the ideal.
    """

    def __init__(self, tag: str, block: Sequence[int] = ()):
        if tag not in ("lex", "degrevlex", "elim"):
            raise ValueError("unknown order tag %r" % tag)
        if tag == "elim" and not block:
            raise ValueError("elimination order needs a nonempty block")
        self.tag = tag
        self.block = tuple(sorted(block)) if tag == "elim" else ()
        self._rev_block = tuple(reversed(self.block))

    def key(self, nvars: int):
        """Return a key function on exponent tuples for this order."""
        if self.tag == "lex":
            return lambda m: m
        if self.tag == "degrevlex":
            return lambda m: (sum(m), tuple(-e for e in reversed(m)))
        block = self.block
        for i in block:
            if i >= nvars:
                raise ValueError("block variable index %d out of range" % i)
        rev_block = self._rev_block
        rest = tuple(i for i in range(nvars) if i not in set(block))
        rev_rest = tuple(reversed(rest))

        def elim_key(m):
            db = 0
            for i in block:
                db += m[i]
            return (
                db,
                tuple(-m[i] for i in rev_block),
                sum(m) - db,
                tuple(-m[i] for i in rev_rest),
            )

        return elim_key

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0, or 1 as a <, =, > b."""
        if len(a) != len(b):
            raise ValueError("monomial dimension mismatch")
        ka = self.key(len(a))
        x, y = ka(a), ka(b)
        return (x > y) - (x < y)

    def __repr__(self) -> str:
        if self.tag == "elim":
            return "elim(%s)" % ",".join(map(str, self.block))
        return self.tag

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TermOrder)
            and self.tag == other.tag
            and self.block == other.block
        )

    def __hash__(self) -> int:
        return hash((self.tag, self.block))


LEX = TermOrder("lex")
DEGREVLEX = TermOrder("degrevlex")


def elim_order(block: Sequence[int]) -> TermOrder:
    """Elimination order for the given variable positions."""
    return TermOrder("elim", block)


def compare_monomials(order: TermOrder, a: Monomial, b: Monomial) -> str:
    """Compare two monomials; returns 'less', 'equal' or 'greater'."""
    c = order.compare(a, b)
    return ("less", "equal", "greater")[c + 1]


# ---------------------------------------------------------------------------
# polynomial ring
# ---------------------------------------------------------------------------


class PolyRing:
    """K[v0, ..., vn] with a coefficient field and a default term order."""

    def __init__(
        self,
        variables: Sequence[str],
        field: Field = QQ,
        order: TermOrder = DEGREVLEX,
    ):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be pairwise distinct")
        if not variables:
            raise ValueError("a ring needs at least one variable")
        self.variables = variables
        self.field = field
        self.order = order
        self.nvars = len(variables)
        self._var_index = {v: i for i, v in enumerate(variables)}
        self._okey = order.key(self.nvars)

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def standard(n: int, field: Field = QQ, order: TermOrder = DEGREVLEX) -> "PolyRing":
        """K[x0..xn] (n+1 variables)."""
        return PolyRing(tuple("x%d" % i for i in range(n + 1)), field, order)

    def with_order(self, order: TermOrder) -> "PolyRing":
        return PolyRing(self.variables, self.field, order)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return Polynomial(self, ((mono_one(self.nvars), self.field.one),))

    def constant(self, c: Scalar) -> "Polynomial":
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, ((mono_one(self.nvars), c),))

    def gen(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, ((tuple(e), self.field.one),))

    def gens(self) -> list:
        return [self.gen(i) for i in range(self.nvars)]

    def var(self, name: str) -> "Polynomial":
        return self.gen(self.index(name))

    def index(self, name: str) -> int:
        try:
            return self._var_index[name]
        except KeyError:
            raise KeyError("unknown variable %r in ring %r" % (name, self)) from None

    def from_dict(self, terms: dict) -> "Polynomial":
        """Build a polynomial from {exponent tuple: coefficient}."""
        items = [
            (m, c) for m, c in terms.items() if not self.field.is_zero(c)
        ]
        items.sort(key=lambda t: self._okey(t[0]), reverse=True)
        return Polynomial(self, tuple(items))

    def sort_key(self, m: Monomial):
        return self._okey(m)

    # -- identity ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.field == other.field
        )

    def __hash__(self) -> int:
        return hash((self.variables, self.field))

    def __repr__(self) -> str:
        return "%s[%s]" % (self.field, ",".join(self.variables))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Immutable sparse polynomial: terms sorted strictly descending.

    ``terms`` is a tuple of (monomial, coefficient) pairs with nonzero
    coefficients and strictly decreasing monomials under the ring's
    default order; the empty tuple is the zero polynomial.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or mono_degree(self.terms[0][0]) == 0

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def leading_coefficient(self) -> Scalar:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def total_degree(self) -> int:
        """Max total degree of the terms; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {mono_degree(m) for m, _ in self.terms}
        return len(degs) == 1

    def variables_used(self) -> set:
        used = set()
        for m, _ in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return used

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("ring mismatch: %r vs %r" % (self.ring, other.ring))
            return other
        if isinstance(other, int):
            return self.ring.constant(self.ring.field.from_int(other))
        if isinstance(other, Fraction) and self.ring.field == QQ:
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        field = self.ring.field
        acc = dict(self.terms)
        for m, c in other.terms:
            s = field.add(acc.get(m, field.zero), c)
            if field.is_zero(s):
                acc.pop(m, None)
            else:
                acc[m] = s
        return self.ring.from_dict(acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        field = self.ring.field
        return Polynomial(self.ring, tuple((m, field.neg(c)) for m, c in self.terms))

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, Polynomial):
            c = (
                self.ring.field.from_int(other)
                if isinstance(other, int)
                else other
            )
            return self.scalar_mul(c)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        field = self.ring.field
        acc: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                s = field.add(acc.get(m, field.zero), field.mul(c1, c2))
                if field.is_zero(s):
                    acc.pop(m, None)
                else:
                    acc[m] = s
        return self.ring.from_dict(acc)

    __rmul__ = __mul__

    def scalar_mul(self, c: Scalar) -> "Polynomial":
        field = self.ring.field
        if field.is_zero(c):
            return self.ring.zero()
        return Polynomial(
            self.ring, tuple((m, field.mul(c, coef)) for m, coef in self.terms)
        )

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def monic(self) -> "Polynomial":
        """Divide by the leading coefficient (zero polynomial passes through)."""
        if not self.terms:
            return self
        lc = self.terms[0][1]
        field = self.ring.field
        if field.eq(lc, field.one):
            return self
        inv = field.inv(lc)
        return self.scalar_mul(inv)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == self.ring.constant(self.ring.field.from_int(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.terms))

    # -- evaluation and leading data ------------------------------------------

    def evaluate(self, values: Sequence[Scalar]) -> Scalar:
        """Evaluate at a full tuple of field scalars."""
        field = self.ring.field
        total = field.zero
        for m, c in self.terms:
            v = c
            for i, e in enumerate(m):
                for _ in range(e):
                    v = field.mul(v, values[i])
            total = field.add(total, v)
        return total

    def degree_in(self, var_index: int) -> int:
        """Max exponent of a variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(m[var_index] for m, _ in self.terms)

    def __repr__(self) -> str:
        return format_polynomial(self)


def leading_data_in_var(f: Polynomial, var_index: int):
    """(degree, leading coefficient) of f viewed as a polynomial in one variable.

    The leading coefficient is the sum of the terms with the maximal
    exponent of that variable, with the variable stripped; it never
    involves the variable itself.
    """
    if f.is_zero():
        raise ValueError("leading data of the zero polynomial is undefined")
    d = f.degree_in(var_index)
    acc = {}
    for m, c in f.terms:
        if m[var_index] == d:
            stripped = list(m)
            stripped[var_index] = 0
            acc[tuple(stripped)] = c
    return d, f.ring.from_dict(acc)


# ---------------------------------------------------------------------------
# parser / formatter
# ---------------------------------------------------------------------------


class ParseError(ValueError):
    """Syntax error in polynomial or input-file text, with position."""

    def __init__(self, message: str, position: int):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


_IDENT_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_IDENT_CONT = _IDENT_START | set("0123456789")


def _tokenize_poly(text: str) -> Iterator[tuple]:
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^()":
            yield (ch, ch, i)
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            yield ("int", text[i:j], i)
            i = j
            continue
        if ch == "/":
            yield ("/", "/", i)
            i += 1
            continue
        if ch in _IDENT_START:
            j = i
            while j < n and text[j] in _IDENT_CONT:
                j += 1
            yield ("ident", text[i:j], i)
            i = j
            continue
        raise ParseError("unexpected character %r" % ch, i)
    yield ("end", "", n)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse the grammar: terms joined by + and -; a term is a coefficient,
    coefficient*monomial, or monomial; a monomial is var or var^int joined
    by *; a coefficient is an integer or integer/integer."""
    tokens = list(_tokenize_poly(text))
    pos = 0
    field = ring.field

    def peek():
        return tokens[pos]

    def take(kind=None):
        nonlocal pos
        tok = tokens[pos]
        if kind is not None and tok[0] != kind:
            raise ParseError("expected %s, found %r" % (kind, tok[1]), tok[2])
        pos += 1
        return tok

    def parse_coefficient() -> Scalar:
        tok = take("int")
        num = int(tok[1])
        if peek()[0] == "/":
            take("/")
            den_tok = take("int")
            den = int(den_tok[1])
            if den == 0:
                raise ParseError("zero denominator", den_tok[2])
            try:
                return field.from_pair(num, den)
            except ZeroDivisionError:
                raise ParseError(
                    "coefficient %d/%d not in field" % (num, den), den_tok[2]
                ) from None
        return field.from_int(num)

    def parse_power(exponents: list):
        tok = take("ident")
        try:
            idx = ring.index(tok[1])
        except KeyError:
            raise ParseError("unknown variable %r" % tok[1], tok[2]) from None
        e = 1
        if peek()[0] == "^":
            take("^")
            e = int(take("int")[1])
        exponents[idx] += e

    def parse_term() -> tuple:
        coeff = field.one
        exponents = [0] * ring.nvars
        if peek()[0] == "int":
            coeff = parse_coefficient()
            if peek()[0] == "*":
                take("*")
                parse_power(exponents)
            else:
                return tuple(exponents), coeff
        else:
            parse_power(exponents)
        while peek()[0] == "*":
            take("*")
            parse_power(exponents)
        return tuple(exponents), coeff

    acc: dict = {}
    sign = 1
    if peek()[0] in ("+", "-"):
        sign = -1 if take()[0] == "-" else 1
    while True:
        m, c = parse_term()
        if sign < 0:
            c = field.neg(c)
        s = field.add(acc.get(m, field.zero), c)
        if field.is_zero(s):
            acc.pop(m, None)
        else:
            acc[m] = s
        tok = peek()
        if tok[0] == "end":
            break
        if tok[0] in ("+", "-"):
            sign = -1 if take()[0] == "-" else 1
            continue
        raise ParseError("expected + or - between terms, found %r" % tok[1], tok[2])
    return ring.from_dict(acc)


def _format_monomial(ring: PolyRing, m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(ring.variables[i])
        elif e > 1:
            parts.append("%s^%d" % (ring.variables[i], e))
    return "*".join(parts)


def format_polynomial(f: Polynomial, clear_denominators: bool = True) -> str:
    """Canonical text form: terms descending in the ring order, `^` for
    powers, `*` between factors.  Over Q the output is scaled to primitive
    integer coefficients with a positive leading coefficient (generators
    are only ever read up to a unit)."""
    if f.is_zero():
        return "0"
    ring = f.ring
    field = ring.field
    terms = f.terms
    if clear_denominators and isinstance(field, RationalField):
        from math import gcd, lcm

        den = lcm(*(c.denominator for _, c in terms)) if terms else 1
        num = gcd(*(abs(c.numerator) for _, c in terms))
        scale = Fraction(den, num if num else 1)
        if terms[0][1] < 0:
            scale = -scale
        if scale != 1:
            terms = tuple((m, c * scale) for m, c in terms)
    chunks = []
    for k, (m, c) in enumerate(terms):
        neg = False
        if isinstance(field, RationalField) and c < 0:
            neg, c = True, -c
        cs = field.fmt(c)
        ms = _format_monomial(ring, m)
        if not ms:
            body = cs
        elif cs == "1":
            body = ms
        else:
            body = "%s*%s" % (cs, ms)
        if k == 0:
            chunks.append("-" + body if neg else body)
        else:
            chunks.append((" - " if neg else " + ") + body)
    return "".join(chunks)


# ---------------------------------------------------------------------------
# linear changes of coordinates
# ---------------------------------------------------------------------------


class LinearMap:
    """An invertible linear substitution of variables.

    The map sends variable i to the linear form with coefficient row
    ``matrix[i]``, i.e. x_i -> sum_j matrix[i][j] * x_j.  The inverse
    matrix is computed on construction; applying the map and then its
    inverse is the identity.
    """

    def __init__(self, ring: PolyRing, matrix: Sequence[Sequence[Scalar]],
                 inverse: Optional[Sequence[Sequence[Scalar]]] = None):
        self.ring = ring
        self.matrix = tuple(tuple(row) for row in matrix)
        n = ring.nvars
        if len(self.matrix) != n or any(len(r) != n for r in self.matrix):
            raise ValueError("matrix must be square of the ring dimension")
        if inverse is None:
            inverse = _invert_matrix(ring.field, self.matrix)
        self.inverse_matrix = tuple(tuple(row) for row in inverse)

    def inverse(self) -> "LinearMap":
        return LinearMap(self.ring, self.inverse_matrix, self.matrix)

    def apply(self, f: Polynomial) -> Polynomial:
        return apply_linear_map(self, f)


def _invert_matrix(field: Field, matrix: tuple) -> list:
    n = len(matrix)
    aug = [list(row) + [field.one if i == j else field.zero for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(
            (r for r in range(col, n) if not field.is_zero(aug[r][col])), None
        )
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = field.inv(aug[col][col])
        aug[col] = [field.mul(inv, v) for v in aug[col]]
        for r in range(n):
            if r != col and not field.is_zero(aug[r][col]):
                factor = aug[r][col]
                aug[r] = [
                    field.sub(v, field.mul(factor, w))
                    for v, w in zip(aug[r], aug[col])
                ]
    return [row[n:] for row in aug]


def apply_linear_map(psi: LinearMap, f: Polynomial) -> Polynomial:
    """Substitute each variable by its image linear form.

    A ring homomorphism: additive, multiplicative, and degree-preserving
    on homogeneous input since every image is a linear form.
    """
    ring = f.ring
    if ring != psi.ring:
        raise ValueError("ring mismatch between map and polynomial")
    field = ring.field
    images = []
    for i in range(ring.nvars):
        row = psi.matrix[i]
        images.append(
            ring.from_dict(
                {
                    tuple(1 if k == j else 0 for k in range(ring.nvars)): row[j]
                    for j in range(ring.nvars)
                    if not field.is_zero(row[j])
                }
            )
        )
    power_cache: dict = {}

    def image_power(i: int, e: int) -> Polynomial:
        key = (i, e)
        if key not in power_cache:
            power_cache[key] = images[i] ** e
        return power_cache[key]

    total = ring.zero()
    for m, c in f.terms:
        term = ring.constant(c)
        for i, e in enumerate(m):
            if e:
                term = term * image_power(i, e)
        total = total + term
    return total


# ---------------------------------------------------------------------------
# closed points
# ---------------------------------------------------------------------------


class ClosedPoint:
    """A closed point of projective space, given by homogeneous coordinates.

    Coordinates are normalized so the pivot (the first nonzero entry)
    equals 1; two points are equal iff their normalized coordinates agree.
    The point's ideal is generated by the n linear forms
    x_j - p_j * x_pivot for j != pivot, listed by ascending j.
    """

    def __init__(self, ring: PolyRing, coordinates: Sequence[Scalar]):
        field = ring.field
        coords = [
            c if not isinstance(c, int) else field.from_int(c)
            for c in coordinates
        ]
        if len(coords) != ring.nvars:
            raise ValueError(
                "expected %d coordinates, got %d" % (ring.nvars, len(coords))
            )
        pivot = next(
            (i for i, c in enumerate(coords) if not field.is_zero(c)), None
        )
        if pivot is None:
            raise ValueError("projective point needs a nonzero coordinate")
        inv = field.inv(coords[pivot])
        self.ring = ring
        self.coordinates = tuple(field.mul(inv, c) for c in coords)
        self.pivot = pivot

    def forms(self) -> list:
        """The n linear-form generators of the point's ideal, ascending."""
        ring = self.ring
        field = ring.field
        out = []
        for j in range(ring.nvars):
            if j == self.pivot:
                continue
            d = {}
            ej = [0] * ring.nvars
            ej[j] = 1
            d[tuple(ej)] = field.one
            if not field.is_zero(self.coordinates[j]):
                el = [0] * ring.nvars
                el[self.pivot] = 1
                d[tuple(el)] = field.neg(self.coordinates[j])
            out.append(ring.from_dict(d))
        return out

    def support(self) -> tuple:
        field = self.ring.field
        return tuple(
            i for i, c in enumerate(self.coordinates) if not field.is_zero(c)
        )

    def is_coordinate_point(self) -> bool:
        return len(self.support()) == 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ClosedPoint)
            and self.ring == other.ring
            and self.coordinates == other.coordinates
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.coordinates))

    def __repr__(self) -> str:
        return "(%s)" % ":".join(self.ring.field.fmt(c) for c in self.coordinates)


def point_from_forms(ring: PolyRing, forms: Iterable[Polynomial]) -> ClosedPoint:
    """Recover a closed point from n independent linear forms of its ideal.

    Solves for the one-dimensional common kernel of the coefficient matrix.
    """
    field = ring.field
    n = ring.nvars
    rows = []
    for f in forms:
        if f.is_zero() or f.total_degree() != 1:
            raise ValueError("point generators must be nonzero linear forms")
        row = [field.zero] * n
        for m, c in f.terms:
            if mono_degree(m) != 1:
                raise ValueError("point generators must be homogeneous linear forms")
            row[m.index(1)] = c
        rows.append(row)
    # Gaussian elimination; find the kernel vector.
    pivots = []
    r = 0
    for col in range(n):
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
    if r != n - 1:
        raise ValueError(
            "expected forms cutting out a single point (rank %d of %d)"
            % (r, n - 1)
        )
    free = next(col for col in range(n) if col not in pivots)
    coords = [field.zero] * n
    coords[free] = field.one
    for i, col in enumerate(pivots):
        coords[col] = field.neg(rows[i][free])
    return ClosedPoint(ring, coords)


def build_point_transform(p: ClosedPoint) -> LinearMap:
    """The coordinate change psi moving p's ideal onto (x1, ..., xn).

    The inverse map is written down directly: psi^{-1} sends x0 to the
    pivot variable of p and x_j (j >= 1) to the j-th linear form of p's
    ideal; psi is obtained by inverting.  Consequently psi maps each
    linear form of p to the corresponding variable x_j, and psi(p) is
    the point (1:0:...:0).
    """
    ring = p.ring
    field = ring.field
    n = ring.nvars
    inv_rows = []
    pivot_row = [field.zero] * n
    pivot_row[p.pivot] = field.one
    inv_rows.append(tuple(pivot_row))
    for j in range(n):
        if j == p.pivot:
            continue
        row = [field.zero] * n
        row[j] = field.one
        if not field.is_zero(p.coordinates[j]):
            row[p.pivot] = field.neg(p.coordinates[j])
        inv_rows.append(tuple(row))
    inverse = LinearMap(ring, inv_rows)
    return inverse.inverse()
