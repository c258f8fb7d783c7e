"""Fields, term orders, polynomial arithmetic, parsing/formatting,
points and linear coordinate changes."""

from fractions import Fraction

import pytest

from seccones import (
    DEGREVLEX,
    LEX,
    ClosedPoint,
    LinearMap,
    ParseError,
    PolyRing,
    PrimeField,
    QQ,
    apply_linear_map,
    build_point_transform,
    compare_monomials,
    elim_order,
    format_polynomial,
    leading_data_in_var,
    parse_polynomial,
    point_from_forms,
)


def P(text, ring):
    return parse_polynomial(text, ring)


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------


def test_rational_field_basics():
    assert QQ.from_pair(2, 4) == Fraction(1, 2)
    assert QQ.add(QQ.from_int(1), QQ.from_pair(1, 2)) == Fraction(3, 2)
    assert QQ.inv(QQ.from_pair(3, 7)) == Fraction(7, 3)
    assert QQ.is_zero(QQ.sub(QQ.one, QQ.one))
    assert QQ.fmt(Fraction(-5, 3)) == "-5/3"


def test_prime_field_arithmetic():
    F7 = PrimeField(7)
    assert F7.add(F7.from_int(5), F7.from_int(4)) == 2
    assert F7.mul(F7.from_int(3), F7.from_int(5)) == 1
    assert F7.inv(F7.from_int(3)) == 5
    assert F7.neg(F7.from_int(2)) == 5
    assert F7.from_int(-1) == 6
    assert F7.from_pair(1, 3) == F7.inv(F7.from_int(3))


def test_prime_field_rejects_bad_modulus_and_division():
    with pytest.raises(ValueError):
        PrimeField(6)
    F5 = PrimeField(5)
    with pytest.raises(ZeroDivisionError):
        F5.inv(F5.zero)
    with pytest.raises(ZeroDivisionError):
        F5.from_pair(1, 5)


def test_prime_fields_compare_by_modulus():
    assert PrimeField(7) == PrimeField(7)
    assert PrimeField(7) != PrimeField(5)
    assert PrimeField(7) != QQ


# ---------------------------------------------------------------------------
# term orders
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "order,a,b,expected",
    [
        (LEX, (1, 0, 0), (0, 5, 5), "greater"),
        (LEX, (1, 2, 0), (1, 1, 9), "greater"),
        (DEGREVLEX, (1, 0, 0), (0, 5, 5), "less"),
        (DEGREVLEX, (2, 0, 0), (1, 1, 0), "greater"),
        (DEGREVLEX, (1, 1, 0), (2, 0, 0), "less"),
        (DEGREVLEX, (1, 1, 1), (1, 1, 1), "equal"),
        # x*z vs y^2: same degree, z in the last slot loses
        (DEGREVLEX, (1, 0, 1), (0, 2, 0), "less"),
    ],
)
def test_compare_monomials(order, a, b, expected):
    assert compare_monomials(order, a, b) == expected


def test_elim_order_prefers_block_variables():
    order = elim_order([0])
    # any positive power of x0 beats any x0-free monomial
    assert compare_monomials(order, (1, 0, 0), (0, 9, 9)) == "greater"
    # within the x0-free part it falls back to degrevlex behaviour
    assert compare_monomials(order, (0, 2, 0), (0, 1, 1)) == "greater"
    assert compare_monomials(order, (0, 1, 1), (0, 2, 0)) == "less"


def test_elim_order_two_block():
    order = elim_order([0, 2])
    assert compare_monomials(order, (0, 0, 1), (0, 7, 0)) == "greater"
    # equal block degree: ties break inside the block, reverse style
    assert compare_monomials(order, (1, 0, 0), (0, 0, 1)) == "greater"
    # block degree decides first: x0*x2 beats x0 alone
    assert compare_monomials(order, (1, 0, 1), (1, 9, 0)) == "greater"


def test_order_validation():
    with pytest.raises(ValueError):
        elim_order([])
    with pytest.raises(ValueError):
        DEGREVLEX.compare((1, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        elim_order([5]).key(3)((0, 0, 0))


def test_orders_are_values():
    assert elim_order([2, 0]) == elim_order([0, 2])
    assert elim_order([0]) != elim_order([1])
    assert DEGREVLEX != LEX
    assert len({DEGREVLEX, LEX, elim_order([0]), elim_order([0])}) == 3


# ---------------------------------------------------------------------------
# rings
# ---------------------------------------------------------------------------


def test_ring_construction_and_lookup():
    R = PolyRing(["x", "y", "z"])
    assert R.nvars == 3
    assert R.variables == ("x", "y", "z")
    assert R.field == QQ
    assert R.order == DEGREVLEX
    assert R.index("y") == 1
    with pytest.raises(KeyError):
        R.index("w")


def test_ring_rejects_duplicate_variables():
    with pytest.raises(ValueError):
        PolyRing(["x", "x"])


def test_ring_standard_and_with_order():
    R = PolyRing.standard(3)
    assert R.variables == ("x0", "x1", "x2", "x3")
    L = R.with_order(LEX)
    assert L.order == LEX and L.variables == R.variables
    # ring identity is field + variables; the order is a working view
    assert L == R
    assert L.order != R.order
    assert R.with_order(DEGREVLEX).order == DEGREVLEX


def test_ring_generators():
    R = PolyRing(["x", "y"])
    x, y = R.gens()
    assert x == R.gen(0) == R.var("x")
    assert str(x * y + y * y) == "x*y + y^2"
    assert R.zero().is_zero() and not R.one().is_zero()
    assert R.constant(QQ.from_int(5)).is_constant()


def test_from_dict_drops_zero_coefficients():
    R = PolyRing(["x", "y"])
    f = R.from_dict({(1, 0): QQ.from_int(1), (0, 1): QQ.zero})
    assert f == R.var("x")
    assert R.from_dict({}) == R.zero()


# ---------------------------------------------------------------------------
# polynomial arithmetic
# ---------------------------------------------------------------------------


def test_polynomial_ring_operations(ring3):
    x, y, _ = ring3.gens()
    f = P("x^2 - 2*y^2", ring3)
    g = P("x", ring3)
    assert f == x * x - 2 * y * y
    assert f + f == P("2*x^2 - 4*y^2", ring3)
    assert f - g * g == P("-2*y^2", ring3)
    assert f * g == P("x^3 - 2*x*y^2", ring3)
    assert g ** 3 == P("x^3", ring3)
    assert -f == P("2*y^2 - x^2", ring3)
    assert (f - f).is_zero()


def test_polynomial_queries(ring3):
    f = P("3*x^2*y + x*z^3 + y", ring3)
    assert f.total_degree() == 4
    assert not f.is_homogeneous()
    assert f.degree_in(0) == 2 and f.degree_in(2) == 3
    assert f.variables_used() == {0, 1, 2}
    assert P("x^3 + y^2*z", ring3).is_homogeneous()
    assert f.evaluate([QQ.from_int(1), QQ.from_int(1), QQ.from_int(1)]) == 5


def test_leading_term_under_ring_order(ring3):
    f = P("x*y + z^2 + x^2", ring3)
    assert f.leading_monomial() == (2, 0, 0)
    assert f.leading_coefficient() == 1
    monic = P("3*x^2 + y^2", ring3).monic()
    assert monic == P("x^2 + 1/3*y^2", ring3)


def test_leading_data_in_single_variable(ring3):
    f = P("3*x^2*y + x*z^3 + y", ring3)
    degree, coefficient = leading_data_in_var(f, 0)
    assert degree == 2
    assert coefficient == P("3*y", ring3)
    degree, coefficient = leading_data_in_var(f, 1)
    assert degree == 1
    assert coefficient == P("3*x^2 + 1", ring3)
    with pytest.raises(ValueError):
        leading_data_in_var(ring3.zero(), 0)


def test_cross_ring_operations_are_rejected():
    A, B = PolyRing(["x"]), PolyRing(["y"])
    with pytest.raises(ValueError):
        A.var("x") + B.var("y")


# ---------------------------------------------------------------------------
# parser and formatter
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "text",
    [
        "x^2 - 2*y^2",
        "x*y*z",
        "3/4*x + y",
        "x^3 + 3*x^2*y + 3*x*y^2 + y^3",
        "0",
        "7",
        "-x + y",
        "x^2*y^3*z^4 - 1",
    ],
)
def test_parse_format_round_trip(text, ring3):
    f = P(text, ring3)
    # exact round trip when coefficients are kept verbatim
    assert P(format_polynomial(f, clear_denominators=False), ring3) == f
    # the default display normalizes to a primitive positive form, which
    # is the same polynomial up to a nonzero scalar
    if not f.is_zero():
        assert P(format_polynomial(f), ring3).monic() == f.monic()


def test_parser_details(ring3):
    assert P("x + x", ring3) == P("2*x", ring3)
    assert P("x - x", ring3).is_zero()
    assert P("- x + 2*y", ring3) == P("2*y - x", ring3)
    assert P("2*x^2*y^0", ring3) == P("2*x^2", ring3)
    assert P(" x ^ 2 ", ring3) == P("x^2", ring3)


@pytest.mark.parametrize(
    "bad",
    ["w + 1", "x +", "x ** 2", "1/0", "x^", "(x + y)", "x 2", ""],
)
def test_parse_errors(bad, ring3):
    with pytest.raises(ParseError):
        P(bad, ring3)


def test_parse_error_reports_position(ring3):
    with pytest.raises(ParseError) as info:
        P("x + w", ring3)
    assert "unknown variable" in str(info.value)


def test_format_clears_denominators_and_sign(ring3):
    f = P("1/2*x^2 - 1/3*y^2", ring3)
    assert format_polynomial(f) == "3*x^2 - 2*y^2"
    assert format_polynomial(f, clear_denominators=False) == "1/2*x^2 - 1/3*y^2"
    # leading sign is normalized positive
    assert format_polynomial(P("-x - y", ring3)) == "x + y"
    assert format_polynomial(ring3.zero()) == "0"


def test_format_over_prime_field():
    R = PolyRing(["y", "z"], PrimeField(7))
    f = parse_polynomial("y^3 - z^3", R)
    assert format_polynomial(f) == "y^3 + 6*z^3"


def test_format_orders_terms_descending(ring3):
    f = P("z^3 + x*y + x^2", ring3)
    assert format_polynomial(f) == "z^3 + x^2 + x*y"
    g = P("x^2 + z^3 + x*y", ring3.with_order(LEX))
    assert format_polynomial(g) == "x^2 + x*y + z^3"


# ---------------------------------------------------------------------------
# closed points
# ---------------------------------------------------------------------------


def test_point_normalizes_first_nonzero_coordinate(ring4):
    p = ClosedPoint(ring4, [3, 6, 0, 9])
    assert p.coordinates == (1, 2, 0, 3)
    assert ClosedPoint(ring4, [0, 2, 4, 0]).coordinates == (0, 1, 2, 0)


def test_point_equality_is_projective(ring4):
    assert ClosedPoint(ring4, [2, 4, 0, 0]) == ClosedPoint(ring4, [1, 2, 0, 0])
    assert ClosedPoint(ring4, [1, 0, 0, 0]) != ClosedPoint(ring4, [0, 1, 0, 0])
    assert len({ClosedPoint(ring4, [2, 2, 0, 0]),
                ClosedPoint(ring4, [1, 1, 0, 0])}) == 1


def test_point_rejects_zero_vector(ring4):
    with pytest.raises(ValueError):
        ClosedPoint(ring4, [0, 0, 0, 0])


def test_point_support_and_coordinate_flag(ring4):
    assert ClosedPoint(ring4, [0, 0, 1, 0]).is_coordinate_point()
    assert ClosedPoint(ring4, [0, 0, 1, 0]).support() == (2,)
    p = ClosedPoint(ring4, [1, 0, 1, 0])
    assert not p.is_coordinate_point()
    assert p.support() == (0, 2)


def test_point_vanishing_forms(ring4):
    p = ClosedPoint(ring4, [0, 1, 2, 0])
    forms = p.forms()
    assert [str(f) for f in forms] == ["x0", "2*x1 - x2", "x3"]
    assert all(
        f.evaluate(list(p.coordinates)) == 0 for f in forms
    )


def test_point_from_forms_round_trip(ring4):
    p = ClosedPoint(ring4, [2, 1, 0, 5])
    assert point_from_forms(ring4, p.forms()) == p
    q = point_from_forms(
        ring4, [P("x0", ring4), P("x1", ring4), P("x3", ring4)]
    )
    assert q == ClosedPoint(ring4, [0, 0, 1, 0])


def test_point_from_forms_requires_a_unique_point(ring4):
    with pytest.raises(ValueError):
        point_from_forms(ring4, [P("x0", ring4), P("x1", ring4)])
    with pytest.raises(ValueError):
        point_from_forms(ring4, [P("x0^2", ring4), P("x1", ring4),
                                 P("x2", ring4)])


# ---------------------------------------------------------------------------
# linear coordinate changes
# ---------------------------------------------------------------------------


def test_linear_map_application(ring3):
    one, zero = QQ.one, QQ.zero
    shear = LinearMap(ring3, [
        [one, QQ.from_int(2), zero],
        [zero, one, zero],
        [zero, zero, one],
    ])
    f = P("x^2", ring3)
    assert apply_linear_map(shear, f) == P("x^2 + 4*x*y + 4*y^2", ring3)
    assert shear.apply(P("y + z", ring3)) == P("y + z", ring3)


def test_linear_map_inverse_round_trip(ring3):
    one, zero = QQ.one, QQ.zero
    m = LinearMap(ring3, [
        [one, QQ.from_int(1), QQ.from_int(2)],
        [zero, one, QQ.from_int(-1)],
        [zero, zero, one],
    ])
    f = P("x^3 - y*z^2 + z^3", ring3)
    assert m.inverse().apply(m.apply(f)) == f
    assert m.apply(m.inverse().apply(f)) == f


def test_linear_map_rejects_singular_matrix(ring3):
    one = QQ.one
    with pytest.raises(ValueError):
        LinearMap(ring3, [[one, one, one]] * 3)
    with pytest.raises(ValueError):
        LinearMap(ring3, [[one, one], [one, one]])


def test_point_transform_moves_point_to_coordinate_point(ring4):
    p = ClosedPoint(ring4, [2, 1, 0, 3])
    m = build_point_transform(p)
    pivot = ClosedPoint(ring4, [1, 0, 0, 0])
    # substitution identity: (m f)(pivot) = f(p), so the moved problem
    # sees the centre as the pivot coordinate point
    for text in ("3*x1 - x2 + x3", "x0^2 - x3^2", "x1*x2"):
        f = P(text, ring4)
        assert m.apply(f).evaluate(list(pivot.coordinates)) == f.evaluate(
            list(p.coordinates)
        )
    # in particular every form of p becomes a form vanishing at the pivot
    for f in p.forms():
        assert m.apply(f).evaluate(list(pivot.coordinates)) == 0
