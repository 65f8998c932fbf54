import pytest
from numpy.random import default_rng

from polyaccess.core.exceptions import ParseError, PolyaccessError
from polyaccess.lie import (
    Mode,
    SystemSpec,
    VectorField,
    evaluate_word,
    extend_family,
    family_at,
    initial_family,
    lie_bracket,
    lie_derivative,
)
from polyaccess.poly.core import VarTable, format_poly

from conftest import make_system, random_poly


def random_field(table, rng, label):
    return VectorField(table, tuple(random_poly(table, rng) for _ in range(table.n)), label)


def random_triples(count, seed):
    rng = default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, 5))
        table = VarTable(tuple(f"x{i + 1}" for i in range(n)))
        yield table, rng, tuple(random_field(table, rng, label) for label in "XYZ")


def test_bracket_identities_on_random_triples():
    for table, rng, (X, Y, Z) in random_triples(100, seed=7):
        a, b = 3, -2
        # antisymmetry
        assert lie_bracket(X, Y) == lie_bracket(Y, X).scaled(-1)
        # bilinearity
        assert lie_bracket(X.scaled(a) + Y.scaled(b), Z) == (
            lie_bracket(X, Z).scaled(a) + lie_bracket(Y, Z).scaled(b)
        )
        # Jacobi
        total = (
            lie_bracket(X, lie_bracket(Y, Z))
            + lie_bracket(Y, lie_bracket(Z, X))
            + lie_bracket(Z, lie_bracket(X, Y))
        )
        assert total.is_zero


def test_bracket_of_scaled_fields_on_random_triples():
    for table, rng, (X, Y, _) in random_triples(100, seed=13):
        p1, p2 = random_poly(table, rng), random_poly(table, rng)
        lhs = lie_bracket(X.scaled(p1), Y.scaled(p2))
        rhs = (
            lie_bracket(X, Y).scaled(p1 * p2)
            + Y.scaled(p1 * lie_derivative(X, p2))
            - X.scaled(p2 * lie_derivative(Y, p1))
        )
        assert lhs == rhs


def test_derivative_of_bracket_is_commutator():
    for table, rng, (X, Y, _) in random_triples(100, seed=11):
        p = random_poly(table, rng)
        lhs = lie_derivative(lie_bracket(X, Y), p)
        rhs = lie_derivative(X, lie_derivative(Y, p)) - lie_derivative(Y, lie_derivative(X, p))
        assert lhs == rhs


def test_lie_derivative_product_rule():
    for table, rng, (X, _, _) in random_triples(50, seed=3):
        p, q = random_poly(table, rng), random_poly(table, rng)
        assert lie_derivative(X, p * q) == lie_derivative(X, p) * q + p * lie_derivative(X, q)


def test_planar_bracket(planar):
    g1, g2 = planar.inputs
    bracket = lie_bracket(g1, g2)
    assert bracket.label == "[g1,g2]"
    assert [format_poly(c) for c in bracket] == ["-x1^2", "2*x1*x2"]


def test_family_prunes_zero_and_scalar_multiples(planar):
    family = extend_family(initial_family(planar), planar)
    assert family.depth == 1
    assert family.labels == ["g1", "g2", "[g1,g2]"]
    assert [X.label for X in family.frontier] == ["[g1,g2]"]


def test_driftless_strong_family_matches_plain(planar):
    plain = family_at(planar, 2)
    strong = family_at(planar, 2, Mode.STRONG)
    assert plain.fields == strong.fields


def test_strong_family_excludes_drift(cylinder):
    assert initial_family(cylinder).labels == ["f", "g"]
    strong = initial_family(cylinder, Mode.STRONG)
    assert strong.labels == ["g"]
    assert extend_family(strong, cylinder).labels == ["g", "[f,g]"]


def test_labels_evaluate_back_to_fields(cylinder):
    family = family_at(cylinder, 3)
    for X in family.fields:
        assert evaluate_word(X.label, cylinder) == X


def test_bad_bracket_word(planar):
    with pytest.raises(ParseError):
        evaluate_word("[g1,", planar)
    with pytest.raises(ParseError):
        evaluate_word("[g1,g3]", planar)


def test_system_spec_checks():
    table = VarTable(("x1",))
    g = VectorField(table, (table.one,), "g")
    with pytest.raises(PolyaccessError):
        SystemSpec(table, VectorField.zero(table, "f"), ())
    with pytest.raises(PolyaccessError):
        SystemSpec(table, VectorField.zero(table, "g"), (g,))
    system = SystemSpec(table, VectorField.zero(table, "f"), (g,))
    assert system.is_driftless
    assert system.operators == (g,)


def test_with_order_keeps_fields():
    system = make_system(["x1", "x2"], ["x2^2", "x1"], [("g", ["1", "x1*x2"])])
    moved = system.with_order("lex")
    assert moved.table.order == "lex"
    assert [format_poly(c) for c in moved.inputs[0]] == ["1", "x1*x2"]
