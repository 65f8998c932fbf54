from fractions import Fraction

import pytest
from numpy.random import default_rng

from polyaccess.core.exceptions import MinorSizeError
from polyaccess.ideal import Ideal
from polyaccess.lie.family import family_at, initial_family
from polyaccess.minors import (
    FieldMatrix,
    build_matrix,
    certified_rank,
    determinant,
    generic_rank,
    minor_ideal,
    numeric_rank,
)
from polyaccess.poly.core import VarTable, evaluate, format_poly
from polyaccess.poly.parser import parse_polynomial

from conftest import make_system, random_rational_point


def ideal_of(table, *texts):
    return Ideal(table, tuple(parse_polynomial(t, table) for t in texts))


def test_planar_minor_ideals(planar):
    m0 = minor_ideal(build_matrix(family_at(planar, 0)), 2)
    assert [format_poly(g) for g in m0.generators] == ["x1^2*x2"]
    m1 = minor_ideal(build_matrix(family_at(planar, 1)), 2)
    assert m1.ideal == ideal_of(planar.table, "x1^2*x2", "x1*x2^2", "x1^4")
    assert m1.depth == 1


def test_pruning_keeps_the_ideal(planar):
    M = build_matrix(family_at(planar, 3))
    assert minor_ideal(M, 2).ideal == minor_ideal(M, 2, prune=False).ideal


def test_minor_size_range(planar):
    M = build_matrix(initial_family(planar))
    with pytest.raises(MinorSizeError):
        minor_ideal(M, 0)
    with pytest.raises(MinorSizeError):
        minor_ideal(M, 3)


def test_too_few_columns_gives_zero_ideal():
    system = make_system(["x1", "x2"], None, [("g", ["x2", "0"])])
    result = minor_ideal(build_matrix(initial_family(system)), 2)
    assert result.ideal.is_zero


def test_constant_minor_gives_unit_ideal():
    system = make_system(["x1", "x2"], None, [("g1", ["1", "0"]), ("g2", ["x1", "1"])])
    result = minor_ideal(build_matrix(initial_family(system)), 2)
    assert not result.ideal.is_proper


def test_determinant_sizes():
    table = VarTable(("x1", "x2"))
    x1, x2 = table.gen(0), table.gen(1)
    zero, one = table.zero, table.one
    rows = [
        [x1, zero, zero, zero],
        [zero, x2, zero, one],
        [zero, zero, one, zero],
        [zero, one, zero, table.const(2)],
    ]
    assert determinant(rows, table.ring) == x1 * (2 * x2 - 1)
    assert determinant([[x1, x2], [one, x1]], table.ring) == x1 ** 2 - x2
    assert determinant([[x1]], table.ring) == x1


def test_numeric_rank(planar):
    M = build_matrix(initial_family(planar))
    assert numeric_rank(M, (0, 0)) == 0
    assert numeric_rank(M, (1, 0)) == 1
    assert numeric_rank(M, (1, 1)) == 2


def test_generic_rank_and_witness(planar):
    M = build_matrix(initial_family(planar))
    certificate = certified_rank(M, seed=3)
    assert certificate.rank == 2
    assert certificate.minor
    assert format_poly(certificate.minor.monic()) == "x1^2*x2"


def test_generic_rank_of_dependent_columns():
    system = make_system(["x1", "x2"], None, [("g1", ["x2", "x1"]), ("g2", ["x1*x2", "x1^2"])])
    assert generic_rank(build_matrix(initial_family(system))) == 1


def test_matrix_shape_and_labels(cylinder):
    M = build_matrix(family_at(cylinder, 1))
    assert M.shape == (3, 3)
    assert M.labels == ["f", "g", "[f,g]"]
    assert isinstance(M.pruned(), FieldMatrix)


CIRCLE_POINTS = [(Fraction(3, 5), Fraction(4, 5)), (Fraction(-5, 13), Fraction(12, 13)), (1, 0), (0, -1)]


def oracle_points(rng, n, count=60):
    for i in range(count):
        point = list(random_rational_point(rng, n, zeros=0.4))
        if n == 3 and i % 3 == 0:
            point[1:] = CIRCLE_POINTS[int(rng.integers(len(CIRCLE_POINTS)))]
        yield tuple(point)


@pytest.mark.parametrize("name", ["planar", "cylinder"])
def test_rank_drops_exactly_on_minor_variety(name, request):
    system = request.getfixturevalue(name)
    rng = default_rng(41)
    for depth in range(3):
        M = build_matrix(family_at(system, depth))
        for l in range(1, system.n + 1):
            gens = minor_ideal(M, l).generators
            for point in oracle_points(rng, system.n):
                vanishes = all(evaluate(g, point) == 0 for g in gens)
                assert (numeric_rank(M, point) < l) == vanishes, (depth, l, point)


@pytest.mark.parametrize("name", ["planar", "cylinder"])
def test_generic_rank_grows_with_depth(name, request):
    system = request.getfixturevalue(name)
    ranks = [generic_rank(build_matrix(family_at(system, k)), seed=5) for k in range(4)]
    assert ranks == sorted(ranks)
    assert ranks[-1] <= system.n
