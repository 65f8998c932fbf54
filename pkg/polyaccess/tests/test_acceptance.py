"""End-to-end checks on the regression systems."""

from fractions import Fraction

import pytest
from numpy.random import default_rng

from polyaccess.analysis import IndexKind, algorithm1, algorithm2, bound_analysis, sample_check
from polyaccess.ideal import Ideal
from polyaccess.ideal.ideal import ideal_equal
from polyaccess.ideal.invariance import is_invariant
from polyaccess.immersion import derive_immersed, pull_back_singular, verify_immersion
from polyaccess.immersion.pushforward import ALGEBRAIC_PROOF
from polyaccess.module.chain import stabilize_chain
from polyaccess.poly.core import evaluate
from polyaccess.poly.parser import parse_polynomial

from conftest import make_system


def ideal_of(table, *texts):
    return Ideal(table, tuple(parse_polynomial(t, table) for t in texts))


def test_planar_index_and_ledger(planar):
    report = algorithm1(planar)
    assert report.index_value == 2
    assert ideal_equal(report.singular_ideal, ideal_of(planar.table, "x1", "x2"))
    minors = [ideal_of(planar.table, *r.minors) for r in report.chain_trace]
    radicals = [ideal_of(planar.table, *r.radical) for r in report.chain_trace]
    assert ideal_equal(minors[0], ideal_of(planar.table, "x1^2*x2"))
    assert ideal_equal(minors[1], ideal_of(planar.table, "x1^2*x2", "x1*x2^2", "x1^4"))
    assert ideal_equal(radicals[0], ideal_of(planar.table, "x1*x2"))
    assert ideal_equal(radicals[1], ideal_of(planar.table, "x1"))
    assert ideal_equal(radicals[2], ideal_of(planar.table, "x1", "x2"))
    assert report.certificates["planar_bound"] == 22
    assert report.certificates["within_planar_bound"]


def test_planar_closure_in_two_rounds(planar):
    report = algorithm2(planar)
    expected = ideal_of(planar.table, "x1^2*x2", "x1*x2^2", "x1^4", "x2^3")
    assert report.certificates["closure_rounds"] == 2
    assert ideal_equal(report.singular_ideal, expected)
    assert is_invariant(report.singular_ideal, planar.operators).invariant


def _circle_point(rng):
    t = Fraction(int(rng.integers(-20, 21)), int(rng.integers(1, 11)))
    x2 = (1 - t * t) / (1 + t * t)
    x3 = 2 * t / (1 + t * t)
    return (int(rng.integers(-10, 11)), x2, x3)


def test_cylinder_singular_variety_is_the_circle(cylinder):
    gens = algorithm2(cylinder).singular_ideal.basis
    h = parse_polynomial("x2^2 + x3^2 - 1", cylinder.table)
    rng = default_rng(0)
    for _ in range(100):
        point = _circle_point(rng)
        assert all(evaluate(g, point) == 0 for g in gens)
    checked = 0
    while checked < 100:
        point = tuple(int(a) for a in rng.integers(-6, 7, size=3))
        if evaluate(h, point) == 0:
            continue
        assert any(evaluate(g, point) != 0 for g in gens)
        checked += 1


def test_unicycle_everywhere_accessible(unicycle_file):
    T = unicycle_file.immersion
    imm = derive_immersed(unicycle_file.analytic, T)
    assert verify_immersion(unicycle_file.analytic, T, imm).ok
    chain = stabilize_chain(imm.system)
    assert chain.depth == 1
    report = bound_analysis(imm.system, 3)
    assert ideal_equal(report.singular_ideal, ideal_of(T.target, "z4^2 + z5^2"))
    pullback = pull_back_singular(imm, report.singular_ideal, T)
    assert pullback.empty is True
    assert pullback.grade == ALGEBRAIC_PROOF


def test_pendulum_chain_stabilizes_at_five(pendulum_file):
    imm = derive_immersed(pendulum_file.analytic, pendulum_file.immersion)
    chain = stabilize_chain(imm.system, max_depth=8)
    assert chain.stabilized
    assert chain.depth == 5
    tail = [(step.depth, step.kept, step.basis_size) for step in chain.trace[-3:]]
    assert tail == [(4, 3, 57), (5, 2, 60), (6, 0, 60)]


@pytest.mark.slow
def test_pendulum(pendulum_file):
    T = pendulum_file.immersion
    imm = derive_immersed(pendulum_file.analytic, T)
    report = bound_analysis(imm.system, 4, max_depth=8)
    gens = report.singular_ideal.basis
    expected = ideal_of(T.target, "z4*z6*z7", "z5*z7").basis
    rng = default_rng(3)
    for i in range(60):
        point = [int(a) for a in rng.integers(-4, 5, size=7)]
        if i % 2:
            point[3] = point[4] = 0
        on = all(evaluate(g, point) == 0 for g in gens)
        assert on == all(evaluate(e, point) == 0 for e in expected)
    pullback = pull_back_singular(imm, report.singular_ideal, T)
    assert pullback.empty is False
    assert pullback.witness[2] == 0
    assert pullback.witness[3] == 0
    diagnostics = sample_check(report, imm.system, trials=40, max_depth=8)
    assert diagnostics.depth == 5
    assert diagnostics.on_variety > 0
    assert diagnostics.mismatches == []


def _eigen_field(rng, n, label):
    """Monomial multiple of a diagonal field; brackets and minors stay monomial."""
    coeffs = [int(c) for c in rng.choice([-2, -1, 1, 2], size=n)]
    if rng.random() < 0.3:
        axis = int(rng.integers(n))
        while True:
            exps = [int(e) for e in rng.integers(0, 2, size=n)]
            exps[axis] = int(rng.integers(0, 3))
            if sum(exps) <= 3:
                break
        comps = ["0"] * n
        comps[axis] = _monomial(coeffs[axis], exps, n)
        return label, comps
    while True:
        w = [int(e) for e in rng.integers(0, 2, size=n)]
        if sum(w) <= 2:
            break
    comps = []
    for i in range(n):
        exps = list(w)
        exps[i] += 1
        comps.append(_monomial(coeffs[i], exps, n))
    return label, comps


def _monomial(coeff, exps, n):
    factors = [str(coeff)]
    factors += [f"x{i + 1}^{e}" for i, e in enumerate(exps) if e]
    return "*".join(factors)


def test_bound_dominates_exact_index(planar):
    cases = [planar]
    rng = default_rng(2024)
    for _ in range(150):
        n = int(rng.integers(2, 4))
        names = [f"x{i + 1}" for i in range(n)]
        drift = _eigen_field(rng, n, "f")[1] if n == 3 or rng.random() < 0.5 else None
        inputs = [_eigen_field(rng, n, f"g{k + 1}") for k in range(int(rng.integers(1, 3)))]
        if n == 3 and len(inputs) == 1:
            inputs.append(_eigen_field(rng, n, "g2"))
        cases.append(make_system(names, drift, inputs))

    completed = 0
    for system in cases:
        report = algorithm1(system, max_depth=4, fallback=False)
        if report.index_kind is not IndexKind.EXACT_R:
            continue
        chain = stabilize_chain(system, max_depth=4)
        if not chain.stabilized:
            continue
        assert chain.depth >= report.index_value
        completed += 1
    assert completed >= 21


@pytest.mark.parametrize("name", ["planar", "coordinates"])
def test_sampled_ranks_match_singular_ideal(name, planar):
    if name == "planar":
        system = planar
    else:
        system = make_system(["x1", "x2"], None, [("g1", ["1", "0"]), ("g2", ["0", "x1"])])
    report = algorithm1(system)
    diagnostics = sample_check(report, system, trials=60)
    assert diagnostics.points == 60
    assert diagnostics.mismatches == []


def test_sampled_ranks_match_on_unicycle(unicycle_file):
    imm = derive_immersed(unicycle_file.analytic, unicycle_file.immersion)
    report = algorithm1(imm.system, 3)
    diagnostics = sample_check(report, imm.system, trials=60)
    assert diagnostics.ok
    assert diagnostics.on_variety >= 1


def test_sampled_ranks_reach_the_cylinder_circle(cylinder):
    report = algorithm2(cylinder)
    diagnostics = sample_check(report, cylinder, trials=60)
    assert diagnostics.points == 60
    assert diagnostics.on_variety > 0
    assert diagnostics.mismatches == []
