import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncgroups.cyclic import (
    CDCocycle,
    Cochain0,
    CoboundaryError,
    OutsideWindow,
    PsiKCochain,
    RawCochain1,
    RawCochain2,
    S0,
    Sequence,
    b0,
    b1,
    coboundary_feasible,
    cocycle1_from_cd,
    difference_cocycle,
    is_cyclic_cocycle,
    is_trace,
    make_psi,
    make_psi_k,
    pair0,
    residual_1,
    solve_1coboundary,
    solve_2coboundary_psik,
)
from ncgroups.groups import D_ID, DihedralElement, dihedral_elements, dmul
from ncgroups.ring import projection
from ncgroups.scalar import Gaussian

S = lambda m: DihedralElement(m, 0)  # noqa: E731
Se = lambda m: DihedralElement(m, 1)  # noqa: E731
small = st.integers(-4, 4)
sparse = st.dictionaries(st.integers(-6, 6), st.integers(-3, 3), max_size=4)


def antisym(draw_d):
    d = {}
    for n, v in draw_d.items():
        if n > 0:
            d[n], d[-n] = v, -v
    return d


def literal_f(c, m, n):
    """Sum_{k=0}^{m-1} c_{n+m-1-2k} for m > 0."""
    return sum((c.get(n + m - 1 - 2 * k, 0) for k in range(m)), 0)


def recursion_f(c, m, n):
    """f for m <= 0 by f(p, s) = f(p+1, s-1) - c_{s-1-p}, started at f(0, .) = 0."""
    if m == 0:
        return 0
    return recursion_f(c, m + 1, n - 1) - c.get(n - 1 - m, 0)


# degree 0 ---------------------------------------------------------------------


def test_make_psi_examples():
    assert make_psi(1)(DihedralElement(0, 1)) == 2
    assert make_psi(1)(Se(3)) == 0 and make_psi(1)(Se(-4)) == 2
    assert make_psi(2)(Se(-3)) == 2 and make_psi(2)(Se(2)) == 0
    assert make_psi(0)(D_ID) == 1
    assert make_psi(0, dual=False)(Se(0)) == 0
    for k in (1, 3, -2):
        psi = make_psi_k(k)
        assert psi(S(k)) == 1 and psi(S(-k)) == 1
        assert psi(Se(0)) == 0 and psi(Se(1)) == 0 and psi(S(0)) == 0
    with pytest.raises(ValueError):
        make_psi_k(0)
    with pytest.raises(ValueError):
        make_psi(3)


def test_is_trace():
    for psi in [make_psi(0), make_psi(1), make_psi(2), make_psi(0, dual=False)] + [make_psi_k(k) for k in range(1, 5)]:
        assert is_trace(psi, 12)
    assert not is_trace(Cochain0({1: 1}, {}), 4)
    assert is_trace(Cochain0(), 12)
    # x = e, y = Se separates S from S^-1
    psi = Cochain0({1: 1}, {})
    x, y = Se(0), Se(1)
    assert psi(dmul(x, y)) != psi(dmul(y, x))


@given(sparse, sparse)
def test_trace_condition_characterisation(a, b):
    psi = Cochain0(a, b)
    symmetric = all(psi(S(n)) == psi(S(-n)) for n in range(-8, 9))
    parity = all(psi(Se(n)) == psi(Se(n % 2)) for n in range(-8, 9))
    assert is_trace(psi, 8) == (symmetric and parity)


def test_pair0():
    for i in range(3):
        for j in range(3):
            assert pair0(make_psi(i), projection(j)) == (1 if i == j else 0)
    bare = make_psi(0, dual=False)
    assert pair0(bare, projection(1)) == Fraction(1, 2)
    assert pair0(make_psi(1), projection(1)) == 1
    for k in range(1, 7):
        assert all(pair0(make_psi_k(k), projection(j)) == 0 for j in range(3))


def test_sequence_tails():
    s = Sequence({0: 5, 3: 2}, pos=(1, 2), neg=(3, 4))
    assert [s[n] for n in (-3, -2, 0, 1, 2, 3, 100, 101)] == [4, 3, 5, 2, 1, 2, 1, 2]
    assert Sequence({2: 1}, pos=(1, 0)).finite == {}


# b0 ---------------------------------------------------------------------------


@given(sparse, sparse)
def test_b0_formulas(a, b):
    psi = Cochain0(a, b)
    phi = b0(psi, 6)
    av = lambda n: psi(S(n))  # noqa: E731
    bv = lambda n: psi(Se(n))  # noqa: E731
    for m in range(-5, 6):
        for n in range(-5, 6):
            assert phi(S(m), S(n)) == 0
            assert phi(S(m), Se(n)) == bv(m + n) - bv(n - m)
            assert phi(Se(m), Se(n)) == av(m - n) - av(n - m)


def test_b0_of_traces_vanishes():
    for psi in (make_psi(0), make_psi(1), make_psi(2), make_psi_k(3)):
        assert b0(psi, 12).is_zero()


def test_raw_window_enforced():
    phi = b0(Cochain0({1: 1}), 3)
    with pytest.raises(OutsideWindow):
        phi(S(4), S(0))
    with pytest.raises(OutsideWindow):
        b1(phi, 3)


# b1 and the structured cocycles -------------------------------------------------


@given(sparse, sparse)
def test_b1_b0_is_zero(a, b):
    assert b1(b0(Cochain0(a, b), 8), 4).is_zero()


def test_b1_zero():
    assert b1(RawCochain1(8), 4).is_zero()


@given(sparse, sparse)
def test_structured_cocycle_matches_formulas(c, dd):
    d = antisym(dd)
    phi = cocycle1_from_cd(c, d)
    for m in range(-6, 7):
        for n in range(-6, 7):
            expect = literal_f(c, m, n) if m > 0 else recursion_f(c, m, n)
            assert phi(S(m), Se(n)) == expect
            assert phi(Se(m), Se(n)) == d.get(n - m, 0)
            assert phi(S(m), S(n)) == 0
    for n in range(-6, 7):
        assert phi(S(1), Se(n)) == c.get(n, 0)
        assert phi(Se(0), Se(n)) == d.get(n, 0)


@given(sparse, sparse)
def test_structured_cocycle_identities(c, dd):
    phi = cocycle1_from_cd(c, antisym(dd))
    assert is_cyclic_cocycle(phi, 5)


def test_cocycle_rejects_non_antisymmetric_d():
    with pytest.raises(ValueError):
        cocycle1_from_cd({}, {1: 1})
    with pytest.raises(ValueError):
        cocycle1_from_cd({}, {0: 1})


def test_non_cocycle_detected():
    table = {(S(1), Se(0)): Gaussian(1), (Se(0), S(1)): Gaussian(-1)}
    assert not b1(RawCochain1(8, table), 4).is_zero()


# solve_1coboundary -------------------------------------------------------------


def test_solve1_delta_one():
    phi = cocycle1_from_cd({1: 1}, {})
    psi = solve_1coboundary(phi, 12)
    for m in range(1, 10):
        assert psi(Se(2 * m)) == 1
        assert psi(Se(2 * m + 1)) == 0
    assert psi(Se(0)) == 0
    assert not residual_1(psi, phi, 12)


def test_solve1_zero():
    psi = solve_1coboundary(cocycle1_from_cd({}, {}), 12)
    assert psi == Cochain0()


def test_solve1_a_part():
    psi = solve_1coboundary(cocycle1_from_cd({}, {2: 3, -2: -3}), 12)
    assert psi(S(2)) == -3 and psi(S(-2)) == 0


@given(sparse, sparse)
def test_solve1_is_section(c, dd):
    phi = cocycle1_from_cd(c, antisym(dd))
    psi = solve_1coboundary(phi, 10)
    assert not residual_1(psi, phi, 10)


def test_solve1_agrees_with_linear_algebra_up_to_trace():
    phi = cocycle1_from_cd({2: 1, -1: 3}, {1: 2, -1: -2})
    psi = solve_1coboundary(phi, 8)
    found = coboundary_feasible(phi, 6)
    assert found.feasible
    diff = Cochain0(
        {n: psi(S(n)) - found.solution(S(n)) for n in range(-12, 13)},
        {n: psi(Se(n)) - found.solution(Se(n)) for n in range(-11, 12)},
    )
    assert b0(diff, 6).is_zero()


def test_solve1_rejects_raw_input():
    with pytest.raises(TypeError):
        solve_1coboundary(b0(Cochain0({1: 1}), 4))


def test_solve1_residual_raises(monkeypatch):
    import ncgroups.cyclic as cyc

    monkeypatch.setattr(cyc, "_b_sequence", lambda c: Sequence())
    with pytest.raises(CoboundaryError):
        cyc.solve_1coboundary(cocycle1_from_cd({1: 1}, {}), 6)


# S0 and the psi_k solver ---------------------------------------------------------


def test_S0_examples():
    k = 3
    T = S0(make_psi_k(k), 5)
    for p in range(-5, 6):
        for q in range(-5, 6):
            for r in range(-5, 6):
                assert T(S(p), S(q), S(r)) == (1 if p + q + r in (k, -k) else 0)
            assert T(S(p), S(q), Se(0)) == 0
    assert S0(make_psi(0), 2)(D_ID, D_ID, D_ID) == 1
    with pytest.raises(ValueError):
        S0(Cochain0({1: 1}), 3)


def test_psik_examples():
    phi = solve_2coboundary_psik(4)
    assert phi.alpha(3, 1) == Fraction(1, 2)
    assert all(phi.beta(m, n) == 0 for m in range(-5, 6) for n in range(-5, 6))
    assert phi(S(2), Se(3)) == 0 and phi(Se(3), S(2)) == 0
    with pytest.raises(ValueError):
        solve_2coboundary_psik(0)


@pytest.mark.parametrize("k", [1, 2, -3, 5])
def test_psik_antisymmetry(k):
    phi = solve_2coboundary_psik(k, Gaussian(1, 2))
    for m in range(-9, 10):
        for n in range(-9, 10):
            assert phi.alpha(n, m) == -phi.alpha(m, n)
            assert phi.gamma(n, m) == -phi.gamma(m, n)
    assert phi.table(6).is_antisymmetric()


@pytest.mark.parametrize("k", [1, 2, 3, -2])
def test_psik_solves(k):
    phi = solve_2coboundary_psik(k)
    assert (b1(phi, 8) - S0(make_psi_k(k), 8)).is_zero()


@pytest.mark.parametrize("ck", [Gaussian(1), Gaussian(Fraction(-3, 2), 1)])
def test_free_scalar_changes_phi_by_a_coboundary(ck):
    k, W = 2, 6
    diff = difference_cocycle(k, Gaussian(0), ck, 2 * W)
    assert not diff.is_zero()
    assert b1(diff, W).is_zero()
    result = coboundary_feasible(diff, W)
    assert result.feasible
    assert b0(result.solution, W) == RawCochain1(W, {k: v for k, v in diff.table.items()
                                                     if max(map(_len, k)) <= W})


def _len(g):
    return abs(g.shift) + g.flip


# linear-algebra oracle -------------------------------------------------------------


def test_feasible_zero_target():
    result = coboundary_feasible(RawCochain2(4), 4)
    assert result.feasible and result.solution.is_zero()


def test_feasible_psik_matches_solver_up_to_coboundary():
    k, W = 2, 8
    result = coboundary_feasible(S0(make_psi_k(k), W), W)
    assert result.feasible
    found = result.solution
    assert (b1(found, W) - S0(make_psi_k(k), W)).is_zero()
    ours = solve_2coboundary_psik(k)
    elems = dihedral_elements(W)
    diff = RawCochain1(W, {(x, y): found(x, y) - ours(x, y) for x in elems for y in elems})
    assert coboundary_feasible(diff, W // 2).feasible


def test_feasible_psi0_infeasible_with_certificate():
    result = coboundary_feasible(S0(make_psi(0), 8), 8)
    assert not result.feasible
    assert result.certificate_checked
    assert result.certificate.rhs != 0


def test_feasible_psi0_infeasible_off_diagonal():
    # drop the (1, 1, 1) equation: the obstruction does not rest on it alone
    T = S0(make_psi(0), 5)
    table = {k: v for k, v in T.table.items() if k != (D_ID, D_ID, D_ID)}
    result = coboundary_feasible(RawCochain2(5, table), 5)
    assert not result.feasible and result.certificate_checked


# serialization -----------------------------------------------------------------------


def test_json_round_trips():
    for psi in (make_psi(0), make_psi(2), make_psi_k(3), Cochain0({1: Gaussian(1, 1)}, {-2: Fraction(1, 3)})):
        assert Cochain0.from_json(json.dumps(psi.to_json())) == psi
    phi = cocycle1_from_cd({1: 2, -3: Fraction(1, 2)}, {2: 1, -2: -1})
    again = CDCocycle.from_json(json.dumps(phi.to_json()))
    assert again.c == phi.c and again.d == phi.d
    raw = b0(Cochain0({1: 1}, {2: 3}), 3)
    assert RawCochain1.from_json(json.dumps(raw.to_json())) == raw
    T = S0(make_psi_k(1), 2)
    assert RawCochain2.from_json(json.dumps(T.to_json())) == T
    obj = make_psi_k(2).to_json()
    assert obj == {"a": {"-2": "1", "2": "1"}, "b": {}}


def test_json_errors():
    with pytest.raises(ValueError):
        Cochain0.from_json({"a": [1, 2]})
    with pytest.raises(ValueError):
        CDCocycle.from_json({"d": {}})
    with pytest.raises(ValueError):
        CDCocycle.from_json({"c": {}, "d": {"1": "1"}})
    with pytest.raises(ValueError):
        RawCochain1.from_json({"pairs": [[[0, 2], [0, 0], "1"]]})
    with pytest.raises(ValueError):
        Cochain0.from_json({"a": {"1": 0.5}})


def test_psik_json():
    obj = PsiKCochain(2, 1).to_json(3)
    assert obj["k"] == 2 and obj["c_k"] == "1"
    assert RawCochain1.from_json(obj) == PsiKCochain(2, 1).table(3)
