"""Acceptance criteria, one test per criterion.

Each test carries a ``criterion`` label; conftest prints a PASS/FAIL line per
criterion at the end of the run.
"""

import random
import time

import pytest

from ncgroups.cyclic import (
    Cochain0,
    S0,
    b0,
    b1,
    coboundary_feasible,
    cocycle1_from_cd,
    is_cyclic_cocycle,
    make_psi,
    make_psi_k,
    pair0,
    residual_1,
    solve_1coboundary,
    solve_2coboundary_psik,
)
from ncgroups.fredholm import (
    EXPECTED_TABLE,
    InstabilityError,
    _settle,
    chern_pair_even,
    chern_pair_odd,
    even_summand,
    make_module,
    pairing_table,
)
from ncgroups.homotopy import build_Ft, commutator_U, homotopy_report
from ncgroups.operators import (
    RepId,
    anticommutator,
    commutator,
    lattice_rank,
    Window,
    line,
    rank_exact,
    represent,
    sign_F,
)
from ncgroups.ring import DIHEDRAL, SEMIDIRECT, RingElement, projection
from ncgroups.scalar import Gaussian

SEED = 1729


def criterion(label):
    def mark(fn):
        fn.criterion = label
        return fn
    return mark


def w(text, group=DIHEDRAL):
    return RingElement.word(group, text)


def random_cd(rng, support=8):
    c = {rng.randint(-support, support): rng.randint(-6, 6) for _ in range(rng.randint(0, 6))}
    d = {}
    for _ in range(rng.randint(0, 4)):
        n, v = rng.randint(1, support), rng.randint(-6, 6)
        d[n], d[-n] = v, -v
    return c, d


def random_cochain0(rng, support=8):
    a = {rng.randint(-support, support): Gaussian(rng.randint(-4, 4), rng.randint(-1, 1)) for _ in range(rng.randint(0, 5))}
    b = {rng.randint(-support, support): Gaussian(rng.randint(-4, 4), rng.randint(-1, 1)) for _ in range(rng.randint(0, 5))}
    return Cochain0(a, b)


# integer outputs, collected per window radius for the stability criterion
def integer_outputs(N):
    out = {}
    out["table"] = pairing_table(N, (1, 2))
    out["z0"] = chern_pair_even("z0", projection(0), (1, 2, 3, 4), N).value
    out["z1 V"] = chern_pair_odd("z1", w("S"), N).value
    out["w1B V"] = chern_pair_odd("w1B", w("V", SEMIDIRECT), N).value
    out["z1 1"] = chern_pair_odd("z1", RingElement.one(DIHEDRAL), N).value
    mod = make_module("w1", N)
    for g in ("S", "e"):
        C = commutator(mod.F, mod.rep(w(g)))
        out[f"w1 {g} ranks"] = (lattice_rank(C), rank_exact(C))
    L = line(N)
    out["Rep1 eS"] = rank_exact(anticommutator(sign_F(L), represent(RepId.REP1, w("eS"), L)))
    z1 = make_module("z1", N)
    out["z1 [F,V]"] = rank_exact(commutator(z1.F, z1.rep(w("S"))))
    return out


@criterion("1: pairing table [[1,1,1],[0,1,0],[0,0,1]], exact, k in {1,2}, N = 32 and 64, under 10 s")
def test_criterion_01_pairing_table():
    start = time.perf_counter()
    for N in (32, 64):
        for k_list in ((1,), (2,), (1, 2)):
            assert pairing_table(N, k_list) == EXPECTED_TABLE
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"took {elapsed:.2f} s"
    r = chern_pair_even("w1", projection(1), (1, 2), 32)
    assert isinstance(r.value, int) and r.stable


@criterion("2: <ch(z0), [1]> = 1 exactly, each summand 1 for k = 1..4")
def test_criterion_02_trivial_projection():
    mod = make_module("z0")
    one = RingElement.one(DIHEDRAL)
    for k in range(1, 5):
        assert (-1) ** k * even_summand(mod, one, k) == 1
    assert chern_pair_even("z0", one, (1, 2, 3, 4)).value == 1


@criterion("3: <z1, V> = 1, <w1B, V> = 1 stable under window doubling; <z1, 1> = 0")
def test_criterion_03_odd_pairings():
    for N in (32, 64):
        a = chern_pair_odd("z1", w("S"), N)
        b = chern_pair_odd("w1B", w("V", SEMIDIRECT), N)
        c = chern_pair_odd("z1", RingElement.one(DIHEDRAL), N)
        assert (a.value, b.value, c.value) == (1, 1, 0)
        assert a.stable and b.stable and c.stable


@criterion("4: Tr(gamma pi1(P1) [F1, pi1(P1)]^{2k}) = (-1)^k exactly for k = 1..4")
def test_criterion_04_trace_identity():
    for N in (16, 32):
        mod = make_module("w1", N)
        for k in range(1, 5):
            value = even_summand(mod, projection(1), k)
            assert isinstance(value, Gaussian)
            assert value == (-1) ** k


@criterion("5: rank claims by exact elimination (w1 commutators rank one on the lattice factor, Rep1 F.eS + eS.F = 0, z1 [F, V] rank one)")
def test_criterion_05_ranks():
    mod = make_module("w1", 32)
    for g in ("S", "e"):
        C = commutator(mod.F, mod.rep(w(g)))
        # C = c (x) M with c rank one on l2(Z) and M invertible on C^2
        assert lattice_rank(C) == 1
        assert rank_exact(C) == 2
    L = line(32)
    assert rank_exact(anticommutator(sign_F(L), represent(RepId.REP1, w("eS"), L))) == 0
    z1 = make_module("z1", 32)
    assert rank_exact(commutator(z1.F, z1.rep(w("S")))) == 1


@criterion("6: solve_1coboundary, 100 seeded random (c, d) with support <= 8, b0(psi) = phi exactly on word length <= 16")
def test_criterion_06_one_coboundaries():
    rng = random.Random(SEED)
    for _ in range(100):
        c, d = random_cd(rng)
        phi = cocycle1_from_cd(c, d)
        psi = solve_1coboundary(phi, 16, verify=False)
        assert residual_1(psi, phi, 16) == {}


@criterion("7: b1(phi) = S0(psi_k) exactly for k = 1..6 on word length <= 12; S0(psi_0) infeasible at 8 with certificate")
def test_criterion_07_psik_coboundaries():
    for k in range(1, 7):
        phi = solve_2coboundary_psik(k)
        assert (b1(phi, 12) - S0(make_psi_k(k), 12)).is_zero()
    result = coboundary_feasible(S0(make_psi(0), 8), 8)
    assert not result.feasible
    assert result.certificate_checked


@criterion("8: b1 b0 = 0 on 100 seeded random 0-cochains (bound 8); cocycle1_from_cd outputs are cyclic cocycles (bound 10)")
def test_criterion_08_cochain_calculus():
    rng = random.Random(SEED + 1)
    for _ in range(100):
        psi = random_cochain0(rng)
        assert b1(b0(psi, 16), 8).is_zero()
    for _ in range(20):
        c, d = random_cd(rng)
        assert is_cyclic_cocycle(cocycle1_from_cd(c, d), 10)


@criterion("9: psi_i(P_j) = delta_ij for i, j in {0,1,2}; psi_k(P_j) = 0 for k = 1..6")
def test_criterion_09_psi_pairings():
    for i in range(3):
        for j in range(3):
            assert pair0(make_psi(i), projection(j)) == (1 if i == j else 0)
    for k in range(1, 7):
        for j in range(3):
            assert pair0(make_psi_k(k), projection(j)) == 0


@criterion("10: homotopy at N = 64 over 11 t-values: |F~^2 - I| <= 1e-9, [F1, pi(U)] = 0 off p = 0, tail of [F0, pi(V)] decreasing over R = 8, 16, 32")
def test_criterion_10_homotopy():
    report = homotopy_report(10, 64, 1e-9)
    assert len(report.grid) == 11
    assert report.square_defect <= 1e-9
    assert report.endpoint_offaxis_commutator <= 1e-12
    assert report.tail_radii == [8, 16, 32]
    v = [report.tail_decay["V"]["0"][str(R)] for R in (8, 16, 32)]
    assert v[0] > v[1] > v[2]
    for a, b in zip(v, v[1:]):
        assert 2 / 1.2 <= a / b <= 2 * 1.2
    # the p = 0 residue is genuinely nonzero and confined to q in {-1, 0}
    cu = commutator_U(build_Ft(1, Window("plane", 64)).values)
    assert cu[64].max() > 0
    assert report.endpoint_axis_support == [-1, 0]
    assert report.passed, report.failures


@criterion("11: every integer output identical at N and 2N; instability is reported")
def test_criterion_11_window_stability():
    small, large = integer_outputs(32), integer_outputs(64)
    assert small == large
    with pytest.raises(InstabilityError):
        _settle([Gaussian(1), Gaussian(0)], [1], 32, True, "probe")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
