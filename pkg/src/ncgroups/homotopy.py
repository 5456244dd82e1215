"""The plane module for C*(Z x| Z) and the phase homotopy F_t.

Phases live on the plane window as a complex array indexed ``[p + N, q + N]``.
F_t e_{p,q} = sign(p) on the axis q = 0 and
(p + i(1-t)q) / |p + i(1-t)q| elsewhere; at p = 0, t = 1 the 0/0 entry is
given its t -> 1 limit i sign(q).
"""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .operators import (
    FLOAT,
    RepId,
    Window,
    WindowedOperator,
    block_even_F,
    grading,
    represent,
)
from .ring import SEMIDIRECT, RingElement


def rep2d(x: RingElement, w: Window) -> WindowedOperator:
    """pi(U) e_{p,q} = e_{p, q+(-1)^p}, pi(V) e_{p,q} = e_{p+1,q}, compressed."""
    if x.group != SEMIDIRECT:
        raise ValueError("rep2d represents the Z x| Z group ring")
    return represent(RepId.REPB2D, x, w)


@dataclass
class PhaseOperator:
    window: Window
    t: Fraction
    values: np.ndarray = field(repr=False)

    def __getitem__(self, site) -> complex:
        p, q = site
        N = self.window.radius
        return complex(self.values[p + N, q + N])

    def entries(self) -> dict:
        N = self.window.radius
        return {(p, q): complex(self.values[p + N, q + N]) for p, q in self.window.site_list()}

    def as_operator(self) -> WindowedOperator:
        return WindowedOperator.diagonal(self.window, self.entries(), FLOAT)

    def modulus_defect(self) -> float:
        return float(np.max(np.abs(np.abs(self.values) - 1.0)))


def _grid(w: Window):
    if w.kind != "plane" or w.blocks != 1:
        raise ValueError("phase operators live on a single plane window")
    N = w.radius
    r = np.arange(-N, N + 1)
    P, Q = np.meshgrid(r, r, indexing="ij")
    return P, Q


def build_F0(w: Window) -> PhaseOperator:
    """(p + iq)/|p + iq| off the origin, 1 at the origin."""
    P, Q = _grid(w)
    Z = P + 1j * Q
    mod = np.abs(Z)
    out = np.ones_like(Z)
    nz = mod > 0
    out[nz] = Z[nz] / mod[nz]
    return PhaseOperator(w, Fraction(0), out)


def build_Ft(t, w: Window) -> PhaseOperator:
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise ValueError(f"t must lie in [0, 1], got {t}")
    P, Q = _grid(w)
    s = float(1 - t)
    out = np.where(P >= 0, 1.0 + 0j, -1.0 + 0j)  # q = 0 axis, sign(0) = +1
    off = Q != 0
    Z = P + 1j * s * Q
    mod = np.abs(Z)
    regular = off & (mod > 0)
    out[regular] = Z[regular] / mod[regular]
    limit = off & (mod == 0)  # only p = 0, t = 1
    out[limit] = 1j * np.sign(Q[limit])
    return PhaseOperator(w, t, out)


def doubled_module(t, w: Window):
    """F~_t = (0 F_t; F_t* 0) on the doubled plane and the grading diag(1, -1)."""
    phase = build_Ft(t, w)
    Ft = block_even_F(phase.as_operator(), "adjoint")
    return Ft, grading(w.doubled()).to_float()


# commutators of a diagonal with the generators, vectorised ------------------


def commutator_U(values: np.ndarray) -> np.ndarray:
    """|[F, pi(U)]| on each source basis vector e_{p,q} (zero when the image
    leaves the window)."""
    n = values.shape[0]
    N = (n - 1) // 2
    out = np.zeros(values.shape)
    for i in range(n):
        step = 1 if (i - N) % 2 == 0 else -1
        col = values[i]
        if step == 1:
            out[i, :-1] = np.abs(col[1:] - col[:-1])
        else:
            out[i, 1:] = np.abs(col[:-1] - col[1:])
    return out


def commutator_V(values: np.ndarray) -> np.ndarray:
    out = np.zeros(values.shape)
    out[:-1, :] = np.abs(values[1:, :] - values[:-1, :])
    return out


def tail(mags: np.ndarray, R: int) -> float:
    n = mags.shape[0]
    N = (n - 1) // 2
    r = np.arange(-N, N + 1)
    P, Q = np.meshgrid(r, r, indexing="ij")
    outside = np.maximum(np.abs(P), np.abs(Q)) > R
    return float(mags[outside].max()) if outside.any() else 0.0


@dataclass
class HomotopyReport:
    window_radius: int
    grid: list
    tolerance: float
    unitarity_defect: float
    selfadjoint_defect: float
    square_defect: float
    grading_defect: float
    endpoint_offaxis_commutator: float
    endpoint_axis_support: list
    endpoint_axis_rank: int
    lipschitz_ratio: float
    lipschitz_bound: float
    tail_radii: list
    tail_decay: dict
    failures: list

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        out = asdict(self)
        out["grid"] = [str(t) for t in self.grid]
        out["passed"] = self.passed
        return out

    def tail_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["generator", "t", *[f"R={R}" for R in self.tail_radii]])
        for gen, by_t in self.tail_decay.items():
            for t, row in by_t.items():
                writer.writerow([gen, t, *[repr(row[str(R)]) for R in self.tail_radii]])
        return buf.getvalue()


def homotopy_report(steps: int = 10, w: Window | int = 64, tol: float = 1e-9) -> HomotopyReport:
    """Evaluate the homotopy t -> F_t on the grid {0, 1/steps, ..., 1}."""
    if steps < 2:
        raise ValueError("steps must be >= 2")
    if isinstance(w, int):
        w = Window("plane", w)
    N = w.radius
    grid = [Fraction(j, steps) for j in range(steps + 1)]
    radii = [max(1, N // 8), max(2, N // 4), max(4, N // 2)]
    unit = sad = sq = grad = 0.0
    tails: dict = {"U": {}, "V": {}}
    prev = None
    lip = 0.0
    for t in grid:
        phase = build_Ft(t, w)
        vals = phase.values
        unit = max(unit, float(np.max(np.abs(vals * np.conj(vals) - 1.0))))
        Ft, gamma = doubled_module(t, w)
        sad = max(sad, (Ft - Ft.adjoint()).max_abs())
        sq_op = Ft @ Ft - WindowedOperator.identity(Ft.window, FLOAT)
        sq = max(sq, sq_op.max_abs())
        grad = max(grad, (gamma @ Ft + Ft @ gamma).max_abs())
        cu, cv = commutator_U(vals), commutator_V(vals)
        tails["U"][str(t)] = {str(R): tail(cu, R) for R in radii}
        tails["V"][str(t)] = {str(R): tail(cv, R) for R in radii}
        if prev is not None:
            lip = max(lip, float(np.max(np.abs(vals - prev))) * steps)
        prev = vals

    end = build_Ft(1, w).values
    cu = commutator_U(end)
    offaxis = float(np.delete(cu, N, axis=0).max())
    axis = cu[N]
    support = [int(q) for q in np.nonzero(axis > tol)[0] - N]
    # on the p = 0 column [F_1, pi(U)] is diagonal-times-shift: rank = support size
    axis_rank = len(support)
    bound = float(N)

    failures = []
    if unit > tol:
        failures.append(f"unitarity defect {unit:.3e} > {tol}")
    if sq > tol:
        failures.append(f"F~^2 - 1 defect {sq:.3e} > {tol}")
    if sad > tol:
        failures.append(f"self-adjointness defect {sad:.3e} > {tol}")
    if grad > tol:
        failures.append(f"grading anticommutation defect {grad:.3e} > {tol}")
    if offaxis > tol:
        failures.append(f"[F_1, pi(U)] off-axis max {offaxis:.3e} > {tol}")
    if any(abs(q) > 1 for q in support):
        failures.append(f"[F_1, pi(U)] axis support {support} leaves |q| <= 1")
    v0 = [tails["V"]["0"][str(R)] for R in radii]
    if not all(a > b for a, b in zip(v0, v0[1:])):
        failures.append(f"tail of [F_0, pi(V)] not decreasing: {v0}")
    if lip > bound + tol:
        failures.append(f"grid Lipschitz ratio {lip:.3f} exceeds {bound}")

    return HomotopyReport(
        window_radius=N,
        grid=grid,
        tolerance=tol,
        unitarity_defect=unit,
        selfadjoint_defect=sad,
        square_defect=sq,
        grading_defect=grad,
        endpoint_offaxis_commutator=offaxis,
        endpoint_axis_support=support,
        endpoint_axis_rank=axis_rank,
        lipschitz_ratio=lip,
        lipschitz_bound=bound,
        tail_radii=radii,
        tail_decay=tails,
        failures=failures,
    )
