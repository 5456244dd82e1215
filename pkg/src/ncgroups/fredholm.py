"""Fredholm modules over C[Gamma] and C[G], their checks and pairings.

Modules are referred to by name:

    z0, z1      canonical even / odd modules over C(T) (S plays the unitary)
    w0, w1, w2  even modules over the dihedral group algebra
    w0B, w1B    even / odd modules over C*(Z x| Z)
    d1z1        the even module on l2(Z^2) + l2(Z^2) with the phase operator

Even pairings use (-1)^k Tr(gamma pi(p) [F, pi(p)]^{2k}); odd pairings use
the index of the compression E pi(u) E with E = (1 + F)/2.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

from . import homotopy
from .groups import DihedralElement, GElement, g_elements
from .linalg import rank
from .operators import (
    EXACT,
    PAIR,
    RepId,
    Window,
    WindowedOperator,
    block_even_F,
    commutator,
    direct_sum,
    grading,
    lattice_rank,
    line,
    pair_flip,
    rank_exact,
    represent,
    required_radius,
    sign,
    sign_F,
)
from .ring import DIHEDRAL, SEMIDIRECT, RingElement, projection
from .scalar import Gaussian

DEFAULT_RADIUS = 32


class ModuleError(ValueError):
    pass


class InstabilityError(RuntimeError):
    """A pairing changed with k or with the window: a truncation bug."""


@dataclass(frozen=True)
class FredholmDescriptor:
    name: str
    parity: str  # "even" | "odd"
    rep: RepId
    F: str
    graded: bool
    window_kind: str
    group: str
    generators: tuple[str, ...]
    doubled: bool = False


DESCRIPTORS = {
    "z0": FredholmDescriptor("z0", "even", RepId.REP0, "flip", True, "pair", DIHEDRAL, ("S",)),
    "z1": FredholmDescriptor("z1", "odd", RepId.REPCT, "sign", False, "line", DIHEDRAL, ("S",)),
    "w0": FredholmDescriptor("w0", "even", RepId.REP0, "flip", True, "pair", DIHEDRAL, ("S", "e")),
    "w1": FredholmDescriptor("w1", "even", RepId.REP1, "i-sign", True, "line", DIHEDRAL, ("S", "e"), True),
    "w2": FredholmDescriptor("w2", "even", RepId.REP2, "i-sign", True, "line", DIHEDRAL, ("S", "e"), True),
    "w0B": FredholmDescriptor("w0B", "even", RepId.REP0, "flip", True, "pair", SEMIDIRECT, ("U", "V")),
    "w1B": FredholmDescriptor("w1B", "odd", RepId.REPB1, "sign", False, "line", SEMIDIRECT, ("U", "V")),
    "d1z1": FredholmDescriptor("d1z1", "even", RepId.REPB2D, "phase", True, "plane", SEMIDIRECT, ("U", "V"), True),
}


@dataclass
class FredholmModule:
    descriptor: FredholmDescriptor
    window: Window  # window the operators live on (doubled where relevant)
    F: WindowedOperator
    gamma: WindowedOperator | None
    rep: Callable[[RingElement], WindowedOperator] = field(repr=False)

    @property
    def name(self) -> str:
        return self.descriptor.name

    @property
    def mode(self) -> str:
        return self.F.mode

    def generator(self, name: str) -> RingElement:
        if name not in self.descriptor.generators:
            raise ModuleError(f"{name!r} is not a generator of {self.name}")
        return RingElement.word(self.descriptor.group, name)


@dataclass
class PairingResult:
    value: int
    powers_checked: list
    window_radius: int
    stable: bool

    def to_json(self) -> dict:
        return asdict(self)


def _sign_twist(x: RingElement) -> RingElement:
    """S -> S, e -> -e, extended multiplicatively."""
    return RingElement(x.group, {g: (-c if g.flip else c) for g, c in x.terms.items()})


def _radius_of(w) -> int:
    if w is None:
        return DEFAULT_RADIUS
    if isinstance(w, int):
        return w
    return w.radius


def make_module(name: str, w: Window | int | None = None, t=0) -> FredholmModule:
    """Build the operators of a named module on a window.

    ``w`` may be a base window of the right kind or just a radius. Doubled
    modules get the doubled window automatically. ``t`` selects the point of
    the phase homotopy for ``d1z1`` (t = 0 is the module itself).
    """
    if name not in DESCRIPTORS:
        raise ModuleError(f"unknown module {name!r}; choose from {sorted(DESCRIPTORS)}")
    d = DESCRIPTORS[name]
    if isinstance(w, Window):
        if w.kind != d.window_kind:
            raise ModuleError(f"{name} lives on a {d.window_kind} window, got {w.kind}")
        base = w.base
    elif d.window_kind == "pair":
        base = PAIR
    else:
        base = Window(d.window_kind, _radius_of(w))

    if d.window_kind == "pair":
        if d.name == "z0":
            def rep(x):
                _require_ct(x)
                return represent(RepId.REP0, x, PAIR)
        else:
            def rep(x):
                return represent(RepId.REP0, x, PAIR)
        return FredholmModule(d, PAIR, pair_flip(), grading(PAIR), rep)

    if d.name in ("z1", "w1B"):
        def rep(x):
            if d.name == "z1":
                _require_ct(x)
            return represent(d.rep, x, base)
        return FredholmModule(d, base, sign_F(base), None, rep)

    if d.name in ("w1", "w2"):
        def rep(x):
            _require_group(x, DIHEDRAL)
            return direct_sum(represent(d.rep, x, base), represent(d.rep, _sign_twist(x), base))
        dw = base.doubled()
        return FredholmModule(d, dw, block_even_F(sign_F(base), "i"), grading(dw), rep)

    # d1z1: pi + pi on the doubled plane, F~ = (0 F_t; F_t* 0), float mode
    Ft, gamma = homotopy.doubled_module(t, base)

    def rep(x):
        a = homotopy.rep2d(x, base).to_float()
        return direct_sum(a, a)

    return FredholmModule(d, Ft.window, Ft, gamma, rep)


def _require_group(x: RingElement, group: str):
    if x.group != group:
        raise ModuleError(f"expected an element of the {group} group ring, got {x.group}")


def _require_ct(x: RingElement):
    _require_group(x, DIHEDRAL)
    if any(g.flip for g in x.terms):
        raise ModuleError("z0 and z1 are modules over C(T): only powers of S are allowed")


# verification ---------------------------------------------------------------


def _check(name, ok, detail=None) -> dict:
    return {"name": name, "pass": bool(ok), "detail": detail}


def _is_zero(A: WindowedOperator, tol: float) -> bool:
    return not A if A.mode == EXACT else A.max_abs() <= tol


def _tail(A: WindowedOperator, R: int) -> float:
    w = A.window
    best = 0.0
    for (r, c), v in A.entries.items():
        if w.site_norm(w.site_of(c)) > R:
            best = max(best, abs(complex(v)))
    return best


def verify_module(
    name: str,
    w: Window | int | None = None,
    generators: Sequence[str] | None = None,
    tol: float = 1e-9,
) -> dict:
    """Check the Fredholm-module axioms on a window and report.

    status is "valid", "degenerate" (all generator commutators vanish) or
    "violations".
    """
    mod = make_module(name, w)
    d = mod.descriptor
    gens = list(generators) if generators else list(d.generators)
    for g in gens:
        mod.generator(g)
    F, gamma, win = mod.F, mod.gamma, mod.window
    I = WindowedOperator.identity(win, mod.mode)
    checks = [
        _check("F self-adjoint", F.is_self_adjoint(tol)),
        _check("F^2 = 1", _is_zero(F @ F - I, tol)),
    ]
    if gamma is not None:
        checks.append(_check("gamma self-adjoint", gamma.is_self_adjoint(tol)))
        checks.append(_check("gamma^2 = 1", _is_zero(gamma @ gamma - I, tol)))
        checks.append(_check("gamma F = -F gamma", _is_zero(gamma @ F + F @ gamma, tol)))

    big = None
    if mod.mode == EXACT and win.kind != "pair":
        big = make_module(name, win.base.grown(2 * win.radius))

    degenerate = True
    for g in gens:
        x = mod.generator(g)
        px = mod.rep(x)
        if gamma is not None:
            checks.append(_check(f"[gamma, pi({g})] = 0", _is_zero(commutator(gamma, px), tol)))
        C = commutator(F, px)
        if not _is_zero(C, tol):
            degenerate = False
        if mod.mode == EXACT:
            radius = C.support_radius()
            detail = {"rank": rank_exact(C), "support_radius": radius}
            if win.blocks == 2:
                detail["lattice_rank"] = lattice_rank(C)
            checks.append(_check(f"[F, pi({g})] finite support", radius <= 2, detail))
            if big is not None:
                C2 = commutator(big.F, big.rep(x))
                checks.append(_check(f"[F, pi({g})] window independent", C2.entries == C.entries))
        else:
            radii = [max(1, win.radius // 8), max(2, win.radius // 4), max(4, win.radius // 2)]
            tails = [_tail(C, R) for R in radii]
            ok = all(a >= b for a, b in zip(tails, tails[1:]))
            checks.append(_check(f"[F, pi({g})] tail decays", ok, dict(zip(map(str, radii), tails))))

    ok = all(c["pass"] for c in checks)
    status = "violations" if not ok else ("degenerate" if degenerate else "valid")
    report = {
        "module": name,
        "status": status,
        "window_radius": win.radius,
        "generators": gens,
        "checks": checks,
        "pairings": [],
    }
    if ok and mod.mode == EXACT:
        report["pairings"] = _default_pairings(name, win.radius)
    return report


def _default_pairings(name: str, radius: int) -> list:
    d = DESCRIPTORS[name]
    out = []
    if d.parity == "even":
        if d.group == DIHEDRAL and name != "z0":
            classes = [("1", projection(0)), ("P1", projection(1)), ("P2", projection(2))]
        else:
            classes = [("1", RingElement.one(d.group))]
        for label, p in classes:
            r = chern_pair_even(name, p, w=radius, strict=False)
            out.append({"class": label, "value": r.value, "stable": r.stable})
    else:
        v = "S" if d.group == DIHEDRAL else "V"
        r = chern_pair_odd(name, RingElement.word(d.group, v), w=radius, strict=False)
        out.append({"class": "V", "value": r.value, "stable": r.stable})
    return out


# pairings ---------------------------------------------------------------


def even_summand(mod: FredholmModule, p: RingElement, k: int) -> Gaussian:
    """Tr(gamma pi(p) [F, pi(p)]^{2k}) on the module's window."""
    pp = mod.rep(p)
    C = commutator(mod.F, pp)
    return (mod.gamma @ pp @ (C @ C) ** k).trace()


def chern_pair_even(
    name: str,
    p: RingElement,
    k_list: Sequence[int] = (1, 2),
    w: Window | int | None = None,
    strict: bool = True,
) -> PairingResult:
    d = DESCRIPTORS[name]
    if d.parity != "even" or d.name == "d1z1":
        raise ModuleError(f"{name} is not an exact even module")
    if not p.is_projection():
        raise ModuleError("pairing needs a projection p = p* = p^2")
    if not k_list or min(k_list) < 1:
        raise ModuleError("every k must be >= 1")
    need = required_radius(max(1, p.max_word_length()), 2 * max(k_list) + 1)
    N = max(_radius_of(w), need)
    values = []
    for radius in (N, 2 * N):
        mod = make_module(name, radius)
        for k in k_list:
            values.append((-1) ** k * even_summand(mod, p, k))
    return _settle(values, list(k_list), N, strict, f"<{name}, p>")


def _settle(values, ks, N, strict, label) -> PairingResult:
    first = values[0]
    stable = all(v == first for v in values) and Gaussian.coerce(first).is_integer()
    if not stable and strict:
        raise InstabilityError(f"{label} not stable: {[str(v) for v in values]}")
    value = Gaussian.coerce(first)
    return PairingResult(value.as_int() if value.is_integer() else None, ks, N, stable)


def compression_kernel_dim(mod: FredholmModule, x: RingElement, margin: int) -> int:
    """dim ker of E pi(x) E on range(E), counting kernel vectors supported at
    sites 0 .. N - margin only (the far end carries truncation artefacts)."""
    A = mod.rep(x)
    N = mod.window.radius
    interior = [n for n in range(0, N - margin + 1)]
    cols = {n: j for j, n in enumerate(interior)}
    rows: dict = {}
    for (r, c), v in A.entries.items():
        if r >= 0 and c in cols:
            rows.setdefault(r, {})[cols[c]] = v
    return len(interior) - rank(rows.values())


def chern_pair_odd(
    name: str,
    u: RingElement,
    w: Window | int | None = None,
    strict: bool = True,
) -> PairingResult:
    """Index pairing dim ker(E u* E) - dim ker(E u E), normalised so that the
    shift on l2(Z) pairs to +1."""
    d = DESCRIPTORS[name]
    if d.parity != "odd":
        raise ModuleError(f"{name} is not an odd module")
    if not u.is_unitary():
        raise ModuleError("odd pairing needs a unitary u u* = u* u = 1")
    L = max(1, u.max_word_length())
    margin = 2 * L
    N = max(_radius_of(w), required_radius(L, 2))
    values = []
    for radius in (N, 2 * N):
        mod = make_module(name, radius)
        values.append(compression_kernel_dim(mod, u.star(), margin) - compression_kernel_dim(mod, u, margin))
    return _settle(values, [], N, strict, f"<{name}, u>")


PROJECTION_LABELS = ("1", "(1+e)/2", "(1+Se)/2")
TABLE_ROWS = ("w0", "w1", "w2")
EXPECTED_TABLE = [[1, 1, 1], [0, 1, 0], [0, 0, 1]]


def pairing_table(w: Window | int | None = None, k_list=(1, 2), projections=None) -> list[list[int]]:
    projections = projections or [projection(j) for j in range(3)]
    return [[chern_pair_even(m, p, k_list, w).value for p in projections] for m in TABLE_ROWS]


# boundary map consistency -----------------------------------------------------


def induced_operator(g, radius: int, phi_U: Gaussian, flip_action: bool) -> WindowedOperator:
    """pi(a) xi(n) = phi(alpha^-n(a)) xi(n), (pi(V) xi)(n) = xi(n - 1).

    Builds the image of U^a V^b (or S^m for the trivial action on C, where
    ``g`` is a dihedral power of S and there is no U) column by column by
    applying the two formulas to each basis vector.
    """
    w = line(radius)
    entries = {}
    for k in w.site_list():
        xi = {k: Gaussian(1)}
        if isinstance(g, GElement):
            a, b = g
            # V^b: (V^b xi)(n) = xi(n - b)
            xi = {n + b: v for n, v in xi.items()}
            # U^a acts diagonally by phi(alpha^{-n}(U^a)), alpha(U) = U* when flip_action
            xi = {n: v * (phi_U ** (a * (1 if n % 2 == 0 else -1) if flip_action else a)) for n, v in xi.items()}
        else:
            m = g.shift
            xi = {n + m: v for n, v in xi.items()}
        for n, v in xi.items():
            if w.contains_site(n) and v:
                entries[(n, k)] = v
    return WindowedOperator(w, EXACT, entries)


def pv_boundary_consistency(w: Window | int | None = None) -> bool:
    """Do z1 and w1B agree with their induced-representation constructions?"""
    radius = _radius_of(w)
    ok = True
    z1 = make_module("z1", radius)
    for m in range(-4, 5):
        g = DihedralElement(m, 0)
        ok &= induced_operator(g, radius, Gaussian(1), False) == z1.rep(RingElement(DIHEDRAL, {g: 1}))
    w1b = make_module("w1B", radius)
    for g in g_elements(3):
        ok &= induced_operator(g, radius, Gaussian(1), True) == w1b.rep(RingElement(SEMIDIRECT, {g: 1}))
    F8 = WindowedOperator.diagonal(line(radius), {n: sign(n) for n in line(radius).site_list()})
    ok &= F8 == z1.F and F8 == w1b.F
    return bool(ok)


__all__ = [
    "DESCRIPTORS",
    "EXPECTED_TABLE",
    "FredholmDescriptor",
    "FredholmModule",
    "InstabilityError",
    "ModuleError",
    "PairingResult",
    "chern_pair_even",
    "chern_pair_odd",
    "make_module",
    "pairing_table",
    "pv_boundary_consistency",
    "verify_module",
]
