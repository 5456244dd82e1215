"""Truncated lattice representations and sparse operator algebra.

A ``Window`` is a finite box of basis vectors: e_n, |n| <= N on the line,
e_{p,q} with |p|, |q| <= N on the plane, or the two vectors of C^2. A doubled
window (``blocks=2``) indexes H + H by pairs ``(block, site)``.

Representations compress at the boundary: a basis vector whose image leaves
the window is sent to zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping

import numpy as np

from . import linalg
from .ring import DIHEDRAL, SEMIDIRECT, RingElement
from .scalar import Gaussian

EXACT = "exact"
FLOAT = "float"


@dataclass(frozen=True)
class Window:
    kind: str  # "line" | "plane" | "pair"
    radius: int = 1
    blocks: int = 1

    def __post_init__(self):
        if self.kind not in ("line", "plane", "pair"):
            raise ValueError(f"unknown window kind {self.kind!r}")
        if self.radius < 1:
            raise ValueError("window radius must be positive")
        if self.blocks not in (1, 2):
            raise ValueError("blocks must be 1 or 2")

    @property
    def base(self) -> "Window":
        return Window(self.kind, self.radius, 1)

    def doubled(self) -> "Window":
        return Window(self.kind, self.radius, 2)

    def grown(self, radius: int) -> "Window":
        return Window(self.kind, radius, self.blocks)

    def site_list(self) -> list:
        N = self.radius
        if self.kind == "line":
            return list(range(-N, N + 1))
        if self.kind == "plane":
            return [(p, q) for p in range(-N, N + 1) for q in range(-N, N + 1)]
        return [0, 1]

    def indices(self) -> list:
        sites = self.site_list()
        if self.blocks == 1:
            return sites
        return [(s, x) for s in (0, 1) for x in sites]

    def dim(self) -> int:
        return len(self.site_list()) * self.blocks

    def contains_site(self, site) -> bool:
        N = self.radius
        if self.kind == "line":
            return -N <= site <= N
        if self.kind == "plane":
            return -N <= site[0] <= N and -N <= site[1] <= N
        return site in (0, 1)

    def site_of(self, index):
        return index[1] if self.blocks == 2 else index

    def site_norm(self, site) -> int:
        """Distance of a site from the origin (sup norm on the plane)."""
        if self.kind == "line":
            return abs(site)
        if self.kind == "plane":
            return max(abs(site[0]), abs(site[1]))
        return 0

    def boundary_distance(self, index) -> int:
        if self.kind == "pair":
            return 1 << 30
        return self.radius - self.site_norm(self.site_of(index))

    def to_json(self) -> dict:
        return {"kind": self.kind, "radius": self.radius, "blocks": self.blocks}

    @classmethod
    def from_json(cls, obj) -> "Window":
        return cls(obj["kind"], int(obj.get("radius", 1)), int(obj.get("blocks", 1)))


def line(N: int) -> Window:
    return Window("line", N)


def plane(N: int) -> Window:
    return Window("plane", N)


PAIR = Window("pair", 1)


class RepId(str, Enum):
    REP0 = "Rep0"      # phi + 0 on C^2, phi = augmentation
    REP1 = "Rep1"      # S e_n = e_{n+1}, e e_n = e_{-n}
    REP2 = "Rep2"      # S e_n = e_{n+1}, e e_n = e_{-(n+1)}
    REPCT = "RepCT"    # S only: the image of C(T)
    REPB1 = "RepB1"    # V e_n = e_{n+1}, U = identity
    REPB2D = "RepB2D"  # U e_{p,q} = e_{p,q+(-1)^p}, V e_{p,q} = e_{p+1,q}


_REP_SPEC = {
    RepId.REP0: (None, "pair"),
    RepId.REP1: (DIHEDRAL, "line"),
    RepId.REP2: (DIHEDRAL, "line"),
    RepId.REPCT: (DIHEDRAL, "line"),
    RepId.REPB1: (SEMIDIRECT, "line"),
    RepId.REPB2D: (SEMIDIRECT, "plane"),
}


def act(rep: RepId, g, site):
    """Image site of a basis vector under a group element, before compression."""
    if rep is RepId.REP1:
        m, eps = g
        return m - site if eps else m + site
    if rep is RepId.REP2:
        m, eps = g
        return m - site - 1 if eps else m + site
    if rep is RepId.REPCT:
        if g[1]:
            raise ValueError("RepCT only represents powers of S")
        return g[0] + site
    if rep is RepId.REPB1:
        return site + g[1]
    if rep is RepId.REPB2D:
        a, b = g
        p, q = site
        # U^a V^b e_{p,q} = U^a e_{p+b,q}
        p2 = p + b
        return (p2, q + (a if p2 % 2 == 0 else -a))
    raise ValueError(f"no lattice action for {rep}")


class WindowedOperator:
    """Sparse matrix over a window; zero entries are never stored."""

    __slots__ = ("window", "mode", "entries")

    def __init__(self, window: Window, mode: str = EXACT, entries: Mapping | None = None):
        if mode not in (EXACT, FLOAT):
            raise ValueError(f"unknown mode {mode!r}")
        self.window = window
        self.mode = mode
        clean = {}
        conv = Gaussian.coerce if mode == EXACT else complex
        for key, v in (entries or {}).items():
            v = conv(v)
            if v:
                clean[key] = v
        self.entries = clean

    # construction helpers --------------------------------------------------

    @classmethod
    def _raw(cls, window, mode, entries):
        op = cls.__new__(cls)
        op.window, op.mode, op.entries = window, mode, entries
        return op

    @classmethod
    def identity(cls, window: Window, mode: str = EXACT) -> "WindowedOperator":
        one = Gaussian(1) if mode == EXACT else 1.0 + 0j
        return cls._raw(window, mode, {(i, i): one for i in window.indices()})

    @classmethod
    def zero(cls, window: Window, mode: str = EXACT) -> "WindowedOperator":
        return cls._raw(window, mode, {})

    @classmethod
    def diagonal(cls, window: Window, values: Mapping, mode: str = EXACT) -> "WindowedOperator":
        return cls(window, mode, {(i, i): v for i, v in values.items()})

    def _check(self, other: "WindowedOperator"):
        if not isinstance(other, WindowedOperator):
            raise TypeError(f"expected WindowedOperator, got {type(other).__name__}")
        if other.window != self.window:
            raise ValueError(f"window mismatch: {self.window} vs {other.window}")
        if other.mode != self.mode:
            raise ValueError(f"mode mismatch: {self.mode} vs {other.mode}")

    # algebra --------------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            x = out.get(k)
            x = v if x is None else x + v
            if x:
                out[k] = x
            else:
                out.pop(k, None)
        return WindowedOperator._raw(self.window, self.mode, out)

    def __neg__(self):
        return WindowedOperator._raw(self.window, self.mode, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "WindowedOperator":
        c = Gaussian.coerce(c) if self.mode == EXACT else complex(c)
        if not c:
            return WindowedOperator.zero(self.window, self.mode)
        return WindowedOperator._raw(self.window, self.mode, {k: c * v for k, v in self.entries.items()})

    def __matmul__(self, other):
        self._check(other)
        by_row: dict = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict = {}
        for (r, k), a in self.entries.items():
            for c, b in by_row.get(k, ()):
                key = (r, c)
                x = out.get(key)
                out[key] = a * b if x is None else x + a * b
        return WindowedOperator(self.window, self.mode, out)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative operator powers are not supported")
        out = WindowedOperator.identity(self.window, self.mode)
        for _ in range(k):
            out = out @ self
        return out

    def adjoint(self) -> "WindowedOperator":
        return WindowedOperator._raw(
            self.window, self.mode, {(c, r): v.conjugate() for (r, c), v in self.entries.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, WindowedOperator):
            return NotImplemented
        return (self.window, self.mode, self.entries) == (other.window, other.mode, other.entries)

    def __repr__(self):
        return f"WindowedOperator({self.window}, {self.mode}, nnz={len(self.entries)})"

    def __getitem__(self, key):
        zero = Gaussian(0) if self.mode == EXACT else 0j
        return self.entries.get(key, zero)

    def __bool__(self):
        return bool(self.entries)

    # queries --------------------------------------------------------------

    def trace(self):
        total = Gaussian(0) if self.mode == EXACT else 0j
        for (r, c), v in self.entries.items():
            if r == c:
                total = total + v
        return total

    def columns(self) -> dict:
        cols: dict = {}
        for (r, c), v in self.entries.items():
            cols.setdefault(c, {})[r] = v
        return cols

    def support_sites(self) -> set:
        w = self.window
        out = set()
        for r, c in self.entries:
            out.add(w.site_of(r))
            out.add(w.site_of(c))
        return out

    def support_radius(self) -> int:
        """Largest site norm touched by a nonzero entry (-1 for the zero operator)."""
        sites = self.support_sites()
        return max((self.window.site_norm(s) for s in sites), default=-1)

    def max_abs(self) -> float:
        return max((abs(complex(v)) for v in self.entries.values()), default=0.0)

    def to_float(self) -> "WindowedOperator":
        if self.mode == FLOAT:
            return self
        return WindowedOperator(self.window, FLOAT, {k: complex(v) for k, v in self.entries.items()})

    def to_dense(self) -> np.ndarray:
        idx = {i: n for n, i in enumerate(self.window.indices())}
        out = np.zeros((len(idx), len(idx)), dtype=complex)
        for (r, c), v in self.entries.items():
            out[idx[r], idx[c]] = complex(v)
        return out

    def is_self_adjoint(self, tol: float = 0.0) -> bool:
        diff = self - self.adjoint()
        if self.mode == EXACT:
            return not diff
        return diff.max_abs() <= tol

    # serialization -------------------------------------------------------

    def to_json(self) -> dict:
        def enc(v):
            if self.mode == EXACT:
                return [str(v.re), str(v.im)]
            return [repr(v.real), repr(v.imag)]

        rows = [[_enc_index(r), _enc_index(c), *enc(v)] for (r, c), v in sorted(self.entries.items(), key=_sort_key)]
        return {"window": self.window.to_json(), "mode": self.mode, "entries": rows}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj) -> "WindowedOperator":
        if isinstance(obj, str):
            obj = json.loads(obj)
        window = Window.from_json(obj["window"])
        mode = obj["mode"]
        entries = {}
        for r, c, re_, im_ in obj["entries"]:
            if mode == EXACT:
                v = Gaussian(Fraction(re_), Fraction(im_))
            else:
                v = complex(float(re_), float(im_))
            entries[(_dec_index(r), _dec_index(c))] = v
        return cls(window, mode, entries)


def _enc_index(i):
    if isinstance(i, tuple):
        return [_enc_index(x) for x in i]
    return i


def _dec_index(i):
    if isinstance(i, list):
        return tuple(_dec_index(x) for x in i)
    return i


def _sort_key(item):
    return repr(item[0])


# representations ----------------------------------------------------------


def augmentation(x: RingElement) -> Gaussian:
    """The character sending every group element to 1."""
    total = Gaussian(0)
    for c in x.terms.values():
        total = total + c
    return total


def represent(rep: RepId, x: RingElement, w: Window) -> WindowedOperator:
    rep = RepId(rep)
    group, kind = _REP_SPEC[rep]
    if group is not None and x.group != group:
        raise ValueError(f"{rep.value} represents the {group} group ring, got {x.group}")
    if w.kind != kind or w.blocks != 1:
        raise ValueError(f"{rep.value} needs a single {kind} window, got {w}")
    if rep is RepId.REP0:
        return WindowedOperator(w, EXACT, {(0, 0): augmentation(x)})
    sites = w.site_list()
    out: dict = {}
    for g, c in x.terms.items():
        for n in sites:
            m = act(rep, g, n)
            if w.contains_site(m):
                key = (m, n)
                prev = out.get(key)
                out[key] = c if prev is None else prev + c
    return WindowedOperator(w, EXACT, out)


def sign(n: int) -> int:
    return 1 if n >= 0 else -1


def sign_F(w: Window) -> WindowedOperator:
    if w.kind != "line" or w.blocks != 1:
        raise ValueError("sign_F needs a single line window")
    return WindowedOperator._raw(w, EXACT, {(n, n): Gaussian(sign(n)) for n in w.site_list()})


def grading(w: Window) -> WindowedOperator:
    """diag(1, -1): on C^2 for the pair window, blockwise for doubled windows."""
    if w.kind == "pair" and w.blocks == 1:
        return WindowedOperator(w, EXACT, {(0, 0): 1, (1, 1): -1})
    if w.blocks != 2:
        raise ValueError("grading needs a doubled window or the pair window")
    return WindowedOperator(w, EXACT, {(i, i): (1 if i[0] == 0 else -1) for i in w.indices()})


def pair_flip() -> WindowedOperator:
    return WindowedOperator(PAIR, EXACT, {(0, 1): 1, (1, 0): 1})


def direct_sum(A: WindowedOperator, B: WindowedOperator) -> WindowedOperator:
    A._check(B)
    if A.window.blocks != 1:
        raise ValueError("direct_sum takes operators on a single window")
    w = A.window.doubled()
    out = {((0, r), (0, c)): v for (r, c), v in A.entries.items()}
    out.update({((1, r), (1, c)): v for (r, c), v in B.entries.items()})
    return WindowedOperator._raw(w, A.mode, out)


def block_even_F(F: WindowedOperator, form: str = "auto") -> WindowedOperator:
    """Odd operator on the doubled window built from F.

    ``form="i"`` gives (0 iF; -iF 0), ``form="adjoint"`` gives (0 F; F* 0);
    ``"auto"`` picks the first when F is self-adjoint.
    """
    if F.window.blocks != 1:
        raise ValueError("block_even_F takes an operator on a single window")
    if form == "auto":
        form = "i" if F.is_self_adjoint(1e-12) else "adjoint"
    w = F.window.doubled()
    out: dict = {}
    if form == "i":
        i = Gaussian(0, 1) if F.mode == EXACT else 1j
        for (r, c), v in F.entries.items():
            out[((0, r), (1, c))] = i * v
            out[((1, r), (0, c))] = -i * v
    elif form == "adjoint":
        for (r, c), v in F.entries.items():
            out[((0, r), (1, c))] = v
            out[((1, c), (0, r))] = v.conjugate()
    else:
        raise ValueError(f"unknown form {form!r}")
    return WindowedOperator._raw(w, F.mode, out)


# arithmetic wrappers -------------------------------------------------------


def op_mul(A: WindowedOperator, B: WindowedOperator) -> WindowedOperator:
    return A @ B


def op_add(A: WindowedOperator, B: WindowedOperator) -> WindowedOperator:
    return A + B


def commutator(A: WindowedOperator, B: WindowedOperator) -> WindowedOperator:
    return A @ B - B @ A


def anticommutator(A: WindowedOperator, B: WindowedOperator) -> WindowedOperator:
    return A @ B + B @ A


def trace(A: WindowedOperator):
    return A.trace()


def matrix_unit(w: Window, i, j) -> WindowedOperator:
    """P_{i,j} e_m = delta_{j,m} e_i."""
    return WindowedOperator(w, EXACT, {(i, j): 1})


def rank_exact(A: WindowedOperator) -> int:
    """Matrix rank by exact elimination; float operators are rejected."""
    if A.mode != EXACT:
        raise ValueError("rank_exact needs an exact-mode operator")
    order = {i: n for n, i in enumerate(A.window.indices())}
    rows: dict = {}
    for (r, c), v in A.entries.items():
        rows.setdefault(r, {})[order[c]] = v
    return linalg.rank(rows.values())


def lattice_rank(A: WindowedOperator) -> int:
    """Rank of the lattice factor of an operator on a doubled window.

    Writing A = sum_{s,t} E_{st} (x) A_{st}, this is the dimension of the span
    of the ranges of all blocks A_{st}; for C (x) M with M an invertible
    2 x 2 matrix it is rank(C).
    """
    if A.mode != EXACT:
        raise ValueError("lattice_rank needs an exact-mode operator")
    w = A.window
    if w.blocks == 1:
        return rank_exact(A)
    sites = {x: n for n, x in enumerate(w.site_list())}
    ns = len(sites)
    rows: dict = {}
    for ((s, r), (t, c)), v in A.entries.items():
        rows.setdefault(r, {})[(2 * s + t) * ns + sites[c]] = v
    return linalg.rank(rows.values())


def interior_agreement(A: WindowedOperator, B: WindowedOperator, margin: int) -> bool:
    """Do A and B act identically on every basis vector at distance >= margin
    from A's boundary?

    Columns are compared in full, so an image vector that leaves A's window
    (present in B, compressed away in A) counts as a disagreement.
    """
    wa, wb = A.window, B.window
    if (wa.kind, wa.blocks) != (wb.kind, wb.blocks) or wb.radius < wa.radius:
        raise ValueError("B must live on a window of the same shape and at least A's radius")
    if A.mode != B.mode:
        raise ValueError("mode mismatch")
    cols_a, cols_b = A.columns(), B.columns()
    for c in wa.indices():
        if wa.boundary_distance(c) < margin:
            continue
        if cols_a.get(c, {}) != cols_b.get(c, {}):
            return False
    return True


def required_radius(max_word_length: int, max_power: int) -> int:
    return max_word_length * max_power + 4


def basis_image(A: WindowedOperator, col) -> dict:
    return {r: v for (r, c), v in A.entries.items() if c == col}
