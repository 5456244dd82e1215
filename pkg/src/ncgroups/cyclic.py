"""Cyclic cochains on the dihedral group ring.

Group elements are written S^m e^eps. A 0-cochain is a pair of integer
sequences (a, b) with psi(S^m) = a_m and psi(S^m e) = b_m. Sequences are
sparse dicts plus an optional parity-periodic background for n >= 0 and
n < 0, which covers the periodic traces and the step-function solutions of
the 1-coboundary problem.

Every cochain here is a table or a rule over integer tables; evaluation
outside the table's window raises ``OutsideWindow``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Mapping

from .groups import DihedralElement, dihedral_elements, dmul, word_length
from .linalg import Eliminator, check_certificate
from .ring import DIHEDRAL, RingElement
from .scalar import Gaussian

ZERO = Gaussian(0)
IDENTITY_WINDOW = 12
SOLVER_WINDOW = 16


class OutsideWindow(KeyError):
    pass


class CoboundaryError(RuntimeError):
    """A constructive solver produced a nonzero residual."""


def _scalar_out(c: Gaussian):
    return str(c.re) if c.im == 0 else c.to_json()


def _scalar_in(obj) -> Gaussian:
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        if isinstance(obj, float) and not obj.is_integer():
            raise ValueError(f"inexact scalar {obj!r}; use a rational string")
        return Gaussian(int(obj))
    return Gaussian.from_json(obj)


def _elem_out(g: DihedralElement) -> list:
    return [g.shift, g.flip]


def _elem_in(obj) -> DihedralElement:
    m, eps = (int(x) for x in obj)
    if eps not in (0, 1):
        raise ValueError(f"flip exponent must be 0 or 1, got {eps}")
    return DihedralElement(m, eps)


# sequences ---------------------------------------------------------------


class Sequence:
    """Integer-indexed scalars: a sparse correction over a parity background.

    ``pos`` gives the background on n >= 0 as (even n, odd n), ``neg`` the
    background on n < 0.
    """

    __slots__ = ("finite", "pos", "neg")

    def __init__(self, finite: Mapping | None = None, pos=(0, 0), neg=(0, 0)):
        self.pos = tuple(Gaussian.coerce(x) for x in pos)
        self.neg = tuple(Gaussian.coerce(x) for x in neg)
        clean = {}
        for n, v in (finite or {}).items():
            n = int(n)
            v = Gaussian.coerce(v)
            if v != self._background(n):
                clean[n] = v
        self.finite = clean

    def _background(self, n: int) -> Gaussian:
        return (self.pos if n >= 0 else self.neg)[n % 2]

    def __getitem__(self, n: int) -> Gaussian:
        v = self.finite.get(n)
        return self._background(n) if v is None else v

    @property
    def has_tails(self) -> bool:
        return any(self.pos) or any(self.neg)

    def support_bound(self) -> int:
        return max((abs(n) for n in self.finite), default=0)

    def __eq__(self, other):
        if not isinstance(other, Sequence):
            return NotImplemented
        return (self.finite, self.pos, self.neg) == (other.finite, other.pos, other.neg)

    def __repr__(self):
        items = ", ".join(f"{n}: {v}" for n, v in sorted(self.finite.items()))
        tails = f", pos={tuple(map(str, self.pos))}, neg={tuple(map(str, self.neg))}" if self.has_tails else ""
        return f"Sequence({{{items}}}{tails})"

    def to_json(self) -> dict:
        """Explicit values for the sparse part; the background separately."""
        return {str(n): _scalar_out(v) for n, v in sorted(self.finite.items())}

    def tails_json(self) -> dict:
        return {"pos": [_scalar_out(x) for x in self.pos], "neg": [_scalar_out(x) for x in self.neg]}


def _seq_from_json(values, tails=None) -> Sequence:
    if not isinstance(values, dict):
        raise ValueError("sequence must be a JSON object {index: scalar}")
    pos = neg = (0, 0)
    if tails is not None:
        pos = tuple(_scalar_in(x) for x in tails["pos"])
        neg = tuple(_scalar_in(x) for x in tails["neg"])
        if len(pos) != 2 or len(neg) != 2:
            raise ValueError("tails are [even, odd] pairs")
    return Sequence({int(n): _scalar_in(v) for n, v in values.items()}, pos, neg)


# degree 0 ----------------------------------------------------------------


class Cochain0:
    __slots__ = ("a", "b")

    def __init__(self, a=None, b=None):
        self.a = a if isinstance(a, Sequence) else Sequence(a)
        self.b = b if isinstance(b, Sequence) else Sequence(b)

    def __call__(self, g: DihedralElement) -> Gaussian:
        return (self.b if g.flip else self.a)[g.shift]

    def evaluate(self, x: RingElement) -> Gaussian:
        if x.group != DIHEDRAL:
            raise ValueError("0-cochains act on the dihedral group ring")
        total = ZERO
        for g, c in x.terms.items():
            total = total + c * self(g)
        return total

    def __eq__(self, other):
        if not isinstance(other, Cochain0):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __repr__(self):
        return f"Cochain0(a={self.a!r}, b={self.b!r})"

    def to_json(self) -> dict:
        out = {"a": self.a.to_json(), "b": self.b.to_json()}
        if self.a.has_tails:
            out["a_tails"] = self.a.tails_json()
        if self.b.has_tails:
            out["b_tails"] = self.b.tails_json()
        return out

    @classmethod
    def from_json(cls, obj) -> "Cochain0":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(
                _seq_from_json(obj.get("a", {}), obj.get("a_tails")),
                _seq_from_json(obj.get("b", {}), obj.get("b_tails")),
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValueError(f"malformed 0-cochain: {exc}") from exc


def make_psi(i: int, dual: bool = True) -> Cochain0:
    """The trace generators.

    psi_1 has b = 2 on even indices and psi_2 has b = 2 on odd indices.
    psi_0 has a_0 = 1; with ``dual`` (the default) it also carries b = -1,
    which makes {psi_0, psi_1, psi_2} dual to the projections 1, (1+e)/2,
    (1+Se)/2. ``dual=False`` gives the bare a_0 = 1 functional.
    """
    if i == 0:
        b = Sequence({}, (-1, -1), (-1, -1)) if dual else Sequence()
        return Cochain0({0: 1}, b)
    if i == 1:
        return Cochain0({}, Sequence({}, (2, 0), (2, 0)))
    if i == 2:
        return Cochain0({}, Sequence({}, (0, 2), (0, 2)))
    raise ValueError(f"psi index must be 0, 1 or 2, got {i}")


def make_psi_k(k: int) -> Cochain0:
    """psi_k(S^m) = delta_{k,m} + delta_{k,-m}, psi_k(S^m e) = 0."""
    if k == 0:
        raise ValueError("psi_k needs k != 0")
    return Cochain0({k: 1, -k: 1}, {})


def is_trace(psi: Cochain0, W: int = IDENTITY_WINDOW) -> bool:
    elems = dihedral_elements(W)
    for x in elems:
        for y in elems:
            if psi(dmul(x, y)) != psi(dmul(y, x)):
                return False
    return True


def pair0(psi: Cochain0, p: RingElement) -> Gaussian:
    return psi.evaluate(p)


# raw tables --------------------------------------------------------------


class RawCochain1:
    """phi(x, y) on pairs of word length <= bound; missing entries are 0."""

    __slots__ = ("bound", "table")

    def __init__(self, bound: int, table: Mapping | None = None):
        self.bound = bound
        self.table = {k: Gaussian.coerce(v) for k, v in (table or {}).items() if v}

    def __call__(self, x: DihedralElement, y: DihedralElement) -> Gaussian:
        if word_length(x) > self.bound or word_length(y) > self.bound:
            raise OutsideWindow((x, y))
        return self.table.get((x, y), ZERO)

    def __eq__(self, other):
        if not isinstance(other, RawCochain1):
            return NotImplemented
        return self.bound == other.bound and self.table == other.table

    def is_zero(self) -> bool:
        return not self.table

    def is_antisymmetric(self) -> bool:
        return all(self.table.get((y, x), ZERO) == -v for (x, y), v in self.table.items())

    def to_json(self) -> dict:
        pairs = [[_elem_out(x), _elem_out(y), _scalar_out(v)] for (x, y), v in sorted(self.table.items())]
        return {"bound": self.bound, "pairs": pairs}

    @classmethod
    def from_json(cls, obj) -> "RawCochain1":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            table = {}
            for x, y, v in obj["pairs"]:
                table[(_elem_in(x), _elem_in(y))] = _scalar_in(v)
            bound = int(obj.get("bound", max((max(word_length(x), word_length(y)) for x, y in table), default=0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed raw 1-cochain: {exc}") from exc
        return cls(bound, table)


class RawCochain2:
    """phi(x, y, z) on triples of word length <= bound; missing entries are 0."""

    __slots__ = ("bound", "table")

    def __init__(self, bound: int, table: Mapping | None = None):
        self.bound = bound
        self.table = {k: Gaussian.coerce(v) for k, v in (table or {}).items() if v}

    def __call__(self, x, y, z) -> Gaussian:
        if max(word_length(x), word_length(y), word_length(z)) > self.bound:
            raise OutsideWindow((x, y, z))
        return self.table.get((x, y, z), ZERO)

    def __eq__(self, other):
        if not isinstance(other, RawCochain2):
            return NotImplemented
        return self.bound == other.bound and self.table == other.table

    def __sub__(self, other: "RawCochain2") -> "RawCochain2":
        out = dict(self.table)
        for k, v in other.table.items():
            out[k] = out.get(k, ZERO) - v
        return RawCochain2(min(self.bound, other.bound), out)

    def is_zero(self) -> bool:
        return not self.table

    def to_json(self) -> dict:
        triples = [
            [_elem_out(x), _elem_out(y), _elem_out(z), _scalar_out(v)]
            for (x, y, z), v in sorted(self.table.items())
        ]
        return {"bound": self.bound, "triples": triples}

    @classmethod
    def from_json(cls, obj) -> "RawCochain2":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            table = {}
            for x, y, z, v in obj["triples"]:
                table[(_elem_in(x), _elem_in(y), _elem_in(z))] = _scalar_in(v)
            bound = int(obj["bound"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed raw 2-cochain: {exc}") from exc
        return cls(bound, table)


# structured 1-cochains ----------------------------------------------------


class _ParityPrefix:
    """Q(j) = sum of c_i over i <= j with i = j mod 2, for sparse c."""

    def __init__(self, c: Mapping):
        self.c = c
        self.keys = sorted(c)
        self.cache: dict = {}

    def __call__(self, j: int) -> Gaussian:
        if not self.keys:
            return ZERO
        lo, hi = self.keys[0], self.keys[-1]
        if j < lo:
            return ZERO
        if j > hi:
            j = hi + ((j - hi) % 2)  # same parity, past the support
        v = self.cache.get(j)
        if v is None:
            v = ZERO
            for i in self.keys:
                if i > j:
                    break
                if (j - i) % 2 == 0:
                    v = v + self.c[i]
            self.cache[j] = v
        return v


class CDCocycle:
    """The cyclic 1-cocycle determined by sequences (c, d).

    phi(S^m, S^n) = 0, phi(S^m, S^n e) = f(m, n), phi(S^m e, S^n) = -f(n, m)
    and phi(S^m e, S^n e) = d_{n-m}, where for m > 0 f(m, n) sums c over
    the indices n-m+1, n-m+3, ..., n+m-1 and f(-m, n) = -f(m, n).
    """

    def __init__(self, c: Mapping, d: Mapping):
        self.c = {int(n): Gaussian.coerce(v) for n, v in c.items() if v}
        self.d = {int(n): Gaussian.coerce(v) for n, v in d.items() if v}
        self._Q = _ParityPrefix(self.c)

    def f(self, m: int, n: int) -> Gaussian:
        if m == 0:
            return ZERO
        if m < 0:
            return -self.f(-m, n)
        return self._Q(n + m - 1) - self._Q(n - m - 1)

    def __call__(self, x: DihedralElement, y: DihedralElement) -> Gaussian:
        if not x.flip and not y.flip:
            return ZERO
        if not x.flip:
            return self.f(x.shift, y.shift)
        if not y.flip:
            return -self.f(y.shift, x.shift)
        return self.d.get(y.shift - x.shift, ZERO)

    def table(self, W: int) -> RawCochain1:
        elems = dihedral_elements(W)
        return RawCochain1(W, {(x, y): self(x, y) for x in elems for y in elems})

    def to_json(self) -> dict:
        return {
            "c": {str(n): _scalar_out(v) for n, v in sorted(self.c.items())},
            "d": {str(n): _scalar_out(v) for n, v in sorted(self.d.items())},
        }

    @classmethod
    def from_json(cls, obj) -> "CDCocycle":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            c = {int(n): _scalar_in(v) for n, v in obj["c"].items()}
            d = {int(n): _scalar_in(v) for n, v in obj.get("d", {}).items()}
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValueError(f"malformed structured 1-cochain: {exc}") from exc
        return cocycle1_from_cd(c, d)


def cocycle1_from_cd(c: Mapping, d: Mapping) -> CDCocycle:
    d = {int(n): Gaussian.coerce(v) for n, v in d.items()}
    for n, v in d.items():
        if d.get(-n, ZERO) != -v:
            raise ValueError(f"d must satisfy d_(-n) = -d_n; fails at n = {n}")
    return CDCocycle(c, d)


class PsiKCochain:
    """The 1-cochain with b(phi) = S(psi_k).

    alpha_{m,n} = (m-n)/(m+n) on m + n = +-k, beta = 0, and
    gamma_{m,n} = 2n/k - c_k on m - n = k, -2m/k + c_k on m - n = -k.
    """

    def __init__(self, k: int, c_k=0):
        if k == 0:
            raise ValueError("the coboundary solver needs k != 0")
        self.k = k
        self.c_k = Gaussian.coerce(c_k)

    def alpha(self, m: int, n: int) -> Gaussian:
        if m + n in (self.k, -self.k):
            return Gaussian(Fraction(m - n, m + n))
        return ZERO

    def beta(self, m: int, n: int) -> Gaussian:
        return ZERO

    def gamma(self, m: int, n: int) -> Gaussian:
        k = self.k
        if m - n == k:
            return Gaussian(Fraction(2 * n, k)) - self.c_k
        if m - n == -k:
            return Gaussian(Fraction(-2 * m, k)) + self.c_k
        return ZERO

    def __call__(self, x: DihedralElement, y: DihedralElement) -> Gaussian:
        if not x.flip and not y.flip:
            return self.alpha(x.shift, y.shift)
        if x.flip and y.flip:
            return self.gamma(x.shift, y.shift)
        return ZERO  # beta, and its antisymmetric partner

    def table(self, W: int) -> RawCochain1:
        elems = dihedral_elements(W)
        return RawCochain1(W, {(x, y): self(x, y) for x in elems for y in elems})

    def to_json(self, W: int = IDENTITY_WINDOW) -> dict:
        out = self.table(W).to_json()
        out["k"] = self.k
        out["c_k"] = _scalar_out(self.c_k)
        return out


# coboundaries ------------------------------------------------------------


def b0(psi: Cochain0, W: int = IDENTITY_WINDOW) -> RawCochain1:
    """(b psi)(x, y) = psi(xy) - psi(yx) on pairs of word length <= W."""
    elems = dihedral_elements(W)
    table = {}
    for x in elems:
        for y in elems:
            v = psi(dmul(x, y)) - psi(dmul(y, x))
            if v:
                table[(x, y)] = v
    return RawCochain1(W, table)


def b1(phi: Callable, W: int = IDENTITY_WINDOW) -> RawCochain2:
    """(b phi)(x, y, z) = phi(xy, z) - phi(x, yz) + phi(zx, y).

    ``phi`` is any 1-cochain; a raw table must cover word length 2W.
    """
    elems = dihedral_elements(W)
    table = {}
    if isinstance(phi, RawCochain1):
        if phi.bound < 2 * W:
            raise OutsideWindow(f"raw 1-cochain of bound {phi.bound} cannot feed b1 at W = {W}")
        get = phi.table.get

        def ev(x, y):
            return get((x, y))
    else:
        def ev(x, y):
            v = phi(x, y)
            return v if v else None

    for x in elems:
        for y in elems:
            xy = dmul(x, y)
            for z in elems:
                v = ev(xy, z)
                t = ev(x, dmul(y, z))
                u = ev(dmul(z, x), y)
                if v is None and t is None and u is None:
                    continue
                s = (v or ZERO) - (t or ZERO) + (u or ZERO)
                if s:
                    table[(x, y, z)] = s
    return RawCochain2(W, table)


def is_cyclic_cocycle(phi: Callable, W: int = 10) -> bool:
    elems = dihedral_elements(W)
    for x in elems:
        for y in elems:
            if phi(x, y) != -phi(y, x):
                return False
    return b1(phi, W).is_zero()


def S0(psi: Cochain0, W: int = IDENTITY_WINDOW) -> RawCochain2:
    """(S psi)(x, y, z) = psi(xyz), for a trace psi."""
    if not is_trace(psi, W):
        raise ValueError("S is applied to traces only; psi fails the trace condition")
    elems = dihedral_elements(W)
    table = {}
    for x in elems:
        for y in elems:
            xy = dmul(x, y)
            for z in elems:
                v = psi(dmul(xy, z))
                if v:
                    table[(x, y, z)] = v
    return RawCochain2(W, table)


def _b_sequence(c: Mapping) -> Sequence:
    """b with b_{j+2} - b_j = c_{j+1}, anchored at b_0 = b_{-1} = 0."""
    c = {n: v for n, v in c.items() if v}
    K = max((abs(n) for n in c), default=0) + 3
    pos_even = sum((v for n, v in c.items() if n > 0 and n % 2), ZERO)
    pos_odd = sum((v for n, v in c.items() if n >= 0 and n % 2 == 0), ZERO)
    neg_even = -sum((v for n, v in c.items() if n < 0 and n % 2), ZERO)
    neg_odd = -sum((v for n, v in c.items() if n < 0 and n % 2 == 0), ZERO)
    vals = {0: ZERO, -1: ZERO, 1: c.get(0, ZERO)}
    for j in range(0, K):
        vals[j + 2] = vals[j] + c.get(j + 1, ZERO)
    for j in range(0, -K, -1):
        vals[j - 2] = vals[j] - c.get(j - 1, ZERO)
    return Sequence(vals, (pos_even, pos_odd), (neg_even, neg_odd))


def solve_1coboundary(phi: CDCocycle, W: int = SOLVER_WINDOW, verify: bool = True) -> Cochain0:
    """A 0-cochain psi with b(psi) = phi.

    a_m = -d_m for m > 0 (zero otherwise) and b solves b_{j+2} - b_j =
    c_{j+1}: partial sums of c_1, c_3, ... (resp. c_0, c_2, ...) for
    nonnegative even (resp. odd) indices and negated partial sums of c_{-1},
    c_{-3}, ... (resp. c_{-2}, c_{-4}, ...) going down.
    """
    if not isinstance(phi, CDCocycle):
        raise TypeError("solve_1coboundary needs a structured (c, d) cocycle")
    a = {m: -v for m, v in phi.d.items() if m > 0}
    psi = Cochain0(a, _b_sequence(phi.c))
    if verify:
        residual = residual_1(psi, phi, W)
        if residual:
            raise CoboundaryError(f"b(psi) differs from phi at {len(residual)} pairs, e.g. {next(iter(residual))}")
    return psi


def residual_1(psi: Cochain0, phi: Callable, W: int) -> dict:
    elems = dihedral_elements(W)
    out = {}
    for x in elems:
        for y in elems:
            r = psi(dmul(x, y)) - psi(dmul(y, x)) - phi(x, y)
            if r:
                out[(x, y)] = r
    return out


def solve_2coboundary_psik(k: int, c_k=0) -> PsiKCochain:
    return PsiKCochain(k, c_k)


# linear-algebra oracle ----------------------------------------------------


class Feasibility:
    """Outcome of ``coboundary_feasible``.

    When infeasible, ``rank`` is the rank of the equation prefix that produced
    the contradiction, not of the whole system.
    """

    def __init__(self, feasible, solution, certificate, rank, n_equations, n_unknowns, certificate_checked=False):
        self.feasible = feasible
        self.solution = solution
        self.certificate = certificate
        self.rank = rank
        self.n_equations = n_equations
        self.n_unknowns = n_unknowns
        self.certificate_checked = certificate_checked

    def __bool__(self):
        return self.feasible

    def to_json(self) -> dict:
        out = {
            "feasible": self.feasible,
            "rank": self.rank,
            "equations": self.n_equations,
            "unknowns": self.n_unknowns,
        }
        if self.feasible:
            out["solution"] = self.solution.to_json()
        else:
            out["certificate"] = {
                "combination": {str(i): _scalar_out(v) for i, v in sorted(self.certificate.combination.items())},
                "rhs": _scalar_out(self.certificate.rhs),
                "checked": self.certificate_checked,
            }
        return out


def _pair_var(x, y, index: dict):
    """Unknown for phi(x, y) with phi antisymmetric: (column, sign) or None."""
    if x == y:
        return None
    key, sign = ((x, y), 1) if x < y else ((y, x), -1)
    col = index.get(key)
    if col is None:
        col = index[key] = len(index)
    return col, sign


def _run(equations, track: bool):
    elim = Eliminator(track=track)
    for n, (row, rhs) in enumerate(equations):
        if elim.add(row, rhs) == "inconsistent" and not track:
            return elim, n
    return elim, None


def _solve_system(equations, unknowns, build_solution):
    elim, failed = _run(equations, track=False)
    if failed is None:
        sol = build_solution(elim.solution())
        return Feasibility(True, sol, None, elim.rank, len(equations), len(unknowns))
    # rerun the failing prefix with combination tracking for a certificate
    prefix = equations[: failed + 1]
    tracked, _ = _run(prefix, track=True)
    cert = tracked.inconsistency
    rows = [r for r, _ in prefix]
    rhs = [b for _, b in prefix]
    ok = check_certificate(rows, rhs, cert)
    return Feasibility(False, None, cert, tracked.rank, len(equations), len(unknowns), ok)


def coboundary_feasible(target, W: int = 8) -> Feasibility:
    """Decide whether ``target`` is a coboundary on the window.

    For a raw 2-cochain, solves b(phi) = target over antisymmetric unknowns
    phi(x, y), x, y of word length <= 2W, on every triple of word length
    <= W. For a 1-cochain target, solves b(psi) = target over unknowns
    psi(g) on pairs of word length <= W.
    """
    if isinstance(target, RawCochain2):
        return _feasible_degree2(target, W)
    return _feasible_degree1(target, W)


def _feasible_degree2(target: RawCochain2, W: int) -> Feasibility:
    if target.bound < W:
        raise OutsideWindow(f"target of bound {target.bound} does not cover W = {W}")
    elems = dihedral_elements(W)
    index: dict = {}
    equations = []
    for x in elems:
        for y in elems:
            for z in elems:
                row: dict = {}
                for (p, q), s in (((dmul(x, y), z), 1), ((x, dmul(y, z)), -1), ((dmul(z, x), y), 1)):
                    var = _pair_var(p, q, index)
                    if var is not None:
                        col, sign = var
                        row[col] = row.get(col, 0) + s * sign
                row = {c: v for c, v in row.items() if v}
                rhs = target.table.get((x, y, z), ZERO)
                if row or rhs:
                    equations.append((row, rhs))
    keys = sorted(index, key=index.get)

    def build(x: dict) -> RawCochain1:
        table = {}
        for col, v in x.items():
            p, q = keys[col]
            table[(p, q)] = v
            table[(q, p)] = -v
        return RawCochain1(2 * W, table)

    return _solve_system(equations, keys, build)


def _feasible_degree1(target: Callable, W: int) -> Feasibility:
    elems = dihedral_elements(W)
    index: dict = {}

    def var(g):
        col = index.get(g)
        if col is None:
            col = index[g] = len(index)
        return col

    equations = []
    for x in elems:
        for y in elems:
            row: dict = {}
            p, q = dmul(x, y), dmul(y, x)
            if p != q:
                row[var(p)] = 1
                row[var(q)] = -1
            rhs = target(x, y)
            if row or rhs:
                equations.append((row, rhs))
    keys = sorted(index, key=index.get)

    def build(x: dict) -> Cochain0:
        a, b = {}, {}
        for col, v in x.items():
            g = keys[col]
            (b if g.flip else a)[g.shift] = v
        return Cochain0(a, b)

    return _solve_system(equations, keys, build)


def difference_cocycle(k: int, c: Gaussian, c2: Gaussian, W: int) -> RawCochain1:
    """phi_(k, c2) - phi_(k, c) on the window."""
    one, two = PsiKCochain(k, c), PsiKCochain(k, c2)
    elems = dihedral_elements(W)
    return RawCochain1(W, {(x, y): two(x, y) - one(x, y) for x in elems for y in elems})


__all__ = [
    "CDCocycle",
    "Cochain0",
    "CoboundaryError",
    "Feasibility",
    "IDENTITY_WINDOW",
    "OutsideWindow",
    "PsiKCochain",
    "RawCochain1",
    "RawCochain2",
    "SOLVER_WINDOW",
    "Sequence",
    "S0",
    "b0",
    "b1",
    "coboundary_feasible",
    "cocycle1_from_cd",
    "difference_cocycle",
    "is_cyclic_cocycle",
    "is_trace",
    "make_psi",
    "make_psi_k",
    "pair0",
    "residual_1",
    "solve_1coboundary",
    "solve_2coboundary_psik",
]
