"""Exact sparse Gaussian elimination over Q(i).

Rows are dicts ``{column: coefficient}`` with integer columns. The
eliminator keeps an echelon basis where each pivot row only touches columns
at or after its pivot, so reduction of an incoming row terminates.

Internally real coefficients are kept as plain Fractions, which is several
times faster than routing everything through Gaussian; results come back as
Gaussian.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .scalar import Gaussian

ZERO = Gaussian(0)


def _lift(v):
    g = Gaussian.coerce(v)
    return g.re if g.im == 0 else g


def _lower(v) -> Gaussian:
    return Gaussian.coerce(v)


def _axpy(row: dict, coef: Gaussian, other: Mapping) -> None:
    """row -= coef * other, in place, dropping zeros."""
    for j, v in other.items():
        x = row.get(j)
        x = -(coef * v) if x is None else x - coef * v
        if x:
            row[j] = x
        else:
            row.pop(j, None)


@dataclass
class Inconsistency:
    """A combination of input equations that reads 0 = rhs with rhs != 0."""

    combination: dict
    rhs: Gaussian


@dataclass
class Eliminator:
    track: bool = False
    pivots: dict = field(default_factory=dict)  # col -> (row, rhs, combo)
    n_rows: int = 0
    inconsistency: Inconsistency | None = None

    def add(self, row: Mapping, rhs=0) -> str:
        """Insert an equation; returns 'pivot', 'redundant' or 'inconsistent'."""
        idx = self.n_rows
        self.n_rows += 1
        work = {j: _lift(v) for j, v in row.items() if v}
        b = _lift(rhs)
        combo = {idx: Fraction(1)} if self.track else None
        while work:
            c = min(work)
            piv = self.pivots.get(c)
            if piv is None:
                lead = work[c]
                inv = 1 / lead
                work = {j: v * inv for j, v in work.items()}
                b = b * inv
                if combo is not None:
                    combo = {k: v * inv for k, v in combo.items()}
                self.pivots[c] = (work, b, combo)
                return "pivot"
            prow, pb, pcombo = piv
            coef = work[c]
            _axpy(work, coef, prow)
            b = b - coef * pb
            if combo is not None:
                _axpy(combo, coef, pcombo)
        if b:
            if self.inconsistency is None:
                combo = {k: _lower(v) for k, v in (combo or {}).items()}
                self.inconsistency = Inconsistency(combo, _lower(b))
            return "inconsistent"
        return "redundant"

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def consistent(self) -> bool:
        return self.inconsistency is None

    def solution(self) -> dict:
        """One solution (free variables zero); requires consistency."""
        if not self.consistent:
            raise ValueError("system is inconsistent")
        x: dict = {}
        for c in sorted(self.pivots, reverse=True):
            row, b, _ = self.pivots[c]
            val = b
            for j, v in row.items():
                if j != c and j in x:
                    val = val - v * x[j]
            if val:
                x[c] = val
        return {c: _lower(v) for c, v in x.items()}


def rank(rows: Iterable[Mapping]) -> int:
    elim = Eliminator()
    for r in rows:
        elim.add(r)
    return elim.rank


def solve(rows: Iterable[Mapping], rhs: Iterable, track: bool = False) -> Eliminator:
    elim = Eliminator(track=track)
    for r, b in zip(rows, rhs):
        elim.add(r, b)
    return elim


def check_certificate(rows: list[Mapping], rhs: list, cert: Inconsistency) -> bool:
    """Verify that sum_i y_i row_i == 0 while sum_i y_i rhs_i != 0."""
    acc: dict = {}
    total = Gaussian(0)
    for i, y in cert.combination.items():
        _axpy(acc, -y, rows[i])
        total = total + y * Gaussian.coerce(rhs[i])
    return not acc and bool(total)
