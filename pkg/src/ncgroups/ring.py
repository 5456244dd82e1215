"""Group rings C[Gamma] and C[G] with Gaussian-rational coefficients."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Mapping

from . import groups as grp
from .groups import DihedralElement, GElement
from .scalar import Gaussian, ONE

DIHEDRAL = "dihedral"
SEMIDIRECT = "semidirect"

_LAWS = {
    DIHEDRAL: (grp.dmul, grp.dinv, grp.D_ID, DihedralElement),
    SEMIDIRECT: (grp.gmul, grp.ginv, grp.G_ID, GElement),
}


class RingElement:
    """Finite formal sum of group elements; zero coefficients are dropped."""

    __slots__ = ("group", "terms")

    def __init__(self, group: str, terms: Mapping | None = None):
        if group not in _LAWS:
            raise ValueError(f"unknown group tag {group!r}")
        elem_type = _LAWS[group][3]
        clean = {}
        for g, c in (terms or {}).items():
            c = Gaussian.coerce(c)
            if c:
                clean[elem_type(*g)] = c
        self.group = group
        self.terms = clean

    @classmethod
    def basis(cls, group: str, g, coeff=1) -> "RingElement":
        return cls(group, {g: coeff})

    @classmethod
    def one(cls, group: str) -> "RingElement":
        return cls(group, {_LAWS[group][2]: 1})

    @classmethod
    def zero(cls, group: str) -> "RingElement":
        return cls(group)

    @classmethod
    def word(cls, group: str, text: str, coeff=1) -> "RingElement":
        return cls(group, {grp.parse_word(text, group): coeff})

    def _check(self, other: "RingElement"):
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {type(other).__name__}")
        if other.group != self.group:
            raise ValueError(f"group mismatch: {self.group} vs {other.group}")

    def __add__(self, other):
        if not isinstance(other, RingElement):
            other = RingElement.one(self.group).scale(other)
        self._check(other)
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, 0) + c
        return RingElement(self.group, out)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other if isinstance(other, RingElement) else -Gaussian.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "RingElement":
        c = Gaussian.coerce(c)
        return RingElement(self.group, {g: c * v for g, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, RingElement):
            return self.scale(other)
        self._check(other)
        mul = _LAWS[self.group][0]
        out: dict = {}
        for g, a in self.terms.items():
            for h, b in other.terms.items():
                k = mul(g, h)
                out[k] = out.get(k, 0) + a * b
        return RingElement(self.group, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined in the group ring")
        out = RingElement.one(self.group)
        for _ in range(k):
            out = out * self
        return out

    def star(self) -> "RingElement":
        inv = _LAWS[self.group][1]
        return RingElement(self.group, {inv(g): c.conjugate() for g, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.group == other.group and self.terms == other.terms

    def __hash__(self):
        return hash((self.group, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def support(self) -> list:
        return sorted(self.terms)

    def max_word_length(self) -> int:
        if not self.terms:
            return 0
        if self.group == DIHEDRAL:
            return max(grp.word_length(g) for g in self.terms)
        return max(grp.g_word_length(g) for g in self.terms)

    def coefficient(self, g) -> Gaussian:
        return self.terms.get(g, Gaussian(0))

    def is_projection(self) -> bool:
        return self == self.star() and self * self == self

    def is_unitary(self) -> bool:
        one = RingElement.one(self.group)
        return self * self.star() == one and self.star() * self == one

    def __repr__(self):
        if not self.terms:
            return f"RingElement({self.group}, 0)"
        name = grp.dihedral_name if self.group == DIHEDRAL else grp.g_name
        parts = [f"({c})*{name(g)}" for g, c in sorted(self.terms.items())]
        return f"RingElement({self.group}, {' + '.join(parts)})"

    # serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "terms": [
                {"g": list(g), "re": str(c.re), "im": str(c.im)}
                for g, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, obj) -> "RingElement":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            group = obj["group"]
            terms = {}
            for t in obj["terms"]:
                g = tuple(int(x) for x in t["g"])
                if len(g) != 2:
                    raise ValueError(f"bad group element {t['g']!r}")
                c = Gaussian(Fraction(str(t.get("re", "0"))), Fraction(str(t.get("im", "0"))))
                terms[g] = terms.get(g, 0) + c
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed ring element: {exc}") from exc
        return cls(group, terms)


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def ring_star(x: RingElement) -> RingElement:
    return x.star()


def projection(j: int) -> RingElement:
    """The K_0 generators 1, (1+e)/2 and (1+Se)/2 of the dihedral group ring."""
    half = Fraction(1, 2)
    if j == 0:
        return RingElement.one(DIHEDRAL)
    if j == 1:
        return RingElement(DIHEDRAL, {grp.D_ID: half, grp.E: half})
    if j == 2:
        return RingElement(DIHEDRAL, {grp.D_ID: half, DihedralElement(1, 1): half})
    raise ValueError(f"projection index must be 0, 1 or 2, got {j}")


def projection_eS() -> RingElement:
    """Alternate form (1+eS)/2 of the third generator; eS = S^-1 e."""
    half = Fraction(1, 2)
    return RingElement(DIHEDRAL, {grp.D_ID: half, DihedralElement(-1, 1): half})


def alpha_minus1(x: RingElement) -> RingElement:
    """Automorphism S -> S, e -> S^-1 e, extended linearly."""
    if x.group != DIHEDRAL:
        raise ValueError("alpha_minus1 acts on the dihedral group ring")
    # S^m e^eps -> S^m (S^-1 e)^eps = S^(m - eps) e^eps
    return RingElement(DIHEDRAL, {DihedralElement(g.shift - g.flip, g.flip): c for g, c in x.terms.items()})


def generator(name: str) -> RingElement:
    """Ring element for a named generator: S, e (dihedral) or U, V (semidirect)."""
    group = DIHEDRAL if name in ("S", "e") else SEMIDIRECT
    return RingElement.word(group, name)


def unitary(text: str, group: str) -> RingElement:
    return RingElement.word(group, text, coeff=ONE)
