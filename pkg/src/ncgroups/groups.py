"""The infinite dihedral group Z x| Z_2 and the group G = Z x| Z.

Dihedral elements are stored in the normal form S^m e^eps, shift first.
Elements (a, b) of G stand for U^a V^b, with multiplication
(m, n)(p, q) = (m + (-1)^n p, n + q).
"""

from __future__ import annotations

import random
import re
from typing import Iterator, NamedTuple


class DihedralElement(NamedTuple):
    shift: int
    flip: int = 0

    def __mul__(self, other):  # type: ignore[override]
        return dmul(self, other)

    def inverse(self) -> "DihedralElement":
        return dinv(self)

    def __str__(self):
        return dihedral_name(self)


class GElement(NamedTuple):
    a: int
    b: int

    def __mul__(self, other):  # type: ignore[override]
        return gmul(self, other)

    def inverse(self) -> "GElement":
        return ginv(self)

    def __str__(self):
        return g_name(self)


D_ID = DihedralElement(0, 0)
S = DihedralElement(1, 0)
E = DihedralElement(0, 1)

G_ID = GElement(0, 0)
U = GElement(1, 0)
V = GElement(0, 1)


def dmul(g: DihedralElement, h: DihedralElement) -> DihedralElement:
    m, eps = g
    n, delta = h
    return DihedralElement(m - n if eps else m + n, eps ^ delta)


def dinv(g: DihedralElement) -> DihedralElement:
    m, eps = g
    # S^m e is an involution
    return DihedralElement(m if eps else -m, eps)


def gmul(g: GElement, h: GElement) -> GElement:
    m, n = g
    p, q = h
    return GElement(m - p if n % 2 else m + p, n + q)


def ginv(g: GElement) -> GElement:
    m, n = g
    return GElement(-m if n % 2 == 0 else m, -n)


def quotient_q(g: GElement) -> DihedralElement:
    """The surjection G -> Z x| Z_2, U -> S, V -> e."""
    return DihedralElement(g.a, g.b % 2)


def center_embed(n: int) -> GElement:
    return GElement(0, 2 * n)


def word_length(g: DihedralElement) -> int:
    return abs(g.shift) + g.flip


def g_word_length(g: GElement) -> int:
    return abs(g.a) + abs(g.b)


def dihedral_elements(max_length: int) -> list[DihedralElement]:
    """All elements of word length <= max_length, ordered by length."""
    out = [DihedralElement(m, 0) for m in range(-max_length, max_length + 1)]
    out += [DihedralElement(m, 1) for m in range(-max_length + 1, max_length)]
    out.sort(key=lambda g: (word_length(g), g.flip, abs(g.shift), g.shift))
    return out


def g_elements(radius: int) -> Iterator[GElement]:
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            yield GElement(a, b)


def are_conjugate_bounded(g: DihedralElement, h: DihedralElement, R: int) -> bool:
    """Search conjugators k of word length <= R with k g k^-1 = h.

    A False answer only means no conjugator was found within the bound.
    """
    if R < 1:
        raise ValueError("R must be positive")
    for k in dihedral_elements(R):
        if dmul(dmul(k, g), dinv(k)) == h:
            return True
    return False


def conjugacy_classes(max_length: int, search: int | None = None) -> list[list[DihedralElement]]:
    """Partition elements of length <= max_length by bounded conjugacy."""
    search = search or 2 * max_length + 2
    classes: list[list[DihedralElement]] = []
    for g in dihedral_elements(max_length):
        for cls in classes:
            if are_conjugate_bounded(cls[0], g, search):
                cls.append(g)
                break
        else:
            classes.append([g])
    return classes


def dihedral_name(g: DihedralElement) -> str:
    m, eps = g
    if m == 0:
        base = ""
    elif m == 1:
        base = "S"
    else:
        base = f"S^{m}"
    if eps:
        base += "e"
    return base or "1"


def g_name(g: GElement) -> str:
    a, b = g
    parts = []
    if a:
        parts.append("U" if a == 1 else f"U^{a}")
    if b:
        parts.append("V" if b == 1 else f"V^{b}")
    return "".join(parts) or "1"


_TOKEN = re.compile(r"([A-Za-z])(?:\^?\(?(-?\d+)\)?)?")


def parse_word(text: str, group: str):
    """Evaluate a word like ``S^2e``, ``eS``, ``V^-1``, ``UV`` or ``1``."""
    text = text.replace(" ", "").replace("*", "")
    if group == "dihedral":
        gens = {"S": S, "e": E}
        ident, mul, inv = D_ID, dmul, dinv
    elif group == "semidirect":
        gens = {"U": U, "V": V}
        ident, mul, inv = G_ID, gmul, ginv
    else:
        raise ValueError(f"unknown group {group!r}")
    if text in ("", "1"):
        return ident
    pos, out = 0, ident
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.group(1) not in gens:
            raise ValueError(f"cannot parse word {text!r} at position {pos}")
        g = gens[match.group(1)]
        power = int(match.group(2)) if match.group(2) is not None else 1
        step = g if power >= 0 else inv(g)
        for _ in range(abs(power)):
            out = mul(out, step)
        pos = match.end()
    return out


def random_dihedral_word(rng: random.Random, length: int) -> list[str]:
    return [rng.choice(["S", "S^-1", "e"]) for _ in range(length)]


def rewrite_word(word: list[str]) -> DihedralElement:
    """Push every e to the right using e S^k = S^-k e and e e = 1.

    Independent of dmul: works on the letter list directly.
    """
    shift, flip = 0, 0
    for letter in word:
        if letter == "e":
            flip ^= 1
        else:
            k = 1 if letter == "S" else -1
            shift += -k if flip else k
    return DihedralElement(shift, flip)
