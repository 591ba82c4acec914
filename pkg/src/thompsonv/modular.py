"""Group words, the modular group C2 * C3 and its embedding into V.

The embedding sends the order-two generator to ``element_a()`` and the
order-three generator to ``element_b()``.  Normal forms alternate a letter
from ``{a}`` with a letter from ``{b, b^-1}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .prm import Prm, compose, identity, invert, make_prm

GeneratorMap = Mapping[str, Prm]


class UnknownGenerator(KeyError):
    pass


@dataclass(frozen=True, order=True)
class GenSymbol:
    base: str
    inverted: bool = False

    def inverse(self) -> "GenSymbol":
        return GenSymbol(self.base, not self.inverted)

    @property
    def token(self) -> str:
        """Command-line spelling: ``g`` or ``g-``."""
        return self.base + "-" if self.inverted else self.base

    @property
    def letter(self) -> str:
        """Word-file spelling: single-letter inverses are capitalised (``B``)."""
        if self.inverted and len(self.base) == 1 and self.base.islower():
            return self.base.upper()
        return self.token

    @classmethod
    def parse(cls, text: str) -> "GenSymbol":
        if text.endswith("-") and len(text) > 1:
            return cls(text[:-1], True)
        if len(text) == 1 and text.isupper():
            return cls(text.lower(), True)
        if not text or not text.replace("_", "").isalnum() or not text[0].isalpha():
            raise ValueError(f"bad generator symbol {text!r}")
        return cls(text)


@dataclass(frozen=True)
class GroupWord:
    letters: tuple[GenSymbol, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[GenSymbol]:
        return iter(self.letters)

    def __add__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple(s.inverse() for s in reversed(self.letters)))

    def __str__(self) -> str:
        return " ".join(s.letter for s in self.letters) if self.letters else "1"

    @property
    def tokens(self) -> tuple[str, ...]:
        return tuple(s.token for s in self.letters)

    @classmethod
    def parse(cls, text: str) -> "GroupWord":
        text = text.strip()
        if text in ("", "1"):
            return cls()
        return cls(tuple(GenSymbol.parse(t) for t in text.split()))

    @classmethod
    def of(cls, symbols: Iterable[str]) -> "GroupWord":
        return cls(tuple(GenSymbol.parse(t) for t in symbols))


A = GenSymbol("a")
B = GenSymbol("b")
B_INV = GenSymbol("b", True)
A_INV = GenSymbol("a", True)

# one-letter results of rewriting a two-letter window; None deletes the pair
_RULES: dict[tuple[GenSymbol, GenSymbol], GenSymbol | None] = {
    (A, A): None,
    (B, B_INV): None,
    (B_INV, B): None,
    (B, B): B_INV,
    (B_INV, B_INV): B,
}


def element_a() -> Prm:
    return make_prm({
        "0": "11111", "11111": "0",
        "10": "11110", "11110": "10",
        "110": "1110", "1110": "110",
    })


def element_b() -> Prm:
    return make_prm({
        "0": "1010", "1010": "110", "110": "0",
        "100": "1011", "1011": "111", "111": "100",
    })


def element_gz() -> Prm:
    """Generator of a copy of Z in V whose orbit of the cone [0] is free."""
    return make_prm({"0": "110", "100": "10", "101": "0", "11": "111"})


def psi_map() -> dict[str, Prm]:
    return {"a": element_a(), "b": element_b()}


def z_map() -> dict[str, Prm]:
    return {"g": element_gz()}


def normalize(w: GroupWord) -> GroupWord:
    """Reduce a word over ``a, a^-1, b, b^-1`` to its alternating normal form."""
    out: list[GenSymbol] = []
    for sym in w:
        if sym.base not in ("a", "b"):
            raise ValueError(f"normal forms are defined over a, b only; got {sym.token}")
        letter: GenSymbol | None = A if sym == A_INV else sym
        while letter is not None and out and (out[-1], letter) in _RULES:
            letter = _RULES[(out.pop(), letter)]
        if letter is not None:
            out.append(letter)
    return GroupWord(tuple(out))


def length(w: GroupWord) -> int:
    """Geodesic length in C2 * C3."""
    return len(normalize(w))


def evaluate(w: GroupWord, gm: GeneratorMap) -> Prm:
    result = identity()
    for sym in w:
        try:
            p = gm[sym.base]
        except KeyError:
            raise UnknownGenerator(sym.base) from None
        result = compose(result, invert(p) if sym.inverted else p)
    return result


def enumerate_normal_forms(max_len: int) -> list[GroupWord]:
    """All normal forms of length 1..max_len, by length then in a < b < b^-1 order."""
    words: list[GroupWord] = []
    layer = [(A,), (B,), (B_INV,)]
    for _ in range(max_len):
        words.extend(GroupWord(t) for t in layer)
        layer = [t + (nxt,) for t in layer for nxt in ((B, B_INV) if t[-1] == A else (A,))]
    return words


def normal_form_count(k: int) -> int:
    return 2 ** (k // 2) + 2 ** ((k + 1) // 2)


def commutator(x: GroupWord, y: GroupWord) -> GroupWord:
    """``x^-1 y^-1 x y``."""
    return x.inverse() + y.inverse() + x + y


def f2_generators() -> tuple[GroupWord, GroupWord]:
    """Normal forms of ``[a, b]`` and ``[a, b^-1]``, which generate a free group of rank two."""
    a, b, bi = GroupWord((A,)), GroupWord((B,)), GroupWord((B_INV,))
    return normalize(commutator(a, b)), normalize(commutator(a, bi))


def freely_reduced_words(names: Iterable[str], max_len: int) -> Iterator[GroupWord]:
    """Freely reduced words over ``names`` and their inverses, by length, lengths 1..max_len."""
    syms = sorted(GenSymbol(n, inv) for n in names for inv in (False, True))
    for n in range(1, max_len + 1):
        for combo in itertools.product(syms, repeat=n):
            if all(x != y.inverse() for x, y in zip(combo, combo[1:])):
                yield GroupWord(combo)


def substitute(w: GroupWord, images: Mapping[str, GroupWord]) -> GroupWord:
    out = GroupWord()
    for sym in w:
        img = images[sym.base]
        out = out + (img.inverse() if sym.inverted else img)
    return out
