"""Binary words, cones and barriers on the infinite rooted binary tree.

A binary word is a plain ``str`` over ``"01"``; the empty string is the root.
A cone ``[w]`` is identified with its label ``w``.
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator

ROOT = ""
ROOT_TOKEN = "e"


class Prefix(enum.Enum):
    EQUAL = "equal"
    U_PREFIX = "u-is-proper-prefix"
    V_PREFIX = "v-is-proper-prefix"
    INCOMPARABLE = "incomparable"


def check_word(w: str) -> str:
    if not isinstance(w, str) or w.strip("01"):
        raise ValueError(f"not a binary word: {w!r}")
    return w


def parse_word(text: str) -> str:
    text = text.strip()
    if text in (ROOT_TOKEN, "ε"):
        return ROOT
    return check_word(text)


def format_word(w: str) -> str:
    return w if w else ROOT_TOKEN


def prefix_relation(u: str, v: str) -> Prefix:
    if u == v:
        return Prefix.EQUAL
    if v.startswith(u):
        return Prefix.U_PREFIX
    if u.startswith(v):
        return Prefix.V_PREFIX
    return Prefix.INCOMPARABLE


def comparable(u: str, v: str) -> bool:
    return u.startswith(v) or v.startswith(u)


def cones_disjoint(u: str, v: str) -> bool:
    """True iff ``[u]`` and ``[v]`` do not meet."""
    return not comparable(u, v)


def kraft_numerator(words: Iterable[str], depth: int) -> int:
    """Sum of ``2**(depth - len(w))``; exact dyadic Kraft sum scaled by ``2**depth``."""
    return sum(1 << (depth - len(w)) for w in words)


def is_antichain(words: Iterable[str]) -> bool:
    ordered = sorted(set(words))
    # in lexicographic order every prefix is immediately followed by an extension
    return all(not b.startswith(a) for a, b in zip(ordered, ordered[1:]))


def is_barrier(words: Iterable[str]) -> bool:
    ws = set(words)
    if not ws:
        return False
    depth = max(len(w) for w in ws)
    return is_antichain(ws) and kraft_numerator(ws, depth) == 1 << depth


class Barrier:
    """A complete finite antichain, stored in canonical lexicographic order."""

    __slots__ = ("words",)

    def __init__(self, words: Iterable[str]):
        ws = tuple(sorted({check_word(w) for w in words}))
        if not is_barrier(ws):
            raise ValueError(f"not a barrier: {','.join(map(format_word, ws))}")
        object.__setattr__(self, "words", ws)

    def __setattr__(self, name, value):
        raise AttributeError("Barrier is immutable")

    def __iter__(self) -> Iterator[str]:
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: object) -> bool:
        return w in self.words

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Barrier) and self.words == other.words

    def __hash__(self) -> int:
        return hash(self.words)

    def __repr__(self) -> str:
        return f"Barrier({str(self)!r})"

    def __str__(self) -> str:
        return ",".join(format_word(w) for w in self.words)

    @classmethod
    def parse(cls, text: str) -> "Barrier":
        return cls(parse_word(t) for t in text.split(","))

    def prefix_of(self, w: str) -> str | None:
        """The unique barrier word that is a prefix of ``w``, if ``w`` is deep enough."""
        for k in range(len(w) + 1):
            if w[:k] in self.words:
                return w[:k]
        return None

    def refines(self, other: "Barrier") -> bool:
        return all(other.prefix_of(w) is not None for w in self.words)


def refine_to_contain(b: Barrier, w: str) -> Barrier:
    """Split leaves of ``b`` lying above ``w`` until ``w`` is a leaf or lies above leaves."""
    check_word(w)
    words = set(b)
    while True:
        above = [u for u in words if len(u) < len(w) and w.startswith(u)]
        if not above:
            return Barrier(words)
        (u,) = above
        words.remove(u)
        words.update((u + "0", u + "1"))


def all_words(length: int) -> Iterator[str]:
    """Every binary word of exactly ``length`` symbols, in lexicographic order."""
    for i in range(1 << length):
        yield format(i, f"0{length}b") if length else ROOT
