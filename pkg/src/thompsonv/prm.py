"""Elements of Thompson's group V as prefix replacement maps.

Elements act on the right: ``compose(p, q)`` is "apply p, then q", so
``apply_to_word(compose(p, q), w) == apply_to_word(q, apply_to_word(p, w))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .cantor import Barrier, check_word, format_word, parse_word


class InsufficientDepth(ValueError):
    """The word is a proper prefix of domain words, so its image is not a single prefix swap."""


class PrmParseError(ValueError):
    pass


@dataclass(frozen=True)
class Prm:
    """A prefix replacement ``(domain, range, sigma)`` held as sorted ``(d, sigma(d))`` pairs.

    Instances built through :func:`make_prm` or any operation of this module
    are reduced, so structural equality is group equality.
    """

    pairs: tuple[tuple[str, str], ...]

    @property
    def domain(self) -> Barrier:
        return Barrier(d for d, _ in self.pairs)

    @property
    def range(self) -> Barrier:
        return Barrier(r for _, r in self.pairs)

    @property
    def table(self) -> dict[str, str]:
        return dict(self.pairs)

    def __str__(self) -> str:
        return format_prm(self)


def _validated(mapping: Mapping[str, str]) -> dict[str, str]:
    table = {check_word(d): check_word(r) for d, r in mapping.items()}
    Barrier(table)
    if len(set(table.values())) != len(table):
        raise ValueError("prefix replacement is not injective")
    Barrier(table.values())
    return table


def _reduced_table(table: dict[str, str]) -> dict[str, str]:
    table = dict(table)
    changed = True
    while changed:
        changed = False
        for d0 in [d for d in table if d.endswith("0")]:
            d1 = d0[:-1] + "1"
            if d0 not in table or d1 not in table:
                continue
            r0, r1 = table[d0], table[d1]
            if r0.endswith("0") and r1 == r0[:-1] + "1":
                del table[d0], table[d1]
                table[d0[:-1]] = r0[:-1]
                changed = True
    return table


def _freeze(table: dict[str, str]) -> Prm:
    return Prm(tuple(sorted(_reduced_table(table).items())))


def make_prm(mapping: Mapping[str, str] | Iterable[tuple[str, str]]) -> Prm:
    """Build a reduced element from a ``domain word -> range word`` bijection between barriers."""
    if not isinstance(mapping, Mapping):
        mapping = dict(mapping)
    return _freeze(_validated(mapping))


def identity() -> Prm:
    return Prm((("", ""),))


def reduce(p: Prm) -> Prm:
    return _freeze(dict(p.pairs))


def apply_to_word(p: Prm, w: str) -> str:
    table = p.table
    for k in range(len(w) + 1):
        if w[:k] in table:
            return table[w[:k]] + w[k:]
    raise InsufficientDepth(f"{format_word(w)} is shallower than the domain barrier")


def image_of_cone(p: Prm, w: str) -> frozenset[str]:
    """Labels of the maximal cones whose union is ``[w]p``."""
    try:
        return frozenset((apply_to_word(p, w),))
    except InsufficientDepth:
        return frozenset(r for d, r in p.pairs if d.startswith(w))


def compose(p: Prm, q: Prm) -> Prm:
    """The element acting as ``p`` followed by ``q``."""
    qtab = q.table
    out: dict[str, str] = {}
    for d, r in p.pairs:
        try:
            out[d] = apply_to_word(q, r)
        except InsufficientDepth:
            # r sits above several leaves of q: split d along the same subtree
            for e, image in qtab.items():
                if e.startswith(r):
                    out[d + e[len(r):]] = image
    return _freeze(out)


def invert(p: Prm) -> Prm:
    return Prm(tuple(sorted((r, d) for d, r in p.pairs)))


def equals(p: Prm, q: Prm) -> bool:
    return reduce(p) == reduce(q)


def is_identity(p: Prm) -> bool:
    return all(d == r for d, r in p.pairs)


def power(p: Prm, k: int) -> Prm:
    if k < 0:
        return power(invert(p), -k)
    result = identity()
    for _ in range(k):
        result = compose(result, p)
    return result


def element_order(p: Prm, max_order: int) -> int | None:
    """Smallest ``k <= max_order`` with ``p**k`` the identity; ``None`` means unbounded."""
    if max_order < 1:
        raise ValueError("max_order must be positive")
    q = p
    for k in range(1, max_order + 1):
        if is_identity(q):
            return k
        q = compose(q, p)
    return None


def format_prm(p: Prm) -> str:
    return "".join(f"{format_word(d)} -> {format_word(r)}\n" for d, r in p.pairs)


def parse_prm(text: str) -> Prm:
    """Read the ``<domain-word> -> <range-word>`` line format; ``#`` starts a comment."""
    mapping: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            left, right = line.split("->")
            d, r = parse_word(left), parse_word(right)
        except ValueError as exc:
            raise PrmParseError(f"line {lineno}: cannot parse {raw!r}") from exc
        if d in mapping:
            raise PrmParseError(f"line {lineno}: duplicate domain word {format_word(d)}")
        mapping[d] = r
    if not mapping:
        raise PrmParseError("empty prefix replacement table")
    try:
        return make_prm(mapping)
    except ValueError as exc:
        raise PrmParseError(str(exc)) from exc
