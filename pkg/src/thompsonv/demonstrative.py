"""Bounded checks of the demonstrative property and of the ping-pong conditions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cantor import comparable, format_word, parse_word
from .modular import GenSymbol, GeneratorMap, GroupWord, evaluate
from .prm import Prm, compose, identity, image_of_cone, invert, is_identity


@dataclass(frozen=True)
class DemonstrationReport:
    node: str
    max_len: int
    checked: int
    violations: tuple[tuple[GroupWord, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def serialize(self) -> str:
        lines = [f"node={format_word(self.node)} max_len={self.max_len} checked={self.checked}"]
        lines += [f"{w}\t{format_word(c)}" for w, c in self.violations]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "DemonstrationReport":
        header, *rest = text.splitlines()
        fields = dict(item.split("=", 1) for item in header.split())
        violations = []
        for line in rest:
            if line.strip():
                word, cone = line.split("\t")
                violations.append((GroupWord.parse(word), parse_word(cone)))
        return cls(parse_word(fields["node"]), int(fields["max_len"]), int(fields["checked"]), tuple(violations))


def _violation_key(item: tuple[GroupWord, str]):
    return len(item[0]), str(item[0])


def check_demonstration_node(gm: GeneratorMap, node: str, words: Sequence[GroupWord]) -> DemonstrationReport:
    """Report every word whose image of the cone ``[node]`` meets ``[node]``.

    The words are assumed to represent nontrivial elements.  A clean report
    certifies the demonstrative property only for the words supplied.
    """
    violations = []
    for w in words:
        for label in sorted(image_of_cone(evaluate(w, gm), node)):
            if comparable(label, node):
                violations.append((w, label))
                break
    violations.sort(key=_violation_key)
    max_len = max((len(w) for w in words), default=0)
    return DemonstrationReport(node, max_len, len(words), tuple(violations))


def ball_words(gm: GeneratorMap, max_len: int) -> list[GroupWord]:
    """One shortest word for each nontrivial element of the ball of radius ``max_len``.

    Each generator is always included, even if it acts trivially, so that a
    degenerate generating set is reported rather than silently skipped.
    """
    syms = sorted(GenSymbol(n, inv) for n in gm for inv in (False, True))
    steps = {s: invert(gm[s.base]) if s.inverted else gm[s.base] for s in syms}
    start = identity()
    seen = {start}
    out: list[GroupWord] = []
    layer = [(GroupWord(), start)]
    for _ in range(max_len):
        nxt = []
        for w, p in layer:
            for s in syms:
                q = compose(p, steps[s])
                if q in seen:
                    if not w.letters and not s.inverted and is_identity(q):
                        out.append(GroupWord((s,)))
                    continue
                seen.add(q)
                word = w + GroupWord((s,))
                nxt.append((word, q))
                out.append(word)
        layer = nxt
    return out


@dataclass(frozen=True)
class PingPongResult:
    not_contained: bool
    h1_into_x1: bool
    h2_into_x2: bool
    failures: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.not_contained and self.h1_into_x1 and self.h2_into_x2

    def __bool__(self) -> bool:
        return self.ok


def _maps_into(elements: Iterable[Prm], source: str, target: str) -> bool:
    return all(label.startswith(target) for p in elements for label in image_of_cone(p, source))


def ping_pong_check(h1: Iterable[Prm], h2: Iterable[Prm], x1: str, x2: str) -> PingPongResult:
    """Check the three ping-pong conditions for cones ``X1 = [x1]`` and ``X2 = [x2]``.

    ``h1`` and ``h2`` list the nontrivial elements of the two finite subgroups.
    """
    h1, h2 = list(h1), list(h2)
    c1 = not x2.startswith(x1)
    c2 = _maps_into(h1, x2, x1)
    c3 = _maps_into(h2, x1, x2)
    failures = tuple(name for name, ok in (("X2 not in X1", c1), ("H1 maps X2 into X1", c2),
                                           ("H2 maps X1 into X2", c3)) if not ok)
    return PingPongResult(c1, c2, c3, failures)


def nontrivial_cyclic(p: Prm, order: int) -> list[Prm]:
    """``p, p^-1`` (or just ``p`` for an involution): the nontrivial elements of a cyclic group of order 2 or 3."""
    if order == 2:
        return [p]
    if order == 3:
        return [p, invert(p)]
    raise ValueError("only orders 2 and 3 are enumerated")
