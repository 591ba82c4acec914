"""Pushdown automata for the word problem of a demonstrative subgroup of V.

The stack spells the address of the image of the demonstration node under
the word read so far, top of stack first, over a bottom marker ``#``.  The
automaton is in the accept state exactly when that address is the node
itself again.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .cantor import check_word, comparable, format_word, parse_word
from .modular import GeneratorMap
from .prm import InsufficientDepth, Prm, apply_to_word, compose, identity, invert, is_identity

Q0, QA, QR = "q0", "qa", "qr"
STATES = (Q0, QA, QR)
BOTTOM = "#"
STACK_ALPHABET = ("#", "0", "1")
EPS = "eps"
HEADER = "# wp-pda v1"


class PdaError(Exception):
    pass


class ShallowNode(PdaError):
    """A reachable stack address is too short for some generator's prefix replacement."""

    def __init__(self, token: str, address: str):
        super().__init__(f"generator {token} cannot act on reachable address {format_word(address)}")
        self.token = token
        self.address = address


class NodeNotMoved(PdaError):
    """A generator maps the node to a comparable cone, so the node cannot demonstrate."""

    def __init__(self, token: str, node: str):
        super().__init__(f"generator {token} does not move node {format_word(node)} off itself")
        self.token = token
        self.node = node


class NonTerminatingRefinement(PdaError):
    pass


class TableParseError(PdaError, ValueError):
    pass


@dataclass(frozen=True)
class Transition:
    source: str
    token: str | None  # None is an epsilon move
    pop: str
    push: str
    target: str

    def applies(self, state: str, stack: str) -> bool:
        return state == self.source and stack.startswith(self.pop)

    def fire(self, stack: str) -> str:
        return self.push + stack[len(self.pop):]


@dataclass(frozen=True)
class Configuration:
    state: str
    stack: str
    position: int


@dataclass(frozen=True)
class Pda:
    node: str
    alphabet: tuple[str, ...]
    transitions: tuple[Transition, ...]

    def __post_init__(self):
        for t in self.transitions:
            if t.source not in STATES or t.target not in STATES:
                raise ValueError(f"unknown state in {t}")
            if t.token is None and t.source != Q0:
                raise ValueError("epsilon moves are only allowed from q0")
            if t.token is not None and t.token not in self.alphabet:
                raise ValueError(f"token {t.token} not in alphabet")
            for s in (t.pop, t.push):
                if s.strip("01#") or BOTTOM in s[:-1]:
                    raise ValueError(f"bad stack string {s!r}")
            if t.source != Q0 and t.pop.endswith(BOTTOM) != t.push.endswith(BOTTOM):
                raise ValueError(f"bottom marker must be popped and pushed together in {t}")
        loading = [t for t in self.transitions if t.source == Q0]
        if len(loading) != 1 or loading[0].token is not None:
            raise ValueError("q0 must have exactly one transition, an epsilon move")

    @property
    def start(self) -> str:
        return Q0

    @property
    def accept(self) -> frozenset[str]:
        return frozenset((QA,))

    def applicable(self, state: str, stack: str, token: str | None) -> list[Transition]:
        return [t for t in self.transitions if t.token == token and t.applies(state, stack)]


# -- alphabet ---------------------------------------------------------------

def input_tokens(gm: GeneratorMap) -> tuple[str, ...]:
    """Generators, then inverses, each sorted; involutions get no separate inverse token."""
    names = sorted(gm)
    inverses = [n + "-" for n in names if invert(gm[n]) != gm[n]]
    return tuple(names) + tuple(inverses)


def token_prm(gm: GeneratorMap, token: str) -> Prm:
    if token.endswith("-"):
        return invert(gm[token[:-1]])
    return gm[token]


def normalize_token(text: str) -> str:
    """Accept ``b-`` as well as the word-file spelling ``B``."""
    if len(text) == 1 and text.isupper():
        return text.lower() + "-"
    return text


def parse_tokens(text: str) -> list[str]:
    return [normalize_token(t) for t in text.split()]


# -- construction -----------------------------------------------------------

def audit_addresses(gm: GeneratorMap, node: str, depth: int = 8) -> set[str]:
    """Addresses of the node's images under all words of length ``<= depth``.

    Raises ShallowNode when a generator hits an address shallower than its
    domain barrier, where the stack machine would get stuck.
    """
    tokens = input_tokens(gm)
    prms = {t: token_prm(gm, t) for t in tokens}
    seen = {node}
    frontier = [node]
    for _ in range(depth):
        nxt = []
        for addr in frontier:
            for t in tokens:
                try:
                    image = apply_to_word(prms[t], addr)
                except InsufficientDepth:
                    raise ShallowNode(t, addr) from None
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
        if not frontier:
            break
    return seen


def _check_node(gm: GeneratorMap, node: str, audit_len: int) -> None:
    for t in input_tokens(gm):
        try:
            image = apply_to_word(token_prm(gm, t), node)
        except InsufficientDepth:
            raise ShallowNode(t, node) from None
        if comparable(image, node):
            raise NodeNotMoved(t, node)
    audit_addresses(gm, node, audit_len)


def build_word_problem_pda(
    gm: GeneratorMap,
    node: str,
    *,
    deepen: bool = False,
    audit_len: int = 8,
    max_deepen: int = 32,
) -> Pda:
    """Compile the three-state word-problem automaton for the group generated by ``gm``.

    ``node`` must be a demonstration node; that is trusted, not checked.  With
    ``deepen=True`` a shallow node is replaced by ``node + "0"`` until the
    reachability audit passes.
    """
    check_word(node)
    for _ in range(max_deepen + 1):
        try:
            _check_node(gm, node, audit_len)
            break
        except ShallowNode:
            if not deepen:
                raise
            node += "0"
    else:
        raise ShallowNode("*", node)

    tokens = input_tokens(gm)
    prms = {t: token_prm(gm, t) for t in tokens}
    rows = [Transition(Q0, None, "", node + BOTTOM, QA)]
    rows += [Transition(QA, t, node, apply_to_word(prms[t], node), QR) for t in tokens]
    for t in tokens:
        rows += [Transition(QR, t, d, r, QR) for d, r in prms[t].pairs]
    for t in tokens:
        rows += [
            Transition(QR, t, d + node[len(r):] + BOTTOM, node + BOTTOM, QA)
            for d, r in prms[t].pairs
            if node.startswith(r)
        ]
    return Pda(node, tokens, tuple(rows))


def determinize_against_accept(p: Pda, node: str | None = None, max_depth: int | None = None) -> Pda:
    """Split ``qr -> qr`` moves whose pop string lies above an accepting pop.

    A move ``(g, s, t)`` clashes with ``(g, u#, node#)`` when ``s`` is a prefix
    of ``u``; it is replaced by ``(g, s0, t0)`` and ``(g, s1, t1)``, repeatedly.
    The split rows go to the end of that token's ``qr -> qr`` block.
    """
    node = p.node if node is None else node
    if node != p.node:
        raise ValueError(f"automaton was built for node {format_word(p.node)}, not {format_word(node)}")
    longest = max((max(len(t.pop), len(t.push)) for t in p.transitions), default=0)
    bound = max_depth if max_depth is not None else len(node) + 2 * longest + 8

    accept_pops: dict[str, list[str]] = {}
    for t in p.transitions:
        if t.source == QR and t.target == QA:
            accept_pops.setdefault(t.token, []).append(t.pop[:-1])

    def clashes(t: Transition) -> bool:
        return any(u.startswith(t.pop) for u in accept_pops.get(t.token, ()))

    out: list[Transition] = []
    blocks: dict[str, list[Transition]] = {}
    for t in p.transitions:
        if t.source == QR and t.target == QR:
            if t.token not in blocks:
                blocks[t.token] = []
                out.append(t.token)  # placeholder for the token's block
            blocks[t.token].append(t)
        else:
            out.append(t)

    for token, block in blocks.items():
        kept = [t for t in block if not clashes(t)]
        pending = [t for t in block if clashes(t)]
        while pending:
            split = []
            for t in pending:
                if len(t.pop) + 1 > bound:
                    raise NonTerminatingRefinement(f"splitting {t} exceeds depth {bound}")
                split += [Transition(QR, token, t.pop + c, t.push + c, QR) for c in "01"]
            kept += [t for t in split if not clashes(t)]
            pending = [t for t in split if clashes(t)]
        blocks[token] = kept

    rows: list[Transition] = []
    for item in out:
        rows.extend(blocks[item] if isinstance(item, str) else [item])
    return Pda(p.node, p.alphabet, tuple(rows))


# -- simulation -------------------------------------------------------------

@dataclass(frozen=True)
class RunResult:
    accepted: bool
    trace: tuple[Configuration, ...] = ()
    layers: tuple[int, ...] = ()  # number of configurations after each input position

    def __bool__(self) -> bool:
        return self.accepted


def _check_input(p: Pda, word: Sequence[str]) -> None:
    unknown = [t for t in word if t not in p.alphabet]
    if unknown:
        raise ValueError(f"tokens not in the input alphabet: {' '.join(unknown)}")


def _eps_closure(p: Pda, layer: dict, position: int) -> None:
    queue = deque(layer)
    while queue:
        state, stack = queue.popleft()
        for t in p.applicable(state, stack, None):
            key = (t.target, t.fire(stack))
            if key not in layer:
                layer[key] = ((state, stack), position)
                queue.append(key)


def explore(p: Pda, word: Sequence[str]) -> list[dict]:
    """All configurations reachable on each prefix of ``word``.

    Layer ``i`` maps ``(state, stack)`` after reading ``i`` tokens to its parent
    ``((state, stack), layer index)``.
    """
    _check_input(p, word)
    layer: dict = {(Q0, ""): None}
    _eps_closure(p, layer, 0)
    layers = [layer]
    for i, token in enumerate(word):
        nxt: dict = {}
        for state, stack in layer:
            for t in p.applicable(state, stack, token):
                nxt.setdefault((t.target, t.fire(stack)), ((state, stack), i))
        _eps_closure(p, nxt, i + 1)
        layers.append(nxt)
        layer = nxt
    return layers


def run(p: Pda, word: Sequence[str]) -> RunResult:
    """Breadth-first search over configurations; accept by final state."""
    layers = explore(p, word)
    sizes = tuple(len(layer) for layer in layers)
    final = [key for key in layers[-1] if key[0] in p.accept]
    if not final:
        return RunResult(False, (), sizes)
    trace = []
    key, pos = min(final), len(word)
    while key is not None:
        trace.append(Configuration(key[0], key[1], pos))
        parent = layers[pos][key]
        if parent is None:
            break
        key, pos = parent
    return RunResult(True, tuple(reversed(trace)), sizes)


@dataclass(frozen=True)
class Mismatch:
    word: tuple[str, ...]
    pda_accepts: bool
    is_identity: bool


def all_words(alphabet: Sequence[str], max_len: int) -> Iterable[tuple[str, ...]]:
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def cross_validate(p: Pda, gm: GeneratorMap, max_len: int) -> list[Mismatch]:
    """Compare the automaton with direct composition on every word of length ``<= max_len``."""
    prms = {t: token_prm(gm, t) for t in p.alphabet}
    mismatches = []
    # depth-first so each element is one composition away from its parent's
    stack: list[tuple[tuple[str, ...], Prm]] = [((), identity())]
    while stack:
        word, element = stack.pop()
        expected = is_identity(element)
        got = run(p, word).accepted
        if got != expected:
            mismatches.append(Mismatch(word, got, expected))
        if len(word) < max_len:
            stack.extend((word + (t,), compose(element, prms[t])) for t in reversed(p.alphabet))
    mismatches.sort(key=lambda m: (len(m.word), m.word))
    return mismatches


# -- table files ------------------------------------------------------------

def serialize_table(p: Pda) -> str:
    lines = [f"{HEADER} node={format_word(p.node)} alphabet={','.join(p.alphabet)}"]
    for t in p.transitions:
        lines.append("\t".join((t.source, t.token or EPS, t.pop or "-", t.push or "-", t.target)))
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> Pda:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith(HEADER):
        raise TableParseError(f"missing header line {HEADER!r}")
    try:
        fields = dict(item.split("=", 1) for item in lines[0][len(HEADER):].split())
        node = parse_word(fields["node"])
        alphabet = tuple(a for a in fields["alphabet"].split(",") if a)
    except (KeyError, ValueError) as exc:
        raise TableParseError(f"bad header: {lines[0]!r}") from exc
    rows = []
    for lineno, line in enumerate(lines[1:], 2):
        cols = line.split("\t")
        if len(cols) != 5:
            raise TableParseError(f"line {lineno}: expected 5 tab-separated columns")
        source, token, pop, push, target = cols
        rows.append(Transition(
            source,
            None if token == EPS else normalize_token(token),
            "" if pop == "-" else pop,
            "" if push == "-" else push,
            target,
        ))
    try:
        return Pda(node, alphabet, tuple(rows))
    except ValueError as exc:
        raise TableParseError(str(exc)) from exc


def format_table(p: Pda) -> str:
    """Human-readable table with the usual five column headings."""
    head = ("Current State", "Input", "Stack Top", "Stack Replacement", "New State")
    body = [(t.source, t.token or "ε", t.pop or "∅", t.push or "∅", t.target) for t in p.transitions]
    widths = [max(len(r[i]) for r in [head, *body]) for i in range(5)]
    fmt = " | ".join(f"{{:<{w}}}" for w in widths)
    rule = "-+-".join("-" * w for w in widths)
    return "\n".join([fmt.format(*head), rule, *(fmt.format(*r) for r in body)]) + "\n"


def pda_for(gm: Mapping[str, Prm], node: str, **kwargs) -> Pda:
    """Build then determinize."""
    return determinize_against_accept(build_word_problem_pda(gm, node, **kwargs))
