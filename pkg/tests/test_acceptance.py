"""Exit criteria.  Each test prints one PASS/FAIL line; run with ``-s`` to see them,
or execute this file directly for the summary alone."""

import itertools
import random
import time
from pathlib import Path

import pytest

from thompsonv.cantor import all_words, is_barrier
from thompsonv.demonstrative import check_demonstration_node, ping_pong_check
from thompsonv.modular import (
    A,
    GroupWord,
    element_a,
    element_b,
    enumerate_normal_forms,
    evaluate,
    f2_generators,
    freely_reduced_words,
    normal_form_count,
    psi_map,
    substitute,
    z_map,
)
from thompsonv.pda import BOTTOM, cross_validate, explore, pda_for, run, serialize_table, token_prm
from thompsonv.prm import compose, element_order, identity, image_of_cone, invert, is_identity, make_prm, reduce

GOLDEN = Path(__file__).resolve().parent / "golden"


def timed(limit, check):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    return ok and elapsed < limit, f"{detail}; {elapsed:.2f}s (limit {limit}s)"


def verdict(number, title, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} -- {detail}"


def _word(text):
    return evaluate(GroupWord.parse(text), psi_map())


def element_facts():
    a, b = element_a(), element_b()
    facts = {
        ("a", "0"): "11111",
        ("b", "0"): "1010",
        ("B", "0"): "110",
        ("a b", "0"): "10011",
        ("a B", "0"): "101111",
        ("b a", "0"): "1111010",
        ("B a", "0"): "1110",
        ("a", "10"): "11110",
        ("b", "111"): "100",
        ("B", "111"): "1011",
    }
    bad = [k for k, v in facts.items() if image_of_cone(_word(k[0]), k[1]) != {v}]
    ok = element_order(a, 10) == 2 and element_order(b, 10) == 3 and not bad
    return ok, f"orders 2/3, {len(facts) - len(bad)}/{len(facts)} cone facts"


def back_and_forth():
    gm = psi_map()
    words = [w for w in enumerate_normal_forms(12) if len(w) >= 2]
    bad = []
    for w in words:
        image = image_of_cone(evaluate(w, gm), "0")
        target = "111" if w.letters[-1] == A else "10"
        if len(image) != 1 or not next(iter(image)).startswith(target):
            bad.append(w)
    expected = sum(normal_form_count(k) for k in range(2, 13))
    return not bad and len(words) == expected, f"{len(words)} normal forms, {len(bad)} exceptions"


def demonstrative():
    report = check_demonstration_node(psi_map(), "0", enumerate_normal_forms(12))
    a, b = element_a(), element_b()
    pp = ping_pong_check([b, invert(b)], [a], "10", "111")
    return report.ok and pp.ok, f"{report.checked} words, {len(report.violations)} violations, ping-pong {pp.ok}"


TABLE1 = """\
q0	eps	-	0#	qa
qa	g	0	110	qr
qa	g-	0	101	qr
qr	g	0	110	qr
qr	g	100	10	qr
qr	g	11	111	qr
qr	g	1010	00	qr
qr	g	1011	01	qr
qr	g-	0	101	qr
qr	g-	10	100	qr
qr	g-	111	11	qr
qr	g-	1100	00	qr
qr	g-	1101	01	qr
qr	g	101#	0#	qa
qr	g-	110#	0#	qa
"""


def table_one():
    text = serialize_table(pda_for(z_map(), "0"))
    header, body = text.split("\n", 1)
    golden = (GOLDEN / "table1.pda").read_text()
    ok = body == TABLE1 and text == golden and header == "# wp-pda v1 node=0 alphabet=g,g-"
    return ok, f"{body.count(chr(10))} rows, golden match {text == golden}"


def pda_equivalence():
    pda_z, pda_psi = pda_for(z_map(), "0"), pda_for(psi_map(), "0")
    mz = cross_validate(pda_z, z_map(), 10)
    words = [w for n in range(1, 11) for w in itertools.product(pda_z.alphabet, repeat=n)]
    exponent = [w for w in words if run(pda_z, w).accepted != (w.count("g") == w.count("g-"))]
    mpsi = cross_validate(pda_psi, psi_map(), 7)
    ok = not mz and not exponent and not mpsi and len(words) == 2**11 - 2
    return ok, f"Z: {len(mz)} prm / {len(exponent)} exponent-sum mismatches over {len(words)} words; psi: {len(mpsi)}"


def free_subgroup():
    x, y = f2_generators()
    gm = psi_map()
    words = list(freely_reduced_words(["x", "y"], 4))
    trivial = [w for w in words if is_identity(evaluate(substitute(w, {"x": x, "y": y}), gm))]
    return not trivial and len(words) == 160, f"{len(words)} reduced words, {len(trivial)} trivial"


def random_prm(rng, max_splits=4):
    def barrier(n):
        leaves = [""]
        for _ in range(n):
            u = leaves.pop(rng.randrange(len(leaves)))
            leaves += [u + "0", u + "1"]
        return leaves

    n = rng.randint(0, max_splits)
    rng_words = barrier(n)
    rng.shuffle(rng_words)
    return make_prm(zip(barrier(n), rng_words))


def structural():
    failures = []
    # barriers: Kraft criterion against exhaustive coverage
    pool = [w for n in range(4) for w in all_words(n)]
    for k in range(1, 4):
        for ws in itertools.combinations(pool, k):
            depth = max(len(w) for w in ws)
            covered = all(sum(x.startswith(w) for w in ws) == 1 for x in all_words(depth))
            if is_barrier(ws) != covered:
                failures.append(("barrier", ws))
    # associativity and inverse / reduce round trips
    rng = random.Random(20261019)
    for _ in range(100):
        p, q, r = random_prm(rng), random_prm(rng), random_prm(rng)
        if compose(compose(p, q), r) != compose(p, compose(q, r)):
            failures.append(("assoc", p, q, r))
        if invert(invert(p)) != p or not is_identity(compose(p, invert(p))) or reduce(p) != p:
            failures.append(("invert/reduce", p))
    # stack tracking on both automata
    tracked = 0
    for gm in (z_map(), psi_map()):
        pda = pda_for(gm, "0")
        stack = [((), identity())]
        while stack:
            word, element = stack.pop()
            (label,) = image_of_cone(element, "0")
            final = [key for key in explore(pda, word)[-1] if key[0] != "q0"]
            if final != [("qa" if label == "0" else "qr", label + BOTTOM)]:
                failures.append(("stack", word))
            tracked += 1
            if len(word) < 8:
                stack.extend((word + (t,), compose(element, token_prm(gm, t))) for t in pda.alphabet)
    return not failures, f"{len(failures)} failures, {tracked} stack-tracked words"


CRITERIA = [
    (1, "element facts", 1, element_facts),
    (2, "back-and-forth lemma to length 12", 5, back_and_forth),
    (3, "demonstrative property and ping-pong", 5, demonstrative),
    (4, "Table 1 reproduction", 5, table_one),
    (5, "PDA / oracle equivalence", 30, pda_equivalence),
    (6, "free subgroup spot check", 10, free_subgroup),
    (7, "structural invariants", 60, structural),
]


@pytest.mark.parametrize("number, title, limit, check", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(number, title, limit, check, capsys):
    ok, detail = timed(limit, check)
    with capsys.disabled():
        print("\n" + verdict(number, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [timed(limit, check) for _, _, limit, check in CRITERIA]
    for (number, title, _, _), (ok, detail) in zip(CRITERIA, results):
        print(verdict(number, title, ok, detail))
    raise SystemExit(0 if all(ok for ok, _ in results) else 1)
