import pytest
from hypothesis import given
from hypothesis import strategies as st

from thompsonv.demonstrative import (
    DemonstrationReport,
    ball_words,
    check_demonstration_node,
    nontrivial_cyclic,
    ping_pong_check,
)
from thompsonv.modular import GroupWord, evaluate, element_a, element_b, element_gz, enumerate_normal_forms, normal_form_count, psi_map
from thompsonv.prm import identity, image_of_cone, invert


def test_psi_is_demonstrative_at_0():
    report = check_demonstration_node(psi_map(), "0", enumerate_normal_forms(5))
    assert report.ok
    assert report.checked == 33


def test_psi_full_desk_range():
    report = check_demonstration_node(psi_map(), "0", enumerate_normal_forms(12))
    assert report.ok and report.max_len == 12


def test_z_is_demonstrative_at_0():
    words = [GroupWord.parse(" ".join(["g"] * k)) for k in range(1, 9)]
    assert check_demonstration_node({"g": element_gz()}, "0", words).ok


def test_identity_generator_is_a_violation():
    report = check_demonstration_node({"g": identity()}, "0", [GroupWord.parse("g")])
    assert not report.ok
    assert report.violations == ((GroupWord.parse("g"), "0"),)


@pytest.mark.parametrize("node", ["00", "01", "000", "0110"])
def test_extensions_of_a_demonstration_node_also_work(node):
    words = enumerate_normal_forms(5)
    assert check_demonstration_node(psi_map(), "0", words).ok
    assert check_demonstration_node(psi_map(), node, words).ok


def test_bad_node_is_reported_with_witness():
    report = check_demonstration_node(psi_map(), "1", enumerate_normal_forms(3))
    assert not report.ok
    w, label = report.violations[0]
    assert any(l == label for l in image_of_cone(evaluate(w, psi_map()), "1"))
    keys = [(len(w), str(w)) for w, _ in report.violations]
    assert keys == sorted(keys)


def test_report_serialization_round_trip():
    report = check_demonstration_node(psi_map(), "1", enumerate_normal_forms(2))
    text = report.serialize()
    assert text.startswith("node=1 max_len=2 checked=7\n")
    assert DemonstrationReport.parse(text) == report


def test_ball_words_matches_normal_forms_for_psi():
    words = ball_words(psi_map(), 6)
    assert len(words) == sum(normal_form_count(k) for k in range(1, 7))


def test_ball_words_keeps_trivial_generators():
    assert ball_words({"g": identity()}, 3) == [GroupWord.parse("g")]


def test_ping_pong_for_psi():
    a, b = element_a(), element_b()
    result = ping_pong_check([b, invert(b)], [a], "10", "111")
    assert result.ok and result.failures == ()


def test_ping_pong_condition_one_fails_on_equal_sets():
    a, b = element_a(), element_b()
    result = ping_pong_check([b, invert(b)], [a], "10", "10")
    assert not result.not_contained
    assert not result


def test_ping_pong_swapped_roles_fail():
    a, b = element_a(), element_b()
    # [111]a splits into [110], [10], [0]: none lies inside [10]... except [10] itself
    assert image_of_cone(a, "111") == {"110", "10", "0"}
    result = ping_pong_check([a], [b, invert(b)], "10", "111")
    assert not result.h1_into_x1


def test_nontrivial_cyclic():
    assert nontrivial_cyclic(element_a(), 2) == [element_a()]
    assert nontrivial_cyclic(element_b(), 3) == [element_b(), invert(element_b())]


@given(st.sampled_from([[], ["b"], ["bi"], ["b", "bi"]]), st.sampled_from([[], ["a"]]))
def test_ping_pong_monotone_in_subsets(h1_names, h2_names):
    a, b = element_a(), element_b()
    pool = {"a": a, "b": b, "bi": invert(b)}
    full = ping_pong_check([b, invert(b)], [a], "10", "111")
    sub = ping_pong_check([pool[n] for n in h1_names], [pool[n] for n in h2_names], "10", "111")
    assert full.ok and sub.ok
