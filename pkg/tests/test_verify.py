import json

import pytest

from revpat.matcher import find_instance
from revpat.sequences import F2, F4, apply_binary_morphism, thue_morse_prefix
from revpat.verify import (
    CHECKS,
    UPSILON,
    bound_factor_length,
    internal_factors,
    mod3_step_violation,
    run_checks,
    vf_pigeonhole,
    vf_square_limited,
    vf_w3,
    vf_w3_contexts_repaired,
)


def test_upsilon_table_shape():
    assert len(UPSILON) == 22
    assert {len(u) for u in UPSILON} == {1, 2, 3, 4, 5, 6}
    assert "100001" in UPSILON and "0110" in UPSILON


def test_bound_factor_length_anchors():
    assert bound_factor_length(7, 11) == 6
    assert bound_factor_length(7, 11) < 7
    assert bound_factor_length(30, 11) == 10
    assert bound_factor_length(0, 1) == 0
    with pytest.raises(ValueError):
        bound_factor_length(-1, 1)


def test_registry_covers_the_finite_searches():
    expected = {
        "square-limited", "g-avoidance", "square-limited-xyxyX",
        "w1", "w2", "w3", "w3-contexts-repaired", "w4",
        "pigeonhole", "alternating", "classifier-oracle", "classical-seeds",
        "image-locality-f1", "image-locality-f2", "image-locality-f3",
        "image-locality-f4", "tm-prefix-covering", "tm-desubstitution",
    }
    assert set(CHECKS) == expected


def test_run_checks_validation():
    with pytest.raises(ValueError, match="unknown check"):
        run_checks(only="nope")
    with pytest.raises(ValueError, match="does not accept"):
        run_checks(only="pigeonhole", params={"bogus": 1})


def test_reports_are_deterministic_and_json_clean():
    first = vf_pigeonhole(2).as_dict()
    second = vf_pigeonhole(2).as_dict()
    first.pop("elapsed")
    second.pop("elapsed")
    assert first == second
    json.dumps(second)


def test_square_limited_check_passes_and_negative_controls():
    assert vf_square_limited(300).passed
    injected = vf_square_limited(word="00110011")
    assert not injected.passed
    assert injected.counterexample == {"square": "00110011"}
    small = vf_square_limited(word="0101")
    assert not small.passed
    assert small.counterexample == {"missing_squares": ["00", "11"]}


def test_mod3_and_w2_negative_controls():
    assert mod3_step_violation("0012") is None
    assert mod3_step_violation("021") == "21"
    # a hand-built instance of xyXYx is found by the matcher
    from revpat.matcher import apply_morphism
    w = apply_morphism("xyXYx", x="01", y="0")
    assert w == "01010001"
    assert find_instance(w, "xyXYx") is not None


def test_square_limited_xyxyX_negative_control():
    assert find_instance("01010", "xyxyX") is not None


def test_quick_checks_pass():
    for cid, params in [
        ("g-avoidance", {"n": 100}),
        ("square-limited-xyxyX", {"n": 100}),
        ("w1", {}),
        ("w2", {}),
        ("w4", {}),
        ("pigeonhole", {"k": 1}),
        ("pigeonhole", {"k": 2}),
        ("alternating", {"max_len": 3}),
        ("image-locality-f1", {}),
        ("image-locality-f3", {}),
        ("image-locality-f4", {}),
        ("tm-prefix-covering", {}),
    ]:
        report = run_checks(only=cid, params=params)[0]
        assert report.passed, (cid, report.counterexample)


def test_w2_image_length_anchor():
    tau = thue_morse_prefix(112)
    assert tau.count("1") == 56
    assert len(apply_binary_morphism(F2, tau)) == 504


def test_tm_112_prefix_is_the_fourth_image_of_t7():
    w = "0110100"
    from revpat.sequences import H
    for _ in range(4):
        w = apply_binary_morphism(H, w)
    assert w == thue_morse_prefix(112)
    assert len(apply_binary_morphism(F4, w)) == 616


def test_internal_factors_of_the_w4_block():
    assert internal_factors("1000010011", 6) == {
        "000010", "000100", "001001", "0000100", "0001001", "00001001"
    }


def test_w3_pins_the_degenerate_context_clause():
    report = vf_w3()
    assert not report.passed
    clauses = report.searched_bound["clause_results"]
    assert clauses == {"reversible": True, "contexts": False,
                       "instances": True, "length-9": True, "completions": True}
    violations = report.counterexample["details"]["contexts"]
    # exactly the palindromic table entries degenerate
    assert set(violations) == {y for y in UPSILON - {"0", "1", "00"} if y == y[::-1]}
    # the recorded factors replay: both context sets are genuinely inhabited
    w = apply_binary_morphism(
        __import__("revpat.sequences", fromlist=["F3"]).F3, thue_morse_prefix(112))
    sets = violations["000"]
    for chi in sets["left"]:
        assert chi + "000" in w
    for chi in sets["right"]:
        assert "000" + chi in w


def test_w3_repaired_contexts_pass():
    assert vf_w3_contexts_repaired().passed


def test_classical_seeds_check():
    report = run_checks(only="classical-seeds",
                        params={"witness_len": 120, "matcher_prefix": 250,
                                "overlap_prefix": 800})[0]
    assert report.passed, report.counterexample
