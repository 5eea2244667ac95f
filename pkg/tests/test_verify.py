"""Registry mechanics of the verification suites.

The suites' contents are exercised one by one in the acceptance gate; here
we pin the registry shape and the report plumbing.
"""
import pytest

from arithinv import verify
from arithinv.verify import Check, run_suite, suite_description, suite_names


EXPECTED_ORDER = [
    "davenport", "delta-sets", "catenary-sets", "catenary-krull",
    "catenary-integers", "tame-sets", "plus-minus", "tame-two",
    "elasticity", "weighted-split", "census", "inclusions",
]


def test_registry_lists_all_suites_in_order():
    assert suite_names() == EXPECTED_ORDER


def test_every_suite_has_a_description():
    for name in suite_names():
        assert suite_description(name)


def test_unknown_suite_raises_with_the_catalog():
    with pytest.raises(KeyError, match="catenary-sets"):
        run_suite("no-such-suite")


def test_all_concatenates_in_registry_order(monkeypatch):
    fake = {
        "first": ("", lambda: iter([Check("a", True)])),
        "second": ("", lambda: iter([Check("b", False, "boom")])),
    }
    monkeypatch.setattr(verify, "_SUITES", fake)
    checks = run_suite("all")
    assert [c.label for c in checks] == ["a", "b"]


def test_check_lines_show_status_and_detail():
    assert Check("fine", True).line() == "ok    fine"
    line = Check("broken", False, "got 1, want 2").line()
    assert line.startswith("FAIL")
    assert "got 1, want 2" in line


def test_one_real_suite_end_to_end():
    checks = run_suite("catenary-krull")
    assert checks and all(c.ok for c in checks)
