"""Acceptance gate: every shipped claim, one criterion per test.

Each test runs one named verification suite end to end, prints a single
``[PASS]``/``[FAIL]`` line (with wall time), and fails if any check inside
the suite fails or the stated time budget is exceeded.
"""
import time

from arithinv.verify import run_suite


def _run(capsys, criterion: int, suite: str, budget: float | None,
         headline: str) -> None:
    start = time.perf_counter()
    checks = run_suite(suite)
    elapsed = time.perf_counter() - start
    bad = [c for c in checks if not c.ok]
    over = budget is not None and elapsed > budget
    status = "PASS" if not bad and not over else "FAIL"
    with capsys.disabled():
        print(f"\n[{status}] criterion {criterion}: {headline} "
              f"({len(checks)} checks, {elapsed:.1f}s)", end="", flush=True)
        for c in bad:
            print(f"\n        {c.line()}", end="", flush=True)
    assert not bad, f"{len(bad)} of {len(checks)} checks failed in suite {suite!r}"
    if budget is not None:
        assert elapsed <= budget, f"suite {suite!r} took {elapsed:.1f}s > {budget}s"


def test_criterion_01_longest_atom_lengths(capsys):
    _run(capsys, 1, "davenport", 30,
         "longest atoms over small groups match the torsion bound")


def test_criterion_02_length_gap_sets(capsys):
    _run(capsys, 2, "delta-sets", 10,
         "length-gap and pair length-gap sets on C3, C2^2, C2")


def test_criterion_03_catenary_sets(capsys):
    _run(capsys, 3, "catenary-sets", 300,
         "catenary sets on C3, C4, C2^3 sit inside relation sets")


def test_criterion_04_catenary_with_repeated_classes(capsys):
    _run(capsys, 4, "catenary-krull", 120,
         "catenary sets over alphabets with doubled classes")


def test_criterion_05_integer_catenary_witnesses(capsys):
    _run(capsys, 5, "catenary-integers", 5,
         "integer chain family and the three-route element")


def test_criterion_06_tame_sets_and_family(capsys):
    _run(capsys, 6, "tame-sets", 600,
         "tame sets, reflection witnesses, even two-group family")


def test_criterion_07_plus_minus_alphabet(capsys):
    _run(capsys, 7, "plus-minus", 60,
         "generator/negation alphabet: tame sets and closed forms")


def test_criterion_08_tame_degree_two_constructions(capsys):
    _run(capsys, 8, "tame-two", 10,
         "fixed constructions of tame degree exactly two")


def test_criterion_09_elasticity_witnesses(capsys):
    _run(capsys, 9, "elasticity", 600,
         "group elasticity of C5 and exact witnesses for 10 targets")


def test_criterion_10_weighted_split(capsys):
    _run(capsys, 10, "weighted-split", 60,
         "random weighted-split instances all decompose")


def test_criterion_11_oracle_census(capsys):
    _run(capsys, 11, "census", 300,
         "fast engine agrees with the brute-force oracle everywhere")


def test_criterion_12_structural_inclusions(capsys):
    _run(capsys, 12, "inclusions", None,
         "scanned sets respect the structural inclusions")
