"""Named verification suites.

Each suite re-derives a block of the library's frozen expectations from
scratch — scans, witness constructions, oracle comparisons — and reports one
:class:`Check` per claim.  Suites are versioned as a set: bump
:data:`SUITE_VERSION` whenever a suite's checks change meaning.

Use :func:`run_suite` with a name from :func:`suite_names`, or ``"all"`` for
every suite in order.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import oracle
from .errors import InvariantViolationError
from .factorize import (
    atoms_dividing,
    catenary,
    davenport,
    factorization_count,
    factorizations,
    is_atom,
    length_set,
    minimal_relations,
)
from .group import GroupSpec
from .invariants import (
    ca_scan,
    daleth_star,
    davenport_star,
    delta_scan,
    elasticity,
    elasticity_scan,
    find_elasticity_witness,
    r_scan,
    rho_group,
    split_weighted_sum,
    zero_sum_sequences,
)
from .sequence import block_alphabet, krull_alphabet
from .tame import _check_tame_bound, ta_scan, tame
from .witnesses import (
    integer_catenary_witnesses,
    plus_minus_alphabet,
    plus_minus_factorizations,
    rank3_tame_two_witness,
    reflection_tame_witness,
    tame_two_case_witness,
    two_group_tame_family,
    two_primes_witness,
    verify_witness,
)

__all__ = ["Check", "SUITE_VERSION", "suite_names", "suite_description", "run_suite"]

SUITE_VERSION = "1"


@dataclass(frozen=True)
class Check:
    label: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        mark = "ok  " if self.ok else "FAIL"
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{mark}  {self.label}{tail}"


def _eq(label: str, got, want) -> Check:
    return Check(label, got == want,
                 "" if got == want else f"got {got!r}, want {want!r}")


def _true(label: str, ok: bool, detail: str = "") -> Check:
    return Check(label, ok, "" if ok else detail)


def _cyclic(n: int) -> GroupSpec:
    return GroupSpec(0, (n,))


def _two_rank(r: int) -> GroupSpec:
    return GroupSpec(0, (2,) * r)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def _suite_davenport() -> Iterator[Check]:
    for n in range(2, 8):
        spec = _cyclic(n)
        d = davenport(block_alphabet(spec))
        yield _eq(f"longest atom over C{n} is {n}", d, n)
        yield _eq(f"C{n}: longest atom matches the torsion bound",
                  d, davenport_star(spec))
    for r in range(1, 5):
        spec = _two_rank(r)
        d = davenport(block_alphabet(spec))
        yield _eq(f"longest atom over C2^{r} is {r + 1}", d, r + 1)
        yield _eq(f"C2^{r}: longest atom matches the torsion bound",
                  d, davenport_star(spec))
    spec = GroupSpec(0, (3, 3))
    d = davenport(block_alphabet(spec))
    yield _eq("longest atom over C3^2 is 5", d, 5)
    yield _eq("C3^2: longest atom matches the torsion bound", d, davenport_star(spec))


def _suite_delta_sets() -> Iterator[Check]:
    for torsion, want_delta, want_daleth in [
        ((3,), {1}, {3}),
        ((2, 2), {1}, {3}),
        ((2,), set(), set()),
    ]:
        name = "C" + "x".join(map(str, torsion)) if torsion != (2, 2) else "C2^2"
        alpha = block_alphabet(GroupSpec(0, torsion))
        delta = delta_scan(alpha, 9)
        yield _eq(f"gap set of {name} at bound 9", set(delta.values), want_delta)
        yield _true(f"gap scan of {name} is complete", delta.complete)
        daleth = daleth_star(alpha)
        yield _eq(f"pair length-gap set of {name}", set(daleth.values), want_daleth)


def _suite_catenary_sets() -> Iterator[Check]:
    runs = [
        ("C3", _cyclic(3), 9, {3}),
        ("C4", _cyclic(4), 10, {2, 3, 4}),
        ("C2^3", _two_rank(3), 12, {2, 3, 4}),
    ]
    for name, spec, bound, want in runs:
        alpha = block_alphabet(spec)
        ca = ca_scan(alpha, bound)
        yield _eq(f"catenary set of {name} at bound {bound}", set(ca.values), want)
        rel = r_scan(alpha, bound)
        yield _true(f"{name}: catenary values sit inside the relation values",
                    set(ca.values) <= set(rel.values),
                    f"Ca={sorted(ca.values)} R={sorted(rel.values)}")
        yield _eq(f"{name}: largest catenary value equals largest relation value",
                  max(ca.values), max(rel.values))
    yield _eq("C4: largest catenary value equals the longest atom length",
              max(ca_scan(block_alphabet(_cyclic(4)), 10).values),
              davenport(block_alphabet(_cyclic(4))))


def _suite_catenary_krull() -> Iterator[Check]:
    g2 = _cyclic(2).element([1])
    doubled_two = krull_alphabet([g2], 2)
    yield _eq("two letters in one class of order two: catenary set {2} at bound 10",
              set(ca_scan(doubled_two, 10).values), {2})
    spec3 = _cyclic(3)
    g3 = spec3.element([1])
    doubled_three = krull_alphabet(spec3, {g3: 2})
    yield _eq("C3 with one class doubled: catenary set {2,3} at bound 10",
              set(ca_scan(doubled_three, 10).values), {2, 3})
    yield _eq("C3 with plain letters: catenary set {3} at bound 10",
              set(ca_scan(block_alphabet(spec3), 10).values), {3})


def _suite_catenary_integers() -> Iterator[Check]:
    for n in range(2, 7):
        chain, _ = integer_catenary_witnesses(n)
        report = verify_witness(chain)
        yield _true(f"integer chain element at n={n} has catenary degree {n + 1}",
                    report.ok, report.summary())
    _, window = integer_catenary_witnesses(2)
    report = verify_witness(window)
    yield _true("fixed eight-letter integer element has catenary degree 2",
                report.ok, report.summary())
    yield _eq("the eight-letter element has exactly three factorizations",
              factorization_count(window.element), 3)


def _suite_tame_sets() -> Iterator[Check]:
    ta22 = ta_scan(block_alphabet(_two_rank(2)), 12)
    yield _eq("tame set of C2^2 at bound 12", set(ta22.values), {3})
    yield _true("tame scan of C2^2 is complete", ta22.complete)
    ta23 = ta_scan(block_alphabet(_two_rank(3)), 12)
    yield _eq("tame set of C2^3 at bound 12", set(ta23.values), {2, 3, 4})
    for spec, name, top in ((_cyclic(5), "C5", 5), (_two_rank(3), "C2^3", 4)):
        for m in range(3, top + 1):
            report = verify_witness(reflection_tame_witness(spec, m))
            yield _true(f"reflection atom pair over {name} at length {m} "
                        f"is tame degree {m}", report.ok, report.summary())
    for nu in range(1, 5):
        w = two_group_tame_family("even", 4, nu)
        report = verify_witness(w)
        yield _true(f"even two-group member r=4 nu={nu} is tame degree "
                    f"{w.predicted}", report.ok, report.summary())
    yield _eq("even two-group members r=4 nu=1..4 predict 9,8,7,6",
              tuple(two_group_tame_family("even", 4, nu).predicted
                    for nu in range(1, 5)), (9, 8, 7, 6))
    yield _eq("even two-group member r=4 nu=1 attains 1 + r^2/2",
              two_group_tame_family("even", 4, 1).predicted, 1 + 16 // 2)


def _suite_plus_minus() -> Iterator[Check]:
    for d in range(2, 7):
        alpha, want = plus_minus_alphabet(d)
        report = ta_scan(alpha, 6 * d)
        yield _eq(f"tame set of the plus/minus alphabet at order {d}",
                  frozenset(report.values), want)
        bad = 0
        for s in range(0, 4 * d + 1):
            for t in range(s % d, 4 * d + 1, d):
                closed = plus_minus_factorizations(s, t, d)
                generic = factorizations(closed.element)
                left = sorted(tuple(sorted(a.exponents for a in closed.factorization(i)))
                              for i in range(len(closed)))
                right = sorted(tuple(sorted(a.exponents for a in generic.factorization(i)))
                               for i in range(len(generic)))
                if left != right:
                    bad += 1
        yield _true(f"closed-form factorizations match enumeration at order {d} "
                    f"(all s,t <= {4 * d})", bad == 0, f"{bad} mismatches")


def _suite_tame_two() -> Iterator[Check]:
    for case, label in (("c6", "cyclic order-six"), ("c3c3", "two order-three"),
                        ("z", "integer")):
        report = verify_witness(tame_two_case_witness(case))
        yield _true(f"{label} two-atom product is tame degree 2",
                    report.ok, report.summary())
    report = verify_witness(rank3_tame_two_witness())
    yield _true("rank-three two-atom product is tame degree 2",
                report.ok, report.summary())
    for n in range(2, 6):
        report = verify_witness(two_primes_witness(n))
        yield _true(f"two letters in one order-{n} class give tame degree 2",
                    report.ok, report.summary())


_ELASTICITY_TARGETS = sorted({
    Fraction(a, b)
    for b in range(1, 5)
    for a in range(b, 3 * b + 1)
    if Fraction(1) <= Fraction(a, b) <= Fraction(5, 2)
})


def _suite_elasticity() -> Iterator[Check]:
    spec = _cyclic(5)
    yield _eq("group elasticity of C5 is 5/2", rho_group(spec), Fraction(5, 2))
    alpha = block_alphabet(spec)
    for q in _ELASTICITY_TARGETS:
        w = find_elasticity_witness(alpha, q, 40)
        if w is None:
            yield Check(f"elasticity witness for {q} within length 40", False,
                        "no witness found")
            continue
        yield _eq(f"elasticity witness for {q} within length 40 is exact",
                  elasticity(w), q)


def _suite_weighted_split() -> Iterator[Check]:
    rng = random.Random(20260814)
    built = checked = 0
    failures: list[str] = []
    while checked < 200:
        n = rng.randint(1, 3)
        weights = tuple(sorted(rng.sample(range(1, 13), n)))
        product = 1
        for a in weights:
            product *= a
        if product > 120:
            continue
        columns = rng.randint(1, 3)
        amounts = [0] * n
        for _ in range(columns):
            rest = product
            col = []
            while True:
                rest = product
                col = []
                for a in weights[:-1]:
                    c = rng.randint(0, rest // a)
                    col.append(c)
                    rest -= c * a
                if rest % weights[-1] == 0:
                    col.append(rest // weights[-1])
                    break
            for i, c in enumerate(col):
                amounts[i] += c
        checked += 1
        try:
            got = split_weighted_sum(weights, tuple(amounts), columns)
        except Exception as exc:  # pragma: no cover - reported as a failure
            failures.append(f"{weights}/{amounts}/{columns}: {exc}")
            continue
        ok = (len(got) == columns
              and all(c >= 0 for col in got for c in col)
              and all(sum(a * c for a, c in zip(weights, col)) == product
                      for col in got)
              and tuple(sum(col[i] for col in got) for i in range(n))
              == tuple(amounts))
        if not ok:
            failures.append(f"{weights}/{amounts}/{columns}: constraint violated")
            continue
        if oracle.naive_split_weighted_sum(weights, tuple(amounts), columns) is None:
            failures.append(f"{weights}/{amounts}/{columns}: oracle disagrees")
            continue
        built += 1
    yield _true("200 random weighted-split instances all decompose and "
                "agree with the exhaustive search", built == 200,
                "; ".join(failures[:3]))


def _census_agrees(spec: GroupSpec, max_len: int) -> tuple[int, list[str]]:
    alpha = block_alphabet(spec)
    checked = 0
    problems: list[str] = []
    for b in zero_sum_sequences(alpha, max_len):
        checked += 1
        text = b.render()
        if oracle.naive_is_atom(b) != is_atom(b):
            problems.append(f"{text}: atom test")
            continue
        fs = factorizations(b)
        fast = sorted(tuple(sorted(a.exponents for a in fs.factorization(i)))
                      for i in range(len(fs)))
        naive = sorted(tuple(sorted(z)) for z in oracle.naive_factorizations(b))
        if fast != naive:
            problems.append(f"{text}: factorization sets")
            continue
        if length_set(b) != oracle.naive_length_set(b):
            problems.append(f"{text}: length sets")
            continue
        if catenary(b) != oracle.naive_catenary(b):
            problems.append(f"{text}: catenary degree")
            continue
        if set(minimal_relations(b)) != set(oracle.naive_minimal_relations(b)):
            problems.append(f"{text}: minimal relations")
            continue
        for u in atoms_dividing(b):
            if tame(b, u) != oracle.naive_tame(b, u):
                problems.append(f"{text}: tame degree at {u.render()}")
                break
    return checked, problems


def _suite_census() -> Iterator[Check]:
    for spec, name in ((_cyclic(3), "C3"), (_two_rank(2), "C2^2")):
        checked, problems = _census_agrees(spec, 8)
        yield _true(f"fast and naive agree on all {checked} zero-sum elements "
                    f"of {name} up to length 8", not problems,
                    "; ".join(problems[:3]))


def _suite_inclusions() -> Iterator[Check]:
    alpha = block_alphabet(_two_rank(3))
    d = davenport(alpha)
    delta = delta_scan(alpha, 12)
    daleth = daleth_star(alpha)
    shifted = {2 + g for g in delta.values}
    yield _true("pair length-gaps lie in 2 + gap set (C2^3, bound 12)",
                set(daleth.values) <= shifted,
                f"daleth={sorted(daleth.values)} 2+delta={sorted(shifted)}")
    alpha4 = block_alphabet(_cyclic(4))
    ca = ca_scan(alpha4, 10)
    rel = r_scan(alpha4, 10)
    yield _true("catenary values lie inside relation values (C4, bound 10)",
                set(ca.values) <= set(rel.values))
    yield _eq("largest catenary value equals largest relation value (C4)",
              max(ca.values), max(rel.values))
    yield _true("catenary values never exceed the longest atom length (C4)",
                max(ca.values) <= davenport(alpha4))
    ta = ta_scan(block_alphabet(_two_rank(2)), 12)
    d22 = davenport(block_alphabet(_two_rank(2)))
    cap = 1 + d22 * (d22 - 1) // 2
    yield _true("tame values respect the distance cap (C2^2, bound 12)",
                all(t <= cap for t in ta.values),
                f"values={sorted(ta.values)} cap={cap}")
    rho = elasticity_scan(block_alphabet(_cyclic(3)), 8)
    yield _true("element elasticities never exceed half the longest atom (C3)",
                max(rho.values) <= Fraction(max(davenport(block_alphabet(_cyclic(3))), 2), 2))
    try:
        _check_tame_bound(100, 2, d, "verify-suite")
        yield Check("the tame-degree post-check rejects impossible values", False,
                    "no error raised")
    except InvariantViolationError:
        yield Check("the tame-degree post-check rejects impossible values", True)


_SUITES: dict[str, tuple[str, Callable[[], Iterator[Check]]]] = {
    "davenport": ("longest-atom lengths against the torsion bound",
                  _suite_davenport),
    "delta-sets": ("length-gap sets and pair length-gap sets on small groups",
                   _suite_delta_sets),
    "catenary-sets": ("catenary-degree sets and relation sets on small groups",
                      _suite_catenary_sets),
    "catenary-krull": ("catenary sets over alphabets with repeated classes",
                       _suite_catenary_krull),
    "catenary-integers": ("catenary witnesses over the infinite cyclic group",
                          _suite_catenary_integers),
    "tame-sets": ("tame-degree sets, reflection witnesses and the two-group family",
                  _suite_tame_sets),
    "plus-minus": ("the generator/negation alphabet: tame sets and closed-form "
                   "factorizations", _suite_plus_minus),
    "tame-two": ("fixed constructions of tame degree exactly two",
                 _suite_tame_two),
    "elasticity": ("group elasticity and exact witness search over C5",
                   _suite_elasticity),
    "weighted-split": ("random weighted-sum split instances against the "
                       "exhaustive search", _suite_weighted_split),
    "census": ("fast engine against the brute-force oracle on every small "
               "element", _suite_census),
    "inclusions": ("structural inclusions between scanned invariant sets",
                   _suite_inclusions),
}


def suite_names() -> list[str]:
    """All runnable suite names, in execution order (excluding ``"all"``)."""
    return list(_SUITES)


def suite_description(name: str) -> str:
    return _SUITES[name][0]


def run_suite(name: str) -> list[Check]:
    """Run one suite (or ``"all"``) and return its checks in order."""
    if name == "all":
        out: list[Check] = []
        for key in _SUITES:
            out.extend(_SUITES[key][1]())
        return out
    if name not in _SUITES:
        raise KeyError(f"unknown suite {name!r}; "
                       f"choose from {', '.join([*_SUITES, 'all'])}")
    return list(_SUITES[name][1]())
