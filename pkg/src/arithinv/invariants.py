"""Length-set invariants and bounded scans over zero-sum monoids.

The scan functions sweep all zero-sum sequences up to a length bound and
aggregate an invariant across them, returning a :class:`ScanReport` that
records the observed values, a witness element for each value, whether the
observed set is provably the complete one, and consistency annotations.
Exact (non-scan) quantities — elasticities, the largest atom length and its
structural counterpart, minimal gaps of products of two atoms — are computed
directly.

All rational arithmetic uses :class:`fractions.Fraction`; nothing here goes
through floating point.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence as Seq

from .errors import (
    InvalidInstanceError,
    InvalidSpecError,
    InvalidTargetError,
    InvariantViolationError,
    NotEnumerableError,
    NotZeroSumError,
)
from .factorize import (
    DEFAULT_MAX_FACTORIZATIONS,
    _engine,
    davenport,
    enumerate_atoms,
    factorization_count,
    length_set,
    min_max_lengths,
    minimal_relations,
)
from .group import INFINITE, GroupSpec, format_group_spec
from .sequence import Alphabet, Sequence


# ---------------------------------------------------------------------------
# simple exact quantities
# ---------------------------------------------------------------------------

def delta_of(lengths: Iterable[int]) -> frozenset[int]:
    """Successive gaps of a set of lengths.

    >>> sorted(delta_of({2, 3, 5, 9}))
    [1, 2, 4]
    """
    ordered = sorted(set(lengths))
    return frozenset(b - a for a, b in zip(ordered, ordered[1:]))


def elasticity_of(lengths: Iterable[int]) -> Fraction:
    """Ratio of the largest to the smallest length (1 for {0} and singletons)."""
    values = sorted(set(lengths))
    if not values:
        raise InvalidInstanceError("elasticity of an empty length set")
    if values[0] == 0:
        if len(values) > 1:
            raise InvalidInstanceError("length 0 only occurs alone")
        return Fraction(1)
    return Fraction(values[-1], values[0])


def elasticity(b: Sequence) -> Fraction:
    """Elasticity of one element: longest over shortest factorization length."""
    lo, hi = min_max_lengths(b)
    return Fraction(1) if lo == 0 else Fraction(hi, lo)


def davenport_star(spec: GroupSpec) -> int:
    """1 plus the sum of (order - 1) over the invariant factors.

    A lower bound for the largest atom length over the full group, with
    equality for p-groups and for groups with at most two invariant factors.
    """
    if not spec.is_finite():
        raise NotEnumerableError(
            f"{format_group_spec(spec)} is infinite; the bound needs a finite group")
    return 1 + sum(n - 1 for n in spec.torsion)


def rho_group(spec: GroupSpec) -> Fraction:
    """Largest elasticity over the full block alphabet of a finite group."""
    if not spec.is_finite():
        raise NotEnumerableError(
            f"{format_group_spec(spec)} is infinite; elasticity is unbounded")
    if spec.size() == 1:
        return Fraction(1)
    from .sequence import block_alphabet
    return Fraction(davenport(block_alphabet(spec)), 2)


# ---------------------------------------------------------------------------
# bounded enumeration of zero-sum sequences
# ---------------------------------------------------------------------------

def zero_sum_sequences(alphabet: Alphabet, max_length: int,
                       support: tuple[str, ...] | None = None) -> Iterator[Sequence]:
    """All zero-sum sequences of length <= ``max_length``.

    Yields in ascending length, then lexicographic exponent order.  When the
    alphabet contains classes of infinite order, a ``support`` restriction
    (a tuple of letter labels) must be given explicitly, acknowledging that
    the sweep only covers those letters.
    """
    if support is None:
        if any(g.order() == INFINITE for g in alphabet.classes):
            raise NotEnumerableError(
                "alphabet has classes of infinite order; pass an explicit "
                "support restriction to scan over them")
        idxs = list(range(len(alphabet)))
    else:
        idxs = sorted({alphabet.index(label) for label in support})
    classes = [alphabet.classes[i] for i in idxs]
    zero = alphabet.spec.zero()
    width = len(alphabet)

    def compositions(length: int) -> Iterator[tuple[int, ...]]:
        vec = [0] * width

        def rec(pos: int, remaining: int, total) -> Iterator[tuple[int, ...]]:
            if pos == len(idxs) - 1:
                vec[idxs[pos]] = remaining
                if (total + remaining * classes[pos]) == zero:
                    yield tuple(vec)
                vec[idxs[pos]] = 0
                return
            for e in range(remaining + 1):
                vec[idxs[pos]] = e
                yield from rec(pos + 1, remaining - e, total + e * classes[pos])
                vec[idxs[pos]] = 0

        if not idxs:
            if length == 0:
                yield tuple(vec)
            return
        yield from rec(0, length, zero)

    for length in range(max_length + 1):
        for exponents in compositions(length):
            yield Sequence(alphabet, exponents)


# ---------------------------------------------------------------------------
# scan bounds and reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanBound:
    """How far a scan sweeps.

    ``max_element_length`` caps the length of scanned elements;
    ``max_factorization_count``, when set, makes scans skip (and count)
    elements with more factorizations; ``support`` restricts scanned
    elements to the given letters.
    """

    max_element_length: int
    max_factorization_count: int | None = None
    support: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.max_element_length, int) or self.max_element_length < 0:
            raise InvalidSpecError("max_element_length must be a non-negative int")
        if self.support is not None:
            object.__setattr__(self, "support", tuple(self.support))


def _coerce_bound(bound: ScanBound | int) -> ScanBound:
    return bound if isinstance(bound, ScanBound) else ScanBound(int(bound))


@dataclass(frozen=True)
class ScanReport:
    """Outcome of one invariant scan."""

    invariant: str
    group: str
    alphabet_hash: str
    bound: ScanBound
    values: tuple
    witnesses: Mapping
    complete: bool
    annotations: Mapping = field(default_factory=dict)

    def to_json(self) -> dict:
        annotations = dict(self.annotations)
        if self.bound.max_factorization_count is not None:
            annotations["max_factorization_count"] = self.bound.max_factorization_count
        if self.bound.support is not None:
            annotations["support"] = list(self.bound.support)
        return {
            "schema": 1,
            "invariant": self.invariant,
            "group": self.group,
            "alphabet": self.alphabet_hash,
            "bound": self.bound.max_element_length,
            "values": [str(v) if isinstance(v, Fraction) else v for v in self.values],
            "witnesses": {
                str(v): dict(w.to_json(), text=w.render())
                for v, w in self.witnesses.items()
            },
            "complete": self.complete,
            "annotations": annotations,
        }

    def summary(self) -> str:
        values = ", ".join(str(v) for v in self.values) or "(none)"
        state = "complete" if self.complete else "observed"
        return (f"{self.invariant}[{self.group}] <= {self.bound.max_element_length}: "
                f"{{{values}}} ({state})")


def _scan_elements(alphabet: Alphabet, bound: ScanBound) -> list[Sequence]:
    return list(zero_sum_sequences(alphabet, bound.max_element_length, bound.support))


def _map_ordered(fn: Callable, items: list, jobs: int) -> list:
    """Apply ``fn`` over ``items`` preserving order, optionally in threads."""
    if jobs <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# ---------------------------------------------------------------------------
# structural facts about full block alphabets (used for completeness pins)
# ---------------------------------------------------------------------------

def _block_group(alphabet: Alphabet) -> GroupSpec | None:
    """The group when ``alphabet`` is the full one-letter-per-class alphabet."""
    spec = alphabet.spec
    if not spec.is_finite() or len(alphabet) != spec.size():
        return None
    if len(set(alphabet.classes)) != len(alphabet):
        return None
    return spec


def _is_cyclic(spec: GroupSpec) -> bool:
    return spec.free_rank == 0 and len(spec.torsion) <= 1


def _is_elementary_two(spec: GroupSpec) -> bool:
    return spec.free_rank == 0 and all(n == 2 for n in spec.torsion)


def _pinned_delta(alphabet: Alphabet) -> frozenset[int] | None:
    spec = _block_group(alphabet)
    if spec is None:
        return None
    if spec.size() <= 2:
        return frozenset()
    if _is_cyclic(spec) or _is_elementary_two(spec):
        d = davenport(alphabet)
        return frozenset({1}) if d == 3 else frozenset(range(1, d - 1))
    return None


def _pinned_relations(alphabet: Alphabet) -> frozenset[int] | None:
    spec = _block_group(alphabet)
    if spec is not None:
        if spec.size() <= 2:
            return frozenset()
        d = davenport(alphabet)
        if d == 3:
            return frozenset({3})
        if _is_cyclic(spec) or _is_elementary_two(spec):
            return frozenset(range(2, d + 1))
        return None
    # Alphabets with several letters in one class change the picture: a
    # doubled class supplies swaps of width two.
    spec = alphabet.spec
    classes = alphabet.classes
    class_counts: dict = {}
    for g in classes:
        class_counts[g] = class_counts.get(g, 0) + 1
    doubled = [g for g, c in class_counts.items() if c >= 2 and not g.is_zero()]
    if spec == GroupSpec(0, (2,)) and len(doubled) == 1 and set(class_counts) == {doubled[0]}:
        # all letters share the one order-2 class: every swap has width two
        return frozenset({2})
    if (spec == GroupSpec(0, (3,)) and doubled
            and {g for g in spec.elements() if not g.is_zero()} <= set(class_counts)):
        # full class coverage over a 3-element group plus a doubled class
        return frozenset({2, 3})
    return None


def _pinned_elasticities(alphabet: Alphabet) -> frozenset[Fraction] | None:
    try:
        d = davenport(alphabet)
    except NotEnumerableError:
        return None
    if d <= 2:
        return frozenset({Fraction(1)})
    return None


# ---------------------------------------------------------------------------
# gap-set scans
# ---------------------------------------------------------------------------

def delta_scan(alphabet: Alphabet, bound: ScanBound | int, jobs: int = 1) -> ScanReport:
    """Union of successive-gap sets of L(B) over all B up to the bound.

    Annotations record whether the observed minimum equals the gcd, and the
    outcome of the cross-check against the pair-product gap set (only
    enforced when the bound is at least twice the largest atom length, which
    is when that inclusion is guaranteed to be observable).
    """
    bound = _coerce_bound(bound)
    elements = _scan_elements(alphabet, bound)
    lengths = _map_ordered(length_set, elements, jobs)
    values: set[int] = set()
    witnesses: dict[int, Sequence] = {}
    for b, ls in zip(elements, lengths):
        for gap in delta_of(ls):
            values.add(gap)
            witnesses.setdefault(gap, b)
    ordered = tuple(sorted(values))
    annotations: dict = {}
    if ordered:
        annotations["min_equals_gcd"] = (ordered[0] == math.gcd(*ordered))
    annotations["pair_gap_check"] = _pair_gap_check(alphabet, bound, values)
    pinned = _pinned_delta(alphabet)
    complete = pinned is not None and values == pinned
    return ScanReport("delta", format_group_spec(alphabet.spec), alphabet.content_hash(),
                      bound, ordered, witnesses, complete, annotations)


def _pair_gap_check(alphabet: Alphabet, bound: ScanBound, delta_values: set[int]) -> str:
    try:
        d = davenport(alphabet)
    except NotEnumerableError:
        return "skipped (atoms not enumerable)"
    if bound.support is not None:
        return "skipped (restricted support)"
    if bound.max_element_length < 2 * d:
        return f"skipped (bound below twice the largest atom length {d})"
    pair_values = {v for v in daleth_star(alphabet).values}
    if not pair_values <= {2 + g for g in delta_values}:
        raise InvariantViolationError(
            f"pair-product gaps {sorted(pair_values)} escape 2 + observed gaps "
            f"{sorted(delta_values)}")
    return "ok"


def daleth_star(alphabet: Alphabet) -> ScanReport:
    """Smallest non-trivial length of products of two atoms, over all pairs.

    For each unordered pair of atoms (u, v) whose product has more than one
    factorization length, records min(L(uv) without 2).  This ranges over
    finitely many pairs, so the result is always complete.
    """
    atoms, dav = enumerate_atoms(alphabet)
    values: set[int] = set()
    witnesses: dict[int, Sequence] = {}
    for i, u in enumerate(atoms):
        for v in atoms[i:]:
            product = u * v
            ls = length_set(product)
            if len(ls) <= 1:
                continue
            smallest = min(ls - {2})
            values.add(smallest)
            witnesses.setdefault(smallest, product)
    return ScanReport("daleth-star", format_group_spec(alphabet.spec),
                      alphabet.content_hash(), ScanBound(2 * dav),
                      tuple(sorted(values)), witnesses, True,
                      {"atom_count": len(atoms)})


# ---------------------------------------------------------------------------
# catenary / relation scans
# ---------------------------------------------------------------------------

_RELATION_SCAN_CACHE: dict = {}


def _relation_scan(alphabet: Alphabet, bound: ScanBound, jobs: int):
    key = (alphabet, bound)
    hit = _RELATION_SCAN_CACHE.get(key)
    if hit is not None:
        return hit
    try:
        dav = davenport(alphabet)
    except NotEnumerableError:
        dav = None
    cap = bound.max_factorization_count
    elements = _scan_elements(alphabet, bound)

    def relations_of(b: Sequence):
        if cap is not None and factorization_count(b) > cap:
            return None
        return minimal_relations(
            b, max_factorizations=DEFAULT_MAX_FACTORIZATIONS if cap is None else cap)

    results = _map_ordered(relations_of, elements, jobs)
    ca_witnesses: dict[int, Sequence] = {}
    r_witnesses: dict[int, Sequence] = {}
    skipped = 0
    skipped_example: Sequence | None = None
    for b, rels in zip(elements, results):
        if rels is None:
            skipped += 1
            if skipped_example is None:
                skipped_example = b
            continue
        if not rels:
            continue
        c = max(rels)
        if dav is not None and c > dav:
            raise InvariantViolationError(
                f"catenary degree {c} of {b.render()} exceeds the largest "
                f"atom length {dav}")
        ca_witnesses.setdefault(c, b)
        for v in rels:
            r_witnesses.setdefault(v, b)
    if not set(ca_witnesses) <= set(r_witnesses):
        raise InvariantViolationError("catenary values escape the relation values")
    if ca_witnesses and max(ca_witnesses) != max(r_witnesses):
        raise InvariantViolationError(
            "largest catenary value differs from largest relation value")
    annotations: dict = {}
    if skipped:
        annotations["skipped_oversized"] = skipped
        annotations["skipped_example"] = skipped_example.render()
    result = (ca_witnesses, r_witnesses, annotations)
    _RELATION_SCAN_CACHE[key] = result
    return result


def ca_scan(alphabet: Alphabet, bound: ScanBound | int, jobs: int = 1) -> ScanReport:
    """Set of positive catenary degrees over all elements up to the bound."""
    bound = _coerce_bound(bound)
    ca_witnesses, _, annotations = _relation_scan(alphabet, bound, jobs)
    values = frozenset(ca_witnesses)
    pinned = _pinned_relations(alphabet)
    complete = pinned is not None and values == pinned
    return ScanReport("catenary-set", format_group_spec(alphabet.spec),
                      alphabet.content_hash(), bound, tuple(sorted(values)),
                      dict(sorted(ca_witnesses.items())), complete, annotations)


def r_scan(alphabet: Alphabet, bound: ScanBound | int, jobs: int = 1) -> ScanReport:
    """Set of minimal relation distances over all elements up to the bound."""
    bound = _coerce_bound(bound)
    _, r_witnesses, annotations = _relation_scan(alphabet, bound, jobs)
    values = frozenset(r_witnesses)
    pinned = _pinned_relations(alphabet)
    complete = pinned is not None and values == pinned
    return ScanReport("relation-set", format_group_spec(alphabet.spec),
                      alphabet.content_hash(), bound, tuple(sorted(values)),
                      dict(sorted(r_witnesses.items())), complete, annotations)


# ---------------------------------------------------------------------------
# elasticity scans and witness search
# ---------------------------------------------------------------------------

def elasticity_scan(alphabet: Alphabet, bound: ScanBound | int, jobs: int = 1) -> ScanReport:
    """Set of elasticities of L(B) over all B up to the bound."""
    bound = _coerce_bound(bound)
    elements = _scan_elements(alphabet, bound)
    ratios = _map_ordered(elasticity, elements, jobs)
    values: set[Fraction] = set()
    witnesses: dict[Fraction, Sequence] = {}
    limit = _elasticity_ceiling(alphabet)
    for b, q in zip(elements, ratios):
        if limit is not None and q > limit:
            raise InvariantViolationError(
                f"elasticity {q} of {b.render()} exceeds the ceiling {limit}")
        values.add(q)
        witnesses.setdefault(q, b)
    pinned = _pinned_elasticities(alphabet)
    complete = pinned is not None and values == pinned
    annotations: dict = {"value_format": "fraction"}
    if limit is not None:
        annotations["ceiling"] = str(limit)
    return ScanReport("elasticity-set", format_group_spec(alphabet.spec),
                      alphabet.content_hash(), bound, tuple(sorted(values)),
                      witnesses, complete, annotations)


def _elasticity_ceiling(alphabet: Alphabet) -> Fraction | None:
    try:
        d = davenport(alphabet)
    except NotEnumerableError:
        return None
    return Fraction(max(d, 2), 2)


def find_elasticity_witness(alphabet: Alphabet, target: Fraction | int | str,
                            bound: ScanBound | int) -> Sequence | None:
    """First zero-sum element (small supports first) with the given elasticity.

    Searches supports by size, then lexicographically, then by element
    length, and returns the first element whose elasticity equals ``target``
    exactly, or ``None`` when no element up to the bound reaches it.
    """
    target = Fraction(target)
    if target < 1:
        raise InvalidTargetError(f"elasticities are at least 1, got {target}")
    ceiling = _elasticity_ceiling(alphabet)
    if ceiling is not None and target > ceiling:
        return None
    bound = _coerce_bound(bound)
    max_length = bound.max_element_length
    if bound.support is None and any(g.order() == INFINITE for g in alphabet.classes):
        raise NotEnumerableError(
            "alphabet has classes of infinite order; pass a bound with an "
            "explicit support restriction")
    if target == 1:
        # The shortest nonempty zero-sum element is an atom, so its length
        # set is {1}; fall back to the empty element if none fits the bound.
        fallback = None
        for b in zero_sum_sequences(alphabet, max_length, bound.support):
            if b.is_empty():
                fallback = b
            else:
                return b
        return fallback
    indices = (list(range(len(alphabet))) if bound.support is None
               else sorted({alphabet.index(l) for l in bound.support}))
    classes = alphabet.classes
    zero = alphabet.spec.zero()
    width = len(alphabet)
    for size in range(1, len(indices) + 1):
        for combo in itertools.combinations(indices, size):
            for total in range(size, max_length + 1):
                for vec in _exact_support_vectors(combo, total, classes, zero, width):
                    b = Sequence(alphabet, vec)
                    lo, hi = min_max_lengths(b)
                    if lo and Fraction(hi, lo) == target:
                        return b
    return None


def _exact_support_vectors(combo: tuple[int, ...], total: int, classes, zero, width: int):
    """Zero-sum exponent vectors with support exactly ``combo`` and given length."""
    k = len(combo)

    def rec(pos: int, remaining: int, partial):
        if pos == k - 1:
            e = remaining
            if e >= 1 and (partial + e * classes[combo[pos]]) == zero:
                vec = [0] * width
                for i, idx in enumerate(combo[:-1]):
                    vec[idx] = acc[i]
                vec[combo[-1]] = e
                yield tuple(vec)
            return
        for e in range(1, remaining - (k - pos - 1) + 1):
            acc.append(e)
            yield from rec(pos + 1, remaining - e, partial + e * classes[combo[pos]])
            acc.pop()

    acc: list[int] = []
    if total < k:
        return
    yield from rec(0, total, zero)


# ---------------------------------------------------------------------------
# constructive weighted splitting
# ---------------------------------------------------------------------------

def split_weighted_sum(weights: Seq[int], amounts: Seq[int],
                       columns: int) -> tuple[tuple[int, ...], ...]:
    """Split ``amounts`` into ``columns`` parts of equal weighted size.

    Given positive weights ``a_1..a_n`` with product ``P`` and non-negative
    amounts with ``sum(a_i * x_i) == columns * P``, produces columns
    ``x^(1)..x^(columns)`` of non-negative integers with componentwise sum
    ``amounts`` and ``sum(a_i * x^(j)_i) == P`` for every column.

    A direct construction peels off one column at a time; each peeled column
    is verified, with a bounded exhaustive search as fallback, so the three
    output constraints always hold on return.
    """
    weights = tuple(int(a) for a in weights)
    amounts = tuple(int(x) for x in amounts)
    if not weights or len(weights) != len(amounts):
        raise InvalidInstanceError("weights and amounts must be non-empty and match")
    if any(a <= 0 for a in weights):
        raise InvalidInstanceError(f"weights must be positive, got {weights}")
    if any(x < 0 for x in amounts):
        raise InvalidInstanceError(f"amounts must be non-negative, got {amounts}")
    if not isinstance(columns, int) or columns < 1:
        raise InvalidInstanceError(f"column count must be a positive int, got {columns}")
    product = math.prod(weights)
    if sum(a * x for a, x in zip(weights, amounts)) != columns * product:
        raise InvalidInstanceError(
            f"weighted total {sum(a * x for a, x in zip(weights, amounts))} "
            f"is not {columns} times the weight product {product}")
    out: list[tuple[int, ...]] = []
    remaining = amounts
    for left in range(columns, 1, -1):
        column = _peel_column(weights, remaining, product)
        out.append(column)
        remaining = tuple(r - c for r, c in zip(remaining, column))
    out.append(remaining)
    for column in out:
        assert all(c >= 0 for c in column)
        assert sum(a * c for a, c in zip(weights, column)) == product
    return tuple(out)


def _peel_column(weights: tuple[int, ...], amounts: tuple[int, ...],
                 product: int) -> tuple[int, ...]:
    """One non-negative column <= amounts with weighted sum == product."""
    candidate = _construct_column(weights, amounts, product)
    if candidate is not None and _column_ok(weights, amounts, candidate, product):
        return candidate
    found = _search_column(weights, amounts, product)
    if found is None:
        raise InvalidInstanceError(
            f"amounts {amounts} admit no column of weighted size {product} "
            f"(weights {weights})")
    return found


def _column_ok(weights, amounts, column, product) -> bool:
    return (all(0 <= c <= x for c, x in zip(column, amounts))
            and sum(a * c for a, c in zip(weights, column)) == product)


def _construct_column(weights, amounts, product) -> tuple[int, ...] | None:
    """Direct single-column construction mirroring the inductive proof."""
    n = len(weights)
    if n == 1:
        return (product // weights[0],)
    if n == 2:
        a1, a2 = weights
        if amounts[0] >= a2:
            return (a2, 0)
        if amounts[1] >= a1:
            return (0, a1)
        return None
    # Put the heaviest contribution first, floor-divide the rest by its
    # weight, then trim until the leading coordinate can absorb the slack.
    order = sorted(range(n), key=lambda i: weights[i] * amounts[i], reverse=True)
    a1 = weights[order[0]]
    quota = product // a1
    y = [amounts[i] // a1 for i in order[1:]]
    rest_weights = [weights[i] for i in order[1:]]
    total = sum(w * v for w, v in zip(rest_weights, y))
    while total > quota:
        # shrink the largest term that still exceeds its share
        j = max(range(len(y)), key=lambda i: rest_weights[i] * y[i] if y[i] else -1)
        if y[j] == 0:
            break
        y[j] -= 1
        total -= rest_weights[j]
    lead = quota - total
    column = [0] * n
    column[order[0]] = lead
    for i, idx in enumerate(order[1:]):
        column[idx] = a1 * y[i]
    return tuple(column)


def _search_column(weights, amounts, product) -> tuple[int, ...] | None:
    """Exhaustive fallback: first column vector of weighted size ``product``."""
    n = len(weights)

    def rec(i: int, rest: int, acc: list[int]):
        if i == n:
            return tuple(acc) if rest == 0 else None
        cap = min(amounts[i], rest // weights[i])
        for c in range(cap, -1, -1):
            acc.append(c)
            got = rec(i + 1, rest - c * weights[i], acc)
            acc.pop()
            if got is not None:
                return got
        return None

    return rec(0, product, [])
