"""Atoms, factorizations, and distance-based data of zero-sum sequences.

The monoid under study is the collection of zero-sum sequences over a fixed
alphabet, under multiset union.  Its irreducible elements — nonempty zero-sum
sequences with no proper nonempty zero-sum subsequence, called *atoms* —
generate every zero-sum sequence, usually in several ways.  This module
enumerates atoms, enumerates and counts factorizations into atoms, and
computes the distance geometry on factorization sets (distance, catenary
degree, minimal relation distances).

Computation is organised around one shared engine per alphabet, so repeated
queries (as issued by the scan functions) reuse atom tables and dynamic
programming memos.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import (
    IncompatibleElementsError,
    IncompatibleFactorizationsError,
    InvariantViolationError,
    NotEnumerableError,
    NotZeroSumError,
    SizeLimitError,
)
from .group import INFINITE
from .sequence import Alphabet, Sequence

#: Default ceiling on the number of factorizations materialized per element.
DEFAULT_MAX_FACTORIZATIONS = 20_000


# ---------------------------------------------------------------------------
# atom tests and enumeration
# ---------------------------------------------------------------------------

def is_atom(s: Sequence) -> bool:
    """True if ``s`` is a minimal nonempty zero-sum sequence.

    Works for any alphabet, including classes of infinite order, via a
    subset-sum sweep over the letters of ``s``.
    """
    if s.is_empty() or not s.class_sum().is_zero():
        return False
    return not _has_proper_zero_subsequence(s)


def _has_proper_zero_subsequence(s: Sequence) -> bool:
    """Does ``s`` contain a nonempty zero-sum subsequence other than itself?"""
    zero = s.alphabet.spec.zero()
    # State: (partial class sum, took nothing so far, took everything so far).
    states = {(zero, True, True)}
    for e, (_, g) in zip(s.exponents, s.alphabet.letters):
        if not e:
            continue
        multiples = [j * g for j in range(e + 1)]
        states = {
            (sm + multiples[j], empty and j == 0, full and j == e)
            for (sm, empty, full) in states
            for j in range(e + 1)
        }
    return any(sm == zero and not empty and not full for (sm, empty, full) in states)


def _atom_vectors(alphabet: Alphabet) -> list[tuple[int, ...]]:
    """Exponent vectors of all atoms over ``alphabet``, sorted.

    Depth-first search over sequences with non-decreasing letter indices.
    The running state keeps the class sums of all proper nonempty
    subsequences of the current prefix; a branch dies as soon as one of
    them hits zero, and terminates because live prefixes have pairwise
    distinct nonzero prefix sums inside the (finite) generated subgroup.
    """
    for label, g in alphabet.letters:
        if g.order() == INFINITE:
            raise NotEnumerableError(
                f"letter {label!r} has infinite order; atom enumeration needs an "
                f"alphabet of finite-order classes (restrict to a concrete element "
                f"with atoms_dividing instead)")
    n = len(alphabet)
    classes = alphabet.classes
    zero = alphabet.spec.zero()
    out: list[tuple[int, ...]] = []
    vec = [0] * n

    def extend(start: int, sigma, proper: frozenset, nonempty: bool) -> None:
        for i in range(start, n):
            g = classes[i]
            if nonempty:
                new_proper = proper | {sigma} | {s + g for s in proper} | {g}
                if zero in new_proper:
                    continue
                new_sigma = sigma + g
            else:
                new_proper = frozenset()
                new_sigma = g
            vec[i] += 1
            if new_sigma == zero:
                out.append(tuple(vec))
            else:
                extend(i, new_sigma, new_proper, True)
            vec[i] -= 1

    extend(0, zero, frozenset(), False)
    out.sort()
    return out


class AtomEnumeration(NamedTuple):
    atoms: tuple[Sequence, ...]
    davenport: int


# ---------------------------------------------------------------------------
# per-alphabet engine
# ---------------------------------------------------------------------------

class _Engine:
    """Atom tables and factorization memos shared across queries."""

    def __init__(self, alphabet: Alphabet) -> None:
        self.alphabet = alphabet
        self.n = len(alphabet)
        self.classes = alphabet.classes
        self.finite = all(g.order() != INFINITE for g in self.classes)
        self._atom_vecs: list[tuple[int, ...]] | None = None
        self._atoms: tuple[Sequence, ...] | None = None
        self._atom_array: np.ndarray | None = None
        self._by_letter: list[list[tuple[int, ...]]] | None = None
        self._lengths_memo: dict[tuple[int, ...], frozenset[int]] = {}
        self._minmax_memo: dict[tuple[int, ...], tuple[int, int]] = {}
        self._count_memo: dict[tuple[tuple[int, ...], int], int] = {}

    # -- atom tables ---------------------------------------------------------

    def seed_atoms(self, vecs: list[tuple[int, ...]]) -> None:
        """Install a precomputed atom table (used by the disk cache)."""
        if self._atom_vecs is None:
            self._atom_vecs = sorted(vecs)

    def atom_vecs(self) -> list[tuple[int, ...]]:
        if self._atom_vecs is None:
            self._atom_vecs = _atom_vectors(self.alphabet)
        return self._atom_vecs

    def atoms(self) -> tuple[Sequence, ...]:
        if self._atoms is None:
            self._atoms = tuple(Sequence(self.alphabet, v) for v in self.atom_vecs())
        return self._atoms

    def davenport(self) -> int:
        return max((sum(v) for v in self.atom_vecs()), default=0)

    def atom_array(self) -> np.ndarray:
        if self._atom_array is None:
            vecs = self.atom_vecs()
            self._atom_array = (np.array(vecs, dtype=np.int64) if vecs
                                else np.empty((0, self.n), dtype=np.int64))
        return self._atom_array

    def by_letter(self) -> list[list[tuple[int, ...]]]:
        """Atom vectors grouped by the letters they contain."""
        if self._by_letter is None:
            self._by_letter = [[] for _ in range(self.n)]
            for v in self.atom_vecs():
                for i, x in enumerate(v):
                    if x:
                        self._by_letter[i].append(v)
        return self._by_letter

    # -- atoms dividing a concrete element -------------------------------------

    def dividing_vectors(self, vec: tuple[int, ...]) -> list[tuple[int, ...]]:
        if self.finite:
            arr = self.atom_array()
            if not arr.shape[0]:
                return []
            mask = (arr <= np.asarray(vec, dtype=np.int64)).all(axis=1)
            return [self.atom_vecs()[i] for i in np.nonzero(mask)[0]]
        return self._minimal_zero_sum_vectors(vec)

    def _minimal_zero_sum_vectors(self, vec: tuple[int, ...]) -> list[tuple[int, ...]]:
        """Atoms dividing ``vec`` for alphabets with infinite-order classes."""
        classes = self.classes
        zero = self.alphabet.spec.zero()
        zs: list[tuple[int, ...]] = []
        for sub in itertools.product(*(range(e + 1) for e in vec)):
            if not any(sub):
                continue
            total = zero
            for j, g in zip(sub, classes):
                if j:
                    total = total + j * g
            if total == zero:
                zs.append(sub)
        zs.sort(key=sum)
        minimal: list[tuple[int, ...]] = []
        for v in zs:
            if not any(all(w[i] <= v[i] for i in range(self.n)) for w in minimal):
                minimal.append(v)
        minimal.sort()
        return minimal

    # -- dynamic programs --------------------------------------------------------

    def lengths(self, vec: tuple[int, ...],
                atom_vecs: list[tuple[int, ...]] | None = None) -> frozenset[int]:
        """Set of factorization lengths of a zero-sum exponent vector.

        Every factorization must cover the first letter present, so the
        recursion branches only over atoms containing that letter; the memo
        is keyed on the remainder vector alone, which is sound because the
        set of atoms dividing a vector does not depend on how we reached it.
        """
        if atom_vecs is None and self.finite:
            by_letter = self.by_letter()
        else:
            if atom_vecs is None:
                raise NotEnumerableError(
                    "length computation over infinite-order classes needs the "
                    "atom list of an enclosing element")
            by_letter = [[] for _ in range(self.n)]
            for v in atom_vecs:
                for i, x in enumerate(v):
                    if x:
                        by_letter[i].append(v)
        memo = self._lengths_memo

        def rec(v: tuple[int, ...]) -> frozenset[int]:
            got = memo.get(v)
            if got is not None:
                return got
            if not any(v):
                result = frozenset({0})
            else:
                i0 = next(i for i, x in enumerate(v) if x)
                out: set[int] = set()
                for a in by_letter[i0]:
                    if all(x <= y for x, y in zip(a, v)):
                        rest = tuple(y - x for x, y in zip(a, v))
                        out.update(l + 1 for l in rec(rest))
                result = frozenset(out)
            memo[v] = result
            return result

        return rec(tuple(vec))

    def minmax(self, vec: tuple[int, ...],
               atom_vecs: list[tuple[int, ...]] | None = None) -> tuple[int, int]:
        """(min, max) factorization length of a zero-sum exponent vector."""
        if atom_vecs is None and self.finite:
            by_letter = self.by_letter()
        else:
            if atom_vecs is None:
                raise NotEnumerableError(
                    "length bounds over infinite-order classes need the atom "
                    "list of an enclosing element")
            by_letter = [[] for _ in range(self.n)]
            for v in atom_vecs:
                for i, x in enumerate(v):
                    if x:
                        by_letter[i].append(v)
        memo = self._minmax_memo

        def rec(v: tuple[int, ...]) -> tuple[int, int]:
            got = memo.get(v)
            if got is not None:
                return got
            if not any(v):
                result = (0, 0)
            else:
                i0 = next(i for i, x in enumerate(v) if x)
                lo = hi = None
                for a in by_letter[i0]:
                    if all(x <= y for x, y in zip(a, v)):
                        rest = tuple(y - x for x, y in zip(a, v))
                        l2, h2 = rec(rest)
                        lo = l2 + 1 if lo is None else min(lo, l2 + 1)
                        hi = h2 + 1 if hi is None else max(hi, h2 + 1)
                if lo is None:
                    raise NotZeroSumError("vector admits no factorization")
                result = (lo, hi)
            memo[v] = result
            return result

        return rec(tuple(vec))

    def count(self, vec: tuple[int, ...],
              atom_vecs: list[tuple[int, ...]] | None = None,
              memo: dict | None = None) -> int:
        """Number of factorizations (multisets of atoms) of ``vec``."""
        if atom_vecs is None:
            if not self.finite:
                raise NotEnumerableError(
                    "factorization counting over infinite-order classes needs "
                    "the atom list of an enclosing element")
            atom_vecs = self.atom_vecs()
            memo = self._count_memo
        if memo is None:
            memo = {}

        def rec(v: tuple[int, ...], idx: int) -> int:
            if not any(v):
                return 1
            key = (v, idx)
            got = memo.get(key)
            if got is not None:
                return got
            total = 0
            for j in range(idx, len(atom_vecs)):
                a = atom_vecs[j]
                if all(x <= y for x, y in zip(a, v)):
                    total += rec(tuple(y - x for x, y in zip(a, v)), j)
            memo[key] = total
            return total

        return rec(tuple(vec), 0)

    def vectors(self, vec: tuple[int, ...], atom_vecs: list[tuple[int, ...]],
                max_factorizations: int | None,
                memo: dict | None = None) -> list[tuple[int, ...]]:
        """Materialize all factorizations of ``vec`` as multiplicity rows.

        The rows index into ``atom_vecs``.  Counts are computed first so the
        search can prune dead branches and the caller is protected from
        oversized outputs.
        """
        if memo is None:
            memo = self._count_memo if (self.finite and atom_vecs is self.atom_vecs()) else {}

        def count(v: tuple[int, ...], idx: int) -> int:
            if not any(v):
                return 1
            key = (v, idx)
            got = memo.get(key)
            if got is not None:
                return got
            total = 0
            for j in range(idx, len(atom_vecs)):
                a = atom_vecs[j]
                if all(x <= y for x, y in zip(a, v)):
                    total += count(tuple(y - x for x, y in zip(a, v)), j)
            memo[key] = total
            return total

        total = count(tuple(vec), 0)
        if max_factorizations is not None and total > max_factorizations:
            raise SizeLimitError(
                f"element has {total} factorizations, above the limit of "
                f"{max_factorizations}", limit=max_factorizations, count=total)
        rows: list[tuple[int, ...]] = []
        k = len(atom_vecs)
        acc: list[int] = []

        def rec(v: tuple[int, ...], idx: int) -> None:
            if not any(v):
                row = [0] * k
                for j in acc:
                    row[j] += 1
                rows.append(tuple(row))
                return
            for j in range(idx, k):
                a = atom_vecs[j]
                if all(x <= y for x, y in zip(a, v)):
                    rest = tuple(y - x for x, y in zip(a, v))
                    if count(rest, j):
                        acc.append(j)
                        rec(rest, j)
                        acc.pop()

        rec(tuple(vec), 0)
        return rows


_ENGINES: dict[Alphabet, _Engine] = {}


def _engine(alphabet: Alphabet) -> _Engine:
    eng = _ENGINES.get(alphabet)
    if eng is None:
        eng = _ENGINES[alphabet] = _Engine(alphabet)
    return eng


def seed_engine_atoms(alphabet: Alphabet, vecs: Iterable[tuple[int, ...]]) -> None:
    """Install a precomputed atom table for ``alphabet``.

    A no-op when the engine already holds one; used by the disk cache to
    skip re-enumeration.
    """
    _engine(alphabet).seed_atoms([tuple(v) for v in vecs])


def _require_zero_sum(b: Sequence) -> None:
    if not b.class_sum().is_zero():
        raise NotZeroSumError(
            f"{b.render()} has class sum {b.class_sum()}, not zero")


# ---------------------------------------------------------------------------
# public atom/factorization API
# ---------------------------------------------------------------------------

def enumerate_atoms(alphabet: Alphabet) -> AtomEnumeration:
    """All atoms over ``alphabet`` plus the largest atom length.

    Requires every letter class to have finite order.
    """
    eng = _engine(alphabet)
    return AtomEnumeration(eng.atoms(), eng.davenport())


def davenport(alphabet: Alphabet) -> int:
    """Largest length of an atom over ``alphabet`` (0 if there are no atoms)."""
    return _engine(alphabet).davenport()


def atoms_dividing(b: Sequence) -> tuple[Sequence, ...]:
    """Atoms dividing ``b``, in canonical order.

    Unlike :func:`enumerate_atoms` this also works over alphabets containing
    classes of infinite order, by searching inside ``b`` only.
    """
    eng = _engine(b.alphabet)
    return tuple(Sequence(b.alphabet, v) for v in eng.dividing_vectors(b.exponents))


@dataclass(frozen=True)
class FactorizationSet:
    """All factorizations of one zero-sum element.

    ``atoms`` are the atoms dividing the element; each row of ``vectors``
    gives the multiplicity of each atom in one factorization.
    """

    element: Sequence
    atoms: tuple[Sequence, ...]
    vectors: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted({sum(v) for v in self.vectors}))

    def factorization(self, i: int) -> tuple[Sequence, ...]:
        """Row ``i`` expanded to a sorted tuple of atoms with repetition."""
        out: list[Sequence] = []
        for atom, mult in zip(self.atoms, self.vectors[i]):
            out.extend([atom] * mult)
        return tuple(out)

    def distance_matrix(self) -> np.ndarray:
        """Pairwise factorization distances as a square integer matrix."""
        m = len(self.vectors)
        M = (np.array(self.vectors, dtype=np.int64) if m
             else np.empty((0, len(self.atoms)), dtype=np.int64))
        return _distance_matrix(M)

    def render(self, i: int) -> str:
        parts = []
        for atom, mult in zip(self.atoms, self.vectors[i]):
            if mult:
                text = atom.render()
                parts.append(f"[{text}]" if mult == 1 else f"[{text}]^{mult}")
        return " ".join(parts) if parts else "(empty)"

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "element": self.element.to_json(),
            "element_text": self.element.render(),
            "atoms": [list(a.exponents) for a in self.atoms],
            "atom_texts": [a.render() for a in self.atoms],
            "factorizations": [list(v) for v in self.vectors],
            "lengths": list(self.lengths()),
        }


def factorizations(b: Sequence, *,
                   max_factorizations: int | None = DEFAULT_MAX_FACTORIZATIONS,
                   ) -> FactorizationSet:
    """Materialize every factorization of the zero-sum sequence ``b``.

    Raises :class:`NotZeroSumError` if ``b`` is not zero-sum and
    :class:`SizeLimitError` if the factorization count exceeds
    ``max_factorizations`` (pass ``None`` to lift the limit).
    """
    _require_zero_sum(b)
    eng = _engine(b.alphabet)
    if eng.finite:
        atom_vecs = eng.atom_vecs()
        rows = eng.vectors(b.exponents, atom_vecs, max_factorizations)
        used = sorted({j for row in rows for j, m in enumerate(row) if m})
        atoms = tuple(Sequence(b.alphabet, atom_vecs[j]) for j in used)
        vectors = tuple(tuple(row[j] for j in used) for row in rows)
    else:
        atom_vecs = eng.dividing_vectors(b.exponents)
        rows = eng.vectors(b.exponents, atom_vecs, max_factorizations, memo={})
        atoms = tuple(Sequence(b.alphabet, v) for v in atom_vecs)
        vectors = tuple(rows)
    return FactorizationSet(b, atoms, vectors)


def factorization_count(b: Sequence) -> int:
    """Number of factorizations of ``b`` without materializing them."""
    _require_zero_sum(b)
    eng = _engine(b.alphabet)
    if eng.finite:
        return eng.count(b.exponents)
    atom_vecs = eng.dividing_vectors(b.exponents)
    return eng.count(b.exponents, atom_vecs, memo={})


def length_set(b: Sequence) -> frozenset[int]:
    """Set of factorization lengths of ``b`` ({0} for the empty sequence)."""
    _require_zero_sum(b)
    eng = _engine(b.alphabet)
    if eng.finite:
        return eng.lengths(b.exponents)
    return eng.lengths(b.exponents, eng.dividing_vectors(b.exponents))


def min_max_lengths(b: Sequence) -> tuple[int, int]:
    """Shortest and longest factorization length of ``b``."""
    _require_zero_sum(b)
    eng = _engine(b.alphabet)
    if eng.finite:
        return eng.minmax(b.exponents)
    return eng.minmax(b.exponents, eng.dividing_vectors(b.exponents))


# ---------------------------------------------------------------------------
# distances, catenary degree, minimal relation distances
# ---------------------------------------------------------------------------

def distance(za: tuple[Sequence, ...], zb: tuple[Sequence, ...]) -> int:
    """Distance between two factorizations given as atom tuples.

    After cancelling the common atoms (as a multiset), the distance is the
    larger of the two residual lengths.  Both tuples must multiply to the
    same element.
    """
    if za and zb and za[0].alphabet != zb[0].alphabet:
        raise IncompatibleElementsError("factorizations over different alphabets")
    ca = Counter(a.exponents for a in za)
    cb = Counter(a.exponents for a in zb)
    prod_a = _product_vector(za)
    prod_b = _product_vector(zb)
    if prod_a != prod_b:
        raise IncompatibleFactorizationsError(
            "factorizations of different elements have no distance")
    common = sum((ca & cb).values())
    return max(len(za) - common, len(zb) - common)


def _product_vector(z: tuple[Sequence, ...]) -> tuple[int, ...] | None:
    if not z:
        return None
    total = [0] * len(z[0].exponents)
    for atom in z:
        for i, e in enumerate(atom.exponents):
            total[i] += e
    return tuple(total)


def _distance_matrix(M: np.ndarray) -> np.ndarray:
    m = M.shape[0]
    D = np.zeros((m, m), dtype=np.int64)
    if m <= 1:
        return D
    lens = M.sum(axis=1)
    for i in range(m):
        common = np.minimum(M[i], M).sum(axis=1)
        D[i] = np.maximum(lens[i], lens) - common
    return D


def _relations_from_matrix(D: np.ndarray) -> tuple[int, ...]:
    """Distances at which the factorization graph is freshly glued together.

    Processes distance values in ascending order (a Kruskal sweep).  A value
    ``v`` is recorded when some pair at distance ``v`` is not yet connected
    by chains of strictly smaller steps; the sweep stops as soon as the
    graph is connected, since larger distances can then always be bridged.
    """
    m = D.shape[0]
    if m <= 1:
        return ()
    iu, ju = np.triu_indices(m, 1)
    dist = D[iu, ju]
    order = np.argsort(dist, kind="stable")
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    relations: list[int] = []
    components = m
    pos = 0
    total = len(order)
    while pos < total and components > 1:
        v = int(dist[order[pos]])
        end = pos
        fresh = False
        while end < total and dist[order[end]] == v:
            a = find(int(iu[order[end]]))
            b = find(int(ju[order[end]]))
            if a != b:
                if not fresh:
                    if v < 2:
                        raise InvariantViolationError(
                            f"distinct factorizations at distance {v} < 2")
                    relations.append(v)
                    fresh = True
                parent[a] = b
                components -= 1
            end += 1
        pos = end
    return tuple(relations)


def catenary(b: Sequence, *,
             max_factorizations: int | None = DEFAULT_MAX_FACTORIZATIONS) -> int:
    """Catenary degree of ``b``: the bottleneck step width needed to connect
    all factorizations of ``b`` by chains (0 if there are fewer than two)."""
    relations = minimal_relations(b, max_factorizations=max_factorizations)
    return max(relations, default=0)


def minimal_relations(b: Sequence, *,
                      max_factorizations: int | None = DEFAULT_MAX_FACTORIZATIONS,
                      ) -> tuple[int, ...]:
    """Ascending distances at which factorizations of ``b`` become connected.

    The largest entry equals the catenary degree of ``b``; the empty tuple
    means ``b`` has at most one factorization.
    """
    fs = factorizations(b, max_factorizations=max_factorizations)
    return _relations_from_matrix(fs.distance_matrix())
