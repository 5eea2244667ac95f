"""Brute-force reference implementations, for validating the fast engine.

Everything here recomputes results from first principles with code paths
disjoint from :mod:`arithinv.factorize`: sequences are expanded into lists
of letter positions, factorizations are generated as set partitions of
positions, and connectivity is decided by breadth-first search.  No atom
tables, no memoization, no numpy.  These functions are exponential and only
meant for small inputs; tests compare them against the optimized module.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, deque
from fractions import Fraction

from .errors import NotZeroSumError, SizeLimitError
from .sequence import Alphabet, Sequence

#: Largest sequence length the subset-based helpers accept.
MAX_NAIVE_LENGTH = 16


def _positions(s: Sequence) -> list[int]:
    """Expand a sequence into a list of letter indices, one per occurrence."""
    out: list[int] = []
    for i, e in enumerate(s.exponents):
        out.extend([i] * e)
    return out


def _sum_of(alphabet: Alphabet, positions: tuple[int, ...] | list[int]):
    total = alphabet.spec.zero()
    for i in positions:
        total = total + alphabet.letters[i][1]
    return total


def naive_is_atom(s: Sequence) -> bool:
    """Atom test by inspecting every proper nonempty subset of positions."""
    positions = _positions(s)
    n = len(positions)
    if n > MAX_NAIVE_LENGTH:
        raise SizeLimitError(f"naive atom test limited to length {MAX_NAIVE_LENGTH}",
                             limit=MAX_NAIVE_LENGTH, count=n)
    if not n or not _sum_of(s.alphabet, positions).is_zero():
        return False
    for r in range(1, n):
        for combo in itertools.combinations(range(n), r):
            if _sum_of(s.alphabet, [positions[i] for i in combo]).is_zero():
                return False
    return True


def naive_atoms(alphabet: Alphabet, max_length: int) -> list[Sequence]:
    """All atoms of length at most ``max_length``, by exhaustive generation."""
    out = []
    n = len(alphabet)
    for length in range(1, max_length + 1):
        for combo in itertools.combinations_with_replacement(range(n), length):
            vec = [0] * n
            for i in combo:
                vec[i] += 1
            s = Sequence(alphabet, tuple(vec))
            if naive_is_atom(s):
                out.append(s)
    return out


def naive_factorizations(s: Sequence) -> list[tuple[tuple[int, ...], ...]]:
    """All factorizations of ``s``, generated as set partitions of positions.

    Each factorization is returned as a sorted tuple of atom exponent
    vectors; the list itself is sorted.  Partitions whose parts fail the
    atom test are discarded; distinct position partitions inducing the same
    multiset of atoms are collapsed.
    """
    if not s.class_sum().is_zero():
        raise NotZeroSumError(f"{s.render()} is not a zero-sum sequence")
    positions = _positions(s)
    if len(positions) > MAX_NAIVE_LENGTH:
        raise SizeLimitError(
            f"naive factorization limited to length {MAX_NAIVE_LENGTH}",
            limit=MAX_NAIVE_LENGTH, count=len(positions))
    alphabet = s.alphabet
    width = len(alphabet)
    results: set[tuple[tuple[int, ...], ...]] = set()

    def rec(remaining: tuple[int, ...], parts: list[tuple[int, ...]]) -> None:
        if not remaining:
            results.add(tuple(sorted(parts)))
            return
        first, rest = remaining[0], remaining[1:]
        # The part holding the first remaining position is chosen as a subset
        # of the later positions, so every set partition arises exactly once.
        for r in range(len(rest) + 1):
            for combo in itertools.combinations(range(len(rest)), r):
                chosen = [first] + [rest[i] for i in combo]
                if not _sum_of(alphabet, chosen).is_zero():
                    continue
                vec = [0] * width
                for i in chosen:
                    vec[i] += 1
                if not naive_is_atom(Sequence(alphabet, tuple(vec))):
                    continue
                left = [rest[i] for i in range(len(rest)) if i not in set(combo)]
                parts.append(tuple(vec))
                rec(tuple(left), parts)
                parts.pop()

    rec(tuple(positions), [])
    return sorted(results)


def naive_length_set(s: Sequence) -> frozenset[int]:
    return frozenset(len(z) for z in naive_factorizations(s))


def naive_elasticity(s: Sequence) -> Fraction:
    lengths = naive_length_set(s)
    if lengths == {0}:
        return Fraction(1)
    return Fraction(max(lengths), min(lengths))


def naive_distance(za: tuple[tuple[int, ...], ...],
                   zb: tuple[tuple[int, ...], ...]) -> int:
    """Distance between factorizations given as tuples of atom vectors."""
    ca, cb = Counter(za), Counter(zb)
    common = sum((ca & cb).values())
    return max(len(za) - common, len(zb) - common)


def _connected(m: int, edges: list[tuple[int, int]]) -> bool:
    if m <= 1:
        return True
    adj: list[list[int]] = [[] for _ in range(m)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == m


def naive_catenary(s: Sequence) -> int:
    """Smallest step width whose chains connect all factorizations of ``s``."""
    zs = naive_factorizations(s)
    m = len(zs)
    if m <= 1:
        return 0
    pairs = {(i, j): naive_distance(zs[i], zs[j])
             for i in range(m) for j in range(i + 1, m)}
    for bound in itertools.count(0):
        edges = [ij for ij, d in pairs.items() if d <= bound]
        if _connected(m, edges):
            return bound


def naive_minimal_relations(s: Sequence) -> tuple[int, ...]:
    """Distances ``d`` realized by a pair not connected below ``d``."""
    zs = naive_factorizations(s)
    m = len(zs)
    pairs = {(i, j): naive_distance(zs[i], zs[j])
             for i in range(m) for j in range(i + 1, m)}
    out = []
    for d in sorted(set(pairs.values())):
        if d == 0:
            continue
        edges = [ij for ij, dist in pairs.items() if dist < d]
        adj: list[list[int]] = [[] for _ in range(m)]
        for i, j in edges:
            adj[i].append(j)
            adj[j].append(i)

        def component(start: int) -> set[int]:
            seen = {start}
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            return seen

        for (i, j), dist in pairs.items():
            if dist == d and j not in component(i):
                out.append(d)
                break
    return tuple(out)


def naive_tame(s: Sequence, u: Sequence) -> int:
    """Local tame degree of ``s`` relative to the atom ``u``, by definition.

    0 when no factorization of ``s`` contains ``u`` or all do; otherwise the
    worst distance from a factorization avoiding ``u`` to its nearest
    factorization containing ``u``.
    """
    u_vec = tuple(u.exponents)
    zs = naive_factorizations(s)
    with_u = [z for z in zs if u_vec in z]
    without_u = [z for z in zs if u_vec not in z]
    if not with_u or not without_u:
        return 0
    return max(min(naive_distance(z, z2) for z2 in with_u) for z in without_u)


def naive_split_weighted_sum(weights: tuple[int, ...], amounts: tuple[int, ...],
                             columns: int) -> tuple[tuple[int, ...], ...] | None:
    """Split ``amounts`` into ``columns`` parts, each weighing the full product.

    Given positive weights ``a_1..a_n`` with product ``P`` and amounts with
    ``sum(a_i * x_i) == columns * P``, searches exhaustively for columns
    ``x^(1)..x^(columns)`` summing to ``amounts`` with each
    ``sum(a_i * x^(j)_i) == P``.  Returns ``None`` when no split exists or
    the precondition fails.
    """
    n = len(weights)
    product = math.prod(weights)
    if len(amounts) != n or any(a <= 0 for a in weights) or any(x < 0 for x in amounts):
        return None
    if sum(a * x for a, x in zip(weights, amounts)) != columns * product:
        return None

    def columns_of(remaining: tuple[int, ...], left: int):
        if left == 1:
            if sum(a * x for a, x in zip(weights, remaining)) == product:
                return [remaining]
            return None
        for col in _weighted_exact(weights, remaining, product):
            rest = tuple(r - c for r, c in zip(remaining, col))
            sub = columns_of(rest, left - 1)
            if sub is not None:
                return [col] + sub
        return None

    result = columns_of(tuple(amounts), columns)
    return tuple(result) if result is not None else None


def _weighted_exact(weights, limits, target):
    """All vectors ``c <= limits`` with ``sum(weights * c) == target``."""

    def rec(i: int, rest: int, acc: list[int]):
        if i == len(weights):
            if rest == 0:
                yield tuple(acc)
            return
        cap = min(limits[i], rest // weights[i])
        for c in range(cap + 1):
            acc.append(c)
            yield from rec(i + 1, rest - c * weights[i], acc)
            acc.pop()

    yield from rec(0, target, [])
