"""Local tame degrees of zero-sum sequences.

The local tame degree ``tame(A, u)`` measures how far a factorization of
``A`` avoiding the atom ``u`` can be from the nearest factorization through
``u``: it is 0 when no factorization of ``A`` contains ``u`` or all do, and
otherwise the worst-case distance from a ``u``-free factorization to its
closest ``u``-containing one.  The scan functions aggregate these degrees
over all elements up to a length bound.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidAtomError, InvariantViolationError, NotEnumerableError
from .factorize import (
    DEFAULT_MAX_FACTORIZATIONS,
    FactorizationSet,
    davenport,
    factorization_count,
    factorizations,
    is_atom,
)
from .group import INFINITE, GroupSpec, format_group_spec
from .invariants import (
    ScanBound,
    ScanReport,
    _block_group,
    _coerce_bound,
    _map_ordered,
    _scan_elements,
)
from .sequence import Alphabet, Sequence


def _tame_from_matrix(M: np.ndarray, D: np.ndarray, col: int) -> int:
    """Tame degree for the atom at column ``col`` of the multiplicity matrix."""
    mask = M[:, col] > 0
    if not mask.any() or mask.all():
        return 0
    return int(D[np.ix_(~mask, mask)].min(axis=1).max())


def _check_tame_bound(t: int, u_len: int, dav: int | None, context: str) -> None:
    if dav is not None and 2 * (t - 1) > u_len * (dav - 1):
        raise InvariantViolationError(
            f"tame degree {t} of {context} exceeds 1 + |u|(D-1)/2 with "
            f"|u| = {u_len}, D = {dav}")


def _davenport_or_none(alphabet: Alphabet) -> int | None:
    try:
        return davenport(alphabet)
    except NotEnumerableError:
        return None


def tame(a: Sequence, u: Sequence, *,
         max_factorizations: int | None = DEFAULT_MAX_FACTORIZATIONS) -> int:
    """Local tame degree of the element ``a`` relative to the atom ``u``."""
    if u.alphabet != a.alphabet:
        raise InvalidAtomError("atom and element live over different alphabets")
    if not is_atom(u):
        raise InvalidAtomError(f"{u.render()} is not an atom")
    fs = factorizations(a, max_factorizations=max_factorizations)
    try:
        col = fs.atoms.index(u)
    except ValueError:
        return 0
    M = np.array(fs.vectors, dtype=np.int64)
    t = _tame_from_matrix(M, fs.distance_matrix(), col)
    _check_tame_bound(t, len(u), _davenport_or_none(a.alphabet),
                      f"{a.render()} at {u.render()}")
    return t


def _element_tames(fs: FactorizationSet) -> list[tuple[int, int]]:
    """(column, positive tame degree) for every atom of the element."""
    if len(fs) <= 1:
        return []
    M = np.array(fs.vectors, dtype=np.int64)
    D = fs.distance_matrix()
    out = []
    for col in range(M.shape[1]):
        t = _tame_from_matrix(M, D, col)
        if t:
            out.append((col, t))
    return out


def _pinned_tames(alphabet: Alphabet) -> frozenset[int] | None:
    """Exact tame-degree sets known structurally for special alphabets."""
    spec = _block_group(alphabet)
    if spec is not None:
        if spec.size() <= 2:
            return frozenset()
        if spec == GroupSpec(0, (3,)) or spec == GroupSpec(0, (2, 2)):
            return frozenset({3})
        if all(n == 2 for n in spec.torsion):
            r = len(spec.torsion)
            if r == 3:
                return frozenset(range(2, 5))
            if r >= 4 and r % 2 == 0:
                return frozenset(range(2, 2 + r * r // 2))
        return None
    # A two-letter alphabet on a finite-order class and its negative has tame
    # degrees pinned to the class order (for order 2 the letters coincide in
    # class, giving the doubled-class alphabet).
    if len(alphabet) == 2:
        g, h = alphabet.classes
        order = g.order()
        if order != INFINITE and order >= 2 and h == -g:
            return frozenset({int(order)})
    return None


def ta_scan(alphabet: Alphabet, bound: ScanBound | int, jobs: int = 1) -> ScanReport:
    """Set of positive local tame degrees over all elements and atoms.

    For each element up to the bound, all factorizations are materialized
    once and every dividing atom is measured against them.
    """
    bound = _coerce_bound(bound)
    dav = _davenport_or_none(alphabet)
    cap = bound.max_factorization_count
    elements = _scan_elements(alphabet, bound)

    def tames_of(b: Sequence):
        if cap is not None and factorization_count(b) > cap:
            return None
        fs = factorizations(
            b, max_factorizations=DEFAULT_MAX_FACTORIZATIONS if cap is None else cap)
        return fs, _element_tames(fs)

    results = _map_ordered(tames_of, elements, jobs)
    witnesses: dict[int, Sequence] = {}
    witness_atoms: dict[str, str] = {}
    skipped = 0
    skipped_example = None
    for b, got in zip(elements, results):
        if got is None:
            skipped += 1
            if skipped_example is None:
                skipped_example = b
            continue
        fs, tames = got
        for col, t in tames:
            _check_tame_bound(t, len(fs.atoms[col]), dav,
                              f"{b.render()} at {fs.atoms[col].render()}")
            if t not in witnesses:
                witnesses[t] = b
                witness_atoms[str(t)] = fs.atoms[col].render()
    values = frozenset(witnesses)
    pinned = _pinned_tames(alphabet)
    complete = pinned is not None and values == pinned
    annotations: dict = {"witness_atoms": witness_atoms}
    if skipped:
        annotations["skipped_oversized"] = skipped
        annotations["skipped_example"] = skipped_example.render()
    return ScanReport("tame-set", format_group_spec(alphabet.spec),
                      alphabet.content_hash(), bound, tuple(sorted(values)),
                      dict(sorted(witnesses.items())), complete, annotations)


def tame_local_scan(alphabet: Alphabet, u: Sequence, bound: ScanBound | int,
                    jobs: int = 1) -> ScanReport:
    """Positive tame degrees relative to one fixed atom, over all elements."""
    bound = _coerce_bound(bound)
    if u.alphabet != alphabet:
        raise InvalidAtomError("atom lives over a different alphabet")
    if not is_atom(u):
        raise InvalidAtomError(f"{u.render()} is not an atom")
    dav = _davenport_or_none(alphabet)
    cap = bound.max_factorization_count
    elements = _scan_elements(alphabet, bound)

    def tame_of(b: Sequence):
        if cap is not None and factorization_count(b) > cap:
            return None
        fs = factorizations(
            b, max_factorizations=DEFAULT_MAX_FACTORIZATIONS if cap is None else cap)
        try:
            col = fs.atoms.index(u)
        except ValueError:
            return 0
        M = np.array(fs.vectors, dtype=np.int64)
        return _tame_from_matrix(M, fs.distance_matrix(), col)

    results = _map_ordered(tame_of, elements, jobs)
    witnesses: dict[int, Sequence] = {}
    skipped = 0
    for b, t in zip(elements, results):
        if t is None:
            skipped += 1
            continue
        if t:
            _check_tame_bound(t, len(u), dav, f"{b.render()} at {u.render()}")
            witnesses.setdefault(t, b)
    annotations: dict = {"atom": u.render()}
    if skipped:
        annotations["skipped_oversized"] = skipped
    return ScanReport("tame-local", format_group_spec(alphabet.spec),
                      alphabet.content_hash(), bound, tuple(sorted(witnesses)),
                      dict(sorted(witnesses.items())), False, annotations)
