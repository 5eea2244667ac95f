"""Optional on-disk cache of enumerated atom tables.

Atom enumeration is the expensive step for large alphabets, and the result
depends only on the alphabet's content.  This module stores one JSON file
per alphabet, keyed by the alphabet's content hash, under a directory chosen
by the ``ARITH_CACHE_DIR`` environment variable (defaulting to
``$XDG_CACHE_HOME/arithinv`` or ``~/.cache/arithinv``).

The library never touches the cache on its own; callers opt in by pairing
:func:`load_atoms` / :func:`store_atoms` around their computations, as the
command-line interface does with ``--cache``.
"""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .factorize import AtomEnumeration, enumerate_atoms, seed_engine_atoms
from .sequence import Alphabet, Sequence

__all__ = [
    "cache_dir",
    "cache_path",
    "load_atoms",
    "store_atoms",
    "cached_enumerate_atoms",
    "list_entries",
    "clear",
]

_SCHEMA = 1
_ENV_VAR = "ARITH_CACHE_DIR"


def cache_dir() -> Path:
    """Directory the cache lives in (not necessarily existing yet)."""
    env = os.environ.get(_ENV_VAR)
    if env:
        return Path(env)
    xdg = os.environ.get("XDG_CACHE_HOME")
    root = Path(xdg) if xdg else Path.home() / ".cache"
    return root / "arithinv"


def cache_path(alphabet: Alphabet) -> Path:
    return cache_dir() / f"atoms-{alphabet.content_hash()}.json"


def store_atoms(alphabet: Alphabet, enum: AtomEnumeration) -> Path:
    """Write an atom table for ``alphabet``; returns the file written.

    The write goes through a temporary file in the same directory followed
    by an atomic rename, so a crash can never leave a half-written entry.
    """
    from . import __version__

    path = cache_path(alphabet)
    path.parent.mkdir(parents=True, exist_ok=True)
    entry = {
        "schema": _SCHEMA,
        "version": __version__,
        "alphabet": alphabet.to_json(),
        "alphabet_hash": alphabet.content_hash(),
        "atoms": [list(a.exponents) for a in enum.atoms],
        "davenport": enum.davenport,
    }
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            json.dump(entry, handle, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def load_atoms(alphabet: Alphabet) -> AtomEnumeration | None:
    """Read a previously stored atom table, or ``None``.

    Entries that fail to parse or whose recorded longest-atom length
    disagrees with their own atom list are treated as absent.
    """
    path = cache_path(alphabet)
    try:
        entry = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if not isinstance(entry, dict) or entry.get("schema") != _SCHEMA:
        return None
    if entry.get("alphabet_hash") != alphabet.content_hash():
        return None
    raw = entry.get("atoms")
    if not isinstance(raw, list):
        return None
    n = len(alphabet)
    vecs = []
    for row in raw:
        if (not isinstance(row, list) or len(row) != n
                or not all(isinstance(x, int) and x >= 0 for x in row)):
            return None
        vecs.append(tuple(row))
    davenport = max((sum(v) for v in vecs), default=0)
    if entry.get("davenport") != davenport:
        return None
    atoms = tuple(Sequence(alphabet, v) for v in sorted(vecs))
    return AtomEnumeration(atoms, davenport)


def cached_enumerate_atoms(alphabet: Alphabet) -> AtomEnumeration:
    """Atom table for ``alphabet``, read from disk when possible.

    On a miss the atoms are enumerated, stored, and also seeded into the
    in-process engine so later factorization queries reuse them.
    """
    enum = load_atoms(alphabet)
    if enum is None:
        enum = enumerate_atoms(alphabet)
        store_atoms(alphabet, enum)
    else:
        seed_engine_atoms(alphabet, [a.exponents for a in enum.atoms])
    return enum


def list_entries() -> list[Path]:
    """Cache files currently on disk, sorted by name."""
    root = cache_dir()
    if not root.is_dir():
        return []
    return sorted(root.glob("atoms-*.json"))


def clear() -> int:
    """Delete every cache entry; returns how many files were removed."""
    removed = 0
    for path in list_entries():
        path.unlink(missing_ok=True)
        removed += 1
    return removed
