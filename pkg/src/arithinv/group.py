"""Finitely generated abelian groups and their elements.

A group is described by a :class:`GroupSpec` holding a free rank ``s`` and a
tuple of torsion orders, normalized to the invariant-factor form
``n_1 | n_2 | ... | n_r``.  Elements are coordinate vectors split into free
and torsion parts; torsion coordinates are always stored reduced modulo
their order, so equality of dataclasses is equality in the group.

>>> spec = parse_group_spec("C2xC3")
>>> format_group_spec(spec)
'C6'
>>> g = parse_element(spec, "g")
>>> (4 * g).order()
3
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator

from .errors import (
    IncompatibleElementsError,
    InvalidSpecError,
    NotEnumerableError,
    ParseError,
)

#: Sentinel order of elements with a nonzero free coordinate.
INFINITE = math.inf


def _invariant_factors(entries: tuple[int, ...]) -> tuple[int, ...]:
    """Normalize torsion orders to a divisibility chain.

    Repeatedly replaces a non-dividing pair ``(a, b)`` by
    ``(gcd(a, b), lcm(a, b))`` — an isomorphism of the product — and drops
    factors of 1, until ``n_1 | n_2 | ... | n_r`` holds.

    >>> _invariant_factors((2, 3))
    (6,)
    >>> _invariant_factors((4, 6))
    (2, 12)
    >>> _invariant_factors((2, 2, 2))
    (2, 2, 2)
    """
    factors = [int(e) for e in entries]
    while True:
        factors = sorted(f for f in factors if f > 1)
        changed = False
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                a, b = factors[i], factors[j]
                if b % a:
                    g = math.gcd(a, b)
                    factors[i], factors[j] = g, a * b // g
                    changed = True
        if not changed:
            return tuple(factors)


@dataclass(frozen=True)
class GroupSpec:
    """A finitely generated abelian group Z^s x C_{n_1} x ... x C_{n_r}.

    ``torsion`` is normalized on construction, so two specs compare equal
    exactly when they describe isomorphic groups:

    >>> GroupSpec(0, (2, 3)) == GroupSpec(0, (6,))
    True
    >>> GroupSpec(0, (4, 6)).torsion
    (2, 12)
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.free_rank, int) or self.free_rank < 0:
            raise InvalidSpecError(f"free rank must be a non-negative int, got {self.free_rank!r}")
        entries = tuple(self.torsion)
        for n in entries:
            if not isinstance(n, int) or n < 2:
                raise InvalidSpecError(f"torsion orders must be ints >= 2, got {n!r}")
        object.__setattr__(self, "torsion", _invariant_factors(entries))

    # -- structure ---------------------------------------------------------

    @property
    def rank(self) -> int:
        """Number of coordinates (free rank plus torsion rank)."""
        return self.free_rank + len(self.torsion)

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def size(self) -> int | float:
        """Number of elements; ``INFINITE`` when the free rank is positive."""
        if self.free_rank:
            return INFINITE
        return math.prod(self.torsion)

    def exponent(self) -> int | float:
        """Largest element order; ``INFINITE`` when the free rank is positive."""
        if self.free_rank:
            return INFINITE
        return self.torsion[-1] if self.torsion else 1

    # -- element construction ----------------------------------------------

    def element(self, coords: tuple[int, ...] | list[int]) -> "GroupElement":
        """Element from a full coordinate vector (free coordinates first)."""
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise InvalidSpecError(
                f"expected {self.rank} coordinates for {format_group_spec(self)}, "
                f"got {len(coords)}")
        return GroupElement(self, coords[: self.free_rank], coords[self.free_rank:])

    def zero(self) -> "GroupElement":
        return self.element([0] * self.rank)

    def standard_basis(self, with_sum: bool = False) -> tuple["GroupElement", ...]:
        """Coordinate generators, optionally preceded by their total sum.

        >>> spec = GroupSpec(0, (2, 2))
        >>> [render_element(e) for e in spec.standard_basis(with_sum=True)]
        ['(1,1)', '(1,0)', '(0,1)']
        """
        basis = []
        for i in range(self.rank):
            coords = [0] * self.rank
            coords[i] = 1
            basis.append(self.element(coords))
        if with_sum:
            total = self.zero()
            for e in basis:
                total = total + e
            return (total, *basis)
        return tuple(basis)

    def elements(self) -> Iterator["GroupElement"]:
        """All elements in lexicographic coordinate order (finite groups only).

        >>> [render_element(g) for g in GroupSpec(0, (3,)).elements()]
        ['0', 'g', '2g']
        """
        if self.free_rank:
            raise NotEnumerableError(
                f"{format_group_spec(self)} is infinite; cannot list its elements")
        for coords in itertools.product(*(range(n) for n in self.torsion)):
            yield GroupElement(self, (), coords)


@dataclass(frozen=True)
class GroupElement:
    """An element of a :class:`GroupSpec`, with reduced torsion coordinates."""

    spec: GroupSpec
    free: tuple[int, ...]
    torsion: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.free) != self.spec.free_rank or len(self.torsion) != len(self.spec.torsion):
            raise InvalidSpecError("coordinate count does not match the group spec")
        object.__setattr__(self, "free", tuple(int(c) for c in self.free))
        object.__setattr__(
            self, "torsion",
            tuple(int(c) % n for c, n in zip(self.torsion, self.spec.torsion)))

    def _check(self, other: "GroupElement") -> None:
        if not isinstance(other, GroupElement):
            raise IncompatibleElementsError(f"cannot combine group element with {type(other).__name__}")
        if other.spec != self.spec:
            raise IncompatibleElementsError(
                f"elements of {format_group_spec(self.spec)} and "
                f"{format_group_spec(other.spec)} cannot be combined")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(
            self.spec,
            tuple(a + b for a, b in zip(self.free, other.free)),
            tuple(a + b for a, b in zip(self.torsion, other.torsion)))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __neg__(self) -> "GroupElement":
        return GroupElement(
            self.spec,
            tuple(-a for a in self.free),
            tuple(-a for a in self.torsion))

    def _scale(self, k: int) -> "GroupElement":
        if not isinstance(k, int):
            return NotImplemented
        return GroupElement(
            self.spec,
            tuple(k * a for a in self.free),
            tuple(k * a for a in self.torsion))

    __mul__ = _scale
    __rmul__ = _scale

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    def order(self) -> int | float:
        """Additive order; ``INFINITE`` if any free coordinate is nonzero.

        >>> GroupSpec(0, (6,)).element([4]).order()
        3
        """
        if any(self.free):
            return INFINITE
        result = 1
        for c, n in zip(self.torsion, self.spec.torsion):
            result = math.lcm(result, n // math.gcd(c, n))
        return result

    def key(self) -> tuple[int, ...]:
        """Full coordinate tuple, used as a deterministic sort key."""
        return self.free + self.torsion

    def __str__(self) -> str:
        return render_element(self)


# -- textual formats ---------------------------------------------------------

_PART_RE = re.compile(r"^(z|c(\d+)(\^(\d+))?)$")


def parse_group_spec(text: str) -> GroupSpec:
    """Parse a group description like ``"Z"``, ``"C6"``, ``"C2^3"``, ``"ZxC3"``.

    Parts are joined with ``x`` and matched case-insensitively; whitespace is
    rejected.  ``Z`` denotes one free factor and takes no exponent.  The
    string ``"C1"`` alone denotes the trivial group; a torsion order below 2
    anywhere else is an error.

    >>> parse_group_spec("c2^2xC6")
    GroupSpec(free_rank=0, torsion=(2, 2, 6))
    """
    if not isinstance(text, str) or not text:
        raise ParseError("empty group description")
    if any(ch.isspace() for ch in text):
        raise ParseError(f"whitespace is not allowed in group descriptions: {text!r}")
    lowered = text.lower()
    if lowered == "c1":
        return GroupSpec(0, ())
    free_rank = 0
    torsion: list[int] = []
    for part in lowered.split("x"):
        m = _PART_RE.match(part)
        if not m:
            raise ParseError(f"bad group factor {part!r} in {text!r}")
        if part == "z":
            free_rank += 1
            continue
        n = int(m.group(2))
        count = int(m.group(4)) if m.group(4) else 1
        if n < 2:
            raise InvalidSpecError(f"torsion order must be >= 2, got C{n} in {text!r}")
        if count < 1:
            raise InvalidSpecError(f"exponent must be >= 1, got {part!r} in {text!r}")
        torsion.extend([n] * count)
    return GroupSpec(free_rank, tuple(torsion))


def format_group_spec(spec: GroupSpec) -> str:
    """Canonical text for a spec; inverse of :func:`parse_group_spec`.

    >>> format_group_spec(GroupSpec(1, (2, 2, 6)))
    'ZxC2^2xC6'
    >>> format_group_spec(GroupSpec(0, ()))
    'C1'
    """
    parts = ["Z"] * spec.free_rank
    for n, copies in itertools.groupby(spec.torsion):
        k = len(list(copies))
        parts.append(f"C{n}" if k == 1 else f"C{n}^{k}")
    return "x".join(parts) if parts else "C1"


_SCALAR_RE = re.compile(r"^(-?)(\d*)g$")


def render_element(g: GroupElement) -> str:
    """Canonical text for an element.

    One-coordinate groups use multiples of the generator ``g`` (reduced to
    ``[0, n)`` for torsion); others use a coordinate tuple.

    >>> render_element(GroupSpec(0, (5,)).element([3]))
    '3g'
    >>> render_element(GroupSpec(1, ()).element([-2]))
    '-2g'
    >>> render_element(GroupSpec(0, (2, 2)).element([1, 0]))
    '(1,0)'
    """
    if g.spec.rank == 1:
        k = g.key()[0]
        if k == 0:
            return "0"
        if k == 1:
            return "g"
        if k == -1:
            return "-g"
        return f"{k}g"
    return "(" + ",".join(str(c) for c in g.key()) + ")"


def parse_element(spec: GroupSpec, text: str) -> GroupElement:
    """Parse an element of ``spec`` from its textual form.

    Accepts ``"0"`` for the zero element of any group, scalar forms like
    ``"3g"``/``"-g"`` for one-coordinate groups, and coordinate tuples like
    ``"(1,0,2)"`` (free coordinates first).

    >>> render_element(parse_element(GroupSpec(0, (5,)), "-g"))
    '4g'
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    text = text.strip()
    if not text:
        raise ParseError("empty element description")
    if text == "0":
        return spec.zero()
    if text.startswith("(") and text.endswith(")"):
        body = text[1:-1]
        try:
            coords = [int(c.strip()) for c in body.split(",")] if body.strip() else []
        except ValueError as exc:
            raise ParseError(f"bad coordinate tuple {text!r}") from exc
        if len(coords) != spec.rank:
            raise ParseError(
                f"expected {spec.rank} coordinates for {format_group_spec(spec)}, got {text!r}")
        return spec.element(coords)
    m = _SCALAR_RE.match(text)
    if m:
        if spec.rank != 1:
            raise ParseError(
                f"scalar form {text!r} needs a one-coordinate group, not {format_group_spec(spec)}")
        k = int(m.group(2)) if m.group(2) else 1
        if m.group(1):
            k = -k
        return spec.element([k])
    raise ParseError(f"cannot parse element {text!r} of {format_group_spec(spec)}")
