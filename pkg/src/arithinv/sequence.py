"""Alphabets of labelled group classes and sequences over them.

An :class:`Alphabet` is a finite tuple of ``(label, class)`` letters over one
group; distinct letters may share a class (that is what makes an alphabet
"Krull-style" rather than a plain block alphabet).  A :class:`Sequence` is a
multiset of letters stored as an exponent vector, with divisibility, product,
and quotient as the multiset operations.

>>> a = block_alphabet(GroupSpec(0, (3,)))
>>> s = parse_sequence(a, "g^2 2g")
>>> s.class_sum().is_zero()
False
>>> (s * parse_sequence(a, "2g")).class_sum().is_zero()
True
"""

from __future__ import annotations

import hashlib
import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import (
    IncompatibleElementsError,
    InvalidSpecError,
    NonDivisorError,
    NotEnumerableError,
    ParseError,
)
from .group import (
    GroupElement,
    GroupSpec,
    format_group_spec,
    parse_element,
    render_element,
)


def _stable_dumps(data: object) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class Alphabet:
    """An ordered tuple of labelled group classes.

    Letters are sorted by (class coordinates, label) on construction, so the
    letter order — and everything derived from it, such as exponent vectors
    and content hashes — is canonical.  Labels must be unique; classes need
    not be.
    """

    spec: GroupSpec
    letters: tuple[tuple[str, GroupElement], ...]

    def __post_init__(self) -> None:
        ordered = []
        seen: set[str] = set()
        for label, elem in self.letters:
            if not isinstance(label, str) or not label:
                raise InvalidSpecError(f"letter labels must be non-empty strings, got {label!r}")
            if label in seen:
                raise InvalidSpecError(f"duplicate letter label {label!r}")
            seen.add(label)
            if elem.spec != self.spec:
                raise IncompatibleElementsError(
                    f"letter {label!r} belongs to {format_group_spec(elem.spec)}, "
                    f"not {format_group_spec(self.spec)}")
            ordered.append((label, elem))
        ordered.sort(key=lambda le: (le[1].key(), le[0]))
        object.__setattr__(self, "letters", tuple(ordered))
        object.__setattr__(self, "_index", {label: i for i, (label, _) in enumerate(self.letters)})

    # -- lookup --------------------------------------------------------------

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.letters)

    @property
    def classes(self) -> tuple[GroupElement, ...]:
        return tuple(elem for _, elem in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def index(self, label: str) -> int:
        try:
            return self._index[label]  # type: ignore[attr-defined]
        except KeyError:
            raise ParseError(f"no letter labelled {label!r} in this alphabet") from None

    def class_of(self, label: str) -> GroupElement:
        return self.letters[self.index(label)][1]

    def first_index_of_class(self, elem: GroupElement) -> int | None:
        """Index of the first letter whose class is ``elem``, if any."""
        for i, (_, cls) in enumerate(self.letters):
            if cls == elem:
                return i
        return None

    # -- sequence construction ------------------------------------------------

    def empty(self) -> "Sequence":
        return Sequence(self, (0,) * len(self.letters))

    def seq(self, exponents: Mapping[str, int]) -> "Sequence":
        """Sequence from a ``{label: exponent}`` mapping.

        >>> a = block_alphabet(GroupSpec(0, (3,)))
        >>> a.seq({"g": 3}).render()
        'g^3'
        """
        vec = [0] * len(self.letters)
        for label, e in exponents.items():
            if not isinstance(e, int) or e < 0:
                raise InvalidSpecError(f"exponents must be non-negative ints, got {label!r}: {e!r}")
            vec[self.index(label)] += e
        return Sequence(self, tuple(vec))

    def from_elements(self, elements: Iterable[GroupElement]) -> "Sequence":
        """Sequence mapping each element to the first letter of its class."""
        vec = [0] * len(self.letters)
        for elem in elements:
            i = self.first_index_of_class(elem)
            if i is None:
                raise IncompatibleElementsError(
                    f"alphabet has no letter of class {render_element(elem)}")
            vec[i] += 1
        return Sequence(self, tuple(vec))

    # -- canonical content ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "group": format_group_spec(self.spec),
            "letters": [[label, render_element(elem)] for label, elem in self.letters],
        }

    def content_hash(self) -> str:
        """Hex digest identifying the alphabet's canonical content."""
        return hashlib.sha256(_stable_dumps(self.to_json()).encode()).hexdigest()


def block_alphabet(source: GroupSpec | Iterable[GroupElement]) -> Alphabet:
    """Alphabet with one letter per class.

    Given a finite group spec, every element of the group becomes a letter;
    given an iterable of elements, exactly those classes do (duplicates are
    collapsed).  Labels are the canonical element renderings.

    >>> block_alphabet(GroupSpec(0, (2,))).labels
    ('0', 'g')
    """
    if isinstance(source, GroupSpec):
        if not source.is_finite():
            raise NotEnumerableError(
                f"{format_group_spec(source)} is infinite; pass the classes explicitly")
        elements: list[GroupElement] = list(source.elements())
    else:
        elements = list(source)
        if not elements:
            raise InvalidSpecError("cannot build an alphabet from no elements")
    spec = elements[0].spec
    unique = {elem.key(): elem for elem in elements}
    return Alphabet(spec, tuple((render_element(e), e) for e in unique.values()))


def krull_alphabet(source: GroupSpec | Iterable[GroupElement],
                   multiplicity: Mapping[GroupElement, int] | int = 1) -> Alphabet:
    """Alphabet where each class may carry several distinct letters.

    ``multiplicity`` is either one int applied to every class or a mapping
    from class to letter count (classes absent from the mapping get 1).
    Copies of a class ``g`` are labelled ``render(g)#1``, ``render(g)#2``, ...;
    a class with multiplicity 1 keeps the plain label.

    >>> spec = GroupSpec(0, (2,))
    >>> g = spec.element([1])
    >>> krull_alphabet([g], {g: 2}).labels
    ('g#1', 'g#2')
    """
    base = block_alphabet(source)
    letters: list[tuple[str, GroupElement]] = []
    for label, elem in base.letters:
        m = multiplicity if isinstance(multiplicity, int) else multiplicity.get(elem, 1)
        if m < 1:
            raise InvalidSpecError(f"letter multiplicity must be >= 1, got {m} for {label}")
        if m == 1:
            letters.append((label, elem))
        else:
            letters.extend((f"{label}#{i}", elem) for i in range(1, m + 1))
    return Alphabet(base.spec, tuple(letters))


@dataclass(frozen=True)
class Sequence:
    """A finite multiset of alphabet letters, stored as an exponent vector."""

    alphabet: Alphabet
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.exponents) != len(self.alphabet):
            raise InvalidSpecError(
                f"expected {len(self.alphabet)} exponents, got {len(self.exponents)}")
        for e in self.exponents:
            if not isinstance(e, int) or e < 0:
                raise InvalidSpecError(f"exponents must be non-negative ints, got {e!r}")

    def _check(self, other: "Sequence") -> None:
        if not isinstance(other, Sequence):
            raise IncompatibleElementsError(f"cannot combine sequence with {type(other).__name__}")
        if other.alphabet != self.alphabet:
            raise IncompatibleElementsError("sequences over different alphabets cannot be combined")

    # -- multiset algebra -------------------------------------------------------

    def __mul__(self, other: "Sequence") -> "Sequence":
        self._check(other)
        return Sequence(self.alphabet, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> "Sequence":
        if not isinstance(k, int) or k < 0:
            raise InvalidSpecError(f"sequence powers must be non-negative ints, got {k!r}")
        return Sequence(self.alphabet, tuple(e * k for e in self.exponents))

    def divides(self, other: "Sequence") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other: "Sequence") -> "Sequence":
        self._check(other)
        if not other.divides(self):
            raise NonDivisorError(f"{other.render()} does not divide {self.render()}")
        return Sequence(self.alphabet, tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __neg__(self) -> "Sequence":
        """Letterwise negation, mapping each class to its first negative letter."""
        vec = [0] * len(self.alphabet)
        for i, e in enumerate(self.exponents):
            if not e:
                continue
            j = self.alphabet.first_index_of_class(-self.alphabet.letters[i][1])
            if j is None:
                raise InvalidSpecError(
                    f"alphabet has no letter of class "
                    f"{render_element(-self.alphabet.letters[i][1])}")
            vec[j] += e
        return Sequence(self.alphabet, tuple(vec))

    # -- queries -----------------------------------------------------------------

    def __len__(self) -> int:
        return sum(self.exponents)

    def is_empty(self) -> bool:
        return not any(self.exponents)

    def class_sum(self) -> GroupElement:
        total = self.alphabet.spec.zero()
        for e, (_, elem) in zip(self.exponents, self.alphabet.letters):
            if e:
                total = total + e * elem
        return total

    def support(self) -> tuple[str, ...]:
        """Labels occurring with positive exponent."""
        return tuple(label for e, (label, _) in zip(self.exponents, self.alphabet.letters) if e)

    def subsequences(self) -> Iterator["Sequence"]:
        """All divisors, in lexicographic exponent order (includes self and empty)."""
        for vec in itertools.product(*(range(e + 1) for e in self.exponents)):
            yield Sequence(self.alphabet, vec)

    # -- textual form --------------------------------------------------------------

    def render(self) -> str:
        """Canonical text like ``g^3·(-g)·2g``; the empty sequence is ``1``.

        >>> a = block_alphabet([GroupSpec(1, ()).element([1]), GroupSpec(1, ()).element([-1])])
        >>> a.seq({"g": 2, "-g": 1}).render()
        '(-g)·g^2'
        """
        parts = []
        for e, (label, _) in zip(self.exponents, self.alphabet.letters):
            if not e:
                continue
            shown = f"({label})" if label.startswith("-") else label
            parts.append(shown if e == 1 else f"{shown}^{e}")
        return "·".join(parts) if parts else "1"

    def to_json(self) -> dict:
        return {"alphabet": self.alphabet.content_hash(), "exponents": list(self.exponents)}


_TERM_SEP = re.compile(r"[\s·*]+")


def parse_sequence(alphabet: Alphabet, text: str) -> Sequence:
    """Parse a sequence like ``"g^3·(-g) 2g"`` over ``alphabet``.

    Terms are separated by whitespace, ``·``, or ``*`` and have the form
    ``base`` or ``base^INT``.  A base resolves, in order: exact letter label;
    label after removing one layer of parentheses; basis alias (``e1``…``er``
    for the coordinate generators, ``e0`` for their sum); element expression
    (then the first letter of that class).  ``"1"`` denotes the empty
    sequence.

    >>> a = block_alphabet(GroupSpec(0, (2, 2)))
    >>> parse_sequence(a, "e1·e2·e0").render()
    '(0,1)·(1,0)·(1,1)'
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty sequence description")
    if stripped == "1":
        return alphabet.empty()
    vec = [0] * len(alphabet)
    for term in _TERM_SEP.split(stripped):
        base, exp = term, 1
        if "^" in term:
            head, _, tail = term.rpartition("^")
            if tail.isdigit() and head:
                base, exp = head, int(tail)
        vec[_resolve_base(alphabet, base)] += exp
    return Sequence(alphabet, tuple(vec))


def _resolve_base(alphabet: Alphabet, base: str) -> int:
    index = alphabet._index  # type: ignore[attr-defined]
    if base in index:
        return index[base]
    inner = base[1:-1] if base.startswith("(") and base.endswith(")") else None
    if inner in index:
        return index[inner]
    elem = _alias_element(alphabet.spec, base)
    if elem is None:
        for candidate in (base, inner):
            if candidate is None:
                continue
            try:
                elem = parse_element(alphabet.spec, candidate)
                break
            except ParseError:
                continue
    if elem is None:
        raise ParseError(f"cannot resolve term {base!r} in this alphabet")
    i = alphabet.first_index_of_class(elem)
    if i is None:
        raise ParseError(
            f"alphabet has no letter of class {render_element(elem)} (from term {base!r})")
    return i


_ALIAS_RE = re.compile(r"^e(\d+)$")


def _alias_element(spec: GroupSpec, base: str) -> GroupElement | None:
    m = _ALIAS_RE.match(base)
    if not m:
        return None
    i = int(m.group(1))
    if i > spec.rank:
        raise ParseError(f"alias {base!r} exceeds the {spec.rank} coordinates of "
                         f"{format_group_spec(spec)}")
    basis = spec.standard_basis(with_sum=True)
    return basis[i] if i else basis[0]
