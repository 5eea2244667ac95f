"""Concrete elements with predicted catenary or tame values, plus verifiers.

Each constructor returns a :class:`Witness`: an element (and, for tame
witnesses, a distinguished atom) together with the value its construction
predicts.  :func:`verify_witness` recomputes the value with the generic
machinery and reports agreement.  Constructions whose factorization sets are
too large to enumerate carry enough structure (a known factorization and the
expected unique factorization through the atom) for
:func:`verify_tame_unique_route` to certify the value without enumeration.
"""
from __future__ import annotations

import functools
import operator
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from .errors import (
    InvalidInstanceError,
    InvariantViolationError,
    SizeLimitError,
    NotZeroSumError,
    UnsupportedGroupError,
)
from .factorize import (
    FactorizationSet,
    factorization_count,
    catenary,
    enumerate_atoms,
    is_atom,
    min_max_lengths,
)
from .group import GroupElement, GroupSpec, format_group_spec
from .sequence import Alphabet, Sequence, block_alphabet, krull_alphabet
from .tame import tame

__all__ = [
    "Witness",
    "WitnessReport",
    "verify_witness",
    "verify_tame_unique_route",
    "catenary_two_witness",
    "integer_catenary_witnesses",
    "reflection_tame_witness",
    "tame_two_case_witness",
    "rank3_tame_two_witness",
    "two_primes_witness",
    "two_group_tame_family",
    "plus_minus_alphabet",
    "plus_minus_factorizations",
]

#: Cap on enumerated factorizations while verifying a witness.  Verification
#: builds a dense pairwise-distance matrix, so the cap is far below the
#: general enumeration default; tame witnesses past the cap fall back to
#: :func:`verify_tame_unique_route`.
VERIFY_MAX_FACTORIZATIONS = 2_000


@dataclass(frozen=True)
class Witness:
    """An element whose catenary or tame value the construction predicts.

    ``kind`` is ``"catenary"`` (predicted = catenary degree of ``element``)
    or ``"tame"`` (predicted = tame degree of ``element`` at ``atom``).
    ``base`` and ``route``, when present, are factorizations of ``element``
    given as tuples of atoms: ``base`` avoids ``atom`` and shares no atom
    with ``route``, while ``route`` is expected to be the only factorization
    containing ``atom``.
    """

    name: str
    claim: str
    kind: str
    alphabet: Alphabet
    element: Sequence
    predicted: int
    atom: Sequence | None = None
    base: tuple[Sequence, ...] | None = None
    route: tuple[Sequence, ...] | None = None
    extras: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in ("catenary", "tame"):
            raise InvalidInstanceError(f"unknown witness kind {self.kind!r}")
        if self.kind == "tame" and self.atom is None:
            raise InvalidInstanceError("tame witnesses need a distinguished atom")


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of checking one witness."""

    name: str
    ok: bool
    predicted: int
    computed: int | None
    method: str
    detail: str = ""

    def summary(self) -> str:
        status = "ok" if self.ok else "MISMATCH"
        shown = "?" if self.computed is None else self.computed
        tail = f" ({self.detail})" if self.detail else ""
        return (f"{self.name}: predicted {self.predicted}, "
                f"computed {shown} via {self.method} -> {status}{tail}")


def _product(alphabet: Alphabet, parts: tuple[Sequence, ...]) -> Sequence:
    return functools.reduce(operator.mul, parts, alphabet.empty())


def verify_witness(witness: Witness, *,
                   max_factorizations: int | None = VERIFY_MAX_FACTORIZATIONS,
                   ) -> WitnessReport:
    """Recompute a witness's value and compare with its prediction.

    Tame witnesses whose factorization sets exceed ``max_factorizations``
    are checked with :func:`verify_tame_unique_route` instead, provided they
    carry ``base`` and ``route`` factorizations.
    """
    name, predicted = witness.name, witness.predicted
    expected_count = witness.extras.get("factorization_count")
    if witness.kind == "catenary":
        computed = catenary(witness.element, max_factorizations=max_factorizations)
        detail = ""
        ok = computed == predicted
        if ok and expected_count is not None:
            count = factorization_count(witness.element)
            if count != expected_count:
                ok = False
                detail = f"expected {expected_count} factorizations, found {count}"
        return WitnessReport(name, ok, predicted, computed, "enumerate", detail)
    try:
        computed = tame(witness.element, witness.atom,
                        max_factorizations=max_factorizations)
    except SizeLimitError:
        if witness.base is None or witness.route is None:
            raise
        return verify_tame_unique_route(witness)
    ok = computed == predicted
    detail = ""
    if ok and expected_count is not None:
        count = factorization_count(witness.element)
        if count != expected_count:
            ok = False
            detail = f"expected {expected_count} factorizations, found {count}"
    return WitnessReport(name, ok, predicted, computed, "enumerate", detail)


def verify_tame_unique_route(witness: Witness) -> WitnessReport:
    """Certify a tame witness without enumerating its factorizations.

    Write ``A`` for the element and ``u`` for the atom.  If ``route`` is the
    only factorization of ``A`` containing ``u``, every other factorization
    sits at distance at most ``len(route)`` from it (distances never exceed
    the longer length), and ``base`` — sharing no atom with ``route`` —
    realizes exactly that distance.  The tame value is then ``len(route)``.
    The uniqueness, the length bound and the disjointness are all checked
    here; only the factorization *count* of ``A / u`` is computed, never the
    full factorization set of ``A``.
    """
    name, predicted = witness.name, witness.predicted

    def fail(detail: str) -> WitnessReport:
        return WitnessReport(name, False, predicted, None, "unique-route", detail)

    u, base, route = witness.atom, witness.base, witness.route
    if u is None or base is None or route is None:
        raise InvalidInstanceError(
            f"witness {name!r} lacks the atom/base/route data this check needs")
    if not is_atom(u):
        return fail("distinguished sequence is not an atom")
    for z, label in ((base, "base"), (route, "route")):
        for a in z:
            if not is_atom(a):
                return fail(f"{label} contains the non-atom {a.render()}")
        if _product(witness.alphabet, z) != witness.element:
            return fail(f"{label} does not multiply out to the element")
    if u not in route:
        return fail("route avoids the distinguished atom")
    if Counter(base) & Counter(route):
        return fail("base and route share an atom")
    leftover = witness.element / u
    if factorization_count(leftover) != 1:
        return fail("element / atom factors in more than one way")
    longest = min_max_lengths(witness.element)[1]
    if longest > len(route):
        return fail(f"a factorization of length {longest} exceeds the route")
    computed = len(route)
    return WitnessReport(name, computed == predicted, predicted, computed,
                         "unique-route")


# ---------------------------------------------------------------------------
# catenary witnesses
# ---------------------------------------------------------------------------

def catenary_two_witness(spec: GroupSpec) -> Witness:
    """An element with catenary degree exactly two over ``spec``.

    Three constructions cover every finite group that admits one: a class of
    order ``n >= 4`` yields ``g^n . ((n-2)g) . (2g)``; two independent classes
    of order three yield ``(e1+e2)^4 . e1^2 . e2^2``; three independent
    classes of order two yield ``e1 e2 e3 (e1+e2+e3) (e1+e2)^2``.  Each has
    exactly two factorizations at distance two.
    """
    torsion = spec.torsion
    if torsion and torsion[-1] >= 4:
        n = torsion[-1]
        coords = [0] * spec.rank
        coords[-1] = 1
        g = spec.element(coords)
        elems = [g] * n + [(n - 2) * g, 2 * g]
        note = f"a class of order {n}"
    elif sum(1 for n in torsion if n % 3 == 0) >= 2:
        idx = [i for i, n in enumerate(torsion) if n % 3 == 0][:2]
        e1, e2 = (_torsion_generator(spec, i, order=3) for i in idx)
        s = e1 + e2
        elems = [s] * 4 + [e1] * 2 + [e2] * 2
        note = "two independent classes of order three"
    elif sum(1 for n in torsion if n % 2 == 0) >= 3:
        idx = [i for i, n in enumerate(torsion) if n % 2 == 0][:3]
        e1, e2, e3 = (_torsion_generator(spec, i, order=2) for i in idx)
        elems = [e1, e2, e3, e1 + e2 + e3, e1 + e2, e1 + e2]
        note = "three independent classes of order two"
    else:
        raise UnsupportedGroupError(
            f"{format_group_spec(spec)} admits no catenary-two construction")
    alphabet = block_alphabet(elems)
    element = alphabet.from_elements(elems)
    return Witness(
        name=f"catenary-two-{format_group_spec(spec)}",
        claim=(f"over {format_group_spec(spec)}, {note} gives an element with "
               "exactly two factorizations at distance two"),
        kind="catenary",
        alphabet=alphabet,
        element=element,
        predicted=2,
        extras={"factorization_count": 2},
    )


def _torsion_generator(spec: GroupSpec, index: int, *, order: int) -> GroupElement:
    """An element of the given order inside torsion component ``index``."""
    n = spec.torsion[index]
    if n % order:
        raise InvalidInstanceError(
            f"component of order {n} has no element of order {order}")
    coords = [0] * spec.rank
    coords[spec.free_rank + index] = n // order
    return spec.element(coords)


def integer_catenary_witnesses(n: int) -> list[Witness]:
    """Two catenary witnesses over the infinite cyclic group.

    The chain element ``g^n (-g)^n (ng) (-ng)`` has exactly two
    factorizations — ``[g^n(-ng)] [(-g)^n(ng)]`` and ``[g(-g)]^n
    [(ng)(-ng)]`` — at distance ``n + 1``, so its catenary degree is
    ``n + 1``: over this group the catenary degree is unbounded.  The fixed
    element ``(-g)^2 (-4g)^2 (2g)^2 (3g)^2`` has exactly three
    factorizations, pairwise at distance two, so its catenary degree is two.
    """
    if n < 2:
        raise InvalidInstanceError(f"the chain construction needs n >= 2, got {n}")
    spec = GroupSpec(1)
    g = spec.element([1])
    chain_elems = [g] * n + [-g] * n + [n * g, -n * g]
    chain_alpha = block_alphabet(chain_elems)
    chain = Witness(
        name=f"catenary-chain-integers-n{n}",
        claim=(f"g^{n} (-g)^{n} ({n}g) (-{n}g) over the integers has two "
               f"factorizations at distance {n + 1}"),
        kind="catenary",
        alphabet=chain_alpha,
        element=chain_alpha.from_elements(chain_elems),
        predicted=n + 1,
        extras={"factorization_count": 2},
    )
    window_elems = [-g, -g, -4 * g, -4 * g, 2 * g, 2 * g, 3 * g, 3 * g]
    window_alpha = block_alphabet(window_elems)
    window = Witness(
        name="catenary-two-integers",
        claim=("(-g)^2 (-4g)^2 (2g)^2 (3g)^2 over the integers has three "
               "factorizations, pairwise at distance two"),
        kind="catenary",
        alphabet=window_alpha,
        element=window_alpha.from_elements(window_elems),
        predicted=2,
        extras={"factorization_count": 3},
    )
    return [chain, window]


# ---------------------------------------------------------------------------
# tame witnesses
# ---------------------------------------------------------------------------

def reflection_tame_witness(spec: GroupSpec, m: int) -> Witness:
    """For an atom ``U`` of length ``m >= 3``, ``U . (-U)`` is tame degree
    ``m`` at ``U``: the factorizations avoiding ``U`` must be rebuilt from
    scratch, replacing all ``m`` letters of ``U`` at once.
    """
    if m < 3:
        raise InvalidInstanceError(f"the reflection construction needs m >= 3, got {m}")
    u_elems = _standard_atom_elements(spec, m)
    elems = list(u_elems) + [-x for x in u_elems]
    alphabet = block_alphabet(elems)
    u = alphabet.from_elements(u_elems)
    element = u * (-u)
    return Witness(
        name=f"reflection-tame-{format_group_spec(spec)}-m{m}",
        claim=(f"over {format_group_spec(spec)}, an atom U of length {m} times "
               f"its reflection -U is tame degree {m} at U"),
        kind="tame",
        alphabet=alphabet,
        element=element,
        predicted=m,
        atom=u,
    )


def _standard_atom_elements(spec: GroupSpec, m: int) -> list[GroupElement]:
    """A canonical atom of length ``m`` over ``spec`` as a list of elements.

    Uses ``g^(m-1) . ((n-m+1)g)`` inside a cyclic component of order
    ``n >= m`` when one exists, else ``e1 ... e(m-1) . (-(e1+...+e(m-1)))``
    over ``m - 1`` independent components, else the first enumerated atom of
    length ``m``.
    """
    torsion = spec.torsion
    if torsion and torsion[-1] >= m:
        n = torsion[-1]
        coords = [0] * spec.rank
        coords[-1] = 1
        g = spec.element(coords)
        return [g] * (m - 1) + [(n - m + 1) * g]
    if m - 1 <= len(torsion):
        basis = list(spec.standard_basis())[-(m - 1):]
        total = functools.reduce(operator.add, basis)
        return basis + [-total]
    if not spec.is_finite():
        raise UnsupportedGroupError(
            f"no canned atom of length {m} over {format_group_spec(spec)}")
    enum = enumerate_atoms(block_alphabet(spec))
    for atom in enum.atoms:
        if len(atom) == m:
            return list(_expand_elements(atom))
    raise InvalidInstanceError(
        f"{format_group_spec(spec)} has no atom of length {m} "
        f"(longest is {enum.davenport})")


def _expand_elements(s: Sequence) -> list[GroupElement]:
    out: list[GroupElement] = []
    for (label, elem), mult in zip(s.alphabet.letters, s.exponents):
        out.extend([elem] * mult)
    return out


def tame_two_case_witness(case: str) -> Witness:
    """Minimal elements of tame degree exactly two, one per group shape.

    ``"c6"``: over a cyclic group of order six, ``A = g^6 . (4g)(2g)``;
    ``"c3c3"``: over two independent order-three classes,
    ``A = (e1+e2)^3 . (e1+e2) e1^2 e2^2``; ``"z"``: over the integers,
    ``A = (2g)(-g)^2 . (-3g)(2g)g``.  Each ``A`` is a product of two atoms
    ``U . V`` with exactly one other factorization, at distance two from it.
    """
    if case == "c6":
        spec = GroupSpec(0, (6,))
        g = spec.element([1])
        u_elems = [g] * 6
        v_elems = [4 * g, 2 * g]
    elif case == "c3c3":
        spec = GroupSpec(0, (3, 3))
        e1, e2 = spec.standard_basis()
        s = e1 + e2
        u_elems = [s] * 3
        v_elems = [s, e1, e1, e2, e2]
    elif case == "z":
        spec = GroupSpec(1)
        g = spec.element([1])
        u_elems = [2 * g, -g, -g]
        v_elems = [-3 * g, 2 * g, g]
    else:
        raise InvalidInstanceError(f"unknown tame-two case {case!r}; "
                                   "expected 'c6', 'c3c3' or 'z'")
    alphabet = block_alphabet(u_elems + v_elems)
    u = alphabet.from_elements(u_elems)
    element = u * alphabet.from_elements(v_elems)
    return Witness(
        name=f"tame-two-{case}",
        claim=(f"over {format_group_spec(spec)}, a product of two atoms with "
               "one alternative factorization is tame degree two"),
        kind="tame",
        alphabet=alphabet,
        element=element,
        predicted=2,
        atom=u,
        extras={"factorization_count": 2},
    )


def rank3_tame_two_witness() -> Witness:
    """Over three independent order-two classes: ``U = e0 e1 e2 e3`` with
    ``e0 = e1+e2+e3``, and ``A = U . (e1+e2)^2`` is tame degree two at ``U``.
    """
    spec = GroupSpec(0, (2, 2, 2))
    e1, e2, e3 = spec.standard_basis()
    e0 = e1 + e2 + e3
    s = e1 + e2
    u_elems = [e0, e1, e2, e3]
    alphabet = block_alphabet(u_elems + [s])
    u = alphabet.from_elements(u_elems)
    element = u * alphabet.from_elements([s, s])
    return Witness(
        name="tame-two-rank-three",
        claim=("over C2^3, U = e0 e1 e2 e3 times (e1+e2)^2 has exactly one "
               "factorization avoiding U, at distance two"),
        kind="tame",
        alphabet=alphabet,
        element=element,
        predicted=2,
        atom=u,
        extras={"factorization_count": 2},
    )


def two_primes_witness(n: int) -> Witness:
    """Two letters ``g#1, g#2`` in one class of order ``n``: with
    ``u = (g#1)^n``, the element ``a = (g#1)^n (g#2)^n`` is tame degree two
    at ``u`` — any factorization of ``a`` can reach one through ``u`` by
    swapping a single pair of atoms.
    """
    if n < 2:
        raise InvalidInstanceError(f"the two-letter construction needs n >= 2, got {n}")
    spec = GroupSpec(0, (n,))
    g = spec.element([1])
    alphabet = krull_alphabet([g], {g: 2})
    u = alphabet.seq({"g#1": n})
    element = alphabet.seq({"g#1": n, "g#2": n})
    return Witness(
        name=f"two-primes-n{n}",
        claim=(f"with two letters in one class of order {n}, "
               f"(g#1)^{n} (g#2)^{n} is tame degree two at (g#1)^{n}"),
        kind="tame",
        alphabet=alphabet,
        element=element,
        predicted=2,
        atom=u,
    )


# ---------------------------------------------------------------------------
# the two-group tame family
# ---------------------------------------------------------------------------

def two_group_tame_family(variant: str, r: int, nu: int) -> Witness:
    """Tame witnesses over ``r`` independent classes of order two.

    Writing ``e0 = e1 + ... + er``, each variant assembles an element ``A``
    as a product of atoms ``V0 . V1 ... `` (the ``base``), names an atom
    ``U`` of length ``r + 1`` or ``r``, and predicts the tame degree of
    ``A`` at ``U``.  The factorization through ``U`` (the ``route``) pads
    ``U`` with the atom ``W = (e1+...+e_nu) e1 ... e_nu`` and squares
    ``ej^2``; its length is the predicted value.

    ===========  =====================  ==============  =================
    variant      constraint on ``r``    ``nu`` range    predicted value
    ===========  =====================  ==============  =================
    ``even``     even, ``r >= 4``       ``1..r``        ``2 - nu + r^2/2``
    ``odd``      odd, ``r >= 5``        ``1..r-1``      ``2 - nu + r(r-1)/2``
    ``chain2``   ``r = 2 mod 4, >= 6``  ``1..r-2``      ``3 - nu + r(r-2)/2``
    ``chain0``   ``r = 0 mod 4``        ``1..r-2``      ``2 - nu + r(r-2)/2``
    ===========  =====================  ==============  =================
    """
    builders = {"even": _family_even, "odd": _family_odd,
                "chain2": _family_chain2, "chain0": _family_chain0}
    if variant not in builders:
        raise InvalidInstanceError(
            f"unknown family variant {variant!r}; expected one of {sorted(builders)}")
    spec = GroupSpec(0, (2,) * max(r, 0))
    e = {i: b for i, b in enumerate(spec.standard_basis(), start=1)}
    u_elems, base_parts, route_parts, predicted = builders[variant](r, nu, e)

    elems = [x for part in base_parts + route_parts for x in part]
    alphabet = block_alphabet(elems)
    base = tuple(alphabet.from_elements(part) for part in base_parts)
    route = tuple(alphabet.from_elements(part) for part in route_parts)
    u = alphabet.from_elements(u_elems)
    element = _product(alphabet, base)
    if _product(alphabet, route) != element:
        raise InvariantViolationError(
            f"two-group family {variant} r={r} nu={nu}: base and route "
            "multiply out to different elements")
    for part in base + route:
        if not part.class_sum().is_zero():
            raise InvariantViolationError(
                f"two-group family {variant} r={r} nu={nu}: "
                f"{part.render()} is not zero-sum")
    return Witness(
        name=f"two-group-{variant}-r{r}-nu{nu}",
        claim=(f"over C2^{r}, the {variant} member with nu={nu} is tame "
               f"degree {predicted} at its long atom"),
        kind="tame",
        alphabet=alphabet,
        element=element,
        predicted=predicted,
        atom=u,
        base=base,
        route=route,
    )


_Family = tuple[list[GroupElement], list[list[GroupElement]],
                list[list[GroupElement]], int]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidInstanceError(message)


def _family_common(r: int, nu: int, e: Mapping[int, GroupElement]):
    e0 = functools.reduce(operator.add, (e[j] for j in range(1, r + 1)))
    s = functools.reduce(operator.add, (e[j] for j in range(1, nu + 1)))
    w_part = [s] + [e[j] for j in range(1, nu + 1)]
    squares = {j: [e[j], e[j]] for j in range(1, r + 1)}
    return e0, s, w_part, squares


def _family_even(r: int, nu: int, e: Mapping[int, GroupElement]) -> _Family:
    _require(r >= 4 and r % 2 == 0, f"the even variant needs even r >= 4, got {r}")
    _require(1 <= nu <= r, f"nu must lie in 1..{r}, got {nu}")
    e0, s, w_part, squares = _family_common(r, nu, e)
    u_elems = [e0] + [e0 + e[j] for j in range(1, r + 1)]
    base = [[e0, s] + [e[j] for j in range(nu + 1, r + 1)]]
    base += [[e0 + e[i]] + [e[j] for j in range(1, r + 1) if j != i]
             for i in range(1, r + 1)]
    route = [u_elems, w_part]
    route += [squares[j] for j in range(1, nu + 1) for _ in range((r - 2) // 2)]
    route += [squares[j] for j in range(nu + 1, r + 1) for _ in range(r // 2)]
    return u_elems, base, route, 2 - nu + r * r // 2


def _family_odd(r: int, nu: int, e: Mapping[int, GroupElement]) -> _Family:
    _require(r >= 5 and r % 2 == 1, f"the odd variant needs odd r >= 5, got {r}")
    _require(1 <= nu <= r - 1, f"nu must lie in 1..{r - 1}, got {nu}")
    e0, s, w_part, squares = _family_common(r, nu, e)
    u_elems = [e0 + e[j] for j in range(1, r + 1)]
    base = [[e0 + e[r], s] + [e[j] for j in range(nu + 1, r)]]
    base += [[e0 + e[i]] + [e[j] for j in range(1, r + 1) if j != i]
             for i in range(1, r)]
    route = [u_elems, w_part]
    route += [squares[j] for j in range(1, nu + 1) for _ in range((r - 3) // 2)]
    route += [squares[j] for j in range(nu + 1, r + 1) for _ in range((r - 1) // 2)]
    return u_elems, base, route, 2 - nu + r * (r - 1) // 2


def _family_chain2(r: int, nu: int, e: Mapping[int, GroupElement]) -> _Family:
    _require(r >= 6 and r % 4 == 2, f"the chain2 variant needs r = 2 mod 4, r >= 6, got {r}")
    _require(1 <= nu <= r - 2, f"nu must lie in 1..{r - 2}, got {nu}")
    e0, s, w_part, squares = _family_common(r, nu, e)
    # chain classes walk the cycle 1-2-...-(r-1)-1; the r-th class never joins
    chain = {i: e0 + e[i] + e[i + 1] for i in range(1, r - 1)}
    chain[r - 1] = e0 + e[r - 1] + e[1]
    u_elems = [e0] + [chain[i] for i in range(1, r)]
    base = [[e0, s] + [e[j] for j in range(nu + 1, r + 1)]]
    base += [[chain[i]] + [e[j] for j in range(1, r + 1) if j not in (i, i + 1)]
             for i in range(1, r - 1)]
    base += [[chain[r - 1]] + [e[j] for j in range(1, r + 1) if j not in (1, r - 1)]]
    route = [u_elems, w_part]
    route += [squares[j] for j in range(1, nu + 1) for _ in range((r - 4) // 2)]
    route += [squares[j] for j in range(nu + 1, r) for _ in range((r - 2) // 2)]
    route += [squares[r] for _ in range(r // 2)]
    return u_elems, base, route, 3 - nu + r * (r - 2) // 2


def _family_chain0(r: int, nu: int, e: Mapping[int, GroupElement]) -> _Family:
    _require(r >= 4 and r % 4 == 0, f"the chain0 variant needs r = 0 mod 4, got {r}")
    _require(1 <= nu <= r - 2, f"nu must lie in 1..{r - 2}, got {nu}")
    e0, s, w_part, squares = _family_common(r, nu, e)
    # chain classes walk the full cycle 1-2-...-r-1
    nxt = lambda i: 1 if i == r else i + 1
    chain = {i: e0 + e[i] + e[nxt(i)] for i in range(1, r + 1)}
    u_elems = [chain[i] for i in range(1, r + 1)]
    base = [[chain[r - 1], s] + [e[j] for j in range(nu + 1, r - 1)]]
    base += [[chain[i]] + [e[j] for j in range(1, r + 1) if j not in (i, nxt(i))]
             for i in range(1, r + 1) if i != r - 1]
    route = [u_elems, w_part]
    route += [squares[j] for j in range(1, nu + 1) for _ in range((r - 4) // 2)]
    route += [squares[j] for j in range(nu + 1, r + 1) for _ in range((r - 2) // 2)]
    return u_elems, base, route, 2 - nu + r * (r - 2) // 2


# ---------------------------------------------------------------------------
# the plus/minus alphabet and its closed-form factorizations
# ---------------------------------------------------------------------------

def plus_minus_alphabet(d: int) -> tuple[Alphabet, frozenset[int]]:
    """Two letters ``e`` and ``-e`` over a cyclic class of order ``d``,
    together with the complete set of nonzero tame degrees, ``{d}``.

    For ``d = 2`` the two letters share one class; the alphabet is then a
    doubled class rather than a pair of distinct classes, and the tame-set
    statement still holds.
    """
    if d < 2:
        raise InvalidInstanceError(f"the plus/minus alphabet needs d >= 2, got {d}")
    spec = GroupSpec(0, (d,))
    g = spec.element([1])
    alphabet = Alphabet(spec, (("e", g), ("-e", -g)))
    return alphabet, frozenset({d})


def plus_minus_factorizations(s: int, t: int, d: int) -> FactorizationSet:
    """All factorizations of ``e^s (-e)^t`` over the plus/minus alphabet,
    built from the closed form rather than by search.

    The atoms available are ``E = e^d``, ``F = (-e)^d`` and ``P = e(-e)``;
    the element is zero-sum iff ``s = t (mod d)``, and with ``s0 = s mod d``
    its factorizations are exactly ``E^(a-j) F^(b-j) P^(s0+jd)`` for
    ``j = 0..min(a, b)`` where ``a = (s - s0)/d`` and ``b = (t - s0)/d``.
    """
    if s < 0 or t < 0:
        raise InvalidInstanceError(f"letter counts must be non-negative, got {s}, {t}")
    alphabet, _ = plus_minus_alphabet(d)
    vec = [0, 0]
    vec[alphabet.index("e")] = s
    vec[alphabet.index("-e")] = t
    element = Sequence(alphabet, tuple(vec))
    if (s - t) % d:
        raise NotZeroSumError(
            f"e^{s} (-e)^{t} sums to {(s - t) % d} times the generator, not zero")
    if s == 0 and t == 0:
        return FactorizationSet(element, (), ((),))
    s0 = s % d
    a, b = (s - s0) // d, (t - s0) // d
    full = alphabet.seq({"e": d})
    anti = alphabet.seq({"-e": d})
    pair = alphabet.seq({"e": 1, "-e": 1})
    rows = [(full, a - j, anti, b - j, pair, s0 + j * d)
            for j in range(min(a, b) + 1)]
    used: list[Sequence] = sorted(
        {atom for row in rows for atom, mult in zip(row[::2], row[1::2]) if mult},
        key=lambda seq: seq.exponents)
    index = {atom: i for i, atom in enumerate(used)}
    vectors = []
    for row in rows:
        out = [0] * len(used)
        for atom, mult in zip(row[::2], row[1::2]):
            if mult:
                out[index[atom]] = mult
        vectors.append(tuple(out))
    return FactorizationSet(element, tuple(used), tuple(vectors))
