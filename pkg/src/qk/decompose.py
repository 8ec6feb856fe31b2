"""Irreducible and primary decomposition, uniqueness analysis, and the
distributivity (arithmetic) check on the ideal lattice.

A decomposition presents an ideal as the intersection of components.  A
primary decomposition is minimal when the component radicals are pairwise
distinct and no component contains the intersection of the others; both
conditions are reachable from any decomposition by merging equal-radical
components (their intersection stays primary with the shared radical) and
dropping redundant ones, which is what minimize does.

"Arithmetic" means the ideal lattice is distributive.  The irreducible and
strongly irreducible ideals coincide exactly then, and the equivalence
check verifies both directions on the given instance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteQuantale, bits
from .errors import (
    InvalidDecomposition,
    NotDecomposable,
    NotPrimary,
    NotProper,
    QuantaleError,
)
from .ideals import (
    Ideal,
    enumerate_ideals,
    join_ideals,
    meet_ideals,
    principal,
    require_commutative,
    residual,
    whole_ideal,
)
from .classify import (
    is_primary,
    is_prime,
    minimal_primes_over,
    primes_over,
    radical,
)


def _meet_all(q: FiniteQuantale, components) -> Ideal:
    m = q.full
    for c in components:
        m &= c.members
    return Ideal(q, m)


def _irreducible_witness(i: Ideal, ideals) -> tuple[Ideal, Ideal] | None:
    """A pair of strictly larger ideals meeting exactly to i, if any."""
    for a in ideals:
        if not i < a:
            continue
        for b in ideals:
            if i < b and a.members & b.members == i.members:
                return (a, b)
    return None


def _strongly_irreducible_witness(i: Ideal, ideals) -> tuple[Ideal, Ideal] | None:
    """A pair whose meet lies inside i while neither factor does."""
    for a in ideals:
        if a <= i:
            continue
        for b in ideals:
            if b <= i:
                continue
            if (a.members & b.members) & ~i.members == 0:
                return (a, b)
    return None


def is_irreducible(i: Ideal) -> bool:
    """No two strictly larger ideals intersect exactly to i."""
    require_commutative(i.carrier)
    return _irreducible_witness(i, enumerate_ideals(i.carrier)) is None


def is_strongly_irreducible(i: Ideal) -> bool:
    """Any intersection landing inside i has a factor inside i."""
    require_commutative(i.carrier)
    return _strongly_irreducible_witness(i, enumerate_ideals(i.carrier)) is None


def strongly_irreducible_elementwise(i: Ideal) -> bool:
    """Same test over principal ideals only; agrees with the ideal-wise
    form and is checked against it by the verification suites."""
    q = i.carrier
    require_commutative(q)
    for a in range(q.n):
        if q.down[a] & ~i.members == 0:
            continue
        for b in range(q.n):
            if q.down[b] & ~i.members == 0:
                continue
            if (q.down[a] & q.down[b]) & ~i.members == 0:
                return False
    return True


@dataclass(frozen=True)
class Decomposition:
    """target presented as the intersection of components.

    kind is "primary" or "irreducible"; radicals[k] is the radical of
    components[k] (empty tuple for irreducible decompositions); minimal
    records whether the minimality conditions were established.
    """

    target: Ideal
    kind: str
    components: tuple[Ideal, ...]
    radicals: tuple[Ideal, ...]
    minimal: bool

    def __repr__(self) -> str:
        parts = ", ".join(c.name for c in self.components)
        return f"<Decomposition {self.target.name} = {parts} ({self.kind})>"


def validate_decomposition(d: Decomposition) -> None:
    """Raise InvalidDecomposition unless the components really intersect
    to the target and (for primary kind) are primary."""
    q = d.target.carrier
    if not d.components:
        raise InvalidDecomposition("a decomposition needs at least one component")
    if _meet_all(q, d.components) != d.target:
        raise InvalidDecomposition("components do not intersect to the target")
    if d.kind == "primary":
        for c in d.components:
            if not is_primary(c):
                raise InvalidDecomposition(f"component {c.name} is not primary")


def _irredundant(q: FiniteQuantale, target: Ideal, components: list[Ideal]) -> list[Ideal]:
    """Drop components whose removal keeps the intersection, scanning in
    ascending size order."""
    sel = sorted(components, key=lambda c: (c.size, c.apex))
    k = 0
    while k < len(sel):
        rest = sel[:k] + sel[k + 1 :]
        if rest and _meet_all(q, rest) == target:
            sel = rest
        else:
            k += 1
    return sel


def primary_candidates(i: Ideal) -> list[Ideal]:
    """Primary ideals containing i, ascending by size."""
    return sorted(
        (c for c in enumerate_ideals(i.carrier) if i <= c and is_primary(c)),
        key=lambda c: (c.size, c.apex),
    )


def primary_decomposition(i: Ideal) -> Decomposition:
    """A minimal primary decomposition, or NotDecomposable carrying the
    smallest reachable intersection as the gap."""
    require_commutative(i.carrier)
    if not i.proper:
        raise NotProper(f"{i.name} is the whole carrier")
    q = i.carrier
    cands = primary_candidates(i)
    reach = _meet_all(q, cands) if cands else whole_ideal(q)
    if reach != i:
        raise NotDecomposable(
            f"primary ideals over {i.name} intersect to {reach.name}, not {i.name}",
            gap=reach,
        )
    return minimize(
        Decomposition(
            target=i,
            kind="primary",
            components=tuple(cands),
            radicals=tuple(radical(c) for c in cands),
            minimal=False,
        )
    )


def minimize(d: Decomposition) -> Decomposition:
    """Merge equal-radical components, then drop redundant ones.

    The merged intersection of components sharing a prime radical must
    itself be primary with that radical; a violation raises
    InvalidDecomposition since it would falsify the construction.
    """
    validate_decomposition(d)
    if d.kind != "primary":
        raise InvalidDecomposition("minimize applies to primary decompositions")
    q = d.target.carrier
    groups: dict[int, list[Ideal]] = {}
    for c in d.components:
        groups.setdefault(radical(c).members, []).append(c)
    merged = []
    for rad_members, group in sorted(groups.items()):
        m = _meet_all(q, group)
        if not is_primary(m) or radical(m).members != rad_members:
            raise InvalidDecomposition(
                f"merged component {m.name} is not primary for its radical"
            )
        merged.append(m)
    sel = _irredundant(q, d.target, merged)
    return Decomposition(
        target=d.target,
        kind="primary",
        components=tuple(sel),
        radicals=tuple(radical(c) for c in sel),
        minimal=True,
    )


def irreducible_decomposition(i: Ideal) -> Decomposition:
    """An irredundant intersection of irreducible ideals containing i."""
    require_commutative(i.carrier)
    if not i.proper:
        raise NotProper(f"{i.name} is the whole carrier")
    q = i.carrier
    ideals = enumerate_ideals(q)
    cands = [c for c in ideals if i <= c and _irreducible_witness(c, ideals) is None]
    reach = _meet_all(q, cands) if cands else whole_ideal(q)
    if reach != i:
        raise NotDecomposable(
            f"irreducible ideals over {i.name} intersect to {reach.name}", gap=reach
        )
    sel = _irredundant(q, i, cands)
    return Decomposition(
        target=i,
        kind="irreducible",
        components=tuple(sel),
        radicals=(),
        minimal=True,
    )


def all_minimal_decompositions(i: Ideal) -> list[tuple[Ideal, ...]]:
    """Every minimal primary decomposition of i, as component tuples.

    Exhaustive over subsets of the primary ideals containing i; meant for
    small carriers.
    """
    require_commutative(i.carrier)
    q = i.carrier
    cands = primary_candidates(i)
    out = []
    for pick in range(1, 1 << len(cands)):
        comps = [cands[k] for k in range(len(cands)) if pick >> k & 1]
        if _meet_all(q, comps) != i:
            continue
        rads = [radical(c).members for c in comps]
        if len(set(rads)) != len(rads):
            continue
        if any(
            _meet_all(q, comps[:k] + comps[k + 1 :]) == i for k in range(len(comps))
        ) and len(comps) > 1:
            continue
        out.append(tuple(comps))
    return out


@dataclass(frozen=True)
class UniquenessReport:
    """First-uniqueness analysis of a decomposable proper ideal.

    associated_primes are the radicals of a minimal decomposition;
    colon_primes are the prime radicals of residuals (target : principal);
    isolated are the inclusion-minimal associated primes and embedded the
    rest; isolated_components_match records that every minimal
    decomposition assigns the same component to each isolated prime.
    """

    target: Ideal
    decomposition: Decomposition
    associated_primes: tuple[Ideal, ...]
    colon_primes: tuple[Ideal, ...]
    isolated: tuple[Ideal, ...]
    embedded: tuple[Ideal, ...]
    isolated_components_match: bool


def isolated_component_formula(i: Ideal, p: Ideal) -> Ideal:
    """The unique component at an isolated prime p: all a with a & b in i
    for some b outside p."""
    q = i.carrier
    out = 0
    outside = q.full & ~p.members
    for a in range(q.n):
        row = q.mul[a]
        if any(i.members >> row[b] & 1 for b in bits(outside)):
            out |= 1 << a
    return Ideal(q, out)


def uniqueness_report(i: Ideal) -> UniquenessReport:
    """Build the report and check the uniqueness statements on the way.

    Raises QuantaleError if associated and colon primes disagree or the
    isolated components differ between minimal decompositions; such a
    failure would falsify the construction, not the input.
    """
    d = primary_decomposition(i)
    q = i.carrier
    associated = tuple(sorted(d.radicals, key=lambda p: (p.size, p.apex)))
    colon = []
    for x in range(q.n):
        r = radical(residual(i, principal(q, x)))
        if r.proper and is_prime(r) and r not in colon:
            colon.append(r)
    colon = tuple(sorted(colon, key=lambda p: (p.size, p.apex)))
    if set(colon) != set(associated):
        raise QuantaleError(
            f"associated primes {[p.name for p in associated]} differ from "
            f"colon primes {[p.name for p in colon]} at {i.name}"
        )
    isolated = tuple(
        p for p in associated if not any(o < p for o in associated)
    )
    embedded = tuple(p for p in associated if p not in isolated)
    minimal_over = minimal_primes_over(i)
    if set(isolated) != set(minimal_over):
        raise QuantaleError(
            f"isolated primes at {i.name} are not the minimal primes over it"
        )
    match = True
    expected = {p: isolated_component_formula(i, p) for p in isolated}
    for comps in all_minimal_decompositions(i):
        rads = {radical(c): c for c in comps}
        for p in isolated:
            if rads.get(p) != expected[p]:
                match = False
    for p in isolated:
        if {radical(c): c for c in d.components}.get(p) != expected[p]:
            match = False
    return UniquenessReport(
        target=i,
        decomposition=d,
        associated_primes=associated,
        colon_primes=colon,
        isolated=isolated,
        embedded=embedded,
        isolated_components_match=match,
    )


def quotient_by_element(p_primary: Ideal, x: int) -> Ideal:
    """The residual (p' : principal x) for a primary p', with its
    position trichotomy enforced: inside p' the residual is the whole
    carrier; outside p' it is primary for the radical of p'; outside the
    radical it is p' itself."""
    if not is_primary(p_primary):
        raise NotPrimary(f"{p_primary.name} is not primary")
    q = p_primary.carrier
    r = residual(p_primary, principal(q, x))
    p = radical(p_primary)
    if x in p_primary:
        if not r.is_whole:
            raise QuantaleError("residual at an inside element must be the whole carrier")
    else:
        if not (is_primary(r) and radical(r) == p):
            raise QuantaleError("residual at an outside element must stay primary")
        if x not in p and r != p_primary:
            raise QuantaleError("residual outside the radical must be the ideal itself")
    return r


def is_arithmetic(q: FiniteQuantale) -> bool:
    """Whether the ideal lattice is distributive."""
    return _distributivity_witness(q) is None


def _distributivity_witness(q: FiniteQuantale):
    require_commutative(q)
    ideals = enumerate_ideals(q)
    for a in ideals:
        for b in ideals:
            for c in ideals:
                lhs = meet_ideals(a, join_ideals(b, c))
                rhs = join_ideals(meet_ideals(a, b), meet_ideals(a, c))
                if lhs != rhs:
                    return (a, b, c)
    return None


@dataclass(frozen=True)
class ArithmeticReport:
    """Both directions of the irreducible/strongly-irreducible equivalence
    on one instance, under the distributive-ideal-lattice reading of
    "arithmetic"."""

    arithmetic: bool
    distributivity_witness: tuple[Ideal, Ideal, Ideal] | None
    irreducibles: tuple[Ideal, ...]
    strongly_irreducibles: tuple[Ideal, ...]
    sets_equal: bool
    representation_ok: bool
    representation_witness: Ideal | None


def arithmetic_equivalence_check(q: FiniteQuantale) -> ArithmeticReport:
    require_commutative(q)
    ideals = enumerate_ideals(q)
    wit = _distributivity_witness(q)
    irr = tuple(i for i in ideals if _irreducible_witness(i, ideals) is None)
    sirr = tuple(i for i in ideals if _strongly_irreducible_witness(i, ideals) is None)
    sets_equal = set(irr) == set(sirr)
    rep_ok = True
    rep_wit = None
    if wit is None:
        for i in ideals:
            m = q.full
            for s in sirr:
                if i <= s:
                    m &= s.members
            if m != i.members:
                rep_ok = False
                rep_wit = i
                break
    return ArithmeticReport(
        arithmetic=wit is None,
        distributivity_witness=wit,
        irreducibles=irr,
        strongly_irreducibles=sirr,
        sets_equal=sets_equal,
        representation_ok=rep_ok,
        representation_witness=rep_wit,
    )


def minimal_strongly_irreducible_over(i: Ideal) -> Ideal:
    """An inclusion-minimal strongly irreducible ideal containing i;
    ties break toward the lowest apex index."""
    require_commutative(i.carrier)
    if not i.proper:
        raise NotProper(f"{i.name} is the whole carrier")
    ideals = enumerate_ideals(i.carrier)
    over = [
        s
        for s in ideals
        if i <= s and _strongly_irreducible_witness(s, ideals) is None
    ]
    minimal = [s for s in over if not any(o < s for o in over)]
    return min(minimal, key=lambda s: s.apex)


def totally_ordered_ideals(q: FiniteQuantale) -> bool:
    """Whether the ideals form a chain (equivalently, every ideal is
    strongly irreducible; the suites check the equivalence)."""
    ideals = enumerate_ideals(q)
    for a in ideals:
        for b in ideals:
            if not (a <= b or b <= a):
                return False
    return True
