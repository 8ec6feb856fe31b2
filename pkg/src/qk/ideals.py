"""The ideal calculus over a finite carrier.

An ideal is a nonempty, down-closed, join-closed subset.  On a finite
carrier every ideal contains the join of its members and is therefore the
down-set of that join (its apex); ideals are nevertheless stored as
explicit member masks so the principal collapse stays a checked fact
rather than a baked-in assumption.  The fast paths here go through the
apex; the definitional closure routes live alongside them and the
verification suites insist the two agree.

Ideal-theoretic operations that multiply refuse noncommutative carriers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import ELEMENT_CAP, FiniteQuantale, QuantaleHom, bits, check_hom, mask_of
from .errors import (
    CarrierMismatch,
    EmptyGeneratorSet,
    HomInvalid,
    NotCommutative,
    QuantaleError,
    TooLarge,
)


def require_commutative(q: FiniteQuantale) -> None:
    if not q.commutative:
        raise NotCommutative(f"{q.name} has a noncommutative multiplication")


class Ideal:
    """A subset of a carrier, trusted to satisfy the ideal conditions.

    Build via principal/generated/as_ideal rather than directly.
    Equality and hashing are by carrier identity plus member mask.
    """

    __slots__ = ("carrier", "members")

    def __init__(self, carrier: FiniteQuantale, members: int):
        self.carrier = carrier
        self.members = members

    @property
    def apex(self) -> int:
        """The join of all members; the ideal is its down-set."""
        return self.carrier.join_of(bits(self.members))

    @property
    def name(self) -> str:
        return "↓" + self.carrier.elements[self.apex]

    @property
    def size(self) -> int:
        return self.members.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.members == 1 << self.carrier.bottom

    @property
    def is_whole(self) -> bool:
        return self.members == self.carrier.full

    @property
    def proper(self) -> bool:
        return self.members != self.carrier.full

    def indices(self) -> tuple[int, ...]:
        return tuple(bits(self.members))

    def labels(self) -> str:
        return self.carrier.labels(self.members)

    def __contains__(self, x: int) -> bool:
        return bool(self.members >> x & 1)

    def __le__(self, other: "Ideal") -> bool:
        _same_carrier(self, other)
        return self.members & ~other.members == 0

    def __lt__(self, other: "Ideal") -> bool:
        return self <= other and self.members != other.members

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ideal)
            and self.carrier is other.carrier
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((id(self.carrier), self.members))

    def __repr__(self) -> str:
        return f"<Ideal {self.name} of {self.carrier.name}>"


def _same_carrier(i: Ideal, j: Ideal) -> None:
    if i.carrier is not j.carrier:
        raise CarrierMismatch(
            f"ideals live over different carriers ({i.carrier.name}, {j.carrier.name})"
        )


def is_ideal(q: FiniteQuantale, subset: Iterable[int] | int) -> bool:
    """Nonempty, down-closed, closed under binary join."""
    m = mask_of(subset)
    if m == 0 or m & ~q.full:
        return False
    for x in bits(m):
        if q.down[x] & ~m:
            return False
    for x in bits(m):
        row = q.join[x]
        for y in bits(m):
            if not m >> row[y] & 1:
                return False
    return True


def as_ideal(q: FiniteQuantale, subset: Iterable[int] | int) -> Ideal:
    """Validate and wrap an explicit member set."""
    m = mask_of(subset)
    if not is_ideal(q, m):
        raise QuantaleError(f"{q.labels(m) or '(empty)'} is not an ideal of {q.name}")
    return Ideal(q, m)


def principal(q: FiniteQuantale, a: int) -> Ideal:
    """The down-set of a single element."""
    return Ideal(q, q.down[a])


def apex(i: Ideal) -> int:
    return i.apex


def zero_ideal(q: FiniteQuantale) -> Ideal:
    return Ideal(q, 1 << q.bottom)


def whole_ideal(q: FiniteQuantale) -> Ideal:
    return Ideal(q, q.full)


def ideal_from_closure(q: FiniteQuantale, seed: Iterable[int] | int) -> Ideal:
    """Close a nonempty seed under down-sets and binary joins.

    This is the definitional route used to cross-check the apex shortcuts;
    it never multiplies, so it tolerates broken algebra tables.
    """
    m = mask_of(seed)
    if m == 0:
        raise EmptyGeneratorSet("cannot close an empty set into an ideal")
    while True:
        prev = m
        for x in bits(prev):
            m |= q.down[x]
        for x in bits(prev):
            row = q.join[x]
            for y in bits(prev):
                m |= 1 << row[y]
        if m == prev:
            return Ideal(q, m)


def generated(q: FiniteQuantale, s: Iterable[int] | int) -> Ideal:
    """Least ideal containing s: everything below a finite join of products
    l & t with t in s.  On a sound carrier this equals the down-set of the
    join of s (top is the unit); the verification suites compare the two."""
    require_commutative(q)
    m = mask_of(s)
    if m == 0:
        raise EmptyGeneratorSet("generated ideal needs at least one generator")
    prods = 0
    for t in bits(m):
        for l in range(q.n):
            prods |= 1 << q.mul[l][t]
    return Ideal(q, q.down[q.join_of(bits(prods))])


def enumerate_ideals(q: FiniteQuantale) -> list[Ideal]:
    """All ideals, one per carrier element (the principal down-sets), in
    element index order.  The brute-force subset filter that justifies
    this lives in the collapse verification suite."""
    require_commutative(q)
    return [Ideal(q, q.down[a]) for a in range(q.n)]


def meet_ideals(i: Ideal, j: Ideal) -> Ideal:
    _same_carrier(i, j)
    return Ideal(i.carrier, i.members & j.members)


def join_ideals(i: Ideal, j: Ideal) -> Ideal:
    """Least ideal containing both: the down-set of the join of apexes."""
    _same_carrier(i, j)
    q = i.carrier
    return Ideal(q, q.down[q.join[i.apex][j.apex]])


def product_ideals(i: Ideal, j: Ideal) -> Ideal:
    """Everything below a finite join of pairwise products, computed via
    the apex shortcut; the definitional closure lives in product_closure."""
    _same_carrier(i, j)
    q = i.carrier
    return Ideal(q, q.down[q.mul[i.apex][j.apex]])


def product_closure(i: Ideal, j: Ideal) -> Ideal:
    """Definitional product: close the set of pairwise products."""
    _same_carrier(i, j)
    q = i.carrier
    prods = 0
    for x in bits(i.members):
        row = q.mul[x]
        for y in bits(j.members):
            prods |= 1 << row[y]
    return ideal_from_closure(q, prods)


def residual(i: Ideal, j: Ideal) -> Ideal:
    """(i : j) = all x whose product with every member of j lands in i."""
    _same_carrier(i, j)
    q = i.carrier
    im = i.members
    out = 0
    for x in range(q.n):
        row = q.mul[x]
        if all(im >> row[y] & 1 for y in bits(j.members)):
            out |= 1 << x
    return Ideal(q, out)


def annihilator(q: FiniteQuantale, s: Iterable[int] | int) -> Ideal:
    """All x with x & t == bottom for every t in s."""
    m = mask_of(s)
    if m == 0:
        raise EmptyGeneratorSet("annihilator of the empty set is not defined")
    b = q.bottom
    out = 0
    for x in range(q.n):
        row = q.mul[x]
        if all(row[t] == b for t in bits(m)):
            out |= 1 << x
    return Ideal(q, out)


@dataclass(frozen=True, eq=False)
class IdealQuantale:
    """The carrier whose elements are the ideals of a base carrier.

    ideals[k] is the ideal behind element k of quantale; iso maps a base
    element a to the element standing for its principal ideal.
    """

    quantale: FiniteQuantale
    base: FiniteQuantale
    ideals: tuple[Ideal, ...]
    iso: tuple[int, ...]

    def hom_from_base(self) -> QuantaleHom:
        return QuantaleHom(
            source=self.base, target=self.quantale, mapping=self.iso, name="principal"
        )


def ideal_quantale(q: FiniteQuantale, *, cap: int = ELEMENT_CAP) -> IdealQuantale:
    """Assemble the ideal carrier and certify the principal-embedding
    isomorphism a |-> down-set of a."""
    require_commutative(q)
    ideals = enumerate_ideals(q)
    if len(ideals) > cap:
        raise TooLarge(f"{len(ideals)} ideals exceeds the cap of {cap}")
    order = sorted(range(len(ideals)), key=lambda k: (ideals[k].size, ideals[k].members))
    ideals = tuple(ideals[k] for k in order)
    pos = {i.members: k for k, i in enumerate(ideals)}
    labels = tuple("↓" + q.elements[i.apex] for i in ideals)
    n = len(ideals)
    down = [0] * n
    for k, i in enumerate(ideals):
        for l, j in enumerate(ideals):
            if i.members & ~j.members == 0:
                down[l] |= 1 << k
    join = tuple(
        tuple(pos[join_ideals(i, j).members] for j in ideals) for i in ideals
    )
    meet = tuple(
        tuple(pos[meet_ideals(i, j).members] for j in ideals) for i in ideals
    )
    mul = tuple(
        tuple(pos[product_ideals(i, j).members] for j in ideals) for i in ideals
    )
    carrier = FiniteQuantale(
        name=f"{q.name}_ideals",
        elements=labels,
        down=tuple(down),
        join=join,
        meet=meet,
        mul=mul,
        bottom=pos[1 << q.bottom],
        top=pos[q.full],
    )
    iso = tuple(pos[q.down[a]] for a in range(q.n))
    if sorted(iso) != list(range(n)):
        raise QuantaleError("principal map is not a bijection onto the ideals")
    rep = check_hom(iso, q, carrier)
    if not rep.ok:
        raise QuantaleError(f"principal map breaks {rep.condition} at {rep.witness}")
    for a in range(q.n):
        for b in range(q.n):
            if q.leq(a, b) != carrier.leq(iso[a], iso[b]):
                raise QuantaleError("principal map does not reflect the order")
    return IdealQuantale(quantale=carrier, base=q, ideals=ideals, iso=iso)


def contraction(h: QuantaleHom, j: Ideal) -> Ideal:
    """Preimage of an ideal of the target."""
    rep = h.check()
    if not rep.ok:
        raise HomInvalid(f"map breaks {rep.condition} at {rep.witness}")
    if j.carrier is not h.target:
        raise CarrierMismatch("contraction needs an ideal of the hom's target")
    out = 0
    for x in range(h.source.n):
        if j.members >> h.mapping[x] & 1:
            out |= 1 << x
    return Ideal(h.source, out)


def extension(h: QuantaleHom, i: Ideal) -> Ideal:
    """Ideal of the target generated by the image."""
    rep = h.check()
    if not rep.ok:
        raise HomInvalid(f"map breaks {rep.condition} at {rep.witness}")
    if i.carrier is not h.source:
        raise CarrierMismatch("extension needs an ideal of the hom's source")
    image = 0
    for x in bits(i.members):
        image |= 1 << h.mapping[x]
    return generated(h.target, image)
