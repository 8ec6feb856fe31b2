"""Classification of ideals: prime, semiprime, primary, radicals, spectra,
multiplicatively closed sets and saturation.

The radical of an ideal is computed by three independent routes that the
verification suites require to agree:

  powers   membership scan via x, x^2, ... (powers only descend, so they
           stabilise within n steps on an n-element carrier)
  primes   intersection of the prime ideals containing the target (the
           empty intersection is the whole carrier)
  mcsets   an element belongs iff every multiplicatively closed set
           containing it meets the target; since the closure of a single
           element is the least such set, testing it decides the lot

Primality requires properness throughout; being semiprime deliberately
does not (the whole carrier vacuously satisfies the square condition and
the three-way radical equivalence then holds for every ideal).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import FiniteQuantale, bits, mask_of
from .errors import (
    Degenerate,
    HypothesisViolated,
    NoAvoidingIdeal,
    NotMc,
    NotPrime,
    NotProper,
    QuantaleError,
)
from .ideals import (
    Ideal,
    enumerate_ideals,
    join_ideals,
    meet_ideals,
    principal,
    product_ideals,
    require_commutative,
    whole_ideal,
    zero_ideal,
)


def _power_mask(q: FiniteQuantale, x: int) -> int:
    """Bitmask of all positive powers of x (they descend and stabilise)."""
    row = q.mul[x]
    seen = 0
    y = x
    while not seen >> y & 1:
        seen |= 1 << y
        y = row[y]
    return seen


def is_prime(i: Ideal) -> bool:
    """Proper, and x & y inside forces x or y inside."""
    require_commutative(i.carrier)
    return i.proper and _prime_witness(i) is None


def _prime_witness(i: Ideal) -> tuple[int, int] | None:
    q = i.carrier
    m = i.members
    for x in range(q.n):
        if m >> x & 1:
            continue
        row = q.mul[x]
        for y in range(x, q.n):
            if m >> y & 1:
                continue
            if m >> row[y] & 1:
                return (x, y)
    return None


def is_prime_idealwise(i: Ideal) -> bool:
    """Proper, and a product of ideals inside forces one of them inside."""
    require_commutative(i.carrier)
    if not i.proper:
        return False
    ideals = enumerate_ideals(i.carrier)
    for a in ideals:
        if a <= i:
            continue
        for b in ideals:
            if b <= i:
                continue
            if product_ideals(a, b) <= i:
                return False
    return True


def is_semiprime(i: Ideal) -> bool:
    """x^2 inside forces x inside; properness not required."""
    require_commutative(i.carrier)
    return _semiprime_witness(i) is None


def _semiprime_witness(i: Ideal) -> tuple[int] | None:
    q = i.carrier
    for x in range(q.n):
        if i.members >> q.mul[x][x] & 1 and not i.members >> x & 1:
            return (x,)
    return None


def is_semiprime_idealwise(i: Ideal) -> bool:
    """j & j inside forces j inside, over all ideals j."""
    require_commutative(i.carrier)
    for j in enumerate_ideals(i.carrier):
        if product_ideals(j, j) <= i and not j <= i:
            return False
    return True


def is_primary(i: Ideal) -> bool:
    """Proper, and x & y inside forces x inside or some power of y inside."""
    require_commutative(i.carrier)
    return i.proper and _primary_witness(i) is None


def _primary_witness(i: Ideal) -> tuple[int, int] | None:
    q = i.carrier
    m = i.members
    for x in range(q.n):
        if m >> x & 1:
            continue
        row = q.mul[x]
        for y in range(q.n):
            if m >> row[y] & 1 and not _power_mask(q, y) & m:
                return (x, y)
    return None


def radical(i: Ideal, algorithm: str = "powers") -> Ideal:
    """Elements some power of which lands in the ideal.

    algorithm selects the route: powers, primes, or mcsets.
    """
    require_commutative(i.carrier)
    if algorithm == "powers":
        return _radical_powers(i)
    if algorithm == "primes":
        return _radical_primes(i)
    if algorithm == "mcsets":
        return _radical_mcsets(i)
    raise ValueError(f"unknown radical algorithm {algorithm!r}")


def _radical_powers(i: Ideal) -> Ideal:
    q = i.carrier
    out = 0
    for x in range(q.n):
        if _power_mask(q, x) & i.members:
            out |= 1 << x
    return Ideal(q, out)


def _radical_primes(i: Ideal) -> Ideal:
    q = i.carrier
    out = q.full
    for p in primes_over(i):
        out &= p.members
    return Ideal(q, out)


def _radical_mcsets(i: Ideal) -> Ideal:
    q = i.carrier
    out = 0
    for x in range(q.n):
        if mc_generated(q, x).members & i.members:
            out |= 1 << x
    return Ideal(q, out)


def is_radical_ideal(i: Ideal) -> bool:
    return radical(i) == i


def is_p_primary(i: Ideal, p: Ideal) -> bool:
    """Primary with radical exactly p (which must be prime)."""
    if not is_prime(p):
        raise NotPrime(f"{p.name} is not prime")
    return is_primary(i) and radical(i) == p


def spectrum(q: FiniteQuantale) -> list[Ideal]:
    """All prime ideals, in element index order of their apexes."""
    require_commutative(q)
    return [i for i in enumerate_ideals(q) if is_prime(i)]


def primes_over(i: Ideal) -> list[Ideal]:
    return [p for p in spectrum(i.carrier) if i <= p]


def minimal_primes_over(i: Ideal) -> list[Ideal]:
    """Inclusion-minimal primes containing i; i must be proper."""
    if not i.proper:
        raise NotProper(f"{i.name} is the whole carrier")
    over = primes_over(i)
    return [p for p in over if not any(o < p for o in over)]


def maximal_ideals(q: FiniteQuantale) -> list[Ideal]:
    """Inclusion-maximal proper ideals; needs bottom != top."""
    require_commutative(q)
    if q.bottom == q.top:
        raise Degenerate(f"{q.name} has bottom == top")
    proper = [i for i in enumerate_ideals(q) if i.proper]
    return [m for m in proper if not any(m < o for o in proper)]


def is_local(q: FiniteQuantale) -> tuple[bool, Ideal | None]:
    """(True, the maximal ideal) when there is exactly one."""
    ms = maximal_ideals(q)
    if len(ms) == 1:
        return True, ms[0]
    return False, None


def jacobson(q: FiniteQuantale) -> Ideal:
    """Intersection of all maximal ideals."""
    ms = maximal_ideals(q)
    out = q.full
    for m in ms:
        out &= m.members
    return Ideal(q, out)


def nilradical(q: FiniteQuantale) -> Ideal:
    """Radical of the zero ideal."""
    require_commutative(q)
    return radical(zero_ideal(q))


def is_reduced(q: FiniteQuantale) -> bool:
    return nilradical(q).is_zero


def zero_divisors(q: FiniteQuantale) -> tuple[int, ...]:
    """Nonzero x with x & y == bottom for some nonzero y."""
    require_commutative(q)
    b = q.bottom
    out = []
    for x in range(q.n):
        if x == b:
            continue
        row = q.mul[x]
        if any(row[y] == b for y in range(q.n) if y != b):
            out.append(x)
    return tuple(out)


def is_qd(q: FiniteQuantale) -> bool:
    """No zero divisors and bottom != top; equivalently the zero ideal is prime."""
    require_commutative(q)
    return q.bottom != q.top and not zero_divisors(q)


@dataclass(frozen=True)
class McSet:
    """A multiplicatively closed subset: contains top, closed under &."""

    carrier: FiniteQuantale
    members: int

    @property
    def complement(self) -> int:
        return self.carrier.full & ~self.members

    def __contains__(self, x: int) -> bool:
        return bool(self.members >> x & 1)

    def __repr__(self) -> str:
        return f"<McSet {{{self.carrier.labels(self.members)}}} of {self.carrier.name}>"


def is_mc(q: FiniteQuantale, subset) -> bool:
    m = mask_of(subset)
    if not m >> q.top & 1:
        return False
    for x in bits(m):
        row = q.mul[x]
        for y in bits(m):
            if not m >> row[y] & 1:
                return False
    return True


def mc_set(q: FiniteQuantale, subset) -> McSet:
    require_commutative(q)
    m = mask_of(subset)
    if not is_mc(q, m):
        raise NotMc(f"{{{q.labels(m)}}} is not multiplicatively closed")
    return McSet(q, m)


def mc_generated(q: FiniteQuantale, x: int) -> McSet:
    """Least mc set containing x: the unit together with all powers of x."""
    require_commutative(q)
    return McSet(q, _power_mask(q, x) | 1 << q.top)


def all_mc_sets(q: FiniteQuantale) -> list[McSet]:
    """Every mc subset; exponential in n, meant for small carriers."""
    require_commutative(q)
    rest = q.full & ~(1 << q.top)
    out = []
    sub = rest
    while True:
        m = sub | 1 << q.top
        if is_mc(q, m):
            out.append(McSet(q, m))
        if sub == 0:
            break
        sub = (sub - 1) & rest
    out.sort(key=lambda s: (s.members.bit_count(), s.members))
    return out


def saturation(s: McSet) -> McSet:
    """Smallest saturated mc superset: everything whose product with
    something lands in s."""
    q = s.carrier
    out = 0
    for x in range(q.n):
        row = q.mul[x]
        if any(s.members >> row[y] & 1 for y in range(q.n)):
            out |= 1 << x
    return McSet(q, out)


def is_saturated(s: McSet) -> bool:
    """x & y in s forces both x and y in s."""
    q = s.carrier
    m = s.members
    for x in range(q.n):
        row = q.mul[x]
        for y in range(x, q.n):
            if m >> row[y] & 1 and not (m >> x & 1 and m >> y & 1):
                return False
    return True


def maximal_avoiding(s: McSet) -> Ideal:
    """An ideal maximal among those disjoint from s; ties break toward the
    lowest apex index.  Such an ideal is prime (checked by the suites)."""
    q = s.carrier
    if s.members >> q.bottom & 1:
        raise NoAvoidingIdeal("the set contains bottom, which every ideal contains")
    disjoint = [i for i in enumerate_ideals(q) if not i.members & s.members]
    best = [i for i in disjoint if not any(i < o for o in disjoint)]
    return min(best, key=lambda i: i.apex)


def prime_avoidance(q: FiniteQuantale, stable, ps: list[Ideal]):
    """A member of the stable set outside the union of the given ideals.

    Hypotheses (violations raise HypothesisViolated naming the failure):
    the set is closed under join and &; every ideal from the third on is
    prime; the set is contained in none of the ideals.
    """
    require_commutative(q)
    m = mask_of(stable)
    for x in bits(m):
        jr, mr = q.join[x], q.mul[x]
        for y in bits(m):
            if not m >> jr[y] & 1:
                raise HypothesisViolated(
                    "stable_under_join",
                    f"{q.label(x)} v {q.label(y)} leaves the set",
                )
            if not m >> mr[y] & 1:
                raise HypothesisViolated(
                    "stable_under_mul",
                    f"{q.label(x)} & {q.label(y)} leaves the set",
                )
    for k, p in enumerate(ps):
        if k >= 2 and not is_prime(p):
            raise HypothesisViolated("prime_tail", f"ideal {k + 1} ({p.name}) is not prime")
    for k, p in enumerate(ps):
        if m & ~p.members == 0:
            raise HypothesisViolated(
                "not_contained", f"the stable set lies inside ideal {k + 1} ({p.name})"
            )
    union = 0
    for p in ps:
        union |= p.members
    for x in bits(m & ~union):
        return x
    raise QuantaleError("avoidance witness missing despite satisfied hypotheses")


def are_coprime(i: Ideal, j: Ideal) -> bool:
    """Join is the whole carrier."""
    return join_ideals(i, j).is_whole


@dataclass(frozen=True)
class Classification:
    """One-stop summary of an ideal; witnesses explain each False flag
    where a finite witness exists (element or apex index tuples)."""

    ideal: Ideal
    proper: bool
    maximal: bool
    minimal_ideal: bool
    prime: bool
    semiprime: bool
    primary: bool
    radical_ideal: bool
    irreducible: bool
    strongly_irreducible: bool
    radical: Ideal
    witnesses: dict = field(default_factory=dict)


def classification(i: Ideal) -> Classification:
    """Compute every flag for one ideal."""
    require_commutative(i.carrier)
    q = i.carrier
    from .decompose import _irreducible_witness, _strongly_irreducible_witness

    ideals = enumerate_ideals(q)
    wit: dict = {}
    proper = i.proper
    if not proper:
        wit["proper"] = ()
    larger = [o for o in ideals if i < o and o.proper]
    maximal = proper and not larger
    if not maximal:
        wit["maximal"] = (larger[0].apex,) if larger else ()
    smaller = [o for o in ideals if not o.is_zero and o < i]
    minimal_ideal = not i.is_zero and not smaller
    if not minimal_ideal:
        wit["minimal_ideal"] = (smaller[0].apex,) if smaller else ()
    pw = _prime_witness(i) if proper else ()
    prime = proper and pw is None
    if not prime:
        wit["prime"] = pw or ()
    sw = _semiprime_witness(i)
    semiprime = sw is None
    if not semiprime:
        wit["semiprime"] = sw
    prw = _primary_witness(i) if proper else ()
    primary = proper and prw is None
    if not primary:
        wit["primary"] = prw or ()
    rad = radical(i)
    radical_ideal = rad == i
    if not radical_ideal:
        wit["radical_ideal"] = tuple(bits(rad.members & ~i.members))[:1]
    iw = _irreducible_witness(i, ideals)
    irreducible = iw is None
    if not irreducible:
        wit["irreducible"] = tuple(j.apex for j in iw)
    siw = _strongly_irreducible_witness(i, ideals)
    strongly_irreducible = siw is None
    if not strongly_irreducible:
        wit["strongly_irreducible"] = tuple(j.apex for j in siw)
    return Classification(
        ideal=i,
        proper=proper,
        maximal=maximal,
        minimal_ideal=minimal_ideal,
        prime=prime,
        semiprime=semiprime,
        primary=primary,
        radical_ideal=radical_ideal,
        irreducible=irreducible,
        strongly_irreducible=strongly_irreducible,
        radical=rad,
        witnesses=wit,
    )
