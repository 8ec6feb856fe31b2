import pytest

from qk.classify import (
    all_mc_sets,
    are_coprime,
    classification,
    is_local,
    is_mc,
    is_p_primary,
    is_primary,
    is_prime,
    is_prime_idealwise,
    is_qd,
    is_radical_ideal,
    is_reduced,
    is_saturated,
    is_semiprime,
    is_semiprime_idealwise,
    jacobson,
    maximal_avoiding,
    maximal_ideals,
    mc_generated,
    mc_set,
    minimal_primes_over,
    nilradical,
    prime_avoidance,
    primes_over,
    radical,
    saturation,
    spectrum,
    zero_divisors,
)
from qk.core import build_quantale
from qk.errors import (
    Degenerate,
    HypothesisViolated,
    NoAvoidingIdeal,
    NotMc,
    NotPrime,
    NotProper,
)
from qk.ideals import enumerate_ideals, principal, whole_ideal, zero_ideal


def test_spectrum_frozen(q4, l3, m3):
    assert {p.name for p in spectrum(q4)} == {"↓a", "↓b"}
    assert {p.name for p in spectrum(l3)} == {"↓1"}
    assert {p.name for p in spectrum(m3)} == {"↓m"}


def test_prime_forms_agree(q4, l3, m3, p3):
    for q in (q4, l3, m3, p3):
        for i in enumerate_ideals(q):
            assert is_prime(i) == is_prime_idealwise(i)
            assert is_semiprime(i) == is_semiprime_idealwise(i)


def test_q4_zero_not_prime_but_semiprime(q4):
    z = zero_ideal(q4)
    assert not is_prime(z)  # a & b = bot with neither inside
    assert is_semiprime(z)  # no nonzero square lands in bot
    # in fact every ideal here is semiprime
    for i in enumerate_ideals(q4):
        assert is_semiprime(i)


def test_whole_ideal_conventions(q4):
    w = whole_ideal(q4)
    assert not is_prime(w)  # proper is required
    assert not is_primary(w)
    assert is_semiprime(w)  # properness is not required here


def test_l3_zero_primary_not_prime(l3):
    z = zero_ideal(l3)
    assert is_primary(z)
    assert not is_prime(z)
    assert not is_radical_ideal(z)
    assert radical(z).name == "↓1"


def test_radical_algorithms_agree_everywhere(q4, l3, m3, p3):
    for q in (q4, l3, m3, p3):
        for i in enumerate_ideals(q):
            r1 = radical(i, "powers")
            r2 = radical(i, "primes")
            r3 = radical(i, "mcsets")
            assert r1 == r2 == r3, (q.name, i.name)


def test_radical_rejects_unknown_algorithm(l3):
    with pytest.raises(ValueError):
        radical(zero_ideal(l3), "magic")


def test_radical_of_whole_is_whole(q4):
    assert radical(whole_ideal(q4)) == whole_ideal(q4)


def test_primes_over_and_minimal(l3, p3):
    z = zero_ideal(l3)
    assert [p.name for p in primes_over(z)] == ["↓1"]
    assert [p.name for p in minimal_primes_over(z)] == ["↓1"]
    with pytest.raises(NotProper):
        minimal_primes_over(whole_ideal(l3))
    z3 = zero_ideal(p3)
    assert {p.name for p in minimal_primes_over(z3)} == {"↓12", "↓13", "↓23"}


def test_p_primary(l3):
    z = zero_ideal(l3)
    one = principal(l3, l3.index("1"))
    assert is_p_primary(z, one)
    with pytest.raises(NotPrime):
        is_p_primary(z, z)


def test_maximal_ideals_and_local(q4, l3):
    assert {m.name for m in maximal_ideals(q4)} == {"↓a", "↓b"}
    flag, at = is_local(q4)
    assert not flag and at is None
    flag, at = is_local(l3)
    assert flag and at.name == "↓1"


def test_degenerate_carrier():
    one = build_quantale(["x"], [], [["x"]])
    with pytest.raises(Degenerate):
        maximal_ideals(one)


def test_jacobson_and_nilradical(q4, l3):
    assert jacobson(q4) == zero_ideal(q4)
    assert nilradical(q4) == zero_ideal(q4)
    assert nilradical(l3).name == "↓1"
    assert nilradical(l3) == jacobson(l3)


def test_reduced_and_qd(q4, l3, c2):
    assert is_reduced(q4) and not is_reduced(l3)
    za, zb = zero_divisors(q4), zero_divisors(l3)
    assert {q4.elements[x] for x in za} == {"a", "b"}
    assert {l3.elements[x] for x in zb} == {"1"}
    assert not is_qd(q4) and not is_qd(l3)
    assert is_qd(c2)
    assert zero_divisors(c2) == ()
    # QD agrees with the zero ideal being prime
    assert is_prime(zero_ideal(c2))


def test_mc_sets_q4(q4):
    brute = []
    for m in range(1, q4.full + 1):
        if is_mc(q4, m):
            brute.append(m)
    got = [s.members for s in all_mc_sets(q4)]
    assert sorted(got) == sorted(brute)
    assert len(got) == 7
    assert all(m >> q4.top & 1 for m in got)


def test_mc_set_constructor(q4):
    s = mc_set(q4, 1 << q4.top | 1 << q4.index("a"))
    assert q4.index("a") in s
    with pytest.raises(NotMc):
        mc_set(q4, 1 << q4.index("a"))  # missing the unit


def test_mc_generated(l3):
    s = mc_generated(l3, l3.index("1"))
    # powers of 1 descend to 0, and the unit is always included
    assert set(s.carrier.labels(s.members).split()) == {"0", "1", "2"}


def test_saturation_and_saturated(q4):
    top_only = mc_set(q4, 1 << q4.top)
    assert saturation(top_only).members == 1 << q4.top
    assert is_saturated(top_only)
    with_a = mc_set(q4, 1 << q4.top | 1 << q4.index("a"))
    assert is_saturated(with_a)
    # saturation of any mc set is the least saturated superset
    for s in all_mc_sets(q4):
        t = saturation(s)
        assert s.members & ~t.members == 0
        assert is_saturated(t)


def test_saturated_complement_is_union_of_primes(q4, l3, m3):
    for q in (q4, l3, m3):
        primes = spectrum(q)
        for s in all_mc_sets(q):
            union = 0
            for p in primes:
                if not p.members & s.members:
                    union |= p.members
            assert is_saturated(s) == (s.complement == union)


def test_maximal_avoiding(q4):
    s = mc_set(q4, 1 << q4.top | 1 << q4.index("a"))
    found = maximal_avoiding(s)
    assert found.name == "↓b"
    assert is_prime(found)
    with pytest.raises(NoAvoidingIdeal):
        maximal_avoiding(mc_set(q4, 1 << q4.top | 1 << q4.bottom))


def test_prime_avoidance_positive(q4):
    a = principal(q4, q4.index("a"))
    b = principal(q4, q4.index("b"))
    stable = 1 << q4.top
    x = prime_avoidance(q4, stable, [a, b])
    assert x == q4.top


def test_prime_avoidance_hypotheses(q4):
    a = principal(q4, q4.index("a"))
    ai, bi = q4.index("a"), q4.index("b")
    # join leaves the set
    with pytest.raises(HypothesisViolated) as e:
        prime_avoidance(q4, 1 << ai | 1 << bi, [a])
    assert e.value.hypothesis == "stable_under_join"
    # product leaves the set
    with pytest.raises(HypothesisViolated) as e:
        prime_avoidance(q4, 1 << ai | 1 << bi | 1 << q4.top, [a])
    assert e.value.hypothesis == "stable_under_mul"
    # third ideal must be prime
    z = principal(q4, q4.bottom)
    with pytest.raises(HypothesisViolated) as e:
        prime_avoidance(q4, 1 << q4.top, [a, a, z])
    assert e.value.hypothesis == "prime_tail"
    # the set must escape every ideal
    with pytest.raises(HypothesisViolated) as e:
        prime_avoidance(q4, 1 << q4.bottom | 1 << ai, [principal(q4, ai)])
    assert e.value.hypothesis == "not_contained"


def test_are_coprime(p3, q4):
    i12 = principal(p3, p3.index("12"))
    i3 = principal(p3, p3.index("3"))
    assert are_coprime(i12, i3)
    a = principal(q4, q4.index("a"))
    assert not are_coprime(a, zero_ideal(q4))


def test_classification_l3_zero(l3):
    c = classification(zero_ideal(l3))
    assert c.proper and not c.maximal and c.minimal_ideal is False
    assert not c.prime and not c.semiprime
    assert c.primary and not c.radical_ideal
    assert c.irreducible and c.strongly_irreducible
    assert c.radical.name == "↓1"
    assert "prime" in c.witnesses
    one = l3.index("1")
    assert c.witnesses["prime"] == (one, one)


def test_classification_q4_prime(q4):
    c = classification(principal(q4, q4.index("a")))
    assert c.prime and c.semiprime and c.primary and c.radical_ideal
    assert c.maximal
    assert c.irreducible and c.strongly_irreducible
    assert c.radical.name == "↓a"
