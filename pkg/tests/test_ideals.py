import pytest

from qk.core import build_quantale, check_axioms
from qk.errors import (
    CarrierMismatch,
    EmptyGeneratorSet,
    HomInvalid,
    NotCommutative,
)
from qk.ideals import (
    Ideal,
    annihilator,
    apex,
    as_ideal,
    contraction,
    enumerate_ideals,
    extension,
    generated,
    ideal_from_closure,
    ideal_quantale,
    is_ideal,
    join_ideals,
    meet_ideals,
    principal,
    product_closure,
    product_ideals,
    residual,
    whole_ideal,
    zero_ideal,
)


def brute_force_ideals(q):
    """Independent enumeration: every nonempty down- and join-closed subset."""
    out = []
    for m in range(1, q.full + 1):
        down_ok = all(q.down[x] & ~m == 0 for x in range(q.n) if m >> x & 1)
        join_ok = all(
            m >> q.join[x][y] & 1
            for x in range(q.n)
            if m >> x & 1
            for y in range(q.n)
            if m >> y & 1
        )
        if down_ok and join_ok:
            out.append(m)
    return sorted(out)


def test_enumeration_matches_brute_force(q4, l3, m3, p3):
    for q in (q4, l3, m3, p3):
        got = sorted(i.members for i in enumerate_ideals(q))
        assert got == brute_force_ideals(q)


def test_every_ideal_is_principal(q4, m3, p3):
    for q in (q4, m3, p3):
        for i in enumerate_ideals(q):
            assert i.members == q.down[i.apex]
            assert apex(i) == i.apex


def test_is_ideal_rejections(q4):
    a, b = q4.index("a"), q4.index("b")
    assert not is_ideal(q4, 0)
    # {a}: missing bot below it
    assert not is_ideal(q4, 1 << a)
    # {bot, a, b}: missing the join a v b = top
    assert not is_ideal(q4, 1 << q4.bottom | 1 << a | 1 << b)
    assert is_ideal(q4, q4.down[a])


def test_as_ideal(q4):
    i = as_ideal(q4, q4.down[q4.index("a")])
    assert i == principal(q4, q4.index("a"))
    with pytest.raises(Exception):
        as_ideal(q4, 1 << q4.index("a"))


def test_ideal_names_and_flags(q4):
    z, w = zero_ideal(q4), whole_ideal(q4)
    assert z.name == "↓bot" and w.name == "↓top"
    assert z.is_zero and not z.is_whole and z.proper
    assert w.is_whole and not w.proper
    assert z.size == 1 and w.size == 4
    assert z < w and z <= w and not w <= z
    assert q4.index("a") in principal(q4, q4.index("a"))


def test_carrier_mismatch(q4, l3):
    with pytest.raises(CarrierMismatch):
        meet_ideals(zero_ideal(q4), zero_ideal(l3))
    with pytest.raises(CarrierMismatch):
        zero_ideal(q4) <= zero_ideal(l3)


def test_generated_frozen_values(q4, l3):
    a, b = q4.index("a"), q4.index("b")
    assert generated(q4, 1 << a).members == q4.down[a]
    assert generated(q4, 1 << a | 1 << b) == whole_ideal(q4)
    one = l3.index("1")
    assert sorted(generated(l3, 1 << one).indices()) == [0, 1]
    with pytest.raises(EmptyGeneratorSet):
        generated(q4, 0)


def test_generated_equals_downset_of_join(q4, l3, m3):
    for q in (q4, l3, m3):
        for s in range(1, q.full + 1):
            want = q.down[q.join_of(x for x in range(q.n) if s >> x & 1)]
            assert generated(q, s).members == want


def test_ideal_from_closure(q4):
    a, b = q4.index("a"), q4.index("b")
    got = ideal_from_closure(q4, 1 << a | 1 << b)
    assert got == whole_ideal(q4)


def test_ops_frozen_values(q4, l3):
    a = principal(q4, q4.index("a"))
    b = principal(q4, q4.index("b"))
    assert meet_ideals(a, b) == zero_ideal(q4)
    assert join_ideals(a, b) == whole_ideal(q4)
    assert product_ideals(a, b) == zero_ideal(q4)
    assert residual(zero_ideal(q4), a) == b

    one = principal(l3, l3.index("1"))
    assert product_ideals(one, one) == zero_ideal(l3)
    assert residual(zero_ideal(l3), one) == one


def test_product_closure_agrees(q4, l3, m3):
    for q in (q4, l3, m3):
        ideals = enumerate_ideals(q)
        for i in ideals:
            for j in ideals:
                assert product_ideals(i, j) == product_closure(i, j)


def test_residual_is_largest_solution(q4, l3):
    for q in (q4, l3):
        ideals = enumerate_ideals(q)
        for i in ideals:
            for j in ideals:
                r = residual(i, j)
                assert product_ideals(r, j) <= i
                for k in ideals:
                    if product_ideals(k, j) <= i:
                        assert k <= r


def test_annihilator_frozen(q4):
    ann = annihilator(q4, 1 << q4.index("a"))
    assert set(ann.labels().split()) == {"bot", "b"}
    assert ann == residual(zero_ideal(q4), generated(q4, 1 << q4.index("a")))
    with pytest.raises(EmptyGeneratorSet):
        annihilator(q4, 0)


def test_ideal_quantale_q4(q4):
    iq = ideal_quantale(q4)
    assert iq.quantale.elements == ("↓bot", "↓a", "↓b", "↓top")
    assert iq.quantale.name == "q4_ideals"
    assert check_axioms(iq.quantale).ok
    h = iq.hom_from_base()
    assert h.check().ok
    # order is reflected, so the embedding is an isomorphism here
    for x in range(q4.n):
        for y in range(q4.n):
            assert q4.leq(x, y) == iq.quantale.leq(h(x), h(y))


def test_ideal_quantale_is_stable_under_iteration(l3):
    once = ideal_quantale(l3).quantale
    twice = ideal_quantale(once).quantale
    assert once.n == l3.n == twice.n


def test_extension_contraction_frozen(q4, c2, q4_to_c2):
    e = extension(q4_to_c2, principal(q4, q4.index("a")))
    assert e == whole_ideal(c2)
    c = contraction(q4_to_c2, zero_ideal(c2))
    assert set(c.labels().split()) == {"bot", "b"}
    # expansion and reduction
    for i in enumerate_ideals(q4):
        assert i <= contraction(q4_to_c2, extension(q4_to_c2, i))
    for j in enumerate_ideals(c2):
        assert extension(q4_to_c2, contraction(q4_to_c2, j)) <= j


def test_extension_rejects_invalid_hom(q4, c2):
    from qk.core import QuantaleHom

    bad = QuantaleHom(source=q4, target=c2, mapping=(0, 1, 1, 1), name="bad")
    with pytest.raises(HomInvalid):
        extension(bad, zero_ideal(q4))
    with pytest.raises(HomInvalid):
        contraction(bad, zero_ideal(c2))


def test_noncommutative_is_gated():
    nc = build_quantale(
        ["0", "1", "2"],
        [("0", "1"), ("1", "2")],
        [["0", "0", "0"], ["0", "0", "0"], ["0", "2", "2"]],
    )
    assert not nc.commutative
    with pytest.raises(NotCommutative):
        enumerate_ideals(nc)
    with pytest.raises(NotCommutative):
        generated(nc, 0b010)
    with pytest.raises(NotCommutative):
        ideal_quantale(nc)


def test_ideal_equality_and_hash(q4):
    i1 = principal(q4, q4.index("a"))
    i2 = Ideal(q4, q4.down[q4.index("a")])
    assert i1 == i2 and hash(i1) == hash(i2)
    assert len({i1, i2}) == 1
    assert i1 != principal(q4, q4.index("b"))
