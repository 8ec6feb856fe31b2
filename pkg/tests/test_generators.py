import pytest
from hypothesis import given, settings, strategies as st

from qk.core import PASSED, check_axioms
from qk.errors import NotAPartialOrder, TooLarge
from qk.generators import (
    all_posets,
    all_topologies,
    antichain_poset,
    chain_poset,
    generate,
    generate_from_spec,
    lowersets_quantale,
    lukasiewicz_quantale,
    m3_quantale,
    opens_quantale,
    powerset_quantale,
)


def test_powerset_labels_and_tables(p3):
    assert p3.n == 8
    assert p3.elements[0] == "bot" and p3.elements[-1] == "top"
    assert set(p3.elements[1:-1]) == {"1", "2", "3", "12", "13", "23"}
    # multiplication is intersection, hence equal to meet
    assert p3.mul == p3.meet
    assert p3.status == PASSED


def test_powerset_small_and_cap():
    assert powerset_quantale(0).n == 1
    assert powerset_quantale(1).n == 2
    with pytest.raises(TooLarge):
        powerset_quantale(6)


def test_lukasiewicz_table():
    l5 = lukasiewicz_quantale(5)
    assert l5.n == 5
    assert l5.elements == ("0", "1", "2", "3", "4")
    idx = {lbl: i for i, lbl in enumerate(l5.elements)}
    for a in range(5):
        for b in range(5):
            assert l5.mul[idx[str(a)]][idx[str(b)]] == idx[str(max(0, a + b - 4))]
    assert check_axioms(l5).ok


def test_lowersets_of_chain_is_chain():
    q = lowersets_quantale(*chain_poset(3))
    assert q.n == 4
    for x in range(q.n):
        for y in range(q.n):
            assert q.leq(x, y) or q.leq(y, x)


def test_lowersets_of_antichain_is_powerset():
    q = lowersets_quantale(*antichain_poset(3))
    assert q.n == 8
    assert check_axioms(q).ok


def test_lowersets_rejects_cycle():
    with pytest.raises(NotAPartialOrder):
        lowersets_quantale(2, [(0, 1), (1, 0)])


def test_opens_sierpinski():
    q = opens_quantale(2, (0b00, 0b01, 0b11))
    assert q.n == 3
    assert check_axioms(q).ok


def test_opens_rejects_non_topology():
    # missing the union {0} | {1}
    with pytest.raises(ValueError):
        opens_quantale(2, (0b00, 0b01, 0b10))


def test_m3_shape(m3):
    assert m3.n == 6
    assert m3.elements == ("bot", "p", "q", "r", "m", "top")
    p, q_, top, bot = m3.index("p"), m3.index("q"), m3.top, m3.bottom
    assert m3.mul[p][q_] == bot
    assert m3.mul[p][p] == bot
    assert m3.mul[top][p] == p
    assert check_axioms(m3).ok


def test_all_posets_counts_match_known_values():
    ps = all_posets(4)
    by_size = {k: sum(1 for p in ps if p[0] == k) for k in (1, 2, 3, 4)}
    assert by_size == {1: 1, 2: 2, 3: 5, 4: 16}


def test_all_topologies_counts_match_known_values():
    ts = all_topologies(3)
    by_size = {k: sum(1 for t in ts if t[0] == k) for k in (1, 2, 3)}
    assert by_size == {1: 1, 2: 4, 3: 29}


def test_every_bundled_family_member_passes_axioms():
    qs = [powerset_quantale(k) for k in range(4)]
    qs += [lukasiewicz_quantale(n) for n in range(1, 6)]
    qs += [lowersets_quantale(*p) for p in all_posets(3)]
    qs += [opens_quantale(*t) for t in all_topologies(3)]
    qs.append(m3_quantale())
    for q in qs:
        assert check_axioms(q).ok, q.name


def test_generate_dispatch(q4):
    assert generate("powerset", 2).n == 4
    assert generate("lukasiewicz", 3).n == 3
    assert generate("m3").n == 6
    assert generate("ideal_quantale", q4).n == 4
    with pytest.raises(ValueError):
        generate("nope")


def test_generate_from_spec_forms():
    assert generate_from_spec("powerset:2").n == 4
    assert generate_from_spec("lukasiewicz:5").n == 5
    assert generate_from_spec("m3").n == 6
    assert generate_from_spec("lowersets:chain3").n == 4
    assert generate_from_spec("lowersets:antichain2").n == 4
    assert generate_from_spec("lowersets:3:0<1,0<2").n == 5
    assert generate_from_spec("opens:sierpinski").n == 3
    assert generate_from_spec("opens:2:-,0,01").n == 3
    with pytest.raises(ValueError):
        generate_from_spec("nope:1")
    with pytest.raises(ValueError):
        generate_from_spec("ideal_quantale:x")  # needs a loader


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_random_poset_lowersets_pass_axioms(data):
    n = data.draw(st.integers(min_value=1, max_value=5))
    pairs = data.draw(
        st.lists(
            st.tuples(
                st.integers(min_value=0, max_value=n - 1),
                st.integers(min_value=0, max_value=n - 1),
            ),
            max_size=8,
        )
    )
    pairs = [(a, b) for a, b in pairs if a != b]
    try:
        q = lowersets_quantale(n, pairs)
    except NotAPartialOrder:
        return
    assert check_axioms(q).ok
