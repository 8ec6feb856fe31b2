"""Bundled carrier generators.

Four families plus one fixed reference instance:

  powerset k      all subsets of a k-point set, multiplication = intersection
  lowersets       down-closed subsets of a finite poset, mul = intersection
  opens           open sets of a finite topology, mul = intersection
  lukasiewicz n   chain 0..n-1 with a & b = max(0, a + b - (n - 1))
  m3              a five-element diamond with a unit adjoined; every product
                  of non-unit elements is bottom

The diamond alone admits no valid multiplication: distribution forces
p & (q v r) = p while p & q and p & r both sit below the diamond's bottom,
so a separate unit on top is the smallest repair.  The instance exists to
witness a non-distributive ideal lattice.

Each generator returns a carrier that has already passed check_axioms.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .core import ELEMENT_CAP, FiniteQuantale, PASSED, bits, build_quantale, check_axioms
from .errors import NotAPartialOrder, TooLarge

POWERSET_MAX = 5


def _checked(q: FiniteQuantale) -> FiniteQuantale:
    report = check_axioms(q)
    if not report.ok:
        raise AssertionError(f"generator produced an invalid carrier: {report}")
    return q.with_status(PASSED)


def _subset_label(s: int, points: int) -> str:
    """bot for the empty set, top for the full set, else the point digits."""
    if s == 0:
        return "bot"
    if s == (1 << points) - 1 and points > 1:
        return "top"
    return "".join(str(p + 1) for p in bits(s))


def _set_quantale(points: int, sets: Iterable[int], name: str) -> FiniteQuantale:
    """Common path for powerset/lowersets/opens: a family of subsets ordered
    by inclusion, multiplied by intersection.  The family must be closed
    under union and intersection and contain the empty and full set."""
    family = sorted(set(sets), key=lambda s: (bin(s).count("1"), s))
    labels = [_subset_label(s, points) for s in family]
    pairs = [
        (labels[i], labels[j])
        for i, a in enumerate(family)
        for j, b in enumerate(family)
        if a & ~b == 0
    ]
    pos = {s: i for i, s in enumerate(family)}
    mul = [[labels[pos[a & b]] for b in family] for a in family]
    return _checked(build_quantale(labels, pairs, mul, name=name))


def powerset_quantale(k: int, *, name: str | None = None) -> FiniteQuantale:
    """The full powerset of a k-point set; k <= 5."""
    if not 0 <= k <= POWERSET_MAX:
        raise TooLarge(f"powerset supports 0 <= k <= {POWERSET_MAX}, got {k}")
    return _set_quantale(k, range(1 << k), name or f"powerset{k}")


def lukasiewicz_quantale(n: int, *, name: str | None = None, cap: int = ELEMENT_CAP) -> FiniteQuantale:
    """The n-element chain 0 < 1 < ... < n-1 with truncated addition."""
    if n < 1:
        raise TooLarge("lukasiewicz needs at least one element")
    if n > cap:
        raise TooLarge(f"{n} elements exceeds the cap of {cap}")
    labels = [str(i) for i in range(n)]
    pairs = [(labels[i], labels[i + 1]) for i in range(n - 1)]
    mul = [[labels[max(0, a + b - (n - 1))] for b in range(n)] for a in range(n)]
    return _checked(build_quantale(labels, pairs, mul, name=name or f"lukasiewicz{n}"))


def lowersets_quantale(
    points: int,
    relations: Iterable[tuple[int, int]],
    *,
    name: str | None = None,
    cap: int = ELEMENT_CAP,
) -> FiniteQuantale:
    """Down-closed subsets of the poset generated by (lo, hi) pairs on 0..points-1."""
    rel = list(relations)
    below = [1 << p for p in range(points)]
    changed = True
    while changed:
        changed = False
        for lo, hi in rel:
            merged = below[hi] | below[lo]
            if merged != below[hi]:
                below[hi] = merged
                changed = True
    for p in range(points):
        for s in bits(below[p]):
            if s != p and below[s] >> p & 1:
                raise NotAPartialOrder(f"points {s} and {p} are below each other")
    lower = [
        s
        for s in range(1 << points)
        if all(below[p] & ~s == 0 for p in bits(s))
    ]
    if len(lower) > cap:
        raise TooLarge(f"{len(lower)} lower sets exceeds the cap of {cap}")
    return _set_quantale(points, lower, name or f"lowersets{points}")


def opens_quantale(
    points: int,
    opens: Iterable[int | frozenset[int]],
    *,
    name: str | None = None,
) -> FiniteQuantale:
    """Open sets of a finite topology, given as bitmasks or frozensets."""
    fam = set()
    for s in opens:
        fam.add(s if isinstance(s, int) else sum(1 << p for p in s))
    full = (1 << points) - 1
    if 0 not in fam or full not in fam:
        raise ValueError("a topology contains the empty and the full set")
    for a in fam:
        for b in fam:
            if a | b not in fam or a & b not in fam:
                raise ValueError("opens must be closed under union and intersection")
    return _set_quantale(points, fam, name or f"opens{points}")


def m3_quantale(*, name: str = "m3") -> FiniteQuantale:
    """Diamond p, q, r over bot, joined at m, with a separate unit on top."""
    labels = ["bot", "p", "q", "r", "m", "top"]
    pairs = [("bot", "p"), ("bot", "q"), ("bot", "r"), ("p", "m"), ("q", "m"), ("r", "m"), ("m", "top")]
    unit = len(labels) - 1

    def prod(a: int, b: int) -> int:
        if a == unit:
            return b
        if b == unit:
            return a
        return 0

    mul = [[labels[prod(a, b)] for b in range(len(labels))] for a in range(len(labels))]
    return _checked(build_quantale(labels, pairs, mul, name=name))


def chain_poset(n: int) -> tuple[int, list[tuple[int, int]]]:
    return n, [(i, i + 1) for i in range(n - 1)]


def antichain_poset(n: int) -> tuple[int, list[tuple[int, int]]]:
    return n, []


def all_posets(max_points: int) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """All posets on 1..max_points points, one representative per isomorphism
    class.  Brute force; intended for max_points <= 4."""
    out: list[tuple[int, tuple[tuple[int, int], ...]]] = []
    for n in range(1, max_points + 1):
        pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
        seen: set[frozenset[tuple[int, int]]] = set()
        for choice in range(1 << len(pairs)):
            rel = frozenset(pairs[k] for k in range(len(pairs)) if choice >> k & 1)
            if any((b, a) in rel for a, b in rel):
                continue
            if any(
                (a, c) not in rel
                for a, b in rel
                for b2, c in rel
                if b == b2 and a != c
            ):
                continue
            if rel in seen:
                continue
            out.append((n, tuple(sorted(rel))))
            for perm in itertools.permutations(range(n)):
                seen.add(frozenset((perm[a], perm[b]) for a, b in rel))
    return out


def all_topologies(max_points: int) -> list[tuple[int, tuple[int, ...]]]:
    """All labeled topologies on 1..max_points points; max_points <= 3."""
    out: list[tuple[int, tuple[int, ...]]] = []
    for n in range(1, max_points + 1):
        full = (1 << n) - 1
        middles = [s for s in range(1, full)]
        for choice in range(1 << len(middles)):
            fam = {0, full} | {middles[k] for k in range(len(middles)) if choice >> k & 1}
            if all(a | b in fam and a & b in fam for a in fam for b in fam):
                out.append((n, tuple(sorted(fam))))
    return out


def generate(kind: str, arg=None, *, cap: int = ELEMENT_CAP) -> FiniteQuantale:
    """Dispatch on kind; every result has passed check_axioms.

    kinds: powerset (arg k), lukasiewicz (arg n), lowersets (arg (points,
    relations)), opens (arg (points, open sets)), m3, ideal_quantale
    (arg a carrier).
    """
    if kind == "powerset":
        return powerset_quantale(int(arg))
    if kind == "lukasiewicz":
        return lukasiewicz_quantale(int(arg), cap=cap)
    if kind == "lowersets":
        points, relations = arg
        return lowersets_quantale(points, relations, cap=cap)
    if kind == "opens":
        points, opens = arg
        return opens_quantale(points, opens)
    if kind == "m3":
        return m3_quantale()
    if kind == "ideal_quantale":
        from .ideals import ideal_quantale

        return ideal_quantale(arg, cap=cap).quantale.with_status(PASSED)
    raise ValueError(f"unknown generator kind {kind!r}")


_NAMED_TOPOLOGIES = {
    "sierpinski": (2, (0b00, 0b01, 0b11)),
    "discrete1": (1, (0b0, 0b1)),
    "discrete2": (2, (0b00, 0b01, 0b10, 0b11)),
    "discrete3": (3, tuple(range(8))),
    "indiscrete2": (2, (0b00, 0b11)),
    "indiscrete3": (3, (0b000, 0b111)),
    "point3": (3, (0b000, 0b001, 0b011, 0b101, 0b111)),
}


def _parse_poset_arg(text: str) -> tuple[int, list[tuple[int, int]]]:
    if text.startswith("chain"):
        return chain_poset(int(text[5:]))
    if text.startswith("antichain"):
        return antichain_poset(int(text[9:]))
    # explicit form: "N:a<b,c<d"
    head, _, rest = text.partition(":")
    points = int(head)
    relations = []
    if rest:
        for part in rest.split(","):
            lo, _, hi = part.partition("<")
            relations.append((int(lo), int(hi)))
    return points, relations


def _parse_opens_arg(text: str) -> tuple[int, tuple[int, ...]]:
    if text in _NAMED_TOPOLOGIES:
        return _NAMED_TOPOLOGIES[text]
    # explicit form: "N:-,0,01,012" with - for the empty set
    head, _, rest = text.partition(":")
    points = int(head)
    fam = []
    for part in rest.split(","):
        fam.append(0 if part == "-" else sum(1 << int(c) for c in part))
    return points, tuple(fam)


def generate_from_spec(spec: str, *, cap: int = ELEMENT_CAP, loader=None) -> FiniteQuantale:
    """CLI form KIND[:ARG], e.g. powerset:2, lowersets:chain3, opens:sierpinski,
    lukasiewicz:5, m3, ideal_quantale:FILE (loader maps a path to a carrier)."""
    kind, _, arg = spec.partition(":")
    if kind == "powerset":
        return generate("powerset", int(arg), cap=cap)
    if kind == "lukasiewicz":
        return generate("lukasiewicz", int(arg), cap=cap)
    if kind == "lowersets":
        return generate("lowersets", _parse_poset_arg(arg), cap=cap)
    if kind == "opens":
        return generate("opens", _parse_opens_arg(arg), cap=cap)
    if kind == "m3":
        return generate("m3", cap=cap)
    if kind == "ideal_quantale":
        if loader is None:
            raise ValueError("ideal_quantale needs a loader for its argument")
        return generate("ideal_quantale", loader(arg), cap=cap)
    raise ValueError(f"unknown generator kind {kind!r}")
