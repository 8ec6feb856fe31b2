"""Finite integral commutative quantale carriers and element-level operations.

A carrier is a finite lattice given by explicit tables (order bitmasks,
join table, meet table) together with an n-by-n multiplication whose unit
is the top element.  Elements are indices into a label tuple.  Subsets of
the carrier are bitmask ints (bit i set <=> element i present); this keeps
the exhaustive machinery elsewhere in the package allocation-free.

Construction does not validate the algebra: build_quantale only certifies
the lattice part and returns a carrier whose status is "unchecked".
check_axioms re-derives everything, including the lattice tables, and is
the sole authority on whether an instance really is a quantale.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property, reduce
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateLabel,
    HomInvalid,
    MissingBound,
    NotALattice,
    NotAPartialOrder,
    RowArity,
    UndeclaredLabel,
)

ELEMENT_CAP = 4096

UNCHECKED = "unchecked"
PASSED = "passed"
FAILED = "failed"


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int] | int) -> int:
    """Accept either a ready-made bitmask or an iterable of indices."""
    if isinstance(indices, int):
        return indices
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True, eq=False)
class FiniteQuantale:
    """An immutable carrier.  Equality is identity; reuse instances.

    down[i] is the bitmask of elements <= i, so down[a] is also the member
    mask of the principal ideal at a.  join/meet/mul are n-by-n tables of
    element indices.
    """

    name: str
    elements: tuple[str, ...]
    down: tuple[int, ...]
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    status: str = UNCHECKED

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        """Bitmask of the whole carrier."""
        return (1 << len(self.elements)) - 1

    @cached_property
    def up(self) -> tuple[int, ...]:
        """up[i] = bitmask of elements >= i."""
        n = len(self.elements)
        up = [0] * n
        for j in range(n):
            dj = self.down[j]
            for i in bits(dj):
                up[i] |= 1 << j
        return tuple(up)

    @cached_property
    def commutative(self) -> bool:
        mul = self.mul
        n = len(self.elements)
        return all(mul[x][y] == mul[y][x] for x in range(n) for y in range(x + 1, n))

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise UndeclaredLabel(f"no element {label!r} in {self.name}") from None

    def label(self, i: int) -> str:
        return self.elements[i]

    def labels(self, mask: int) -> str:
        """Space-joined labels of a subset, in index order."""
        return " ".join(self.elements[i] for i in bits(mask))

    def join_of(self, xs: Iterable[int]) -> int:
        """Join of finitely many elements; empty join is bottom."""
        return reduce(lambda a, b: self.join[a][b], xs, self.bottom)

    def meet_of(self, xs: Iterable[int]) -> int:
        """Meet of finitely many elements; empty meet is top."""
        return reduce(lambda a, b: self.meet[a][b], xs, self.top)

    def same_structure(self, other: "FiniteQuantale") -> bool:
        """Structural equality: same name, labels and tables (status aside)."""
        return (
            self.name == other.name
            and self.elements == other.elements
            and self.down == other.down
            and self.mul == other.mul
        )

    def with_status(self, status: str) -> "FiniteQuantale":
        return replace(self, status=status)

    def __repr__(self) -> str:
        return f"<FiniteQuantale {self.name} n={self.n} status={self.status}>"


def _closure_up(n: int, edges: list[list[int]]) -> list[int]:
    """Reflexive-transitive reachability masks over the edge lists, iteratively."""
    up = [None] * n
    for start in range(n):
        if up[start] is not None:
            continue
        stack = [start]
        while stack:
            v = stack[-1]
            if up[v] is None:
                up[v] = 0  # mark in-progress
                stack.extend(w for w in edges[v] if up[w] is None)
                continue
            stack.pop()
            m = 1 << v
            for w in edges[v]:
                m |= up[w] if up[w] else (1 << w)
            up[v] = m
    # A cycle leaves some masks incomplete; one propagation sweep to fixpoint.
    changed = True
    while changed:
        changed = False
        for v in range(n):
            m = up[v]
            for w in edges[v]:
                m |= up[w]
            if m != up[v]:
                up[v] = m
                changed = True
    return up


def _least_of(mask: int, up: Sequence[int]) -> int | None:
    """The least element of the subset, or None if it has no least element."""
    for c in bits(mask):
        if mask & ~up[c] == 0:
            return c
    return None


def _greatest_of(mask: int, down: Sequence[int]) -> int | None:
    for c in bits(mask):
        if mask & ~down[c] == 0:
            return c
    return None


def build_quantale(
    elements: Sequence[str],
    leq_generators: Iterable[tuple[str, str]],
    mul_table: Sequence[Sequence[str]],
    *,
    name: str = "q",
) -> FiniteQuantale:
    """Assemble a carrier from labels, order generator pairs and a mul table.

    The order is the reflexive-transitive closure of the generator pairs
    (lo, hi), each read as lo <= hi.  The lattice part is certified here:
    every pair must have a least upper and greatest lower bound and global
    bounds must exist.  The algebra is left unchecked; see check_axioms.

    mul_table rows are label sequences: row x, column j gives x & elements[j].
    """
    elements = tuple(elements)
    n = len(elements)
    if n == 0:
        raise MissingBound("empty carrier has no bottom or top")
    index: dict[str, int] = {}
    for i, lbl in enumerate(elements):
        if lbl in index:
            raise DuplicateLabel(f"element {lbl!r} declared twice")
        index[lbl] = i

    def look(lbl: str) -> int:
        if lbl not in index:
            raise UndeclaredLabel(f"label {lbl!r} is not a declared element")
        return index[lbl]

    edges: list[list[int]] = [[] for _ in range(n)]
    for lo, hi in leq_generators:
        edges[look(lo)].append(look(hi))
    up = _closure_up(n, edges)
    for i in range(n):
        for j in bits(up[i]):
            if j != i and up[j] >> i & 1:
                raise NotAPartialOrder(
                    f"{elements[i]!r} and {elements[j]!r} are below each other"
                )
    down = [0] * n
    for i in range(n):
        for j in bits(up[i]):
            down[j] |= 1 << i

    full = (1 << n) - 1
    join_rows: list[tuple[int, ...]] = []
    meet_rows: list[tuple[int, ...]] = []
    for i in range(n):
        jr = []
        mr = []
        for j in range(n):
            l = _least_of(up[i] & up[j], up)
            if l is None:
                raise NotALattice(
                    f"{elements[i]!r} and {elements[j]!r} have no least upper bound"
                )
            jr.append(l)
            g = _greatest_of(down[i] & down[j], down)
            if g is None:
                raise NotALattice(
                    f"{elements[i]!r} and {elements[j]!r} have no greatest lower bound"
                )
            mr.append(g)
        join_rows.append(tuple(jr))
        meet_rows.append(tuple(mr))

    bottom = next((i for i in range(n) if up[i] == full), None)
    top = next((i for i in range(n) if down[i] == full), None)
    if bottom is None or top is None:
        raise MissingBound("carrier lacks a global bottom or top")

    if len(mul_table) != n:
        raise RowArity(f"expected {n} multiplication rows, got {len(mul_table)}")
    mul_rows = []
    for i, row in enumerate(mul_table):
        if len(row) != n:
            raise RowArity(
                f"row {elements[i]!r} has {len(row)} entries, expected {n}"
            )
        mul_rows.append(tuple(look(lbl) for lbl in row))

    return FiniteQuantale(
        name=name,
        elements=elements,
        down=tuple(down),
        join=tuple(join_rows),
        meet=tuple(meet_rows),
        mul=tuple(mul_rows),
        bottom=bottom,
        top=top,
    )


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of check_axioms.

    counterexamples holds at most one witness per failed axiom tag, as
    (tag, element index tuple).  Flags are true iff no witness was found
    for the corresponding group of axioms.
    """

    lattice_ok: bool
    assoc_ok: bool
    comm_ok: bool
    distrib_ok: bool
    identity_ok: bool
    counterexamples: tuple[tuple[str, tuple[int, ...]], ...]

    @property
    def ok(self) -> bool:
        return (
            self.lattice_ok
            and self.assoc_ok
            and self.comm_ok
            and self.distrib_ok
            and self.identity_ok
        )


def check_axioms(q: FiniteQuantale) -> AxiomReport:
    """Re-derive every axiom from the tables alone.

    Nothing from construction is trusted: the order must be a partial
    order, the join/meet tables must hold actual lubs/glbs, bounds must be
    global, and the multiplication must be associative, commutative,
    distributive over binary joins (plus x & bottom == bottom, which on a
    finite carrier extends both to the empty and to arbitrary joins) with
    top as unit.
    """
    n = q.n
    down, up, join, meet, mul = q.down, q.up, q.join, q.meet, q.mul
    full = q.full
    ce: list[tuple[str, tuple[int, ...]]] = []

    def found(tag: str) -> bool:
        return any(t == tag for t, _ in ce)

    # partial order: reflexive, antisymmetric, transitive
    for i in range(n):
        if not down[i] >> i & 1:
            ce.append(("partial_order", (i,)))
            break
        bad = False
        for j in bits(down[i]):
            if j != i and down[j] >> i & 1:
                ce.append(("partial_order", (i, j)))
                bad = True
                break
            if down[j] & ~down[i]:
                ce.append(("partial_order", (j, i)))
                bad = True
                break
        if bad:
            break
    # global bounds
    if not (0 <= q.bottom < n and 0 <= q.top < n and up[q.bottom] == full and down[q.top] == full):
        ce.append(("bounds", (q.bottom, q.top)))
    # join/meet tables are genuine lubs/glbs
    for i in range(n):
        done = False
        for j in range(n):
            l = join[i][j]
            commons = up[i] & up[j]
            if not (commons >> l & 1) or commons & ~up[l]:
                ce.append(("lub", (i, j)))
                done = True
                break
            g = meet[i][j]
            commons = down[i] & down[j]
            if not (commons >> g & 1) or commons & ~down[g]:
                ce.append(("glb", (i, j)))
                done = True
                break
        if done:
            break

    # associativity
    for x in range(n):
        mx = mul[x]
        stop = False
        for y in range(n):
            left_row = mul[mx[y]]
            my = mul[y]
            for z in range(n):
                if left_row[z] != mx[my[z]]:
                    ce.append(("assoc", (x, y, z)))
                    stop = True
                    break
            if stop:
                break
        if stop:
            break
    # commutativity
    for x in range(n):
        if found("comm"):
            break
        mx = mul[x]
        for y in range(x + 1, n):
            if mx[y] != mul[y][x]:
                ce.append(("comm", (x, y)))
                break
    # distribution over binary joins
    for x in range(n):
        mx = mul[x]
        stop = False
        for y in range(n):
            jy = join[y]
            mxy = mx[y]
            for z in range(n):
                if mx[jy[z]] != join[mxy][mx[z]]:
                    ce.append(("distrib", (x, y, z)))
                    stop = True
                    break
            if stop:
                break
        if stop:
            break
    # bottom annihilates (distribution over the empty join)
    b = q.bottom
    for x in range(n):
        if mul[x][b] != b:
            ce.append(("bot_absorb", (x,)))
            break
    # top is the unit
    t = q.top
    for x in range(n):
        if mul[x][t] != x:
            ce.append(("identity", (x,)))
            break

    lattice_ok = not (found("partial_order") or found("bounds") or found("lub") or found("glb"))
    return AxiomReport(
        lattice_ok=lattice_ok,
        assoc_ok=not found("assoc"),
        comm_ok=not found("comm"),
        distrib_ok=not (found("distrib") or found("bot_absorb")),
        identity_ok=not found("identity"),
        counterexamples=tuple(ce),
    )


def power(q: FiniteQuantale, x: int, n: int) -> int:
    """x to the n-th multiplicative power; x^0 is top (the unit)."""
    if n < 0:
        raise ValueError("negative power")
    acc = q.top
    row = q.mul[x]
    for _ in range(n):
        acc = row[acc]
    return acc


def power_of_join(q: FiniteQuantale, x: int, y: int, n: int) -> int:
    """Binomial expansion of (x v y)^n: the join of x^(n-k) & y^k, k = 0..n.

    The integer coefficients of the usual binomial formula collapse because
    join is idempotent.
    """
    acc = q.bottom
    for k in range(n + 1):
        term = q.mul[power(q, x, n - k)][power(q, y, k)]
        acc = q.join[acc][term]
    return acc


def is_unit(q: FiniteQuantale, x: int) -> bool:
    """Whether some y has x & y == top.

    On an integral carrier this forces x == top, but the scan is the
    definition and stays honest on broken tables.
    """
    row = q.mul[x]
    return any(row[y] == q.top for y in range(q.n))


@dataclass(frozen=True)
class HomReport:
    """check_hom outcome: ok, or the first violated condition with witness.

    condition is one of "arity", "order", "join", "meet", "mul"; the
    witness is a source-element index pair (or () for arity).
    """

    ok: bool
    condition: str | None = None
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True, eq=False)
class QuantaleHom:
    """A candidate structure map; mapping[i] is the target index of source i."""

    source: FiniteQuantale
    target: FiniteQuantale
    mapping: tuple[int, ...]
    name: str = "hom"

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def check(self) -> HomReport:
        return check_hom(self.mapping, self.source, self.target)

    def then(self, other: "QuantaleHom") -> "QuantaleHom":
        """Composite map: self first, then other."""
        if other.source is not self.target:
            raise HomInvalid("composition requires matching middle carrier")
        return QuantaleHom(
            source=self.source,
            target=other.target,
            mapping=tuple(other.mapping[y] for y in self.mapping),
            name=f"{self.name};{other.name}",
        )

    @classmethod
    def identity(cls, q: FiniteQuantale) -> "QuantaleHom":
        return cls(source=q, target=q, mapping=tuple(range(q.n)), name="id")

    def __repr__(self) -> str:
        return f"<QuantaleHom {self.name}: {self.source.name} -> {self.target.name}>"


def check_hom(
    mapping: Sequence[int], q: FiniteQuantale, q2: FiniteQuantale
) -> HomReport:
    """Check a candidate map for order, join, meet and mul preservation.

    Returns the first violation in that fixed condition order, with the
    source pair that witnesses it.
    """
    n = q.n
    if len(mapping) != n or any(not (0 <= v < q2.n) for v in mapping):
        return HomReport(ok=False, condition="arity", witness=())
    for x in range(n):
        fx = mapping[x]
        for y in bits(q.up[x]):
            if not q2.leq(fx, mapping[y]):
                return HomReport(ok=False, condition="order", witness=(x, y))
    for x in range(n):
        fx = mapping[x]
        for y in range(x, n):
            if mapping[q.join[x][y]] != q2.join[fx][mapping[y]]:
                return HomReport(ok=False, condition="join", witness=(x, y))
    for x in range(n):
        fx = mapping[x]
        for y in range(x, n):
            if mapping[q.meet[x][y]] != q2.meet[fx][mapping[y]]:
                return HomReport(ok=False, condition="meet", witness=(x, y))
    for x in range(n):
        fx = mapping[x]
        for y in range(n):
            if mapping[q.mul[x][y]] != q2.mul[fx][mapping[y]]:
                return HomReport(ok=False, condition="mul", witness=(x, y))
    return HomReport(ok=True)
