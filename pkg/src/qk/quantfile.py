"""Plain-text exchange format for finite quantales and their homs.

A carrier file looks like:

    # product of two points
    quantale q4
    elements: bot a b top
    order:
      bot <= a
      bot <= b
      a <= top
      b <= top
    mul:
      bot: bot bot bot bot
      a:   bot a   bot a
      b:   bot bot b   b
      top: bot a   b   top
    end

Order lines are generators; the reflexive transitive closure is taken.
Comments run from '#' to end of line.  Labels are any run of characters
without whitespace, '#' or ':'.  The parser is liberal about alignment
and blank lines; the writer always emits the canonical form (elements in
index order, covering pairs only, single spaces), so writing, parsing
and writing again reproduces the first output byte for byte.

A hom file names its endpoint files relative to its own location:

    hom collapse : q4.quant -> c2.quant
    map:
      bot -> bot
      a -> top
      b -> bot
      top -> top
    end
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .core import FiniteQuantale, QuantaleHom, bits, build_quantale
from .errors import (
    DuplicateLabel,
    QuantSyntaxError,
    RowArity,
    UndeclaredLabel,
)

_RESERVED = {"<=", "->", "end"}


def _tokens(line: str):
    """(token, 1-based column) pairs, comment stripped."""
    cut = line.find("#")
    if cut >= 0:
        line = line[:cut]
    out = []
    col = 0
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        start = i
        while i < len(line) and not line[i].isspace():
            i += 1
        out.append((line[start:i], start + 1))
    return out


def _check_label(tok: str, line: int, col: int) -> str:
    if ":" in tok or tok in _RESERVED:
        raise QuantSyntaxError(f"invalid label {tok!r}", line, col)
    return tok


@dataclass(eq=False)
class QuantSource:
    """Parsed but unresolved carrier file, with source positions."""

    name: str
    elements: tuple[str, ...]
    order_pairs: tuple[tuple[str, str], ...]
    mul_rows: tuple[tuple[str, tuple[str, ...]], ...]
    spans: dict = field(default_factory=dict)

    def where(self, key) -> tuple[int | None, int | None]:
        return self.spans.get(key, (None, None))


def parse_quant_source(text: str) -> QuantSource:
    lines = text.splitlines()
    rows = [(k + 1, _tokens(raw)) for k, raw in enumerate(lines)]
    rows = [(ln, toks) for ln, toks in rows if toks]
    pos = 0

    def need(what: str):
        if pos >= len(rows):
            raise QuantSyntaxError(f"unexpected end of file, expected {what}", len(lines) or 1, 1)
        return rows[pos]

    ln, toks = need("'quantale NAME'")
    if len(toks) != 2 or toks[0][0] != "quantale":
        raise QuantSyntaxError("expected 'quantale NAME'", ln, toks[0][1])
    name = _check_label(toks[1][0], ln, toks[1][1])
    pos += 1

    ln, toks = need("'elements:'")
    if toks[0][0] != "elements:":
        raise QuantSyntaxError("expected 'elements:'", ln, toks[0][1])
    spans: dict = {}
    elements: list[str] = []
    for tok, col in toks[1:]:
        lbl = _check_label(tok, ln, col)
        if lbl in elements:
            raise DuplicateLabel(f"element {lbl!r} declared twice", ln, col)
        spans[("element", lbl)] = (ln, col)
        elements.append(lbl)
    pos += 1
    # further element lines until the order section
    while True:
        ln, toks = need("'order:'")
        if toks[0][0] == "order:":
            break
        for tok, col in toks:
            lbl = _check_label(tok, ln, col)
            if lbl in elements:
                raise DuplicateLabel(f"element {lbl!r} declared twice", ln, col)
            spans[("element", lbl)] = (ln, col)
            elements.append(lbl)
        pos += 1
    if not elements:
        raise QuantSyntaxError("no elements declared", ln, toks[0][1])
    pos += 1

    order: list[tuple[str, str]] = []
    while True:
        ln, toks = need("an order pair or 'mul:'")
        if toks[0][0] == "mul:":
            break
        if len(toks) != 3 or toks[1][0] != "<=":
            raise QuantSyntaxError("expected 'A <= B'", ln, toks[0][1])
        lo, lo_col = toks[0]
        hi, hi_col = toks[2]
        spans[("order", len(order))] = (ln, lo_col)
        for lbl, col in ((lo, lo_col), (hi, hi_col)):
            if lbl not in elements:
                raise UndeclaredLabel(f"label {lbl!r} is not a declared element", ln, col)
        order.append((lo, hi))
        pos += 1
    pos += 1

    mul: list[tuple[str, tuple[str, ...]]] = []
    seen_rows = set()
    while True:
        ln, toks = need("a multiplication row or 'end'")
        if toks[0][0] == "end":
            break
        head, head_col = toks[0]
        if not head.endswith(":") or len(head) < 2:
            raise QuantSyntaxError("expected 'X: ...' multiplication row", ln, head_col)
        row_label = head[:-1]
        if row_label not in elements:
            raise UndeclaredLabel(
                f"label {row_label!r} is not a declared element", ln, head_col
            )
        if row_label in seen_rows:
            raise DuplicateLabel(f"row {row_label!r} given twice", ln, head_col)
        seen_rows.add(row_label)
        entries = []
        for tok, col in toks[1:]:
            if tok not in elements:
                raise UndeclaredLabel(f"label {tok!r} is not a declared element", ln, col)
            entries.append(tok)
        if len(entries) != len(elements):
            raise RowArity(
                f"row {row_label!r} has {len(entries)} entries, expected {len(elements)}",
                ln,
                head_col,
            )
        spans[("mul", row_label)] = (ln, head_col)
        mul.append((row_label, tuple(entries)))
        pos += 1
    end_ln = ln
    pos += 1
    if pos < len(rows):
        ln, toks = rows[pos]
        raise QuantSyntaxError("content after 'end'", ln, toks[0][1])

    for lbl in elements:
        if lbl not in seen_rows:
            raise RowArity(f"no multiplication row for {lbl!r}", end_ln, 1)
    return QuantSource(
        name=name,
        elements=tuple(elements),
        order_pairs=tuple(order),
        mul_rows=tuple(mul),
        spans=spans,
    )


def source_to_quantale(src: QuantSource) -> FiniteQuantale:
    by_label = dict(src.mul_rows)
    table = [by_label[lbl] for lbl in src.elements]
    return build_quantale(
        src.elements, src.order_pairs, table, name=src.name
    )


def parse_quant(text: str) -> FiniteQuantale:
    """Parse a carrier file; the algebra is not certified (see check_axioms)."""
    return source_to_quantale(parse_quant_source(text))


def load_quant(path) -> FiniteQuantale:
    return parse_quant(Path(path).read_text(encoding="utf-8"))


def _covers(q: FiniteQuantale, lo: int, hi: int) -> bool:
    if lo == hi or not q.leq(lo, hi):
        return False
    between = q.up[lo] & q.down[hi] & ~(1 << lo) & ~(1 << hi)
    return between == 0


def write_quant(q: FiniteQuantale) -> str:
    """Canonical text form; see the module docstring for the guarantees."""
    if not q.name or any(ch.isspace() for ch in q.name) or ":" in q.name:
        raise ValueError(f"name {q.name!r} is not a single printable token")
    for lbl in q.elements:
        if ":" in lbl or "#" in lbl or any(ch.isspace() for ch in lbl):
            raise ValueError(f"element label {lbl!r} cannot be written")
    lines = [f"quantale {q.name}", "elements: " + " ".join(q.elements), "order:"]
    for lo in range(q.n):
        for hi in bits(q.up[lo]):
            if _covers(q, lo, hi):
                lines.append(f"  {q.elements[lo]} <= {q.elements[hi]}")
    lines.append("mul:")
    for i in range(q.n):
        row = " ".join(q.elements[v] for v in q.mul[i])
        lines.append(f"  {q.elements[i]}: {row}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def save_quant(q: FiniteQuantale, path) -> None:
    Path(path).write_text(write_quant(q), encoding="utf-8")


def parse_hom(text: str, base_dir) -> QuantaleHom:
    """Parse a hom file; endpoint files load relative to base_dir.

    The mapping is returned unvalidated so a deliberately wrong file can
    still be inspected; run .check() for the verdict.
    """
    base = Path(base_dir)
    lines = text.splitlines()
    rows = [(k + 1, _tokens(raw)) for k, raw in enumerate(lines)]
    rows = [(ln, toks) for ln, toks in rows if toks]
    pos = 0

    def need(what: str):
        if pos >= len(rows):
            raise QuantSyntaxError(f"unexpected end of file, expected {what}", len(lines) or 1, 1)
        return rows[pos]

    ln, toks = need("'hom NAME : SRC -> DST'")
    shape_ok = (
        len(toks) == 6
        and toks[0][0] == "hom"
        and toks[2][0] == ":"
        and toks[4][0] == "->"
    )
    if not shape_ok:
        raise QuantSyntaxError("expected 'hom NAME : SRC -> DST'", ln, toks[0][1])
    name = toks[1][0]
    src_path = base / toks[3][0]
    dst_path = base / toks[5][0]
    if not src_path.is_file():
        raise QuantSyntaxError(f"no such carrier file: {src_path}", ln, toks[3][1])
    if not dst_path.is_file():
        raise QuantSyntaxError(f"no such carrier file: {dst_path}", ln, toks[5][1])
    source = load_quant(src_path)
    target = load_quant(dst_path)
    pos += 1

    ln, toks = need("'map:'")
    if toks[0][0] != "map:":
        raise QuantSyntaxError("expected 'map:'", ln, toks[0][1])
    pos += 1

    images: dict[int, int] = {}
    while True:
        ln, toks = need("a 'x -> y' line or 'end'")
        if toks[0][0] == "end":
            break
        if len(toks) != 3 or toks[1][0] != "->":
            raise QuantSyntaxError("expected 'x -> y'", ln, toks[0][1])
        x_lbl, x_col = toks[0]
        y_lbl, y_col = toks[2]
        if x_lbl not in source.elements:
            raise UndeclaredLabel(
                f"label {x_lbl!r} is not an element of {source.name}", ln, x_col
            )
        if y_lbl not in target.elements:
            raise UndeclaredLabel(
                f"label {y_lbl!r} is not an element of {target.name}", ln, y_col
            )
        x = source.index(x_lbl)
        if x in images:
            raise DuplicateLabel(f"element {x_lbl!r} mapped twice", ln, x_col)
        images[x] = target.index(y_lbl)
        pos += 1
    pos += 1
    if pos < len(rows):
        ln, toks = rows[pos]
        raise QuantSyntaxError("content after 'end'", ln, toks[0][1])
    missing = [source.elements[i] for i in range(source.n) if i not in images]
    if missing:
        raise RowArity(f"no image given for {missing[0]!r}", ln, 1)
    mapping = tuple(images[i] for i in range(source.n))
    return QuantaleHom(source=source, target=target, mapping=mapping, name=name)


def load_hom(path) -> QuantaleHom:
    p = Path(path)
    return parse_hom(p.read_text(encoding="utf-8"), p.parent)
