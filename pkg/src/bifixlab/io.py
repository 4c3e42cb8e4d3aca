"""Line-oriented text format for DFAs and Graphviz export.

Format (``#`` starts a comment, blank lines are ignored)::

    dfa v1
    states <n>
    symbols <k> <name1> ... <namek>
    initial <q>
    finals <m> <f1> ... <fm>
    delta
    <k targets of state 0>
    ...
    <k targets of state n-1>
    end
"""
from __future__ import annotations

import sys

from .automata import Dfa
from .errors import InputError, ParseError
from .freeness import find_empty_state


def _logical_lines(text):
    for number, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield number, tokens


def _int(token, line, what):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what}: expected an integer, got {token!r}", line) from None


def parse_dfa(text: str) -> Dfa:
    lines = _logical_lines(text)
    last = [0]

    def take(what):
        try:
            number, tokens = next(lines)
        except StopIteration:
            raise ParseError(f"unexpected end of input, expected {what}", last[0] + 1) from None
        last[0] = number
        return number, tokens

    def keyword(word):
        number, tokens = take(f"'{word}'")
        if tokens[0] != word:
            raise ParseError(f"expected '{word}', got {tokens[0]!r}", number)
        return number, tokens[1:]

    number, tokens = take("header 'dfa v1'")
    if tokens != ["dfa", "v1"]:
        raise ParseError("malformed header, expected 'dfa v1'", number)

    number, rest = keyword("states")
    if len(rest) != 1:
        raise ParseError("'states' takes exactly one value", number)
    n = _int(rest[0], number, "states")
    if n < 1:
        raise ParseError("state count must be positive", number)

    number, rest = keyword("symbols")
    if not rest:
        raise ParseError("'symbols' needs a count", number)
    k = _int(rest[0], number, "symbols")
    names = rest[1:]
    if k < 1 or len(names) != k:
        raise ParseError(f"'symbols' declares {k} symbols but lists {len(names)}", number)
    if len(set(names)) != k:
        dupes = sorted({s for s in names if names.count(s) > 1})
        raise ParseError(f"duplicate symbols: {', '.join(dupes)}", number)

    number, rest = keyword("initial")
    if len(rest) != 1:
        raise ParseError("'initial' takes exactly one value", number)
    initial = _int(rest[0], number, "initial")
    if not 0 <= initial < n:
        raise ParseError(f"initial state {initial} out of range [0, {n})", number)

    number, rest = keyword("finals")
    if not rest:
        raise ParseError("'finals' needs a count", number)
    m = _int(rest[0], number, "finals")
    if len(rest) - 1 != m:
        raise ParseError(f"'finals' declares {m} states but lists {len(rest) - 1}", number)
    finals = [_int(t, number, "finals") for t in rest[1:]]
    for f in finals:
        if not 0 <= f < n:
            raise ParseError(f"final state {f} out of range [0, {n})", number)

    number, rest = keyword("delta")
    if rest:
        raise ParseError("'delta' takes no values", number)
    rows = []
    for q in range(n):
        number, tokens = take(f"delta row for state {q}")
        if tokens == ["end"]:
            raise ParseError(f"missing delta row for state {q}", number)
        if len(tokens) != k:
            raise ParseError(
                f"delta row for state {q} has {len(tokens)} targets, expected {k}", number)
        row = [_int(t, number, f"delta row for state {q}") for t in tokens]
        for t in row:
            if not 0 <= t < n:
                raise ParseError(f"state {q}: target {t} out of range [0, {n})", number)
        rows.append(row)
    number, tokens = take("'end'")
    if tokens != ["end"]:
        raise ParseError("expected 'end' after the delta rows", number)
    for number, _ in lines:
        raise ParseError("content after 'end'", number)
    try:
        return Dfa(tuple(names), rows, initial, frozenset(finals))
    except InputError as exc:
        raise ParseError(str(exc)) from None


def serialize_dfa(d: Dfa) -> str:
    finals = sorted(d.finals)
    out = [
        "dfa v1",
        f"states {d.state_count}",
        " ".join(["symbols", str(d.symbol_count), *d.alphabet]),
        f"initial {d.initial}",
        " ".join(["finals", str(len(finals)), *map(str, finals)]),
        "delta",
    ]
    out.extend(" ".join(map(str, row)) for row in d.delta.tolist())
    out.append("end")
    return "\n".join(out) + "\n"


def read_dfa(path) -> Dfa:
    if str(path) == "-":
        return parse_dfa(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_dfa(fh.read())


def write_dfa(d: Dfa, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_dfa(d))


def _quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(d: Dfa) -> str:
    """Graphviz digraph; parallel edges merge into one edge with a comma-joined label."""
    empty = find_empty_state(d)
    out = ["digraph dfa {", "  rankdir=LR;", "  node [shape=circle];",
           '  __start [shape=point, label=""];', f"  __start -> {d.initial};"]
    for q in range(d.state_count):
        attrs = []
        if q in d.finals:
            attrs.append("shape=doublecircle")
        if q == empty:
            attrs.append("style=dashed")
            attrs.append(f'label="{q} (empty)"')
        out.append(f"  {q} [{', '.join(attrs)}];" if attrs else f"  {q};")
    for p, row in enumerate(d.delta.tolist()):
        grouped = {}
        for a, q in enumerate(row):
            grouped.setdefault(q, []).append(d.alphabet[a])
        for q, names in grouped.items():
            out.append(f"  {p} -> {q} [label={_quote(','.join(names))}];")
    out.append("}")
    return "\n".join(out) + "\n"
