"""Text formats for games, reduction specs and strategies.

Game file::

    # comments start with '#'
    2 2
    1 -1
    -1 1

Spec file (1-based strategy indices; one ``dist`` group per block of the
reduced player's partition)::

    player: 1
    rows: {1,2}{3,4}
    cols: {1,2}{3,4}
    dist: 2/3 1/3 | 2/3 1/3

Rendering is canonical, so ``render(parse(text)) == text`` for any text that
is already canonical.
"""

import re

from .errors import GKTError, ParseError
from .game import Game, Partition, ReductionSpec
from .numeric import parse_rational, render, render_vector


def _content_lines(text):
    """(line number, text) for non-comment, non-blank lines."""
    for no, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield no, line


def _tokens(line):
    """(1-based column, token) pairs for whitespace-separated tokens."""
    return [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", line)]


def _positive_int(tok, no, col, what):
    if not tok.isdigit() or int(tok) < 1:
        raise ParseError(f"{what} must be a positive integer, got {tok!r}", no, col)
    return int(tok)


def parse_game(text):
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty game file", 1, 1)
    no, header = lines[0]
    toks = _tokens(header)
    if len(toks) != 2:
        raise ParseError("header must be 'm n'", no, 1)
    m = _positive_int(toks[0][1], no, toks[0][0], "row count")
    n = _positive_int(toks[1][1], no, toks[1][0], "column count")
    body = lines[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else no + 1)
        raise ParseError(f"expected {m} payoff rows, found {len(body)}", at, 1)
    rows = []
    for no, line in body:
        toks = _tokens(line)
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, found {len(toks)}", no, 1)
        rows.append(tuple(parse_rational(t, line=no, column=c) for c, t in toks))
    return Game(tuple(rows))


def render_game(g):
    lines = [f"{g.rows} {g.cols}"]
    lines += [render_vector(row) for row in g.payoffs]
    return "\n".join(lines) + "\n"


def parse_blocks(text, line=None, column=1):
    """``{1,2}{3}`` (1-based) to a list of 0-based index tuples, unvalidated."""
    blocks = []
    pos = 0
    s = text
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        if s[pos] != "{":
            raise ParseError(f"expected '{{' in partition {text!r}", line, column + pos)
        end = s.find("}", pos)
        if end < 0:
            raise ParseError(f"unclosed block in partition {text!r}", line, column + pos)
        inner = s[pos + 1:end]
        block = []
        off = pos + 1
        for part in inner.split(","):
            tok = part.strip()
            if not tok.isdigit() or int(tok) < 1:
                raise ParseError(f"bad strategy index {tok!r}", line, column + off)
            block.append(int(tok) - 1)
            off += len(part) + 1
        blocks.append(tuple(block))
        pos = end + 1
    if not blocks:
        raise ParseError(f"no blocks in {text!r}", line, column)
    return blocks


def parse_subset(text):
    """A single block such as ``{1,3}``, returned as sorted 0-based indices."""
    blocks = parse_blocks(text)
    if len(blocks) != 1:
        raise ParseError(f"expected exactly one block, got {text!r}")
    if len(set(blocks[0])) != len(blocks[0]):
        raise ParseError(f"repeated index in {text!r}")
    return tuple(sorted(blocks[0]))


def parse_partition(text, line=None, column=1):
    """``{1,2}{3}`` (1-based) to a :class:`Partition`."""
    blocks = parse_blocks(text, line, column)
    try:
        return Partition(tuple(blocks))
    except GKTError as exc:
        raise ParseError(str(exc), line, column) from None


def parse_vector(text, line=None, column=1):
    toks = _tokens(text)
    if not toks:
        raise ParseError("empty vector", line, column)
    return tuple(parse_rational(t, line=line, column=column + c - 1) for c, t in toks)


def parse_profile(text, line=None, column=1):
    groups = []
    off = 0
    for part in text.split("|"):
        groups.append(parse_vector(part, line, column + off))
        off += len(part) + 1
    return tuple(groups)


def render_profile(profile):
    return " | ".join(render_vector(d) for d in profile)


_SPEC_KEYS = ("player", "rows", "cols", "dist")


def parse_spec(text):
    fields = {}
    for no, line in _content_lines(text):
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in _SPEC_KEYS:
            raise ParseError(f"expected one of {', '.join(_SPEC_KEYS)} followed by ':'", no, 1)
        if key in fields:
            raise ParseError(f"duplicate key {key!r}", no, 1)
        fields[key] = (no, len(key) + 2 + (len(rest) - len(rest.lstrip())), rest.strip())
    for key in _SPEC_KEYS:
        if key not in fields:
            raise ParseError(f"missing '{key}:' line")
    no, col, val = fields["player"]
    if val not in ("1", "2"):
        raise ParseError(f"player must be 1 or 2, got {val!r}", no, col)
    player = int(val)
    rows = parse_partition(fields["rows"][2], fields["rows"][0], fields["rows"][1])
    cols = parse_partition(fields["cols"][2], fields["cols"][0], fields["cols"][1])
    no, col, val = fields["dist"]
    profile = parse_profile(val, no, col)
    try:
        return ReductionSpec(player, rows, cols, profile)
    except GKTError as exc:
        raise ParseError(str(exc), no, col) from None


def render_spec(spec):
    return (
        f"player: {spec.reduced_player}\n"
        f"rows: {spec.row_partition}\n"
        f"cols: {spec.col_partition}\n"
        f"dist: {render_profile(spec.profile)}\n"
    )


def read_game(path):
    with open(path, encoding="utf-8") as fh:
        return parse_game(fh.read())


def read_spec(path):
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())


def strategy_text(x):
    return render_vector(x)


__all__ = [
    "parse_game", "render_game", "parse_spec", "render_spec", "parse_partition",
    "parse_profile", "render_profile", "parse_vector", "read_game", "read_spec", "render",
]
