"""Join-expression language.

Examples: ``A(1)C``, ``B(2@1,0)B``, ``X(A,A@0,A)``, ``TWIST(S,S)``,
``<path/to/file.dsn>(1)A``.  Joins associate to the left; parentheses group.
``(k@i,j)`` picks the i-th (k)-handle of the left operand and the j-th of the
right one, counting in the sorted handle list.  In ``X(...)`` and ``TWIST(...)``
an entry ``e@i`` picks the i-th handle of the full x- or y-handle list.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .catalog import load_dsn, named
from .dessin import Dessin
from .joins import twist_y_join, x_handles, x_join, y_handles, y_join

__all__ = [
    "ExprError",
    "Atom",
    "YJoin",
    "Twist",
    "XJoin",
    "parse_expr",
    "format_expr",
    "evaluate",
]


class ExprError(ValueError):
    pass


@dataclass(frozen=True)
class Atom:
    name: str
    is_path: bool = False


@dataclass(frozen=True)
class YJoin:
    left: "Expr"
    k: int
    left_index: int
    right_index: int
    right: "Expr"


@dataclass(frozen=True)
class Twist:
    left: "Expr"
    left_index: int
    right: "Expr"
    right_index: int


@dataclass(frozen=True)
class XJoin:
    items: tuple  # ((expr, handle index), ...)


Expr = Union[Atom, YJoin, Twist, XJoin]

_TOKENS = re.compile(
    r"\s*(?:(?P<path><[^>]*>)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[(),@])|(?P<bad>\S))"
)


def _tokenize(text: str) -> list:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKENS.match(text, pos)
        if m is None:  # only trailing whitespace remains
            break
        pos = m.end()
        kind = m.lastgroup
        if kind == "bad":
            raise ExprError("unexpected %r at position %d" % (m.group(kind), m.start(kind)))
        out.append((kind, m.group(kind), m.start(kind)))
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, offset: int = 0):
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def take(self, kind: str, value: Optional[str] = None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] or "end of input"
            raise ExprError("expected %s at position %d, found %r" % (want, tok[2], got))
        self.i += 1
        return tok

    def at(self, kind: str, value: Optional[str] = None) -> bool:
        tok = self.peek()
        return tok[0] == kind and (value is None or tok[1] == value)

    def number(self) -> int:
        return int(self.take("int")[1])

    def expr(self) -> Expr:
        node = self.term()
        while self.at("sym", "("):
            self.take("sym", "(")
            pos = self.peek()[2]
            k = self.number()
            if k not in (1, 2, 3):
                raise ExprError("handle kind must be 1, 2 or 3 at position %d" % pos)
            li = ri = 0
            if self.at("sym", "@"):
                self.take("sym", "@")
                li = self.number()
                self.take("sym", ",")
                ri = self.number()
            self.take("sym", ")")
            node = YJoin(node, k, li, ri, self.term())
        return node

    def indexed(self) -> tuple:
        e = self.expr()
        idx = 0
        if self.at("sym", "@"):
            self.take("sym", "@")
            idx = self.number()
        return e, idx

    def term(self) -> Expr:
        tok = self.peek()
        if tok[0] == "path":
            self.i += 1
            return Atom(tok[1][1:-1].strip(), is_path=True)
        if tok[0] == "sym" and tok[1] == "(":
            self.take("sym", "(")
            e = self.expr()
            self.take("sym", ")")
            return e
        if tok[0] == "name":
            nxt = self.peek(1)
            if tok[1] == "X" and nxt[:2] == ("sym", "("):
                self.i += 2
                items = [self.indexed()]
                while self.at("sym", ","):
                    self.take("sym", ",")
                    items.append(self.indexed())
                self.take("sym", ")")
                if len(items) < 2:
                    raise ExprError("X(...) needs at least two entries at position %d" % tok[2])
                return XJoin(tuple(items))
            if tok[1] == "TWIST" and nxt[:2] == ("sym", "("):
                self.i += 2
                left, li = self.indexed()
                self.take("sym", ",")
                right, ri = self.indexed()
                self.take("sym", ")")
                return Twist(left, li, right, ri)
            self.i += 1
            return Atom(tok[1])
        raise ExprError("expected a dessin at position %d, found %r" % (tok[2], tok[1] or "end of input"))


def parse_expr(text: str) -> Expr:
    parser = _Parser(text)
    node = parser.expr()
    if not parser.at("end"):
        tok = parser.peek()
        raise ExprError("unexpected %r at position %d" % (tok[1], tok[2]))
    return node


def _fmt_indexed(e: Expr, idx: int) -> str:
    return format_expr(e) + ("@%d" % idx if idx else "")


def format_expr(e: Expr) -> str:
    if isinstance(e, Atom):
        return "<%s>" % e.name if e.is_path else e.name
    if isinstance(e, YJoin):
        sel = "@%d,%d" % (e.left_index, e.right_index) if (e.left_index or e.right_index) else ""
        right = format_expr(e.right)
        if isinstance(e.right, YJoin):
            right = "(" + right + ")"
        return "%s(%d%s)%s" % (format_expr(e.left), e.k, sel, right)
    if isinstance(e, Twist):
        return "TWIST(%s,%s)" % (_fmt_indexed(e.left, e.left_index), _fmt_indexed(e.right, e.right_index))
    return "X(%s)" % ",".join(_fmt_indexed(item, idx) for item, idx in e.items)


def _pick(handles: list, index: int, what: str):
    if not 0 <= index < len(handles):
        raise ExprError("%s handle index %d out of range (%d available)" % (what, index, len(handles)))
    return handles[index]


def evaluate(e: Expr, resolve: Callable[[str], Dessin] = named) -> Dessin:
    if isinstance(e, Atom):
        return load_dsn(e.name) if e.is_path else resolve(e.name)
    if isinstance(e, YJoin):
        left, right = evaluate(e.left, resolve), evaluate(e.right, resolve)
        hl = _pick([h for h in y_handles(left) if h.k == e.k], e.left_index, "left (%d)" % e.k)
        hr = _pick([h for h in y_handles(right) if h.k == e.k], e.right_index, "right (%d)" % e.k)
        return y_join(left, hl, right, hr)
    if isinstance(e, Twist):
        left, right = evaluate(e.left, resolve), evaluate(e.right, resolve)
        hl = _pick(y_handles(left), e.left_index, "left y")
        hr = _pick(y_handles(right), e.right_index, "right y")
        return twist_y_join(left, hl, right, hr)
    parts = []
    for item, idx in e.items:
        d = evaluate(item, resolve)
        parts.append((d, _pick(x_handles(d), idx, "x")))
    return x_join(parts)
