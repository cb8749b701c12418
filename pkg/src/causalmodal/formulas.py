"""Modal formula syntax trees, the ASCII surface syntax, and the axiom catalog.

Grammar (whitespace insensitive)::

    formula := iff
    iff     := imp ("<->" imp)*          # left-associative
    imp     := or ("->" imp)?            # right-associative
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "~" unary | "[]" unary | "<>" unary | atom
    atom    := "T" | "F" | IDENT | "@" IDENT | "(" formula ")"

``@name`` splices a catalog axiom wherever a formula is accepted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError


class Formula:
    """Base class for formula nodes; all nodes are immutable and hashable."""

    def __str__(self):
        return pretty(self)

    def __repr__(self):
        return f"{type(self).__name__}({pretty(self)!r})"


@dataclass(frozen=True, repr=False)
class Top(Formula):
    pass


@dataclass(frozen=True, repr=False)
class Bottom(Formula):
    pass


@dataclass(frozen=True, repr=False)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not _IDENT_RE.fullmatch(self.name):
            raise ValueError(f"invalid atom name: {self.name!r}")


@dataclass(frozen=True, repr=False)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True, repr=False)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, repr=False)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, repr=False)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, repr=False)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, repr=False)
class Box(Formula):
    arg: Formula


@dataclass(frozen=True, repr=False)
class Diamond(Formula):
    arg: Formula


TOP = Top()
BOTTOM = Bottom()

_IDENT_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")


def atoms(f: Formula) -> frozenset[str]:
    """Set of atom names occurring in the formula."""
    found: set[str] = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            found.add(node.name)
        elif isinstance(node, (Not, Box, Diamond)):
            stack.append(node.arg)
        elif isinstance(node, (And, Or, Implies, Iff)):
            stack.append(node.left)
            stack.append(node.right)
    return frozenset(found)


# ---------------------------------------------------------------------------
# Tokenizer / parser


_SYMBOLS = ("<->", "->", "<>", "[]", "~", "&", "|", "(", ")", "@")


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                tokens.append((sym, i))
                i += len(sym)
                break
        else:
            m = _IDENT_RE.match(text, i)
            if m is None:
                raise ParseError(i, {"identifier", "operator"}, c)
            tokens.append((m.group(), i))
            i += len(m.group())
    tokens.append(("<end>", n))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, wanted):
        tok, offset = self.tokens[self.pos]
        if tok != wanted:
            raise ParseError(offset, {wanted}, tok)
        self.pos += 1

    def fail(self, expected):
        tok, offset = self.tokens[self.pos]
        raise ParseError(offset, expected, tok)

    def formula(self):
        node = self.imp()
        while self.peek() == "<->":
            self.advance()
            node = Iff(node, self.imp())
        return node

    def imp(self):
        node = self.disj()
        if self.peek() == "->":
            self.advance()
            node = Implies(node, self.imp())
        return node

    def disj(self):
        node = self.conj()
        while self.peek() == "|":
            self.advance()
            node = Or(node, self.conj())
        return node

    def conj(self):
        node = self.unary()
        while self.peek() == "&":
            self.advance()
            node = And(node, self.unary())
        return node

    def unary(self):
        tok = self.peek()
        if tok == "~":
            self.advance()
            return Not(self.unary())
        if tok == "[]":
            self.advance()
            return Box(self.unary())
        if tok == "<>":
            self.advance()
            return Diamond(self.unary())
        return self.atom()

    def atom(self):
        tok, offset = self.tokens[self.pos]
        if tok == "(":
            self.advance()
            node = self.formula()
            self.expect(")")
            return node
        if tok == "@":
            self.advance()
            name, name_offset = self.advance()
            if name not in AXIOM_NAMES:
                raise ParseError(name_offset, set(AXIOM_NAMES), name)
            return axiom(name)
        if tok == "T":
            self.advance()
            return TOP
        if tok == "F":
            self.advance()
            return BOTTOM
        if _IDENT_RE.fullmatch(tok):
            self.advance()
            return Atom(tok)
        self.fail({"T", "F", "identifier", "@axiom", "(", "~", "[]", "<>"})


def parse_formula(text: str) -> Formula:
    """Parse the ASCII surface syntax into a formula tree."""
    parser = _Parser(_tokenize(text))
    node = parser.formula()
    if parser.peek() != "<end>":
        parser.fail({"<end>", "&", "|", "->", "<->"})
    return node


# ---------------------------------------------------------------------------
# Pretty printer

# Binding strength, loosest first.  Implication is right-associative, the
# other binary connectives left-associative; unary chains never need parens.
_PREC_IFF, _PREC_IMP, _PREC_OR, _PREC_AND, _PREC_UNARY, _PREC_ATOM = range(6)


def _prec(f):
    if isinstance(f, Iff):
        return _PREC_IFF
    if isinstance(f, Implies):
        return _PREC_IMP
    if isinstance(f, Or):
        return _PREC_OR
    if isinstance(f, And):
        return _PREC_AND
    if isinstance(f, (Not, Box, Diamond)):
        return _PREC_UNARY
    return _PREC_ATOM


def _render(f, min_prec):
    p = _prec(f)
    if p < min_prec:
        return "(" + _render(f, 0) + ")"
    if isinstance(f, Top):
        return "T"
    if isinstance(f, Bottom):
        return "F"
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        return "~" + _render(f.arg, _PREC_UNARY)
    if isinstance(f, Box):
        return "[]" + _render(f.arg, _PREC_UNARY)
    if isinstance(f, Diamond):
        return "<>" + _render(f.arg, _PREC_UNARY)
    if isinstance(f, And):
        return _render(f.left, _PREC_AND) + " & " + _render(f.right, _PREC_AND + 1)
    if isinstance(f, Or):
        return _render(f.left, _PREC_OR) + " | " + _render(f.right, _PREC_OR + 1)
    if isinstance(f, Implies):
        return _render(f.left, _PREC_IMP + 1) + " -> " + _render(f.right, _PREC_IMP)
    if isinstance(f, Iff):
        return _render(f.left, _PREC_IFF) + " <-> " + _render(f.right, _PREC_IFF + 1)
    raise TypeError(f"not a formula: {f!r}")


def pretty(f: Formula) -> str:
    """Canonical ASCII rendering; ``parse_formula(pretty(f)) == f``."""
    return _render(f, 0)


# ---------------------------------------------------------------------------
# Axiom catalog


def _conj(*parts):
    node = parts[0]
    for part in parts[1:]:
        node = And(node, part)
    return node


def _disj(*parts):
    node = parts[0]
    for part in parts[1:]:
        node = Or(node, part)
    return node


def _build_catalog():
    p1, p2, p3, q = Atom("p1"), Atom("p2"), Atom("p3"), Atom("q")

    # Schematic letters A, B instantiated as p1, p2; for frame validity this
    # loses no generality because validity quantifies over valuations.
    a4 = Implies(Diamond(Diamond(p1)), Diamond(p1))
    aT = Implies(p1, Diamond(p1))
    aD = Diamond(TOP)
    ad = Implies(Diamond(p1), Diamond(Diamond(p1)))
    ad2 = Implies(
        _conj(Diamond(p1), Diamond(p2)),
        Diamond(_conj(Diamond(p1), Diamond(p2))),
    )
    a2 = Implies(Diamond(Box(p1)), Box(Diamond(p1)))

    ad32 = Implies(
        _conj(Diamond(p1), Diamond(p2), Diamond(p3)),
        _disj(
            Diamond(_conj(Diamond(p1), Diamond(p2))),
            Diamond(_conj(Diamond(p1), Diamond(p3))),
            Diamond(_conj(Diamond(p2), Diamond(p3))),
        ),
    )

    def marked(a, b):
        # a holds here, b does not hold here or anywhere later
        return _conj(a, Not(b), Box(Not(b)))

    after_consequent = _disj(
        Diamond(_conj(Diamond(p1), Diamond(q))),
        Diamond(_conj(Diamond(p2), Diamond(q))),
    )
    inner = _conj(Diamond(marked(p1, p2)), Diamond(marked(p2, p1)))
    aaf = Implies(_conj(Diamond(inner), Diamond(q)), after_consequent)
    # aa2f is aaf with the antecedent's leading diamond removed
    aa2f = Implies(_conj(inner, Diamond(q)), after_consequent)

    def guard(i):
        # Q_i := p_i => /\_{j != i} (~p_j & []~p_j)
        ps = [p1, p2, p3]
        others = [p for j, p in enumerate(ps, start=1) if j != i]
        body = _conj(*[_conj(Not(p), Box(Not(p))) for p in others])
        return Implies(ps[i - 1], body)

    rob2 = Implies(
        _conj(
            Diamond(p1),
            Diamond(p2),
            Diamond(p3),
            Box(guard(1)),
            Box(guard(2)),
            Box(guard(3)),
        ),
        _disj(
            Diamond(_conj(Diamond(p1), Diamond(p2))),
            Diamond(_conj(Diamond(p1), Diamond(p3))),
            Diamond(_conj(Diamond(p2), Diamond(p3))),
        ),
    )

    return {
        "a4": a4,
        "aT": aT,
        "aD": aD,
        "ad": ad,
        "ad2": ad2,
        "a2": a2,
        "ad32": ad32,
        "aaf": aaf,
        "aa2f": aa2f,
        "rob2": rob2,
    }


_CATALOG = _build_catalog()

AXIOM_NAMES: tuple[str, ...] = tuple(_CATALOG)


def axiom(name: str) -> Formula:
    """Catalog lookup; total on the tag set, ValueError otherwise."""
    try:
        return _CATALOG[name]
    except KeyError:
        raise ValueError(f"unknown axiom {name!r}; known: {', '.join(AXIOM_NAMES)}") from None
