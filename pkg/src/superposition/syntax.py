"""Sentences of the superposition language: AST, parser, printer and traversals.

The AST has six node types.  ``\\/``, ``->``, ``<->`` and the dual
connective ``@`` are eliminated by the parser, so downstream code only
ever sees atoms, constants, negation, conjunction and superposition.

Concrete grammar, loosest binding first::

    iff   := imp ('<->' imp)*          left-assoc
    imp   := sup ('->' imp)?           right-assoc
    sup   := or (('|' | '@') or)*      left-assoc, one level
    or    := and ('\\/' and)*
    and   := unary ('&' unary)*
    unary := '~' unary | atom | 'top' | 'bot' | '(' iff ')'

Unicode spellings (``¬ ∧ ∨ → ↔ ∘ ⊤ ⊥``) and ``/\\`` are accepted as aliases.
"""
from __future__ import annotations

import re
from functools import lru_cache
from dataclasses import dataclass
from typing import Iterator, Optional

__all__ = [
    "Sentence", "Atom", "Top", "Bot", "Neg", "And", "Sup", "Meta",
    "ParseError", "parse", "to_text",
    "disj", "imp", "iff", "dual_op",
    "substitute", "dual", "strip_double_negations",
    "atoms", "subsentences", "sup_count", "is_classical",
]


class Sentence:
    """Base class of all AST nodes.  Nodes are immutable and compare structurally."""

    __slots__ = ()

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, repr=False)
class Atom(Sentence):
    name: str

    def __repr__(self):
        return f"Atom({self.name!r})"


@dataclass(frozen=True, repr=False)
class Top(Sentence):
    def __repr__(self):
        return "Top()"


@dataclass(frozen=True, repr=False)
class Bot(Sentence):
    def __repr__(self):
        return "Bot()"


@dataclass(frozen=True, repr=False)
class Neg(Sentence):
    child: Sentence

    def __repr__(self):
        return f"Neg({self.child!r})"


@dataclass(frozen=True, repr=False)
class And(Sentence):
    left: Sentence
    right: Sentence

    def __repr__(self):
        return f"And({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Sup(Sentence):
    left: Sentence
    right: Sentence

    def __repr__(self):
        return f"Sup({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Meta(Sentence):
    """Metavariable inside an axiom scheme; never produced by :func:`parse`."""

    name: str
    classical: bool = False

    def __repr__(self):
        return f"Meta({self.name!r})"


# -- derived connectives ----------------------------------------------------

def disj(a: Sentence, b: Sentence) -> Sentence:
    return Neg(And(Neg(a), Neg(b)))


def imp(a: Sentence, b: Sentence) -> Sentence:
    return Neg(And(a, Neg(b)))


def iff(a: Sentence, b: Sentence) -> Sentence:
    return And(imp(a, b), imp(b, a))


def dual_op(a: Sentence, b: Sentence) -> Sentence:
    """``a @ b``, i.e. ``~(~a | ~b)``."""
    return Neg(Sup(Neg(a), Neg(b)))


# -- printing ----------------------------------------------------------------

@lru_cache(maxsize=100_000)
def to_text(s: Sentence) -> str:
    """Binary nodes parenthesized, negation prefixed; ``parse(to_text(s)) == s``."""
    if isinstance(s, Atom):
        return s.name
    if isinstance(s, Top):
        return "top"
    if isinstance(s, Bot):
        return "bot"
    if isinstance(s, Neg):
        return f"~{to_text(s.child)}"
    if isinstance(s, And):
        return f"({to_text(s.left)} & {to_text(s.right)})"
    if isinstance(s, Sup):
        return f"({to_text(s.left)} | {to_text(s.right)})"
    if isinstance(s, Meta):
        return s.name
    raise TypeError(f"not a sentence: {s!r}")


# -- parsing -----------------------------------------------------------------

class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(
    r"\s*(?:(?P<op><->|->|\\/|/\\|[~&|@()¬∧∨→↔∘⊤⊥])|(?P<name>[A-Za-z][A-Za-z0-9_]*))"
)
_ALIASES = {"¬": "~", "∧": "&", "/\\": "&", "∨": "\\/", "→": "->", "↔": "<->",
            "∘": "@", "⊤": "top", "⊥": "bot"}
_ATOM = re.compile(r"[a-z][a-z0-9_]*\Z")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tok = m.group("op") or m.group("name")
        tokens.append((_ALIASES.get(tok, tok), m.start("op") if m.group("op") else m.start("name")))
        pos = m.end()
    tokens.append(("<eof>", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, metavars: Optional[dict[str, Meta]] = None):
        self.tokens = _tokenize(text)
        self.i = 0
        self.metavars = metavars

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def pos(self) -> int:
        return self.tokens[self.i][1]

    def take(self) -> str:
        tok = self.tokens[self.i][0]
        self.i += 1
        return tok

    def expect(self, tok: str):
        if self.peek() != tok:
            raise ParseError(f"expected {tok!r}, found {self.peek()!r}", self.pos())
        self.take()

    def parse(self) -> Sentence:
        s = self.iff()
        if self.peek() != "<eof>":
            raise ParseError(f"unexpected {self.peek()!r}", self.pos())
        return s

    def iff(self) -> Sentence:
        s = self.imp()
        while self.peek() == "<->":
            self.take()
            s = iff(s, self.imp())
        return s

    def imp(self) -> Sentence:
        s = self.sup()
        if self.peek() == "->":
            self.take()
            return imp(s, self.imp())
        return s

    def sup(self) -> Sentence:
        s = self.disj()
        while self.peek() in ("|", "@"):
            op = self.take()
            rhs = self.disj()
            s = Sup(s, rhs) if op == "|" else dual_op(s, rhs)
        return s

    def disj(self) -> Sentence:
        s = self.conj()
        while self.peek() == "\\/":
            self.take()
            s = disj(s, self.conj())
        return s

    def conj(self) -> Sentence:
        s = self.unary()
        while self.peek() == "&":
            self.take()
            s = And(s, self.unary())
        return s

    def unary(self) -> Sentence:
        tok, pos = self.tokens[self.i]
        if tok == "~":
            self.take()
            return Neg(self.unary())
        if tok == "(":
            self.take()
            s = self.iff()
            self.expect(")")
            return s
        if tok == "top":
            self.take()
            return Top()
        if tok == "bot":
            self.take()
            return Bot()
        if self.metavars is not None and tok in self.metavars:
            self.take()
            return self.metavars[tok]
        if _ATOM.match(tok):
            self.take()
            return Atom(tok)
        if tok == "<eof>":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {tok!r}", pos)


def parse(text: str) -> Sentence:
    """Parse ``text`` into a desugared sentence; raises :class:`ParseError`."""
    return _Parser(text).parse()


def parse_pattern(text: str, metavars: dict[str, Meta]) -> Sentence:
    """Parse a scheme whose uppercase names are the given metavariables."""
    return _Parser(text, metavars).parse()


# -- structural operations ---------------------------------------------------

def _rebuild(s: Sentence, fn) -> Sentence:
    if isinstance(s, Neg):
        return Neg(fn(s.child))
    if isinstance(s, And):
        return And(fn(s.left), fn(s.right))
    if isinstance(s, Sup):
        return Sup(fn(s.left), fn(s.right))
    return s


def substitute(phi: Sentence, sigma: Sentence, replacement: Sentence) -> Sentence:
    """Replace every occurrence of ``sigma`` in ``phi`` by ``replacement``."""
    if phi == sigma:
        return replacement
    return _rebuild(phi, lambda c: substitute(c, sigma, replacement))


def dual(phi: Sentence) -> Sentence:
    """Swap ``|`` and its dual throughout; classical subsentences are fixed."""
    if is_classical(phi):
        return phi
    if isinstance(phi, Sup):
        return dual_op(dual(phi.left), dual(phi.right))
    return _rebuild(phi, dual)


def strip_double_negations(phi: Sentence) -> Sentence:
    while isinstance(phi, Neg) and isinstance(phi.child, Neg):
        phi = phi.child.child
    return _rebuild(phi, strip_double_negations)


def children(s: Sentence) -> tuple[Sentence, ...]:
    if isinstance(s, Neg):
        return (s.child,)
    if isinstance(s, (And, Sup)):
        return (s.left, s.right)
    return ()


def walk(s: Sentence) -> Iterator[Sentence]:
    """Pre-order traversal of all nodes (with repetition)."""
    stack = [s]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def atoms(phi: Sentence) -> set[str]:
    return {n.name for n in walk(phi) if isinstance(n, Atom)}


def subsentences(phi: Sentence) -> set[Sentence]:
    return set(walk(phi))


def sup_count(phi: Sentence) -> int:
    return sum(1 for n in walk(phi) if isinstance(n, Sup))


def is_classical(phi: Sentence) -> bool:
    return not any(isinstance(n, Sup) for n in walk(phi))
