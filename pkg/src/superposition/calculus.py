"""Hilbert-style systems K0-K3: scheme matching, proof scripts and proof checking."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .choice import F
from .classical import is_tautology as classical_tautology
from .decision import is_satisfiable, is_tautology
from .syntax import (And, Atom, Meta, Neg, ParseError, Sentence, Sup, imp, is_classical, parse,
                     parse_pattern, to_text)

_PHI, _PSI, _SIGMA = Meta("phi"), Meta("psi"), Meta("sigma")
_ALPHA = Meta("alpha", classical=True)
_VARS = {"A": _PHI, "B": _PSI, "C": _SIGMA, "X": _ALPHA}

_SCHEME_TEXT = {
    "PL1": "A -> (B -> A)",
    "PL2": "(A -> (B -> C)) -> ((A -> B) -> (A -> C))",
    "PL3": "(~A -> ~B) -> ((~A -> B) -> A)",
    "S1": "A & B -> A | B",
    "S2": "A | B -> A \\/ B",
    "S3": "A | B -> B | A",
    "S4": "(A | B) | C -> A | (B | C)",
    "S5": "A & ~B -> (A | B <-> ~A | ~B)",
    "S6": "bot | top",
    "S6p": "X | top",
    "S7": "~(bot | top)",
    "S7p": "~(X | bot)",
}
SCHEMES: dict[str, Sentence] = {k: parse_pattern(v, _VARS) for k, v in _SCHEME_TEXT.items()}

# "PL": any substitution instance of a classical tautology
SCHEME_IDS = ("PL1", "PL2", "PL3", "PL", "S1", "S2", "S3", "S4", "S5", "S6", "S6p", "S7", "S7p")

_BASE = {"PL1", "PL2", "PL3", "PL", "S1", "S2", "S3"}
SYSTEM_AXIOMS = {
    "K0": frozenset(_BASE),
    "K1": frozenset(_BASE),
    "K2": frozenset(_BASE | {"S4"}),
    "K3": frozenset(_BASE | {"S4", "S5"}),
}


class UnknownSchemeError(ValueError):
    pass


def _unify(pattern: Sentence, s: Sentence, bindings: dict) -> bool:
    if isinstance(pattern, Meta):
        if pattern.name in bindings:
            return bindings[pattern.name] == s
        if pattern.classical and not is_classical(s):
            return False
        bindings[pattern.name] = s
        return True
    if type(pattern) is not type(s):
        return False
    if isinstance(pattern, Neg):
        return _unify(pattern.child, s.child, bindings)
    if isinstance(pattern, (And, Sup)):
        return _unify(pattern.left, s.left, bindings) and _unify(pattern.right, s.right, bindings)
    return pattern == s


def classical_skeleton(s: Sentence) -> Sentence:
    """Replace each maximal superposition subterm by a fresh atom (equal subterms share one)."""
    names: dict[Sentence, Atom] = {}

    def go(node):
        if isinstance(node, Sup):
            return names.setdefault(node, Atom(f"_s{len(names)}"))
        if isinstance(node, Neg):
            return Neg(go(node.child))
        if isinstance(node, And):
            return And(go(node.left), go(node.right))
        return node

    return go(s)


def match_scheme(s: Sentence, scheme_id: str) -> Optional[dict[str, Sentence]]:
    """Metavariable bindings making ``s`` an instance of the scheme, or None."""
    if scheme_id == "PL":
        return {} if classical_tautology(classical_skeleton(s)) else None
    try:
        pattern = SCHEMES[scheme_id]
    except KeyError:
        raise UnknownSchemeError(scheme_id) from None
    bindings: dict[str, Sentence] = {}
    return bindings if _unify(pattern, s, bindings) else None


def instantiate(scheme_id: str, bindings: dict[str, Sentence]) -> Sentence:
    def go(node):
        if isinstance(node, Meta):
            return bindings[node.name]
        if isinstance(node, Neg):
            return Neg(go(node.child))
        if isinstance(node, And):
            return And(go(node.left), go(node.right))
        if isinstance(node, Sup):
            return Sup(go(node.left), go(node.right))
        return node

    if scheme_id not in SCHEMES:
        raise UnknownSchemeError(scheme_id)
    return go(SCHEMES[scheme_id])


# -- proof scripts -------------------------------------------------------------

@dataclass(frozen=True)
class Premise:
    def __str__(self):
        return "premise"


@dataclass(frozen=True)
class Axiom:
    scheme: str
    bindings: Optional[dict] = field(default=None, compare=False)

    def __str__(self):
        return f"ax {self.scheme}"


@dataclass(frozen=True)
class ModusPonens:
    minor: int   # line holding the antecedent
    major: int   # line holding the implication

    def __str__(self):
        return f"mp {self.minor} {self.major}"


@dataclass(frozen=True)
class SalvaVeritate:
    source: int

    def __str__(self):
        return f"sv {self.source}"


Justification = Union[Premise, Axiom, ModusPonens, SalvaVeritate]


@dataclass(frozen=True)
class ProofLine:
    index: int
    sentence: Sentence
    justification: Justification


@dataclass(frozen=True)
class ProofScript:
    system: str
    premises: tuple[Sentence, ...]
    lines: tuple[ProofLine, ...]


@dataclass(frozen=True)
class ProofResult:
    accepted: bool
    line: Optional[int] = None
    reason: Optional[str] = None
    message: str = ""

    def __bool__(self):
        return self.accepted


class ProofFormatError(ValueError):
    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _parse_sentence(text: str, lineno: int) -> Sentence:
    try:
        return parse(text)
    except ParseError as exc:
        raise ProofFormatError(str(exc), lineno) from None


def _parse_justification(text: str, lineno: int) -> Justification:
    parts = text.split()
    if not parts:
        raise ProofFormatError("missing justification", lineno)
    kind, args = parts[0].lower(), parts[1:]
    try:
        if kind == "premise" and not args:
            return Premise()
        if kind == "ax" and len(args) == 1:
            if args[0] not in SCHEME_IDS:
                raise ProofFormatError(f"unknown scheme {args[0]!r}", lineno)
            return Axiom(args[0])
        if kind == "mp" and len(args) == 2:
            return ModusPonens(int(args[0]), int(args[1]))
        if kind == "sv" and len(args) == 1:
            return SalvaVeritate(int(args[0]))
    except ValueError as exc:
        if isinstance(exc, ProofFormatError):
            raise
        raise ProofFormatError(f"bad line reference in {text.strip()!r}", lineno) from None
    raise ProofFormatError(f"malformed justification {text.strip()!r}", lineno)


def parse_proof(text: str) -> ProofScript:
    system = None
    premises: list[Sentence] = []
    lines: list[ProofLine] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if system is None:
            if head != "system" or rest.strip() not in SYSTEM_AXIOMS:
                raise ProofFormatError("expected 'system K0|K1|K2|K3'", lineno)
            system = rest.strip()
        elif head == "premise":
            if lines:
                raise ProofFormatError("premise declarations must precede proof lines", lineno)
            premises.append(_parse_sentence(rest, lineno))
        elif head.isdigit():
            body, sep, just = rest.rpartition(";")
            if not sep:
                raise ProofFormatError("expected '<n> <sentence> ; <justification>'", lineno)
            index = int(head)
            if lines and index <= lines[-1].index:
                raise ProofFormatError("line numbers must increase", lineno)
            lines.append(ProofLine(index, _parse_sentence(body, lineno),
                                   _parse_justification(just, lineno)))
        else:
            raise ProofFormatError(f"unrecognized line {line!r}", lineno)
    if system is None:
        raise ProofFormatError("empty proof file", 1)
    return ProofScript(system, tuple(premises), tuple(lines))


def format_proof(script: ProofScript) -> str:
    out = [f"system {script.system}"]
    out += [f"premise {to_text(p)}" for p in script.premises]
    out += [f"{ln.index} {to_text(ln.sentence)} ; {ln.justification}" for ln in script.lines]
    return "\n".join(out) + "\n"


# -- checking ------------------------------------------------------------------

def split_iff(s: Sentence) -> Optional[tuple[Sentence, Sentence]]:
    """``(a, b)`` if ``s`` is literally ``a <-> b`` after desugaring."""
    if (isinstance(s, And) and isinstance(s.left, Neg) and isinstance(s.right, Neg)
            and isinstance(s.left.child, And) and isinstance(s.right.child, And)):
        a, not_b = s.left.child.left, s.left.child.right
        b, not_a = s.right.child.left, s.right.child.right
        if not_b == Neg(b) and not_a == Neg(a):
            return a, b
    return None


def theoremhood_k0(phi: Sentence) -> bool:
    return is_tautology(phi, F).value


def consistent_k0(sigma: Iterable[Sentence]) -> bool:
    return is_satisfiable(sigma, F).value


def check_proof(script: ProofScript) -> ProofResult:
    """Accept, or reject at the first failing line with a reason code.

    Reason codes: ``bad-premise``, ``bad-scheme``, ``bad-index``, ``bad-mp``,
    ``sv-not-available-in-K0``, ``sv-shape``, ``sv-side-condition-failed``.
    """
    if script.system not in SYSTEM_AXIOMS:
        raise ValueError(f"unknown system {script.system!r}")
    axioms = SYSTEM_AXIOMS[script.system]
    premises = set(script.premises)
    seen: dict[int, Sentence] = {}

    def reject(line, reason, message):
        return ProofResult(False, line.index, reason, message)

    def cited(line, i):
        return seen.get(i) if i < line.index else None

    for line in script.lines:
        s, just = line.sentence, line.justification
        if isinstance(just, Premise):
            if s not in premises:
                return reject(line, "bad-premise", "sentence is not a declared premise")
        elif isinstance(just, Axiom):
            if just.scheme not in axioms:
                return reject(line, "bad-scheme", f"{just.scheme} is not an axiom of {script.system}")
            bindings = match_scheme(s, just.scheme)
            if bindings is None:
                return reject(line, "bad-scheme", f"not an instance of {just.scheme}")
            if just.bindings is not None and just.scheme != "PL":
                if any(bindings.get(k) != v for k, v in just.bindings.items()):
                    return reject(line, "bad-scheme", "given bindings do not match")
        elif isinstance(just, ModusPonens):
            minor, major = cited(line, just.minor), cited(line, just.major)
            if minor is None or major is None:
                return reject(line, "bad-index", "cited line missing or not earlier")
            if major != imp(minor, s):
                return reject(line, "bad-mp", f"line {just.major} is not line {just.minor} -> this line")
        elif isinstance(just, SalvaVeritate):
            if script.system == "K0":
                return reject(line, "sv-not-available-in-K0", "K0 has modus ponens only")
            source = cited(line, just.source)
            if source is None:
                return reject(line, "bad-index", "cited line missing or not earlier")
            premise_sides = split_iff(source)
            conclusion_sides = split_iff(s)
            if premise_sides is None or conclusion_sides is None:
                return reject(line, "sv-shape", "expected an equivalence on both lines")
            left, right = conclusion_sides
            if not (isinstance(left, Sup) and isinstance(right, Sup) and left.right == right.right
                    and (left.left, right.left) == premise_sides):
                return reject(line, "sv-shape", "conclusion is not (a | c) <-> (b | c) for cited a <-> b")
            if not theoremhood_k0(source):
                return reject(line, "sv-side-condition-failed", "cited equivalence is not a K0 theorem")
        else:
            raise TypeError(f"unknown justification {just!r}")
        seen[line.index] = s
    return ProofResult(True)
