"""Decision procedures: tautology, satisfiability and entailment relative to a choice class."""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Mapping, Optional, Sequence

from .choice import (ChoiceClass, ChoiceModel, ExplicitTable, OrderBacked, Pair, Tag,
                     build_neg_dec_regular_order, build_regular_order, _topological)
from .classical import (atom_order, evaluate, falsifying_assignment, is_tautology as classical_tautology,
                        quotient, row_assignment, truth_table, DEFAULT_ATOM_CUTOFF)
from .collapse import (DEFAULT_PATTERN_CAP, PatternExplosionError, collapse,
                       commitment_sentences, enumerate_collapses, merge)
from .syntax import And, Bot, Neg, Sentence, Top, atoms, disj, to_text


class UnrealizableError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    value: bool
    assignment: Optional[dict] = None
    model: Optional[ChoiceModel] = None

    def __bool__(self):
        return self.value

    @property
    def witness(self):
        return None if self.assignment is None else (self.assignment, self.model)


# -- realizability -------------------------------------------------------------

def _constraints(commitments) -> list[tuple[Sentence, Sentence]]:
    return [(chosen, key.other(chosen)) for key, chosen in commitments]


def _dec_universe(sentences: Iterable[Sentence], x: ChoiceClass) -> set[Sentence]:
    base = set(sentences)
    if x.variant is not None:
        base |= {Top(), Bot()}
    return base | {Neg(s) for s in base}


def _reg_class_choices(commitments, q) -> Optional[dict]:
    """Class-level choice per inequivalent class pair, or None on a conflict."""
    chosen_class: dict[frozenset, int] = {}
    for key, chosen in commitments:
        ca, cb = q.class_index(key.first), q.class_index(key.second)
        if ca == cb:
            continue
        pair = frozenset((ca, cb))
        winner = q.class_index(chosen)
        if chosen_class.setdefault(pair, winner) != winner:
            return None
    return chosen_class


def _order_for(commitments, x: ChoiceClass, universe: Iterable[Sentence]):
    """Realizing order for Asso, Reg*, Dec; None if unrealizable."""
    constraints = _constraints(commitments)
    universe = set(universe) | commitment_sentences(commitments)
    if x.tag is Tag.ASSO:
        nodes = sorted(universe, key=to_text)
        order = _topological(nodes, constraints, key=to_text)
        return None if order is None else tuple(order)
    if x.tag is Tag.REG_STAR:
        return build_regular_order(quotient(universe), constraints)
    return build_neg_dec_regular_order(quotient(_dec_universe(universe, x)), constraints, x.variant)


def realizable(commitments, x: ChoiceClass) -> bool:
    commitments = frozenset(commitments)
    if x.tag is Tag.F:
        return True
    if x.tag is Tag.REG:
        return _reg_class_choices(commitments, quotient(commitment_sentences(commitments))) is not None
    return _order_for(commitments, x, ()) is not None


def extend_to_model(commitments, x: ChoiceClass, universe: Iterable[Sentence] = ()) -> ChoiceModel:
    """A model of class ``x`` on ``universe`` (plus the committed sentences) agreeing with ``commitments``.

    F and Reg give explicit tables; the ordered classes give order-backed models.
    """
    commitments = frozenset(commitments)
    universe = set(universe) | commitment_sentences(commitments)
    if x.tag in (Tag.ASSO, Tag.REG_STAR, Tag.DEC):
        order = _order_for(commitments, x, universe)
        if order is None:
            raise UnrealizableError(f"commitments not realizable in {x}")
        return OrderBacked(order)
    fixed = dict(commitments)
    nodes = sorted(universe, key=to_text)
    q = quotient(nodes)
    class_choice: dict = {}
    if x.tag is Tag.REG:
        class_choice = _reg_class_choices(commitments, q)
        if class_choice is None:
            raise UnrealizableError(f"commitments not realizable in {x}")
    entries = {}
    for i, a in enumerate(nodes):
        for b in nodes[i + 1:]:
            key = Pair.of(a, b)
            ca, cb = q.class_index(a), q.class_index(b)
            if key in fixed:
                entries[key] = fixed[key]
            elif ca == cb:
                entries[key] = key.first
            else:
                # uncommitted: the class chosen elsewhere, else the earlier class
                winner = class_choice.setdefault(frozenset((ca, cb)), min(ca, cb))
                entries[key] = a if ca == winner else b
    return ExplicitTable(entries)


# -- tautology -----------------------------------------------------------------

def _witness_universe(phi_patterns_commitments, x: ChoiceClass) -> set[Sentence]:
    sentences = commitment_sentences(phi_patterns_commitments)
    if x.tag is Tag.DEC:
        return _dec_universe(sentences, x)
    return sentences


def is_tautology(phi: Sentence, x: ChoiceClass, cap: int = DEFAULT_PATTERN_CAP) -> Verdict:
    """Is ``phi`` true under every assignment and every model in ``x``?

    On failure the verdict carries a falsifying assignment over ``atoms(phi)``
    and a model of ``x`` realizing the collapse that is false there.
    """
    names = atoms(phi)
    for pattern in enumerate_collapses(phi, cap):
        if classical_tautology(pattern.result):
            continue
        if not realizable(pattern.commitments, x):
            continue
        assignment = falsifying_assignment(pattern.result, names)
        model = extend_to_model(pattern.commitments, x, _witness_universe(pattern.commitments, x))
        return Verdict(False, assignment, model)
    return Verdict(True)


# -- satisfiability ------------------------------------------------------------

def is_satisfiable(sigma: Iterable[Sentence], x: ChoiceClass, cap: int = DEFAULT_PATTERN_CAP,
                   atom_cutoff: int = DEFAULT_ATOM_CUTOFF) -> Verdict:
    """Is there one model of ``x`` and one assignment making every sentence of ``sigma`` true?

    Depth-first over one collapse pattern per sentence, keeping the merged
    commitments consistent and realizable and the collapsed results jointly
    satisfiable.
    """
    sentences = list(dict.fromkeys(sigma))
    pattern_lists = [enumerate_collapses(s, cap) for s in sentences]
    if prod(len(p) for p in pattern_lists) > cap:
        raise PatternExplosionError(f"more than {cap} pattern combinations")
    order = atom_order(sentences, atom_cutoff)
    full = (1 << (1 << len(order))) - 1
    # try sentences with fewest patterns first; results only matter as a set
    index_order = sorted(range(len(sentences)), key=lambda i: len(pattern_lists[i]))

    def search(depth: int, commitments, rows: int):
        if depth == len(index_order):
            return commitments, rows
        for pattern in pattern_lists[index_order[depth]]:
            merged = merge(commitments, pattern.commitments)
            if merged is None:
                continue
            new_rows = rows & truth_table(pattern.result, order)
            if not new_rows:
                continue
            if merged != commitments and not realizable(merged, x):
                continue
            found = search(depth + 1, merged, new_rows)
            if found is not None:
                return found
        return None

    found = search(0, frozenset(), full)
    if found is None:
        return Verdict(False)
    commitments, rows = found
    assignment = row_assignment((rows & -rows).bit_length() - 1, order)
    model = extend_to_model(commitments, x, _witness_universe(commitments, x))
    return Verdict(True, assignment, model)


def entails(sigma: Iterable[Sentence], phi: Sentence, x: ChoiceClass,
            cap: int = DEFAULT_PATTERN_CAP) -> Verdict:
    """``sigma`` entails ``phi`` in ``x``; a failing verdict carries a countermodel."""
    sat = is_satisfiable(list(sigma) + [Neg(phi)], x, cap)
    return Verdict(not sat.value, sat.assignment, sat.model)


def are_equivalent_in(phi: Sentence, psi: Sentence, x: ChoiceClass,
                      cap: int = DEFAULT_PATTERN_CAP) -> Verdict:
    forward = entails([phi], psi, x, cap)
    return forward if not forward else entails([psi], phi, x, cap)


# -- evaluation ----------------------------------------------------------------

def model_check(assignment: Mapping[str, bool], f: ChoiceModel, phi: Sentence) -> bool:
    return evaluate(assignment, collapse(f, phi))


def nary_sup(f: OrderBacked, phis: Sequence[Sentence], assignment: Mapping[str, bool]) -> bool:
    """Truth value of the n-ary superposition of ``phis``: the order-least collapse wins."""
    if not isinstance(f, OrderBacked):
        raise TypeError("n-ary superposition needs an order-backed model")
    if not phis:
        raise ValueError("n-ary superposition of no sentences")
    collapsed = [collapse(f, phi) for phi in phis]
    return evaluate(assignment, min(collapsed, key=f.position))


def interpret(phi: Sentence, mode: str) -> Sentence:
    """Read every ``|`` as conjunction (``mode='and'``) or disjunction (``mode='or'``)."""
    if mode not in ("and", "or"):
        raise ValueError(f"unknown interpretation mode {mode!r}")
    from .syntax import Sup
    if isinstance(phi, Sup):
        left, right = interpret(phi.left, mode), interpret(phi.right, mode)
        return And(left, right) if mode == "and" else disj(left, right)
    if isinstance(phi, Neg):
        return Neg(interpret(phi.child, mode))
    if isinstance(phi, And):
        return And(interpret(phi.left, mode), interpret(phi.right, mode))
    return phi
