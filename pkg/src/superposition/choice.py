"""Choice-function models, class membership predicates and order constructors."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from .classical import ClassQuotient, are_equivalent, is_tautology, quotient
from .syntax import And, Bot, Neg, Sentence, Top, to_text


class DomainError(KeyError):
    """A pair was queried that the model does not define."""


class NotAssociativeError(ValueError):
    def __init__(self, witness):
        super().__init__(f"choice table is not associative: {tuple(map(to_text, witness))}")
        self.witness = witness


class UniverseNotClosedError(ValueError):
    pass


@dataclass(frozen=True, order=False)
class Pair:
    """Unordered pair of sentences, stored in canonical-text order."""

    first: Sentence
    second: Sentence

    @classmethod
    def of(cls, a: Sentence, b: Sentence) -> "Pair":
        return cls(a, b) if to_text(a) <= to_text(b) else cls(b, a)

    def members(self) -> tuple[Sentence, Sentence]:
        return (self.first, self.second)

    def other(self, s: Sentence) -> Sentence:
        return self.second if s == self.first else self.first

    def __str__(self):
        return "{" + to_text(self.first) + ", " + to_text(self.second) + "}"


class ChoiceModel:
    def choose(self, a: Sentence, b: Sentence) -> Sentence:
        raise NotImplementedError

    def universe(self) -> frozenset:
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class ExplicitTable(ChoiceModel):
    entries: Mapping[Pair, Sentence] = field(default_factory=dict)

    def __post_init__(self):
        for key, chosen in self.entries.items():
            if chosen not in key.members():
                raise ValueError(f"choice {to_text(chosen)} is not a member of {key}")
            if key.first == key.second:
                raise ValueError(f"degenerate pair {key} stored in a table")

    @classmethod
    def from_choices(cls, choices: Iterable[tuple[Sentence, Sentence, Sentence]]) -> "ExplicitTable":
        return cls({Pair.of(a, b): c for a, b, c in choices})

    def choose(self, a, b):
        if a == b:
            return a
        try:
            return self.entries[Pair.of(a, b)]
        except KeyError:
            raise DomainError(f"pair {Pair.of(a, b)} not in table") from None

    def universe(self):
        return frozenset(s for key in self.entries for s in key.members())

    def __eq__(self, other):
        return isinstance(other, ExplicitTable) and dict(self.entries) == dict(other.entries)

    def __repr__(self):
        body = ", ".join(f"{k}->{to_text(v)}" for k, v in self.entries.items())
        return f"ExplicitTable({body})"


@dataclass(frozen=True)
class OrderBacked(ChoiceModel):
    """``choose`` returns whichever argument comes first in ``order``."""

    order: tuple[Sentence, ...]
    _position: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        position = {s: i for i, s in enumerate(self.order)}
        if len(position) != len(self.order):
            raise ValueError("order contains duplicate sentences")
        object.__setattr__(self, "_position", position)

    def position(self, s: Sentence) -> int:
        try:
            return self._position[s]
        except KeyError:
            raise DomainError(f"{to_text(s)} not in order") from None

    def choose(self, a, b):
        if a == b:
            return a
        return a if self.position(a) < self.position(b) else b

    def universe(self):
        return frozenset(self.order)


class Tag(Enum):
    F = "F"
    ASSO = "Asso"
    REG = "Reg"
    REG_STAR = "RegStar"
    DEC = "Dec"


class DecVariant(Enum):
    TOP_BEFORE_BOT = "topBeforeBot"
    BOT_BEFORE_TOP = "botBeforeTop"
    TOP_LEAST = "topLeast"
    BOT_LEAST = "botLeast"


@dataclass(frozen=True)
class ChoiceClass:
    tag: Tag
    variant: Optional[DecVariant] = None

    def __post_init__(self):
        if self.variant is not None and self.tag is not Tag.DEC:
            raise ValueError("Dec variants only apply to the Dec class")

    def __str__(self):
        return self.tag.value + (f"[{self.variant.value}]" if self.variant else "")


F = ChoiceClass(Tag.F)
ASSO = ChoiceClass(Tag.ASSO)
REG = ChoiceClass(Tag.REG)
REG_STAR = ChoiceClass(Tag.REG_STAR)
DEC = ChoiceClass(Tag.DEC)
DEC_TOP_BEFORE_BOT = ChoiceClass(Tag.DEC, DecVariant.TOP_BEFORE_BOT)
DEC_BOT_BEFORE_TOP = ChoiceClass(Tag.DEC, DecVariant.BOT_BEFORE_TOP)
DEC_TOP_LEAST = ChoiceClass(Tag.DEC, DecVariant.TOP_LEAST)
DEC_BOT_LEAST = ChoiceClass(Tag.DEC, DecVariant.BOT_LEAST)

ALL_CLASSES = (F, ASSO, REG, REG_STAR, DEC,
               DEC_TOP_BEFORE_BOT, DEC_BOT_BEFORE_TOP, DEC_TOP_LEAST, DEC_BOT_LEAST)


class Check(NamedTuple):
    """Predicate result; truthy iff the property holds, otherwise carries a witness."""

    ok: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


_PASS = Check(True)


def _sorted(universe: Iterable[Sentence]) -> list[Sentence]:
    return sorted(set(universe), key=to_text)


# -- predicates ----------------------------------------------------------------

def is_associative_on(f: ChoiceModel, universe: Iterable[Sentence]) -> Check:
    u = _sorted(universe)
    for a, b, c in product(u, repeat=3):
        if f.choose(f.choose(a, b), c) != f.choose(a, f.choose(b, c)):
            return Check(False, (a, b, c))
    return _PASS


def is_essentially_associative_on(f: ChoiceModel, universe: Iterable[Sentence]) -> Check:
    u = _sorted(universe)
    for a, b, c in product(u, repeat=3):
        if not are_equivalent(f.choose(f.choose(a, b), c), f.choose(a, f.choose(b, c))):
            return Check(False, (a, b, c))
    return _PASS


def is_regular_on(f: ChoiceModel, universe: Iterable[Sentence]) -> Check:
    """Witness ``(a, a2, b)``: ``a ~ a2`` yet ``f(a,b)`` and ``f(a2,b)`` are inequivalent."""
    u = _sorted(universe)
    q = quotient(u)
    for a, a2 in product(u, repeat=2):
        if a == a2 or not q.equivalent(a, a2):
            continue
        for b in u:
            if not q.equivalent(f.choose(a, b), f.choose(a2, b)):
                return Check(False, (a, a2, b))
    return _PASS


def is_regular_order(order: Sequence[Sentence]) -> Check:
    """Witness ``(a, a2, b)``: ``a ~ a2`` with an inequivalent ``b`` between them."""
    order = list(order)
    q = quotient(order)
    last_seen: dict[int, int] = {}
    for i, s in enumerate(order):
        cls = q.class_index(s)
        if cls in last_seen and last_seen[cls] != i - 1:
            j = last_seen[cls]
            between = next(t for t in order[j + 1:i] if q.class_index(t) != cls)
            return Check(False, (order[j], s, between))
        last_seen[cls] = i
    return _PASS


def _negation_classes(q: ClassQuotient) -> list[int]:
    """For each class index, the index of the class of its negation."""
    neg = []
    for i, members in enumerate(q.classes):
        j = q.index_of_equivalent(Neg(members[0]))
        if j is None:
            raise UniverseNotClosedError(
                f"negation of {to_text(members[0])} has no equivalent in the universe")
        neg.append(j)
    return neg


def is_neg_decreasing(order: Sequence[Sentence]) -> Check:
    """Checks ``a < b  <=>  ~b < ~a`` on inequivalent pairs, reading ``~a`` up to equivalence.

    The universe is the set of sentences in ``order``; it must contain a
    sentence equivalent to the negation of each member.
    """
    order = list(order)
    q = quotient(order)
    neg = _negation_classes(q)
    position = {s: i for i, s in enumerate(order)}
    by_class: dict[int, list[Sentence]] = {}
    for s in order:
        by_class.setdefault(q.class_index(s), []).append(s)
    for a, b in product(order, repeat=2):
        ca, cb = q.class_index(a), q.class_index(b)
        if ca == cb:
            continue
        before = position[a] < position[b]
        for na in by_class[neg[ca]]:
            for nb in by_class[neg[cb]]:
                if before != (position[nb] < position[na]):
                    return Check(False, (a, b) if before else (b, a))
    return _PASS


def _variant_check(order: Sequence[Sentence], variant: DecVariant) -> Check:
    tops = [s for s in order if is_tautology(s)]
    bots = [s for s in order if is_tautology(Neg(s))]
    if not tops or not bots:
        raise UniverseNotClosedError("Dec variants need top and bot classes in the universe")
    pos = {s: i for i, s in enumerate(order)}
    others_top = [s for s in order if s not in tops]
    others_bot = [s for s in order if s not in bots]
    if variant is DecVariant.TOP_BEFORE_BOT:
        bad = [(t, b) for t in tops for b in bots if pos[t] > pos[b]]
    elif variant is DecVariant.BOT_BEFORE_TOP:
        bad = [(b, t) for t in tops for b in bots if pos[b] > pos[t]]
    elif variant is DecVariant.TOP_LEAST:
        bad = [(t, o) for t in tops for o in others_top if pos[t] > pos[o]]
    else:
        bad = [(b, o) for b in bots for o in others_bot if pos[b] > pos[o]]
    return Check(False, bad[0]) if bad else _PASS


def order_from_associative(f: ChoiceModel, universe: Iterable[Sentence]) -> tuple[Sentence, ...]:
    """The total order ``a < b iff f(a, b) = a`` of an associative table."""
    u = _sorted(universe)
    check = is_associative_on(f, u)
    if not check:
        raise NotAssociativeError(check.witness)
    wins = {a: sum(1 for b in u if b != a and f.choose(a, b) == a) for a in u}
    return tuple(sorted(u, key=lambda s: -wins[s]))


def min_choice_from_order(order: Sequence[Sentence]) -> ExplicitTable:
    order = list(order)
    return ExplicitTable({Pair.of(a, b): a for i, a in enumerate(order) for b in order[i + 1:]})


def _as_order(f: ChoiceModel, universe: Iterable[Sentence]) -> Sequence[Sentence]:
    if isinstance(f, OrderBacked) and set(universe) <= f.universe():
        return [s for s in f.order if s in set(universe)]
    return order_from_associative(f, universe)


def member_of_class(f: ChoiceModel, x: ChoiceClass, universe: Iterable[Sentence]) -> Check:
    universe = set(universe)
    if x.tag is Tag.F:
        for a, b in product(universe, repeat=2):
            f.choose(a, b)
        return _PASS
    if x.tag in (Tag.ASSO, Tag.REG_STAR, Tag.DEC):
        check = is_associative_on(f, universe)
        if not check:
            return check
    if x.tag in (Tag.REG, Tag.REG_STAR, Tag.DEC):
        check = is_regular_on(f, universe)
        if not check:
            return check
    if x.tag is Tag.DEC:
        order = _as_order(f, universe)
        check = is_neg_decreasing(order)
        if not check:
            return check
        if x.variant is not None:
            return _variant_check(order, x.variant)
    return _PASS


# -- constructors --------------------------------------------------------------

def _topological(nodes: Sequence, edges: Iterable[tuple], key) -> Optional[list]:
    """Kahn's algorithm, always emitting the ``key``-least available node; None on a cycle."""
    succ = {n: set() for n in nodes}
    indeg = {n: 0 for n in nodes}
    for a, b in set(edges):
        if b not in succ[a]:
            succ[a].add(b)
            indeg[b] += 1
    heap = [(key(n), i, n) for i, n in enumerate(nodes) if indeg[n] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, _, n = heapq.heappop(heap)
        out.append(n)
        for m in succ[n]:
            indeg[m] -= 1
            if indeg[m] == 0:
                heapq.heappush(heap, (key(m), nodes.index(m), m))
    return out if len(out) == len(nodes) else None


def _split_constraints(q: ClassQuotient, constraints):
    class_edges, within = set(), {}
    for a, b in constraints:
        if a == b:
            return None
        ca, cb = q.class_index(a), q.class_index(b)
        if ca == cb:
            within.setdefault(ca, set()).add((a, b))
        else:
            class_edges.add((ca, cb))
    return class_edges, within


def _expand(q: ClassQuotient, class_order: Sequence[int], within) -> Optional[tuple[Sentence, ...]]:
    out: list[Sentence] = []
    for c in class_order:
        block = _topological(list(q.classes[c]), within.get(c, ()), key=to_text)
        if block is None:
            return None
        out.extend(block)
    return tuple(out)


def build_regular_order(q: ClassQuotient,
                        constraints: Iterable[tuple[Sentence, Sentence]] = ()) -> Optional[tuple[Sentence, ...]]:
    """A regular total order of ``q.universe`` extending ``constraints`` (``a`` before ``b``)."""
    split = _split_constraints(q, constraints)
    if split is None:
        return None
    class_edges, within = split
    class_order = _topological(list(range(len(q))), class_edges, key=lambda c: to_text(q.representative(c)))
    if class_order is None:
        return None
    return _expand(q, class_order, within)


def _variant_edges(q: ClassQuotient, variant: Optional[DecVariant]) -> set[tuple[int, int]]:
    if variant is None:
        return set()
    top, bot = q.index_of_equivalent(Top()), q.index_of_equivalent(Bot())
    if top is None or bot is None:
        raise UniverseNotClosedError("Dec variants need top and bot classes in the universe")
    if variant is DecVariant.TOP_BEFORE_BOT:
        return {(top, bot)}
    if variant is DecVariant.BOT_BEFORE_TOP:
        return {(bot, top)}
    least = top if variant is DecVariant.TOP_LEAST else bot
    return {(least, c) for c in range(len(q)) if c != least}


def symmetric_arrangement(n_classes: int, neg: Sequence[int], edges: set[tuple[int, int]],
                          key) -> Optional[list[int]]:
    """A class order with ``pos(neg[c]) = n-1-pos(c)`` extending ``edges``.

    Classes are placed front to back; placing ``c`` in front fixes ``neg[c]``
    at the mirrored back slot.  Edges are first closed under the mirror map,
    after which ``c`` may be placed exactly when all its predecessors already
    sit in front.  Failed front-sets are memoized.
    """
    mirrored = set(edges) | {(neg[b], neg[a]) for a, b in edges}
    if any(a == b for a, b in mirrored):
        return None
    preds = [set() for _ in range(n_classes)]
    for a, b in mirrored:
        preds[b].add(a)
    candidates = sorted(range(n_classes), key=key)
    failed: set[frozenset] = set()  # front sets that cannot be completed

    def search(front: list[int], front_set: frozenset) -> Optional[list[int]]:
        if 2 * len(front) == n_classes:
            return front
        if front_set in failed:
            return None
        for c in candidates:
            if c in front_set or neg[c] in front_set or not preds[c] <= front_set:
                continue
            result = search(front + [c], front_set | {c})
            if result is not None:
                return result
        failed.add(front_set)
        return None

    front = search([], frozenset())
    if front is None:
        return None
    return front + [neg[c] for c in reversed(front)]


def build_neg_dec_regular_order(q: ClassQuotient,
                                constraints: Iterable[tuple[Sentence, Sentence]] = (),
                                variant: Optional[DecVariant] = None) -> Optional[tuple[Sentence, ...]]:
    """A regular, negation-decreasing total order of ``q.universe`` extending ``constraints``.

    Orders inside a class are unconstrained by the negation law, so they are
    built from the within-class constraints alone.
    """
    neg = _negation_classes(q)
    split = _split_constraints(q, constraints)
    if split is None:
        return None
    class_edges, within = split
    class_edges |= _variant_edges(q, variant)
    arrangement = symmetric_arrangement(len(q), neg, class_edges,
                                        key=lambda c: to_text(q.representative(c)))
    if arrangement is None:
        return None
    return _expand(q, arrangement, within)


# -- structural facts about orders ---------------------------------------------

def negation_winners(order: Sequence[Sentence]) -> set[Sentence]:
    """Sentences placed before (every sentence equivalent to) their own negation."""
    q = quotient(order)
    neg = _negation_classes(q)
    first = {}
    for i, s in enumerate(order):
        first.setdefault(q.class_index(s), i)
    return {s for s in order if first[q.class_index(s)] < first[neg[q.class_index(s)]]}


def is_and_monotonic(order: Sequence[Sentence]) -> Check:
    """Checks ``a < b  <=>  a&c < b&c`` whenever the conjunctions are inequivalent.

    Conjunctions are looked up up to equivalence; triples whose conjunctions
    have no representative in the order are skipped.
    """
    order = list(order)
    q = quotient(order)
    first = {}
    for i, s in enumerate(order):
        first.setdefault(q.class_index(s), i)
    for a, b, c in product(order, repeat=3):
        ac, bc = q.index_of_equivalent(And(a, c)), q.index_of_equivalent(And(b, c))
        if ac is None or bc is None or ac == bc:
            continue
        if (order.index(a) < order.index(b)) != (first[ac] < first[bc]):
            return Check(False, (a, b, c))
    return _PASS
