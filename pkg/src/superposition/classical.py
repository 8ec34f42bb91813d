"""Classical semantics over Sup-free sentences.

Truth tables are packed into Python ints: bit ``k`` is the value under the
``k``-th assignment of the given atom tuple (atom ``i`` is true in row ``k``
iff bit ``i`` of ``k`` is set).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Optional

from .syntax import And, Atom, Bot, Neg, Sentence, Sup, Top, atoms, to_text

DEFAULT_ATOM_CUTOFF = 20


class MissingAtomError(KeyError):
    pass


class NotClassicalError(ValueError):
    pass


class TooManyAtomsError(ValueError):
    pass


def evaluate(assignment: Mapping[str, bool], alpha: Sentence) -> bool:
    if isinstance(alpha, Atom):
        try:
            return bool(assignment[alpha.name])
        except KeyError:
            raise MissingAtomError(alpha.name) from None
    if isinstance(alpha, Top):
        return True
    if isinstance(alpha, Bot):
        return False
    if isinstance(alpha, Neg):
        return not evaluate(assignment, alpha.child)
    if isinstance(alpha, And):
        return evaluate(assignment, alpha.left) and evaluate(assignment, alpha.right)
    if isinstance(alpha, Sup):
        raise NotClassicalError(f"superposition in classical evaluation: {to_text(alpha)}")
    raise TypeError(f"not a sentence: {alpha!r}")


def _atom_mask(index: int, n: int) -> int:
    rows = 1 << n
    block = 1 << index
    mask = ((1 << block) - 1) << block      # block zeros then block ones
    width = block << 1
    while width < rows:
        mask |= mask << width
        width <<= 1
    return mask


@lru_cache(maxsize=None)
def _atom_masks(n: int) -> tuple[int, ...]:
    return tuple(_atom_mask(i, n) for i in range(n))


@lru_cache(maxsize=200_000)
def truth_table(alpha: Sentence, atom_order: tuple[str, ...]) -> int:
    """Bitmask of rows where ``alpha`` is true, rows indexed over ``atom_order``."""
    n = len(atom_order)
    full = (1 << (1 << n)) - 1
    if isinstance(alpha, Atom):
        try:
            return _atom_masks(n)[atom_order.index(alpha.name)]
        except ValueError:
            raise MissingAtomError(alpha.name) from None
    if isinstance(alpha, Top):
        return full
    if isinstance(alpha, Bot):
        return 0
    if isinstance(alpha, Neg):
        return full ^ truth_table(alpha.child, atom_order)
    if isinstance(alpha, And):
        return truth_table(alpha.left, atom_order) & truth_table(alpha.right, atom_order)
    if isinstance(alpha, Sup):
        raise NotClassicalError(f"superposition in classical evaluation: {to_text(alpha)}")
    raise TypeError(f"not a sentence: {alpha!r}")


def atom_order(sentences: Iterable[Sentence], cutoff: int = DEFAULT_ATOM_CUTOFF) -> tuple[str, ...]:
    names = set()
    for s in sentences:
        names |= atoms(s)
    if len(names) > cutoff:
        raise TooManyAtomsError(f"{len(names)} atoms exceed the cutoff of {cutoff}")
    return tuple(sorted(names))


def row_assignment(row: int, order: tuple[str, ...]) -> dict[str, bool]:
    return {name: bool(row >> i & 1) for i, name in enumerate(order)}


def is_tautology(alpha: Sentence) -> bool:
    order = atom_order([alpha])
    return truth_table(alpha, order) == (1 << (1 << len(order))) - 1


def falsifying_assignment(alpha: Sentence, over: Iterable[str] = ()) -> Optional[dict[str, bool]]:
    """Least falsifying row over ``atoms(alpha) | over``, or None for a tautology."""
    order = tuple(sorted(atoms(alpha) | set(over)))
    full = (1 << (1 << len(order))) - 1
    false_rows = full ^ truth_table(alpha, order)
    if not false_rows:
        return None
    return row_assignment((false_rows & -false_rows).bit_length() - 1, order)


def are_equivalent(alpha: Sentence, beta: Sentence) -> bool:
    order = atom_order([alpha, beta])
    return truth_table(alpha, order) == truth_table(beta, order)


def satisfying_assignment(gamma: Iterable[Sentence],
                          cutoff: int = DEFAULT_ATOM_CUTOFF) -> Optional[dict[str, bool]]:
    """Least row satisfying every sentence of ``gamma``, or None."""
    gamma = list(gamma)
    order = atom_order(gamma, cutoff)
    rows = (1 << (1 << len(order))) - 1
    for s in gamma:
        rows &= truth_table(s, order)
        if not rows:
            return None
    return row_assignment((rows & -rows).bit_length() - 1, order)


def is_satisfiable(gamma: Iterable[Sentence], cutoff: int = DEFAULT_ATOM_CUTOFF) -> bool:
    return satisfying_assignment(gamma, cutoff) is not None


@dataclass(frozen=True)
class ClassQuotient:
    """Partition of a finite universe into classical-equivalence classes.

    Classes are sorted by their representative (least canonical text), and
    members within a class are sorted by canonical text.
    """

    universe: frozenset
    classes: tuple[tuple[Sentence, ...], ...]
    atom_order: tuple[str, ...]
    _index: Mapping[Sentence, int]
    _by_table: Mapping[int, int]

    def class_index(self, s: Sentence) -> int:
        return self._index[s]

    def class_of(self, s: Sentence) -> tuple[Sentence, ...]:
        return self.classes[self._index[s]]

    def representative(self, index: int) -> Sentence:
        return self.classes[index][0]

    def equivalent(self, a: Sentence, b: Sentence) -> bool:
        return self._index[a] == self._index[b]

    def index_of_equivalent(self, s: Sentence) -> Optional[int]:
        """Class index of any sentence equivalent to ``s``, or None if absent."""
        if s in self._index:
            return self._index[s]
        if atoms(s) <= set(self.atom_order):
            return self._by_table.get(truth_table(s, self.atom_order))
        for i, members in enumerate(self.classes):
            if are_equivalent(s, members[0]):
                return i
        return None

    def __len__(self):
        return len(self.classes)


def quotient(universe: Iterable[Sentence]) -> ClassQuotient:
    universe = frozenset(universe)
    order = atom_order(universe)
    groups: dict[int, list[Sentence]] = {}
    for s in universe:
        groups.setdefault(truth_table(s, order), []).append(s)
    ranked = sorted(((sorted(g, key=to_text), table) for table, g in groups.items()),
                    key=lambda item: to_text(item[0][0]))
    classes = tuple(tuple(g) for g, _ in ranked)
    index = {s: i for i, g in enumerate(classes) for s in g}
    by_table = {table: i for i, (_, table) in enumerate(ranked)}
    return ClassQuotient(universe, classes, order, index, by_table)
