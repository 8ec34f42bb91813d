"""Collapsing a superposition sentence to a classical one, and enumerating all collapses."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .choice import ChoiceModel, Pair
from .syntax import And, Neg, Sentence, Sup, is_classical, to_text

DEFAULT_PATTERN_CAP = 65536


class PatternExplosionError(RuntimeError):
    pass


def collapse(f: ChoiceModel, phi: Sentence) -> Sentence:
    if is_classical(phi):
        return phi
    if isinstance(phi, Neg):
        return Neg(collapse(f, phi.child))
    if isinstance(phi, And):
        return And(collapse(f, phi.left), collapse(f, phi.right))
    if isinstance(phi, Sup):
        return f.choose(collapse(f, phi.left), collapse(f, phi.right))
    raise TypeError(f"not a sentence: {phi!r}")


Commitments = frozenset  # of (Pair, chosen) items, at most one per pair


def merge(a: Commitments, b: Commitments) -> Optional[Commitments]:
    """Union of two commitment sets, or None if some pair gets two different choices."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    chosen = dict(a)
    for key, value in b:
        if chosen.get(key, value) != value:
            return None
    return a | b


@dataclass(frozen=True)
class CollapsePattern:
    result: Sentence
    commitments: Commitments = frozenset()

    def as_dict(self) -> dict[Pair, Sentence]:
        return dict(self.commitments)

    def agrees_with(self, f: ChoiceModel) -> bool:
        return all(f.choose(*key.members()) == chosen for key, chosen in self.commitments)

    def sort_key(self):
        return (to_text(self.result),
                sorted((str(k), to_text(v)) for k, v in self.commitments))

    def __str__(self):
        body = ", ".join(f"{k}->{to_text(v)}" for k, v in sorted(self.commitments, key=lambda kv: str(kv[0])))
        return f"{to_text(self.result)}  [{body}]"


class _Enumerator:
    def __init__(self, cap: int):
        self.cap = cap
        self.memo: dict[Sentence, frozenset] = {}

    def guard(self, out: set):
        if len(out) > self.cap:
            raise PatternExplosionError(f"more than {self.cap} collapse patterns")

    def run(self, phi: Sentence) -> frozenset:
        if phi in self.memo:
            return self.memo[phi]
        if is_classical(phi):
            out = {(phi, frozenset())}
        elif isinstance(phi, Neg):
            out = {(Neg(r), c) for r, c in self.run(phi.child)}
        else:
            out = set()
            for lr, lc in self.run(phi.left):
                for rr, rc in self.run(phi.right):
                    merged = merge(lc, rc)
                    if merged is None:
                        continue
                    if isinstance(phi, And):
                        out.add((And(lr, rr), merged))
                    elif lr == rr:
                        out.add((lr, merged))
                    else:
                        key = Pair.of(lr, rr)
                        forced = dict(merged).get(key)
                        if forced is not None:
                            out.add((forced, merged))
                        else:
                            out.add((lr, merged | {(key, lr)}))
                            out.add((rr, merged | {(key, rr)}))
                    self.guard(out)
        out = frozenset(out)
        self.memo[phi] = out
        return out


def enumerate_collapses(phi: Sentence, cap: int = DEFAULT_PATTERN_CAP) -> list[CollapsePattern]:
    """All consistent collapse patterns of ``phi``, sorted deterministically."""
    raw = _Enumerator(cap).run(phi)
    return sorted((CollapsePattern(r, c) for r, c in raw), key=CollapsePattern.sort_key)


def commitment_sentences(commitments: Iterable) -> set[Sentence]:
    return {s for key, _ in commitments for s in key.members()}


def relevant_universe(patterns: Iterable[CollapsePattern], neg_closed: bool = False) -> set[Sentence]:
    universe: set[Sentence] = set()
    for p in patterns:
        universe |= commitment_sentences(p.commitments)
        universe.add(p.result)
    if neg_closed:
        universe |= {Neg(s) for s in universe}
    return universe
