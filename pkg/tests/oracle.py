"""Brute-force reference semantics, written independently of the engine's enumeration.

Tautology is decided by listing every model of a class on a finite universe
and every truth assignment, then evaluating directly.  Only the class
predicates of ``superposition.choice`` are shared with the engine, and those
have their own tests against the definitions.
"""
from __future__ import annotations

import random
from itertools import product

from superposition.choice import ExplicitTable, OrderBacked, Pair, Tag, member_of_class
from superposition.syntax import And, Atom, Bot, Neg, Sup, Top, atoms, is_classical


def truth(assignment, s):
    if isinstance(s, Atom):
        return assignment[s.name]
    if isinstance(s, Top):
        return True
    if isinstance(s, Bot):
        return False
    if isinstance(s, Neg):
        return not truth(assignment, s.child)
    return truth(assignment, s.left) and truth(assignment, s.right)


def collapse_direct(f, s):
    if isinstance(s, Sup):
        return f.choose(collapse_direct(f, s.left), collapse_direct(f, s.right))
    if isinstance(s, Neg):
        return Neg(collapse_direct(f, s.child))
    if isinstance(s, And):
        return And(collapse_direct(f, s.left), collapse_direct(f, s.right))
    return s


def possible_values(s):
    """Every classical sentence some model could collapse ``s`` to (no consistency pruning)."""
    if isinstance(s, Sup):
        return possible_values(s.left) | possible_values(s.right)
    if isinstance(s, Neg):
        return {Neg(v) for v in possible_values(s.child)}
    if isinstance(s, And):
        return {And(a, b) for a in possible_values(s.left) for b in possible_values(s.right)}
    return {s}


def base_universe(s):
    """Arguments that any ``|`` node of ``s`` can receive."""
    out = set()
    stack = [s]
    while stack:
        node = stack.pop()
        if isinstance(node, Sup):
            out |= possible_values(node.left) | possible_values(node.right)
        if isinstance(node, Neg):
            stack.append(node.child)
        elif isinstance(node, (And, Sup)):
            stack += [node.left, node.right]
    return out


def all_tables(universe):
    u = sorted(universe, key=str)
    pairs = [Pair.of(a, b) for i, a in enumerate(u) for b in u[i + 1:]]
    for picks in product((0, 1), repeat=len(pairs)):
        yield ExplicitTable({k: k.members()[c] for k, c in zip(pairs, picks)})


def dec_orders(universe, x):
    """Regular negation-decreasing orders of a negation-closed universe, honoring ``x``'s variant.

    Class blocks are permuted one class at a time; a prefix is dropped when two
    placed classes whose negations are also placed break ``A < B <=> ~B < ~A``,
    or when the variant's position rule already fails.  Members inside a block
    keep canonical order: for regular models the class of every collapse is
    independent of the within-class order.
    """
    from superposition.classical import are_equivalent, is_tautology, quotient
    q = quotient(universe)
    n = len(q)
    neg = [next(j for j in range(n) if are_equivalent(Neg(q.representative(i)), q.representative(j)))
           for i in range(n)]
    top = next((i for i in range(n) if is_tautology(q.representative(i))), None)
    bot = next((i for i in range(n) if is_tautology(Neg(q.representative(i)))), None)
    variant = x.variant.value if x.variant else None
    def allowed(prefix, c):
        k = len(prefix)
        if variant == "topLeast" and k == 0 and c != top:
            return False
        if variant == "botLeast" and k == 0 and c != bot:
            return False
        if variant == "topBeforeBot" and c == bot and top not in prefix:
            return False
        if variant == "botBeforeTop" and c == top and bot not in prefix:
            return False
        pos = {d: i for i, d in enumerate(prefix + [c])}
        for b in prefix:                        # b < c
            if neg[b] in pos and neg[c] in pos and not pos[neg[c]] < pos[neg[b]]:
                return False
        return True

    def extend(prefix):
        if len(prefix) == n:
            yield OrderBacked(tuple(s for c in prefix for s in q.classes[c]))
            return
        for c in range(n):
            if c not in prefix and allowed(prefix, c):
                yield from extend(prefix + [c])

    return extend([])


def models(phi, x):
    """All models of class ``x`` that settle every pair ``phi`` can query."""
    universe = base_universe(phi)
    if x.tag is Tag.DEC:
        if x.variant is not None:
            universe |= {Top(), Bot()}
        universe |= {Neg(s) for s in universe}
        return dec_orders(universe, x)
    return (f for f in all_tables(universe) if member_of_class(f, x, universe))


def oracle_tautology(phi, x):
    names = sorted(atoms(phi))
    rows = [dict(zip(names, bits)) for bits in product((False, True), repeat=len(names))]
    for f in models(phi, x):
        collapsed = collapse_direct(f, phi)
        if not all(truth(m, collapsed) for m in rows):
            return False
    return True


# -- corpus -------------------------------------------------------------------

ATOMS = ("p", "q", "r")


def random_sentence(rng: random.Random, max_sups: int = 2, max_atoms: int = 3, depth: int = 4):
    names = ATOMS[:max_atoms]
    budget = [max_sups]

    def gen(d):
        roll = rng.random()
        if d == 0 or roll < 0.25:
            leaf = rng.random()
            if leaf < 0.06:
                return Top()
            if leaf < 0.12:
                return Bot()
            return Atom(rng.choice(names))
        if roll < 0.45:
            return Neg(gen(d - 1))
        if roll < 0.75 and budget[0] > 0:
            budget[0] -= 1
            return Sup(gen(d - 1), gen(d - 1))
        return And(gen(d - 1), gen(d - 1))

    return gen(depth)


def _one_sup(rng, names):
    def lit():
        a = Atom(rng.choice(names))
        roll = rng.random()
        if roll < 0.3:
            return Neg(a)
        if roll < 0.45:
            return And(a, Atom(rng.choice(names)))
        if roll < 0.5:
            return rng.choice((Top(), Bot()))
        return a

    core = Sup(lit(), lit())
    roll = rng.random()
    if roll < 0.3:
        return Neg(core)
    if roll < 0.5:
        return And(core, lit())
    return core


def _variant_of(rng, s):
    """A sentence related to ``s`` by one change inside its ``|`` node."""
    if isinstance(s, Neg):
        return Neg(_variant_of(rng, s.child))
    if isinstance(s, And):
        return And(_variant_of(rng, s.left), s.right)
    a, b = s.left, s.right
    roll = rng.random()
    if roll < 0.2:
        return Sup(b, a)
    if roll < 0.4:
        return Sup(Neg(Neg(a)), b)
    if roll < 0.55:
        return Sup(And(a, a), b)
    if roll < 0.7:
        return Sup(Neg(a), Neg(b))
    if roll < 0.8:
        return Sup(a, And(b, Top()))
    if roll < 0.9:
        return And(a, b)
    return Neg(And(Neg(a), Neg(b)))


def related_implication(rng, names=ATOMS):
    """``a -> b`` or ``b -> a`` (optionally under a classical guard) for a one-``|`` sentence and a variant."""
    a = _one_sup(rng, names)
    b = _variant_of(rng, a)
    lhs, rhs = (a, b) if rng.random() < 0.5 else (b, a)
    if rng.random() < 0.25:
        guard = And(Atom(rng.choice(names)), Neg(Atom(rng.choice(names))))
        lhs = And(guard, lhs)
    return Neg(And(lhs, Neg(rhs)))


def corpus(size: int = 520, seed: int = 20261015):
    """Half random sentences, half implications between related sentences; at most 2 ``|`` nodes and 3 atoms."""
    rng = random.Random(seed)
    seen = {}
    while len(seen) < size // 2:
        s = random_sentence(rng)
        if not is_classical(s) or rng.random() < 0.05:
            seen.setdefault(s, None)
    while len(seen) < size:
        seen.setdefault(related_implication(rng), None)
    return list(seen)
