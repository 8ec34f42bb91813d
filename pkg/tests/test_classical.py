from itertools import product

import pytest
from hypothesis import given, strategies as st

from oracle import truth
from strategies import classical_sentences
from superposition.classical import (MissingAtomError, NotClassicalError, TooManyAtomsError, are_equivalent,
                                     evaluate, falsifying_assignment, is_satisfiable, is_tautology, quotient,
                                     satisfying_assignment)
from superposition.syntax import And, Atom, atoms, parse


def rows(names):
    return [dict(zip(names, bits)) for bits in product((False, True), repeat=len(names))]


class TestEvaluate:
    def test_negation(self):
        assert evaluate({"p": True}, parse("~p")) is False

    def test_top_needs_no_atoms(self):
        assert evaluate({}, parse("top")) is True

    def test_implication_row(self):
        assert evaluate({"p": True, "q": False}, parse("~(p & ~q)")) is False

    def test_missing_atom(self):
        with pytest.raises(MissingAtomError):
            evaluate({"p": True}, parse("p & q"))

    def test_superposition_rejected(self):
        with pytest.raises(NotClassicalError):
            evaluate({"p": True}, parse("p | p"))

    @given(classical_sentences, st.data())
    def test_matches_reference(self, s, data):
        m = {a: data.draw(st.booleans()) for a in atoms(s)}
        assert evaluate(m, s) == truth(m, s)


class TestTautologyAndEquivalence:
    def test_excluded_middle(self):
        assert is_tautology(parse("p \\/ ~p"))

    def test_double_negation(self):
        assert are_equivalent(parse("p"), parse("~~p"))

    def test_not_equivalent(self):
        assert not are_equivalent(parse("p"), parse("q"))

    def test_falsifying_assignment_is_least_row(self):
        assert falsifying_assignment(parse("p -> q")) == {"p": True, "q": False}
        assert falsifying_assignment(parse("top")) is None

    def test_falsifying_assignment_extends_atoms(self):
        assert falsifying_assignment(parse("p"), over={"q"}) == {"p": False, "q": False}

    @given(classical_sentences)
    def test_tautology_matches_reference(self, s):
        names = sorted(atoms(s))
        assert is_tautology(s) == all(truth(m, s) for m in rows(names))

    @given(classical_sentences, classical_sentences)
    def test_equivalence_matches_reference(self, a, b):
        names = sorted(atoms(a) | atoms(b))
        assert are_equivalent(a, b) == all(truth(m, a) == truth(m, b) for m in rows(names))

    @given(classical_sentences, classical_sentences)
    def test_unused_atoms_do_not_matter(self, a, b):
        padded_a = And(a, parse("z \\/ ~z"))
        assert are_equivalent(a, b) == are_equivalent(padded_a, b)

    @given(classical_sentences, classical_sentences, classical_sentences)
    def test_equivalence_relation(self, a, b, c):
        assert are_equivalent(a, a)
        assert are_equivalent(a, b) == are_equivalent(b, a)
        if are_equivalent(a, b) and are_equivalent(b, c):
            assert are_equivalent(a, c)


class TestSatisfiability:
    def test_witness(self):
        assert satisfying_assignment([parse(s) for s in ("p", "~q", "~r")]) == {"p": True, "q": False, "r": False}

    def test_empty_set_satisfiable(self):
        assert satisfying_assignment([]) == {}

    def test_contradiction(self):
        assert not is_satisfiable([parse("p"), parse("~p")])

    def test_cutoff(self):
        many = [Atom(f"a{i}") for i in range(5)]
        with pytest.raises(TooManyAtomsError):
            satisfying_assignment(many, cutoff=4)

    @given(st.lists(classical_sentences, max_size=4))
    def test_witness_satisfies(self, gamma):
        m = satisfying_assignment(gamma)
        names = sorted(set().union(*(atoms(s) for s in gamma)) if gamma else [])
        if m is None:
            assert not any(all(truth(row, s) for s in gamma) for row in rows(names))
        else:
            assert all(evaluate(m, s) for s in gamma)


class TestQuotient:
    def test_double_negation_class(self):
        q = quotient([parse("p"), parse("~~p"), parse("q")])
        assert len(q) == 2
        assert q.equivalent(parse("p"), parse("~~p"))
        assert not q.equivalent(parse("p"), parse("q"))

    def test_commuted_conjunction(self):
        assert len(quotient([parse("p & q"), parse("q & p")])) == 1

    def test_top_and_excluded_middle(self):
        assert len(quotient([parse("top"), parse("p \\/ ~p")])) == 1

    def test_representatives_are_least_text(self):
        q = quotient([parse("~~p"), parse("p"), parse("q")])
        assert [q.representative(i) for i in range(len(q))] == [parse("p"), parse("q")]
        assert q.class_of(parse("~~p")) == (parse("p"), parse("~~p"))

    def test_lookup_of_outside_sentence(self):
        q = quotient([parse("p"), parse("bot")])
        assert q.index_of_equivalent(parse("q & ~q")) == q.class_index(parse("bot"))
        assert q.index_of_equivalent(parse("~p")) is None

    @given(st.lists(classical_sentences, min_size=1, max_size=6, unique=True))
    def test_classes_are_equivalence_classes(self, universe):
        q = quotient(universe)
        for a in universe:
            for b in universe:
                assert q.equivalent(a, b) == are_equivalent(a, b)
