import pytest
from hypothesis import given

from strategies import sentences
from superposition.syntax import (And, Atom, Bot, Neg, ParseError, Sup, Top, atoms, disj, dual, dual_op, iff, imp,
                                  is_classical, parse, strip_double_negations, subsentences, substitute,
                                  sup_count, to_text)

p, q, r = Atom("p"), Atom("q"), Atom("r")


class TestParse:
    def test_conjunction_of_atoms(self):
        assert parse("p & q") == And(p, q)

    def test_negated_atom_inside_superposition(self):
        assert parse("p | ~p") == Sup(p, Neg(p))

    def test_dual_connective_desugars(self):
        assert parse("p @ q") == Neg(Sup(Neg(p), Neg(q)))

    def test_derived_connectives(self):
        assert parse("p \\/ q") == Neg(And(Neg(p), Neg(q)))
        assert parse("p -> q") == Neg(And(p, Neg(q)))
        assert parse("p <-> q") == And(imp(p, q), imp(q, p))

    def test_constants(self):
        assert parse("top") == Top() and parse("bot") == Bot()

    def test_and_binds_tighter_than_superposition(self):
        assert parse("p & q | r") == Sup(And(p, q), r)

    def test_or_binds_tighter_than_superposition(self):
        assert parse("p \\/ q | r") == Sup(disj(p, q), r)

    def test_superposition_and_dual_share_a_level(self):
        assert parse("p | q @ r") == dual_op(Sup(p, q), r)
        assert parse("p | q | r") == Sup(Sup(p, q), r)

    def test_implication_is_right_associative(self):
        assert parse("p -> q -> r") == imp(p, imp(q, r))

    def test_implication_below_superposition(self):
        assert parse("p | q -> p") == imp(Sup(p, q), p)

    def test_iff_loosest(self):
        assert parse("p -> q <-> r") == iff(imp(p, q), r)

    def test_negation_binds_tightest(self):
        assert parse("~p & q") == And(Neg(p), q)
        assert parse("~~p") == Neg(Neg(p))

    def test_unicode_aliases(self):
        assert parse("¬p ∧ q") == parse("~p & q")
        assert parse("p ∨ q → p ↔ ⊤") == parse("p \\/ q -> p <-> top")
        assert parse("p ∘ ⊥") == parse("p @ bot")
        assert parse("p /\\ q") == parse("p & q")

    def test_atom_names(self):
        assert parse("x_1 & abc9") == And(Atom("x_1"), Atom("abc9"))

    @pytest.mark.parametrize("text", ["", "p &", "(p | q", "p q", "P", "p # q", "1p", "~", "p <- q"])
    def test_malformed_input_raises(self, text):
        with pytest.raises(ParseError):
            parse(text)

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as exc:
            parse("p & & q")
        assert exc.value.position == 4


class TestPrint:
    def test_binary_nodes_parenthesized(self):
        assert to_text(And(p, q)) == "(p & q)"

    def test_negation_is_a_bare_prefix(self):
        assert to_text(Neg(Sup(Neg(p), Neg(q)))) == "~(~p | ~q)"
        assert to_text(Sup(p, Neg(p))) == "(p | ~p)"
        assert to_text(Neg(Neg(p))) == "~~p"

    def test_atoms_and_constants_bare(self):
        assert [to_text(s) for s in (p, Top(), Bot())] == ["p", "top", "bot"]

    @given(sentences)
    def test_round_trip(self, s):
        assert parse(to_text(s)) == s


class TestDual:
    def test_classical_fixed(self):
        s = parse("~(p & q)")
        assert dual(s) is s

    def test_superposition_becomes_dual_connective(self):
        assert dual(parse("p | q")) == parse("p @ q")

    def test_commutes_with_negation_and_conjunction(self):
        assert dual(parse("~(p | q) & r")) == parse("~(p @ q) & r")

    @given(sentences)
    def test_involution_up_to_double_negation(self, s):
        assert strip_double_negations(dual(dual(s))) == strip_double_negations(s)


class TestStructure:
    def test_substitute_replaces_every_occurrence(self):
        phi = parse("(p | q) & ~(p | q)")
        assert substitute(phi, parse("p | q"), r) == parse("r & ~r")

    def test_substitute_leaves_unrelated(self):
        phi = parse("p & q")
        assert substitute(phi, r, p) == phi

    def test_atoms_and_counts(self):
        phi = parse("(p | q) & ~(p | top)")
        assert atoms(phi) == {"p", "q"}
        assert sup_count(phi) == 2
        assert not is_classical(phi) and is_classical(parse("p -> q"))

    def test_subsentences(self):
        assert subsentences(parse("p & ~p")) == {p, Neg(p), And(p, Neg(p))}

    def test_strip_double_negations(self):
        assert strip_double_negations(parse("~~~p & ~~(q | ~~r)")) == parse("~p & (q | r)")

    def test_nodes_are_hashable_and_structural(self):
        assert len({parse("p & q"), parse("(p & q)"), And(p, q)}) == 1
        assert parse("p & q") != parse("q & p")
