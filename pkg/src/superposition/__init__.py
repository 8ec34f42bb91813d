"""Propositional superposition logic: parsing, collapse semantics, decision procedures and proof checking."""
from .choice import (ALL_CLASSES, ASSO, DEC, DEC_BOT_BEFORE_TOP, DEC_BOT_LEAST, DEC_TOP_BEFORE_BOT,
                     DEC_TOP_LEAST, F, REG, REG_STAR, ChoiceClass, DecVariant, ExplicitTable,
                     OrderBacked, Pair, Tag, member_of_class)
from .collapse import CollapsePattern, collapse, enumerate_collapses, relevant_universe
from .decision import (Verdict, are_equivalent_in, entails, extend_to_model, interpret, is_satisfiable,
                       is_tautology, model_check, nary_sup, realizable)
from .syntax import And, Atom, Bot, Neg, Sentence, Sup, Top, dual, parse, to_text

__all__ = [
    "ALL_CLASSES", "ASSO", "DEC", "DEC_BOT_BEFORE_TOP", "DEC_BOT_LEAST", "DEC_TOP_BEFORE_BOT",
    "DEC_TOP_LEAST", "F", "REG", "REG_STAR", "ChoiceClass", "DecVariant", "ExplicitTable",
    "OrderBacked", "Pair", "Tag", "member_of_class",
    "CollapsePattern", "collapse", "enumerate_collapses", "relevant_universe",
    "Verdict", "are_equivalent_in", "entails", "extend_to_model", "interpret", "is_satisfiable",
    "is_tautology", "model_check", "nary_sup", "realizable",
    "And", "Atom", "Bot", "Neg", "Sentence", "Sup", "Top", "dual", "parse", "to_text",
]
