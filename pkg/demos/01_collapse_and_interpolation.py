"""How a superposition collapses, and why it sits between conjunction and disjunction."""
# %%
from superposition import parse, to_text
from superposition.choice import F, ExplicitTable
from superposition.collapse import collapse, enumerate_collapses
from superposition.decision import is_tautology, model_check

p, q = parse("p"), parse("q")

# %% A choice table decides which side of each pair a superposition becomes.
pick_q = ExplicitTable.from_choices([(p, q, q)])
phi = parse("~(p | q) & (q \\/ p)")
print("sentence :", to_text(phi))
print("collapsed:", to_text(collapse(pick_q, phi)))

# %% Every way the sentence can collapse, with the pair choices that produce it.
for pattern in enumerate_collapses(parse("(p | q) & ~(q | ~p)")):
    print(pattern)

# %% Conjunction implies superposition, superposition implies disjunction.
for text in ("(p & q) -> (p | q)", "(p | q) -> (p \\/ q)", "(p \\/ q) -> (p | q)", "(p | q) -> (p & q)"):
    verdict = is_tautology(parse(text), F)
    print(f"{text:24} tautology={verdict.value}")
    if not verdict:
        a, f = verdict.witness
        print("   countermodel:", a, f, "->", model_check(a, f, parse(text)))

# %% A superposition of contradictories is contingent: some choice makes it true, some false.
phi = parse("p | ~p")
for chosen in (p, parse("~p")):
    f = ExplicitTable.from_choices([(p, parse("~p"), chosen)])
    print(f"choose {to_text(chosen):5} with p=1 ->", model_check({"p": True}, f, phi))
