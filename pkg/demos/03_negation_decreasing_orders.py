"""Orders where negation reverses precedence, and the dual connective."""
# %%
from superposition import parse, to_text
from superposition.choice import DEC, REG_STAR, OrderBacked, build_neg_dec_regular_order, negation_winners
from superposition.classical import quotient
from superposition.decision import is_tautology, nary_sup
from superposition.syntax import dual

# %% Build one: p must precede q, so ~q must precede ~p.
universe = [parse(s) for s in ("p", "q", "~p", "~q")]
order = build_neg_dec_regular_order(quotient(universe), [(parse("p"), parse("q"))])
print(" < ".join(to_text(s) for s in order))
print("beats its negation:", sorted(to_text(s) for s in negation_winners(order)))

# %% The negation swap scheme characterizes these orders.
s5 = parse("(p & ~q) -> ((p | q) <-> (~p | ~q))")
print("in regular orders:", is_tautology(s5, REG_STAR).value, " in decreasing orders:", is_tautology(s5, DEC).value)

# %% Superposition distributes over its dual only here.
phi = parse("p @ (q | r) <-> (p @ q) | (p @ r)")
print("dual form:", to_text(dual(parse("p | q"))))
print("regular orders:", is_tautology(phi, REG_STAR).value, " decreasing orders:", is_tautology(phi, DEC).value)

# %% With an order, a many-way superposition is just the least argument.
f = OrderBacked(tuple(parse(s) for s in ("r", "p", "q")))
print("value of p|q|r with r true and p,q false:", nary_sup(f, [parse("p"), parse("q"), parse("r")],
                                                         {"p": False, "q": False, "r": True}))
