"""Regular choice tables versus regular orders, through the six-sentence counterexample."""
# %%
from superposition import parse, to_text
from superposition.choice import ASSO, REG, REG_STAR, is_associative_on, is_regular_order
from superposition.decision import is_satisfiable, is_tautology

sigma = [parse(s) for s in ("p", "~q", "~r", "p | q", "~(p | r)", "p | (q | r)")]

# %% Regular tables can satisfy the set; the witness chooses in a cycle.
verdict = is_satisfiable(sigma, REG)
assignment, table = verdict.witness
print("assignment:", assignment)
for pair, chosen in sorted(table.entries.items(), key=lambda kv: str(kv[0])):
    print(f"  {pair} -> {to_text(chosen)}")
print("associative:", bool(is_associative_on(table, table.universe())))

# %% A cycle has no least element, so no order can realize it.
for x in (ASSO, REG_STAR):
    print(f"satisfiable in {x}:", bool(is_satisfiable(sigma, x)))

# %% Associativity of superposition is exactly what orders add.
s4 = parse("((p | q) | r) -> (p | (q | r))")
for x in (REG, ASSO, REG_STAR):
    print(f"{str(x):8}", is_tautology(s4, x).value)

# %% An order is regular when equivalent sentences sit next to each other.
print(is_regular_order([parse(s) for s in ("p", "~~p", "q")]))
print(is_regular_order([parse(s) for s in ("p", "q", "~~p")]))
