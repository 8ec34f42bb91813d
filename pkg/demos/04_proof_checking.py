"""Check a small Hilbert-style proof, then break it."""
# %%
from dataclasses import replace

from superposition.calculus import Axiom, check_proof, match_scheme, parse_proof
from superposition.choice import F
from superposition.decision import entails
from superposition.syntax import parse, to_text

PROOF = """
system K0
1 (p|p) -> (p \\/ p) ; ax S2
2 ((p|p) -> (p \\/ p)) -> ((p|p) -> p) ; ax PL
3 (p|p) -> p ; mp 1 2
4 (p & p) -> (p|p) ; ax S1
5 ((p & p) -> (p|p)) -> (p -> (p|p)) ; ax PL
6 p -> (p|p) ; mp 4 5
7 ((p|p) -> p) -> ((p -> (p|p)) -> ((p|p) <-> p)) ; ax PL
8 (p -> (p|p)) -> ((p|p) <-> p) ; mp 3 7
9 (p|p) <-> p ; mp 6 8
"""

# %%
script = parse_proof(PROOF)
print(f"{len(script.lines)} lines in {script.system}")
print("result:", check_proof(script))

# %% Scheme matching reports the metavariable bindings.
bindings = match_scheme(parse("(p & q) -> (p | q)"), "S1")
print({k: to_text(v) for k, v in bindings.items()})

# %% Each line really does follow semantically.
print(all(entails([], ln.sentence, F) for ln in script.lines))

# %% Cite the wrong scheme on line 4 and the checker says where and why.
broken = replace(script, lines=tuple(replace(ln, justification=Axiom("S3")) if ln.index == 4 else ln
                                     for ln in script.lines))
print(check_proof(broken))
