"""From a 3-dimensional base to a 4-dimensional algebra and back.

Run with ``python3 demos/extension_walkthrough.py``.
"""

# %%
from nilsym import central_extension, emit_presentation, instantiate, is_nilpotent, quotient_by_annihilator
from nilsym.algebra import change_basis, is_novikov
from nilsym.cohomology import format_cocycle, parse_cocycle
from nilsym.constructions import check_action
from nilsym.isomorphism import distinguish, find_isomorphism

# %% [markdown]
# Start from the base e1*e1 = e2 in dimension 3 and extend by the cocycle D23
# (theta(e2, e3) = 1).  The new basis vector is appended as e4.

# %%
base = instantiate("L3_01")
theta = parse_cocycle("D23", 3)
E = central_extension(base, [theta])
print(emit_presentation(E))
print("same as catalog L4_04:", E == instantiate("L4_04"))
print("nilpotent:", is_nilpotent(E), " Novikov:", is_novikov(E))

# %% [markdown]
# The automorphisms of the base act on cocycles by theta -> phi^T theta phi.
# One point of the automorphism family (x=2, t=3) scales D23 by x^2 t = 12.

# %%
r = check_action("L3_01", {"x": 2, "y": 0, "z": 0, "u": 0, "t": 3}, [0, 0, 0, 0, 0, 1])
print("class coordinates after the action:", [str(a) for a in r.computed])
print("formula prediction:               ", [str(a) for a in r.expected])

# %% [markdown]
# Going back: the annihilator of E is spanned by e4, and the quotient is the
# base again, with the cocycle read off in an adapted basis.

# %%
q = quotient_by_annihilator(E)
print("annihilator dim:", q.annihilator.dim)
print("quotient equals base:", q.quotient == base)
print("recovered cocycle:", format_cocycle(q.thetas[0]))

# %% [markdown]
# Shuffle and rescale the basis, then search for an explicit isomorphism back.
# The search only tries simple generator images, so a dense random change of
# basis can exhaust the budget; the invariants still cannot tell the two apart.

# %%
F = change_basis(E, [[0, 0, 2, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 3, 0, 0]])
print("invariants:", distinguish(E, F).outcome)
res = find_isomorphism(E, F, budget=20000)
print("isomorphism found:", res.found, f"after {res.candidates} candidates ({res.phase})")
print("matrix:", [[str(x) for x in row] for row in res.phi])
