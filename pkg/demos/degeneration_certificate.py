"""Checking a degeneration by a change of basis depending on t.

Run with ``python3 demos/degeneration_certificate.py``.
"""

# %%
from nilsym import instantiate, verify_degeneration
from nilsym.degeneration import component_dimension, necessary_conditions, parse_witness, transported_constants
from nilsym.presentation import emit_presentation

# %% [markdown]
# The basis E1 = t e1, E2 = t^2 e2, E3 = e3, E4 = t^2 e4 rewrites L4_03 so
# that only the product E1*E2 depends on t, and it vanishes at t = 0.

# %%
witness = parse_witness("""
t,   0,   0, 0
0,   t^2, 0, 0
0,   0,   1, 0
0,   0,   0, t^2
""")
A, B = instantiate("L4_03"), instantiate("L4_04")
print(emit_presentation(transported_constants(A, witness)))
res = verify_degeneration(A, witness, B)
print("L4_03 -> L4_04:", res)

# %%
nec = necessary_conditions(A, B)
print("Der", nec.der, " square", nec.sq, " annihilator", nec.ann, " ok:", nec.ok)

# %% [markdown]
# Changing the last row to t^3 breaks the certificate, and the verifier says
# where.

# %%
bad = parse_witness("t,0,0,0\n0,t^2,0,0\n0,0,1,0\n0,0,0,t^3")
print(verify_degeneration(A, bad, B))

# %% [markdown]
# The three families whose closures are the irreducible components all have
# dimension 16 - dim Der + (number of parameters) = 15.

# %%
for label in ["L4_12", "L4_21", "L4_23"]:
    rep = component_dimension(label)
    print(f"{label}: Der {rep.dim_der}, params {rep.param_count}, dimension {rep.component_dim}",
          f"special strata {rep.special_strata}" if rep.special_strata else "")
