"""Second cohomology of the 3-dimensional Novikov bases.

Run with ``python3 demos/cohomology_table.py``.
"""

# %%
from fractions import Fraction

from nilsym import h2, instantiate
from nilsym.cohomology import format_cocycle

# %% [markdown]
# Each base is a nilpotent Novikov algebra.  For every one we compute the
# cocycles Z2, the coboundaries B2, and pick representatives for the Novikov
# part H2N and for the rest of H2.

# %%
bases = [
    ("L3_01", {}),
    ("L3_02", {}),
    ("L3_03", {}),
    ("L3_04", {"lam": 2}),
    ("L3_04", {"lam": 0}),
    ("L3_05", {}),
    ("L3_06", {"lam": Fraction(5, 2)}),
]

for label, params in bases:
    A = instantiate(label, params)
    H = h2(A)
    print(f"{A.label:<14} Z2={H.dim_z2}  B2={H.dim_b2}  H2N={H.dim_h2n}  H2L={H.dim_h2}")
    print("    Novikov classes:", ", ".join(format_cocycle(m) for m in H.h2N_reps))
    extra = H.h2_reps[H.dim_h2n:]
    if extra:
        print("    other classes:  ", ", ".join(format_cocycle(m) for m in extra))

# %% [markdown]
# At lam = 0 the base L3_04 has no non-Novikov classes at all, so every
# central extension of it stays Novikov.
