# %% [markdown]
# # Checking each step of the violation argument
#
# The argument reduces to 2^(4t) < C((2t+1)^2, t) 3^t, i.e. a single term of
# the sphere sum already exceeds the syndrome count.  Each step is checked
# as an integer comparison.

# %%
from qhbound import margins_strictly_increasing, verify_chain

rows = verify_chain(200)
print("rows:", len(rows))
print("every step true:", all(r.all_ok for r in rows))
print("margin strictly increasing:", margins_strictly_increasing(rows))

# %%
for r in rows[:5] + rows[-2:]:
    print(f"t={r.t:3d}  margin {r.margin_bits:10.3f} bits  "
          f"sphere has {len(str(r.hamming_rhs))} digits")

# %% [markdown]
# The margin grows roughly linearly in log t times t, so the gap widens
# without bound along the family.
