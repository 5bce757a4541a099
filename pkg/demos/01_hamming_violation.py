# %% [markdown]
# # Odd Bacon-Shor codes against the Hamming bound
#
# A pure [[n,k,r,d]] subsystem code needs 2^(n-k-r) states of syndrome
# space to cover every error of weight up to t = floor((d-1)/2).  Below we
# evaluate both sides exactly for the square Bacon-Shor codes.

# %%
from qhbound import CodeParams, hamming_check, odd_family, singleton_check, square_family

for params in [CodeParams(9, 1, 4, 3), CodeParams(12, 1, 6, 3), CodeParams(5, 1, 0, 3)]:
    rep = hamming_check(params)
    print(f"{params}: 2^(n-k-r) = {rep.lhs}, sphere = {rep.rhs}, holds = {rep.satisfied}")

# %% [markdown]
# The five-qubit code meets the bound with equality; the two Bacon-Shor
# codes pack more densely than any pure code could.

# %%
for t in range(1, 11):
    rep = hamming_check(odd_family(t))
    print(f"t={t:2d} {str(rep.params):>18}  violated by {rep.margin_bits:7.3f} bits")

# %% [markdown]
# The Singleton bound, by contrast, holds for every member.

# %%
for a in range(1, 8):
    rep = singleton_check(square_family(a))
    print(f"a={a}: n-2(d-1) = {rep.lhs}, k+r = {rep.rhs}, holds = {rep.satisfied}")
