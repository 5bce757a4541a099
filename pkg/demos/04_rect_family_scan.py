# %% [markdown]
# # Scanning the rectangular family
#
# Which a x b Bacon-Shor codes violate the Hamming bound for pure codes?

# %%
from qhbound import scan

hits = [(r.a, r.b, str(r.params), r.hamming.margin_bits)
        for r in scan("rect", range(1, 13), range(1, 13), violations_only=True)]
for a, b, params, margin in hits:
    if a <= b:
        print(f"{a:2d} x {b:2d}  {params:>20}  +{margin:.3f} bits")

# %% [markdown]
# Even sides dominate less: d = 2t + 2 buys no more correctable errors than
# d = 2t + 1, while the lattice grows.  The same scan is available from the
# command line as ``qhbound scan rect --a 1..12 --b 1..12 --violations-only``.
