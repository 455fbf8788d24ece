"""
Milnor invariants of three classical links
==========================================

Load the bundled diagrams, look at the reduced longitudes and read the
first nonvanishing invariant of each link.
"""

from milnorkit import presentation, reduce_longitudes, table
from milnorkit.data import load

# The Hopf link: its only interesting number is the linking number.
hopf = load("hopf")
print(presentation(hopf).dump())
print(table(hopf, 2).to_text())

# %%
# Borromean rings: pairwise unlinked, yet the longitude of the third
# component is a commutator of the other two meridians.
borromean = load("borromean")
longitudes = reduce_longitudes(presentation(borromean), 3)
for i, s in enumerate(longitudes.series, start=1):
    print(f"longitude {i}: {s}")
print("mu(123) =", table(borromean, 3)[(1, 2, 3)].mu)

# %%
# Whitehead link: everything vanishes until length 4.
whitehead = load("whitehead")
t = table(whitehead, 4)
length, witnesses = t.first_nonvanishing()
print(f"first nonzero length {length}, e.g. {witnesses[0]} -> {t[witnesses[0]]}")
print(t.to_text(nonzero_only=True))
