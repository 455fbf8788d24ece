"""
How far does a link look like the unlink?
=========================================

``max_basing_rel_unlink`` finds the longest length through which every
mu-bar invariant vanishes; ``free_quotient_depth`` is one more than that.
"""

from milnorkit import free_quotient_depth, max_basing_rel_unlink, mu_n_equal, relative_max_basing
from milnorkit.data import corpus

links = corpus()
for name, d in links.items():
    report = max_basing_rel_unlink(d, cap=6)
    print(f"{name:10s} basing {str(report.max_basing):>3}  depth {str(free_quotient_depth(d, 6)):>3}"
          f"  obstruction {report.obstruction}")

# %%
# Relative comparisons.  The Whitehead link and the 2-component unlink agree
# through length 3, so they have the same length-3 invariants.
print(mu_n_equal(links["whitehead"], links["unlink2"], 2))
print(relative_max_basing(links["borromean"], links["unlink3"], 6).to_json())

# Two diagrams of the Hopf link agree everywhere, but their tables do not
# vanish, so the report flags that the agreement is all it can say.
print(relative_max_basing(links["hopf"], links["hopf4"], 5).to_json())
