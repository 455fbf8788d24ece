"""
Two views of the lower central series of a free group
=====================================================

The Magnus expansion and Hall collection both decide which term of the lower
central series a word lies in.  Here they are run side by side.
"""

from milnorkit import collect, commutator, expand, hall_basis, lcs_degree, parse_word

basis = hall_basis(2, 4)
print(basis.dump())

# %%
# The last word looks like it should sit in F_4, but [x1,x2^-1] agrees with
# [x1,x2]^-1 modulo F_3, which pushes the commutator down to F_5.
x1, x2 = parse_word("x1", 2), parse_word("x2", 2)
words = {
    "x1 x2": x1 * x2,
    "[x1,x2]": commutator(x1, x2),
    "[[x1,x2],x1]": commutator(commutator(x1, x2), x1),
    "[[x1,x2],[x1,x2^-1]]": commutator(commutator(x1, x2), commutator(x1, x2.inverse())),
}
for name, w in words.items():
    c = collect(w, 4, basis)
    print(f"{name:22s} magnus {str(lcs_degree(w, 5)):>3}  hall {c.least_weight()}  exps {c.exponents}")

# %%
# The expansion of a commutator starts in degree 2.
print(expand(commutator(x1, x2), 3))
