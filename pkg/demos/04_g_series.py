"""
Lower central series of a finite-index subgroup
===============================================

Send x1 to a generator of the cyclic group of order 3 and x2 to the identity.
The kernel is free of rank 1 + 3 * (2 - 1) = 4.
"""

from milnorkit import commutator, gamma_n_member, parse_word, rewrite_in_subgroup, schreier_basis
from milnorkit.gseries import cyclic_quotient

s = schreier_basis(cyclic_quotient(2, 3, [1, 0]))
for i, w in enumerate(s.basis, start=1):
    print(f"y{i} = {w}")

# %%
a = parse_word("x1 x1 x1", 2)
b = parse_word("x2", 2)
w = commutator(a, b)
print("rewritten:", rewrite_in_subgroup(s, w).to_text("y"))
print([gamma_n_member(s, w, n) for n in (1, 2, 3)])
