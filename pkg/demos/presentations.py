"""Presentations by generators and relations.

Relations read off a Cayley graph present IO_n on the letters a_i, b_i.
Adjoining h with the relations h h = 1, h a_i = b_{n-i} h and
a_1^{n-1} h = b_{n-1}^{n-1} then presents IM_n, which coset
enumeration confirms.
"""

from intervalmono.formulas import card_IM, card_PIM
from intervalmono.presentation import (
    Presentation,
    check_chain,
    check_relations_hold,
    derive_chain_1,
    extend_presentation,
    fp_enumerate,
    im_extension_input,
    pim_extension_input,
    relations_N,
    standard_alphabet,
    standard_assignment,
)

n = 4
inp = im_extension_input(n)
print(f"base presentation of IO_{n}: {len(inp.base.alphabet)} letters, {len(inp.base.relations)} relations")
pres, forms = extend_presentation(inp)
print(f"extended: {len(pres.alphabet)} letters, {len(pres.relations)} relations, {len(forms)} canonical forms")
print("all relations hold in IM_4:", not check_relations_hold(pres, standard_assignment(n, "PIM"), n))
print(f"coset enumeration gives {fp_enumerate(pres, 10_000)} elements; |IM_{n}| = {card_IM(n)}")

# the same for PIM_3
pres, forms = extend_presentation(pim_extension_input(3))
print(f"\nPIM_3: {fp_enumerate(pres, 10_000)} elements from {len(pres.relations)} relations; expected {card_PIM(3)}")

# a derived relation, one rewriting step at a time
groups = relations_N(n)
chain = derive_chain_1(n, 1)
used = check_chain(chain, groups["N0"] + groups["N1"])
print("\nh b_1 = a_3 h:")
for w, rel in zip(chain, [None] + used):
    step = "" if rel is None else f"   by {' '.join(rel[0])} = {' '.join(rel[1]) or '1'}"
    print(f"  {' '.join(w):<12}{step}")

# without base relations nothing finite comes out
bare = Presentation(standard_alphabet(n, "IM"), groups["N0"] + groups["N1"] + groups["N2"])
print("\nwith only the h-relations:", fp_enumerate(bare, 500))
