"""Small generating sets and why they cannot be smaller.

For n >= 3 the order-reversing maps c_1, ..., c_{n//2} together with the
reflection h generate IM_n; adding one partial identity gives PIM_n.
"""

from intervalmono.chain import format_transformation
from intervalmono.enumeration import closure_equals, froidure_pin
from intervalmono.rank import (
    certify_rank_exhaustive,
    certify_rank_structural,
    factorization_identities,
    generating_set,
)

n = 6
gens, labels = generating_set(n, "PIM")
for name, g in zip(labels, gens):
    print(f"{name:>4}: {format_transformation(g)}")

table = froidure_pin(gens, n, labels)
print(f"\nthe closure has {len(table)} elements; equal to PIM_{n}: {closure_equals(gens, n, 'PIM')}")

# a few shortlex normal forms
for k in (1, 10, 100, len(table) - 1):
    print(f"  {table.word_label(table.words[k]):<24} -> {format_transformation(table.elements[k])}")

print("\nfactorisations used to reach the remaining generators:")
for name, lhs, rhs in factorization_identities(n):
    print(f"  {name:<18} {'ok' if lhs == rhs else 'FAILS'}")

# exhaustive search over all smaller subsets, then the structural argument
cert = certify_rank_exhaustive(5, "PIM")
print(f"\nexhaustive: rank(PIM_5) = {cert.claimed_rank}, {cert.subsets_checked} subsets tried, valid={cert.valid}")
cert = certify_rank_structural(10, "IM")
print(f"structural: rank(IM_10) = {cert.claimed_rank}, valid={cert.valid}")
for clause, ok in cert.clauses.items():
    print(f"  [{'x' if ok else ' '}] {clause}")
