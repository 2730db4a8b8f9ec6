"""Nilpotent elements of PIM_n.

An order-reversing partial map is nilpotent exactly when its image misses
its domain; order-preserving ones are counted by a separate closed form.
"""

from intervalmono import formulas
from intervalmono.chain import compose, format_transformation
from intervalmono.nilpotents import (
    enumerate_nilpotents,
    is_nilpotent,
    disjointness_criterion_holds,
    nonclosure_witness,
    witness_power_histogram,
)

print(" n  formula  enumerated  published")
for n in range(1, 13):
    enumerated = len(enumerate_nilpotents(n))
    published = formulas.REFERENCE_TABLE["N_PIM"][n - 1]
    flag = "" if published == enumerated else "   <- differs"
    print(f"{n:2d} {formulas.card_N_PIM(n):8d} {enumerated:11d} {published:10d}{flag}")

print("\nimage/domain criterion holds for n <= 6:", all(disjointness_criterion_holds(n) for n in range(1, 7)))

a, b = nonclosure_witness(3)
print(f"\n{format_transformation(a)} and {format_transformation(b)} are nilpotent,")
ab = compose(a, b)
verdict = is_nilpotent(ab)
print(f"but their product {format_transformation(ab)} is not: its powers repeat from exponent {verdict.cycle_detected_at}")

print("\nnilpotency index histogram for n = 6:", dict(sorted(witness_power_histogram(6).items())))
