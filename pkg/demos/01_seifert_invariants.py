#!/usr/bin/env python3
"""Exact invariants of closed Seifert manifolds, step by step.

Run as: python demos/01_seifert_invariants.py
"""

from fractions import Fraction

from gmanvol import (
    SeifertInvariants,
    commutator_realizable,
    ehn_horizontal_foliation,
    euler_number,
    geometry_type,
    milnor_wood_check,
    min_genus_for_ehn,
    orbifold_euler_char,
)

print("A closed Seifert manifold is recorded as a base genus plus filling")
print("pairs (alpha, beta), one per exceptional fiber.  Everything is exact.")
print()

triangle = SeifertInvariants(0, ((2, 1), (3, 1), (7, 1)))
print("The (2,3,7) triangle example over the sphere:")
print("  euler number      =", euler_number(triangle))
print("  orbifold chi      =", orbifold_euler_char(triangle))
print("  geometry          =", geometry_type(triangle).value)
print()

bundle = SeifertInvariants(2, ((1, 3),))
print("A circle bundle of Euler number 3 over a genus-2 surface:")
print("  euler number      =", euler_number(bundle))
print("  geometry          =", geometry_type(bundle).value)
print()

print("For circle bundles the horizontal-foliation test agrees with the")
print("Milnor-Wood inequality |e| <= 2g - 2:")
for genus in (1, 2, 3):
    row = []
    for e in range(-4, 5):
        inv = SeifertInvariants(genus, ((1, e),))
        foliates = ehn_horizontal_foliation(inv)
        assert foliates == milnor_wood_check(e, genus)
        row.append("x" if foliates else ".")
    print(f"  genus {genus}:  e in [-4..4] -> {' '.join(row)}")
print()

print("With fractional fillings the floor/ceiling test is sharper.")
half = SeifertInvariants(1, ((2, 1), (2, -1)))
print("  (g=1; 1/2, -1/2) foliates:", ehn_horizontal_foliation(half))
print("  (g=2; 3)         foliates:", ehn_horizontal_foliation(bundle))
print()

pairs = ((1, -1), (1, -1), (1, -1))
print("Smallest genus at which (-1, -1, -1) filling data foliates:",
      min_genus_for_ehn(pairs))
print()

print("Realizing a product of elliptic shifts as g commutators needs the")
print("strict bound |sum of translation amounts| < 2g - 1:")
for alphas, genus in ([Fraction(1)], 1), ([Fraction(1, 2), Fraction(1, 4)], 1):
    print(f"  sum |{sum(alphas)}| against genus {genus}:",
          commutator_realizable(alphas, genus))
