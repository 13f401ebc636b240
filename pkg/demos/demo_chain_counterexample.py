#!/usr/bin/env python3
"""The infinite chain 1 = a0 > a1 > ... > bottom, symbolically.

Finite frames cannot tell primes from covered primes, so the key failure
mode of the covered-prime duality needs an infinite example: two
sublocales that each keep their covered primes covered, intersecting in
one that does not.
"""

from localelab import omegachain as oc

whole = oc.chain_whole()
print("the chain itself:", oc.format_description(whole))
ptd = oc.chain_ptd(whole)
print("its covered primes: every level;",
      "bottom covered?", ptd.bottom,
      "(the bottom is the meet of all levels, never attained)")

S = oc.even_levels_sublocale()
T = oc.odd_levels_sublocale()
for name, c in (("S", S), ("T", T)):
    print(f"\n{name} = {oc.format_description(c)}")
    print("  sublocale?", oc.chain_is_sublocale(c),
          " d-sublocale?", oc.chain_is_d_sublocale(c))

inter = oc.chain_intersect(S, T)
print("\nS intersect T =", oc.format_description(inter))
print("covered primes of the intersection:", oc.chain_ptd(inter))
print("d-sublocale?", oc.chain_is_d_sublocale(inter),
      " (bottom is covered inside, but not in the chain)")

print("\njoin of S and T is the whole chain:",
      oc.chain_join(S, T) == whole)

# cutting the chain at a finite depth makes every meet attained, which is
# exactly the degeneracy the symbolic module exists to escape; above the
# cut the finite computation agrees with the symbolic one
for depth in (16, 32, 64):
    print(f"truncation at {depth}: set ops agree?",
          oc.truncation_matches_set_op(S, T, "intersect", depth),
          " covered primes agree above the cut?",
          oc.truncation_matches_ptd(inter, depth))

# differences of described sublocales stay described
diff = oc.chain_difference(whole, S)
print("\nchain minus S =", oc.format_description(diff))
