#!/usr/bin/env python3
"""Finite spaces and their spectra: opens to frames and back, separation
axioms, the Skula refinement, and subspaces as sublocales."""

from localelab import dot, frames, spaces

sierp = spaces.sierpinski()
print("two points, one open point:", spaces.space_to_text(sierp).strip())
om = spaces.omega(sierp)
print("its open-set frame has", om.frame.n, "elements (a 3-chain)")
print("T0?", spaces.is_t0(sierp), " TD?", spaces.is_td(sierp),
      " sober?", spaces.is_sober(sierp))

# the spectrum of the 3-chain gives the space back
chain3 = frames.frame_from_covers(3, [(0, 1), (1, 2)])
spec = spaces.spectrum(chain3)
print("\nspectrum of the 3-chain has", spec.space.points, "points;",
      "homeomorphic to the two-point space above?",
      spaces.homeomorphic(spec.space, sierp))

# the covered-prime spectrum is always a TD space
print("covered-prime spectrum is TD?",
      spaces.is_td(spaces.spectrum_td(chain3).space))

# the Skula refinement adds complements of opens; for TD spaces it is
# discrete
sk = spaces.skula(sierp)
print("\nSkula refinement has", len(sk.opens), "opens out of",
      1 << sierp.points, "possible (discrete exactly for TD spaces)")

indiscrete = spaces.indiscrete(2)
print("indiscrete pair: T0?", spaces.is_t0(indiscrete),
      " Skula opens:", len(spaces.skula(indiscrete).opens))

# a subspace induces a sublocale of the open-set frame
for pts, label in ((frozenset(), "empty"), (frozenset({0}), "closed point"),
                   (frozenset({1}), "open point"), (frozenset({0, 1}), "all")):
    sub = spaces.omega_prime(sierp, pts)
    print(f"subspace {label}: sublocale {sub}")

# specialization preorder, ready for graphviz
print("\n" + dot.space_dot(sierp).strip())
