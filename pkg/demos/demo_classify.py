#!/usr/bin/env python3
"""Classify a handful of frames against the property table: every row
pairs a containment of assembly families with a frame property, computed
along independent routes and compared."""

import numpy as np

from localelab import classify, frames

frames_to_classify = {
    "2-chain": frames.frame_from_covers(2, [(0, 1)]),
    "3-chain": frames.frame_from_covers(3, [(0, 1), (1, 2)]),
    "square": frames.downset_lattice(np.eye(2, dtype=bool)),
    "square+top": frames.downset_lattice(
        frames.transitive_reflexive_closure(3, [(0, 2), (1, 2)])),
}

for name, frame in frames_to_classify.items():
    result = classify.classify_frame(frame, name=name)
    print(classify.classification_text(result))

# the machine-readable form of the same report
result = classify.classify_frame(frames_to_classify["3-chain"], name="3-chain")
print("keyvalue form, first lines:")
for line in classify.classification_keyvalue(result).splitlines()[:8]:
    print(" ", line)
