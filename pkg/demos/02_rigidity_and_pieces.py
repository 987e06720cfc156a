#!/usr/bin/env python3
"""Non-intrusive rigidification: the five-piece rotation trick.

A long braid is cut into five pieces P1..P5.  Conjugating by the trailing
two pieces rotates them to the front; if renormalising the seam leaves both
ends of P4 P5 P1 P2 untouched, the rotated braid is rigid and still
contains the middle piece P3 verbatim, so the conjugation was
"non-intrusive".  The worked example is a 4-strand braid of length 5.
"""

import garside as g

n = 4
factor_words = [
    (2, 3, 2, 1),
    (1, 3, 2, 1),
    (1, 2, 1, 3, 2),
    (3, 2, 1, 3),
    (1, 3, 2, 1),
]
x = g.NormalForm(n, 0, tuple(g.simple_from_letters(n, w) for w in factor_words))
print(f"x = {g.render(x)}")
print(f"rigid as given: {g.is_rigid(x)}")
print()

pieces = g.decompose(x)
print("pieces (floor-balanced scheme):")
for name in ("p1", "p2", "p3", "p4_raw", "p5_raw"):
    print(f"  {name:6s} = {g.render(getattr(pieces, name))}")
print(f"middle fifth = {g.render(g.middle_fifth(x))}")
print()

result = g.observation_test(x)
assert result is not None
rigid, conj = result
print(f"rotated conjugate  : {g.render(rigid)}")
print(f"conjugating element: {g.render(conj)}  (the last two pieces)")
print(f"is rigid           : {g.is_rigid(rigid)}")
print(f"c . x . c^-1 check : {g.conjugate(x, conj) == rigid}")
print(f"non-intrusive      : {g.is_nonintrusive(x, rigid)}  (P3 survives verbatim)")
print()

# The symmetric criterion is a sufficient condition phrased through the
# greatest common prefix of P1 P2 and the complement of P4 P5.
print(f"symmetric criterion: {g.symmetric_criterion(x)}")
print()

# The rare failure mode: P1 swallowed whole into the complement of P5.
# Searching the 64 braids of the length-5 sphere on 3 strands finds the
# degenerate shapes where that happens.
hits = [y for y in g.enumerate_sphere(3, 5) if g.prefix_of_complement(y)]
print(f"P1 prefix of complement(P5) on the B_3 length-5 sphere: {len(hits)}/64")
print(f"example: {g.render(hits[0])}")
pd = g.decompose(hits[0])
print(f"  P1 = {g.render(pd.p1)}, complement(P5) = {g.render(g.complement(pd.p5))}")
