#!/usr/bin/env python3
"""Blocking braids: stopping the normal-form chain reaction.

A positive braid is blocking when every normal form extended by it on the
right keeps a single fixed generator as its only nontrivial simple suffix.
Once such a braid sits inside a piece, no renormalisation started to its
right can propagate past it; that is what makes rigidification generic.
"""

import garside as g
from garside.genericity import blocking_braid_factor_words

for n in (4, 5, 6):
    b = g.blocking_braid(n)
    words = blocking_braid_factor_words(n)
    print(f"n = {n}")
    print(f"  word (as constructed): {' . '.join(' '.join(map(str, w)) for w in words)}")
    print(f"  normal form          : {g.render(b)}")
    print(f"  starting set         : {sorted(g.starting_set(b.factors[0]))}")
    print(f"  finishing set        : {sorted(g.finishing_set(b.factors[-1]))}")
    print(f"  max simple suffix    : {g.simple_to_canonical_word(g.max_simple_suffix(b))}")
    print(f"  blocking (prefixes up to 2 factors): {g.verify_blocking(b, 2)}")
    print()

# A non-example on 4 strands: the bare generator sigma_1.  Prepending the
# normal form sigma_3 sigma_1 enlarges the maximal suffix, so sigma_1 does
# not pin the right end.
cand = g.normalize_letters(4, (1,))
print(f"sigma_1 on 4 strands blocking? {g.verify_blocking(cand, 1)}")
ext = g.NormalForm(4, 0, (g.simple_from_letters(4, (3, 1)),) + cand.factors)
print(f"  counterexample X . sigma_1 = {g.render(ext)}")
print(f"  its maximal simple suffix  = {g.simple_to_canonical_word(g.max_simple_suffix(ext))}")
print()

# Bounded search on 3 strands, where the explicit construction (which needs
# sigma_3) does not apply.  The tiny lattice lets single atoms block.
found = list(g.search_blocking_braids(3, 1, 2))
print(f"3-strand candidates of length 1 passing the bounded check: "
      f"{[g.render(x) for x in found]}")
print("(a bounded check only; no general claim on 3 strands)")
