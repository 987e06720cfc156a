#!/usr/bin/env python3
"""Left normal forms: the canonical coordinates of a braid.

Every braid on n strands factors uniquely as a power of the half-twist
Delta followed by a chain of permutation braids in which no crossing can
slide backwards.  This script walks through evaluating words, the basic
arithmetic, and the structural accessors.
"""

import garside as g

n = 4
print(f"Working in the braid group on {n} strands.")
print(f"Half-twist Delta as a permutation: {g.delta(n).perm}")
print(f"Its canonical word: {g.simple_to_canonical_word(g.delta(n))}")
print()

# A raw word mixing positive and negative crossings.
word = g.ArtinWord(n, (1, 3, -2, 2, 1, 1, -3))
x = g.normalize(word)
print(f"word      : {word}")
print(f"normal    : {g.render(x)}")
print(f"inf / sup / canonical length: {x.inf_power} / {x.sup} / {x.canonical_length}")
print()

# Structural equality IS braid equality: scramble the word with the braid
# relations and free cancellations, the normal form does not move.
scrambled = g.ArtinWord(n, (1, 3, -2, 2, 3, -3, 1, 1, -3))
print(f"scrambled : {scrambled}")
print(f"same braid: {g.normalize(scrambled) == x}")
print()

# Group arithmetic stays in normal form.
y = g.normalize_letters(n, (2, 2, -1))
print(f"y         : {g.render(y)}")
print(f"x * y     : {g.render(g.multiply(x, y))}")
print(f"x^-1      : {g.render(g.inverse(x))}")
print(f"x * x^-1  : {g.render(g.multiply(x, g.inverse(x)))}")
print(f"x^3       : {g.render(g.power(x, 3))}")
print()

# Initial and final factors, rigidity, cycling.
z = g.normalize_letters(3, (1, 1, 1))
print(f"z         : {g.render(z)}")
print(f"iota(z)   : {g.simple_to_canonical_word(g.initial_factor(z))}")
print(f"phi(z)    : {g.simple_to_canonical_word(g.final_factor(z))}")
print(f"rigid     : {g.is_rigid(z)}")
print(f"cycling(z): {g.render(g.cycling(z))} (conjugate by the initial factor)")
print()

# The complement pairs a positive braid with its missing part of a
# Delta-power: y . complement(y) = Delta^sup(y).
w = g.normalize_letters(n, (1, 2, 1, 3))
dw = g.complement(w)
print(f"w                : {g.render(w)}")
print(f"complement(w)    : {g.render(dw)}")
print(f"w * complement(w): {g.render(g.multiply(w, dw))}  (= Delta^{w.sup})")
