# coding: utf-8

# # Dedekind, Apostol and poly-Dedekind sums

from polydedekind import dedekind

# The classical sum s(h, m) and its reciprocity law s(h,m) + s(m,h).

print(dedekind.dedekind_sum(5, 17))
rep = dedekind.classical_reciprocity_check(5, 17)
print(rep.lhs, rep.rhs, rep.holds)


# Apostol's generalisation carries an extra exponent p. Its reciprocity law
# needs p odd; for even p the two sides really do differ.

print(dedekind.apostol_reciprocity_check(3, 4, 7).holds)


# Poly-Dedekind sums replace the Bernoulli function by its poly-Bernoulli
# counterpart of index k.

for k in (-1, 0, 1, 2):
    print(k, dedekind.poly_dedekind_sum(k, 3, 2, 5))


# Their reciprocity relation holds exactly.

rep = dedekind.theorem10_check(2, 3, 3, 8)
print(rep.lhs, rep.rhs, rep.holds)


# For h = 1 there is a closed form in m alone.

print(dedekind.poly_dedekind_sum(2, 3, 1, 9) == dedekind.poly_dedekind_closed_form_h1(2, 3, 9))


# Coprimality is a precondition, not a silent zero.

try:
    dedekind.classical_reciprocity_check(4, 6)
except dedekind.CoprimeError as exc:
    print("refused:", exc)
