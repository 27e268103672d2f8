# coding: utf-8

# # Type 2 poly-Bernoulli numbers and polynomials

# The index k can be any integer. For k = 1 the numbers collapse to the
# classical Bernoulli numbers.

from fractions import Fraction

from polydedekind import classical, polybernoulli

print(polybernoulli.poly_bernoulli_numbers(1, 8) == list(classical.bernoulli_numbers(8)))

for k in (-2, 0, 2, 3):
    print(k, [str(v) for v in polybernoulli.poly_bernoulli_numbers(k, 6)])


# Polynomials are built from the numbers by the binomial expansion.

p = polybernoulli.poly_bernoulli_poly(2, 4)
print(p.coeffs)
print(p(Fraction(1, 3)))


# A second construction goes through classical Bernoulli polynomials and
# Stirling numbers only. Both routes give the same polynomial for every d.

for d in (1, 2, 5):
    print(d, polybernoulli.theorem9_expand(2, 4, d) == p)


# The value at 1 minus the value at 0 is a Stirling-weighted sum.

rep = polybernoulli.theorem2_check(-1, 6)
print(rep.lhs, rep.rhs, rep.holds)


# The integral of x B_p^(k)(x) over [0, 1], two ways plus direct integration.

rep = polybernoulli.theorem5_check(3, 4)
print(rep.lhs, rep.rhs, rep.details)
