# coding: utf-8

# # Bernoulli numbers and Stirling numbers

# Everything here is an exact `Fraction`. Bernoulli numbers use B_1 = -1/2,
# matching the generating function t/(e^t - 1).

from fractions import Fraction

from polydedekind import classical

b = classical.bernoulli_numbers(12)
for n, value in enumerate(b):
    print(f"B_{n} = {value}")


# The recurrence and the series inversion agree term by term.

print(b == classical.bernoulli_numbers_via_series(12))


# Bernoulli polynomials come out as dense coefficient lists, lowest degree first.

b3 = classical.bernoulli_poly(3)
print(b3.coeffs)
print(b3(Fraction(1, 2)))


# Power sums from the closed form, checked against a plain loop.

print(classical.power_sum(3, 10), sum(l**3 for l in range(10)))


# Signed Stirling numbers of the first kind: row n holds the coefficients of
# x(x-1)...(x-n+1).

table = classical.stirling1_table(6)
for n in range(7):
    print(table.row(n))


# The distribution relation at a rational point, periodic form in lhs/rhs.

rep = classical.verify_distribution(4, 3, Fraction(-7, 5))
print(rep.lhs, rep.rhs, rep.details, rep.holds)
