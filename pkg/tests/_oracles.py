"""Brute-force reference computations, deliberately sharing no code with the
package beyond Fraction."""
from fractions import Fraction
from math import factorial


def falling_factorial_coeffs(n):
    """Coefficients of x(x-1)...(x-n+1); these are the signed S_1(n, m)."""
    coeffs = [1]
    for j in range(n):
        # multiply by (x - j)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= j * c
        coeffs = nxt
    return coeffs


def akiyama_tanigawa(n):
    """B_0..B_n by Akiyama-Tanigawa, converted to the B_1 = -1/2 convention."""
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    if n >= 1:
        out[1] = -out[1]
    return out


def bernoulli_poly_value(n, x):
    b = akiyama_tanigawa(n)
    x = Fraction(x)
    return sum(Fraction(factorial(n), factorial(l) * factorial(n - l)) * b[l] * x ** (n - l) for l in range(n + 1))


def brute_power_sum(j, n):
    return sum(l**j for l in range(n))


def dedekind_s1m(m):
    """Closed form S(1, m) = (m-1)(m-2)/(12m)."""
    return Fraction((m - 1) * (m - 2), 12 * m)


def sawtooth_floor(x):
    """((x)) from integer floor division only."""
    x = Fraction(x)
    fl = x.numerator // x.denominator
    if x.denominator == 1:
        return Fraction(0)
    return x - fl - Fraction(1, 2)


def poly_expand_shift(coeffs, a, b):
    """Coefficients of p(a x + b) by explicit binomial expansion of each power."""
    out = [Fraction(0)] * len(coeffs)
    for n, c in enumerate(coeffs):
        for r in range(n + 1):
            binom = factorial(n) // (factorial(r) * factorial(n - r))
            out[r] += c * binom * Fraction(a) ** r * Fraction(b) ** (n - r)
    while out and out[-1] == 0:
        out.pop()
    return out
