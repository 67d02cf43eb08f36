# # Truncated power series in several variables
#
# Every series lives in a box of exponents 0..N per variable.  Products
# drop whatever falls outside it.

from geopoincare import MultiSeries, binom_expand, monomial

N = 6
geo = binom_expand(2, N, (1, 2), -1)   # 1/(1 - t1 t2^2)
print(geo.to_text())

# (1 + t1 t2^2) / ((1 - t1 t2)(1 - t1 t2^2))

num = MultiSeries(2, N, {(0, 0): 1, (1, 2): 1})
f = num * binom_expand(2, N, (1, 1), -1) * geo
print(f.to_text())

# Coefficient lookup and the first exponent where two series differ.

print(f[(2, 3)])
print(f.first_difference(f + monomial(2, N, (3, 3))))
