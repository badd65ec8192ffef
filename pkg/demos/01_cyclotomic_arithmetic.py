"""Exact cyclotomic arithmetic: the scalar layer everything else rests on.

Every coefficient in this package is an element of Q(zeta_M), stored in the
canonical basis modulo the M-th cyclotomic polynomial, so equality is literal
coefficient equality and nothing is ever approximated.
"""

from fractions import Fraction

from hopfsl2 import parse_scalar, rational, root_of_unity

i = root_of_unity(4, 1)
print("zeta_4^2 =", i * i, "(= -1 exactly)")

# embeddings are canonical: zeta_12^4 is zeta_3
print("zeta_12^4 == zeta_3:", root_of_unity(12, 4) == root_of_unity(3, 1))

# vanishing sums of roots of unity hold on the nose
s = rational(1)
for k in range(1, 5):
    s = s + root_of_unity(5, k)
print("1 + zeta_5 + ... + zeta_5^4 =", s)

# inverses via the extended Euclidean algorithm against Phi_M
x = root_of_unity(7, 3) + Fraction(2, 5)
print("x =", x)
print("x * x^-1 =", x * x.inv())

# multiplicative orders are decided exactly
print("order(zeta_6) =", root_of_unity(6, 1).multiplicative_order())
print("order(2) =", rational(2).multiplicative_order(), "(not a root of unity)")

# serialization round-trips bit-exactly
text = x.serialize()
print("serialized:", text)
print("round trip equal:", parse_scalar(text) == x)
