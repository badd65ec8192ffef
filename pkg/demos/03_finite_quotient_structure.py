"""The finite-dimensional quotient: idempotents, blocks, integral, radical.

The quotient by (a^N - 1, b - a^(n m n2), c - a^(m n n3)) has dimension
N n^2; its center contains m(n-1) orthogonal idempotents cutting it into
blocks of dimension n^3, and it carries a two-sided integral with
eps(lambda) = 0 (so it is never semisimple).
"""

from hopfsl2 import AlgebraParams, BlockAlgebra, QuotientParams

p = AlgebraParams(3, 1, beta=(1, 1, 1), extra_orders=(12,))
qp = QuotientParams(p, m=2, n2=1, n3=1)
print(f"dim H = N n^2 = {qp.N * p.n**2}")

idems = qp.central_idempotents()
print(f"{len(idems)} central idempotents; block dimensions:",
      [qp.block_dimension(e) for e in idems])
print("e_0 =", idems[0])

p1 = AlgebraParams(3, 1, beta=(1, 1, 1), extra_orders=(6,))
qp1 = QuotientParams(p1, m=1)
lam = qp1.check_integral()  # raises unless h lam = eps(h) lam = lam h for all h
print("\ntwo-sided integral verified on all", len(qp1.basis()), "basis monomials")
print("lambda =", lam)

# a degenerate block: the span of the positive-degree monomials is the radical
pdeg = AlgebraParams(3, 1, beta=(1, 1, 0), extra_orders=(12,))
qpdeg = QuotientParams(pdeg, m=2, n2=1, n3=1)
blk = BlockAlgebra(qpdeg, 0)
print("\nblock 0 at beta=(1,1,0): degenerate =", blk.degenerate(),
      "; radical check =", blk.radical_check())
fs = blk.weight_idempotents()
print("weight idempotents: f_0 f_0 == f_0:", blk.multiply(fs[0], fs[0]) == fs[0])
