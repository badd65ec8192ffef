"""Tensor products decomposed exactly into composition factors.

decompose() matches traces of the monomials a^j x^u y^u against the complete
candidate list of simples with the same central character (characteristic-0
trace functions determine composition factors), then solves for integer
multiplicities exactly.
"""

from hopfsl2 import AlgebraParams
from hopfsl2.fusion import candidate_simples, fuse, fusion_table
from hopfsl2.modules import SimpleLabel

p = AlgebraParams(3, 1, beta=(0, 0, 1))
z2 = SimpleLabel("Vr", p.sqrt_q, p.one, p.one, 0)
z3 = SimpleLabel("Vr", p.q, p.one, p.one, 0)
triv = SimpleLabel("V0", p.one, p.one, p.one, 0)

print("candidates over the trivial central character:")
for lab, _m in candidate_simples(p, p.one, p.one, p.one):
    print("   ", lab)

print("\nz2 (x) z2 =", fuse(p, z2, z2))
print("z3 (x) z2 =", fuse(p, z3, z2))
print("z3 (x) z3 =", fuse(p, z3, z3))

table = fusion_table(p, [triv, z2, z3])
print("\nfull 3x3 fusion table (commutativity verified):")
for (i, j), fv in sorted(table.items()):
    print(f"   ({i},{j}):", fv)
