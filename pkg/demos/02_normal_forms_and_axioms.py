"""The algebra as a rewriting system, and machine verification of its axioms.

Products are rewritten to the normal-form basis a^i b^j c^k x^u y^v; the
coproduct, counit and antipode are then checked exactly against the Hopf
axioms.  The checker also flags parameter pairs where the displayed
structure maps genuinely fail (n even with n1 even breaks multiplicativity
of the coproduct).
"""

from hopfsl2 import AlgebraParams

p = AlgebraParams(3, 1, beta=(1, 1, 1))
x, y, a = p.gen("x"), p.gen("y"), p.gen("a")

print("x * a        =", p.mul(x, a), " (the q-commutation)")
print("y * x        =", p.mul(y, x))
print("y^2 * x      =", p.mul(p.power(y, 2), x))
print("x^3          =", p.power(x, 3), " (the power relation)")
print("Delta(x^2)   =", p.coproduct(p.gen("x", 2)))
print("s(x)         =", p.antipode(x))
print("s(s(x))      =", p.antipode(p.antipode(x)), " (s^2 is inner)")

report = p.check_hopf_axioms(n_random=25, seed=42)
print("\nHopf axioms at (n, n1) = (3, 1):", "all pass" if report.ok else report.failures())

bad = AlgebraParams(4, 2, beta=(1, 1, 1)).check_hopf_axioms(n_random=5, seed=0)
print("Hopf axioms at (n, n1) = (4, 2):", sorted(bad.failures()))
print("(the q-binomial middle terms vanish only when gcd(n, n1) = 1)")
