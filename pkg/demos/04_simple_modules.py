"""The four kinds of simple modules, built as exact matrices and certified.

Labels carry an explicit n-th root g1 of the central character value
gamma1 (no in-field root extraction), the k-coefficients are solved from the
straightening recurrence, and simplicity is certified by the Burnside span.
"""

from hopfsl2 import AlgebraParams, root_of_unity
from hopfsl2.modules import (
    build_V0,
    build_VI,
    build_Vr,
    dual_module,
    is_simple,
    modules_isomorphic,
    solve_k_seed,
    verify_module,
)

p = AlgebraParams(3, 1, beta=(0, 0, 1))

z2 = build_Vr(p, p.sqrt_q, 1, 1, 0)  # the canonical 2-dimensional simple
print("V_2: dim", z2.dim, "| relations failing:", verify_module(p, z2),
      "| simple:", is_simple(p, z2))
print("a  =", z2.mat("a"))
print("y  =", z2.mat("y"))

triv = build_V0(p, 1, 1, 1, 0)
print("\ntrivial module verified:", verify_module(p, triv) == [])

# an n-dimensional simple with a k-seed
p1 = AlgebraParams(3, 1, beta=(1, 0, 0), extra_orders=(9,))
z9 = root_of_unity(9, 1)
seeds = solve_k_seed(p1, "VI", z9, 1, 1, 0)
m = build_VI(p1, z9, 1, 1, 0, seeds[0])
print("\nV_I at gamma1 = zeta_9^3: dim", m.dim, "| simple:", is_simple(p1, m))

# duality: the double dual is isomorphic to the module (s^2 is inner)
d = dual_module(p1, m)
print("dual simple:", is_simple(p1, d))
print("double dual isomorphic to m:", modules_isomorphic(p1, m, dual_module(p1, d)))

# distinct k-seeds can give genuinely non-isomorphic simples
pq = AlgebraParams(3, 1, beta=(1, 0, 0))
p2 = AlgebraParams(3, 1, beta=(1, pq.q - pq.one, 0), extra_orders=(9,))
seeds2 = solve_k_seed(p2, "VI", root_of_unity(9, 1), 1, 1, 0)
mods = [build_VI(p2, root_of_unity(9, 1), 1, 1, 0, s) for s in seeds2]
print("\nseeds", [str(s) for s in seeds2])
print("pairwise isomorphic:",
      [modules_isomorphic(p2, mods[i], mods[j]) for i in range(3) for j in range(i + 1, 3)])
