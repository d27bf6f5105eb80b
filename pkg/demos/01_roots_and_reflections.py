"""Tour of the root-system layer: construction, pairings, predicates.

Everything is integer or rational; regularity and dominance are sign tests
on coroot pairings, so no numerical tolerance appears anywhere.
"""

from nullcone import build_root_system

for name in ("A2", "B2", "G2", "F4", "E8"):
    rs = build_root_system(name[0], int(name[1:]))
    print(f"{name}: {rs.num_positive} positive roots, "
          f"highest root {rs.highest_root}, b_g = {rs.borel_dim}")

print()
g2 = build_root_system("G", 2)
print("G2 positive roots (coordinates on the simple roots):")
for r in g2.positive_roots:
    print(f"  {r}  height {g2.root_height(r)}  squared length {g2.root_length2(r)}")

print()
print("rho has pairing 1 with every simple coroot:", g2.rho)
print("rho regular:", g2.is_regular(g2.rho), " dominant:", g2.is_dominant(g2.rho))

# reflecting rho in the first simple root subtracts that root
print("s_1(rho) =", g2.reflect(g2.rho, 1))

# the coroot pairings of a root are read off the Cartan matrix
print("pairings of beta_2:", g2.weight_of_root((0, 1)))

# rho + highest root is always regular dominant; rho - (non-simple root) never is
theta = g2.highest_root
lam = g2.rho_shift(theta, +1)
print("rho + theta regular dominant:", g2.is_regular(lam) and g2.is_dominant(lam))
lam = g2.rho_shift((1, 1), -1)
print("rho - (beta_1+beta_2) zero pairing witness:", g2.zero_pairing_witness(lam))
