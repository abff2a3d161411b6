"""Walk from the Golay code to the Leech roots of R and the vector h.

    python3 demos/leech_tour.py
"""

from leechlab import golay, hyperbolic, leech

code = golay.build_golay()
print(f"Golay code: {len(code)} words, {len(code.octads)} octads, "
      f"weights {[w for w, n in enumerate(code.weight_enumerator()) if n]}")

rep = leech.verify_generators()
print(f"Leech generators: rank {rep.rank}, Gram determinant {rep.gram_det}")

vs = leech.enumerate_norm4()
print(f"norm -4 vectors: {len(vs)}  by shape {leech.shape_counts(vs)}")

s = leech.count_S()
print(f"|S| = {s.total} with case split {s.case_counts}; |S'| = {leech.count_S_prime()}")

R = hyperbolic.build_R()
print("R:", " ".join(hyperbolic.coxeter_type(R)))
for row in R.gram():
    print("   ", " ".join(f"{x:3d}" for x in row))

p = hyperbolic.weyl_projection()
print(f"h^2 = {p.h_norm}, w_R^2 = {p.w_R_norm}, h primitive: {p.h_primitive}")
print(f"(h/2 + w_R)^2 = {hyperbolic.w_tau_norm(p.h_norm)}")
