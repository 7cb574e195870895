"""Projective spaces, chart gluing, and the Grassmannian Gr(2,4) over F1."""

from blueforge import catalog, proj, fq_points_of_scheme
from blueforge.schemes import check_triple_overlaps

# P^n over F1 has 2^{n+1} - 1 points: the homogeneous primes avoid at least
# one coordinate, so points match proper subsets of the coordinate set.
for n in (1, 2, 3):
    P = proj(catalog.proj_cone(n))
    print(f"P^{n}: {len(P)} points, {len(P.closed_points())} closed")

# The same space as a chart-glued scheme: n+1 affine charts glued along
# principal opens, with triple-overlap compatibility.
ps = catalog.proj_space(2)
print("P^2 charts:", len(ps.charts), "glued points:", len(ps.point_space()))
print("triple overlaps compatible:", check_triple_overlaps(ps))
print("P^2(F_2) =", fq_points_of_scheme(ps, 2), "= 1 + 2 + 4")

# Gr(2,4) is cut out of P^5 by the sign-split Pluecker relation
# x12*x34 + x14*x23 = x13*x24 (no minus signs are available over F1).
gr = catalog.grassmannian_f1(2, 4)
bp = gr.blueprint
for l, r in bp.relations:
    print("Pluecker relation:", bp.render_sum(l), "=", bp.render_sum(r))
G = proj(gr)
print("Gr(2,4) homogeneous primes:", len(G),
      "with", len(G.closed_points()), "closed points")
print("Gr(2,4)(F_2) =", gr.fq_points(2), "= [4 choose 2]_2")
