"""Counting quandle colorings of knot diagrams.

A coloring assigns quandle elements to arcs; crossing the over-strand
applies its symmetry to the under-strand color.  The count is a knot
invariant: diagrams of the same knot agree.
"""

from quandles import (FiniteGroup, conjugation, count_colorings, dihedral,
                      invariance_check, orbits, parse_braid, parse_pd, trivial)

TREFOIL = "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]"
FIGURE8 = "X[4,1,5,2];X[2,8,3,7];X[8,5,1,6];X[6,4,7,3]"

# -- the classics -------------------------------------------------------------

trefoil = parse_pd(TREFOIL)
print("trefoil:", trefoil)
for n in (3, 5, 7):
    print(f"  colorings by R_{n}:", count_colorings(trefoil, dihedral(n)).total)

fig8 = parse_pd(FIGURE8)
print("figure-eight:", fig8)
for n in (3, 5, 7):
    print(f"  colorings by R_{n}:", count_colorings(fig8, dihedral(n)).total)

# R_3 distinguishes the trefoil from the unknot (9 vs 3); R_5 does the same
# for the figure-eight (25 vs 5).

# -- braid closures give the same counts ----------------------------------------

braid_trefoil = parse_braid("s1 s1 s1", 2)
braid_fig8 = parse_braid("s1 s2' s1 s2'", 3)
print("\nbraid closure matches the planar code:",
      invariance_check(braid_trefoil, trefoil, dihedral(3)),
      invariance_check(braid_fig8, fig8, dihedral(5)))

# -- links and trivial quandles ----------------------------------------------------

unlink = parse_braid("s1 s1'", 2)
print(f"\n's1 s1'' closes to {unlink.component_count} components;",
      "trivial(n) counts n per component:",
      count_colorings(unlink, trivial(3)).total)

# -- refining by orbit ----------------------------------------------------------------

q = conjugation(FiniteGroup.symmetric(3))
count = count_colorings(trefoil, q, by_orbit=True)
print(f"\ntrefoil colored by conj(S_3): total {count.total}")
for base, orbit_count in zip(orbits(q).basepoints, count.by_orbit):
    label = q.labels[base] or "id"
    print(f"  image inside the orbit of {label}: {orbit_count}")
