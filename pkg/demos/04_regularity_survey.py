"""The four regularity conditions and how they co-occur on finite carriers.

I'  : every symmetry fixes exactly its basepoint,
D'  : every right translation r -> r |> q is surjective,
C   : one inner orbit,
Phi': every orbit realizes as a coset quandle with the stabilizer fixed
      by the twisting automorphism.

The unipotent classes show how the finite picture diverges from the
geometric intuition: at p=3 the class is so small that both I' and D'
hold, while at p=5 both fail at once (s_J1 fixes J_4, and the image of a
right translation misses half the class).
"""

from quandles import (FiniteGroup, alexander, conjugation, dihedral,
                      fixed_points, implication_survey,
                      isolated_connected_consequence, regularity_report,
                      trivial, unipotent_class_quandle)

# -- single-instance reports -------------------------------------------------------

for build, name in [(lambda: alexander(5, 1, 2), "alexander(5,1,2)"),
                    (lambda: dihedral(4), "dihedral R_4"),
                    (lambda: unipotent_class_quandle(3), "unipotent p=3"),
                    (lambda: unipotent_class_quandle(5), "unipotent p=5")]:
    rep = regularity_report(build())
    print(f"{name:18s} {rep.flags()}")

# Fixed sets behind the p=5 failure of I':
u5 = unipotent_class_quandle(5)
j1 = u5.labels.index("[[1,1],[0,1]]")
print("\nfixed set of s_J1 at p=5:",
      [u5.labels[r] for r in fixed_points(u5, j1)])

# -- a small survey ------------------------------------------------------------------

corpus = [("trivial_3", trivial(3)),
          ("dihedral_5", dihedral(5)),
          ("dihedral_6", dihedral(6)),
          ("alexander_7_3", alexander(7, 1, 3)),
          ("conj_S3", conjugation(FiniteGroup.symmetric(3))),
          ("unipotent_3", unipotent_class_quandle(3)),
          ("unipotent_5", unipotent_class_quandle(5))]
result = implication_survey(corpus)
print("\n" + result.format_table())
print("\nimplications with no counterexample here:")
for key in result.observed():
    print("  ", key)
print("C does not give I' (witness):", result.implications["C => I'"])

# -- what isolation buys -----------------------------------------------------------------

rep = isolated_connected_consequence(alexander(7, 1, 3))
print("\nalexander(7,1,3): isolated fixed points and every translation "
      "surjective:", rep.i_prime and rep.all_surjective)
