"""Inner automorphism groups, transvection groups, orbits and saturation.

Inn(Q) is generated by all symmetries s_q; Tr(Q) by the comparison maps
s_q s_0^-1.  On the quandle itself they have the same orbits, and iterating
Z -> Q |> Z (no inverses needed) already reaches the full orbit of Z.
"""

from quandles import (FiniteGroup, alexander, conjugation, dihedral, inn,
                      is_connected, orbits, saturate_forward,
                      power_cocycle, tr, trivial)

# -- two groups attached to R_3 ---------------------------------------------------

r3 = dihedral(3)
print("Inn(R_3) order:", inn(r3).order)   # symmetries generate S_3 here
print("Tr(R_3) order:", tr(r3).order)     # the rotations only

# -- orbit decompositions -----------------------------------------------------------

q = conjugation(FiniteGroup.symmetric(3))
deco = orbits(q)
print("\nconjugation quandle of S_3 splits into class orbits:")
for base, orbit in zip(deco.basepoints, deco.orbits):
    print(f"  basepoint {base} ({q.labels[base] or 'id'}): size {len(orbit)}")

# Witness words certify membership: replay one.
x = deco.orbits[1][-1]
word = deco.witness_words[x]
base = deco.basepoints[deco.orbit_id[x]]
print(f"witness word for element {x}: {word.letters},",
      "replays correctly:", word.apply(q, base) == x)

# -- forward saturation --------------------------------------------------------------

s52 = power_cocycle(5, 2)
chain = saturate_forward(s52, {0})
print("\nsaturation chain sizes from the origin of power_cocycle(5,2):",
      [len(s) for s in chain.sets])
print("stabilizes to the first-coordinate fiber {0} x F_5:",
      chain.stable == frozenset(range(5)))

# -- connectedness with certificates ---------------------------------------------------

for build, label in [(lambda: alexander(7, 1, 3), "alexander(7,1,3)"),
                     (lambda: alexander(7, 1, 1), "alexander(7,1,1)"),
                     (lambda: trivial(4), "trivial(4)")]:
    rep = is_connected(build())
    if rep.connected:
        print(f"{label}: connected ({len(rep.witness_words)} witness words)")
    else:
        print(f"{label}: not connected, e.g. {rep.separating_pair} "
              "lie in different orbits")
