"""A tour of the graded free Lie ring machinery.

Hall bases give integer coordinates for every graded piece of the free
Lie ring; brackets rewrite into the basis through antisymmetry and the
Jacobi identity, and any degree-1 integer matrix extends functorially to
the whole tower.
"""

from rinfty import (IntMatrix, build_hall_basis, charpoly, induced_tower,
                    witt_dimension)

print(__doc__)

table = build_hall_basis(2, 5)
print("free Lie ring on 2 generators, class 5")
print("per-degree ranks:", table.dims())
print("Witt formula:    ", [witt_dimension(2, d) for d in range(1, 6)])
print()

print("basis words by degree (trees of generator indices):")
for d in range(1, 5):
    print(f"  degree {d}: {[w.tree for w in table.words(d)]}")
print()

wa = table.words(2)[0]   # [x1, x0]
wb = table.words(1)[1]   # x1
print(f"structure constants: [{wa.tree}, {wb.tree}] expands to "
      f"{table.bracket_words(wa, wb)} over degree-3 words")
print(f"antisymmetry: [{wb.tree}, {wa.tree}] = "
      f"{table.bracket_words(wb, wa)}")
print()

s = IntMatrix([[1, 1], [0, 1]])
tower = induced_tower(table, s)
print(f"shear {[list(r) for r in s.entries]} induces, in degree 3:")
m3 = tower.matrix(3)
for row in m3.entries:
    print("   ", list(row))
print("charpoly of the degree-3 action:", charpoly(m3))
print()
print("(eigenvalues of every layer are products of the base eigenvalues,")
print(" so a unipotent shear stays unipotent all the way up)")
