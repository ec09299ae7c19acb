"""Brute-force oracles: counting twisted classes by hand.

Reducing Malcev coordinates modulo a prime power p^e with p larger than
the class gives an honest finite nilpotent group, where twisted classes
can be enumerated directly and compared against the exact predictions.
"""

from rinfty import (FiniteTwistedSetup, IntMatrix, abelian_reidemeister_count,
                    brute_force_twisted_classes, build_hall_basis,
                    spectrum_crosscheck)

print(__doc__)

print("Heisenberg group mod 3 (order 27), identity twist:")
setup = FiniteTwistedSetup.identity_twist(2, 2, 3)
count = brute_force_twisted_classes(setup)
print(f"  twisted classes = ordinary conjugacy classes = {count}")
print("  (class equation 27 = 3 + 8*3: three central, eight classes of size 3)")
print()

print("abelian checks: cokernel order vs enumeration")
for rows, modulus in ([[[0, 1], [1, 1]], 5], [[[3, 0], [0, 1]], 4]):
    m = IntMatrix(rows)
    exact = abelian_reidemeister_count(m)
    setup = FiniteTwistedSetup.from_abelian_matrix(m, modulus)
    brute = brute_force_twisted_classes(setup)
    print(f"  M = {rows}: |coker(I-M)| = {exact}, brute force mod {modulus} "
          f"= {brute}")
print()

print("spectrum crosscheck: tower eigenvalues are products of base ones")
table = build_hall_basis(2, 4)
for rows in ([[0, 1], [1, 1]], [[2, 1], [1, 1]], [[1, 1], [0, 1]]):
    s = IntMatrix(rows)
    verdicts = [spectrum_crosscheck(s, table, i) for i in (2, 3, 4)]
    print(f"  S = {rows}: degrees 2..4 divide their product spectra: "
          f"{verdicts}")
