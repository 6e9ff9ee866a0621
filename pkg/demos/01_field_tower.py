"""Finite-field towers: Frobenius powers, norms and conjugacy classes.

Run: python3 demos/01_field_tower.py
"""

from lrslist.gf import Automorphism, build_tower, conjugacy_classes, hilbert90_witness, norm, subfield_basis

# GF(9) = GF(3)[z]/(modulus); elements print as coefficient tuples, low degree first.
t = build_tower(3, 2)
print("GF(9) modulus", t.modulus, "primitive element", t.primitive_element)

sigma = Automorphism(t, 1)  # the Frobenius a -> a^3
z = t.z
print("sigma(z) =", sigma(z), "equals z^3:", sigma(z) == z ** 3)

# The norm lands in GF(3)* and splits GF(9)* into q - 1 = 2 classes.
classes = conjugacy_classes(sigma)
for cls in classes:
    print("norm", norm(sigma, cls[0]), "class", cls)

# Within a class, Hilbert 90 produces c with a*c = b*sigma(c).
a, b = classes[1][0], classes[1][-1]
c = hilbert90_witness(sigma, a, b)
print("witness for", a, "and", b, "is", c, "check:", a * c == b * sigma(c))
print("across classes:", hilbert90_witness(sigma, classes[0][0], classes[1][0]))

# GF(4) inside GF(16): theta-powers are fixed by x -> x^4.
big = build_tower(2, 4)
sb = subfield_basis(big, 2)
print("GF(4) basis in GF(16):", sb.theta_powers, "relative basis:", sb.relative_basis)
