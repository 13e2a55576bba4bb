# A tour of H_{2n^2} at n = 2, where it is the eight-dimensional Kac-Paljutkin algebra.
# Run cell by cell, or top to bottom with `python3 demos/hopf_structure.py`.

# %%
from hfl.hopf import algebra, antipode, coproduct, counit, integral, verify_hopf_axioms, verify_quasitriangular

H = algebra(2)
x, y, z = H.x(), H.y(), H.z()
print(H, "has dimension", H.dim)

# %% z does not commute with x: it swaps x and y.
print("z*x =", z * x)
print("y*z =", y * z)

# %% z^2 is not a group element but an average over the group part.
print("z^2 =", z * z)

# %% The coproduct of z mixes the two tensor factors.
print("Delta(z) =", coproduct(z))
print("eps(z) =", counit(z), "  S(xz) =", antipode(x * z))

# %% A two-sided integral, and eps of it is nonzero, so H is semisimple.
L = integral(2)
print("Lambda =", L)
print("eps(Lambda) =", counit(L))

# %% Exhaustive checks on the basis.
print(verify_hopf_axioms(2).summary())
print(verify_quasitriangular(2).summary())
