# The Grothendieck ring r(H_{2n^2}) as a quotient of Z[x, y, z].

# %%
from hfl.labels import TwoDim
from hfl.linalg import integer_determinant
from hfl.presentation import (
    basis_matrix,
    eval_in_fusion,
    fibonacci_poly,
    parse_poly,
    reduced_relations,
    s0_expansion,
)

for t in range(1, 7):
    print(f"F_{t} =", fibonacci_poly(t))

# %% For odd n, y stands for [S_{n+1}] and z for [S_{0,1}]; the Fibonacci
# polynomials express the other two-dimensional classes.
n = 5
for m in range(n - 2):
    p = s0_expansion(n, m)
    print(f"[S_{{0,{m + 2}}}] = {p}  ->  {eval_in_fusion(p, n)}")

# %% The generators of the relation ideal vanish in r(H).
for n in (3, 4, 7):
    rels = reduced_relations(n)
    print(f"n={n}:", ", ".join(map(str, rels)))
    assert all(eval_in_fusion(p, n).is_zero() for p in rels)

# %% Flipping the signs in the [S_{0,2}] expansion lands on a different class.
print("z^2 + y^4 + y ->", eval_in_fusion(parse_poly("z^2+y^4+y"), 3), "which is not", TwoDim(0, 2))

# %% The monomial basis is unimodular over Z.
for n in range(2, 9):
    m = basis_matrix(n)
    print(f"n={n}: {len(m)}x{len(m)} determinant {integer_determinant(m)}")
