# Simple modules of H_{2n^2}, their tensor products, and the closed-form fusion rules.

# %%
from hfl.center import primitive_central_idempotents
from hfl.fusion import fuse, fusion_table
from hfl.labels import OneDim, TwoDim, simple_labels
from hfl.repr import block_label, build_simple, decompose, tensor_rep

n = 3
print("simples for n=3:", ", ".join(map(str, simple_labels(n))))

# %% Each simple is cut out by one primitive central idempotent.
for c in primitive_central_idempotents(n)[:3]:
    print(block_label(n, c.kind), "<-", c.element)

# %% Tensor the two-dimensional S_{0,1} with itself and decompose by traces.
s01 = build_simple(n, TwoDim(0, 1))
square = tensor_rep(s01, s01)
print("dim", square.dim, "->", decompose(square))

# %% The closed form gives the same answer without building any matrix.
print("fuse:", fuse(n, TwoDim(0, 1), TwoDim(0, 1)))

# %% At n = 2, S_1 (x) S_1 is trivial: z acts on it by 1.
t = tensor_rep(build_simple(2, OneDim(1)), build_simple(2, OneDim(1)))
print("n=2: S_1 (x) S_1 ->", decompose(t), " z acts by", t.z[0][0])

# %% A full table for n = 2, as text.
table = fusion_table(2)
for a, row in zip(table.simples, table.entries):
    print(f"{str(a):>8} |", "  ".join(f"{str(v):>20}" for v in row))
