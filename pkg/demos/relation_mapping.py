# %% [markdown]
# # Pushing relations forward and pulling them back
#
# A mapping f: U -> V carries a relation R on U to f(R) = {(f(x), f(y))} on V,
# and carries a relation S on V back to {(x, y) : (f(x), f(y)) in S}.

# %%
from roughmap import (
    FiniteMapping,
    Universe,
    image,
    induce,
    induced_succ_neighborhood,
    inverse_induce,
    is_successor_consistent,
    is_transitive,
    make_relation,
    succ_neighborhood,
)

U = Universe([f"x{i}" for i in range(1, 8)])
V = Universe([f"y{i}" for i in range(1, 7)])
R = make_relation(
    U,
    [("x1", "x2"), ("x1", "x3"), ("x2", "x4"), ("x3", "x4"), ("x3", "x5"),
     ("x4", "x6"), ("x4", "x7"), ("x5", "x6"), ("x5", "x7")],
)  # fmt: skip
f1 = FiniteMapping(U, V, [0, 1, 1, 3, 4, 5, 5])

fR = induce(f1, R)
print("f1(R):", fR.labeled_pairs())

# %% [markdown]
# f1 merges x2 and x3, whose successor sets differ, so the round trip adds
# the pair (x2, x5) that R never had.

# %%
back = inverse_induce(f1, fR)
print(len(R), "->", len(back), "extra:", sorted(set(back.labeled_pairs()) - set(R.labeled_pairs())))

# %% [markdown]
# Successors of a point of V in f(R) are read off the fiber without
# materializing f(R): the union of f(R_s(x)) over the x mapped there.

# %%
for y in V.labels:
    print(y, induced_succ_neighborhood(f1, R, y), succ_neighborhood(fR, y))

# %% [markdown]
# Transitivity survives the push when the mapping is successor-consistent.
# The transitive closure of R makes a handy test subject: x6 and x7 have no
# successors, so merging them keeps consistency.

# %%
import numpy as np

m = R.matrix.copy()
for _ in range(len(U)):
    m = m | ((m.astype(int) @ m.astype(int)) > 0)
closure = make_relation(U, [(i, j) for i, j in zip(*np.nonzero(m))])
g = FiniteMapping(U, V, [0, 1, 2, 3, 4, 5, 5])
print("closure transitive:", is_transitive(closure))
print("g successor-consistent:", is_successor_consistent(g, closure))
print("g(closure) transitive:", is_transitive(induce(g, closure)))
print("g(R_s(x3)):", image(g, succ_neighborhood(closure, "x3")))
