# %% [markdown]
# # Consistent mappings on a seven-element space
#
# A mapping f: U -> V is predecessor-consistent with respect to R when any two
# points with the same image have the same predecessors, and
# successor-consistent when they have the same successors. This script builds
# a small chain-like relation and classifies three mappings.

# %%
from roughmap import (
    FiniteMapping,
    Universe,
    fiber,
    is_predecessor_consistent,
    is_successor_consistent,
    is_type1_consistent,
    is_type2_consistent,
    make_relation,
    pred_neighborhood,
    predecessor_witness,
    succ_neighborhood,
    successor_witness,
)

U = Universe([f"x{i}" for i in range(1, 8)])
V = Universe([f"y{i}" for i in range(1, 7)])
R = make_relation(
    U,
    [("x1", "x2"), ("x1", "x3"), ("x2", "x4"), ("x3", "x4"), ("x3", "x5"),
     ("x4", "x6"), ("x4", "x7"), ("x5", "x6"), ("x5", "x7")],
)  # fmt: skip
print(R.matrix.astype(int))

# %% [markdown]
# Neighborhoods are rows (successors) and columns (predecessors) of the
# boolean matrix.

# %%
for x in U.labels:
    print(x, "pred", pred_neighborhood(R, x), "succ", succ_neighborhood(R, x))

# %%
def mapping(pairs):
    return FiniteMapping.from_assignment(U, V, dict(pairs))


f1 = mapping(zip(U.labels, ["y1", "y2", "y2", "y4", "y5", "y6", "y6"]))
f2 = mapping(zip(U.labels, ["y1", "y2", "y3", "y4", "y4", "y6", "y6"]))
f3 = mapping(zip(U.labels, ["y1", "y2", "y3", "y4", "y5", "y6", "y6"]))

for name, f in [("f1", f1), ("f2", f2), ("f3", f3)]:
    print(
        name,
        "pred:", is_predecessor_consistent(f, R),
        "succ:", is_successor_consistent(f, R),
        "type-1:", is_type1_consistent(f, R),
        "type-2:", is_type2_consistent(f, R),
    )

# %% [markdown]
# The type-1 test (each fiber lies inside or outside every successor set)
# always agrees with predecessor-consistency, and the type-2 test (each fiber
# lies inside a class of equal successor sets) with successor-consistency.
# When a test fails, a witness names the offending pair.

# %%
print("fiber of x2 under f1:", fiber(f1, "x2"))
print("f1:", successor_witness(f1, R).describe(U))
print("f2:", predecessor_witness(f2, R).describe(U))
