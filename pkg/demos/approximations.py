# %% [markdown]
# # Rough approximations and how mappings move them
#
# The lower approximation of X keeps the points whose successor set lies
# inside X; the upper approximation keeps those whose successor set meets X.

# %%
from roughmap import (
    FiniteMapping,
    Universe,
    image,
    induce,
    is_successor_consistent,
    lower_approx,
    lower_approx_pred,
    make_relation,
    upper_approx,
    upper_approx_pred,
)
from roughmap.propcheck import Instance, evaluate

U = Universe(["x", "y", "z"])
V = Universe(["a", "b"])
R = make_relation(U, [("x", "y")])
f = FiniteMapping.from_assignment(U, V, {"x": "a", "y": "b", "z": "b"})
X = U.subset(["z"])

for name, op in [
    ("lower", lower_approx),
    ("upper", upper_approx),
    ("lower (pred)", lower_approx_pred),
    ("upper (pred)", upper_approx_pred),
]:
    print(f"{name:>13}: {op(R, X)}")

# %% [markdown]
# y and z share the image b and neither has successors, so f is
# successor-consistent. Even so the image of the upper approximation can be
# strictly smaller than the upper approximation of the image.

# %%
print("successor-consistent:", is_successor_consistent(f, R))
left = image(f, upper_approx(R, X))
right = upper_approx(induce(f, R), image(f, X))
print("f(upper X) =", left, " upper f(X) =", right)

# %% [markdown]
# The law registry carries this old inclusion as a falsifiable claim, and
# feeding it the instance registers a violation.

# %%
print(evaluate("F3.5.4", Instance(f, R, X=X)))
print(evaluate("T3.6.4", Instance(f, R, X=X)))
