# %% [markdown]
# # Sweeping the law registry
#
# Every law is checked over all relations and mappings on small universes.
# A report counts cases, cases where the hypothesis fired, and violations.

# %%
from roughmap.propcheck import REGISTRY, EnumerationBudget, case_count, check_law

small = EnumerationBudget(n=2, m=2)
for law in REGISTRY.values():
    report = check_law(law, small)
    print(f"{law.id:<10} {report.status:<13} {report.cases_checked:>6} cases  {report.hypothesis_hits:>5} hits")

# %% [markdown]
# The full n=3, m=2 sweep of the two-relation laws visits two million cases;
# case_count gives the size before anything runs.

# %%
full = EnumerationBudget(n=3, m=2)
print({law_id: case_count(law_id, full) for law_id in ("T2.2", "P2.2", "T3.6.1")})

# %% [markdown]
# Falsifiable claims come with the first counterexample in enumeration
# order, serialized as an instance document.

# %%
report = check_law("F3.5.4", full)
print(report)
print(report.witness_json())

# %% [markdown]
# Larger universes are sampled with an explicit seed. A hypothesis that never
# fires yields INCONCLUSIVE rather than a hollow PASS.

# %%
sampled = EnumerationBudget(n=5, m=4, sample=500, seed=11)
print(check_law("T3.4s", sampled))
print(check_law("T2.2", sampled).status)
