# %% [markdown]
# # Semigroup counting
#
# With P a semigroup, the wreath construction restricted to monomials gives
# a semigroup whose balls we can count directly.

# %%
from wreath_growth import GeneratingSequence, SemigroupSpec, semigroup_growth
from wreath_growth.dense import dense_semigroup_counts

P = SemigroupSpec("free_monogenic")
x = P.algebra.gen("x")
c = GeneratingSequence(P.algebra, {1: x})

# %%
res = semigroup_growth(P, c, 8)
print([res.series[n] for n in range(1, 9)])

# %%
# Brute-force comparison on the same horizon: the dense oracle takes
# coefficient lists, so x is [0, 1].
print(dense_semigroup_counts(2, {1: [0, 1]}, 8)[0])

# %%
T = SemigroupSpec("table", table=[[0]])
p0 = T.algebra.gen(T.algebra.generator_names()[0])
print(semigroup_growth(T, GeneratingSequence(T.algebra, {1: p0}), 6).to_json()["values"])
