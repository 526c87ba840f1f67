# %% [markdown]
# # Function constructions
#
# Merging subexponential functions, superlinearization and dilution.

# %%
from fractions import Fraction

from wreath_growth import (Field, PolynomialAlgebra, build_dilution,
                           merge_subexponential, probe_composition, superlinearize)
from wreath_growth import asymptotics as asy

# %%
merged = merge_subexponential([asy.power(k) for k in (1, 2, 3)], 10_000)
merged.thresholds  # where each n^k starts being dominated

# %%
plan = superlinearize(asy.exp_power(Fraction(1, 2)), 10_000)
print(plan.thresholds, plan.mu[10_000])

# %%
for p in probe_composition(asy.exp_power(Fraction(1, 2)), plan,
                           [Fraction(1), Fraction(1, 2)]):
    print(p.alpha, p.tail, p.holds)

# %% [markdown]
# Dilution places generator b_k at the first n_k where c_k m <= h(m) on the
# rest of the horizon.

# %%
A = PolynomialAlgebra(Field.gf(2), ["x"])
x = A.gen("x")
gens = [x ** k for k in range(1, 6)]
d = build_dilution(gens, [1, 2, 3, 4, 5], None, None, asy.power(2), A, 100)
print(d.thresholds)
print(d.sequence.to_json())
