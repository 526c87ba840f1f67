# %% [markdown]
# # Growth of a wreath product over F_2[x]
#
# Build the algebra, pick the sequence c = (x, 0, 0, ...), and count
# dim V^n layer by layer.

# %%
from wreath_growth import (Field, GeneratingSequence, PolynomialAlgebra, gk_slope,
                           run_growth, w_series, corollary1_check)

F2 = Field.gf(2)
A = PolynomialAlgebra(F2, ["x"])
x = A.gen("x")
c = GeneratingSequence(A, {1: x})

# %%
run = run_growth(c, A, 20)
g = run.series()
for n in range(1, 21):
    print(n, g[n])

# %%
# The slope of log g against log n over the tail of the window.
print(float(gk_slope(g, (10, 20))))

# %%
# w(n) counts the weighted filtration of A; it sits below g on both sides.
w = w_series(c, A, 9)
report = corollary1_check(w, run_growth(c, A, 19).series())
print(report.to_json())

# %% [markdown]
# Infinite support works in gap mode: positions k(k+1)/2 carry x^k.

# %%
tri = GeneratingSequence(A, positions=lambda k: k * (k + 1) // 2,
                         elements=lambda k: x ** k, horizon=200, gap_mode=True)
g_tri = run_growth(tri, A, 10).series()
print([g_tri[n] for n in range(1, 11)])
