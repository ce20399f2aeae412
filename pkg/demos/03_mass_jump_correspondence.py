# %% [markdown]
# Mass jump <-> delta^(1) strength
#
# The mass-jump junction has determinant mu. Rescaling the right half-line by
# lambda = 1/sqrt(mu) turns it into diag(g, 1/g), i.e. a delta^(1) junction with
# X2 = 2 (g - 1)/(g + 1). The closed form x2_of_mu gives the same number.

# %%
import numpy as np

from pointlike.massjump import b_of_mu, correspondence, extract_x2, x2_of_mu

for mu in (1e-6, 1e-3, 0.1, 0.5, 2.0, 3.0, 10.0, 1e3, 1e6):
    c = correspondence(mu)
    print(f"mu={mu:8.1e}  b={c['b']:.6f}  X2={c['X2']:.12f}  "
          f"pipeline={extract_x2(mu)[0]:.12f}  match={c['delta_one_match_residual']:.1e}")

# %% [markdown]
# Both ends approach X2 = 2 (decoupled half-lines), but very unevenly:
# 2 - X2 ~ 2 mu^(1/4) for small mu and ~ 2 mu^(-3/4) for large mu.

# %%
for mu in (1e-12, 1e-8, 1e-4, 1e4, 1e8, 1e12):
    print(f"mu={mu:7.0e}  2 - X2 = {2 - x2_of_mu(mu):.3e}")
