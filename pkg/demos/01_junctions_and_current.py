# %% [markdown]
# Junction matrices and the probability current
#
# A point interaction at x = 0 is a 2x2 matrix M with (psi, psi')(0+) = M (psi, psi')(0-).
# It defines a self-adjoint Hamiltonian exactly when M^dag Sp2 M = Sp2, which is the
# same as saying the current Im(conj(psi) psi') is the same on both sides.

# %%
import numpy as np

from pointlike import BoundaryData, NotSymplectic, apply_junction, current, validate_symplectic
from pointlike.extensions import Chart, DeltaOne, DeltaPotential, DeltaPrime, MagneticFlux, junction_of

g = BoundaryData(1.0, 1j)
print("current of (1, i):", current(g))

# %%
for fam in (DeltaPotential(3.0), DeltaPrime(-1.2), MagneticFlux(0.3), DeltaOne(0.5)):
    m = junction_of(fam)
    out = apply_junction(m, g)
    print(f"{fam!s:40s} residual {m.residual:.1e}  current after {current(out):+.15f}")

# %% [markdown]
# A matrix that rescales psi without compensating psi' leaks current and is rejected.

# %%
try:
    validate_symplectic([[2, 0], [0, 1]])
except NotSymplectic as e:
    print(e)

# %% [markdown]
# The general chart z [[1, 1/((y-x)|z|^2)], [x, y/((y-x)|z|^2)]] always lands in the group.

# %%
rng = np.random.default_rng(0)
worst = 0.0
for _ in range(1000):
    x, y = rng.uniform(-10, 10, 2)
    z = rng.uniform(0.1, 10) * np.exp(1j * rng.uniform(0, 2 * np.pi))
    worst = max(worst, junction_of(Chart(x, y, z)).residual / max(1, np.abs(Chart(x, y, z).matrix()).max() ** 2))
print("worst scaled residual over 1000 chart draws:", worst)
