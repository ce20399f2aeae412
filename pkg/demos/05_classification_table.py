# %% [markdown]
# Potential vs magnetic point interactions
#
# Every junction conserves Im(conj(psi) psi'). Only the flux and delta^(1) junctions also
# conserve the full bilinear conj(psi) psi', which the spin current needs. Together with
# time-reversal symmetry of S that sorts the four families.

# %%
from pointlike.cli import table_rows
from pointlike.extensions import DeltaOne, DeltaPotential, DeltaPrime, MagneticFlux
from pointlike.spincurrent import SpinorBoundaryData, spin_term_jumps

for row in table_rows():
    print(f"{row['row']:4s} {row['matrix']:42s} {row['group']:7s} {row['label']:22s} "
          f"pairing={row['preserves_pairing']!s:5s} T-sym={row['time_reversal_ok']}")

# %%
s = SpinorBoundaryData.from_values(1.0, 0.5j, 0.3 - 0.2j, 1.0)
for fam in (DeltaPotential(2.0), DeltaPrime(2.0), MagneticFlux(0.3), DeltaOne(0.5)):
    jy, jz = spin_term_jumps(fam, s)
    print(f"{fam!s:40s} jump_y={jy:+.3e}  jump_z={abs(jz):.3e}")
