# %% [markdown]
# A flux strip shrinking to a point
#
# Integrate chi'' = (4 alpha^2 x^2 - eps) chi across a strip of width w, multiply by the
# gauge phase exp(2 pi i alpha), and watch the junction approach exp(2 pi i alpha) I.

# %%
from pointlike.regularization import convergence_study

widths = [1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 1e-4]
for alpha in (0.0, 0.1, 0.25, 0.5, 1.0):
    print(f"alpha = {alpha}")
    for r in convergence_study(alpha, 1.0, widths):
        order = "" if r.empirical_order is None else f"{r.empirical_order:.3f}"
        print(f"  w={r.width:7.0e}  dev={r.deviation:.3e}  psi-row={r.value_deviation:.3e}  "
              f"psi'-row={r.derivative_deviation:.3e}  order={order}")
