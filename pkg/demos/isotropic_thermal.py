"""Thermal entanglement in the isotropic (XX) chain.

With gamma = 0 the mode occupations commute with every post-quench Hamiltonian,
so the concurrence is frozen at its initial value.  At J = h it is zero in the
ground state, yet heating the chain creates entanglement before destroying it.
"""
# %%
import numpy as np

from xyquench import ASYMPTOTIC, QuenchParams, concurrence_at

# %% frozen dynamics: nothing about the final Hamiltonian matters
initial = dict(gamma=0.0, j0=2.0, h0=1.0)
for j1, h1 in [(0.1, 0.1), (1.0, 5.0), (5.0, 1.0)]:
    p = QuenchParams.from_kt(j1=j1, h1=h1, kt=0.2, **initial)
    values = [concurrence_at(p, t) for t in (0.0, 3.0, 30.0)] + [concurrence_at(p, ASYMPTOTIC)]
    print(f"J1={j1:3.1f} h1={h1:3.1f}: " + "  ".join(f"{v:.6f}" for v in values))

# %% thermal revival at J = h = 1
kts = np.round(np.arange(0.0, 1.21, 0.05), 10)
cs = [concurrence_at(QuenchParams.from_kt(0.0, 1, 1, 1, 1, kt), ASYMPTOTIC) for kt in kts]
print("\n  kT     C(i,i+1)")
for kt, c in zip(kts, cs):
    print(f"{kt:5.2f}  {c:.5f}  " + "#" * int(400 * c))
