"""Bond alternation throttles and finally freezes the transfer.

The staggered chain alternates strong and weak bonds (weights 1 -+ kappa).
Its spectrum gaps out and grows a zero mode pinned to the odd sites, so a
state injected in cavity 1 overlaps modes that barely disperse:

* kappa = -0.2: the wavefront still crosses the chain, but slower and with
  the end-site maximum cut to 0.08;
* kappa = -0.8: the excitation is essentially stuck in the first few odd
  cavities; in the strong-hopping regime only a ~0.3% photon trickle
  reaches the far end.
"""

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import cavitychain as cc

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

N = 101
PI4 = np.pi / 4
times = np.linspace(0.0, 2.0 * N, 1200)


def staggered(kappa, coupling):
    return cc.SystemParams(n_cavities=N, coupling=coupling, hopping=1.0,
                           beta=PI4, pattern=cc.STAGGERED, kappa=kappa)


fig, axes = plt.subplots(2, 2, figsize=(11, 7), sharex=True, sharey=True)
for row, kappa in enumerate((-0.2, -0.8)):
    for col, (coupling, regime) in enumerate([(200.0, "strong coupling"),
                                              (1 / 200.0, "strong hopping")]):
        trace = cc.populations_staggered(staggered(kappa, coupling), times)
        total = trace.p_atom + trace.p_photon
        ax = axes[row, col]
        im = ax.imshow(total.T, origin="lower", aspect="auto",
                       extent=(times[0], times[-1], 1, N),
                       vmax=0.5, cmap="inferno")
        ax.set_title(f"kappa = {kappa}, {regime}", fontsize=9)
        if col == 0:
            ax.set_ylabel("cavity")
        if row == 1:
            ax.set_xlabel("time (1/xi)")
fig.colorbar(im, ax=axes, shrink=0.8, label="site occupation (both channels)")
fig.savefig(os.path.join(OUT, "staggered_localization.png"), dpi=150)
plt.close(fig)

# headline numbers for each regime
p_end = max(cc.optimal_time(staggered(-0.2, 200.0), ch)[1]
            for ch in ("atom", "photon"))
print(f"kappa = -0.2, strong coupling: end-site maximum {p_end:.4f} "
      f"(uniform chain reaches ~0.14 at this length)")

t_ph, p_ph = cc.optimal_time(staggered(-0.8, 1 / 200.0), "photon")
print(f"kappa = -0.8, strong hopping: photon end-site maximum {p_ph:.5f} "
      f"at t = {t_ph:.0f}")

trace = cc.populations_staggered(staggered(-0.8, 200.0), times)
site1 = trace.p_atom[:, 0] + trace.p_photon[:, 0]
print(f"kappa = -0.8, strong coupling: first cavity holds "
      f"{site1.mean():.3f} of the excitation on average (localized)")

# the odd-site zero mode is what pins the excitation
spec = cc.staggered_spectrum(N, -0.8)
zero = spec.modes[0]
print(f"zero-mode weight on cavity 1: {zero.site_amps[0] ** 2:.3f}; "
      f"even sites carry none: {np.abs(zero.site_amps[1::2]).max():.1e}")
