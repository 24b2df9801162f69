"""Noise schedules and decode-time timestep plans.

Builds the two schedule families used by the codec, shows the cumulative
signal-retention curve alpha_bar, and demonstrates how a short decode plan
subsamples a long training schedule. Writes schedule_curves.svg next to this
script.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from cdcodec import alpha_bar_at, build_cosine_schedule, build_linear_schedule, plan_timesteps

out_dir = Path(__file__).parent

# %% Two schedule families ---------------------------------------------------
# The noise-prediction configuration trains a 20,000-step linear schedule;
# the clean-image-prediction configuration uses an 8,193-step cosine one.
linear = build_linear_schedule(20_000)
cosine = build_cosine_schedule(8_193)

print(f"linear:  n_train={linear.n_train}, beta in [{linear.beta.min():.2e}, {linear.beta.max():.2e}]")
print(f"cosine:  n_train={cosine.n_train}, beta in [{cosine.beta.min():.2e}, {cosine.beta.max():.2e}]")
print(f"terminal signal retention: linear {linear.alpha_bar[-1]:.3e}, cosine {cosine.alpha_bar[-1]:.3e}")

# %% Continuous lookup -------------------------------------------------------
# Decoding conditions the network on fractions of the *test* step count, so
# alpha_bar must be queryable between training grid points.
for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
    print(f"alpha_bar_at(cosine, {frac:.2f}) = {alpha_bar_at(cosine, frac):.5f}")

# %% Fast decode plans -------------------------------------------------------
# A 17-step plan covers the whole schedule with evenly spaced indices; the
# final index always equals n_train so decoding starts from full noise.
plan = plan_timesteps(cosine, 17)
print("\n17-step plan over 8193 training steps:")
print("  indices:  ", plan.indices.tolist())
print("  fractions:", np.round(plan.fractions, 3).tolist())

# %% Plot --------------------------------------------------------------------
fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.2))
ax1.plot(np.linspace(0, 1, linear.n_train + 1), linear.alpha_bar, label="linear, N=20000")
ax1.plot(np.linspace(0, 1, cosine.n_train + 1), cosine.alpha_bar, label="cosine, N=8193")
ax1.set_xlabel("n / N_train")
ax1.set_ylabel("alpha_bar")
ax1.legend()
ax1.grid(alpha=0.3)

ax2.plot(plan.fractions, [alpha_bar_at(cosine, i / cosine.n_train) for i in plan.indices], "o-")
ax2.set_xlabel("plan fraction k / n_test")
ax2.set_ylabel("alpha_bar at plan index")
ax2.set_title("17-step plan")
ax2.grid(alpha=0.3)
fig.tight_layout()
fig.savefig(out_dir / "schedule_curves.svg")
print(f"\nwrote {out_dir / 'schedule_curves.svg'}")
