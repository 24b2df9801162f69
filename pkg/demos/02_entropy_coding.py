"""Entropy-coding stack, bottom to top.

Walks the path a latent tensor takes into the bitstream: rounding, CDF
discretization into integer-support PMFs, 16-bit fixed-point tables, and the
range coder. Verifies losslessness and measures the gap to the information
content.
"""

import numpy as np
import torch

from cdcodec.entropy import (
    build_z_tables,
    discretize_gaussian,
    fixed_point_rows,
    quantize_test,
    quantize_train,
    support_range,
)
from cdcodec.rangecoder import ideal_bits, rc_decode, rc_encode

rng = np.random.default_rng(0)

# %% Quantization ------------------------------------------------------------
# Training replaces rounding with additive box noise (differentiable);
# test time rounds half away from zero.
v = torch.tensor([1.4, -1.4, 0.5, -0.5, 2.0])
print("values:        ", v.tolist())
print("quantize_test: ", quantize_test(v).tolist())
g = torch.Generator().manual_seed(0)
print("quantize_train:", np.round(quantize_train(v, generator=g).numpy(), 3).tolist())

# %% Discretization ----------------------------------------------------------
# The coder needs P(k) = CDF(k+0.5) - CDF(k-0.5) over an integer support;
# tail mass folds into the edge symbols, and fixed-point rows always end at
# exactly 2^16 with no zero-frequency slot.
pmf = discretize_gaussian([0.0], [1.0], -4, 4)[0]
print("\nstandard normal over [-4, 4]:")
for k, p in zip(range(-4, 5), pmf):
    print(f"  P({k:+d}) = {p:.6f}")
print(f"  sum = {pmf.sum():.12f}")

rows = fixed_point_rows(pmf[None, :])
freqs = np.diff(rows[0].astype(np.int64))
print(f"fixed-point frequencies (sum {freqs.sum()} = 2^16): {freqs.tolist()}")

# %% Range coding ------------------------------------------------------------
# Encode a synthetic latent under per-element Gaussian tables, as the codec
# does for the content latent.
mean = rng.normal(size=4096) * 2
scale = rng.uniform(0.1, 3.0, size=4096)
z = np.round(mean + rng.normal(size=4096) * scale).astype(np.int64)
lo, hi = support_range(z)
tables = build_z_tables(mean, scale, lo, hi)
ctx = np.arange(len(z))

payload = rc_encode(z, tables, ctx)
decoded = rc_decode(payload, tables, ctx)
assert np.array_equal(decoded, z), "round trip must be lossless"

ideal = ideal_bits(z, tables, ctx)
actual = len(payload.data) * 8
print(f"\ncoded {len(z)} symbols over support [{lo}, {hi}]")
print(f"  information content: {ideal:.1f} bits ({ideal / len(z):.3f} b/sym)")
print(f"  actual payload:      {actual} bits ({actual / len(z):.3f} b/sym)")
print(f"  overhead:            {actual - ideal:.1f} bits ({100 * (actual - ideal) / ideal:.3f}%)")

# %% Out-of-support symbols --------------------------------------------------
# Rare outliers beyond the table cap take an escape + raw-bit path and still
# round-trip exactly.
weird = np.array([0, 12_345, -99_999, 3])
t = build_z_tables([0.0] * 4, [1.0] * 4, -8, 8)
back = rc_decode(rc_encode(weird, t, np.arange(4)), t, np.arange(4))
print(f"\nescape path: {weird.tolist()} -> {back.tolist()}")
