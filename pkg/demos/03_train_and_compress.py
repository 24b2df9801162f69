"""End-to-end miniature: train briefly on synthetic images, then compress,
decode deterministically and stochastically, and inspect the decode process.

Runs in a few minutes on CPU (400 steps of the CPU-sized preset on a small
corpus). Outputs land in demos/run03/.
"""

from dataclasses import replace
from pathlib import Path

import numpy as np

from cdcodec import DecodeSettings, compress, decompress, psnr
from cdcodec.data import generate_synthetic_corpus, load_image_tensor, save_image_tensor, tensor_to_image_array
from cdcodec.trainer import TRAIN_PRESETS, TrainState, train_loop

out = Path(__file__).parent / "run03"
out.mkdir(exist_ok=True)

# %% Data and a short training run -------------------------------------------
corpus = out / "corpus"
if not (corpus / "manifest.json").exists():
    generate_synthetic_corpus(corpus, n=40, size=64, seed=11)

cfg = replace(TRAIN_PRESETS["desk"], n_train_steps=400, lambda_warmup_steps=400,
              batch_size=4, checkpoint_every=400)
state = TrainState(cfg)
history = train_loop(state, corpus, run_dir=out / "train", progress_every=100)
print(f"loss: {np.mean([h['total'] for h in history[:20]]):.3f} (first 20) -> "
      f"{np.mean([h['total'] for h in history[-20:]]):.3f} (last 20)")
state.save(out / "model.pt")

# %% Compress ------------------------------------------------------------- --
model, sched = state.model, state.schedule
img_path = sorted(corpus.glob("*.png"))[0]
img = load_image_tensor(img_path)
stream = compress(model, sched, img)
(out / "image.cdc").write_bytes(stream.serialize())
print(f"\ncompressed {img_path.name}: {stream.total_bytes} bytes = {stream.bpp:.3f} bpp")

# %% Deterministic vs stochastic decoding ------------------------------------
orig = tensor_to_image_array(img)
det = decompress(model, sched, stream, DecodeSettings(n_test=17, gamma=0.0))
save_image_tensor(det, out / "decoded_gamma0.png")
print(f"gamma=0.0, 17 steps: PSNR {psnr(orig, tensor_to_image_array(det)):.2f} dB")

sto = decompress(model, sched, stream, DecodeSettings(n_test=17, gamma=0.8, seed=1))
save_image_tensor(sto, out / "decoded_gamma08.png")
print(f"gamma=0.8, 17 steps: PSNR {psnr(orig, tensor_to_image_array(sto)):.2f} dB "
      "(stochastic texture synthesis)")

# %% Decode-process visualization ---------------------------------------------
# Snapshots of the intermediate state at five plan positions.
snaps = []
settings = DecodeSettings(n_test=17, gamma=0.0, dump_steps=[0.0, 0.3, 0.6, 0.9, 1.0])
decompress(model, sched, stream, settings,
           dump_sink=lambda f, k, t: snaps.append((f, k, t)))
for f, k, t in snaps:
    save_image_tensor(t, out / f"decode_at_{int(f * 100):03d}pct.png")
print(f"\nwrote {len(snaps)} decode-process snapshots to {out}/")
