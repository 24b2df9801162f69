"""Rate-distortion evaluation harness.

Reuses the model trained by 03_train_and_compress.py (runs it first if
needed), sweeps decode settings over a grid, and emits the RD table
(CSV + JSON) and the metric-vs-bpp SVG panels.
"""

import runpy
from pathlib import Path

from cdcodec.codec import compress_file
from cdcodec.metrics import collect_rd, plot_rd_table, summarize, write_rd_table
from cdcodec.trainer import TrainState

here = Path(__file__).parent
run03 = here / "run03"
if not (run03 / "model.pt").exists():
    print("training artifacts missing; running 03_train_and_compress.py first")
    runpy.run_path(str(here / "03_train_and_compress.py"))

state = TrainState.load(run03 / "model.pt")
model, sched = state.model, state.schedule
model.eval()

# %% Encode a small evaluation set --------------------------------------------
originals = run03 / "corpus"
bitstreams = run03 / "streams"
bitstreams.mkdir(exist_ok=True)
for img in sorted(originals.glob("*.png"))[:6]:
    target = bitstreams / (img.stem + ".cdc")
    if not target.exists():
        compress_file(model, sched, img, target)

# %% Sweep decode settings -----------------------------------------------------
# Step-count sweep at gamma=0 (distortion axis) and a gamma sweep at 17 steps
# (perception axis), mirroring the two ablation directions.
grid = [(1, 0.0), (2, 0.0), (4, 0.0), (8, 0.0), (17, 0.0),
        (17, 0.6), (17, 0.8), (17, 1.0)]
points = collect_rd(originals, bitstreams, model, sched, grid, seed=0)

for (n_test, gamma) in grid:
    cell = [p for p in points if p.n_test == n_test and p.gamma == gamma]
    mean = summarize(cell)
    print(f"steps={n_test:3d} gamma={gamma:.1f}: bpp={mean.bpp:.3f} "
          f"PSNR={mean.psnr_db:6.2f} SSIM={mean.ssim:.4f}")

csv_path, json_path = write_rd_table(points, run03 / "rd")
svg = plot_rd_table(points, run03 / "rd_curves.svg")
print(f"\nwrote {csv_path}, {json_path}, {svg}")
