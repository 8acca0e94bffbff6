"""Render a small synthetic dataset and look at what it contains.

Each pair is one underlying "performance" rendered twice: a reference
recording, and a target recording played through a known tempo warp with its
own noise, pitch jitter, and improvised accompaniment.  Everything needed to
score a tracker is written next to the audio: bar annotations, music/speech
segment labels, and an oracle classifier probability stream.
"""

from pathlib import Path

import numpy as np

from audiofollow import SynthSpec, Warp, alternating_plan, load_dataset, write_dataset

OUT = Path(__file__).parent / "out" / "dataset"

specs = []
for i in range(3):
    rng = np.random.default_rng(100 + i)
    warp = Warp.random(ref_duration_s=30.0, n_segments=5, rng=rng)
    specs.append(SynthSpec(duration_s=30.0,
                           plan=alternating_plan(30.0, music_len_s=4.0, speech_len_s=4.0),
                           warp=warp, noise_snr_db=20.0, seed=100 + i))

names = write_dataset(OUT, specs)
print(f"wrote {names} under {OUT}")

pairs = load_dataset(OUT)
for pair in pairs:
    print(f"\n{pair.name}:")
    print(f"  reference {pair.reference.duration_s:5.1f} s, "
          f"target {pair.target.duration_s:5.1f} s")
    print(f"  {len(pair.annotations)} bar annotations, first three:")
    for ann in pair.annotations[:3]:
        print(f"    bar {ann.bar_id}: reference {ann.ref_time_s:.2f} s "
              f"<-> target {ann.target_time_s:.2f} s")
    kinds = ", ".join(f"{s.kind.value} [{s.start_s:.1f}, {s.end_s:.1f})"
                      for s in pair.labels[:4])
    print(f"  segment labels (target timeline): {kinds}, ...")
