"""Follow a warped target against its reference, frame by frame.

The online tracker consumes one 10 ms target frame at a time and reports the
reference position it believes the performance has reached.  Here we compare
its path against two yardsticks it never sees: the globally optimal offline
DTW path, and the true warp used to synthesize the target.
"""

from pathlib import Path

import numpy as np

from audiofollow import (FeatureConfig, OltwParams, SpectrumKind, SynthSpec,
                         Warp, alternating_plan, extract_features, generate_pair,
                         offline_dtw, track_features)
from audiofollow.evaluate import BarAnnotation, bar_errors, metrics_table, summarize

rng = np.random.default_rng(42)
warp = Warp.random(60.0, n_segments=6, rng=rng)
spec = SynthSpec(60.0, alternating_plan(60.0), warp, noise_snr_db=20.0, seed=11)
pair = generate_pair(spec)
print(f"reference {pair.reference.duration_s:.0f} s, "
      f"target {pair.target.duration_s:.1f} s (tempo varies {warp.ref_duration_s / warp.target_duration_s:.2f}x on average)")

config = FeatureConfig(kind=SpectrumKind.SPEC, sample_rate_hz=6000, n_mfcc=25, skip=0)
ref_feats = extract_features(pair.reference, config)
tgt_feats = extract_features(pair.target, config)

params = OltwParams(band_width_frames=1000)
online = track_features(ref_feats, tgt_feats, params)
oracle = offline_dtw(ref_feats, tgt_feats, params)

deviation = np.abs(online.ref_frames - oracle.ref_frames[:len(online)])
print(f"online vs offline-optimal: median {np.median(deviation) * 10:.0f} ms, "
      f"p95 {np.percentile(deviation, 95) * 10:.0f} ms, "
      f"within 200 ms on {(deviation <= 20).mean():.1%} of frames")

truth = pair.warp.map_to_ref(online.target_times_s)
print(f"online vs ground truth:    median "
      f"{np.median(np.abs(online.ref_times_s - truth)) * 1000:.0f} ms")

metrics = summarize(bar_errors(online, pair.annotations))
print()
print(metrics_table([("online tracker", metrics)]))

out = Path(__file__).parent / "out"
out.mkdir(parents=True, exist_ok=True)
online.to_csv(out / "alignment.csv")
print(f"alignment path written to {out / 'alignment.csv'}")
