"""Benchmark mixture synthesis in all three modes.

Creates a small two-scenario asset tree (underwater and terrestrial,
chirps for vocalizations and white noise for noise), then builds:

  - the duration-paired random-SNR set (uniform on [-5, 10] dB),
  - a fixed-SNR sweep at -5 / 0 / 5 / 10 dB,
  - the all-combinations "large" set.

Every stored triple satisfies mixture = clean + noise sample-exactly,
and re-measuring the SNR from the float32 files reproduces the manifest
value. Rebuilding with the same seed is byte-identical.
"""

import hashlib
from pathlib import Path

import numpy as np

from biodeno import AudioClip, BenchmarkMode, build_benchmark, read_audio, scan_assets, write_audio

SR = 16000
OUT = Path(__file__).parent / "demo_output" / "03_bench"


def make_assets(root, spec={"underwater": (3, 4), "terrestrial": (4, 2)}):
    rng = np.random.default_rng(2)
    for scenario, (n_voc, n_noise) in spec.items():
        for role, count in (("voc", n_voc), ("noise", n_noise)):
            d = root / scenario / role
            d.mkdir(parents=True, exist_ok=True)
            for i in range(count):
                n = int(SR * (1.0 + 0.3 * i))
                if role == "voc":
                    t = np.arange(n) / SR
                    f0 = rng.uniform(300, 900)
                    x = 0.5 * np.sin(2 * np.pi * (f0 * t + 600 * t * t)) * np.hanning(n)
                else:
                    x = 0.1 * rng.standard_normal(n)
                write_audio(AudioClip(x, SR), d / f"{role}{i}.wav")
    return root


def measured_snr(manifest, rec):
    clean = read_audio(manifest.resolve(rec.clean_path)).samples.astype(np.float64)
    noise = read_audio(manifest.resolve(rec.noise_path)).samples.astype(np.float64)
    return 10 * np.log10(np.mean(clean**2) / np.mean(noise**2))


def main():
    assets = make_assets(OUT / "assets")
    manifest = scan_assets(assets)
    print(f"scanned {len(manifest)} assets across scenarios {manifest.scenarios()}")

    small = build_benchmark(manifest, OUT / "small", BenchmarkMode.random(seed=0), SR)
    print(f"\nrandom mode: {len(small)} mixtures (one per vocalization)")
    for rec in small.records[:3]:
        print(
            f"  {rec.mix_id}: target {rec.snr_db:+.2f} dB, "
            f"re-measured {measured_snr(small, rec):+.2f} dB"
        )

    for level in (-5, 0, 5, 10):
        fixed = build_benchmark(
            manifest, OUT / f"fixed{level:+d}", BenchmarkMode.fixed(level, seed=0), SR
        )
        worst = max(abs(measured_snr(fixed, r) - level) for r in fixed.records)
        print(f"fixed {level:+3d} dB: {len(fixed)} mixtures, worst SNR error {worst:.2e} dB")

    large = build_benchmark(manifest, OUT / "large", BenchmarkMode.all_combinations(seed=0), SR)
    n_voc = {s: len(manifest.subset(role="voc", scenario=s)) for s in manifest.scenarios()}
    n_noise = {s: len(manifest.subset(role="noise", scenario=s)) for s in manifest.scenarios()}
    expected = sum(n_voc[s] * n_noise[s] for s in manifest.scenarios())
    print(f"all combinations: {len(large)} mixtures (expected {expected})")

    rec = small.records[0]
    mix = read_audio(small.resolve(rec.mix_path))
    clean = read_audio(small.resolve(rec.clean_path))
    noise = read_audio(small.resolve(rec.noise_path))
    residue = np.max(np.abs((mix.samples - clean.samples) - noise.samples))
    print(f"\nexact decomposition check on {rec.mix_id}: max |mix - clean - noise| = {residue}")

    rebuilt = build_benchmark(manifest, OUT / "small_again", BenchmarkMode.random(seed=0), SR)
    d1 = hashlib.sha256((OUT / "small" / "mixtures.csv").read_bytes()).hexdigest()
    d2 = hashlib.sha256((OUT / "small_again" / "mixtures.csv").read_bytes()).hexdigest()
    print(f"rebuild with same seed is byte-identical: {d1 == d2}")
    assert len(rebuilt) == len(small)


if __name__ == "__main__":
    main()
