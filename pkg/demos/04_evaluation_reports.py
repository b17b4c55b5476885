"""Scoring denoisers and comparing runs.

Evaluates two backends (identity passthrough and the spectral gate) on
the same synthetic benchmark across seeds 0-2, prints the per-subset
medians with bootstrap confidence intervals, and finishes with paired
per-excerpt SI-SDR differences between the two runs - the same protocol
used for ablation tables.
"""

from pathlib import Path

from biodeno import (
    BenchmarkMode,
    GateConfig,
    IdentityBackend,
    SpectralGateBackend,
    build_benchmark,
    compare_runs,
    run_evaluation,
    scan_assets,
)

import importlib.util
from types import ModuleType


def _load_sibling(name) -> ModuleType:
    spec = importlib.util.spec_from_file_location(name, Path(__file__).parent / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


SR = 16000
OUT = Path(__file__).parent / "demo_output" / "04_eval"


def show(tag, aggregates):
    print(f"\n{tag}")
    for subset in sorted(aggregates):
        for metric, stat in sorted(aggregates[subset].items()):
            print(
                f"  {subset:22s} {metric:10s} median {stat.median:6.2f} dB "
                f"[{stat.ci_low:6.2f}, {stat.ci_high:6.2f}]  mad {stat.mad:5.2f}  n={stat.n}"
            )


def main():
    bench_demo = _load_sibling("03_benchmark_synthesis")
    assets = bench_demo.make_assets(OUT / "assets")
    manifest = scan_assets(assets)
    bench = build_benchmark(manifest, OUT / "bench", BenchmarkMode.random(seed=0), SR)
    print(f"benchmark: {len(bench)} mixtures")

    identity = run_evaluation(bench, IdentityBackend(), [0, 1, 2], OUT / "report_identity")
    gate = run_evaluation(
        bench,
        SpectralGateBackend(gate_cfg=GateConfig(stationary=True)),
        [0, 1, 2],
        OUT / "report_gate",
    )
    show("identity backend (SI-SDRi is 0 by construction):", identity.aggregates)
    show("spectral gate:", gate.aggregates)

    diffs = compare_runs(gate, identity)
    print("\npaired SI-SDR differences, gate - identity:")
    for subset, stat in sorted(diffs.items()):
        print(
            f"  {subset:22s} median {stat.median:+6.2f} dB "
            f"[{stat.ci_low:+6.2f}, {stat.ci_high:+6.2f}]"
        )
    print(f"\nreports written under {OUT}")


if __name__ == "__main__":
    main()
