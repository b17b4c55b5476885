"""Adapter black-box tests: invoked as a subprocess, judged by the file contract.

Contract tests run against a pass-through stub standing in for the
noisereduce package (see stub_deps/); efficacy tests require the real
library and skip when it is absent.
"""

import importlib.util
import os
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest
from scipy.io import wavfile

STUB_DIR = Path(__file__).parent / "stub_deps"
SR = 16000

HAVE_NOISEREDUCE = importlib.util.find_spec("noisereduce") is not None


def run_adapter(in_path, out_path, *extra, stub=False):
    env = dict(os.environ)
    if stub:
        env["PYTHONPATH"] = str(STUB_DIR) + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "biodeno_adapters.cli", str(in_path), str(out_path), *extra],
        capture_output=True,
        env=env,
        timeout=120,
    )


def write_wav(path, x, rate=SR):
    wavfile.write(path, rate, np.asarray(x, dtype=np.float32))


def chirp_mixture(seed, dur_s=2.0):
    rng = np.random.default_rng(seed)
    n = int(dur_s * SR)
    t = np.arange(n) / SR
    f0, f1 = rng.uniform(200, 800), rng.uniform(1500, 3500)
    clean = np.sin(2 * np.pi * (f0 * t + (f1 - f0) / (2 * dur_s) * t * t)) * np.hanning(n)
    noise = rng.standard_normal(n)
    gain = np.sqrt(np.mean(clean**2) / np.mean(noise**2))
    return clean.astype(np.float32), (clean + gain * noise).astype(np.float32)


class TestContract:
    def test_silent_input_silent_output(self, tmp_path):
        write_wav(tmp_path / "in.wav", np.zeros(SR))
        proc = run_adapter(tmp_path / "in.wav", tmp_path / "out.wav", stub=not HAVE_NOISEREDUCE)
        assert proc.returncode == 0, proc.stderr
        rate, out = wavfile.read(tmp_path / "out.wav")
        assert rate == SR and len(out) == SR
        assert np.max(np.abs(out)) < 1e-4

    def test_length_and_rate_preserved(self, tmp_path):
        _, mix = chirp_mixture(0, dur_s=1.3)
        write_wav(tmp_path / "in.wav", mix, rate=22050)
        proc = run_adapter(tmp_path / "in.wav", tmp_path / "out.wav", stub=not HAVE_NOISEREDUCE)
        assert proc.returncode == 0, proc.stderr
        rate, out = wavfile.read(tmp_path / "out.wav")
        assert rate == 22050
        assert len(out) == len(mix)
        assert out.dtype == np.float32

    def test_time_scale_roundtrip_keeps_length(self, tmp_path):
        _, mix = chirp_mixture(1)
        write_wav(tmp_path / "in.wav", mix)
        proc = run_adapter(
            tmp_path / "in.wav", tmp_path / "out.wav", "--time-scale", "3",
            stub=not HAVE_NOISEREDUCE,
        )
        assert proc.returncode == 0, proc.stderr
        _, out = wavfile.read(tmp_path / "out.wav")
        assert len(out) == len(mix)

    def test_stub_passthrough_is_exact(self, tmp_path):
        # pins what the stub path actually exercises: pure I/O
        _, mix = chirp_mixture(2)
        write_wav(tmp_path / "in.wav", mix)
        proc = run_adapter(tmp_path / "in.wav", tmp_path / "out.wav", stub=True)
        assert proc.returncode == 0, proc.stderr
        _, out = wavfile.read(tmp_path / "out.wav")
        assert np.array_equal(out, mix)

    def test_malformed_wav_no_partial_output(self, tmp_path):
        (tmp_path / "bad.wav").write_bytes(b"RIFF not really a wav")
        proc = run_adapter(tmp_path / "bad.wav", tmp_path / "out.wav", stub=True)
        assert proc.returncode != 0
        assert b"error:" in proc.stderr
        assert not (tmp_path / "out.wav").exists()
        assert not list(tmp_path.glob("*.wav.*"))  # no temp leftovers

    def test_missing_input(self, tmp_path):
        proc = run_adapter(tmp_path / "ghost.wav", tmp_path / "out.wav", stub=True)
        assert proc.returncode == 2
        assert b"ghost.wav" in proc.stderr

    def test_bad_method_rejected(self, tmp_path):
        write_wav(tmp_path / "in.wav", np.zeros(100))
        proc = run_adapter(tmp_path / "in.wav", tmp_path / "out.wav", "--method", "magic", stub=True)
        assert proc.returncode != 0

    def test_bad_time_scale_rejected(self, tmp_path):
        write_wav(tmp_path / "in.wav", np.zeros(100))
        proc = run_adapter(tmp_path / "in.wav", tmp_path / "out.wav", "--time-scale", "0.5", stub=True)
        assert proc.returncode != 0

    @pytest.mark.skipif(HAVE_NOISEREDUCE, reason="real noisereduce is installed")
    def test_missing_dependency_reported(self, tmp_path):
        write_wav(tmp_path / "in.wav", np.zeros(100))
        proc = run_adapter(tmp_path / "in.wav", tmp_path / "out.wav")  # no stub
        assert proc.returncode == 4
        assert b"noisereduce" in proc.stderr
        assert not (tmp_path / "out.wav").exists()


@pytest.mark.skipif(not HAVE_NOISEREDUCE, reason="noisereduce not installed in this environment")
class TestEfficacy:
    def test_noisereduce_improves_sisdri(self, tmp_path):
        # cross-component oracle: scored with the primary metrics module
        from biodeno import si_sdri

        improvements = []
        for seed in range(5):
            clean, mix = chirp_mixture(seed)
            write_wav(tmp_path / f"in{seed}.wav", mix)
            proc = run_adapter(tmp_path / f"in{seed}.wav", tmp_path / f"out{seed}.wav")
            assert proc.returncode == 0, proc.stderr
            _, out = wavfile.read(tmp_path / f"out{seed}.wav")
            improvements.append(si_sdri(out.astype(np.float64), mix, clean))
        assert float(np.median(improvements)) > 0.0
