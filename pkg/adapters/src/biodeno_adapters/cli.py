"""Denoise one WAV file with an off-the-shelf library.

Usage: biodeno-denoise-adapter IN OUT --method {noisereduce|speech-enhancer}
                               [--time-scale K]

Exit codes: 0 success, 2 input/output problem, 3 processing failure,
4 the requested library is not installed. The output file appears only
on success (written to a temp name, then renamed).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile
from fractions import Fraction

import numpy as np
from scipy.io import wavfile
from scipy.signal import resample_poly

EXIT_OK = 0
EXIT_IO = 2
EXIT_PROCESSING = 3
EXIT_MISSING_DEP = 4


class AdapterError(Exception):
    def __init__(self, code, message):
        self.code = code
        super().__init__(message)


def _read_mono(path) -> tuple[np.ndarray, int]:
    if not os.path.exists(path):
        raise AdapterError(EXIT_IO, f"no such input file: {path}")
    try:
        rate, data = wavfile.read(path)
    except ValueError as exc:
        raise AdapterError(EXIT_IO, f"cannot decode {path}: {exc}")
    if data.dtype == np.int16:
        x = data.astype(np.float32) / 32768.0
    elif data.dtype == np.int32:
        x = data.astype(np.float32) / 2147483648.0
    elif data.dtype == np.uint8:
        x = (data.astype(np.float32) - 128.0) / 128.0
    else:
        x = data.astype(np.float32)
    if x.ndim > 1:
        x = x.mean(axis=1).astype(np.float32)
    return x, int(rate)


def _time_scale(x: np.ndarray, rate: int, factor: float) -> np.ndarray:
    """Slower (factor > 1) or faster (1/factor) playback by polyphase resampling."""
    frac = Fraction(factor).limit_denominator(100)
    return resample_poly(x, frac.numerator, frac.denominator).astype(np.float32)


def _denoise_noisereduce(x: np.ndarray, rate: int) -> np.ndarray:
    try:
        import noisereduce
    except ImportError:
        raise AdapterError(
            EXIT_MISSING_DEP,
            "the 'noisereduce' package is not installed (pip install noisereduce)",
        )
    return np.asarray(
        noisereduce.reduce_noise(y=x, sr=rate, stationary=False), dtype=np.float32
    )


def _denoise_speech_enhancer(x: np.ndarray, rate: int) -> np.ndarray:
    try:
        import torch
        from denoiser import pretrained
        from denoiser.dsp import convert_audio
    except ImportError:
        raise AdapterError(
            EXIT_MISSING_DEP,
            "the 'denoiser' package (and torch) is not installed (pip install denoiser)",
        )
    model = pretrained.dns48()
    wav = convert_audio(
        torch.from_numpy(x)[None], rate, model.sample_rate, model.chin
    )
    with torch.no_grad():
        out = model(wav[None])[0, 0].numpy()
    if model.sample_rate != rate:
        frac = Fraction(rate, int(model.sample_rate))
        out = resample_poly(out, frac.numerator, frac.denominator)
    return np.asarray(out, dtype=np.float32)


METHODS = {
    "noisereduce": _denoise_noisereduce,
    "speech-enhancer": _denoise_speech_enhancer,
}


def _fit_length(x: np.ndarray, n: int) -> np.ndarray:
    if len(x) > n:
        return x[:n]
    if len(x) < n:
        return np.pad(x, (0, n - len(x)))
    return x


def run(in_path, out_path, method: str, time_scale_factor: float) -> int:
    x, rate = _read_mono(in_path)
    if len(x) == 0:
        raise AdapterError(EXIT_IO, f"{in_path} contains no samples")
    n_in = len(x)

    work = x
    if time_scale_factor != 1.0:
        work = _time_scale(work, rate, time_scale_factor)
    try:
        cleaned = METHODS[method](work, rate)
    except AdapterError:
        raise
    except Exception as exc:
        raise AdapterError(EXIT_PROCESSING, f"{method} failed: {exc}")
    if time_scale_factor != 1.0:
        cleaned = _time_scale(cleaned, rate, 1.0 / time_scale_factor)

    cleaned = _fit_length(np.nan_to_num(cleaned.astype(np.float32)), n_in)
    out_dir = os.path.dirname(os.path.abspath(out_path)) or "."
    fd, tmp = tempfile.mkstemp(suffix=".wav", dir=out_dir)
    os.close(fd)
    try:
        wavfile.write(tmp, rate, cleaned)
        os.replace(tmp, out_path)
    except OSError as exc:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise AdapterError(EXIT_IO, f"cannot write {out_path}: {exc}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="biodeno-denoise-adapter", description=__doc__)
    parser.add_argument("in_path")
    parser.add_argument("out_path")
    parser.add_argument("--method", choices=sorted(METHODS), default="noisereduce")
    parser.add_argument(
        "--time-scale", type=float, default=1.0,
        help="slow the audio by this factor before denoising, undo after",
    )
    args = parser.parse_args(argv)
    if not (args.time_scale >= 1.0 and math.isfinite(args.time_scale)):
        print("error: --time-scale must be a finite factor >= 1", file=sys.stderr)
        return EXIT_PROCESSING
    try:
        return run(args.in_path, args.out_path, args.method, args.time_scale)
    except AdapterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
