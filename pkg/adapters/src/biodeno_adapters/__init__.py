"""File-contract denoiser adapters.

Each adapter is one process per file: read a WAV, make exactly one call
into an off-the-shelf denoising library, write a WAV of the same length
and rate, exit 0. Anything else exits nonzero with a message on stderr,
and no partial output file is left behind.
"""

__version__ = "0.1.0"
