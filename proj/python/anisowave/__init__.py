"""Plane waves in anisotropic lossy/gain media.

Tensors are relative 3x3 complex arrays, wavevectors real 3-vectors and
times in seconds for the wave speed ``c`` (default 1).
"""

from pathlib import Path

from ._core import (
    ConfigError,
    NumericError,
    classify,
    decompose,
    evolve,
    example1_conditions,
    example1_medium,
    example2_medium,
    example2_special,
    example3_medium,
    modes,
    run_cli,
    wave_operator,
)

__all__ = [
    "ConfigError",
    "NumericError",
    "classify",
    "cli_path",
    "decompose",
    "evolve",
    "example1_conditions",
    "example1_medium",
    "example2_medium",
    "example2_special",
    "example3_medium",
    "modes",
    "run_cli",
    "wave_operator",
]


def cli_path():
    """Path of the bundled command-line tool, or None outside an installed wheel."""
    exe = Path(__file__).parent / "bin" / "anisowave"
    return exe if exe.exists() else None
