"""Key-value config file handling.

A config file is plain text, one ``key = value`` pair per line, with
``#`` comments.  Recognized keys: abs_eps, rank_cutoff, seed.  The path
is taken from the FRCALC_CONFIG environment variable when set, else
``frcalc.toml`` in the working directory when present.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .linalg import DEFAULT_TOL, Tolerance

_KEYS = {"abs_eps": float, "rank_cutoff": float, "seed": int}


@dataclass(frozen=True)
class Settings:
    tol: Tolerance
    seed: int


DEFAULT_SETTINGS = Settings(DEFAULT_TOL, 7)


def parse_config(text: str) -> Settings:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key = value")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip().strip('"')
        if key not in _KEYS:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        values[key] = _KEYS[key](val)
    tol = Tolerance(values.get("abs_eps", DEFAULT_TOL.abs_eps),
                    values.get("rank_cutoff", DEFAULT_TOL.rank_cutoff))
    return Settings(tol, values.get("seed", DEFAULT_SETTINGS.seed))


def load_settings(path: str | None = None) -> Settings:
    """Resolve the config file: explicit path, then FRCALC_CONFIG, then
    ./frcalc.toml when it exists, then built-in defaults."""
    if path is None:
        path = os.environ.get("FRCALC_CONFIG")
    if path is None and os.path.exists("frcalc.toml"):
        path = "frcalc.toml"
    if path is None:
        return DEFAULT_SETTINGS
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
