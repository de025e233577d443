"""Size bounds for the brute-force parts of the package.

Defaults can be overridden from a JSON file, either with
``load_limits(path)`` or through the ``FSBCAT_LIMITS`` environment variable.
"""

from __future__ import annotations

import json
import os

DEFAULTS = {
    "flats_B": 8,
    "mobius": 6,
    "os_B": 6,
    "os_A": 7,
    "characters": 7,
}

LIMITS = dict(DEFAULTS)


class ResourceLimitError(ValueError):
    """A requested size exceeds the configured bound."""


def load_limits(path: str | os.PathLike) -> dict:
    with open(path) as fh:
        data = json.load(fh)
    unknown = set(data) - set(DEFAULTS)
    if unknown:
        raise KeyError(f"unknown limit keys: {sorted(unknown)}")
    LIMITS.update({k: int(v) for k, v in data.items()})
    return dict(LIMITS)


def check(key: str, n: int) -> None:
    if n > LIMITS[key]:
        raise ResourceLimitError(f"{key}: n = {n} exceeds the configured bound {LIMITS[key]}")


if os.environ.get("FSBCAT_LIMITS"):
    load_limits(os.environ["FSBCAT_LIMITS"])
