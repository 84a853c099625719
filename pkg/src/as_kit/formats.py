"""JSON codecs for rings, elements and bundles.

Ring:    {"p", "top", "basis": [{"name", "degree"}], "mult": [[i, j, [coeff...]]],
          "fundamental": name, optional "pontryagin": [element...]}
Element: {basis name: coefficient}, a coefficient being [num, den] (rational)
         or {"p", "coords": [[num, den], ...]} (cyclotomic).
Bundle:  {"p", "ring": builtin name | path to a ring file | inline ring,
          "eigen": [{"rank": d, "chern": [element...]}...]}
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .asclass import EigenbundleData, GBundleChernData
from .cohring import CohomologyRing, RingError, builtin_ring, ring_from_table

__all__ = ["FormatError", "load_ring", "load_bundle", "bundles_from_json", "dumps", "rational_pair"]


class FormatError(ValueError):
    pass


def rational_pair(x) -> list:
    x = Fraction(x)
    return [x.numerator, x.denominator]


def load_ring(ref, p: int, base_dir: Path | None = None) -> CohomologyRing:
    if isinstance(ref, dict):
        ring = ring_from_table(ref)
    elif isinstance(ref, str):
        try:
            return builtin_ring(ref, p)
        except RingError:
            path = Path(ref)
            if base_dir is not None and not path.is_absolute():
                path = base_dir / path
            if not path.exists():
                raise FormatError(f"unknown ring {ref!r} (not a builtin name or a file)") from None
            ring = ring_from_table(json.loads(path.read_text()))
    else:
        raise FormatError(f"ring must be a name, a path or an object, got {type(ref).__name__}")
    if ring.p != p:
        raise FormatError(f"ring is over p={ring.p} but the bundle has p={p}")
    return ring


def load_bundle(obj, base_dir: Path | None = None, ring_cache: dict | None = None) -> GBundleChernData:
    if not isinstance(obj, dict):
        raise FormatError("bundle must be a JSON object")
    try:
        p = obj["p"]
        ring_ref = obj["ring"]
        eigen = obj["eigen"]
    except KeyError as exc:
        raise FormatError(f"bundle is missing the field {exc}") from None
    key = json.dumps([p, ring_ref], sort_keys=True)
    if ring_cache is not None and key in ring_cache:
        ring = ring_cache[key]
    else:
        ring = load_ring(ring_ref, p, base_dir)
        if ring_cache is not None:
            ring_cache[key] = ring
    out = []
    for i, e in enumerate(eigen, start=1):
        try:
            rank = e["rank"]
            chern = tuple(ring.element(c) for c in e.get("chern", []))
        except (KeyError, TypeError) as exc:
            raise FormatError(f"eigenbundle {i}: malformed ({exc})") from None
        out.append(EigenbundleData(rank, chern, ring))
    return GBundleChernData(p, ring, tuple(out))


def bundles_from_json(data, base_dir: Path | None = None) -> list:
    """Accept one bundle, a list of bundles or {"bundles": [...]}."""
    if isinstance(data, dict) and "bundles" in data:
        data = data["bundles"]
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise FormatError("expected a bundle object or a list of bundles")
    cache = {}
    return [load_bundle(obj, base_dir, cache) for obj in data]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
