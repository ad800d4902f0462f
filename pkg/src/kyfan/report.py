"""Byte-stable structured output: one key-sorted JSON object per line.

Floats are rounded to 12 significant digits, magnitudes below ``1e-12``
(roundoff residue) are written as ``0.0``, and ``-0.0`` is folded to ``0.0``
so repeated runs diff cleanly.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, is_dataclass

import numpy as np

from .linalg import Tolerance

SCHEMA_VERSION = 1
ZERO_SNAP = 1e-12


def _clean(x):
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if not math.isfinite(x):
            return repr(x)
        if abs(x) < ZERO_SNAP:
            return 0.0
        return float(f"{x:.12g}")
    if isinstance(x, np.ndarray):
        return [_clean(v) for v in x.tolist()]
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if is_dataclass(x):
        return _clean(asdict(x))
    return x


def tolerances(tol: Tolerance) -> dict:
    return {"abs": tol.abs, "rel": tol.rel, "eq": tol.eq}


def make_report(command: str, inputs: dict, tol: Tolerance, **fields) -> dict:
    """Assemble a report object; ``None``-valued fields are dropped."""
    obj = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "tolerances": tolerances(tol),
    }
    obj.update({k: v for k, v in fields.items() if v is not None})
    return _clean(obj)


def certificate_fields(cert) -> dict:
    return {
        "theorem_id": cert.theorem_id,
        "lhs": cert.lhs,
        "rhs": cert.rhs,
        "holds": cert.holds,
        "is_equality": cert.is_equality,
        "witnesses": dict(cert.witnesses, sense=cert.sense),
    }


def dumps(obj: dict) -> str:
    return json.dumps(_clean(obj), sort_keys=True, separators=(",", ":"))


def loads(line: str) -> dict:
    return json.loads(line)
