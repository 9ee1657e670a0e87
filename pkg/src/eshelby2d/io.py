"""JSON tensor files and reports.

Floats are always written as ``%.16e`` (17 significant digits), so a
write/read cycle is bit-exact and output is byte-deterministic.
"""

import json
import math

import numpy as np

from .algebra import validate_minor_symmetry
from .decomp import Decomposition
from .elasticity import ElasticityTensor, to_elasticity

ESHELBY = "eshelby"
ELASTICITY = "elasticity"


class TensorFileError(ValueError):
    """Malformed tensor or report file."""


def _encode(obj, indent, level):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            raise ValueError(f"cannot serialize non-finite float {x}")
        return format(x, ".16e")
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, indent, level + 1)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if not seq:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in seq):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in seq) + "]"
        items = [pad + _encode(v, indent, level + 1) for v in seq]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent=2):
    """Deterministic JSON text with fixed float formatting."""
    return _encode(obj, indent, 0) + "\n"


def tensor_to_dict(M):
    sym = ELASTICITY if isinstance(M, ElasticityTensor) else ESHELBY
    return {"order": 4, "symmetry": sym, "components": [float(x) for x in M.flat]}


def tensor_from_dict(data, tol=1e-12):
    """Build the tensor described by a TensorFile object.

    Raises ``TensorFileError`` for structural problems and
    ``SymmetryViolation`` when the components break the declared symmetry.
    """
    if not isinstance(data, dict):
        raise TensorFileError("tensor file must hold a JSON object")
    if data.get("order") != 4:
        raise TensorFileError("'order' must be 4")
    sym = data.get("symmetry", ESHELBY)
    if sym not in (ESHELBY, ELASTICITY):
        raise TensorFileError(f"unknown symmetry {sym!r}")
    comps = data.get("components")
    if not isinstance(comps, list) or len(comps) != 16:
        raise TensorFileError("'components' must be a list of 16 numbers")
    try:
        values = [float(x) for x in comps]
    except (TypeError, ValueError) as exc:
        raise TensorFileError(f"non-numeric component: {exc}") from None
    if sym == ELASTICITY:
        return to_elasticity(values, tol)
    return validate_minor_symmetry(values, tol)


def write_tensor(path, M):
    with open(path, "w") as fh:
        fh.write(dumps(tensor_to_dict(M)))


def read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise TensorFileError(f"{path}: {exc}") from None


def read_tensor(path, tol=1e-12):
    return tensor_from_dict(read_json(path), tol)


def decomposition_to_dict(dec):
    return {
        "lambda": dec.lam,
        "mu": dec.mu,
        "v": dec.v,
        "d1": dec.d1.reshape(4).tolist(),
        "d2": dec.d2.reshape(4).tolist(),
        "d": dec.d.reshape(16).tolist(),
    }


def decomposition_from_dict(data):
    if isinstance(data, dict) and "decomposition" in data:
        data = data["decomposition"]
    try:
        return Decomposition(float(data["lambda"]), float(data["mu"]), float(data["v"]),
                             np.array(data["d1"], dtype=float).reshape(2, 2),
                             np.array(data["d2"], dtype=float).reshape(2, 2),
                             np.array(data["d"], dtype=float).reshape(2, 2, 2, 2))
    except (KeyError, TypeError, ValueError) as exc:
        raise TensorFileError(f"bad decomposition report: {exc}") from None
