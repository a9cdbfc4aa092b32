"""JSON interchange for frame systems, vectors, and matrices.

The on-disk schema (version "1") stores complex data as parallel
``entries_re`` / ``entries_im`` arrays in row-major order:

    {
      "schema_version": "1",
      "dim": 2,
      "field": "complex",
      "systems": {
        "L": {"blocks": [{"rows": 1, "entries_re": [1, 0], "entries_im": [0, 0]}]}
      },
      "vectors": {
        "e1": [{"entries_re": [1, 0], "entries_im": [0, 0]}]
      }
    }

Serialization is deterministic: insertion-ordered keys and floats printed
with 17 significant digits, which round-trips IEEE doubles exactly.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import FrameToolError, SchemaError
from .gframes import GFrameSystem

SCHEMA_VERSION = "1"


# ---------------------------------------------------------------------------
# Deterministic JSON writing


def _format_float(x: float) -> str:
    if not np.isfinite(x):
        raise ValueError("cannot serialize non-finite float")
    return format(float(x), ".17g")


def _write(value, out, indent: int) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, item) in enumerate(value.items()):
            out.append(f"{pad}  {json.dumps(str(key))}: ")
            _write(item, out, indent + 1)
            out.append(",\n" if i < len(value) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            _write(item, out, indent)
            if i < len(value) - 1:
                out.append(", ")
        out.append("]")
    elif isinstance(value, bool):
        out.append("true" if value else "false")
    elif isinstance(value, (int, np.integer)):
        out.append(str(int(value)))
    elif isinstance(value, (float, np.floating)):
        out.append(_format_float(value))
    elif isinstance(value, str):
        out.append(json.dumps(value))
    elif value is None:
        out.append("null")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps_json(value) -> str:
    """Deterministic JSON text: stable key order, 17-significant-digit floats."""
    out: list = []
    _write(value, out, 0)
    return "".join(out)


# ---------------------------------------------------------------------------
# Loading with field-path diagnostics


def _fail(path: str, message: str):
    raise SchemaError(f"{path}: {message}")


def _loads(text: str, path: str):
    """json.loads with duplicate-key detection (names must stay unique)."""

    def hook(pairs):
        result = {}
        for key, value in pairs:
            if key in result:
                raise SchemaError(f"{path}: duplicate key {key!r}")
            result[key] = value
        return result

    try:
        return json.loads(text, object_pairs_hook=hook)
    except json.JSONDecodeError as exc:
        raise SchemaError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc


def _expect_object(value, path: str) -> dict:
    if not isinstance(value, dict):
        _fail(path, f"expected an object, got {type(value).__name__}")
    return value


def _expect_number_list(value, path: str, length: int) -> np.ndarray:
    if not isinstance(value, list):
        _fail(path, f"expected an array, got {type(value).__name__}")
    if len(value) != length:
        _fail(path, f"expected {length} values, got {len(value)}")
    for i, x in enumerate(value):
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            _fail(f"{path}[{i}]", "expected a number")
    arr = np.asarray(value, dtype=np.float64)
    if not np.isfinite(arr).all():
        _fail(path, "entries must be finite")
    return arr


def _parse_complex_entries(obj: dict, path: str, rows: int, cols: int) -> np.ndarray:
    re = _expect_number_list(obj.get("entries_re"), f"{path}.entries_re", rows * cols)
    im = _expect_number_list(obj.get("entries_im"), f"{path}.entries_im", rows * cols)
    return (re + 1j * im).reshape(rows, cols)


def _parse_block(obj, path: str, dim: int) -> np.ndarray:
    block = _expect_object(obj, path)
    rows = block.get("rows")
    if isinstance(rows, bool) or not isinstance(rows, int) or rows < 1:
        _fail(f"{path}.rows", "expected a positive integer")
    return _parse_complex_entries(block, path, rows, dim)


def _parse_vector(obj, path: str, dim: int) -> np.ndarray:
    vec = _expect_object(obj, path)
    return _parse_complex_entries(vec, path, 1, dim).ravel()


@dataclass
class FrameFile:
    """Parsed contents of one interchange file."""

    dim: int
    systems: dict = field(default_factory=dict)
    vectors: dict = field(default_factory=dict)


def parse_frame_doc(doc, path: str = "$") -> FrameFile:
    """Validate and convert a decoded JSON document."""
    root = _expect_object(doc, path)
    if root.get("schema_version") != SCHEMA_VERSION:
        _fail(f"{path}.schema_version", f"expected \"{SCHEMA_VERSION}\"")
    if root.get("field") != "complex":
        _fail(f"{path}.field", "expected \"complex\"")
    dim = root.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        _fail(f"{path}.dim", "expected a positive integer")

    systems: dict = {}
    for name, sys_obj in _expect_object(root.get("systems"), f"{path}.systems").items():
        sys_path = f"{path}.systems.{name}"
        entry = _expect_object(sys_obj, sys_path)
        blocks_obj = entry.get("blocks")
        if not isinstance(blocks_obj, list) or not blocks_obj:
            _fail(f"{sys_path}.blocks", "expected a nonempty array of blocks")
        blocks = tuple(
            _parse_block(b, f"{sys_path}.blocks[{j}]", dim)
            for j, b in enumerate(blocks_obj)
        )
        try:
            systems[name] = GFrameSystem(dim, blocks)
        except FrameToolError as exc:
            _fail(sys_path, str(exc))

    vectors: dict = {}
    if "vectors" in root:
        for name, vec_list in _expect_object(root["vectors"], f"{path}.vectors").items():
            vec_path = f"{path}.vectors.{name}"
            if not isinstance(vec_list, list) or not vec_list:
                _fail(vec_path, "expected a nonempty array of vectors")
            vectors[name] = [
                _parse_vector(v, f"{vec_path}[{i}]", dim) for i, v in enumerate(vec_list)
            ]
    return FrameFile(dim=dim, systems=systems, vectors=vectors)


def load_frame_file(path) -> FrameFile:
    """Read and validate one interchange file."""
    try:
        text = open(path, "r", encoding="utf-8").read()
    except OSError as exc:
        raise SchemaError(f"{path}: cannot read file: {exc}") from exc
    return parse_frame_doc(_loads(text, str(path)), path=str(path))


# ---------------------------------------------------------------------------
# Writing


def _block_doc(block: np.ndarray) -> dict:
    return {
        "rows": int(block.shape[0]),
        "entries_re": [float(x) for x in block.real.ravel()],
        "entries_im": [float(x) for x in block.imag.ravel()],
    }


def _vector_doc(vec: np.ndarray) -> dict:
    return {
        "entries_re": [float(x) for x in vec.real],
        "entries_im": [float(x) for x in vec.imag],
    }


def frame_file_doc(data: FrameFile) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "dim": int(data.dim),
        "field": "complex",
        "systems": {
            name: {"blocks": [_block_doc(b) for b in sys.blocks]}
            for name, sys in data.systems.items()
        },
    }
    if data.vectors:
        doc["vectors"] = {
            name: [_vector_doc(v) for v in vecs] for name, vecs in data.vectors.items()
        }
    return doc


def save_frame_file(path, data: FrameFile) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps_json(frame_file_doc(data)))
        handle.write("\n")


def load_matrix(path) -> np.ndarray:
    """Read one standalone matrix: {"rows": r, "entries_re": [...], "entries_im": [...]}."""
    try:
        text = open(path, "r", encoding="utf-8").read()
    except OSError as exc:
        raise SchemaError(f"{path}: cannot read file: {exc}") from exc
    obj = _expect_object(_loads(text, str(path)), str(path))
    rows = obj.get("rows")
    if isinstance(rows, bool) or not isinstance(rows, int) or rows < 1:
        _fail(f"{path}.rows", "expected a positive integer")
    re = obj.get("entries_re")
    if not isinstance(re, list) or len(re) % rows != 0 or not re:
        _fail(f"{path}.entries_re", f"expected a nonempty array divisible by rows={rows}")
    cols = len(re) // rows
    return _parse_complex_entries(obj, str(path), rows, cols)


def save_matrix(path, matrix) -> None:
    m = np.asarray(matrix, dtype=np.complex128)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps_json(_block_doc(m)))
        handle.write("\n")


def sha256_of_file(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        digest.update(handle.read())
    return digest.hexdigest()
