"""Reading and writing real arrays as text (CSV) or binary ``RFT1`` files.

Text layout::

    # shape: 2,3
    1,2,3
    4,5,6

The header is optional. Each line holds one row per index of the outermost
axis (a 1-D array has one value per line). Values are written with 17
significant digits so doubles survive a round trip.

Binary layout, all little-endian::

    b"RFT1" | uint32 rank | rank x uint64 extents | float64 values (row-major)
"""

import io
import math
import struct
import sys

import numpy as np

from .arrays import NonFiniteError

MAGIC = b"RFT1"


class ArrayFormatError(ValueError):
    """The file content does not follow either array layout."""


def _check_finite(arr):
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError("array file contains non-finite values")
    return arr


def parse_binary(data):
    if data[:4] != MAGIC:
        raise ArrayFormatError("missing RFT1 magic")
    if len(data) < 8:
        raise ArrayFormatError("truncated header")
    (rank,) = struct.unpack_from("<I", data, 4)
    if rank < 1:
        raise ArrayFormatError("rank must be >= 1")
    head = 8 + 8 * rank
    if len(data) < head:
        raise ArrayFormatError("truncated extents")
    shape = struct.unpack_from(f"<{rank}Q", data, 8)
    if any(n < 1 for n in shape):
        raise ArrayFormatError(f"invalid extents {shape}")
    count = math.prod(shape)
    if len(data) - head != 8 * count:
        raise ArrayFormatError(
            f"expected {count} values for shape {shape}, found {(len(data) - head) / 8:g}"
        )
    values = np.frombuffer(data, dtype="<f8", offset=head).astype(np.float64)
    return _check_finite(values.reshape(shape))


def format_binary(arr):
    arr = np.asarray(arr, dtype=np.float64)
    header = MAGIC + struct.pack(f"<I{arr.ndim}Q", arr.ndim, *arr.shape)
    return header + np.ascontiguousarray(arr, dtype="<f8").tobytes()


def _parse_shape(text):
    try:
        shape = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ArrayFormatError(f"bad shape header {text!r}") from None
    if not shape or any(n < 1 for n in shape):
        raise ArrayFormatError(f"bad shape header {text!r}")
    return shape


def parse_text(text):
    shape = None
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.lower().startswith("shape:"):
                if shape is not None or rows:
                    raise ArrayFormatError(f"line {lineno}: shape header must come first")
                shape = _parse_shape(body[len("shape:"):])
            continue
        try:
            rows.append([float(tok) for tok in line.split(",")])
        except ValueError:
            raise ArrayFormatError(f"line {lineno}: cannot parse {line!r}") from None
    if not rows:
        raise ArrayFormatError("no data")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ArrayFormatError("rows have differing lengths")
    (width,) = widths
    if shape is None:
        shape = (len(rows),) if width == 1 else (len(rows), width)
    elif len(rows) != shape[0] or width != math.prod(shape[1:]):
        raise ArrayFormatError(f"data layout {len(rows)}x{width} does not match shape {shape}")
    values = np.array(rows, dtype=np.float64).reshape(shape)
    return _check_finite(values)


def format_text(arr):
    arr = np.asarray(arr, dtype=np.float64)
    out = io.StringIO()
    out.write("# shape: " + ",".join(str(n) for n in arr.shape) + "\n")
    for row in arr.reshape(arr.shape[0], -1):
        out.write(",".join(f"{v:.17g}" for v in row) + "\n")
    return out.getvalue()


def load(path):
    """Read an array file; returns ``(array, fmt)`` with fmt ``"text"`` or
    ``"binary"``. ``"-"`` reads standard input.

    Raises:
        OSError: on I/O failure.
        ArrayFormatError: on malformed content.
        NonFiniteError: if any value is NaN or infinite.
    """
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    if data.startswith(MAGIC):
        return parse_binary(data), "binary"
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise ArrayFormatError("neither RFT1 binary nor UTF-8 text") from None
    return parse_text(text), "text"


def save(path, arr, fmt="text"):
    """Write ``arr`` to ``path`` (``"-"`` for standard output)."""
    if fmt == "binary":
        data = format_binary(arr)
    elif fmt == "text":
        data = format_text(arr).encode("utf-8")
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)
