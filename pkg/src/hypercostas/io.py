"""Text formats: dot set TSV, permutation files, basis matrices, JSON reports.

Dot set TSV::

    # dim=4 shape=3,3,3,3 [base=1]
    # provenance={"generator": "toeplitz", ...}
    0	0	1	0
    ...

Coordinates are 0-based unless the header says ``base=1``.  Any other line
starting with ``#`` is a comment.
"""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any, Sequence

from .construct2d import Permutation
from .dotset import DotSet
from .errors import DuplicateDotError, FormatError

FORMAT_VERSION = 1

_SPLIT = re.compile(r"[\s,&]+")


def _ints(line: str, lineno: int, source: str) -> list[int]:
    try:
        return [int(tok) for tok in _SPLIT.split(line.strip()) if tok]
    except ValueError:
        raise FormatError(f"expected integers, got {line.strip()!r}", lineno, source) from None


def format_dotset(d: DotSet, one_based: bool = False, provenance: dict | None = None) -> str:
    head = f"# dim={d.dim} shape={','.join(map(str, d.shape))}"
    if one_based:
        head += " base=1"
    lines = [head]
    if provenance is not None:
        lines.append("# provenance=" + json.dumps(provenance, sort_keys=True))
    lines.extend("\t".join(map(str, row)) for row in d.rows(one_based))
    return "\n".join(lines) + "\n"


def parse_dotset_meta(text: str, source: str = "<string>") -> tuple[DotSet, dict | None]:
    """Parse dot set TSV; returns the dot set and the provenance (if any)."""
    shape = None
    dim = None
    base = 0
    provenance = None
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s:
            continue
        if s.startswith("#"):
            body = s[1:].strip()
            if body.startswith("provenance="):
                try:
                    provenance = json.loads(body[len("provenance="):])
                except json.JSONDecodeError as e:
                    raise FormatError(f"bad provenance JSON: {e.msg}", lineno, source) from None
            elif shape is None and body.startswith("dim="):
                fields = dict(tok.partition("=")[::2] for tok in body.split())
                try:
                    dim = int(fields["dim"])
                    shape = tuple(int(n) for n in fields["shape"].split(","))
                    base = int(fields.get("base", "0"))
                except (KeyError, ValueError):
                    raise FormatError(f"malformed header {s!r}", lineno, source) from None
                if len(shape) != dim:
                    raise FormatError(f"header dim={dim} but shape has {len(shape)} entries", lineno, source)
                if base not in (0, 1):
                    raise FormatError(f"base must be 0 or 1, got {base}", lineno, source)
            continue
        if shape is None:
            raise FormatError("missing '# dim=<m> shape=<N1,...>' header before the first dot", lineno, source)
        row = _ints(s, lineno, source)
        if len(row) != dim:
            raise FormatError(f"expected {dim} coordinates, got {len(row)}", lineno, source)
        row = [x - base for x in row]
        if any(not 0 <= x < n for x, n in zip(row, shape)):
            raise FormatError(f"dot {s!r} lies outside shape {shape}", lineno, source)
        rows.append((lineno, tuple(row)))
    if shape is None:
        raise FormatError("missing '# dim=<m> shape=<N1,...>' header", None, source)
    seen = {}
    for lineno, row in rows:
        if row in seen:
            raise FormatError(f"duplicate dot (first seen on line {seen[row]})", lineno, source)
        seen[row] = lineno
    try:
        return DotSet(shape, tuple(r for _, r in rows)), provenance
    except (ValueError, DuplicateDotError) as e:  # pragma: no cover - checked above
        raise FormatError(str(e), None, source) from None


def parse_dotset(text: str, source: str = "<string>") -> DotSet:
    return parse_dotset_meta(text, source)[0]


def read_dotset(path) -> DotSet:
    path = Path(path)
    return parse_dotset(path.read_text(), str(path))


def read_dotset_meta(path) -> tuple[DotSet, dict | None]:
    path = Path(path)
    return parse_dotset_meta(path.read_text(), str(path))


def write_dotset(path, d: DotSet, one_based: bool = False, provenance: dict | None = None) -> None:
    Path(path).write_text(format_dotset(d, one_based, provenance))


def parse_permutation(text: str, source: str = "<string>", one_based: bool = False) -> Permutation:
    """Either one comma-separated line of images, or a two-column
    (index, value) table in any row order."""
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)
             if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise FormatError("empty permutation file", None, source)
    off = 1 if one_based else 0
    if len(lines) == 1:
        lineno, s = lines[0]
        images = [x - off for x in _ints(s, lineno, source)]
    else:
        pairs = {}
        for lineno, s in lines:
            row = _ints(s, lineno, source)
            if len(row) != 2:
                raise FormatError(f"expected 'index value', got {len(row)} fields", lineno, source)
            i, v = row[0] - off, row[1] - off
            if i in pairs:
                raise FormatError(f"index {row[0]} appears twice", lineno, source)
            pairs[i] = v
        n = len(pairs)
        if sorted(pairs) != list(range(n)):
            raise FormatError(f"indices are not exactly {off}..{n - 1 + off}", None, source)
        images = [pairs[i] for i in range(n)]
    try:
        return Permutation(tuple(images))
    except ValueError as e:
        raise FormatError(str(e), None, source) from None


def read_permutation(path, one_based: bool = False) -> Permutation:
    path = Path(path)
    return parse_permutation(path.read_text(), str(path), one_based)


def format_permutation(g: Permutation, one_based: bool = False) -> str:
    return ",".join(map(str, g.one_based() if one_based else g.map)) + "\n"


def parse_matrix(text: str, source: str = "<string>") -> list[tuple[int, ...]]:
    """Square matrix, one row per line (commas or whitespace)."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        rows.append(tuple(_ints(s, lineno, source)))
    if not rows or any(len(r) != len(rows) for r in rows):
        raise FormatError("basis must be a square matrix", None, source)
    return rows


def parse_table(text: str, source: str = "<string>", width: int | None = None) -> list[tuple[int, ...]]:
    """Plain integer table (no header semantics); keeps duplicate rows."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        row = tuple(_ints(s, lineno, source))
        if width is not None and len(row) != width:
            raise FormatError(f"expected {width} columns, got {len(row)}", lineno, source)
        rows.append(row)
    return rows


def to_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=_default)


def _default(o):
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    if isinstance(o, tuple):
        return list(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def provenance(generator: str, **params) -> dict:
    return {"generator": generator, "params": params, "format": FORMAT_VERSION}


def rows_to_tsv(rows: Sequence[Sequence[int]]) -> str:
    return "".join("\t".join(map(str, r)) + "\n" for r in rows)
