"""Golden tables: stored printed rows, the parameters that generate them,
and the column/order normalization between our canonical output and the
printed layout.

``verify_all`` rebuilds every table and compares it row for row with the
stored file.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import gf
from .construct2d import toeplitz_hypercube
from .dotset import DotSet, is_costas, verify_costas
from .errors import ConfigurationError, FormatError
from .io import parse_dotset, parse_permutation, parse_table
from .reshape import RadixScheme, embed_incomplete, reshape_even, reshape_odd
from .welch import welch_cube, welch_perm, welch_rect

DATA_DIR = Path(__file__).with_name("data")

# generating parameters of the finite-field tables
T6 = dict(p=3, m=3, modulus=(1, 0, 2, 1), g=(0, 1, 0), c=1)
T7 = dict(p=5, m=2, modulus=(1, 1, 2), g=(2, 0), c=1)
T7_BASIS = ((3, 1), (0, 2))
T7_BASIS_INVERSE = ((2, 4), (0, 3))
T8 = dict(p=3, m=3, modulus=(1, 0, 2, 1), g=(2, 0, 0), c=1)
T8_NORMAL = (2, 0, 0)
T8_CONJUGATES = ((2, 0, 0), (2, 2, 2), (2, 1, 2))
T8_BASIS_INVERSE = ((2, 0, 0), (0, 1, 2), (1, 1, 1))

# printed column order, as indices into our canonical coordinates
T3_COLUMNS = (1, 0, 3, 2)
T4_RECT_COLUMNS = (1, 0, 2, 3)
T4_CUBE_COLUMNS = (1, 0, 2)
T5_RECT_COLUMNS = (2, 1, 0, 3, 4, 5)
T5_CUBE_COLUMNS = (2, 1, 0, 3, 4)


@dataclass(frozen=True)
class TableCheck:
    name: str
    passed: bool
    detail: str = ""


def data_dir(directory=None) -> Path:
    path = Path(directory) if directory is not None else DATA_DIR
    if not path.is_dir():
        raise ConfigurationError(f"fixture directory {path} does not exist")
    return path


def _read(directory: Path, name: str) -> str:
    f = directory / name
    if not f.is_file():
        raise ConfigurationError(f"fixture file {f} is missing")
    return f.read_text()


def load_dotset(name: str, directory=None) -> DotSet:
    d = data_dir(directory)
    return parse_dotset(_read(d, name), str(d / name))


def load_permutation(name: str, directory=None):
    d = data_dir(directory)
    return parse_permutation(_read(d, name), str(d / name))


def load_table(name: str, directory=None) -> list[tuple[int, ...]]:
    d = data_dir(directory)
    return parse_table(_read(d, name), str(d / name))


def columns(rows, order) -> list[tuple[int, ...]]:
    return [tuple(r[j] for j in order) for r in rows]


def reverse_field_block(rows, m: int) -> list[tuple[int, ...]]:
    """Reverse the trailing m coordinates of every row."""
    return [tuple(r[:-m]) + tuple(r[-m:][::-1]) for r in rows]


def shift_index(rows) -> list[tuple[int, ...]]:
    """Index coordinate 0..q-2 -> 1..q-1 as printed in the rectangle tables."""
    return [(r[0] + 1,) + tuple(r[1:]) for r in rows]


def field_ctx(params: dict) -> gf.FieldCtx:
    return gf.FieldCtx.make(params["p"], params["m"], params["modulus"])


def t7_basis() -> gf.BasisMatrix:
    return gf.BasisMatrix(5, T7_BASIS)


def t8_basis() -> gf.BasisMatrix:
    ctx = field_ctx(T8)
    return gf.find_normal_basis(ctx, T8_NORMAL)[1]


# ----------------------------------------------------------------------
# Rebuilders: each returns (expected rows in printed layout, stored rows)
# ----------------------------------------------------------------------

def _t3(dd):
    perm = load_permutation("table3_perm.tsv", dd)
    cube = reshape_even(perm, RadixScheme((5, 5)))
    return columns(cube.dots, T3_COLUMNS), load_dotset("table3_cube.tsv", dd).rows()


def _t4(dd, part):
    perm = load_permutation("table4_perm.tsv", dd)
    rep = reshape_odd(perm, 9, 1)
    if part == "rect":
        return columns(rep.intermediate.dots, T4_RECT_COLUMNS), load_dotset("table4_rect.tsv", dd).rows()
    return columns(rep.raw.dots, T4_CUBE_COLUMNS), load_dotset("table4_cube.tsv", dd).rows()


def _t5(dd, part):
    perm = load_permutation("table5_perm.tsv", dd)
    rep = reshape_odd(embed_incomplete(perm, 32), 4, 2)
    if part == "rect":
        return columns(rep.intermediate.dots, T5_RECT_COLUMNS), load_dotset("table5_rect.tsv", dd).rows()
    return columns(rep.raw.dots, T5_CUBE_COLUMNS), load_dotset("table5_cube.tsv", dd).rows()


def _welch_table(params, basis, file_prefix, dd, part):
    ctx = field_ctx(params)
    g, c = params["g"], params["c"]
    if part == "rect":
        got = shift_index(welch_rect(ctx, g, c, basis).dots)
    elif part == "cube":
        got = list(welch_cube(ctx, g, c, basis).dots)
    else:
        perm, _ = welch_perm(ctx, g, c, basis, digit_order="lsd")
        got = list(perm.as_dotset().dots)
    return got, load_dotset(f"{file_prefix}_{part}.tsv", dd).rows()


def _t8(dd, part):
    ctx = field_ctx(T8)
    g, c = T8["g"], T8["c"]
    if part == "rect":
        return shift_index(welch_rect(ctx, g, c).dots), load_dotset("table8_rect.tsv", dd).rows()
    basis = t8_basis()
    if part == "rect_basis":
        got = reverse_field_block(shift_index(welch_rect(ctx, g, c, basis).dots), ctx.m)
        return got, load_dotset("table8_rect_basis.tsv", dd).rows()
    # the printed cube lists the same dots in another row order
    got = sorted(reverse_field_block(welch_cube(ctx, g, c, basis).dots, ctx.m))
    return got, sorted(load_dotset("table8_cube.tsv", dd).rows())


def _compare(name: str, build: Callable, dd) -> TableCheck:
    try:
        got, stored = build(dd)
    except (FormatError, ValueError) as e:
        return TableCheck(name, False, f"error: {e}")
    got = [tuple(r) for r in got]
    stored = [tuple(r) for r in stored]
    if got == stored:
        return TableCheck(name, True, f"{len(stored)} rows match")
    if len(got) != len(stored):
        return TableCheck(name, False, f"row count {len(got)} != stored {len(stored)}")
    first = next(i for i, (a, b) in enumerate(zip(got, stored)) if a != b)
    return TableCheck(name, False, f"row {first + 1}: expected {got[first]}, stored {stored[first]}")


def _check_t1(dd) -> TableCheck:
    try:
        d = load_dotset("table1.tsv", dd)
    except FormatError as e:
        return TableCheck("table1", False, f"error: {e}")
    rep = verify_costas(d)
    ok = rep.is_costas and rep.n_dots == 9 and rep.n_distinct == 36
    return TableCheck("table1", ok, f"is_costas={rep.is_costas} distinct={rep.n_distinct}/{rep.n_pairs}")


def _t2(dd):
    return toeplitz_hypercube(4, 5).rows(one_based=True), load_dotset("table2.tsv", dd).rows(one_based=True)


def _check_t8_basis(dd) -> TableCheck:
    ctx = field_ctx(T8)
    conj = tuple(gf.conjugates(ctx, T8_NORMAL))
    basis = t8_basis()
    ok = conj == T8_CONJUGATES and basis.entries == T8_CONJUGATES and basis.inverse == T8_BASIS_INVERSE
    return TableCheck("table8_basis", ok, f"conjugates={conj} inverse={basis.inverse}")


def _check_t9(dd) -> TableCheck:
    try:
        cubes = load_table("table9_cubes.tsv", dd)
        squares = load_table("table9_squares.tsv", dd)
    except FormatError as e:
        return TableCheck("table9", False, f"error: {e}")
    ok = (len(cubes) == 12 and all(len(r) == 4 for r in cubes)
          and len(squares) == 12 and all(len(r) == 2 for r in squares))
    return TableCheck("table9", ok, "stochastic targets, stored only" if ok else "unexpected layout")


def verify_all(directory=None) -> list[TableCheck]:
    """Rebuild every table from its parameters and compare with the stored rows."""
    dd = data_dir(directory)
    t7b = t7_basis()
    checks = [
        _check_t1(dd),
        _compare("table2", _t2, dd),
        _compare("table3", _t3, dd),
        _compare("table4_rect", lambda d: _t4(d, "rect"), dd),
        _compare("table4_cube", lambda d: _t4(d, "cube"), dd),
        _compare("table5_rect", lambda d: _t5(d, "rect"), dd),
        _compare("table5_cube", lambda d: _t5(d, "cube"), dd),
    ]
    for part in ("rect", "cube", "perm"):
        checks.append(_compare(f"table6_{part}", lambda d, part=part: _welch_table(T6, None, "table6", d, part), dd))
    checks.append(TableCheck("table7_basis_inverse", t7b.inverse == T7_BASIS_INVERSE, f"inverse={t7b.inverse}"))
    for part in ("rect", "cube", "perm"):
        checks.append(_compare(f"table7_{part}", lambda d, part=part: _welch_table(T7, t7b, "table7", d, part), dd))
    checks.append(_check_t8_basis(dd))
    for part in ("rect", "rect_basis", "cube"):
        checks.append(_compare(f"table8_{part}", lambda d, part=part: _t8(d, part), dd))
    checks.append(_check_t9(dd))
    return checks


def costas_flags() -> dict[str, bool]:
    """Costas status of every stored dot-set table (informational)."""
    out = {}
    for f in sorted(data_dir().glob("table*.tsv")):
        text = f.read_text()
        if text.startswith("# dim="):
            out[f.stem] = is_costas(parse_dotset(text, str(f)))
    return out
