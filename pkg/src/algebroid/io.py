"""File formats: JSON wire forms for algebras, representations, algebroids,
and symbol fibers, plus the textual form of trig polynomials.

Rationals travel as strings "p" or "p/q" and round-trip exactly; floats are
rejected everywhere.  Parse errors carry a `where` path into the document.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .circle import ActionAlgebroid, Rank1Anchor, TrigPoly
from .errors import ParseError
from .exactlinalg import RationalMatrix
from .liealg import LieAlgebra, Representation
from .symbol import FiberData

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_TERM_RE = re.compile(r"^([+-]?(?:\d+(?:/\d+)?)?)(?:(\*?)(cos|sin)\((\d*)t\))?$")


def format_rational(x: Fraction) -> str:
    return str(x)


def parse_rational(s: str, where: str = "") -> Fraction:
    if not isinstance(s, str) or not _RATIONAL_RE.match(s.strip()):
        raise ParseError(f"expected a rational string like \"3\" or \"-1/2\", got {s!r}", where)
    s = s.strip()
    if "/" in s and s.split("/")[1] == "0":
        raise ParseError("zero denominator", where)
    return Fraction(s)


# -- trig polynomials --------------------------------------------------------

def trig_to_string(f: TrigPoly) -> str:
    terms = []
    if f.constant:
        terms.append(format_rational(f.constant))
    for k in range(1, f.deg + 1):
        c = f.cos_coeff(k)
        if c:
            terms.append(f"{format_rational(c)}*cos({k}t)")
        s = f.sin_coeff(k)
        if s:
            terms.append(f"{format_rational(s)}*sin({k}t)")
    return " + ".join(terms) if terms else "0"


def trig_from_string(s: str, where: str = "") -> TrigPoly:
    if not isinstance(s, str):
        raise ParseError("expected a trig polynomial string", where)
    text = s.replace(" ", "")
    if not text:
        raise ParseError("empty trig polynomial", where)
    out = TrigPoly.const(0)
    for raw in text.split("+"):
        if not raw:
            raise ParseError("empty term (stray '+')", where)
        m = _TERM_RE.match(raw)
        if not m:
            raise ParseError(f"bad term {raw!r}", where)
        coeff_s, star, kind, k_s = m.group(1), m.group(2), m.group(3), m.group(4)
        if kind is None:
            if not coeff_s or coeff_s in "+-":
                raise ParseError(f"bad term {raw!r}", where)
            out = out + TrigPoly.const(parse_rational(coeff_s, where))
            continue
        if coeff_s in ("", "+"):
            coeff = Fraction(1)
            if star:
                raise ParseError(f"bad term {raw!r}", where)
        elif coeff_s == "-":
            coeff = Fraction(-1)
            if star:
                raise ParseError(f"bad term {raw!r}", where)
        else:
            if not star:
                raise ParseError(f"missing '*' in term {raw!r}", where)
            coeff = parse_rational(coeff_s, where)
        k = int(k_s) if k_s else 1
        if k <= 0:
            raise ParseError(f"harmonic index must be positive in {raw!r}", where)
        term = TrigPoly.cos(k, coeff) if kind == "cos" else TrigPoly.sin(k, coeff)
        out = out + term
    return out


# -- Lie algebras ------------------------------------------------------------

def algebra_to_dict(g: LieAlgebra) -> dict:
    brackets = []
    for i, j, terms in g.brackets:
        brackets.append({
            "i": i,
            "j": j,
            "coeffs": [[k, format_rational(c)] for k, c in terms],
        })
    d = {"dim": g.dim, "brackets": brackets}
    if g.name:
        d["name"] = g.name
    return d


def algebra_from_dict(d: dict, where: str = "algebra") -> LieAlgebra:
    if not isinstance(d, dict):
        raise ParseError("expected an object", where)
    dim = d.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise ParseError("'dim' must be a nonnegative integer", f"{where}.dim")
    raw = d.get("brackets", [])
    if not isinstance(raw, list):
        raise ParseError("'brackets' must be a list", f"{where}.brackets")
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for idx, entry in enumerate(raw):
        loc = f"{where}.brackets[{idx}]"
        if not isinstance(entry, dict):
            raise ParseError("expected an object", loc)
        i, j = entry.get("i"), entry.get("j")
        if not isinstance(i, int) or not isinstance(j, int) or not 0 <= i < j < dim:
            raise ParseError("need integers 0 <= i < j < dim", loc)
        if (i, j) in table:
            raise ParseError(f"duplicate bracket pair ({i},{j})", loc)
        coeffs = entry.get("coeffs")
        if not isinstance(coeffs, list):
            raise ParseError("'coeffs' must be a list of [k, rational] pairs", loc)
        terms = {}
        for c_idx, pair in enumerate(coeffs):
            c_loc = f"{loc}.coeffs[{c_idx}]"
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError("expected a [k, rational] pair", c_loc)
            k, val = pair
            if not isinstance(k, int) or not 0 <= k < dim:
                raise ParseError("target index out of range", c_loc)
            if k in terms:
                raise ParseError(f"duplicate target index {k}", c_loc)
            terms[k] = parse_rational(val, c_loc)
        table[(i, j)] = terms
    name = d.get("name", "")
    if not isinstance(name, str):
        raise ParseError("'name' must be a string", f"{where}.name")
    return LieAlgebra.make(dim, table, name=name)


# -- representations ---------------------------------------------------------

def representation_to_dict(r: Representation) -> dict:
    return {
        "dim_E": r.dim_e,
        "action": [
            [[format_rational(m[i, j]) for j in range(r.dim_e)] for i in range(r.dim_e)]
            for m in r.action
        ],
    }


def representation_from_dict(d: dict, algebra: LieAlgebra, where: str = "representation") -> Representation:
    if not isinstance(d, dict):
        raise ParseError("expected an object", where)
    dim_e = d.get("dim_E")
    if not isinstance(dim_e, int) or isinstance(dim_e, bool) or dim_e < 0:
        raise ParseError("'dim_E' must be a nonnegative integer", f"{where}.dim_E")
    raw = d.get("action")
    if not isinstance(raw, list) or len(raw) != algebra.dim:
        raise ParseError(f"'action' must list {algebra.dim} matrices", f"{where}.action")
    mats = []
    for m_idx, rows in enumerate(raw):
        loc = f"{where}.action[{m_idx}]"
        mats.append(matrix_from_rows(rows, dim_e, dim_e, loc))
    return Representation(algebra=algebra, dim_e=dim_e, action=tuple(mats))


def matrix_from_rows(rows, n_rows: int, n_cols: int, where: str) -> RationalMatrix:
    if not isinstance(rows, list) or len(rows) != n_rows:
        raise ParseError(f"expected {n_rows} rows", where)
    entries = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n_cols:
            raise ParseError(f"expected {n_cols} entries", f"{where}[{i}]")
        entries.append([parse_rational(x, f"{where}[{i}][{j}]") for j, x in enumerate(row)])
    return RationalMatrix(n_rows, n_cols, entries)


# -- algebroids --------------------------------------------------------------

def algebroid_to_dict(a, n_range: tuple[int, int]) -> dict:
    if isinstance(a, Rank1Anchor):
        return {"kind": "rank1", "p": trig_to_string(a.p), "N_range": list(n_range)}
    if isinstance(a, ActionAlgebroid):
        return {
            "kind": "action",
            "g": algebra_to_dict(a.algebra),
            "phi": [trig_to_string(f) for f in a.phi],
            "N_range": list(n_range),
        }
    raise ValueError(f"cannot serialize algebroid of type {type(a).__name__}")


def algebroid_from_dict(d: dict, where: str = "algebroid"):
    """Returns (algebroid, (n_min, n_max))."""
    if not isinstance(d, dict):
        raise ParseError("expected an object", where)
    kind = d.get("kind")
    n_range = d.get("N_range")
    if (not isinstance(n_range, list) or len(n_range) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in n_range)
            or n_range[1] < n_range[0]):
        raise ParseError("'N_range' must be [n_min, n_max] with 0 <= n_min <= n_max",
                         f"{where}.N_range")
    if kind == "rank1":
        p = trig_from_string(d.get("p", ""), f"{where}.p")
        return Rank1Anchor(p=p), (n_range[0], n_range[1])
    if kind == "action":
        g = algebra_from_dict(d.get("g"), f"{where}.g")
        raw_phi = d.get("phi")
        if not isinstance(raw_phi, list) or len(raw_phi) != g.dim:
            raise ParseError(f"'phi' must list {g.dim} trig polynomials", f"{where}.phi")
        phi = tuple(trig_from_string(s, f"{where}.phi[{k}]") for k, s in enumerate(raw_phi))
        return ActionAlgebroid(algebra=g, phi=phi), (n_range[0], n_range[1])
    raise ParseError("'kind' must be \"rank1\" or \"action\"", f"{where}.kind")


# -- symbol fibers -----------------------------------------------------------

def fiber_to_dict(f: FiberData) -> dict:
    return {
        "dim_A": f.dim_a,
        "dim_M": f.dim_m,
        "dim_E": f.dim_e,
        "anchor": [[format_rational(f.anchor[i, j]) for j in range(f.dim_a)]
                   for i in range(f.dim_m)],
    }


def fiber_from_dict(d: dict, where: str = "fiber") -> FiberData:
    if not isinstance(d, dict):
        raise ParseError("expected an object", where)
    dims = {}
    for key in ("dim_A", "dim_M"):
        v = d.get(key)
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ParseError(f"'{key}' must be a nonnegative integer", f"{where}.{key}")
        dims[key] = v
    dim_e = d.get("dim_E", 1)
    if not isinstance(dim_e, int) or isinstance(dim_e, bool) or dim_e < 0:
        raise ParseError("'dim_E' must be a nonnegative integer", f"{where}.dim_E")
    anchor = matrix_from_rows(d.get("anchor"), dims["dim_M"], dims["dim_A"], f"{where}.anchor")
    return FiberData(dim_a=dims["dim_A"], dim_m=dims["dim_M"], anchor=anchor, dim_e=dim_e)


# -- files -------------------------------------------------------------------

def load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ParseError("file not found", path)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
                         path)


def dump_json(d: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(d, fh, indent=2, sort_keys=True)
        fh.write("\n")
