"""Built-in example algebras, representations, and algebroids.

Everything here is loaded from JSON data files shipped with the package,
so each entry exercises the same wire format as user files.
"""

from __future__ import annotations

import json
from importlib import resources

from .circle import ActionAlgebroid, Rank1Anchor
from .io import algebra_from_dict, algebroid_from_dict, representation_from_dict
from .liealg import LieAlgebra, Representation

#: Algebras with a nonzero underlying space; every one has Euler characteristic 0.
ALGEBRA_NAMES = ("r1", "r2", "r3", "r4", "h3", "aff1", "su2", "sl2", "diamond4")

REPRESENTATION_NAMES = ("aff1_rep2", "aff1_char")

ALGEBROID_NAMES = ("const1", "sin_t", "sin_2t", "r_action", "sl2_action")


def _read(kind: str, name: str) -> dict:
    ref = resources.files("algebroid").joinpath("data", kind, f"{name}.json")
    with ref.open("r", encoding="utf-8") as fh:
        return json.load(fh)


def entry(kind: str, name: str) -> dict:
    """Raw JSON dict of a catalog item; kind is the data subdirectory name."""
    return _read(kind, name)


def algebra(name: str) -> LieAlgebra:
    """Load a catalog algebra; `zero` is the zero algebra, also available."""
    return algebra_from_dict(_read("algebras", name), where=f"catalog:{name}")


def representation(name: str) -> Representation:
    d = _read("representations", name)
    g = algebra(d["algebra"])
    return representation_from_dict(d, g, where=f"catalog:{name}")


def algebroid(name: str) -> tuple[Rank1Anchor | ActionAlgebroid, tuple[int, int]]:
    return algebroid_from_dict(_read("algebroids", name), where=f"catalog:{name}")
