"""Pointwise symbol complexes and their exactness.

At a point, a covector alpha on the base pulls back through the anchor to
beta on the fiber, and the symbol complex in degree r is wedging by beta,
tensored with the identity on the coefficient fiber.  Since beta ^ beta = 0
the chain condition is automatic; the complex is exact in every degree
exactly when beta != 0, which for a surjective anchor happens for every
nonzero alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ChainConditionError
from .exactlinalg import CochainComplex, RationalMatrix, as_fraction, rank
from .exterior import alternating_binomial_sum, wedge_matrix

_ZERO = Fraction(0)


@dataclass(frozen=True)
class FiberData:
    """One fiber of an anchored bundle: anchor is a dim_m x dim_a matrix."""

    dim_a: int
    dim_m: int
    anchor: RationalMatrix
    dim_e: int = 1

    def __post_init__(self):
        if min(self.dim_a, self.dim_m, self.dim_e) < 0:
            raise ValueError("dimensions must be nonnegative")
        if self.anchor.rows != self.dim_m or self.anchor.cols != self.dim_a:
            raise ValueError("anchor must be dim_m x dim_a")


def pullback_covector(f: FiberData, alpha) -> list[Fraction]:
    """beta = alpha composed with the anchor, as a fiber covector."""
    if len(alpha) != f.dim_m:
        raise ValueError("alpha must have one entry per base dimension")
    alpha = [as_fraction(x) for x in alpha]
    return [
        sum((alpha[m] * f.anchor[m, i] for m in range(f.dim_m)), _ZERO)
        for i in range(f.dim_a)
    ]


def symbol_complex(f: FiberData, alpha) -> CochainComplex:
    """Wedge-by-beta complex on E (x) Lambda^* of the fiber."""
    beta = pullback_covector(f, alpha)
    n = f.dim_a
    id_e = RationalMatrix.identity(f.dim_e)
    degrees = tuple(f.dim_e * comb(n, r) for r in range(n + 1))
    diffs = []
    for r in range(n):
        w = RationalMatrix(comb(n, r + 1), comb(n, r))
        for i, b in enumerate(beta):
            if b:
                w = w + wedge_matrix(n, r, i).scaled(b)
        diffs.append(id_e.kron(w))
    return CochainComplex(degrees=degrees, differentials=tuple(diffs))


@dataclass(frozen=True)
class ExactnessReport:
    per_degree: tuple[bool, ...]
    exact: bool


def exactness_check(c: CochainComplex) -> ExactnessReport:
    """Exactness degree by degree: rank(d_r) + rank(d_{r-1}) = dim C^r.

    Ends are read in the reduced sense (zero maps in and out), so degree 0
    asks for an injective d_0 and the top degree for a surjective d_{top-1}.
    """
    defect = c.chain_defect()
    if defect is not None:
        raise ChainConditionError(defect)
    ranks = [rank(d) for d in c.differentials]
    top = c.top
    per_degree = []
    for r in range(top + 1):
        rank_out = ranks[r] if r < top else 0
        rank_in = ranks[r - 1] if r > 0 else 0
        per_degree.append(rank_out + rank_in == c.degrees[r])
    return ExactnessReport(per_degree=tuple(per_degree), exact=all(per_degree))


def euler_form_factor(rank_l: int, rank_e: int) -> int:
    """Fiberwise integrand factor: the alternating binomial sum of the
    kernel rank times the coefficient rank (rank_e when rank_l = 0, else 0)."""
    if rank_l < 0 or rank_e < 0:
        raise ValueError("ranks must be nonnegative")
    return alternating_binomial_sum(rank_l) * rank_e
