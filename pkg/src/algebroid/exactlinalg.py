"""Exact linear algebra over the rationals.

Matrices carry `fractions.Fraction` entries; nothing in this module (or in
the rest of the package) touches floating point.  Ranks are computed by
fraction-free (Bareiss) elimination on denominator-cleared integer rows.
The pivot at each step is the nonzero candidate of smallest bit size in
the current column, ties broken by lowest row index, which keeps results
deterministic and intermediate entries small.  Kernel bases come from a
reduced row echelon form over Fraction, so the two elimination routes
cross-check each other in the test suite.

`rank_modular` is an optional fast path: it reduces the cleared integer
matrix modulo a fixed list of large primes and takes the largest modular
rank.  The result is a lower bound that equals the exact rank unless every
prime is unlucky; the test suite certifies it against the exact path.

A cochain complex is a list of degree dimensions together with the
differentials d_p : C^p -> C^{p+1}.  Cohomology dimensions are

    betti[p] = kernel_dim(d_p) - rank(d_{p-1})

with zero maps implied at both ends.  Empty matrices (zero rows or zero
columns) are legal everywhere and have rank 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from .errors import ChainConditionError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_fraction(x) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to Fraction. Floats are rejected."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class RationalMatrix:
    """Dense matrix over Q.  Instances are treated as immutable once built."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        if entries is None:
            self._e = [[_ZERO] * cols for _ in range(rows)]
        else:
            if len(entries) != rows:
                raise ValueError("row count mismatch")
            e = []
            for row in entries:
                if len(row) != cols:
                    raise ValueError("column count mismatch")
                e.append([as_fraction(x) for x in row])
            self._e = e

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "RationalMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls(rows, cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        m = cls(n, n)
        for i in range(n):
            m._e[i][i] = _ONE
        return m

    def entry(self, i: int, j: int) -> Fraction:
        return self._e[i][j]

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._e[i][j]

    def to_rows(self) -> list[list[Fraction]]:
        return [row[:] for row in self._e]

    def row(self, i: int) -> list[Fraction]:
        return self._e[i][:]

    def column(self, j: int) -> list[Fraction]:
        return [row[j] for row in self._e]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self._e == other._e

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"

    def is_zero(self) -> bool:
        return all(not x for row in self._e for x in row)

    def transpose(self) -> "RationalMatrix":
        t = RationalMatrix(self.cols, self.rows)
        for i in range(self.rows):
            for j in range(self.cols):
                t._e[j][i] = self._e[i][j]
        return t

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._require_same_shape(other)
        out = RationalMatrix(self.rows, self.cols)
        out._e = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._e, other._e)]
        return out

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._require_same_shape(other)
        out = RationalMatrix(self.rows, self.cols)
        out._e = [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._e, other._e)]
        return out

    def __neg__(self) -> "RationalMatrix":
        out = RationalMatrix(self.rows, self.cols)
        out._e = [[-x for x in row] for row in self._e]
        return out

    def scaled(self, c) -> "RationalMatrix":
        c = as_fraction(c)
        out = RationalMatrix(self.rows, self.cols)
        out._e = [[c * x for x in row] for row in self._e]
        return out

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = RationalMatrix(self.rows, other.cols)
        oe = out._e
        for i in range(self.rows):
            srow = self._e[i]
            orow = oe[i]
            for k in range(self.cols):
                s = srow[k]
                if not s:
                    continue
                brow = other._e[k]
                for j in range(other.cols):
                    if brow[j]:
                        orow[j] += s * brow[j]
        return out

    def apply(self, vec: Sequence) -> list[Fraction]:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        v = [as_fraction(x) for x in vec]
        return [sum((a * b for a, b in zip(row, v) if a and b), _ZERO) for row in self._e]

    def kron(self, other: "RationalMatrix") -> "RationalMatrix":
        """Kronecker product; the left factor indexes the major blocks."""
        out = RationalMatrix(self.rows * other.rows, self.cols * other.cols)
        for ia in range(self.rows):
            for ja in range(self.cols):
                a = self._e[ia][ja]
                if not a:
                    continue
                for ib in range(other.rows):
                    orow = out._e[ia * other.rows + ib]
                    brow = other._e[ib]
                    base = ja * other.cols
                    for jb in range(other.cols):
                        if brow[jb]:
                            orow[base + jb] = a * brow[jb]
        return out

    def with_extra_column(self, vec: Sequence) -> "RationalMatrix":
        if len(vec) != self.rows:
            raise ValueError("column length mismatch")
        out = RationalMatrix(self.rows, self.cols + 1)
        for i in range(self.rows):
            out._e[i][: self.cols] = self._e[i]
            out._e[i][self.cols] = as_fraction(vec[i])
        return out

    def _require_same_shape(self, other: "RationalMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


def block_matrix(
    row_dims: Sequence[int],
    col_dims: Sequence[int],
    blocks: Mapping[tuple[int, int], RationalMatrix],
) -> RationalMatrix:
    """Assemble a matrix from blocks; absent blocks are zero."""
    row_off = [0]
    for d in row_dims:
        row_off.append(row_off[-1] + d)
    col_off = [0]
    for d in col_dims:
        col_off.append(col_off[-1] + d)
    out = RationalMatrix(row_off[-1], col_off[-1])
    for (bi, bj), m in blocks.items():
        if m.rows != row_dims[bi] or m.cols != col_dims[bj]:
            raise ValueError(f"block ({bi},{bj}) has shape {m.rows}x{m.cols}, "
                             f"expected {row_dims[bi]}x{col_dims[bj]}")
        r0, c0 = row_off[bi], col_off[bj]
        for i in range(m.rows):
            out._e[r0 + i][c0 : c0 + m.cols] = m._e[i]
    return out


def _integer_rows(m: RationalMatrix) -> list[list[int]]:
    # Row scaling by the positive lcm of denominators preserves rank and kernel.
    out = []
    for row in m._e:
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([x.numerator * (d // x.denominator) for x in row])
    return out


def rank(m: RationalMatrix) -> int:
    """Exact rank via fraction-free elimination.

    Pivot choice: smallest bit size among the nonzero entries of the current
    column at or below the current row, ties broken by lowest row index.
    """
    a = _integer_rows(m)
    nr, nc = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(nc):
        if r >= nr:
            break
        best = -1
        best_bits = 0
        for i in range(r, nr):
            v = a[i][c]
            if v:
                bits = v.bit_length() if v > 0 else (-v).bit_length()
                if best < 0 or bits < best_bits:
                    best, best_bits = i, bits
        if best < 0:
            continue
        if best != r:
            a[r], a[best] = a[best], a[r]
        piv = a[r][c]
        arow = a[r]
        # Every lower row is updated by the Bareiss rule; skipping rows with a
        # zero in the pivot column would break the exact-divisibility invariant.
        for i in range(r + 1, nr):
            irow = a[i]
            f = irow[c]
            if f:
                for j in range(c + 1, nc):
                    irow[j] = (piv * irow[j] - f * arow[j]) // prev
            else:
                for j in range(c + 1, nc):
                    if irow[j]:
                        irow[j] = piv * irow[j] // prev
            irow[c] = 0
        prev = piv
        r += 1
    return r


def kernel_dim(m: RationalMatrix) -> int:
    return m.cols - rank(m)


def cokernel_dim(m: RationalMatrix) -> int:
    return m.rows - rank(m)


def _rref(m: RationalMatrix) -> tuple[list[list[Fraction]], list[int]]:
    a = m.to_rows()
    nr, nc = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        p = next((i for i in range(r, nr) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = _ONE / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def kernel_basis(m: RationalMatrix) -> list[list[Fraction]]:
    """Basis of the null space, one vector per free column, in column order."""
    a, pivots = _rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [_ZERO] * m.cols
        v[free] = _ONE
        for row_idx, pc in enumerate(pivots):
            v[pc] = -a[row_idx][free]
        basis.append(v)
    return basis


def in_image(m: RationalMatrix, vec: Sequence) -> bool:
    """True iff `vec` lies in the column space of `m`."""
    return rank(m.with_extra_column(vec)) == rank(m)


def inverse(m: RationalMatrix) -> RationalMatrix:
    """Exact inverse of a square matrix; raises ValueError when singular."""
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    n = m.rows
    a = [row + ident_row for row, ident_row in
         zip(m.to_rows(), RationalMatrix.identity(n).to_rows())]
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            raise ValueError("matrix is singular")
        a[c], a[p] = a[p], a[c]
        inv = _ONE / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return RationalMatrix(n, n, [row[n:] for row in a])


# Fixed, well-known primes; a deterministic list keeps CLI output byte-identical.
MODULAR_PRIMES = (1000000007, 1000000009, 998244353, 754974721, 167772161)


def rank_modular(m: RationalMatrix, primes: Sequence[int] = MODULAR_PRIMES) -> int:
    """Largest rank of `m` modulo the given primes.

    Always a lower bound for the exact rank, and equal to it unless every
    prime divides some unlucky minor.  Primes dividing a denominator are
    skipped; if all are skipped the exact path is used.
    """
    best = None
    for p in primes:
        ok = True
        a = []
        for row in m._e:
            reduced = []
            for x in row:
                if x.denominator % p == 0:
                    ok = False
                    break
                reduced.append(x.numerator * pow(x.denominator, -1, p) % p)
            if not ok:
                break
            a.append(reduced)
        if not ok:
            continue
        r = _rank_mod_p(a, m.rows, m.cols, p)
        best = r if best is None else max(best, r)
    if best is None:
        return rank(m)
    return best


def _rank_mod_p(a: list[list[int]], nr: int, nc: int, p: int) -> int:
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(r + 1, nr):
            if a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
    return r


@dataclass(frozen=True)
class CochainComplex:
    """Finite complex 0 -> C^0 -> C^1 -> ... -> C^top -> 0.

    `degrees[p]` is dim C^p and `differentials[p]` is the matrix of
    d_p : C^p -> C^{p+1}; there are len(degrees) - 1 differentials.
    """

    degrees: tuple[int, ...]
    differentials: tuple[RationalMatrix, ...]

    def __post_init__(self):
        if not self.degrees:
            raise ValueError("a complex needs at least one degree")
        if any(d < 0 for d in self.degrees):
            raise ValueError("degree dimensions must be nonnegative")
        if len(self.differentials) != len(self.degrees) - 1:
            raise ValueError("expected one differential per consecutive degree pair")
        for p, d in enumerate(self.differentials):
            if d.cols != self.degrees[p] or d.rows != self.degrees[p + 1]:
                raise ValueError(
                    f"d_{p} has shape {d.rows}x{d.cols}, expected "
                    f"{self.degrees[p + 1]}x{self.degrees[p]}"
                )

    @property
    def top(self) -> int:
        return len(self.degrees) - 1

    def chain_defect(self) -> int | None:
        """Smallest p with d_{p+1} d_p != 0, or None when d^2 = 0."""
        for p in range(len(self.differentials) - 1):
            if not (self.differentials[p + 1] @ self.differentials[p]).is_zero():
                return p
        return None


@dataclass(frozen=True)
class CohomologyReport:
    degrees: tuple[int, ...]
    betti: tuple[int, ...]
    euler: int


def complex_cohomology(c: CochainComplex) -> CohomologyReport:
    """Betti numbers and Euler characteristic of a finite complex.

    Raises ChainConditionError when d^2 != 0.
    """
    defect = c.chain_defect()
    if defect is not None:
        raise ChainConditionError(defect)
    ranks = [rank(d) for d in c.differentials]
    top = c.top
    betti = []
    for p in range(top + 1):
        rank_out = ranks[p] if p < top else 0
        rank_in = ranks[p - 1] if p > 0 else 0
        betti.append(c.degrees[p] - rank_out - rank_in)
    euler = sum((-1) ** p * b for p, b in enumerate(betti))
    return CohomologyReport(degrees=tuple(c.degrees), betti=tuple(betti), euler=euler)
