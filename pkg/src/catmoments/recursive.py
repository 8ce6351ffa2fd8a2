"""The recursive matrix of a weight pair and its structural identities.

Given diagonal weights sigma = (s_k)_{k>=0} and subdiagonal weights
tau = (t_k)_{k>=1}, the recursive matrix R is the unit lower triangular
matrix with r_{0,0} = 1 and

    r_{n+1,k} = r_{n,k-1} + s_k * r_{n,k} + t_{k+1} * r_{n,k+1},

where r_{n,k} = 0 unless n >= k >= 0.  Column 0 holds the sequence the rest
of the package certifies.  The same numbers count weighted lattice paths
(up/level/down steps staying nonnegative, level steps at height k weighted
s_k and down steps from height k weighted t_k); motzkin_oracle evaluates
that count by explicit path enumeration, independent of the recurrence, and
serves as the test oracle.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import FALSE, TRUE, DenseMatrix, format_rat
from .jacobi import JacobiMatrix
from .seqspec import SequenceSpec

ORACLE_MAX_LENGTH = 14


class RecursiveMatrix:
    """Triangle of recurrence values; row n stores r_{n,0..n}."""

    __slots__ = ("rows_", "sigma", "tau")

    def __init__(self, rows, sigma: SequenceSpec, tau: SequenceSpec):
        object.__setattr__(self, "rows_", tuple(tuple(row) for row in rows))
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "tau", tau)

    def __setattr__(self, name, value):
        raise AttributeError("RecursiveMatrix is immutable")

    @property
    def depth(self) -> int:
        return len(self.rows_) - 1

    def row(self, n: int) -> tuple[Fraction, ...]:
        return self.rows_[n]

    def entry(self, n: int, k: int) -> Fraction:
        """r_{n,k}, with the zero convention outside the triangle."""
        if n < 0 or k < 0 or k > n:
            return Fraction(0)
        return self.rows_[n][k]

    def column(self, k: int) -> list[Fraction]:
        """Column k, padded with leading zeros: entries for n = 0..depth."""
        return [self.entry(n, k) for n in range(self.depth + 1)]

    def section(self, n: int) -> DenseMatrix:
        """The (n+1) x (n+1) leading section as a dense matrix."""
        if n < 0 or n > self.depth:
            raise ValueError(f"section depth must lie in 0..{self.depth}")
        return DenseMatrix(
            tuple(self.entry(i, j) for j in range(n + 1)) for i in range(n + 1)
        )

    def to_json(self) -> dict:
        return {
            "sigma": self.sigma.to_json(),
            "tau": self.tau.to_json(),
            "rows": [[format_rat(v) for v in row] for row in self.rows_],
        }


def build_recursive(sigma: SequenceSpec, tau: SequenceSpec, depth: int) -> RecursiveMatrix:
    """Populate rows 0..depth of the recursive matrix from the recurrence."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    rows: list[list[Fraction]] = [[Fraction(1)]]
    for n in range(depth):
        prev = rows[n]

        def r(k: int) -> Fraction:
            return prev[k] if 0 <= k <= n else Fraction(0)

        nxt = [
            r(k - 1) + sigma.eval(k) * r(k) + tau.eval(k + 1) * r(k + 1)
            for k in range(n + 2)
        ]
        rows.append(nxt)
    return RecursiveMatrix(rows, sigma, tau)


def catalan_like(sigma: SequenceSpec, tau: SequenceSpec, depth: int) -> list[Fraction]:
    """Column 0 of the recursive matrix: terms 0..depth of the sequence."""
    return build_recursive(sigma, tau, depth).column(0)


def motzkin_oracle(sigma: SequenceSpec, tau: SequenceSpec, n: int) -> Fraction:
    """Term n by explicit weighted path enumeration (independent oracle).

    Sums the weight of every up/level/down path of length n from height 0
    back to height 0 that never dips below 0: up steps weigh 1, a level step
    at height k weighs s_k, a down step from height k weighs t_k.  The only
    pruning is the feasibility bound height <= remaining steps, which
    discards no completable path.
    """
    if n < 0:
        raise ValueError("path length must be >= 0")
    if n > ORACLE_MAX_LENGTH:
        raise ValueError(
            f"oracle enumerates paths explicitly; length is capped at {ORACLE_MAX_LENGTH}"
        )
    total = Fraction(0)

    def walk(remaining: int, height: int, weight: Fraction):
        nonlocal total
        if height > remaining:
            return
        if remaining == 0:
            total += weight
            return
        walk(remaining - 1, height + 1, weight)
        walk(remaining - 1, height, weight * sigma.eval(height))
        if height > 0:
            walk(remaining - 1, height - 1, weight * tau.eval(height))

    walk(n, 0, Fraction(1))
    return total


def verify_RJ_identity(R: RecursiveMatrix, J: JacobiMatrix, depth: int) -> str:
    """Check that deleting row 0 of R equals R times the coefficient matrix.

    Compares rows 1..depth of R with rows 0..depth-1 of R_section @
    J_section; the truncation is exact because row n of R ends at column n.
    """
    if depth < 1 or depth > R.depth:
        raise ValueError(f"depth must lie in 1..{R.depth}")
    product = R.section(depth) @ J.section(depth)
    for n in range(depth):
        expected = tuple(R.entry(n + 1, k) for k in range(depth + 1))
        if product.row(n) != expected:
            return FALSE
    return TRUE


def step_matrix(sigma: SequenceSpec, tau: SequenceSpec, n: int) -> DenseMatrix:
    """The (n+2) x (n+2) elimination factor: unit diagonal, s_0..s_n on the
    first subdiagonal, t_1..t_n on the second."""
    size = n + 2
    rows = []
    for i in range(size):
        row = [Fraction(0)] * size
        row[i] = Fraction(1)
        if i >= 1:
            row[i - 1] = sigma.eval(i - 1)
        if i >= 2:
            row[i - 2] = tau.eval(i - 1)
        rows.append(row)
    return DenseMatrix(rows)


def verify_step_factorization(sigma: SequenceSpec, tau: SequenceSpec, n: int) -> str:
    """Check R_{n+1} = blockdiag(1, R_n) @ L_n, the one-step factorization
    that peels the recurrence off the leading section."""
    if n < 0:
        raise ValueError("n must be >= 0")
    matrix = build_recursive(sigma, tau, n + 1)
    left = matrix.section(n + 1)
    inner = matrix.section(n) if n >= 0 else None
    size = n + 2
    block = [[Fraction(0)] * size for _ in range(size)]
    block[0][0] = Fraction(1)
    for i in range(n + 1):
        for j in range(n + 1):
            block[i + 1][j + 1] = inner[i, j]
    right = DenseMatrix(block) @ step_matrix(sigma, tau, n)
    return TRUE if left == right else FALSE
