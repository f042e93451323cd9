"""Upper Hessenberg matrices with a fixed -1 subdiagonal.

Two determinant routes are kept deliberately separate so they count as
independent evidence:

* ``det`` runs the O(n^2) expansion that the -1 subdiagonal makes possible;
* ``det_oracle`` is fraction-free Bareiss elimination on a dense matrix and
  shares no code with ``det``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import combinations

from .fib import fib
from .poly import IntPolynomial

# 2^n subsets are enumerated by minor_sums; refuse orders above this unless
# the caller raises the bound explicitly.
DEFAULT_MINOR_BOUND = 20

DenseMatrix = Sequence[Sequence[int]]


class EnumerationBoundError(ValueError):
    """A brute-force enumeration would exceed its configured resource bound."""


def check_minor_bound(n: int, bound: int = DEFAULT_MINOR_BOUND) -> None:
    """Refuse orders whose 2^n principal-minor enumeration exceeds ``bound``."""
    if n > bound:
        raise EnumerationBoundError(
            f"order {n} exceeds the enumeration bound {bound} "
            f"(2^n principal-minor subsets); pass a larger bound to force it"
        )


class HessenbergMatrix:
    """Square matrix with -1 on the subdiagonal and zeros below it.

    Only the entries on and above the diagonal are stored: ``rows[i]`` holds
    row i+1 from the diagonal rightward.  Instances are immutable.
    """

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable[int]]):
        stored = tuple(tuple(row) for row in rows)
        n = len(stored)
        for i, row in enumerate(stored):
            if len(row) != n - i:
                raise ValueError(
                    f"row {i + 1} must carry {n - i} upper entries, got {len(row)}"
                )
        self.n = n
        self.rows = stored

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based position (i, j) of the implied full matrix."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"position ({i}, {j}) outside order-{self.n} matrix")
        if i <= j:
            return self.rows[i - 1][j - i]
        if i == j + 1:
            return -1
        return 0

    def materialize(self) -> list[list[int]]:
        """Full n x n matrix as a fresh list of lists."""
        n = self.n
        return [[self.entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HessenbergMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"HessenbergMatrix(order={self.n})"


def build_F(n: int) -> HessenbergMatrix:
    """Order-n matrix with 1 on the diagonal and superdiagonal, 0 elsewhere above.

    Its determinant is fib(n+1).
    """
    if n < 1:
        raise ValueError(f"matrix order must be >= 1, got {n}")
    return HessenbergMatrix(
        tuple(1 if d <= 1 else 0 for d in range(n - i)) for i in range(n)
    )


def build_G(n: int) -> HessenbergMatrix:
    """Order-n matrix with 0 on the diagonal and 1 everywhere strictly above.

    Its determinant is fib(n-1).
    """
    if n < 1:
        raise ValueError(f"matrix order must be >= 1, got {n}")
    return HessenbergMatrix(
        tuple(0 if d == 0 else 1 for d in range(n - i)) for i in range(n)
    )


def _expansion_det(n: int, entry, one):
    # d[m] is the determinant of the leading m x m block; expanding the last
    # column against the -1 subdiagonal gives d[m] = sum_i entry(i, m) * d[i-1].
    # Works over any commutative ring whose elements support + and *.
    d = [one]
    for m in range(1, n + 1):
        acc = entry(1, m) * d[0]
        for i in range(2, m + 1):
            acc = acc + entry(i, m) * d[i - 1]
        d.append(acc)
    return d[n]


def det(h: HessenbergMatrix) -> int:
    """Determinant via the O(n^2) subdiagonal expansion (order 0 gives 1)."""
    return _expansion_det(h.n, h.entry, 1)


def det_oracle(matrix: DenseMatrix) -> int:
    """Exact determinant of a square integer matrix by Bareiss elimination.

    Fraction-free: every division is exact.  Serves as the independent ground
    truth against ``det`` and shares no code with it.  The empty matrix has
    determinant 1.
    """
    n = len(matrix)
    m = [list(row) for row in matrix]
    for row in m:
        if len(row) != n:
            raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for col in range(n - 1):
        if m[col][col] == 0:
            for r in range(col + 1, n):
                if m[r][col]:
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = m[col]
        pivot = pivot_row[col]
        for r in range(col + 1, n):
            row = m[r]
            factor = row[col]
            row[col + 1 :] = [
                (pivot * x - factor * y) // prev
                for x, y in zip(row[col + 1 :], pivot_row[col + 1 :])
            ]
            row[col] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def dense_cofactor(matrix: DenseMatrix, i: int, j: int) -> int:
    """Signed minor (-1)^(i+j) * det of ``matrix`` with row i and column j removed."""
    n = len(matrix)
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"cofactor position ({i}, {j}) outside order-{n} matrix")
    sub = [
        [v for c, v in enumerate(row, start=1) if c != j]
        for r, row in enumerate(matrix, start=1)
        if r != i
    ]
    return (-1) ** (i + j) * det_oracle(sub)


def principal_minor(h: HessenbergMatrix, deleted: Iterable[int]) -> int:
    """Determinant after deleting the listed rows and matching columns.

    ``deleted`` holds distinct 1-based indices; deleting all of them leaves the
    empty matrix, whose determinant is 1.  Computed with the oracle, not the
    subdiagonal expansion (the submatrix loses the fixed -1 subdiagonal).
    """
    drop = list(deleted)
    seen = set(drop)
    if len(seen) != len(drop):
        raise ValueError(f"deleted indices must be distinct, got {drop}")
    for i in drop:
        if not (1 <= i <= h.n):
            raise ValueError(f"deleted index {i} outside 1..{h.n}")
    full = h.materialize()
    kept = [i for i in range(h.n) if i + 1 not in seen]
    return det_oracle([[full[r][c] for c in kept] for r in kept])


def minor_sums(h: HessenbergMatrix, bound: int = DEFAULT_MINOR_BOUND) -> list[int]:
    """Sums of all principal minors, indexed by minor order 0..n.

    Enumerates every one of the 2^n index subsets and runs the oracle
    determinant on each kept submatrix; exact by construction, so it can act
    as the ground-truth side of identity checks.  Entry 0 is 1 (the empty
    minor) and entry n is det(h).
    """
    check_minor_bound(h.n, bound)
    full = h.materialize()
    sums = [0] * (h.n + 1)
    for order in range(h.n + 1):
        total = 0
        for kept in combinations(range(h.n), order):
            total += det_oracle([[full[r][c] for c in kept] for r in kept])
        sums[order] = total
    return sums


def char_poly(h: HessenbergMatrix) -> IntPolynomial:
    """Characteristic polynomial det(xI - H), monic of degree n.

    Runs the same subdiagonal expansion as ``det`` but over polynomial
    entries: the expansion yields det(H - xI), and the sign flip for odd
    order converts it.
    """
    x = IntPolynomial.x()

    def entry(i: int, j: int) -> IntPolynomial:
        p = IntPolynomial.constant(h.entry(i, j))
        return p - x if i == j else p

    p = _expansion_det(h.n, entry, IntPolynomial.one())
    return -p if h.n % 2 else p


def cofactor_F(n: int, i: int, j: int) -> int:
    """Closed-form cofactor of entry (i, j) of build_F(n).

    fib(i)*fib(n-j+1) on or above the diagonal, and the signed mirror
    (-1)^(i+j)*fib(j)*fib(n-i+1) below it.
    """
    if n < 1:
        raise ValueError(f"matrix order must be >= 1, got {n}")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"cofactor position ({i}, {j}) outside 1..{n}")
    if i <= j:
        return fib(i) * fib(n - j + 1)
    return (-1) ** (i + j) * fib(j) * fib(n - i + 1)


def adjugate_det_F(n: int) -> int:
    """Oracle determinant of the full cofactor matrix of build_F(n).

    Equals fib(n+1)**(n-1); requires n >= 2.
    """
    if n < 2:
        raise ValueError(f"cofactor-matrix determinant needs order >= 2, got {n}")
    cof = [[cofactor_F(n, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return det_oracle(cof)


def recurrence_term(h: HessenbergMatrix, a1: int) -> int:
    """a_{n+1} obtained by iterating a_{m+1} = sum_{i<=m} p(i, m) * a_i from a_1."""
    values = [a1]
    for m in range(1, h.n + 1):
        values.append(sum(h.entry(i, m) * values[i - 1] for i in range(1, m + 1)))
    return values[-1]


def verify_recurrence_determinant(h: HessenbergMatrix, a1: int) -> bool:
    """Check a_{n+1} == a1 * det(A_n) with the determinant from the oracle.

    The left side iterates the defining recurrence directly, so the two sides
    are computed by unrelated algorithms.
    """
    return recurrence_term(h, a1) == a1 * det_oracle(h.materialize())
