"""Exact determinants, Pfaffians, minors and hyperpfaffians over a commutative ring.

Scalars are either Fraction or Polynomial (see poly.py); every algorithm here
uses ring operations only, except the rational fast paths which may divide.
Determinants of polynomial matrices use cofactor expansion with memoized
minors up to dimension 12 and fraction-free Bareiss elimination beyond;
Pfaffians use division-free first-row expansion with memoization on index
subsets, with an elimination fallback for large rational matrices.
"""

from fractions import Fraction
from math import factorial

from .poly import Polynomial

DET_COFACTOR_MAX_DIM = 12
PF_EXPANSION_MAX_DIM = 14
HYPERPFAFFIAN_DIM_CAP = 12


class NonSquareError(ValueError):
    """Determinant of a non-square matrix was requested."""


class DimensionMismatchError(ValueError):
    """Matrix dimensions do not line up for the requested product."""


class IndexBoundsError(IndexError):
    """A row/column selector is out of bounds or not strictly increasing."""


class OddIndexSetError(ValueError):
    """A subpfaffian was requested on an odd number of indices."""


class OddOrderError(ValueError):
    """A blocked tensor was requested with odd block size."""


class DimNotDivisibleError(ValueError):
    """Tensor dimension is not a multiple of the block size."""


class EnumerationCapError(ValueError):
    """The hyperpfaffian enumeration cap (dimension 12) was exceeded."""


def _is_zero(x):
    return not x


def _check_index_set(idx, bound):
    idx = tuple(idx)
    for k, i in enumerate(idx):
        if not 0 <= i < bound:
            raise IndexBoundsError(f"index {i} outside 0..{bound - 1}")
        if k and idx[k - 1] >= i:
            raise IndexBoundsError("index set must be strictly increasing")
    return idx


def _all_rational(values):
    return all(isinstance(v, (int, Fraction)) for v in values)


class RingMatrix:
    """Dense rectangular matrix of ring scalars, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data):
        data = list(data)
        if len(data) != rows * cols:
            raise DimensionMismatchError(
                f"expected {rows * cols} entries, got {len(data)}"
            )
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatchError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n):
        data = [Fraction(1) if i == j else Fraction(0) for i in range(n) for j in range(n)]
        return cls(n, n, data)

    def at(self, i, j):
        return self.data[i * self.cols + j]

    def __getitem__(self, key):
        i, j = key
        return self.at(i, j)

    def row_list(self, i):
        return self.data[i * self.cols : (i + 1) * self.cols]

    def transpose(self):
        return RingMatrix(
            self.cols,
            self.rows,
            [self.at(i, j) for j in range(self.cols) for i in range(self.rows)],
        )

    def minor(self, row_idx, col_idx):
        """Submatrix on strictly increasing row/column index sets."""
        row_idx = _check_index_set(row_idx, self.rows)
        col_idx = _check_index_set(col_idx, self.cols)
        return RingMatrix(
            len(row_idx),
            len(col_idx),
            [self.at(i, j) for i in row_idx for j in col_idx],
        )

    def delete(self, del_rows, del_cols):
        """Submatrix with the listed rows and columns removed."""
        keep_r = tuple(i for i in range(self.rows) if i not in set(del_rows))
        keep_c = tuple(j for j in range(self.cols) if j not in set(del_cols))
        return self.minor(keep_r, keep_c)

    def mul(self, other):
        if self.cols != other.rows:
            raise DimensionMismatchError("inner dimensions differ")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = Fraction(0)
                for k in range(self.cols):
                    acc = acc + self.at(i, k) * other.at(k, j)
                out.append(acc)
        return RingMatrix(self.rows, other.cols, out)

    def __repr__(self):
        return f"RingMatrix({self.rows}x{self.cols})"


class SkewMatrix:
    """Skew-symmetric matrix storing only the strict upper triangle.

    Antisymmetry is structural: entry(i, j) negates the stored value for
    i > j and the diagonal is identically zero.
    """

    __slots__ = ("dim", "upper")

    def __init__(self, dim, upper=None):
        self.dim = dim
        store = {}
        if upper:
            for (i, j), value in upper.items():
                if not (0 <= i < j < dim):
                    raise IndexBoundsError(f"upper-triangle key ({i},{j}) invalid")
                if not _is_zero(value):
                    store[(i, j)] = value
        self.upper = store

    @classmethod
    def from_upper_function(cls, dim, entry):
        return cls(
            dim,
            {(i, j): entry(i, j) for i in range(dim) for j in range(i + 1, dim)},
        )

    def entry(self, i, j):
        if i == j:
            return Fraction(0)
        if i < j:
            return self.upper.get((i, j), Fraction(0))
        value = self.upper.get((j, i))
        return Fraction(0) if value is None else -value

    def principal(self, idx):
        """Principal submatrix on a strictly increasing index set."""
        idx = _check_index_set(idx, self.dim)
        pos = {v: k for k, v in enumerate(idx)}
        upper = {}
        for (i, j), value in self.upper.items():
            if i in pos and j in pos:
                upper[(pos[i], pos[j])] = value
        return SkewMatrix(len(idx), upper)

    def to_matrix(self):
        return RingMatrix(
            self.dim,
            self.dim,
            [self.entry(i, j) for i in range(self.dim) for j in range(self.dim)],
        )

    def _rational_entries(self):
        return _all_rational(self.upper.values())

    def __repr__(self):
        return f"SkewMatrix(dim={self.dim})"


class AlternatingTensor:
    """Alternating tensor of a given order on indices 0..dim-1.

    Values are stored on strictly increasing index tuples only; access by an
    arbitrary tuple applies the permutation sign and repeated indices give 0.
    """

    __slots__ = ("order", "dim", "values")

    def __init__(self, order, dim, values=None):
        self.order = order
        self.dim = dim
        store = {}
        if values:
            for idx, value in values.items():
                idx = _check_index_set(idx, dim)
                if len(idx) != order:
                    raise DimensionMismatchError("tensor key of wrong order")
                if not _is_zero(value):
                    store[idx] = value
        self.values = store

    @classmethod
    def from_function(cls, order, dim, value):
        from itertools import combinations

        return cls(
            order, dim, {idx: value(idx) for idx in combinations(range(dim), order)}
        )

    def value(self, sorted_idx):
        return self.values.get(tuple(sorted_idx), Fraction(0))

    def component(self, idx):
        """Sign-extended component at an arbitrary index tuple."""
        idx = tuple(idx)
        if len(set(idx)) != len(idx):
            return Fraction(0)
        order = tuple(sorted(idx))
        value = self.value(order)
        if _is_zero(value):
            return value
        return value if permutation_sign(idx) * permutation_sign(order) == 1 else -value

    def __repr__(self):
        return f"AlternatingTensor(order={self.order}, dim={self.dim})"


def permutation_sign(seq):
    """Sign of the permutation given as a sequence of distinct comparables."""
    inversions = 0
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def _exact_div(num, den):
    if isinstance(den, (int, Fraction)):
        if isinstance(num, (int, Fraction)):
            return Fraction(num) / Fraction(den)
        return num * (Fraction(1) / Fraction(den))
    if not isinstance(num, Polynomial):
        num = Polynomial.const(den.table, num)
    return num.exact_div(den)


def _det_bareiss(m):
    """Fraction-free Bareiss elimination with row pivoting; exact over any integral domain."""
    n = m.rows
    a = [m.row_list(i) for i in range(n)]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = _exact_div(num, prev)
            a[i][k] = Fraction(0)
        prev = a[k][k]
    result = a[n - 1][n - 1]
    return -result if sign < 0 else result


def _det_cofactor(m):
    """Cofactor expansion along rows with memoization on column subsets."""
    n = m.rows
    memo = {(): Fraction(1)}

    def rec(cols):
        cached = memo.get(cols)
        if cached is not None:
            return cached
        i = n - len(cols)
        acc = None
        for t, j in enumerate(cols):
            entry = m.at(i, j)
            if _is_zero(entry):
                continue
            term = entry * rec(cols[:t] + cols[t + 1 :])
            if t % 2:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            acc = Fraction(0)
        memo[cols] = acc
        return acc

    return rec(tuple(range(n)))


def det(m):
    """Exact determinant of a square RingMatrix."""
    if m.rows != m.cols:
        raise NonSquareError(f"matrix is {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return Fraction(1)
    if n == 1:
        return m.at(0, 0)
    if _all_rational(m.data) or n > DET_COFACTOR_MAX_DIM:
        return _det_bareiss(m)
    return _det_cofactor(m)


def _pf_expand(a):
    """Division-free Pfaffian by expansion along the smallest index, memoized on subsets."""
    memo = {(): Fraction(1)}

    def rec(idx):
        cached = memo.get(idx)
        if cached is not None:
            return cached
        first = idx[0]
        rest = idx[1:]
        acc = None
        for t, j in enumerate(rest):
            entry = a.entry(first, j)
            if _is_zero(entry):
                continue
            term = entry * rec(rest[:t] + rest[t + 1 :])
            if t % 2:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            acc = Fraction(0)
        memo[idx] = acc
        return acc

    return rec(tuple(range(a.dim)))


def _pf_elimination(a):
    """Pfaffian of a rational skew matrix by skew Gaussian elimination."""
    n = a.dim
    m = [[a.entry(i, j) for j in range(n)] for i in range(n)]
    pf = Fraction(1)
    for k in range(0, n, 2):
        pivot_col = None
        for j in range(k + 1, n):
            if m[k][j]:
                pivot_col = j
                break
        if pivot_col is None:
            return Fraction(0)
        if pivot_col != k + 1:
            m[k + 1], m[pivot_col] = m[pivot_col], m[k + 1]
            for row in m:
                row[k + 1], row[pivot_col] = row[pivot_col], row[k + 1]
            pf = -pf
        p = m[k][k + 1]
        pf *= p
        for i in range(k + 2, n):
            for j in range(i + 1, n):
                m[i][j] -= (m[k][i] * m[k + 1][j] - m[k][j] * m[k + 1][i]) / p
                m[j][i] = -m[i][j]
    return pf


def pfaffian(a):
    """Exact Pfaffian of a SkewMatrix.

    Odd dimensions return 0 (the empty perfect-matching sum); dimension 0
    returns 1.  Rational matrices beyond dimension 14 switch to elimination.
    """
    n = a.dim
    if n == 0:
        return Fraction(1)
    if n % 2:
        return Fraction(0)
    if n > PF_EXPANSION_MAX_DIM and a._rational_entries():
        return _pf_elimination(a)
    return _pf_expand(a)


def sub_pfaffian(a, idx):
    """Pfaffian of the principal submatrix on an even strictly increasing index set."""
    idx = _check_index_set(idx, a.dim)
    if len(idx) % 2:
        raise OddIndexSetError("subpfaffian needs an even index set")
    return pfaffian(a.principal(idx))


def congruence_product(x, a):
    """The exactly-skew product X A X^T as a SkewMatrix."""
    if x.cols != a.dim:
        raise DimensionMismatchError("X columns must match A dimension")
    t = x.mul(a.to_matrix())
    upper = {}
    for i in range(x.rows):
        for j in range(i + 1, x.rows):
            acc = Fraction(0)
            for k in range(x.cols):
                acc = acc + t.at(i, k) * x.at(j, k)
            upper[(i, j)] = acc
    return SkewMatrix(x.rows, upper)


def congruence_pfaffian(x, a):
    """Pf(X A X^T) for a 2n x N matrix X and an N x N skew matrix A."""
    return pfaffian(congruence_product(x, a))


def ascending_block_permutations(n_letters, block):
    """All permutations of 0..n_letters-1 that ascend inside consecutive blocks.

    These are exactly the permutations summed by the hyperpfaffian: ordered
    partitions into blocks of the given size, each block internally sorted,
    flattened.  Deterministic order (lexicographic block choices).
    """
    from itertools import combinations

    if n_letters % block:
        raise DimNotDivisibleError(f"{n_letters} letters, block {block}")

    def rec(remaining, prefix):
        if not remaining:
            yield tuple(prefix)
            return
        for combo in combinations(remaining, block):
            rest = [v for v in remaining if v not in set(combo)]
            yield from rec(rest, prefix + list(combo))

    yield from rec(list(range(n_letters)), [])


def _ordered_block_partitions(n_letters, block, tensor):
    """Yield (blocks, sign) over ordered partitions into sorted blocks of size `block`.

    Subtrees whose block has a zero tensor value are pruned (their products
    vanish).  The sign is that of the concatenated sequence as a permutation.
    """
    from itertools import combinations

    def rec(remaining, placed, blocks):
        if not remaining:
            yield tuple(blocks), permutation_sign(placed)
            return
        for combo in combinations(remaining, block):
            if _is_zero(tensor.value(combo)):
                continue
            rest = [v for v in remaining if v not in set(combo)]
            blocks.append(combo)
            yield from rec(rest, placed + list(combo), blocks)
            blocks.pop()

    yield from rec(list(range(n_letters)), [], [])


def hyperpfaffian(t):
    """Hyperpfaffian of an alternating tensor of order n on dim = n*r indices.

    Sums sgn(sigma) times the product of tensor values over all ordered
    partitions of the index set into r internally sorted blocks of size n,
    then divides by r!.  Enumeration only; dimension capped at 12.
    """
    n = t.order
    if t.dim % n:
        raise DimNotDivisibleError(f"dim {t.dim} not a multiple of order {n}")
    if t.dim > HYPERPFAFFIAN_DIM_CAP:
        raise EnumerationCapError(f"hyperpfaffian capped at dim {HYPERPFAFFIAN_DIM_CAP}")
    r = t.dim // n
    total = None
    for blocks, sign in _ordered_block_partitions(t.dim, n, t):
        prod = t.value(blocks[0])
        for b in blocks[1:]:
            prod = prod * t.value(b)
        if sign < 0:
            prod = -prod
        total = prod if total is None else total + prod
    if total is None:
        return Fraction(0)
    return total * Fraction(1, factorial(r))


def blocked_tensor(a, n):
    """Order-n tensor whose entry at each sorted n-tuple is the subpfaffian of `a` there."""
    if n % 2:
        raise OddOrderError("block size must be even")
    if a.dim % n:
        raise DimNotDivisibleError(f"dim {a.dim} not a multiple of {n}")
    from itertools import combinations

    return AlternatingTensor(
        n,
        a.dim,
        {idx: sub_pfaffian(a, idx) for idx in combinations(range(a.dim), n)},
    )


def det_with_denominators(num, den):
    """det(num_ij / den_ij) * prod_ij den_ij, computed without division.

    Clears each row: the (i,j) entry becomes num_ij times the product of the
    other denominators of row i, then takes an ordinary exact determinant.
    """
    if num.rows != num.cols or den.rows != num.rows or den.cols != num.cols:
        raise DimensionMismatchError("numerator/denominator shapes differ")
    n = num.rows
    data = []
    for i in range(n):
        dens = den.row_list(i)
        for j in range(n):
            entry = num.at(i, j)
            for k in range(n):
                if k != j:
                    entry = entry * dens[k]
            data.append(entry)
    return det(RingMatrix(n, n, data))


def pfaffian_with_denominators(dim, num, den):
    """Pf(num_ij / den_ij) * prod_{i<j} den_ij, computed without division.

    `num` and `den` are callables on pairs i < j; num is the strict upper
    triangle of a skew matrix, den symmetric and nonzero.  Expansion along
    the smallest index with memoization on index subsets; the unmatched
    denominators are multiplied back in at each step.
    """
    if dim % 2:
        return Fraction(0)
    memo = {(): Fraction(1)}

    def rec(idx):
        cached = memo.get(idx)
        if cached is not None:
            return cached
        first = idx[0]
        rest = idx[1:]
        acc = None
        for t, j in enumerate(rest):
            entry = num(first, j)
            if _is_zero(entry):
                continue
            term = entry * rec(rest[:t] + rest[t + 1 :])
            # pairs inside idx that touch `first` or `j`, except (first, j) itself
            for u in rest:
                if u != j:
                    term = term * den(first, u)
            for u in rest:
                if u != j:
                    term = term * den(min(u, j), max(u, j))
            if t % 2:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            acc = Fraction(0)
        memo[idx] = acc
        return acc

    return rec(tuple(range(dim)))
