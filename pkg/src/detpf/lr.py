"""Littlewood-Richardson coefficients, two independent ways.

The oracle route counts lattice-word skew tableaux directly.  The
subpfaffian route builds the skew matrix of h-polynomial coefficients,
takes the principal Pfaffian on the index set of the target partition and
reads the answer off a Schur-basis expansion; a third route rewrites the
near-rectangle problem through the complementation theorem.  All three
agree on the common domain, which is the package's central cross-check.
"""

from fractions import Fraction

from .linalg import SkewMatrix, pfaffian
from .poly import Polynomial, VariableTable
from .symfunc import (
    NotInBoxError,
    Partition,
    SkewShape,
    TooLongError,
    h_complete,
    index_set,
    schur_jacobi_trudi,
)


class ConditionViolatedError(ValueError):
    """The near-rectangle corollary was invoked outside its hypothesis."""


def lr_bruteforce(lam, mu, nu):
    """c^lam_{mu,nu} by counting lattice-word semistandard fillings of lam/mu.

    Cells are filled row by row, right to left inside each row, which is
    exactly reverse reading-word order, so the lattice condition can be
    checked incrementally.
    """
    if lam.size() != mu.size() + nu.size():
        return 0
    if not lam.contains(mu):
        return 0
    if nu.size() == 0:
        return 1 if lam == mu else 0
    nrows = lam.length()
    nvals = nu.length()
    cells = []
    for i in range(nrows):
        for j in range(lam.part(i) - 1, mu.part(i) - 1, -1):
            cells.append((i, j))
    grid = {}
    counts = [0] * (nvals + 1)

    def in_shape(i, j):
        return 0 <= i and mu.part(i) <= j < lam.part(i)

    def fill(pos):
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        right = grid.get((i, j + 1))
        above = grid.get((i - 1, j)) if i > 0 and in_shape(i - 1, j) else None
        total = 0
        lo = (above + 1) if above is not None else 1
        hi = right if right is not None else nvals
        for v in range(lo, hi + 1):
            if counts[v] >= nu.part(v - 1):
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            grid[(i, j)] = v
            counts[v] += 1
            total += fill(pos + 1)
            counts[v] -= 1
            del grid[(i, j)]
        return total

    return fill(0)


def lr_rect_rect(lam, n, e, f):
    """Indicator for c^lam of two full rectangles: pairing condition on opposite parts."""
    if lam.length() > 2 * n:
        return 0
    if lam.part(n) > min(e, f):
        return 0
    for i in range(n):
        if lam.part(i) + lam.part(2 * n - 1 - i) != e + f:
            return 0
    return 1


def lr_complement(mu, nu, n, e):
    """Indicator that nu is the complement of mu in the n x e box."""
    box = Partition.box(n, e)
    if not (box.contains(mu) and box.contains(nu)):
        return 0
    return 1 if nu == mu.complement(n, e) else 0


def b_coeff(k, l, n, e, f, z_values, w_values):
    """Closed-form coefficient of x^k y^l in (y-x) h_{e+n-1}(x,y,z) h_{f+n-1}(x,y,w).

    For k < l it is the sum of h_i(z) h_j(w) over i+j = (e+n-1)+(f+n-1)+1-k-l
    with 0 <= i <= (e+n-1)-k and 0 <= j <= (f+n-1)-k; the matrix of these
    coefficients is skew-symmetric and vanishes outside 0 <= k,l <= e+f+2n-1.
    """
    if k == l:
        return Fraction(0)
    if k > l:
        return -b_coeff(l, k, n, e, f, z_values, w_values)
    top_z = e + n - 1
    top_w = f + n - 1
    degree = top_z + top_w + 1 - k - l
    total = Fraction(0)
    for i in range(0, top_z - k + 1):
        j = degree - i
        if j < 0 or j > top_w - k:
            continue
        total = total + h_complete(i, z_values) * h_complete(j, w_values)
    return total


def build_B(n, e, f, z_values, w_values):
    """The coefficient matrix truncated to dimension e+f+2n (all else vanishes)."""
    dim = e + f + 2 * n
    return SkewMatrix.from_upper_function(
        dim, lambda k, l: b_coeff(k, l, n, e, f, z_values, w_values)
    )


_Z_TABLES = {}


def _z_table(n):
    if n not in _Z_TABLES:
        table = VariableTable()
        table.add_vector("z", n)
        _Z_TABLES[n] = table
    return _Z_TABLES[n]


def schur_expand(p):
    """Expand a symmetric polynomial in the Schur basis by leading-term peeling.

    The graded-lex leading monomial of a symmetric polynomial has weakly
    decreasing exponents; subtracting that Schur polynomial strictly lowers
    the leading term, so the loop terminates with the coefficient map.
    """
    out = {}
    nvars = len(p.table)
    gens = p.table.gens()
    while p.terms:
        mono, coeff = p.leading_term()
        exps = mono.dense_key(nvars)
        if any(exps[i] < exps[i + 1] for i in range(nvars - 1)):
            raise ValueError("polynomial is not symmetric")
        lam = Partition(exps)
        out[lam] = coeff
        p = p - coeff * schur_jacobi_trudi(lam, gens)
    return out


def lr_via_pfaffian(lam, n, e, f, mu):
    """c^lam_{mu, box(n,f)} from the principal Pfaffian of the coefficient matrix.

    Works in n z-variables with the w-alphabet empty: the subpfaffian on
    I(lam) expands as sum_mu c^lam_{mu,box(n,f)} s_{mu-complement}(z), and
    the requested coefficient is read off by Schur-basis peeling.
    """
    if lam.length() > 2 * n:
        raise TooLongError(f"{lam} longer than 2n={2 * n}")
    if not Partition.box(n, e).contains(mu):
        raise NotInBoxError(f"{mu} not inside {n}x{e}")
    table = _z_table(n)
    zs = table.gens()
    idx = index_set(lam, 2 * n)
    entries = {}
    for s in range(2 * n):
        for t in range(s + 1, 2 * n):
            entries[(s, t)] = b_coeff(idx[s], idx[t], n, e, f, zs, [])
    pf = pfaffian(SkewMatrix(2 * n, entries))
    if isinstance(pf, Fraction):
        pf = Polynomial.const(table, pf)
    coeffs = schur_expand(pf)
    value = coeffs.get(mu.complement(n, e), Fraction(0))
    if value.denominator != 1 or value < 0:
        raise ValueError(f"non-integral expansion coefficient {value}")
    return int(value)


def _alpha_beta(lam, n, e, f):
    # only valid under condition_holds, which makes both rows nonnegative
    alpha = Partition(lam.part(i) - f for i in range(n))
    beta = Partition(e - lam.part(2 * n - 1 - i) for i in range(n))
    return alpha, beta


def condition_holds(lam, n, e, f):
    """lam_n >= f and lam_{n+1} <= min(e, f)."""
    return lam.part(n - 1) >= f and lam.part(n) <= min(e, f)


def lr_rectangle_theorem(lam, n, e, f, mu):
    """c^lam_{mu, box(n,f)} via the complementation rewrite c^beta_{alpha, mu-complement}."""
    if lam.length() > 2 * n:
        raise TooLongError(f"{lam} longer than 2n={2 * n}")
    if not Partition.box(n, e).contains(mu):
        raise NotInBoxError(f"{mu} not inside {n}x{e}")
    if not condition_holds(lam, n, e, f):
        return 0
    alpha, beta = _alpha_beta(lam, n, e, f)
    if not beta.contains(alpha):
        return 0
    return lr_bruteforce(beta, alpha, mu.complement(n, e))


def pieri_mu(n, e, k, direction):
    """The near-rectangle middle partition: one short row (h) or k shaved columns (v)."""
    if direction == "h":
        return Partition([e] * (n - 1) + [e - k])
    if direction == "v":
        return Partition([e] * (n - k) + [e - 1] * k)
    raise ValueError(f"unknown direction {direction!r}")


def pieri_near_rectangle(lam, n, e, f, k, direction):
    """Strip indicator for the near-rectangle cases of the complementation theorem.

    direction "h": mu has rows (e^{n-1}, e-k), the answer is 1 iff beta/alpha
    is a horizontal strip of length k; "v": mu = (e^{n-k}, (e-1)^k) and
    vertical strips.  Requires the rectangle condition to hold.
    """
    if not condition_holds(lam, n, e, f):
        raise ConditionViolatedError(f"{lam} violates the rectangle condition")
    alpha, beta = _alpha_beta(lam, n, e, f)
    if not beta.contains(alpha):
        return 0
    shape = SkewShape(beta, alpha)
    if shape.size() != k:
        return 0
    if direction == "h":
        return 1 if shape.is_horizontal_strip() else 0
    if direction == "v":
        return 1 if shape.is_vertical_strip() else 0
    raise ValueError(f"unknown direction {direction!r}")
