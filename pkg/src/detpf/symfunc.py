"""Partitions and symmetric-function primitives.

Partitions carry the combinatorics (conjugates, Frobenius coordinates,
rectangle complements, strips); Schur functions are computed in finitely
many variables, by Jacobi-Trudi determinants of complete homogeneous
polynomials (works for skew shapes and any number of variables) or by the
bialternant quotient (straight shapes, enough variables).  All evaluators
accept arbitrary ring scalars, so the same code produces polynomials from
generators and exact values from rationals.
"""

from fractions import Fraction

from . import linalg
from .linalg import RingMatrix
from .poly import Polynomial


class PartitionError(ValueError):
    """Invalid partition data."""


class NotInBoxError(PartitionError):
    """A partition does not fit in the requested rectangle."""


class TooLongError(PartitionError):
    """A partition is longer than the operation allows."""


class Partition:
    """Weakly decreasing positive integer parts; trailing zeros are trimmed."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        ps = [int(p) for p in parts]
        while ps and ps[-1] == 0:
            ps.pop()
        for k, p in enumerate(ps):
            if p < 0:
                raise PartitionError("negative part")
            if k and ps[k - 1] < p:
                raise PartitionError("parts must be weakly decreasing")
        self.parts = tuple(ps)

    @classmethod
    def box(cls, a, b):
        """The rectangle with a rows of length b."""
        return cls((b,) * a if b else ())

    @classmethod
    def staircase(cls, k):
        """(k, k-1, ..., 1); empty for k = 0."""
        return cls(range(k, 0, -1))

    @classmethod
    def from_text(cls, text):
        """Parse the bracket form, e.g. "[3,2,1]" or "[]"."""
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise PartitionError(f"bad partition text {text!r}")
        body = text[1:-1].strip()
        if not body:
            return cls()
        return cls(int(tok) for tok in body.split(","))

    @classmethod
    def from_frobenius(cls, arms, legs):
        """Partition with the given strictly decreasing arm/leg lists."""
        arms = tuple(arms)
        legs = tuple(legs)
        if len(arms) != len(legs):
            raise PartitionError("arm/leg length mismatch")
        for seq in (arms, legs):
            for k, v in enumerate(seq):
                if v < 0 or (k and seq[k - 1] <= v):
                    raise PartitionError("Frobenius lists must strictly decrease")
        d = len(arms)
        rows = [arms[i] + i + 1 for i in range(d)]
        max_len = legs[0] + 1 if d else 0
        for i in range(d + 1, max_len + 1):
            rows.append(sum(1 for j in range(d) if legs[j] + j + 1 >= i))
        return cls(rows)

    def size(self):
        return sum(self.parts)

    def length(self):
        return len(self.parts)

    def part(self, i):
        """0-based part access; zero beyond the length."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def conjugate(self):
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other):
        """Componentwise containment of Young diagrams."""
        return all(self.part(i) >= other.part(i) for i in range(other.length()))

    def diagonal(self):
        """Length of the main diagonal of the Young diagram."""
        return sum(1 for i, p in enumerate(self.parts) if p >= i + 1)

    def frobenius(self):
        """(arms, legs): arm_i = lam_i - i, leg_i = lam'_i - i along the diagonal, 1-based."""
        conj = self.conjugate()
        d = self.diagonal()
        arms = tuple(self.parts[i] - i - 1 for i in range(d))
        legs = tuple(conj.parts[i] - i - 1 for i in range(d))
        return arms, legs

    def complement(self, a, b):
        """Complement in the a x b rectangle: i-th part is b - lam_{a+1-i}."""
        if self.length() > a or (self.parts and self.parts[0] > b):
            raise NotInBoxError(f"{self} not inside {a}x{b}")
        return Partition(b - self.part(a - 1 - i) for i in range(a))

    def text(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)!r})"


def partitions_in_box(rows, cols):
    """All partitions with at most `rows` parts, each at most `cols`, deterministic order."""
    out = []

    def rec(prefix, maxpart, remaining_rows):
        out.append(Partition(prefix))
        if not remaining_rows:
            return
        for p in range(maxpart, 0, -1):
            rec(prefix + [p], p, remaining_rows - 1)

    rec([], cols, rows)
    out.sort(key=lambda lam: (lam.size(), lam.parts))
    return out


def index_set(lam, r):
    """I(lam) = {lam_r, lam_{r-1}+1, ..., lam_1+r-1}, a strictly increasing r-set."""
    if lam.length() > r:
        raise TooLongError(f"{lam} longer than {r}")
    return tuple(lam.part(r - 1 - k) + k for k in range(r))


class SkewShape:
    """A skew diagram outer/inner with inner contained in outer."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer, inner=None):
        inner = inner if inner is not None else Partition()
        if not outer.contains(inner):
            raise PartitionError(f"{inner} not contained in {outer}")
        self.outer = outer
        self.inner = inner

    def size(self):
        return self.outer.size() - self.inner.size()

    def cells(self):
        for i in range(self.outer.length()):
            for j in range(self.inner.part(i), self.outer.part(i)):
                yield (i, j)

    def is_horizontal_strip(self):
        """At most one cell per column."""
        oc, ic = self.outer.conjugate(), self.inner.conjugate()
        return all(oc.part(j) - ic.part(j) <= 1 for j in range(oc.length()))

    def is_vertical_strip(self):
        """At most one cell per row."""
        return all(
            self.outer.part(i) - self.inner.part(i) <= 1
            for i in range(self.outer.length())
        )

    def __repr__(self):
        return f"SkewShape({self.outer!r}/{self.inner!r})"


def h_complete(r, values):
    """Complete homogeneous polynomial of degree r in the given ring scalars.

    h_0 = 1 and h_r = 0 for r < 0.  Incremental one-variable-at-a-time
    recurrence, so the cost is len(values) * r ring operations.
    """
    if r < 0:
        return Fraction(0)
    h = [Fraction(1)] + [Fraction(0)] * r
    for v in values:
        for j in range(1, r + 1):
            h[j] = h[j] + v * h[j - 1]
    return h[r]


def schur_jacobi_trudi(shape, values):
    """Skew or straight Schur function as the Jacobi-Trudi determinant of h's."""
    if isinstance(shape, Partition):
        shape = SkewShape(shape)
    outer, inner = shape.outer, shape.inner
    m = outer.length()
    if m == 0:
        return Fraction(1)
    hs = {}

    def h(r):
        if r not in hs:
            hs[r] = h_complete(r, values)
        return hs[r]

    entries = [
        h(outer.part(i) - inner.part(j) - (i + 1) + (j + 1))
        for i in range(m)
        for j in range(m)
    ]
    return linalg.det(RingMatrix(m, m, entries))


def schur_bialternant(lam, values):
    """Straight-shape Schur function det(v_i^{lam_j + m - j}) / Vandermonde.

    Needs at least length(lam) values; exact division in the polynomial case.
    """
    if not isinstance(lam, Partition):
        raise PartitionError("bialternant route needs a straight shape")
    m = len(values)
    if lam.length() > m:
        raise TooLongError(f"{lam} needs at least {lam.length()} variables")
    numer = linalg.det(
        RingMatrix(
            m, m, [values[i] ** (lam.part(j) + m - (j + 1)) for i in range(m) for j in range(m)]
        )
    )
    delta = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            delta = delta * (values[i] - values[j])
    if isinstance(numer, Polynomial) or isinstance(delta, Polynomial):
        if not isinstance(numer, Polynomial):
            numer = Polynomial.const(delta.table, numer)
        return numer.exact_div(delta)
    return numer / delta


def schur(shape, values, method="jacobi_trudi"):
    """Schur (or skew Schur) function of the shape in the given scalars."""
    if method == "jacobi_trudi":
        return schur_jacobi_trudi(shape, values)
    if method == "bialternant":
        return schur_bialternant(shape, values)
    raise ValueError(f"unknown method {method!r}")
