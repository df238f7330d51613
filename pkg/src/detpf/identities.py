"""Registry of all verifiable identities.

Each entry declares its variable vectors, its guard expressions (factors
that must not vanish at a random evaluation point), and a builder that
produces (lhs, rhs) pairs from a map prefix -> list of scalars.  The same
builder runs in two modes: symbolic (scalars are polynomial generators,
sides are denominator-cleared polynomials) and numeric (scalars are random
rationals, sides are evaluated in raw fractional form where the statement
has denominators).

Sides are composed exclusively from the matrix builders, exact linear
algebra and symmetric-function primitives; no identity re-derives a closed
form of its own.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

from .linalg import (
    AlternatingTensor,
    RingMatrix,
    SkewMatrix,
    blocked_tensor,
    congruence_pfaffian,
    det,
    det_with_denominators,
    hyperpfaffian,
    pfaffian,
    pfaffian_with_denominators,
    sub_pfaffian,
)
from .lr import b_coeff, lr_bruteforce
from .symfunc import Partition, h_complete, index_set, partitions_in_box, schur_jacobi_trudi
from .vandermonde import build_DBC, build_U, build_V, build_W, fgh_sum, partition_family


class InvalidParamsError(ValueError):
    """Identity parameters are unknown, malformed, or violate the statement's hypotheses."""


@dataclass(frozen=True)
class IdentitySpec:
    """A named identity with parameterized builders for both verification modes."""

    name: str
    summary: str
    defaults: dict
    numeric_defaults: dict
    vectors: object  # params -> [(prefix, count)]
    sides: object  # (params, sc, numeric) -> [(lhs, rhs)]
    guards: object = None  # (params, sc) -> [scalar], or None
    check: object = None  # params -> None, raises InvalidParamsError
    symbolic_cases: tuple = ()

    def guard_values(self, params, sc):
        return [] if self.guards is None else list(self.guards(params, sc))


REGISTRY: dict = {}


def _register(**kwargs):
    spec = IdentitySpec(**kwargs)
    if spec.name in REGISTRY:
        raise ValueError(f"duplicate identity {spec.name}")
    REGISTRY[spec.name] = spec
    return spec


# ---------------------------------------------------------------------------
# shared building blocks


def _prod(items):
    total = Fraction(1)
    for x in items:
        total = total * x
    return total


def _delta(xs):
    return _prod(xs[j] - xs[i] for i in range(len(xs)) for j in range(i + 1, len(xs)))


def _sign(exponent):
    return -1 if exponent % 2 else 1


def _pow(x, k):
    return Fraction(1) if k == 0 else x**k


def _dv(p, q, xs, as_):
    return det(build_V(p, q, list(xs), list(as_)))


def _dw(n, xs, as_):
    return det(build_W(n, list(xs), list(as_)))


def _du(p, q, xs, ys, as_, bs):
    return det(build_U(p, q, list(xs), list(ys), list(as_), list(bs)))


def _schur(lam, values):
    return schur_jacobi_trudi(lam, list(values))


def _det_lhs(n, num, den, numeric):
    """det(num/den): raw fractional determinant numerically, cleared symbolically."""
    if numeric:
        data = [num(i, j) / den(i, j) for i in range(n) for j in range(n)]
        return det(RingMatrix(n, n, data))
    nmat = RingMatrix(n, n, [num(i, j) for i in range(n) for j in range(n)])
    dmat = RingMatrix(n, n, [den(i, j) for i in range(n) for j in range(n)])
    return det_with_denominators(nmat, dmat)


def _pf_lhs(dim, num, den, numeric):
    """Pf(num/den): raw fractional Pfaffian numerically, cleared symbolically."""
    if numeric:
        return pfaffian(
            SkewMatrix.from_upper_function(dim, lambda i, j: num(i, j) / den(i, j))
        )
    return pfaffian_with_denominators(dim, num, den)


def _rhs(core, dens, numeric):
    """RHS core over the product of denominators (raw mode) or the cleared core."""
    if numeric:
        return core / _prod(dens)
    return core


def _all_pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _matrix_from(sc_values, rows, cols):
    return RingMatrix(rows, cols, list(sc_values))


def _skew_from(sc_values, dim):
    values = list(sc_values)
    upper = {}
    pos = 0
    for i in range(dim):
        for j in range(i + 1, dim):
            upper[(i, j)] = values[pos]
            pos += 1
    return SkewMatrix(dim, upper)


def _check_nonneg(params, positive=("n",)):
    for key, value in params.items():
        if not isinstance(value, int) or value < 0:
            raise InvalidParamsError(f"parameter {key} must be a nonnegative integer")
    for key in positive:
        if key in params and params[key] < 1:
            raise InvalidParamsError(f"parameter {key} must be >= 1")


def _check_even_n(params):
    _check_nonneg(params)
    if params["n"] % 2:
        raise InvalidParamsError("n must be even")

def _check_min(params, key, minimum):
    if params[key] < minimum:
        raise InvalidParamsError(f"parameter {key} must be >= {minimum}")


def _check_le(params, small, large):
    if params[small] > params[large]:
        raise InvalidParamsError(f"needs {small} <= {large}")


def _check_dodgson(params):
    _check_nonneg(params)
    _check_min(params, "n", 2)


def _check_cauchy_binet(params):
    _check_nonneg(params, positive=("n", "N"))
    _check_le(params, "n", "N")


def _check_minor_sum(params):
    _check_nonneg(params, positive=("n", "N"))
    if 2 * params["n"] > params["N"]:
        raise InvalidParamsError("needs 2n <= N")


def _check_even_block(params):
    _check_nonneg(params, positive=("n", "r"))
    if params["n"] % 2:
        raise InvalidParamsError("n must be even")


# ---------------------------------------------------------------------------
# classical seeds: Cauchy determinant and Schur Pfaffian


def _cauchy_sides(p, sc, numeric):
    n = p["n"]
    x, y = sc["x"], sc["y"]
    num = lambda i, j: Fraction(1)
    den = lambda i, j: x[i] + y[j]
    core = _delta(x) * _delta(y)
    lhs = _det_lhs(n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i in range(n) for j in range(n)), numeric)
    return [(lhs, rhs)]


_register(
    name="cauchy",
    summary="det(1/(x_i+y_j)) equals the double Vandermonde over the pair products",
    defaults={"n": 2},
    numeric_defaults={"n": 3},
    vectors=lambda p: [("x", p["n"]), ("y", p["n"])],
    sides=_cauchy_sides,
    guards=lambda p, sc: [sc["x"][i] + sc["y"][j] for i in range(p["n"]) for j in range(p["n"])],
    check=_check_nonneg,
)


def _schur_id_sides(p, sc, numeric):
    n = p["n"]
    x = sc["x"]
    num = lambda i, j: x[j] - x[i]
    den = lambda i, j: x[j] + x[i]
    lhs = _pf_lhs(2 * n, num, den, numeric)
    rhs = _rhs(_delta(x), (den(i, j) for i, j in _all_pairs(2 * n)), numeric)
    return [(lhs, rhs)]


_register(
    name="schur",
    summary="Pf((x_j-x_i)/(x_j+x_i)) equals the product over all pairs",
    defaults={"n": 2},
    numeric_defaults={"n": 3},
    vectors=lambda p: [("x", 2 * p["n"])],
    sides=_schur_id_sides,
    guards=lambda p, sc: [sc["x"][j] + sc["x"][i] for i, j in _all_pairs(2 * p["n"])],
    check=_check_nonneg,
)


def _special1_sides(p, sc, numeric):
    n = p["n"]
    x, y, a, b = sc["x"], sc["y"], sc["a"], sc["b"]
    num = lambda i, j: b[j] - a[i]
    den = lambda i, j: y[j] - x[i]
    core = _sign(n * (n - 1) // 2) * _dv(n, n, x + y, a + b)
    lhs = _det_lhs(n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i in range(n) for j in range(n)), numeric)
    return [(lhs, rhs)]


_register(
    name="special1",
    summary="det((b_j-a_i)/(y_j-x_i)) in terms of one two-block determinant",
    defaults={"n": 2},
    numeric_defaults={"n": 3},
    vectors=lambda p: [("x", p["n"]), ("y", p["n"]), ("a", p["n"]), ("b", p["n"])],
    sides=_special1_sides,
    guards=lambda p, sc: [sc["y"][j] - sc["x"][i] for i in range(p["n"]) for j in range(p["n"])],
    check=_check_nonneg,
)


def _special2_sides(p, sc, numeric):
    n = p["n"]
    x, a, b = sc["x"], sc["a"], sc["b"]
    num = lambda i, j: (a[j] - a[i]) * (b[j] - b[i])
    den = lambda i, j: x[j] - x[i]
    core = _dv(n, n, x, a) * _dv(n, n, x, b)
    lhs = _pf_lhs(2 * n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i, j in _all_pairs(2 * n)), numeric)
    return [(lhs, rhs)]


_register(
    name="special2",
    summary="Pf((a_j-a_i)(b_j-b_i)/(x_j-x_i)) as a product of two two-block determinants",
    defaults={"n": 2},
    numeric_defaults={"n": 3},
    vectors=lambda p: [("x", 2 * p["n"]), ("a", 2 * p["n"]), ("b", 2 * p["n"])],
    sides=_special2_sides,
    guards=lambda p, sc: [sc["x"][j] - sc["x"][i] for i, j in _all_pairs(2 * p["n"])],
    check=_check_nonneg,
)


# ---------------------------------------------------------------------------
# the four main identities


def _main1_sides(p, sc, numeric):
    n, pp, qq = p["n"], p["p"], p["q"]
    x, y, a, b, z, c = sc["x"], sc["y"], sc["a"], sc["b"], sc["z"], sc["c"]
    num = lambda i, j: _dv(pp + 1, qq + 1, [x[i], y[j]] + z, [a[i], b[j]] + c)
    den = lambda i, j: y[j] - x[i]
    core = (
        _sign(n * (n - 1) // 2)
        * _pow(_dv(pp, qq, z, c), n - 1)
        * _dv(n + pp, n + qq, x + y + z, a + b + c)
    )
    lhs = _det_lhs(n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i in range(n) for j in range(n)), numeric)
    return [(lhs, rhs)]


_register(
    name="main1",
    summary="Cauchy-type determinant with two-block-determinant entries",
    defaults={"n": 2, "p": 1, "q": 0},
    numeric_defaults={"n": 2, "p": 1, "q": 2},
    vectors=lambda p: [
        ("x", p["n"]), ("y", p["n"]), ("a", p["n"]), ("b", p["n"]),
        ("z", p["p"] + p["q"]), ("c", p["p"] + p["q"]),
    ],
    sides=_main1_sides,
    guards=lambda p, sc: [sc["y"][j] - sc["x"][i] for i in range(p["n"]) for j in range(p["n"])],
    check=_check_nonneg,
    symbolic_cases=({"n": 2, "p": 1, "q": 0}, {"n": 3, "p": 0, "q": 0}),
)


def _main2_sides(p, sc, numeric):
    n, pp, qq, rr, ss = p["n"], p["p"], p["q"], p["r"], p["s"]
    x, a, b = sc["x"], sc["a"], sc["b"]
    z, c, w, d = sc["z"], sc["c"], sc["w"], sc["d"]

    def num(i, j):
        return _dv(pp + 1, qq + 1, [x[i], x[j]] + z, [a[i], a[j]] + c) * _dv(
            rr + 1, ss + 1, [x[i], x[j]] + w, [b[i], b[j]] + d
        )

    den = lambda i, j: x[j] - x[i]
    core = (
        _pow(_dv(pp, qq, z, c), n - 1)
        * _pow(_dv(rr, ss, w, d), n - 1)
        * _dv(n + pp, n + qq, x + z, a + c)
        * _dv(n + rr, n + ss, x + w, b + d)
    )
    lhs = _pf_lhs(2 * n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i, j in _all_pairs(2 * n)), numeric)
    return [(lhs, rhs)]


def _main2_vectors(p):
    return [
        ("x", 2 * p["n"]), ("a", 2 * p["n"]), ("b", 2 * p["n"]),
        ("z", p["p"] + p["q"]), ("c", p["p"] + p["q"]),
        ("w", p["r"] + p["s"]), ("d", p["r"] + p["s"]),
    ]


_register(
    name="main2",
    summary="Schur-type Pfaffian with paired two-block-determinant entries",
    defaults={"n": 2, "p": 0, "q": 0, "r": 0, "s": 0},
    numeric_defaults={"n": 2, "p": 1, "q": 1, "r": 1, "s": 1},
    vectors=_main2_vectors,
    sides=_main2_sides,
    guards=lambda p, sc: [sc["x"][j] - sc["x"][i] for i, j in _all_pairs(2 * p["n"])],
    check=_check_nonneg,
    symbolic_cases=(
        {"n": 2, "p": 0, "q": 0, "r": 0, "s": 0},
        {"n": 1, "p": 1, "q": 1, "r": 0, "s": 1},
    ),
)


def _main3_sides(p, sc, numeric):
    n, pp = p["n"], p["p"]
    x, y, a, b, z, c = sc["x"], sc["y"], sc["a"], sc["b"], sc["z"], sc["c"]
    num = lambda i, j: _dw(pp + 2, [x[i], y[j]] + z, [a[i], b[j]] + c)
    den = lambda i, j: (y[j] - x[i]) * (1 - x[i] * y[j])
    core = _pow(_dw(pp, z, c), n - 1) * _dw(2 * n + pp, x + y + z, a + b + c)
    lhs = _det_lhs(n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i in range(n) for j in range(n)), numeric)
    return [(lhs, rhs)]


_register(
    name="main3",
    summary="Cauchy-type determinant with palindromic-row determinant entries",
    defaults={"n": 2, "p": 0},
    numeric_defaults={"n": 2, "p": 1},
    vectors=lambda p: [
        ("x", p["n"]), ("y", p["n"]), ("a", p["n"]), ("b", p["n"]),
        ("z", p["p"]), ("c", p["p"]),
    ],
    sides=_main3_sides,
    guards=lambda p, sc: (
        [sc["y"][j] - sc["x"][i] for i in range(p["n"]) for j in range(p["n"])]
        + [1 - sc["x"][i] * sc["y"][j] for i in range(p["n"]) for j in range(p["n"])]
    ),
    check=_check_nonneg,
)


def _main4_sides(p, sc, numeric):
    n, pp, qq = p["n"], p["p"], p["q"]
    x, a, b = sc["x"], sc["a"], sc["b"]
    z, c, w, d = sc["z"], sc["c"], sc["w"], sc["d"]

    def num(i, j):
        return _dw(pp + 2, [x[i], x[j]] + z, [a[i], a[j]] + c) * _dw(
            qq + 2, [x[i], x[j]] + w, [b[i], b[j]] + d
        )

    den = lambda i, j: (x[j] - x[i]) * (1 - x[i] * x[j])
    core = (
        _pow(_dw(pp, z, c), n - 1)
        * _pow(_dw(qq, w, d), n - 1)
        * _dw(2 * n + pp, x + z, a + c)
        * _dw(2 * n + qq, x + w, b + d)
    )
    lhs = _pf_lhs(2 * n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i, j in _all_pairs(2 * n)), numeric)
    return [(lhs, rhs)]


_register(
    name="main4",
    summary="Schur-type Pfaffian with paired palindromic-row determinant entries",
    defaults={"n": 2, "p": 0, "q": 0},
    numeric_defaults={"n": 2, "p": 1, "q": 1},
    vectors=lambda p: [
        ("x", 2 * p["n"]), ("a", 2 * p["n"]), ("b", 2 * p["n"]),
        ("z", p["p"]), ("c", p["p"]), ("w", p["q"]), ("d", p["q"]),
    ],
    sides=_main4_sides,
    guards=lambda p, sc: (
        [sc["x"][j] - sc["x"][i] for i, j in _all_pairs(2 * p["n"])]
        + [1 - sc["x"][i] * sc["x"][j] for i, j in _all_pairs(2 * p["n"])]
    ),
    check=_check_nonneg,
)


# ---------------------------------------------------------------------------
# staircase Schur-function corollaries


def _cauchy1_sides(p, sc, numeric):
    n, k = p["n"], p["k"]
    x, y, z = sc["x"], sc["y"], sc["z"]
    stair = Partition.staircase(k)
    num = lambda i, j: _schur(stair, [x[i], y[j]] + z)
    den = lambda i, j: x[i] + y[j]
    core = (
        _delta(x)
        * _delta(y)
        * _pow(_schur(stair, z), n - 1)
        * _schur(stair, x + y + z)
    )
    lhs = _det_lhs(n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i in range(n) for j in range(n)), numeric)
    return [(lhs, rhs)]


_register(
    name="cauchy1",
    summary="Cauchy determinant dressed with staircase Schur polynomials",
    defaults={"n": 2, "k": 1, "zlen": 1},
    numeric_defaults={"n": 2, "k": 2, "zlen": 2},
    vectors=lambda p: [("x", p["n"]), ("y", p["n"]), ("z", p["zlen"])],
    sides=_cauchy1_sides,
    guards=lambda p, sc: [sc["x"][i] + sc["y"][j] for i in range(p["n"]) for j in range(p["n"])],
    check=_check_nonneg,
)


def _schur1_sides(p, sc, numeric):
    n, k, l = p["n"], p["k"], p["l"]
    x, z, w = sc["x"], sc["z"], sc["w"]
    sk = Partition.staircase(k)
    sl = Partition.staircase(l)
    num = lambda i, j: (x[j] - x[i]) * _schur(sk, [x[i], x[j]] + z) * _schur(sl, [x[i], x[j]] + w)
    den = lambda i, j: x[j] + x[i]
    core = (
        _delta(x)
        * _pow(_schur(sk, z), n - 1)
        * _pow(_schur(sl, w), n - 1)
        * _schur(sk, x + z)
        * _schur(sl, x + w)
    )
    lhs = _pf_lhs(2 * n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i, j in _all_pairs(2 * n)), numeric)
    return [(lhs, rhs)]


_register(
    name="schur1",
    summary="Schur Pfaffian dressed with two staircase Schur polynomials",
    defaults={"n": 2, "k": 1, "l": 0, "zlen": 1, "wlen": 0},
    numeric_defaults={"n": 2, "k": 2, "l": 1, "zlen": 2, "wlen": 1},
    vectors=lambda p: [("x", 2 * p["n"]), ("z", p["zlen"]), ("w", p["wlen"])],
    sides=_schur1_sides,
    guards=lambda p, sc: [sc["x"][j] + sc["x"][i] for i, j in _all_pairs(2 * p["n"])],
    check=_check_nonneg,
)


# ---------------------------------------------------------------------------
# the 4x4 base case of the Pfaffian identity

_register(
    name="prop_n2",
    summary="the n=2 base case of the paired-entry Pfaffian identity",
    defaults={"p": 1, "q": 0, "r": 0, "s": 1},
    numeric_defaults={"p": 1, "q": 1, "r": 1, "s": 1},
    vectors=lambda p: _main2_vectors({**p, "n": 2}),
    sides=lambda p, sc, numeric: _main2_sides({**p, "n": 2}, sc, numeric),
    guards=lambda p, sc: [sc["x"][j] - sc["x"][i] for i, j in _all_pairs(4)],
    check=lambda p: _check_nonneg(p, positive=()),
)


# ---------------------------------------------------------------------------
# reduction lemmas for the two-block matrices


def _rel_v1_check(p):
    _check_nonneg(p, positive=("p",))
    if p["p"] < p["q"]:
        raise InvalidParamsError("requires p >= q")


def _rel_v1_sides(p, sc, numeric):
    pp, qq = p["p"], p["q"]
    m = pp + qq
    x, a = sc["x"], sc["a"]
    xs, as_ = x[: m - 1], a[: m - 1]
    xm, am = x[m - 1], a[m - 1]
    lead = _prod(xm - x[i] for i in range(m - 1))
    if numeric:
        aprime = [(as_[i] - am) / (xs[i] - xm) for i in range(m - 1)]
        lhs = _dv(pp, qq, x, a)
        rhs = lead * _dv(pp - 1, qq, xs, aprime)
        return [(lhs, rhs)]
    # cleared form: scale row i of the reduced matrix by (x_i - x_m)
    data = []
    for i in range(m - 1):
        dx = xs[i] - xm
        da = as_[i] - am
        pw = [Fraction(1)]
        for _ in range(max(pp - 1, qq)):
            pw.append(pw[-1] * xs[i])
        data.extend(dx * pw[k] for k in range(pp - 1))
        data.extend(da * pw[k] for k in range(qq))
    reduced = det(RingMatrix(m - 1, m - 1, data))
    lhs = _dv(pp, qq, x, a) * _prod(xs[i] - xm for i in range(m - 1))
    rhs = lead * reduced
    return [(lhs, rhs)]


_register(
    name="rel_v1",
    summary="strips the last point off a two-block determinant (divided differences)",
    defaults={"p": 2, "q": 1},
    numeric_defaults={"p": 3, "q": 2},
    vectors=lambda p: [("x", p["p"] + p["q"]), ("a", p["p"] + p["q"])],
    sides=_rel_v1_sides,
    guards=lambda p, sc: [
        sc["x"][i] - sc["x"][p["p"] + p["q"] - 1] for i in range(p["p"] + p["q"] - 1)
    ],
    check=_rel_v1_check,
)


def _rel_v2_sides(p, sc, numeric):
    pp, qq = p["p"], p["q"]
    m = pp + qq
    x, a = sc["x"], sc["a"]
    sign = _sign(pp * qq)
    if numeric:
        lhs = _dv(pp, qq, x, a)
        rhs = sign * _prod(a) * _dv(qq, pp, x, [Fraction(1) / ai for ai in a])
        return [(lhs, rhs)]
    data = []
    for i in range(m):
        pw = [Fraction(1)]
        for _ in range(max(pp, qq)):
            pw.append(pw[-1] * x[i])
        data.extend(a[i] * pw[k] for k in range(qq))
        data.extend(pw[k] for k in range(pp))
    lhs = _dv(pp, qq, x, a)
    rhs = sign * det(RingMatrix(m, m, data))
    return [(lhs, rhs)]


_register(
    name="rel_v2",
    summary="swaps the two blocks of the determinant against inverted coefficients",
    defaults={"p": 2, "q": 1},
    numeric_defaults={"p": 2, "q": 2},
    vectors=lambda p: [("x", p["p"] + p["q"]), ("a", p["p"] + p["q"])],
    sides=_rel_v2_sides,
    guards=lambda p, sc: list(sc["a"]),
    check=lambda p: _check_nonneg(p, positive=()),
)


# ---------------------------------------------------------------------------
# Desnanot-Jacobi quadratic relations


def _det_dodgson_sides(p, sc, numeric):
    n = p["n"]
    m = _matrix_from(sc["a"], n, n)
    lhs = det(m.delete([0], [0])) * det(m.delete([1], [1])) - det(
        m.delete([0], [1])
    ) * det(m.delete([1], [0]))
    rhs = det(m) * det(m.delete([0, 1], [0, 1]))
    return [(lhs, rhs)]


_register(
    name="det_dodgson",
    summary="Desnanot-Jacobi: quadratic relation among first and second minors",
    defaults={"n": 3},
    numeric_defaults={"n": 5},
    vectors=lambda p: [("a", p["n"] * p["n"])],
    sides=_det_dodgson_sides,
    check=_check_dodgson,
)


def _pf_dodgson_sides(p, sc, numeric):
    dim = 2 * p["n"]
    a = _skew_from(sc["a"], dim)
    full = tuple(range(dim))

    def pf_without(*removed):
        keep = tuple(i for i in full if i not in removed)
        return sub_pfaffian(a, keep)

    lhs = (
        pf_without(0, 1) * pf_without(2, 3)
        - pf_without(0, 2) * pf_without(1, 3)
        + pf_without(0, 3) * pf_without(1, 2)
    )
    rhs = pfaffian(a) * pf_without(0, 1, 2, 3)
    return [(lhs, rhs)]


_register(
    name="pf_dodgson",
    summary="six-term Desnanot-Jacobi relation for Pfaffians",
    defaults={"n": 3},
    numeric_defaults={"n": 3},
    vectors=lambda p: [("a", p["n"] * (2 * p["n"] - 1))],
    sides=_pf_dodgson_sides,
    check=_check_dodgson,
)


# ---------------------------------------------------------------------------
# homogeneous two-variable-pair versions


def _homog1_sides(p, sc, numeric):
    n, pp, qq, rr, ss = p["n"], p["p"], p["q"], p["r"], p["s"]
    x, y, a, b, c, d = sc["x"], sc["y"], sc["a"], sc["b"], sc["c"], sc["d"]
    xi, eta, alpha, beta = sc["xi"], sc["eta"], sc["alpha"], sc["beta"]
    zeta, omega, gamma, delta = sc["zeta"], sc["omega"], sc["gamma"], sc["delta"]

    def num(i, j):
        return _du(
            pp + 1, qq + 1,
            [x[i], x[j]] + xi, [y[i], y[j]] + eta,
            [a[i], a[j]] + alpha, [b[i], b[j]] + beta,
        ) * _du(
            rr + 1, ss + 1,
            [x[i], x[j]] + zeta, [y[i], y[j]] + omega,
            [c[i], c[j]] + gamma, [d[i], d[j]] + delta,
        )

    den = lambda i, j: x[i] * y[j] - x[j] * y[i]
    core = (
        _pow(_du(pp, qq, xi, eta, alpha, beta), n - 1)
        * _pow(_du(rr, ss, zeta, omega, gamma, delta), n - 1)
        * _du(n + pp, n + qq, x + xi, y + eta, a + alpha, b + beta)
        * _du(n + rr, n + ss, x + zeta, y + omega, c + gamma, d + delta)
    )
    lhs = _pf_lhs(2 * n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i, j in _all_pairs(2 * n)), numeric)
    return [(lhs, rhs)]


_register(
    name="homog1",
    summary="homogeneous Pfaffian identity over variable pairs (x_i, y_i)",
    defaults={"n": 2, "p": 0, "q": 0, "r": 0, "s": 0},
    numeric_defaults={"n": 2, "p": 1, "q": 1, "r": 0, "s": 0},
    vectors=lambda p: [
        ("x", 2 * p["n"]), ("y", 2 * p["n"]), ("a", 2 * p["n"]),
        ("b", 2 * p["n"]), ("c", 2 * p["n"]), ("d", 2 * p["n"]),
        ("xi", p["p"] + p["q"]), ("eta", p["p"] + p["q"]),
        ("alpha", p["p"] + p["q"]), ("beta", p["p"] + p["q"]),
        ("zeta", p["r"] + p["s"]), ("omega", p["r"] + p["s"]),
        ("gamma", p["r"] + p["s"]), ("delta", p["r"] + p["s"]),
    ],
    sides=_homog1_sides,
    guards=lambda p, sc: [
        sc["x"][i] * sc["y"][j] - sc["x"][j] * sc["y"][i] for i, j in _all_pairs(2 * p["n"])
    ],
    check=_check_nonneg,
)


def _homog2_sides(p, sc, numeric):
    n, pp, qq = p["n"], p["p"], p["q"]
    x, y, z, w = sc["x"], sc["y"], sc["z"], sc["w"]
    a, b, c, d = sc["a"], sc["b"], sc["c"], sc["d"]
    xi, eta, alpha, beta = sc["xi"], sc["eta"], sc["alpha"], sc["beta"]

    def num(i, j):
        return _du(
            pp + 1, qq + 1,
            [x[i], z[j]] + xi, [y[i], w[j]] + eta,
            [a[i], c[j]] + alpha, [b[i], d[j]] + beta,
        )

    den = lambda i, j: x[i] * w[j] - z[j] * y[i]
    core = (
        _sign(n * (n - 1) // 2)
        * _pow(_du(pp, qq, xi, eta, alpha, beta), n - 1)
        * _du(n + pp, n + qq, x + z + xi, y + w + eta, a + c + alpha, b + d + beta)
    )
    lhs = _det_lhs(n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i in range(n) for j in range(n)), numeric)
    return [(lhs, rhs)]


_register(
    name="homog2",
    summary="homogeneous determinant identity over variable pairs",
    defaults={"n": 2, "p": 0, "q": 0},
    numeric_defaults={"n": 2, "p": 1, "q": 1},
    vectors=lambda p: [
        ("x", p["n"]), ("y", p["n"]), ("z", p["n"]), ("w", p["n"]),
        ("a", p["n"]), ("b", p["n"]), ("c", p["n"]), ("d", p["n"]),
        ("xi", p["p"] + p["q"]), ("eta", p["p"] + p["q"]),
        ("alpha", p["p"] + p["q"]), ("beta", p["p"] + p["q"]),
    ],
    sides=_homog2_sides,
    guards=lambda p, sc: [
        sc["x"][i] * sc["w"][j] - sc["z"][j] * sc["y"][i]
        for i in range(p["n"])
        for j in range(p["n"])
    ],
    check=_check_nonneg,
)


# ---------------------------------------------------------------------------
# block embedding of a determinant into a Pfaffian


def _pf_det_sides(p, sc, numeric):
    n = p["n"]
    pairs = []
    a = _matrix_from(sc["a"], n, n)
    block = SkewMatrix.from_upper_function(
        2 * n,
        lambda i, j: a.at(i, j - n) if i < n <= j else Fraction(0),
    )
    pairs.append((pfaffian(block), _sign(n * (n - 1) // 2) * det(a)))
    if n >= 2:
        m = n - 1
        g = _matrix_from(sc["g"], m, 2 * n - m)
        lop = SkewMatrix.from_upper_function(
            2 * n,
            lambda i, j: g.at(i, j - m) if i < m <= j else Fraction(0),
        )
        pairs.append((pfaffian(lop), Fraction(0)))
    return pairs


_register(
    name="pf_det",
    summary="Pf of [[0, A], [-A^T, 0]] is a signed determinant, zero off-square",
    defaults={"n": 2},
    numeric_defaults={"n": 3},
    vectors=lambda p: [("a", p["n"] * p["n"]), ("g", (p["n"] - 1) * (p["n"] + 1))],
    sides=_pf_det_sides,
    check=_check_nonneg,
    symbolic_cases=({"n": 2}, {"n": 3}),
)


# ---------------------------------------------------------------------------
# relations among the matrix families


def _rel_uv1_sides(p, sc, numeric):
    pp, qq = p["p"], p["q"]
    m = pp + qq
    x, y, a, b = sc["x"], sc["y"], sc["a"], sc["b"]
    if numeric:
        u = [y[i] / x[i] for i in range(m)]
        v = [b[i] * x[i] ** (qq - pp) / a[i] for i in range(m)]
        lhs = _du(pp, qq, x, y, a, b)
        rhs = _prod(a[k] * x[k] ** (pp - 1) for k in range(m)) * _dv(pp, qq, u, v)
        return [(lhs, rhs)]
    big = max(pp, qq)
    data = []
    for i in range(m):
        px = [Fraction(1)]
        for _ in range(big + qq):
            px.append(px[-1] * x[i])
        py = [Fraction(1)]
        for _ in range(big):
            py.append(py[-1] * y[i])
        data.extend(a[i] * px[big - 1 - k] * py[k] for k in range(pp))
        data.extend(b[i] * px[qq - pp + big - 1 - k] * py[k] for k in range(qq))
    lhs = _du(pp, qq, x, y, a, b) * _prod(x[i] ** (big - pp) for i in range(m))
    rhs = det(RingMatrix(m, m, data))
    return [(lhs, rhs)]


_register(
    name="rel_uv1",
    summary="dehomogenizes the bidegree matrix back to the two-block one",
    defaults={"p": 1, "q": 2},
    numeric_defaults={"p": 2, "q": 1},
    vectors=lambda p: [(pre, p["p"] + p["q"]) for pre in ("x", "y", "a", "b")],
    sides=_rel_uv1_sides,
    guards=lambda p, sc: list(sc["x"]) + list(sc["a"]),
    check=lambda p: _check_nonneg(p, positive=()),
)


def _rel_uv2_sides(p, sc, numeric):
    pp, qq = p["p"], p["q"]
    m = pp + qq
    x, a = sc["x"], sc["a"]
    ones = [Fraction(1)] * m
    return [(_dv(pp, qq, x, a), _du(pp, qq, ones, x, ones, a))]


_register(
    name="rel_uv2",
    summary="the two-block matrix is the bidegree matrix at x=1, a=1",
    defaults={"p": 2, "q": 1},
    numeric_defaults={"p": 2, "q": 2},
    vectors=lambda p: [("x", p["p"] + p["q"]), ("a", p["p"] + p["q"])],
    sides=_rel_uv2_sides,
    check=lambda p: _check_nonneg(p, positive=()),
)


def _rel_uw1_sides(p, sc, numeric):
    n = p["n"]
    x, a = sc["x"], sc["a"]
    ys = [1 + xi * xi for xi in x]
    cs = [1 + a[i] * x[i] for i in range(2 * n)]
    ds = [x[i] + a[i] for i in range(2 * n)]
    lhs = _du(n, n, x, ys, cs, ds)
    rhs = _sign(n * (n - 1) // 2) * _dw(2 * n, x, a)
    return [(lhs, rhs)]


_register(
    name="rel_uw1",
    summary="even palindromic-row determinant as a bidegree determinant",
    defaults={"n": 1},
    numeric_defaults={"n": 2},
    vectors=lambda p: [("x", 2 * p["n"]), ("a", 2 * p["n"])],
    sides=_rel_uw1_sides,
    check=_check_nonneg,
    symbolic_cases=({"n": 1}, {"n": 2}),
)


def _rel_uw2_sides(p, sc, numeric):
    n = p["n"]
    x, a = sc["x"], sc["a"]
    ys = [1 + xi * xi for xi in x]
    cs = [1 + a[i] * x[i] * x[i] for i in range(2 * n + 1)]
    ds = [1 + a[i] for i in range(2 * n + 1)]
    lhs = _du(n, n + 1, x, ys, cs, ds)
    rhs = _sign(n * (n - 1) // 2) * _dw(2 * n + 1, x, a)
    return [(lhs, rhs)]


_register(
    name="rel_uw2",
    summary="odd palindromic-row determinant as a bidegree determinant",
    defaults={"n": 1},
    numeric_defaults={"n": 2},
    vectors=lambda p: [("x", 2 * p["n"] + 1), ("a", 2 * p["n"] + 1)],
    sides=_rel_uw2_sides,
    check=_check_nonneg,
    symbolic_cases=({"n": 1}, {"n": 2}),
)


# ---------------------------------------------------------------------------
# the signed partition-sum variation


def _F(pp, qq, xs, as_):
    return fgh_sum("F", pp, qq, list(xs), list(as_))


def _variation1_sides(p, sc, numeric):
    n, pp, qq = p["n"], p["p"], p["q"]
    x, y, a, b, z, c = sc["x"], sc["y"], sc["a"], sc["b"], sc["z"], sc["c"]
    num = lambda i, j: _F(pp + 1, qq + 1, [x[i], y[j]] + z, [a[i], b[j]] + c)
    den = lambda i, j: (y[j] - x[i]) * (1 - x[i] * y[j])
    core = (
        _sign(n * (n - 1) // 2)
        * _pow(_F(pp, qq, z, c), n - 1)
        * _F(n + pp, n + qq, x + y + z, a + b + c)
    )
    lhs = _det_lhs(n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i in range(n) for j in range(n)), numeric)
    return [(lhs, rhs)]


_register(
    name="variation1",
    summary="determinant identity for the signed partition-family sums",
    defaults={"n": 2, "p": 0, "q": 0},
    numeric_defaults={"n": 2, "p": 0, "q": 1},
    vectors=lambda p: [
        ("x", p["n"]), ("y", p["n"]), ("a", p["n"]), ("b", p["n"]),
        ("z", p["p"] + p["q"]), ("c", p["p"] + p["q"]),
    ],
    sides=_variation1_sides,
    guards=lambda p, sc: (
        [sc["y"][j] - sc["x"][i] for i in range(p["n"]) for j in range(p["n"])]
        + [1 - sc["x"][i] * sc["y"][j] for i in range(p["n"]) for j in range(p["n"])]
    ),
    check=_check_nonneg,
)


def _variation2_sides(p, sc, numeric):
    n, pp, qq, rr, ss = p["n"], p["p"], p["q"], p["r"], p["s"]
    x, a, b = sc["x"], sc["a"], sc["b"]
    z, c, w, d = sc["z"], sc["c"], sc["w"], sc["d"]

    def num(i, j):
        return _F(pp + 1, qq + 1, [x[i], x[j]] + z, [a[i], a[j]] + c) * _F(
            rr + 1, ss + 1, [x[i], x[j]] + w, [b[i], b[j]] + d
        )

    den = lambda i, j: (x[j] - x[i]) * (1 - x[i] * x[j])
    core = (
        _pow(_F(pp, qq, z, c), n - 1)
        * _pow(_F(rr, ss, w, d), n - 1)
        * _F(n + pp, n + qq, x + z, a + c)
        * _F(n + rr, n + ss, x + w, b + d)
    )
    lhs = _pf_lhs(2 * n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i, j in _all_pairs(2 * n)), numeric)
    return [(lhs, rhs)]


_register(
    name="variation2",
    summary="Pfaffian identity for the signed partition-family sums",
    defaults={"n": 2, "p": 0, "q": 0, "r": 0, "s": 0},
    numeric_defaults={"n": 1, "p": 1, "q": 1, "r": 1, "s": 1},
    vectors=lambda p: [
        ("x", 2 * p["n"]), ("a", 2 * p["n"]), ("b", 2 * p["n"]),
        ("z", p["p"] + p["q"]), ("c", p["p"] + p["q"]),
        ("w", p["r"] + p["s"]), ("d", p["r"] + p["s"]),
    ],
    sides=_variation2_sides,
    guards=lambda p, sc: (
        [sc["x"][j] - sc["x"][i] for i, j in _all_pairs(2 * p["n"])]
        + [1 - sc["x"][i] * sc["x"][j] for i, j in _all_pairs(2 * p["n"])]
    ),
    check=_check_nonneg,
)


def _sundquist_sides(p, sc, numeric):
    n = p["n"]
    x, a = sc["x"], sc["a"]
    num = lambda i, j: a[j] - a[i]
    den = lambda i, j: 1 - x[i] * x[j]
    core = _sign(n * (n - 1) // 2) * _F(n, n, x, a)
    lhs = _pf_lhs(2 * n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i, j in _all_pairs(2 * n)), numeric)
    return [(lhs, rhs)]


_register(
    name="sundquist",
    summary="Pf((a_j-a_i)/(1-x_i x_j)) as a signed shifted-determinant sum",
    defaults={"n": 2},
    numeric_defaults={"n": 3},
    vectors=lambda p: [("x", 2 * p["n"]), ("a", 2 * p["n"])],
    sides=_sundquist_sides,
    guards=lambda p, sc: [1 - sc["x"][i] * sc["x"][j] for i, j in _all_pairs(2 * p["n"])],
    check=_check_nonneg,
)


def _rel_fv_sides(p, sc, numeric):
    pp, qq = p["p"], p["q"]
    m = pp + qq
    x, a = sc["x"], sc["a"]
    ys = [1 + xi * xi for xi in x]
    ones = [Fraction(1)] * m
    lhs = _F(pp, qq, x, a)
    rhs = _sign(pp * (pp - 1) // 2 + qq * (qq - 1) // 2) * _du(pp, qq, x, ys, ones, a)
    return [(lhs, rhs)]


_register(
    name="rel_fv",
    summary="the signed partition-family sum as a single bidegree determinant",
    defaults={"p": 2, "q": 1},
    numeric_defaults={"p": 2, "q": 2},
    vectors=lambda p: [("x", p["p"] + p["q"]), ("a", p["p"] + p["q"])],
    sides=_rel_fv_sides,
    check=lambda p: _check_nonneg(p, positive=()),
    symbolic_cases=({"p": 1, "q": 1}, {"p": 2, "q": 1}),
)


def _rel_gh_sides(p, sc, numeric):
    pp, qq = p["p"], p["q"]
    x, a = sc["x"], sc["a"]
    f = _F(pp, qq, x, a)
    g = fgh_sum("G", pp, qq, list(x), list(a))
    h = fgh_sum("H", pp, qq, list(x), list(a))
    return [
        (g, _prod(1 - xi * xi for xi in x) * f),
        (h, _prod(1 - xi for xi in x) * f),
    ]


_register(
    name="rel_gh",
    summary="the two companion partition-family sums are scalar multiples of the first",
    defaults={"p": 2, "q": 1},
    numeric_defaults={"p": 2, "q": 2},
    vectors=lambda p: [("x", p["p"] + p["q"]), ("a", p["p"] + p["q"])],
    sides=_rel_gh_sides,
    check=lambda p: _check_nonneg(p, positive=()),
)


def _littlewood_sides(p, sc, numeric):
    n = p["n"]
    x = sc["x"]
    total = Fraction(0)
    for lam in partition_family("P", n):
        term = _schur(lam, x)
        if (lam.size() // 2) % 2:
            term = -term
        total = total + term
    rhs = _prod(1 - x[i] * x[j] for i, j in _all_pairs(n))
    return [(total, rhs)]


_register(
    name="littlewood",
    summary="signed sum of hook-offset Schur polynomials equals prod (1 - x_i x_j)",
    defaults={"n": 3},
    numeric_defaults={"n": 4},
    vectors=lambda p: [("x", p["n"])],
    sides=_littlewood_sides,
    check=_check_nonneg,
    symbolic_cases=({"n": 2}, {"n": 3}, {"n": 4}),
)


# ---------------------------------------------------------------------------
# minor expansion machinery


def _cauchy_binet_sides(p, sc, numeric):
    n, nn = p["n"], p["N"]
    x = _matrix_from(sc["x"], n, nn)
    y = _matrix_from(sc["y"], n, nn)
    a = _matrix_from(sc["a"], nn, nn)
    lhs = det(x.mul(a).mul(y.transpose()))
    rows = tuple(range(n))
    rhs = Fraction(0)
    for i_set in combinations(range(nn), n):
        dx = det(x.minor(rows, i_set))
        for j_set in combinations(range(nn), n):
            rhs = rhs + det(a.minor(i_set, j_set)) * dx * det(y.minor(rows, j_set))
    return [(lhs, rhs)]


_register(
    name="cauchy_binet",
    summary="Cauchy-Binet: det(X A Y^T) as a sum over pairs of maximal minors",
    defaults={"n": 2, "N": 3},
    numeric_defaults={"n": 3, "N": 5},
    vectors=lambda p: [("x", p["n"] * p["N"]), ("y", p["n"] * p["N"]), ("a", p["N"] * p["N"])],
    sides=_cauchy_binet_sides,
    check=_check_cauchy_binet,
)


def _minor_dr_sides(p, sc, numeric):
    r = p["r"]
    d = build_DBC("D", r)
    members = {lam.parts for lam in partition_family("P", r)}
    rows = tuple(range(r))
    pairs = []
    for lam in partitions_in_box(r, r - 1):
        lhs = det(d.minor(rows, index_set(lam, r)))
        if lam.parts in members:
            rhs = Fraction(_sign(r * (r - 1) // 2 + lam.size() // 2))
        else:
            rhs = Fraction(0)
        pairs.append((lhs, rhs))
    return pairs


_register(
    name="minor_Dr",
    summary="maximal minors of the symmetric unit band matrix: signs on one family, else 0",
    defaults={"r": 2},
    numeric_defaults={"r": 3},
    vectors=lambda p: [],
    sides=_minor_dr_sides,
    check=lambda p: _check_nonneg(p, positive=("r",)),
    symbolic_cases=({"r": 1}, {"r": 2}, {"r": 3}),
)


def _minor_bc_sides(p, sc, numeric):
    r = p["r"]
    pairs = []
    rows = tuple(range(r))
    b = build_DBC("B", r)
    r_members = {lam.parts for lam in partition_family("R", r)}
    for lam in partitions_in_box(r, r):
        lhs = det(b.minor(rows, index_set(lam, r)))
        if lam.parts in r_members:
            exp = (r + 1) * r // 2 + (lam.size() + lam.diagonal()) // 2
            rhs = Fraction(_sign(exp))
        else:
            rhs = Fraction(0)
        pairs.append((lhs, rhs))
    c = build_DBC("C", r)
    q_members = {lam.parts for lam in partition_family("Q", r)}
    for lam in partitions_in_box(r, r + 1):
        lhs = det(c.minor(rows, index_set(lam, r)))
        if lam.parts in q_members:
            rhs = Fraction(_sign((r + 1) * r // 2 + lam.size() // 2))
        else:
            rhs = Fraction(0)
        pairs.append((lhs, rhs))
    return pairs


_register(
    name="minor_BC",
    summary="maximal minors of the two signed band matrices against their families",
    defaults={"r": 2},
    numeric_defaults={"r": 3},
    vectors=lambda p: [],
    sides=_minor_bc_sides,
    check=lambda p: _check_nonneg(p, positive=("r",)),
    symbolic_cases=({"r": 1}, {"r": 2}, {"r": 3}),
)


# ---------------------------------------------------------------------------
# reciprocal-entry Cauchy-type determinants


def _another1_sides(p, sc, numeric):
    n, pp, qq = p["n"], p["p"], p["q"]
    x, y, a, b, z, c = sc["x"], sc["y"], sc["a"], sc["b"], sc["z"], sc["c"]

    def f(u1, u2, s1, s2):
        return _dv(pp + 1, qq + 1, [u1, u2] + z, [s1, s2] + c)

    den = lambda i, j: f(x[i], y[j], a[i], b[j])
    num = lambda i, j: Fraction(1)
    core = _sign(n * (n - 1) // 2) * _prod(
        f(x[i], x[j], a[i], a[j]) * f(y[i], y[j], b[i], b[j]) for i, j in _all_pairs(n)
    )
    lhs = _det_lhs(n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i in range(n) for j in range(n)), numeric)
    return [(lhs, rhs)]


_register(
    name="another1",
    summary="det of reciprocals of two-block determinants factors over all pairs",
    defaults={"n": 2, "p": 0, "q": 0},
    numeric_defaults={"n": 2, "p": 1, "q": 1},
    vectors=lambda p: [
        ("x", p["n"]), ("y", p["n"]), ("a", p["n"]), ("b", p["n"]),
        ("z", p["p"] + p["q"]), ("c", p["p"] + p["q"]),
    ],
    sides=_another1_sides,
    guards=lambda p, sc: [
        _dv(p["p"] + 1, p["q"] + 1, [sc["x"][i], sc["y"][j]] + sc["z"], [sc["a"][i], sc["b"][j]] + sc["c"])
        for i in range(p["n"])
        for j in range(p["n"])
    ],
    check=_check_nonneg,
)


def _another2_sides(p, sc, numeric):
    n, pp = p["n"], p["p"]
    x, y, a, b, z, c = sc["x"], sc["y"], sc["a"], sc["b"], sc["z"], sc["c"]

    def f(u1, u2, s1, s2):
        return _dw(pp + 2, [u1, u2] + z, [s1, s2] + c)

    den = lambda i, j: f(x[i], y[j], a[i], b[j])
    num = lambda i, j: Fraction(1)
    core = _sign(n * (n - 1) // 2) * _prod(
        f(x[i], x[j], a[i], a[j]) * f(y[i], y[j], b[i], b[j]) for i, j in _all_pairs(n)
    )
    lhs = _det_lhs(n, num, den, numeric)
    rhs = _rhs(core, (den(i, j) for i in range(n) for j in range(n)), numeric)
    return [(lhs, rhs)]


_register(
    name="another2",
    summary="det of reciprocals of palindromic-row determinants factors over all pairs",
    defaults={"n": 2, "p": 0},
    numeric_defaults={"n": 2, "p": 1},
    vectors=lambda p: [
        ("x", p["n"]), ("y", p["n"]), ("a", p["n"]), ("b", p["n"]),
        ("z", p["p"]), ("c", p["p"]),
    ],
    sides=_another2_sides,
    guards=lambda p, sc: [
        _dw(p["p"] + 2, [sc["x"][i], sc["y"][j]] + sc["z"], [sc["a"][i], sc["b"][j]] + sc["c"])
        for i in range(p["n"])
        for j in range(p["n"])
    ],
    check=_check_nonneg,
)


# ---------------------------------------------------------------------------
# Pluecker relations


def _plucker_sides(p, sc, numeric):
    m = p["m"]
    mat = _matrix_from(sc["g"], m + 2, m + 4)
    rows = tuple(range(m + 2))
    tail = tuple(range(4, m + 4))

    def dcols(i, j):
        return det(mat.minor(rows, tuple(sorted((i - 1, j - 1))) + tail))

    lhs = dcols(1, 2) * dcols(3, 4) - dcols(1, 3) * dcols(2, 4) + dcols(1, 4) * dcols(2, 3)
    return [(lhs, Fraction(0))]


_register(
    name="plucker",
    summary="three-term Pluecker relation among maximal minors sharing m columns",
    defaults={"m": 0},
    numeric_defaults={"m": 4},
    vectors=lambda p: [("g", (p["m"] + 2) * (p["m"] + 4))],
    sides=_plucker_sides,
    check=lambda p: _check_nonneg(p, positive=()),
    symbolic_cases=({"m": 0}, {"m": 2}),
)


def _plucker_vw_sides(p, sc, numeric):
    pp, qq = p["p"], p["q"]
    x, y, a, b = sc["x"], sc["y"], sc["a"], sc["b"]
    z, c, w, d = sc["z"], sc["c"], sc["w"], sc["d"]

    def quad(f):
        return (
            f(x[0], x[1], a[0], a[1]) * f(y[0], y[1], b[0], b[1])
            - f(x[0], y[0], a[0], b[0]) * f(x[1], y[1], a[1], b[1])
            + f(x[0], y[1], a[0], b[1]) * f(x[1], y[0], a[1], b[0])
        )

    f_v = lambda u1, u2, s1, s2: _dv(pp + 1, qq + 1, [u1, u2] + z, [s1, s2] + c)
    f_w = lambda u1, u2, s1, s2: _dw(pp + 2, [u1, u2] + w, [s1, s2] + d)
    return [(quad(f_v), Fraction(0)), (quad(f_w), Fraction(0))]


_register(
    name="plucker_vw",
    summary="quadratic relation among the pairwise structured determinants",
    defaults={"p": 0, "q": 0},
    numeric_defaults={"p": 1, "q": 1},
    vectors=lambda p: [
        ("x", 2), ("y", 2), ("a", 2), ("b", 2),
        ("z", p["p"] + p["q"]), ("c", p["p"] + p["q"]),
        ("w", p["p"]), ("d", p["p"]),
    ],
    sides=_plucker_vw_sides,
    check=lambda p: _check_nonneg(p, positive=()),
    symbolic_cases=({"p": 0, "q": 0}, {"p": 1, "q": 0}),
)


# ---------------------------------------------------------------------------
# degenerate Pfaffians and hyperpfaffians


def _special_pf_sides(p, sc, numeric):
    n, r = p["n"], p["r"]
    m = n // 2
    x = sc["x"]
    num = lambda i, j: (x[j] ** m - x[i] ** m) ** 2
    den = lambda i, j: x[j] - x[i]
    lhs = _pf_lhs(n * r, num, den, numeric)
    if r == 1:
        core = _delta(x) * _delta(x)
        rhs = _rhs(core, (den(i, j) for i, j in _all_pairs(n)), numeric)
    else:
        rhs = Fraction(0)
    return [(lhs, rhs)]


_register(
    name="special_pf",
    summary="Pf((x_j^m - x_i^m)^2/(x_j - x_i)): a Vandermonde for one block, else 0",
    defaults={"n": 2, "r": 2},
    numeric_defaults={"n": 2, "r": 3},
    vectors=lambda p: [("x", p["n"] * p["r"])],
    sides=_special_pf_sides,
    guards=lambda p, sc: [
        sc["x"][j] - sc["x"][i] for i, j in _all_pairs(p["n"] * p["r"])
    ],
    check=_check_even_block,
    symbolic_cases=({"n": 2, "r": 1}, {"n": 2, "r": 2}),
)


def _special_hyppf_sides(p, sc, numeric):
    n, r = p["n"], p["r"]
    x = sc["x"]
    tensor = AlternatingTensor.from_function(
        n, n * r, lambda idx: _delta([x[i] for i in idx])
    )
    lhs = hyperpfaffian(tensor)
    rhs = _delta(x) if r == 1 else Fraction(0)
    return [(lhs, rhs)]


_register(
    name="special_hyppf",
    summary="hyperpfaffian of block Vandermonde factors: one block survives, else 0",
    defaults={"n": 2, "r": 2},
    numeric_defaults={"n": 2, "r": 3},
    vectors=lambda p: [("x", p["n"] * p["r"])],
    sides=_special_hyppf_sides,
    check=_check_even_block,
    symbolic_cases=({"n": 2, "r": 1}, {"n": 2, "r": 2}),
)


def _hyper_v_sides(p, sc, numeric):
    n = p["n"]
    x, a = sc["x"], sc["a"]

    def entry(idx):
        return (1 + _prod(a[i] for i in idx)) * _delta([x[i] for i in idx])

    tensor = AlternatingTensor.from_function(n, 2 * n, entry)
    return [(hyperpfaffian(tensor), _dv(n, n, x, a))]


_register(
    name="hyper_v",
    summary="the square two-block determinant as an order-n hyperpfaffian",
    defaults={"n": 2},
    numeric_defaults={"n": 4},
    vectors=lambda p: [("x", 2 * p["n"]), ("a", 2 * p["n"])],
    sides=_hyper_v_sides,
    check=_check_even_n,
)


def _hyper_u_sides(p, sc, numeric):
    n = p["n"]
    x, y, a, b = sc["x"], sc["y"], sc["a"], sc["b"]

    def entry(idx):
        weight = _prod(a[i] for i in idx) + _prod(b[i] for i in idx)
        cross = _prod(
            y[idx[s]] * x[idx[t]] - x[idx[s]] * y[idx[t]]
            for s in range(n)
            for t in range(s + 1, n)
        )
        return weight * cross

    tensor = AlternatingTensor.from_function(n, 2 * n, entry)
    return [(hyperpfaffian(tensor), _du(n, n, x, y, a, b))]


_register(
    name="hyper_u",
    summary="the square bidegree determinant as an order-n hyperpfaffian",
    defaults={"n": 2},
    numeric_defaults={"n": 4},
    vectors=lambda p: [("x", 2 * p["n"]), ("y", 2 * p["n"]), ("a", 2 * p["n"]), ("b", 2 * p["n"])],
    sides=_hyper_u_sides,
    check=_check_even_n,
)


def _compo_sides(p, sc, numeric):
    n, r = p["n"], p["r"]
    m = n // 2
    a = _skew_from(sc["a"], n * r)
    lhs = hyperpfaffian(blocked_tensor(a, n))
    rhs = Fraction(factorial(m * r), factorial(m) ** r * factorial(r)) * pfaffian(a)
    return [(lhs, rhs)]


_register(
    name="compo",
    summary="hyperpfaffian of the subpfaffian tensor is a multiple of the Pfaffian",
    defaults={"n": 2, "r": 2},
    numeric_defaults={"n": 2, "r": 3},
    vectors=lambda p: [("a", (p["n"] * p["r"]) * (p["n"] * p["r"] - 1) // 2)],
    sides=_compo_sides,
    check=_check_even_block,
    symbolic_cases=({"n": 2, "r": 2}, {"n": 2, "r": 3}, {"n": 4, "r": 1}),
)


# ---------------------------------------------------------------------------
# rectangle Schur-function corollaries and the coefficient matrix


def _det_schur_sides(p, sc, numeric):
    n, q, e = p["n"], p["q"], p["e"]
    x, y, z = sc["x"], sc["y"], sc["z"]
    cell = Partition.box(q + 1, e + n - 1)
    nmat = RingMatrix(
        n, n, [_schur(cell, [x[i], y[j]] + z) for i in range(n) for j in range(n)]
    )
    lhs = det(nmat)
    rhs = (
        _sign(n * (n - 1) // 2)
        * _delta(x)
        * _delta(y)
        * _pow(_schur(Partition.box(q, e + n), z), n - 1)
        * _schur(Partition.box(q + n, e), x + y + z)
    )
    return [(lhs, rhs)]


_register(
    name="det_schur",
    summary="determinant of rectangle Schur polynomials at merged alphabets",
    defaults={"n": 2, "q": 0, "e": 1, "zlen": 1},
    numeric_defaults={"n": 2, "q": 1, "e": 1, "zlen": 2},
    vectors=lambda p: [("x", p["n"]), ("y", p["n"]), ("z", p["zlen"])],
    sides=_det_schur_sides,
    check=_check_nonneg,
)


def _pf_schur_sides(p, sc, numeric):
    n, q, s, e, f = p["n"], p["q"], p["s"], p["e"], p["f"]
    x, z, w = sc["x"], sc["z"], sc["w"]
    cz = Partition.box(q + 1, e + n - 1)
    cw = Partition.box(s + 1, f + n - 1)
    skew = SkewMatrix.from_upper_function(
        2 * n,
        lambda i, j: (x[j] - x[i]) * _schur(cz, [x[i], x[j]] + z) * _schur(cw, [x[i], x[j]] + w),
    )
    lhs = pfaffian(skew)
    rhs = (
        _delta(x)
        * _pow(_schur(Partition.box(q, e + n), z), n - 1)
        * _pow(_schur(Partition.box(s, f + n), w), n - 1)
        * _schur(Partition.box(n + q, e), x + z)
        * _schur(Partition.box(n + s, f), x + w)
    )
    return [(lhs, rhs)]


_register(
    name="pf_schur",
    summary="Pfaffian of rectangle Schur entries factors into four rectangle Schurs",
    defaults={"n": 2, "q": 0, "s": 0, "e": 1, "f": 0, "zlen": 1, "wlen": 0},
    numeric_defaults={"n": 2, "q": 1, "s": 0, "e": 1, "f": 1, "zlen": 2, "wlen": 1},
    vectors=lambda p: [("x", 2 * p["n"]), ("z", p["zlen"]), ("w", p["wlen"])],
    sides=_pf_schur_sides,
    check=_check_nonneg,
)


def _pf_schur2_sides(p, sc, numeric):
    n, e, f = p["n"], p["e"], p["f"]
    x, z, w = sc["x"], sc["z"], sc["w"]
    skew = SkewMatrix.from_upper_function(
        2 * n,
        lambda i, j: (x[j] - x[i])
        * h_complete(e + n - 1, [x[i], x[j]] + z)
        * h_complete(f + n - 1, [x[i], x[j]] + w),
    )
    lhs = pfaffian(skew)
    rhs = (
        _delta(x)
        * _schur(Partition.box(n, e), x + z)
        * _schur(Partition.box(n, f), x + w)
    )
    return [(lhs, rhs)]


_register(
    name="pf_schur2",
    summary="complete-homogeneous specialization: two rectangle Schurs on the right",
    defaults={"n": 2, "e": 1, "f": 0, "zlen": 1, "wlen": 0},
    numeric_defaults={"n": 2, "e": 1, "f": 1, "zlen": 2, "wlen": 2},
    vectors=lambda p: [("x", 2 * p["n"]), ("z", p["zlen"]), ("w", p["wlen"])],
    sides=_pf_schur2_sides,
    check=_check_nonneg,
)


def _pf_schur3_sides(p, sc, numeric):
    n, e, f = p["n"], p["e"], p["f"]
    z, w = sc["z"], sc["w"]
    pairs = []
    mus = partitions_in_box(n, e)
    nus = partitions_in_box(n, f)
    for lam in partitions_in_box(2 * n, e + f):
        lhs = Fraction(0)
        for mu in mus:
            for nu in nus:
                c = lr_bruteforce(lam, mu, nu)
                if c:
                    lhs = lhs + c * _schur(mu.complement(n, e), z) * _schur(
                        nu.complement(n, f), w
                    )
        idx = index_set(lam, 2 * n)
        skew = SkewMatrix.from_upper_function(
            2 * n, lambda s, t: b_coeff(idx[s], idx[t], n, e, f, z, w)
        )
        pairs.append((lhs, pfaffian(skew)))
    return pairs


_register(
    name="pf_schur3",
    summary="coefficient-matrix subpfaffians generate rectangle LR sums",
    defaults={"n": 1, "e": 1, "f": 1},
    numeric_defaults={"n": 1, "e": 2, "f": 2},
    vectors=lambda p: [("z", p["n"]), ("w", p["n"])],
    sides=_pf_schur3_sides,
    check=_check_nonneg,
    symbolic_cases=({"n": 1, "e": 1, "f": 1}, {"n": 1, "e": 2, "f": 2}),
)


def _minor_sum_sides(p, sc, numeric):
    n, nn = p["n"], p["N"]
    x = _matrix_from(sc["x"], 2 * n, nn)
    a = _skew_from(sc["a"], nn)
    rows = tuple(range(2 * n))
    lhs = Fraction(0)
    for idx in combinations(range(nn), 2 * n):
        lhs = lhs + sub_pfaffian(a, idx) * det(x.minor(rows, idx))
    return [(lhs, congruence_pfaffian(x, a))]


_register(
    name="minor_sum",
    summary="sum of subpfaffians times maximal minors equals the congruence Pfaffian",
    defaults={"n": 1, "N": 3},
    numeric_defaults={"n": 2, "N": 7},
    vectors=lambda p: [("x", 2 * p["n"] * p["N"]), ("a", p["N"] * (p["N"] - 1) // 2)],
    sides=_minor_sum_sides,
    check=_check_minor_sum,
    symbolic_cases=({"n": 1, "N": 3}, {"n": 2, "N": 5}),
)


# Principal matrix dimension per identity, used to cap symbolic mode at
# desk scale (polynomial term growth is multiplicative in these sizes).
MAIN_DIM = {
    "cauchy": lambda p: p["n"],
    "schur": lambda p: 2 * p["n"],
    "special1": lambda p: 2 * p["n"],
    "special2": lambda p: 2 * p["n"],
    "main1": lambda p: 2 * p["n"] + p["p"] + p["q"],
    "main2": lambda p: 2 * p["n"] + max(p["p"] + p["q"], p["r"] + p["s"]),
    "main3": lambda p: 2 * p["n"] + p["p"],
    "main4": lambda p: 2 * p["n"] + max(p["p"], p["q"]),
    "cauchy1": lambda p: max(p["n"], p["k"]),
    "schur1": lambda p: max(2 * p["n"], p["k"], p["l"]),
    "prop_n2": lambda p: 4 + max(p["p"] + p["q"], p["r"] + p["s"]),
    "rel_v1": lambda p: p["p"] + p["q"],
    "rel_v2": lambda p: p["p"] + p["q"],
    "det_dodgson": lambda p: p["n"],
    "pf_dodgson": lambda p: 2 * p["n"],
    "homog1": lambda p: 2 * p["n"] + max(p["p"] + p["q"], p["r"] + p["s"]),
    "homog2": lambda p: 2 * p["n"] + p["p"] + p["q"],
    "pf_det": lambda p: 2 * p["n"],
    "rel_uv1": lambda p: p["p"] + p["q"],
    "rel_uv2": lambda p: p["p"] + p["q"],
    "rel_uw1": lambda p: 2 * p["n"],
    "rel_uw2": lambda p: 2 * p["n"] + 1,
    "variation1": lambda p: 2 * p["n"] + p["p"] + p["q"],
    "variation2": lambda p: 2 * p["n"] + max(p["p"] + p["q"], p["r"] + p["s"]),
    "sundquist": lambda p: 2 * p["n"],
    "rel_fv": lambda p: p["p"] + p["q"],
    "rel_gh": lambda p: p["p"] + p["q"],
    "littlewood": lambda p: p["n"],
    "cauchy_binet": lambda p: p["N"],
    "minor_Dr": lambda p: p["r"],
    "minor_BC": lambda p: p["r"],
    "another1": lambda p: max(p["n"], p["p"] + p["q"] + 2),
    "another2": lambda p: max(p["n"], p["p"] + 2),
    "plucker": lambda p: p["m"] + 2,
    "plucker_vw": lambda p: p["p"] + p["q"] + 2,
    "special_pf": lambda p: p["n"] * p["r"],
    "special_hyppf": lambda p: p["n"] * p["r"],
    "hyper_v": lambda p: 2 * p["n"],
    "hyper_u": lambda p: 2 * p["n"],
    "compo": lambda p: p["n"] * p["r"],
    "det_schur": lambda p: p["n"] + p["q"],
    "pf_schur": lambda p: max(2 * p["n"], p["n"] + p["q"], p["n"] + p["s"]),
    "pf_schur2": lambda p: 2 * p["n"],
    "pf_schur3": lambda p: 2 * p["n"],
    "minor_sum": lambda p: p["N"],
}


def registry():
    """Deterministic, complete list of identity keys."""
    return list(REGISTRY)


def get_spec(name):
    spec = REGISTRY.get(name)
    if spec is None:
        raise KeyError(name)
    return spec
