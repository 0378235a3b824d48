"""Exact shortest-vector machinery.

Gram matrices are exact (integers or rationals).  Enumeration is
Fincke-Pohst: an exact LLL reduction of the Gram matrix, a rational
Cholesky decomposition, then depth-first interval enumeration with the
bound shrinking as shorter vectors appear.  No floating point anywhere.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg


@dataclass(frozen=True)
class GramForm:
    """Symmetric positive-definite matrix of an exact bilinear form."""

    matrix: tuple

    def __post_init__(self):
        if not linalg.is_positive_definite(self.matrix):
            raise ValueError("Gram matrix is not symmetric positive definite")

    @property
    def n(self):
        return len(self.matrix)


@dataclass(frozen=True)
class ShortVectorSet:
    """Minimum value and all attaining vectors, one per +- pair.

    Representatives are sign-normalized (first nonzero coordinate
    positive) and sorted lexicographically.
    """

    minimum: object
    vectors: tuple

    @property
    def count(self):
        return 2 * len(self.vectors)


@dataclass(frozen=True)
class WrReport:
    minimum: object
    count: int
    rank: int
    is_wr: bool
    is_strongly_wr: bool
    is_orthogonal_minimal_basis: bool
    witness: tuple | None
    vectors: tuple


def _matrix_of(gram):
    if isinstance(gram, GramForm):
        return [list(row) for row in gram.matrix]
    return [list(row) for row in gram]


def lll_reduce_gram(gram, delta=Fraction(3, 4)):
    """LLL on a quadratic form.

    Returns (g_reduced, u) with g_reduced = u^T * gram * u; the columns of
    the integer matrix u express the reduced basis in the input basis.
    """
    g = _matrix_of(gram)
    n = len(g)
    u = linalg.identity(n)

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        bstar = [Fraction(0)] * n
        for i in range(n):
            bstar[i] = Fraction(g[i][i])
            for j in range(i):
                acc = Fraction(g[i][j])
                for k in range(j):
                    acc -= mu[j][k] * mu[i][k] * bstar[k]
                mu[i][j] = acc / bstar[j]
                bstar[i] -= mu[i][j] ** 2 * bstar[j]
        return mu, bstar

    def addmul(k, j, r):
        # b_k <- b_k + r*b_j
        for t in range(n):
            u[t][k] += r * u[t][j]
        gkk = g[k][k] + 2 * r * g[k][j] + r * r * g[j][j]
        for t in range(n):
            if t != k:
                g[k][t] += r * g[j][t]
                g[t][k] = g[k][t]
        g[k][k] = gkk

    def swap(k, j):
        for t in range(n):
            u[t][k], u[t][j] = u[t][j], u[t][k]
        g[k], g[j] = g[j], g[k]
        for t in range(n):
            g[t][k], g[t][j] = g[t][j], g[t][k]

    k = 1
    while k < n:
        mu, bstar = gso()
        r = round(mu[k][k - 1])
        if r:
            addmul(k, k - 1, -r)
            mu, bstar = gso()
        if bstar[k] >= (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            for j in range(k - 2, -1, -1):
                r = round(mu[k][j])
                if r:
                    addmul(k, j, -r)
                    mu, _ = gso()
            k += 1
        else:
            swap(k, k - 1)
            k = max(k - 1, 1)
    return tuple(tuple(row) for row in g), tuple(tuple(row) for row in u)


def _cholesky(g):
    """Q(x) = sum_i q[i]*(x_i + sum_{j>i} mu[i][j]*x_j)^2, exact."""
    n = len(g)
    a = [[Fraction(g[i][j]) for j in range(n)] for i in range(n)]
    q = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        q[i] = a[i][i]
        if q[i] <= 0:
            raise ValueError("form is not positive definite")
        for j in range(i + 1, n):
            mu[i][j] = a[i][j] / q[i]
        for r in range(i + 1, n):
            for c in range(r, n):
                a[r][c] -= q[i] * mu[i][r] * mu[i][c]
    return q, mu


def _floor_sqrt(x):
    """floor(sqrt(x)) for a nonnegative int or Fraction."""
    if isinstance(x, int):
        return math.isqrt(x)
    return math.isqrt(x.numerator * x.denominator) // x.denominator


def _interval(c, rad2):
    """Integer range [lo, hi] of x with (x + c)^2 <= rad2 (c, rad2 exact)."""
    if rad2 < 0:
        return 1, 0
    s = _floor_sqrt(rad2)
    base = math.floor(-c)
    hi = base + s + 2
    while not (hi + c <= 0 or (hi + c) ** 2 <= rad2):
        hi -= 1
    lo = base - s - 2
    while not (lo + c >= 0 or (lo + c) ** 2 <= rad2):
        lo += 1
    return lo, hi


def _sign_normalize(v):
    for x in v:
        if x > 0:
            return tuple(v)
        if x < 0:
            return tuple(-y for y in v)
    return tuple(v)


def _as_min(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def shortest_vectors(gram) -> ShortVectorSet:
    """Exhaustive set of nonzero minimizers of v^T G v.

    LLL-reduce, Cholesky, then depth-first enumeration from the last
    coordinate; the search bound starts at the best reduced-basis diagonal
    entry and shrinks whenever a shorter vector appears.
    """
    g = _matrix_of(gram)
    n = len(g)
    if not linalg.is_positive_definite(g):
        raise ValueError("Gram matrix is not symmetric positive definite")
    gred, u = lll_reduce_gram(g)
    q, mu = _cholesky(gred)
    state = {"best": min(gred[i][i] for i in range(n)), "found": []}
    x = [0] * n

    def descend(level, used):
        murow = mu[level]
        c = Fraction(0)
        for j in range(level + 1, n):
            if x[j]:
                c += murow[j] * x[j]
        lo, hi = _interval(c, (state["best"] - used) / q[level])
        for xi in range(lo, hi + 1):
            d = xi + c
            tot = used + q[level] * d * d
            if tot > state["best"]:
                continue
            x[level] = xi
            if level == 0:
                if any(x):
                    if tot < state["best"]:
                        state["best"] = tot
                        state["found"] = [tuple(x)]
                    else:
                        state["found"].append(tuple(x))
            else:
                descend(level - 1, tot)
        x[level] = 0

    descend(n - 1, Fraction(0))
    vecs = set()
    for v in state["found"]:
        w = tuple(sum(u[i][j] * v[j] for j in range(n)) for i in range(n))
        vecs.add(_sign_normalize(w))
    return ShortVectorSet(_as_min(Fraction(state["best"])), tuple(sorted(vecs)))


def naive_shortest(gram, box_radius=None) -> ShortVectorSet:
    """Brute-force box scan; independent check of shortest_vectors.

    With box_radius=None the per-coordinate radii come from the dual
    bound v_i^2 <= B * (G^-1)_ii where B is the least diagonal entry of G,
    which provably contains every vector of value <= B.
    """
    g = _matrix_of(gram)
    n = len(g)
    if box_radius is not None:
        radii = [box_radius] * n
    else:
        bound = min(g[i][i] for i in range(n))
        ginv = linalg.invert_fraction(g)
        radii = [_floor_sqrt(Fraction(bound) * ginv[i][i]) for i in range(n)]
    best = None
    found = []
    for v in itertools.product(*[range(-r, r + 1) for r in radii]):
        if not any(v):
            continue
        val = sum(g[i][j] * v[i] * v[j] for i in range(n) for j in range(n))
        if best is None or val < best:
            best = val
            found = [v]
        elif val == best:
            found.append(v)
    vecs = sorted({_sign_normalize(v) for v in found})
    return ShortVectorSet(_as_min(Fraction(best)), tuple(vecs))


def gram_of_ideal(ideal) -> GramForm:
    """Gram matrix of the HNF basis columns under the field bilinear form."""
    h = ideal.hnf
    g0 = ideal.field.gram0
    n = len(h)
    cols = [[h[i][j] for i in range(n)] for j in range(n)]
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        ga = [sum(g0[i][j] * cols[a][j] for j in range(n)) for i in range(n)]
        for b in range(a, n):
            v = sum(ga[i] * cols[b][i] for i in range(n))
            out[a][b] = out[b][a] = v
    return GramForm(tuple(tuple(row) for row in out))


def wr_report(ideal) -> WrReport:
    """Enumerate the ideal lattice and decide the well-roundedness flags.

    is_wr: the minimal vectors contain n independent vectors.
    is_strongly_wr: some n minimal vectors form a basis of the lattice
    (determinant +-1 over the HNF basis).
    is_orthogonal_minimal_basis: such a basis exists with pairwise
    orthogonal vectors; when found it is reported as the witness.
    """
    gram = gram_of_ideal(ideal)
    sv = shortest_vectors(gram)
    n = gram.n
    reps = sv.vectors
    rank = linalg.rank_int([list(v) for v in reps])
    is_wr = rank == n
    g = gram.matrix
    witness = None
    strongly = False
    orthogonal = False
    if is_wr:
        for combo in itertools.combinations(reps, n):
            if abs(linalg.det_bareiss([list(v) for v in combo])) != 1:
                continue
            if not strongly:
                strongly = True
                witness = combo
            ortho = all(
                sum(g[i][j] * combo[a][i] * combo[b][j]
                    for i in range(n) for j in range(n)) == 0
                for a in range(n) for b in range(a + 1, n))
            if ortho:
                witness = combo
                orthogonal = True
                break
    return WrReport(
        minimum=sv.minimum,
        count=sv.count,
        rank=rank,
        is_wr=is_wr,
        is_strongly_wr=strongly,
        is_orthogonal_minimal_basis=orthogonal,
        witness=witness,
        vectors=reps,
    )
