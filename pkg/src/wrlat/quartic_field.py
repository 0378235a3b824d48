"""Cyclic quartic field Q(beta), beta = sqrt(a*(d - b*sqrt(d))).

Parameters: a squarefree odd nonzero, d = b^2 + c^2 squarefree with
b, c > 0, gcd(a, d) = 1.  The field is totally real for a > 0 and totally
imaginary for a < 0.  Elements are exact rational coordinate quadruples
(s1, s2, s3, s4) over the basis {1, sqrt(d), beta, sigma(beta)}, in which
the multiplication table closes:

    sqrt(d)^2 = d                 beta*sqrt(d)        = c*sb - b*beta
    beta^2    = a*d - a*b*sqrt(d) sb*sqrt(d)          = c*beta + b*sb
    sb^2      = a*d + a*b*sqrt(d) beta*sb             = a*c*sqrt(d)

(writing sb for sigma(beta)).  The Galois generator acts by
(s1, s2, s3, s4) -> (s1, -s2, -s4, s3).  The scalar product of the
embedded lattice is Tr(x * tau(y)) with tau = identity for a > 0 and
tau = sigma^2 (complex conjugation) for a < 0; in coordinates it is
diagonal for both signatures:

    <x, y> = 4*(x1*y1 + d*x2*y2 + |a|*d*(x3*y3 + x4*y4)).
"""

import math
from fractions import Fraction

from . import linalg
from .lattice_reduce import GramForm
from .numtheory import factorize


def quartic_violation(a: int, b: int, c: int, d: int):
    """None when (a, b, c, d) is admissible, else the violated constraint."""
    if a == 0 or a % 2 == 0:
        return "a must be odd and nonzero"
    if not factorize(abs(a)).is_squarefree():
        return "a = %d is not squarefree" % a
    if b <= 0 or c <= 0:
        return "b and c must be positive"
    if d != b * b + c * c:
        return "d must equal b^2 + c^2 (got d=%d, b^2+c^2=%d)" % (d, b * b + c * c)
    if not factorize(d).is_squarefree():
        return "d = %d is not squarefree" % d
    if math.gcd(a, d) != 1:
        return "gcd(a, d) = %d is not 1" % math.gcd(a, d)
    return None


# integral bases ("case" I..V), coordinates over {1, sqrt(d), beta, sb}
_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)


class QuarticField:
    def __init__(self, a: int, b: int, c: int, d: int):
        reason = quartic_violation(a, b, c, d)
        if reason is not None:
            raise ValueError("invalid quartic parameters (%d,%d,%d,%d): %s"
                             % (a, b, c, d, reason))
        self.n = 4
        self.a, self.b, self.c, self.d = a, b, c, d
        self.totally_real = a > 0
        # defining polynomial x^4 - 2ad x^2 + a^2 c^2 d
        self.df = (a * a * c * c * d, 0, -2 * a * d, 0)
        if d % 2 == 0:
            self.basis_case = "I"
            self.disc = 2 ** 8 * a * a * d ** 3
            self.index = a * a * b * b * c
        elif b % 2 == 1:
            self.basis_case = "II"
            self.disc = 2 ** 6 * a * a * d ** 3
            self.index = 2 * a * a * b * b * c
        elif (a + b) % 4 == 3:
            self.basis_case = "III"
            self.disc = 2 ** 4 * a * a * d ** 3
            self.index = 4 * a * a * b * b * c
        else:
            self.basis_case = "IV" if (a + c) % 4 == 0 else "V"
            self.disc = a * a * d ** 3
            self.index = 16 * a * a * b * b * c
        assert self.index ** 2 * self.disc == 256 * a ** 6 * b ** 4 * c * c * d ** 3
        self.one = self._vec(1, 0, 0, 0)
        self.sqrt_d = self._vec(0, 1, 0, 0)
        self.beta = self._vec(0, 0, 1, 0)
        self.sigma_beta = self._vec(0, 0, 0, 1)
        # products of basis elements (indices over {1, sqrt_d, beta, sb})
        self._table = {
            (1, 1): self._vec(d, 0, 0, 0),
            (1, 2): self._vec(0, 0, -b, c),
            (1, 3): self._vec(0, 0, c, b),
            (2, 2): self._vec(a * d, -a * b, 0, 0),
            (2, 3): self._vec(0, a * c, 0, 0),
            (3, 3): self._vec(a * d, a * b, 0, 0),
        }
        assert self.eval_df(self.beta) == self._vec(0, 0, 0, 0)
        self._build_integral_tables()

    @staticmethod
    def _vec(s1, s2, s3, s4):
        return (Fraction(s1), Fraction(s2), Fraction(s3), Fraction(s4))

    # -- arithmetic ----------------------------------------------------------

    def add(self, x, y):
        return tuple(u + v for u, v in zip(x, y))

    def sub(self, x, y):
        return tuple(u - v for u, v in zip(x, y))

    def neg(self, x):
        return tuple(-u for u in x)

    def scale(self, x, k):
        return tuple(k * u for u in x)

    def from_int(self, k):
        return self._vec(k, 0, 0, 0)

    def mul(self, x, y):
        out = [x[0] * y[0], x[0] * y[1] + x[1] * y[0],
               x[0] * y[2] + x[2] * y[0], x[0] * y[3] + x[3] * y[0]]
        for i in range(1, 4):
            for j in range(1, 4):
                f = x[i] * y[j]
                if not f:
                    continue
                w = self._table[(i, j) if i <= j else (j, i)]
                out[0] += f * w[0]
                out[1] += f * w[1]
                out[2] += f * w[2]
                out[3] += f * w[3]
        return tuple(out)

    def eval_df(self, x):
        e0, _, e2, _ = self.df
        x2 = self.mul(x, x)
        x4 = self.mul(x2, x2)
        return self.add(self.add(x4, self.scale(x2, e2)), self.from_int(e0))

    # -- Galois action and invariants ------------------------------------------

    def sigma(self, x):
        return (x[0], -x[1], -x[3], x[2])

    def conjugates(self, x):
        out = [x]
        for _ in range(3):
            out.append(self.sigma(out[-1]))
        return out

    def trace(self, x) -> Fraction:
        return 4 * x[0]

    def norm(self, x) -> Fraction:
        prod = self.one
        for conj in self.conjugates(x):
            prod = self.mul(prod, conj)
        assert prod[1] == prod[2] == prod[3] == 0
        return prod[0]

    def bilinear(self, x, y) -> Fraction:
        """Tr(x*tau(y)); diagonal in the canonical coordinates."""
        w = abs(self.a) * self.d
        return 4 * (x[0] * y[0] + self.d * x[1] * y[1]
                    + w * (x[2] * y[2] + x[3] * y[3]))

    def length_sq(self, x) -> Fraction:
        return self.bilinear(x, x)

    def gram_form(self, basis) -> GramForm:
        if len(basis) != 4 or linalg.det_fraction([list(e) for e in basis]) == 0:
            raise ValueError("basis must consist of 4 independent elements")
        return GramForm(tuple(tuple(self.bilinear(x, y) for y in basis) for x in basis))

    # -- integral structure ------------------------------------------------------

    def _integral_basis_vectors(self):
        one, sd, beta, sb = self.one, self.sqrt_d, self.beta, self.sigma_beta
        half_1_sd = self._vec(_HALF, _HALF, 0, 0)
        if self.basis_case == "I":
            return (one, sd, sb, beta)
        if self.basis_case == "II":
            return (one, half_1_sd, sb, beta)
        if self.basis_case == "III":
            return (one, half_1_sd,
                    self._vec(0, 0, _HALF, _HALF), self._vec(0, 0, -_HALF, _HALF))
        if self.basis_case == "IV":
            return (one, half_1_sd,
                    self._vec(_QUARTER, _QUARTER, -_QUARTER, _QUARTER),
                    self._vec(_QUARTER, -_QUARTER, _QUARTER, _QUARTER))
        return (one, half_1_sd,
                self._vec(_QUARTER, _QUARTER, _QUARTER, _QUARTER),
                self._vec(_QUARTER, -_QUARTER, -_QUARTER, _QUARTER))

    def _build_integral_tables(self):
        self.integral_basis = self._integral_basis_vectors()
        cols = [[e[i] for e in self.integral_basis] for i in range(4)]
        self._to_int_matrix = linalg.invert_fraction(cols)
        gram0 = [[self.bilinear(x, y) for y in self.integral_basis]
                 for x in self.integral_basis]
        assert all(v.denominator == 1 for row in gram0 for v in row)
        self.gram0 = tuple(tuple(int(v) for v in row) for row in gram0)
        assert linalg.det_bareiss(self.gram0) == self.disc
        table = []
        for gi in self.integral_basis:
            row = []
            for gj in self.integral_basis:
                row.append(self.to_integral_exact(self.mul(gi, gj)))
            table.append(tuple(row))
        self.mul_table = tuple(table)
        self.sigma_int = tuple(zip(*[self.to_integral_exact(self.sigma(g))
                                     for g in self.integral_basis]))

    def to_integral(self, x):
        return tuple(linalg.mat_vec(self._to_int_matrix, list(x)))

    def is_integral(self, x) -> bool:
        return all(v.denominator == 1 for v in self.to_integral(x))

    def to_integral_exact(self, x):
        coords = self.to_integral(x)
        if any(v.denominator != 1 for v in coords):
            raise ValueError("element is not integral: %r" % (x,))
        return tuple(int(v) for v in coords)

    def from_integral(self, coords):
        out = self.from_int(0)
        for k, g in zip(coords, self.integral_basis):
            out = self.add(out, self.scale(g, k))
        return out

    def imul(self, u, v):
        out = [0, 0, 0, 0]
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.mul_table[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                f = ui * vj
                w = row[j]
                out[0] += f * w[0]
                out[1] += f * w[1]
                out[2] += f * w[2]
                out[3] += f * w[3]
        return tuple(out)

    def isigma(self, u):
        s = self.sigma_int
        return tuple(sum(s[i][j] * u[j] for j in range(4)) for i in range(4))

    @property
    def params(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    @property
    def key(self) -> str:
        return "quartic:%d,%d,%d,%d" % self.params

    def __repr__(self):
        return "QuarticField(a=%d, b=%d, c=%d, d=%d)" % self.params

    def __eq__(self, other):
        return isinstance(other, QuarticField) and other.params == self.params

    def __hash__(self):
        return hash(("quartic",) + self.params)


def new_quartic(a: int, b: int, c: int, d: int) -> QuarticField:
    return QuarticField(a, b, c, d)
