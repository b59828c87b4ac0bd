"""Exact integer polynomial algebra.

A polynomial is a tuple of arbitrary-precision integer coefficients,
``coeffs[i]`` the coefficient of x^i; trailing zeros are stripped so the
leading coefficient is nonzero (the zero polynomial has an empty tuple).

Provides resultants (fraction-free Sylvester determinants), discriminants,
shifts f(x+a), p-adic Newton polygons, the root-difference polynomial whose
slopes are the pairwise root-distance valuations, the classical resolvent
cubic of a quartic, and cycle types via distinct-degree factorization over
F_ell.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime, ord_p
from .errors import InconsistencyError


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "IntPoly(0)"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            term = "x" if i == 1 else f"x^{i}" if i else ""
            mag = abs(c)
            body = term if (mag == 1 and i) else (f"{mag}*{term}" if i else f"{mag}")
            parts.append(("- " if c < 0 else "+ " if parts else "") + body)
        return "IntPoly(" + " ".join(parts) + ")"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluate by Horner; exact for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, a: int) -> "IntPoly":
        """The polynomial f(x+a), computed exactly by in-place Taylor steps."""
        cs = list(self.coeffs)
        n = len(cs)
        for j in range(n - 1):
            for i in range(n - 2, j - 1, -1):
                cs[i] += a * cs[i + 1]
        return IntPoly(cs)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> list[str]:
        """Decimal coefficient strings, constant term first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, payload) -> "IntPoly":
        if not isinstance(payload, list):
            raise ValueError("polynomial payload must be a list of coefficients")
        return cls([int(c) for c in payload])


def shift(f: IntPoly, a: int) -> IntPoly:
    return f.shift(a)


# ---------------------------------------------------------------------------
# resultants and discriminants


def _bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant; all divisions below are exact."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Sylvester-matrix resultant of two nonzero integer polynomials."""
    if f.is_zero() or g.is_zero():
        raise InconsistencyError("resultant requires nonzero polynomials")
    n, m = f.degree, g.degree
    if n == 0:
        return f.constant**m
    if m == 0:
        return g.constant**n
    size = n + m
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    rows = []
    for i in range(m):
        rows.append([0] * i + fd + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gd + [0] * (size - m - 1 - i))
    return _bareiss_det(rows)


def discriminant(f: IntPoly) -> int:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, f.leading)
    if rem:
        raise AssertionError("discriminant division not exact")
    return q


# ---------------------------------------------------------------------------
# Newton polygons


@dataclass(frozen=True)
class NewtonPolygon:
    """Slope/multiplicity pairs (slopes strictly increasing) plus the
    multiplicity of the infinite slope coming from trailing zero
    coefficients (roots at 0)."""

    segments: tuple[tuple[Fraction, int], ...]
    infinite_mult: int = 0

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.segments) + self.infinite_mult

    def largest_finite_slope(self) -> Fraction:
        if not self.segments:
            raise InconsistencyError("polygon has no finite slope")
        return self.segments[-1][0]

    def slope_multiset(self) -> list[Fraction]:
        out: list[Fraction] = []
        for s, m in self.segments:
            out.extend([s] * m)
        return out

    def to_json(self) -> dict:
        return {
            "segments": [{"slope": str(s), "multiplicity": m} for s, m in self.segments],
            "infinite_multiplicity": self.infinite_mult,
        }


def newton_polygon(f: IntPoly, p: int) -> NewtonPolygon:
    """Lower convex hull of (i, ord_p of the x^(n-i) coefficient).

    Slopes are the valuations of the roots, counted with multiplicity;
    a factor x^t shows up as infinite-slope multiplicity t.
    """
    if f.is_zero():
        raise InconsistencyError("newton polygon of the zero polynomial")
    n = f.degree
    t = 0
    while f.coeffs[t] == 0:
        t += 1
    # x-coordinate measured from the leading coefficient
    pts = [(n - j, ord_p(c, p)) for j in range(n, t - 1, -1) if (c := f.coeffs[j]) != 0]
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it sits on or above the chord hull[-2] -> pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    segments = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        segments.append((Fraction(y2 - y1, x2 - x1), x2 - x1))
    return NewtonPolygon(tuple(segments), t)


# ---------------------------------------------------------------------------
# root differences


def _interpolate_int(points: list[tuple[int, int]]) -> list[int]:
    """Exact interpolation through integer points via Newton's divided
    differences; asserts the result has integer coefficients."""
    xs = [Fraction(x) for x, _ in points]
    coefs = [Fraction(y) for _, y in points]
    k = len(points)
    for j in range(1, k):
        for i in range(k - 1, j - 1, -1):
            coefs[i] = (coefs[i] - coefs[i - 1]) / (xs[i] - xs[i - j])
    # expand the Newton form by Horner: acc <- acc*(x - x_i) + c_i
    out = [Fraction(0)] * k
    for i in range(k - 1, -1, -1):
        new = [Fraction(0)] * k
        for d in range(k - 1):
            new[d + 1] += out[d]
            new[d] -= xs[i] * out[d]
        new[0] += coefs[i]
        out = new
    ints = []
    for c in out:
        if c.denominator != 1:
            raise AssertionError("interpolation produced a non-integer coefficient")
        ints.append(c.numerator)
    return ints


def root_diff_poly(f: IntPoly) -> IntPoly:
    """Polynomial of degree n(n-1) whose roots are the differences of the
    roots of f (i != j), via Res_y(f(y), f(x+y)) with the exact x^n factor
    removed.  Its Newton polygon at p lists the valuations ord_p(a_i - a_j).
    """
    n = f.degree
    if n < 2 or not f.is_monic():
        raise ValueError("root_diff_poly needs a monic polynomial of degree >= 2")
    if discriminant(f) == 0:
        raise InconsistencyError("polynomial is not squarefree")
    npts = n * n + 1
    points = [(t, resultant(f, f.shift(t))) for t in range(npts)]
    full = _interpolate_int(points)
    if any(full[:n]) or len(full) != n * n + 1:
        raise AssertionError("resultant lacks the expected x^n factor")
    return IntPoly(full[n:])


# ---------------------------------------------------------------------------
# resolvent cubic


def resolvent_cubic(g: IntPoly) -> IntPoly:
    """Classical resolvent cubic of a monic quartic, with roots the
    pair-sums a1*a2 + a3*a4 etc.; it shares its discriminant with g."""
    if g.degree != 4 or not g.is_monic():
        raise ValueError("resolvent cubic needs a monic quartic")
    d, c, b, a, _ = g.coeffs
    return IntPoly([-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1])


# ---------------------------------------------------------------------------
# factorization degrees mod ell


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a: list[int], b: list[int], ell: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % ell
    return _fp_trim(out)


def _fp_divmod(a: list[int], b: list[int], ell: int) -> tuple[list[int], list[int]]:
    a = a[:]
    inv = pow(b[-1], ell - 2, ell)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        factor = a[-1] * inv % ell
        q[k] = factor
        for i, c in enumerate(b):
            a[i + k] = (a[i + k] - factor * c) % ell
        _fp_trim(a)
    return _fp_trim(q), a


def _fp_gcd(a: list[int], b: list[int], ell: int) -> list[int]:
    while b:
        _, a = _fp_divmod(a, b, ell)
        a, b = b, a
    if a:
        inv = pow(a[-1], ell - 2, ell)
        a = [c * inv % ell for c in a]
    return a


def _fp_powmod(base: list[int], e: int, mod: list[int], ell: int) -> list[int]:
    result = [1]
    b = _fp_divmod(base, mod, ell)[1]
    while e:
        if e & 1:
            result = _fp_divmod(_fp_mul(result, b, ell), mod, ell)[1]
        b = _fp_divmod(_fp_mul(b, b, ell), mod, ell)[1]
        e >>= 1
    return result


def cycle_type_mod_ell(T: IntPoly, ell: int) -> tuple[int, ...]:
    """Degrees of the irreducible factors of T mod ell, sorted descending.

    Uses distinct-degree factorization (gcds with x^(ell^d) - x); the
    factors themselves are never needed.  Requires the reduction to stay
    squarefree, i.e. disc(T) nonzero mod ell.
    """
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if T.degree < 1:
        raise ValueError("constant polynomial has no cycle type")
    if T.degree >= 2 and discriminant(T) % ell == 0:
        raise InconsistencyError("ramified or non-squarefree reduction")
    r = _fp_trim([c % ell for c in T.coeffs])
    if len(r) != T.degree + 1:
        raise InconsistencyError("leading coefficient vanishes mod ell")
    inv = pow(r[-1], ell - 2, ell)
    r = [c * inv % ell for c in r]
    parts: list[int] = []
    h = [0, 1]  # x
    d = 0
    while len(r) - 1 > 0:
        d += 1
        if 2 * d > len(r) - 1:
            parts.append(len(r) - 1)
            break
        h = _fp_powmod(h, ell, r, ell)
        diff = h[:]
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % ell
        g = _fp_gcd(r, _fp_trim(diff), ell)
        if len(g) - 1 > 0:
            parts.extend([d] * ((len(g) - 1) // d))
            r = _fp_divmod(r, g, ell)[0]
            h = _fp_divmod(h, r, ell)[1] if len(r) > 1 else h
    return tuple(sorted(parts, reverse=True))
