"""Root-separation bounds and "same extension of Q_p" precision certificates.

Everything is phrased with the additive valuation ord_p (ord_p(p) = 1);
multiplicative absolute-value statements convert via |x| = p^(-ord_p x).
For a monic irreducible f of degree n with d = ord_p(disc f) and
a = ord_p(constant term), the root-separation exponent
lambda = max ord_p(a_i - a_j) over root pairs satisfies
lambda <= (d - (n-2)a)/n, and a monic irreducible g of the same degree
congruent to f mod p^k is declared to give the same extension once k beats
the chosen method's bound (strict inequality):

    "prop1"      k > lambda + (d - a)/n
    "prop1bis"   k > (2d - (n-1)a)/n        (no root data needed)
    "safe"       k > lambda + d/n

The first two are the classical reported bounds; "safe" is the conservative
variant whose Krasner argument carries through even when the coefficient
difference is concentrated in the constant term (the aggressive bounds can
miss by exactly a/n in that corner; see the decision notes in the test
suite).  A certificate is only ever "certified" or "inconclusive": the
criteria are sufficient, never necessary, so "different extensions" is
never claimed.

Irreducibility over Q_p is not decided here; callers supply evidence that
this module validates:

  ("eisenstein-after-shift", a)   f(x+a) is Eisenstein at p
  ("irreducible-mod-q", q)        f stays irreducible mod the prime q
  ("single-slope",)               Newton polygon is one slope with
                                  denominator equal to deg f
  ("caller-assertion",)           accepted but flagged in the report
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arith import ORD_INFINITY, ord_p
from .errors import EvidenceError, InconsistencyError
from .polynomial import (
    IntPoly,
    cycle_type_mod_ell,
    discriminant,
    newton_polygon,
    resultant,
    root_diff_poly,
)

METHODS = ("prop1", "prop1bis", "safe")

EVIDENCE_KINDS = (
    "eisenstein-after-shift",
    "irreducible-mod-q",
    "single-slope",
    "caller-assertion",
)


def is_eisenstein(f: IntPoly, p: int) -> bool:
    """Monic, every lower coefficient divisible by p, constant term not by p^2."""
    if not f.is_monic() or f.degree < 1:
        return False
    if any(c % p for c in f.coeffs[:-1]):
        return False
    return f.constant % (p * p) != 0 and f.constant != 0


def validate_evidence(f: IntPoly, p: int, evidence, which: str) -> bool:
    """Check one evidence claim; returns True when the evidence was a bare
    caller assertion (so reports can flag it).  Raises EvidenceError when
    the claim fails to validate."""
    if not evidence or evidence[0] not in EVIDENCE_KINDS:
        raise EvidenceError(which, f"unknown evidence kind {evidence!r}")
    kind = evidence[0]
    if kind == "caller-assertion":
        return True
    if kind == "eisenstein-after-shift":
        a = int(evidence[1])
        if not is_eisenstein(f.shift(a), p):
            raise EvidenceError(which, f"shift by {a} is not Eisenstein at {p}")
        return False
    if kind == "irreducible-mod-q":
        q = int(evidence[1])
        try:
            parts = cycle_type_mod_ell(f, q)
        except InconsistencyError as exc:
            raise EvidenceError(which, f"reduction mod {q} is not squarefree") from exc
        if parts != (f.degree,):
            raise EvidenceError(which, f"reducible mod {q}: factor degrees {parts}")
        return False
    # single-slope: a one-segment polygon whose slope denominator equals the
    # degree forces total ramification of degree n, hence irreducibility.
    np = newton_polygon(f, p)
    if np.infinite_mult or len(np.segments) != 1:
        raise EvidenceError(which, "Newton polygon is not a single finite slope")
    slope, mult = np.segments[0]
    if mult != f.degree or slope.denominator != f.degree:
        raise EvidenceError(which, f"slope {slope} does not have denominator {f.degree}")
    return False


def _check_input(f: IntPoly, p: int) -> tuple[int, int, int]:
    if not f.is_monic():
        raise InconsistencyError("polynomial must be monic")
    n = f.degree
    if n < 2:
        raise InconsistencyError("degree must be at least 2")
    if f.constant == 0:
        raise InconsistencyError("constant term must be nonzero")
    disc = discriminant(f)
    if disc == 0:
        raise InconsistencyError("polynomial is not squarefree")
    return n, ord_p(disc, p), ord_p(f.constant, p)


def lambda_exact(f: IntPoly, p: int) -> Fraction:
    """max ord_p(a_i - a_j) over root pairs: the largest finite slope of the
    Newton polygon of the root-difference polynomial."""
    _check_input(f, p)
    return newton_polygon(root_diff_poly(f), p).largest_finite_slope()


def lambda_upper_bound(f: IntPoly, p: int) -> Fraction:
    """(d - (n-2)a)/n, valid whenever f is monic irreducible."""
    n, d, a = _check_input(f, p)
    return Fraction(d - (n - 2) * a, n)


def _strict_ceil(bound: Fraction) -> int:
    b = Fraction(bound)
    return b.numerator // b.denominator + 1


def _method_bound(f: IntPoly, p: int, method: str) -> Fraction:
    n, d, a = _check_input(f, p)
    if method == "prop1":
        return lambda_exact(f, p) + Fraction(d - a, n)
    if method == "prop1bis":
        return Fraction(2 * d - (n - 1) * a, n)
    if method == "safe":
        return lambda_exact(f, p) + Fraction(d, n)
    raise ValueError(f"method must be one of {METHODS}")


def precision_k(f: IntPoly, p: int, method: str = "prop1bis") -> int:
    """Smallest integer k beating the chosen method's bound (strict)."""
    return _strict_ceil(_method_bound(f, p, method))


@dataclass(frozen=True)
class PrecisionReport:
    n: int
    d: int
    a: int
    lam: Optional[Fraction]  # None when the root-difference slope was skipped
    k_prop1: Optional[int]
    k_prop1bis: int
    bound_prop1: Optional[Fraction]
    bound_prop1bis: Fraction
    method_used: str
    k_safe: Optional[int] = None
    bound_safe: Optional[Fraction] = None

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "d": str(self.d),
            "a": str(self.a),
            "lambda": str(self.lam) if self.lam is not None else "not computed",
            "k_prop1": self.k_prop1 if self.k_prop1 is not None else "unavailable",
            "k_prop1bis": self.k_prop1bis,
            "bound_prop1": str(self.bound_prop1) if self.bound_prop1 is not None else "unavailable",
            "bound_prop1bis": str(self.bound_prop1bis),
            "method_used": self.method_used,
        }
        if self.k_safe is not None:
            out["k_safe"] = self.k_safe
            out["bound_safe"] = str(self.bound_safe)
        return out


def precision_report(f: IntPoly, p: int, method: str = "prop1bis") -> PrecisionReport:
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    n, d, a = _check_input(f, p)
    b_bis = Fraction(2 * d - (n - 1) * a, n)
    k_bis = _strict_ceil(b_bis)
    if method == "prop1bis":
        return PrecisionReport(n, d, a, None, None, k_bis, None, b_bis, method)
    lam = lambda_exact(f, p)
    b1 = lam + Fraction(d - a, n)
    k1 = _strict_ceil(b1)
    if method == "safe":
        b_safe = lam + Fraction(d, n)
        return PrecisionReport(
            n, d, a, lam, k1, k_bis, b1, b_bis, method,
            k_safe=_strict_ceil(b_safe), bound_safe=b_safe,
        )
    return PrecisionReport(n, d, a, lam, k1, k_bis, b1, b_bis, method)


def resultant_margin(f: IntPoly, g: IntPoly, p: int) -> tuple:
    """Both sides of the reported resultant valuation inequality.

    lhs = ord_p(Res(f, g)) / n, rhs = a/n + min_i ord_p(b_i - a_i) over the
    non-leading coefficients; a shared root makes the lhs infinite.  The
    reported contract is lhs >= rhs.  Beware: when the minimizing difference
    sits at the constant coefficient, only the weighted form
    (see weighted_resultant_margin) is actually guaranteed.
    """
    if not (f.is_monic() and g.is_monic()) or f.degree != g.degree:
        raise InconsistencyError("need monic polynomials of equal degree")
    n = f.degree
    if f.constant == 0:
        raise InconsistencyError("constant term of f must be nonzero")
    r = resultant(f, g)
    lhs = ORD_INFINITY if r == 0 else Fraction(ord_p(r, p), n)
    diffs = [g.coeffs[i] - f.coeffs[i] for i in range(n)]
    mins = min((ord_p(di, p) for di in diffs), default=ORD_INFINITY)
    rhs = ORD_INFINITY if mins == ORD_INFINITY else Fraction(ord_p(f.constant, p), n) + mins
    return lhs, rhs


def weighted_resultant_margin(f: IntPoly, g: IntPoly, p: int) -> tuple:
    """Provably valid variant: rhs = min over powers i of
    ord_p(diff of x^i coefficients) + a*i/n, each difference weighted by the
    valuation of the root power it multiplies.

    lhs >= rhs holds whenever every root of f has valuation a/n (f
    irreducible over Q_p, or Eisenstein); for arbitrary monic integral f
    only the unweighted min of the difference valuations is a lower bound.
    """
    if not (f.is_monic() and g.is_monic()) or f.degree != g.degree:
        raise InconsistencyError("need monic polynomials of equal degree")
    n = f.degree
    if f.constant == 0:
        raise InconsistencyError("constant term of f must be nonzero")
    a = ord_p(f.constant, p)
    r = resultant(f, g)
    lhs = ORD_INFINITY if r == 0 else Fraction(ord_p(r, p), n)
    rhs = ORD_INFINITY
    for i in range(n):
        di = g.coeffs[i] - f.coeffs[i]
        if di:
            # the x^i difference multiplies a root power of valuation a*i/n
            term = ord_p(di, p) + Fraction(a * i, n)
            if term < rhs:
                rhs = term
    return lhs, rhs


@dataclass(frozen=True)
class Certificate:
    verdict: str  # "certified" | "inconclusive"
    k: int
    method_used: str
    congruence_order: object  # int or ORD_INFINITY
    caller_assertions: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        cong = self.congruence_order
        return {
            "verdict": self.verdict,
            "k": self.k,
            "method_used": self.method_used,
            "congruence_order": "infinity" if cong == ORD_INFINITY else int(cong),
            "caller_assertions": list(self.caller_assertions),
        }


def certify_same_extension(
    f: IntPoly,
    g: IntPoly,
    p: int,
    evidence_f,
    evidence_g,
    method: str = "prop1",
) -> Certificate:
    """Certificate that f and g generate the same extension of Q_p.

    Certified when both irreducibility evidences validate and g is congruent
    to f mod p^k for the chosen method's k.  Anything less is
    "inconclusive" -- never "different extensions", since the bounds are
    only sufficient.  Pass method="safe" for the conservative radius.
    """
    if f.degree != g.degree or not (f.is_monic() and g.is_monic()):
        raise InconsistencyError("need monic polynomials of equal degree")
    flagged = []
    if validate_evidence(f, p, evidence_f, "f"):
        flagged.append("f")
    if validate_evidence(g, p, evidence_g, "g"):
        flagged.append("g")
    k = precision_k(f, p, method)
    diffs = [b - a for a, b in zip(f.coeffs[:-1], g.coeffs[:-1])]
    cong = min((ord_p(di, p) for di in diffs), default=ORD_INFINITY)
    verdict = "certified" if cong >= k else "inconclusive"
    return Certificate(verdict, k, method, cong, tuple(flagged))
