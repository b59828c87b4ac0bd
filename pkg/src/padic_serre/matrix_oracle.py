"""Derivation of an explicit copy of the triple cover inside SL_3(F_25),
used as an independent oracle for the frozen class data in rep3a6.

Construction, from scratch each run (deterministic, a few seconds):

1.  Generate SL_2(F_5) (120 matrices) and push it through the symmetric
    square: a 60-element icosahedral subgroup H of SL_3(F_5), acting
    irreducibly in dimension 3.
2.  Inside H, locate a Klein four-subgroup and its normalizer K, a
    12-element tetrahedral subgroup.
3.  The cover is generated by H together with one extra involution M that
    normalizes K *up to central scalars*: conjugation by M sends a
    tetrahedral element k to chi(k) * theta(k), where theta is an outer
    automorphism of K and chi a cube-root-of-unity character (K has three
    complements to the center inside its scalar extension, and conjugation
    may rotate them; chi kills the Klein subgroup, so only the order-3
    generator's image picks up a scalar).  Such an M is an intertwiner
    between two irreducible K-representations, hence the unique-up-to-
    scalar solution of the linear system M*k = chi(k)*theta(k)*M.  We scan
    the finitely many candidate images, solve each system over F_25,
    rescale to determinant one (three choices, differing by a cube root of
    unity -- exactly the three lifts), and keep the scaling of order 2.
4.  The closure of H and M has order 1080 with center of order 3: the
    triple cover.  Everything else the scan can produce is rejected by
    that count (an inner twist reproduces H itself, and the chi-trivial
    outer twists land in the 120-element symmetric-group extension that
    char 5 happens to admit), so the scan is self-verifying.

Elements are then classified by (order, trace): order and trace separate
all thirteen coarse classes, with the scalar z*I assigned to class "3a"
for the deterministic cube root z (the trace-3z convention).
"""

from __future__ import annotations

from functools import lru_cache

from .arith import Fp2Elem, cube_root_of_unity, fp2_make
from .errors import InconsistencyError
from .matrices import (
    Matrix,
    charpoly3_reversed,
    closure,
    identity,
    mat,
    mat_inverse,
    mat_mul,
    mat_order,
    scalar_mul,
    trace,
)
from .rep3a6 import sym_square


def _sl2_f5() -> set[Matrix]:
    model = fp2_make(5)
    one, zero = model.one(), model.zero()
    gens = [
        mat([[one, one], [zero, one]]),
        mat([[one, zero], [one, one]]),
    ]
    group = closure(gens)
    if len(group) != 120:
        raise AssertionError(f"SL_2(F_5) closure has {len(group)} elements")
    return group


def _mat_key(m: Matrix):
    return tuple((x.c0, x.c1) for row in m for x in row)


def _icosahedral_subgroup() -> list[Matrix]:
    h = {sym_square(m) for m in _sl2_f5()}
    if len(h) != 60:
        raise AssertionError(f"expected 60 elements, got {len(h)}")
    return sorted(h, key=_mat_key)


def _tetrahedral_normalizer(h: list[Matrix]) -> list[Matrix]:
    p = h[0][0][0].p
    e = identity(p, 3)
    invol = [m for m in h if mat_order(m, 10) == 2]
    u = invol[0]
    v = next(m for m in invol if m not in (u,) and mat_mul(u, m) == mat_mul(m, u))
    v4 = {e, u, v, mat_mul(u, v)}
    hset = set(h)
    k = [
        m
        for m in h
        if all(mat_mul(mat_mul(m, x), mat_inverse(m)) in v4 for x in v4)
    ]
    if len(k) != 12:
        raise AssertionError(f"normalizer has {len(k)} elements, expected 12")
    assert set(mat_mul(a, b) for a in k for b in k) <= hset
    return sorted(k, key=_mat_key)


def _nullspace_dim1(eqs: list[list[Fp2Elem]], p: int):
    """Solve a homogeneous system over F_{p^2}; returns a nonzero solution
    when the nullspace is exactly one-dimensional, else None."""
    zero = Fp2Elem(p, 0, 0)
    rows = [row[:] for row in eqs]
    ncols = 9
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != zero), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != zero:
                factor = rows[i][c]
                rows[i] = [xi - factor * xr for xi, xr in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        return None
    sol = [zero] * ncols
    sol[free[0]] = Fp2Elem(p, 1, 0)
    for row, c in zip(rows, pivots):
        sol[c] = -row[free[0]]
    return sol


def _intertwiners(k1: Matrix, im1: Matrix, k2: Matrix, im2: Matrix, p: int):
    """Nonzero M with M*k1 = im1*M and M*k2 = im2*M, when unique up to scalar."""
    eqs = []
    for k, im in ((k1, im1), (k2, im2)):
        for i in range(3):
            for j in range(3):
                row = [Fp2Elem(p, 0, 0)] * 9
                # (M k)_ij = sum_t M_it k_tj ; (im M)_ij = sum_t im_it M_tj
                for t in range(3):
                    row[3 * i + t] = row[3 * i + t] + k[t][j]
                    row[3 * t + j] = row[3 * t + j] - im[i][t]
                eqs.append(row)
    sol = _nullspace_dim1(eqs, p)
    if sol is None:
        return None
    return mat([sol[0:3], sol[3:6], sol[6:9]])


@lru_cache(maxsize=None)
def triple_cover_group() -> list[Matrix]:
    """The 1080-element cover in SL_3(F_25), sorted deterministically."""
    p = 5
    h = _icosahedral_subgroup()
    k = _tetrahedral_normalizer(h)
    k1 = next(m for m in k if mat_order(m, 15) == 2)
    k2 = next(m for m in k if mat_order(m, 15) == 3)
    order2 = [m for m in k if mat_order(m, 15) == 2]
    order3 = [m for m in k if mat_order(m, 15) == 3]
    e = identity(p, 3)
    model = fp2_make(p)
    z = cube_root_of_unity(p)
    units = [model.elem(c0, c1) for c0 in range(p) for c1 in range(p)][1:]
    # order-3 images may carry a central cube-root twist; Klein images may not
    order3_twisted = [scalar_mul(z**j, m) for m in order3 for j in (0, 1, 2)]
    from .matrices import det3

    for im1 in order2:
        for im2 in order3_twisted:
            m0 = _intertwiners(k1, im1, k2, im2, p)
            if m0 is None:
                continue
            d = det3(m0)
            for c in units:
                if c * c * c * d != model.one():
                    continue
                m = scalar_mul(c, m0)
                if mat_mul(m, m) != e:
                    continue
                try:
                    group = closure(h + [m], cap=1300)
                except ValueError:
                    continue
                if len(group) == 1080:
                    return sorted(group, key=_mat_key)
    raise AssertionError("triple cover construction failed")


def _scalar_class(m: Matrix, z: Fp2Elem):
    """0, 1, 2 when m is the identity times z^i, else None."""
    p = m[0][0].p
    zero = Fp2Elem(p, 0, 0)
    diag = m[0][0]
    for i in range(3):
        for j in range(3):
            if i != j and m[i][j] != zero:
                return None
        if m[i][i] != diag:
            return None
    for i, power in ((0, Fp2Elem(p, 1, 0)), (1, z), (2, z * z)):
        if diag == power:
            return i
    return None


@lru_cache(maxsize=None)
def classified_cover() -> dict[str, dict]:
    """Class label -> {size, trace, charpoly, inverse_label, representative}
    derived purely from the explicit group, for cross-checking the frozen
    tables."""
    group = triple_cover_group()
    z = cube_root_of_unity(5)
    model = fp2_make(5)

    def classify(m: Matrix) -> str:
        order = mat_order(m, 60)
        tr = trace(m)
        if order == 1:
            return "1a"
        if order == 3:
            s = _scalar_class(m, z)
            if s == 1:
                return "3a"
            if s == 2:
                return "3b"
            return "3cd"
        if order == 2:
            return "2a"
        if order == 4:
            return "4a"
        if order == 6:
            return "6a" if tr == -z else "6b"
        if order == 12:
            return "12a" if tr == z else "12b"
        if order == 5:
            return "5ab"
        if order == 15:
            return "15ac" if tr == model.elem(-2) * z else "15bd"
        raise AssertionError(f"unexpected element order {order}")

    buckets: dict[str, list[Matrix]] = {}
    for m in group:
        buckets.setdefault(classify(m), []).append(m)
    expected_sizes = {
        "1a": 1, "3a": 1, "3b": 1, "2a": 45, "6a": 45, "6b": 45, "3cd": 240,
        "4a": 90, "12a": 90, "12b": 90, "5ab": 144, "15ac": 144, "15bd": 144,
    }
    sizes = {label: len(ms) for label, ms in buckets.items()}
    if sizes != expected_sizes:
        raise AssertionError(f"class sizes {sizes} differ from {expected_sizes}")
    out = {}
    for label, ms in buckets.items():
        rep = ms[0]
        traces = {(trace(m).c0, trace(m).c1) for m in ms}
        if len(traces) != 1:
            raise AssertionError(f"class {label} has mixed traces {traces}")
        out[label] = {
            "size": len(ms),
            "trace": trace(rep),
            "charpoly": charpoly3_reversed(rep),
            "inverse_label": classify(mat_inverse(rep)),
            "representative": rep,
        }
    return out


def oracle_charpoly(label: str, eps_val: int) -> list[Fp2Elem]:
    """det(1 - eps*m*t) for a class representative, computed from the
    matrix itself (eps in {+1,-1} twists the representative)."""
    if eps_val not in (1, -1):
        raise InconsistencyError("eps_val must be +1 or -1")
    rep = classified_cover()[label]["representative"]
    if eps_val == -1:
        rep = scalar_mul(Fp2Elem(5, -1, 0), rep)
    return charpoly3_reversed(rep)
