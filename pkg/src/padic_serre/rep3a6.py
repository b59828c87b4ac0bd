"""Coarse conjugacy-class calculus for the alternating group on six letters
and its triple cover, with the mod-5 character data, Frobenius class
resolution, characteristic polynomials, and the mod-3 symmetric-square
construction.

Classes of the base group are collapsed by character value into
1a, 2a, 3ab, 4a, 5ab; the cover's thirteen coarse classes are

    1a 3a 3b 2a 6a 6b 3cd 4a 12a 12b 5ab 15ac 15bd

with 3a/3b the central scalars z, z^2.  The trace character X over F_25
(z the deterministic cube root of unity) is frozen below; the inverse-class
involution was derived once with the matrix oracle in matrix_oracle.py and
is frozen alongside it.  Class labels with order prime to 3 lift uniquely;
multiplying by the central scalar walks 1a->3a->3b, 2a->6a->6b,
4a->12a->12b, 5ab->15ac->15bd.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .arith import Fp2Elem, cube_root_of_unity, fp2_make
from .errors import InconsistencyError
from .matrices import Matrix, charpoly3_reversed, closure, det2, mat, mat_order

A6_COARSE = ("1a", "2a", "3ab", "4a", "5ab")
COVER_COARSE = ("1a", "3a", "3b", "2a", "6a", "6b", "3cd", "4a", "12a", "12b", "5ab", "15ac", "15bd")

_CYCLE_TYPE_TO_COARSE = {
    (1, 1, 1, 1, 1, 1): ("1a", None, None),
    (2, 2, 1, 1): ("2a", None, None),
    (3, 1, 1, 1): ("3ab", "3-cycle", None),
    (3, 3): ("3ab", "double-3-cycle", None),
    (4, 2): ("4a", None, None),
    (5, 1): ("5ab", None, "unknown"),
}

#: central twist: base class and scalar power i -> cover class
_CENTRAL_TWIST = {
    ("1a", 0): "1a", ("1a", 1): "3a", ("1a", 2): "3b",
    ("2a", 0): "2a", ("2a", 1): "6a", ("2a", 2): "6b",
    ("4a", 0): "4a", ("4a", 1): "12a", ("4a", 2): "12b",
    ("5ab", 0): "5ab", ("5ab", 1): "15ac", ("5ab", 2): "15bd",
}

#: inverting a class swaps the two scalar twists and fixes everything else
INVERSE_CLASS = {
    "1a": "1a", "2a": "2a", "3cd": "3cd", "4a": "4a", "5ab": "5ab",
    "3a": "3b", "3b": "3a", "6a": "6b", "6b": "6a",
    "12a": "12b", "12b": "12a", "15ac": "15bd", "15bd": "15ac",
}


@dataclass(frozen=True)
class CoarseClassA6:
    label: str
    fine_order3: Optional[str] = None  # "3-cycle" | "double-3-cycle"
    fine_order5: Optional[str] = None  # "5a" | "5b" | "unknown"

    def __post_init__(self):
        if self.label not in A6_COARSE:
            raise InconsistencyError(f"unknown coarse class {self.label}")
        if self.fine_order3 is not None and self.label != "3ab":
            raise InconsistencyError("fine order-3 data only applies to 3ab")
        if self.fine_order5 is not None and self.label != "5ab":
            raise InconsistencyError("fine order-5 data only applies to 5ab")

    @property
    def element_order(self) -> int:
        return {"1a": 1, "2a": 2, "3ab": 3, "4a": 4, "5ab": 5}[self.label]


def coarse_from_cycle_type(partition) -> CoarseClassA6:
    """Coarse class of a permutation with the given cycle type (a partition
    of 6); odd permutations are rejected."""
    key = tuple(sorted((int(x) for x in partition), reverse=True))
    if sum(key) != 6:
        raise InconsistencyError(f"{key} is not a partition of 6")
    if sum(part - 1 for part in key) % 2:
        raise InconsistencyError(f"cycle type {key} is odd: not an even permutation")
    label, fine3, fine5 = _CYCLE_TYPE_TO_COARSE[key]
    return CoarseClassA6(label, fine3, fine5)


def central_twist(base: CoarseClassA6, i: int) -> str:
    """Cover class of (unique same-order lift of base) times the i-th power
    of the central scalar.  Order-3 base classes have no such unique lift."""
    if base.label == "3ab":
        raise InconsistencyError("order-3 base class: use the order-3 rule (3cd)")
    return _CENTRAL_TWIST[(base.label, i % 3)]


def frobenius_class(cycle_type, artin_power: int, residue_degree: int) -> str:
    """Coarse cover class of a Frobenius element.

    Order-3 cycle types land in 3cd outright.  Otherwise the class is the
    unique same-order lift twisted by the central scalar to the power
    artin_power * residue_degree (the residue degree must equal the element
    order, and is its own inverse mod 3)."""
    base = coarse_from_cycle_type(cycle_type)
    if base.label == "3ab":
        return "3cd"
    if residue_degree != base.element_order:
        raise InconsistencyError(
            f"residue degree {residue_degree} does not match element order {base.element_order}"
        )
    return central_twist(base, artin_power * residue_degree)


@lru_cache(maxsize=None)
def _mod5_table() -> dict[str, Fp2Elem]:
    model = fp2_make(5)
    z = cube_root_of_unity(5)
    z2 = z * z
    three = model.elem(3)
    one = model.one()
    return {
        "1a": three, "3a": three * z, "3b": three * z2,
        "2a": -one, "6a": -z, "6b": -z2,
        "3cd": model.zero(),
        "4a": one, "12a": z, "12b": z2,
        "5ab": model.elem(-2), "15ac": model.elem(-2) * z, "15bd": model.elem(-2) * z2,
    }


def char_value(cls: str) -> Fp2Elem:
    """Trace character of the cover's 3-dimensional representation over
    F_25, for the model where the central scalar has trace 3z."""
    if cls not in COVER_COARSE:
        raise InconsistencyError(f"unknown cover class {cls}")
    return _mod5_table()[cls]


def inverse_class(cls: str) -> str:
    if cls not in COVER_COARSE:
        raise InconsistencyError(f"unknown cover class {cls}")
    return INVERSE_CLASS[cls]


def frob_charpoly(cls: str, eps_val: int, p: int = 5) -> list[Fp2Elem]:
    """Coefficients [1, c1, c2, c3] of det(1 - eps * rho(Frob) * t) over
    F_25: 1 - eps*X(cls)*t + eps^2*X(cls^-1)*t^2 - eps^3*t^3."""
    if p != 5:
        raise InconsistencyError("the frozen character data is the mod-5 table")
    if eps_val not in (1, -1):
        raise InconsistencyError("eps_val must be +1 or -1")
    model = fp2_make(5)
    eps = model.elem(eps_val)
    x = char_value(cls)
    xinv = char_value(inverse_class(cls))
    return [model.one(), -(eps * x), eps * eps * xinv, -(eps**3)]


# ---------------------------------------------------------------------------
# mod 3: the symmetric-square construction


def sym_square(m: Matrix) -> Matrix:
    """Symmetric square of a 2x2 matrix, on the basis (x^2, xy, y^2)."""
    a, b = m[0]
    c, d = m[1]
    return mat([
        [a * a, a * b, b * b],
        [a * c + a * c, a * d + b * c, b * d + b * d],
        [c * c, c * d, d * d],
    ])


def sym_square_charpoly(m: Matrix) -> list[Fp2Elem]:
    """Characteristic polynomial det(1 - Sym^2(m) t) of a determinant-one
    2x2 matrix; its trace is trace(m)^2 - 1."""
    p = m[0][0].p
    if det2(m) != Fp2Elem(p, 1, 0):
        raise InconsistencyError("matrix must have determinant 1")
    return charpoly3_reversed(sym_square(m))


def _sl2_elements(p: int) -> set[Matrix]:
    model = fp2_make(p)
    gens = [
        mat([[model.one(), model.one()], [model.zero(), model.one()]]),
        mat([[model.one(), model.gen()], [model.zero(), model.one()]]),
        mat([[model.one(), model.zero()], [model.one(), model.one()]]),
        mat([[model.one(), model.zero()], [model.gen(), model.one()]]),
    ]
    return closure(gens)


@lru_cache(maxsize=None)
def a6_mod3_class_polys() -> tuple[dict, dict]:
    """The two Galois-conjugate tables class -> charpoly over F_9 for the
    3-dimensional mod-3 representations.

    Built by enumerating the 720 elements of SL_2(F_9) and pushing them
    through the symmetric square (the central sign dies, leaving the simple
    group of order 360 inside SL_3(F_9)).  Images are classified by order;
    the two order-5 classes are separated by their distinct conjugate
    traces, labelled so that "5a" takes the lexicographically smaller one.
    Keys: 1a, 2a, 3ab (both fine types share a unipotent charpoly), 4a,
    5a, 5b.
    """
    by_key: dict[tuple, list] = {}
    images = {sym_square(m) for m in _sl2_elements(3)}
    if len(images) != 360:
        raise AssertionError(f"expected 360 images, got {len(images)}")
    for s in images:
        order = mat_order(s, cap=10)
        tr = s[0][0] + s[1][1] + s[2][2]
        by_key.setdefault((order, (tr.c0, tr.c1)), []).append(s)

    def poly_of(order, trace_key=None):
        keys = [k for k in by_key if k[0] == order and (trace_key is None or k[1] == trace_key)]
        if len(keys) != 1:
            raise AssertionError(f"ambiguous class selection for order {order}")
        return charpoly3_reversed(by_key[keys[0]][0])

    five_traces = sorted(k[1] for k in by_key if k[0] == 5)
    if len(five_traces) != 2:
        raise AssertionError("expected two order-5 trace values")
    table = {
        "1a": poly_of(1),
        "2a": poly_of(2),
        "3ab": poly_of(3),
        "4a": poly_of(4),
        "5a": poly_of(5, five_traces[0]),
        "5b": poly_of(5, five_traces[1]),
    }
    # the Galois twin: same classes, coefficientwise conjugate polynomials
    # (concretely this exchanges the golden traces of 5a and 5b)
    conjugate = {k: [c.frobenius() for c in v] for k, v in table.items()}
    return table, conjugate


def mod3_charpoly_candidates(cls: CoarseClassA6) -> list[list[Fp2Elem]]:
    """Charpoly candidates for a coarse class in the first mod-3 table.

    A resolved fine order-5 label gives one candidate; an unknown one gives
    both, in which case downstream checks can only conclude "equal or
    conjugate"."""
    table = a6_mod3_class_polys()[0]
    if cls.label == "5ab":
        if cls.fine_order5 in ("5a", "5b"):
            return [table[cls.fine_order5]]
        return [table["5a"], table["5b"]]
    return [table[cls.label]]
