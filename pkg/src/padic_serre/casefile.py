"""Verification scenarios ("case files") and the pipeline that runs them.

A case file is a JSON document describing one scenario: the defining
sextic, the working prime p, ramification filtrations for the level, the
nebentype character, the tame inertia profile for the weights, per-ell
Frobenius inputs, optional eigenvalue records, and optional golden
expected values.  Twelve scenarios ship with the package: six carry golden
values (level, nebentype, weight set, and for the p=5 case one pinned
Frobenius class), six are data-only records of fields whose verification
was out of reach.

The pipeline: level -> nebentype validation -> predicted weights ->
per-ell Frobenius class and characteristic polynomial (the cover path for
p=5, the symmetric-square tables for p=3) -> attachment check when
eigenvalues are present -> comparison against the golden block.  Reports
are deterministic (sorted keys, fixed field models), so repeated runs are
byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from math import lcm
from typing import Optional

from .arith import fp2_make, is_prime
from .errors import InconsistencyError, SchemaError
from .galois_local import LevelDatum, RamFiltration, level
from .hecke import EigenvalueRecord, check_attached
from .krasner import certify_same_extension
from .polynomial import IntPoly, cycle_type_mod_ell, discriminant
from .rep3a6 import (
    CoarseClassA6,
    coarse_from_cycle_type,
    frob_charpoly,
    frobenius_class,
    mod3_charpoly_candidates,
)
from .weights import DirichletCharacter, InertiaProfile, nebentype_factor, predicted_weights

DEFAULT_ELL_MAX = 47

BUNDLED = (
    "2-3-55", "2-3-57", "2-3-58", "3-7-3", "3-13-9", "5-17-1",
    "2-3-59", "2-5-17", "3-5-7", "3-5-8", "3-19-3", "13-19-1",
)
GOLDEN = BUNDLED[:6]


@dataclass
class CaseFile:
    name: str
    data_only: bool
    sextic: Optional[IntPoly]
    p: Optional[int]
    level_data: list
    nebentype_kinds: list[str]
    nebentype_k: int
    inertia_profile: Optional[InertiaProfile]
    frobenius_inputs: list[dict]
    eigenvalues: Optional[list]
    expected: Optional[dict]
    certificates: list = field(default_factory=list)
    raw: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, payload: dict) -> "CaseFile":
        try:
            name = payload["name"]
            data_only = bool(payload.get("data_only", False))
            sextic = IntPoly.from_json(payload["sextic"]) if "sextic" in payload else None
            if data_only:
                return cls(name, True, sextic, None, [], [], 0, None, [], None, None,
                           raw=payload)
            p = int(payload["p"])
            if not is_prime(p):
                raise SchemaError(f"p = {p} is not prime")
            neb = payload.get("nebentype", {"kinds": [], "k": 0})
            profile = InertiaProfile.from_json(payload["inertia_profile"])
            eigen = payload.get("eigenvalues")
            return cls(
                name=name,
                data_only=False,
                sextic=sextic,
                p=p,
                level_data=payload["level_data"],
                nebentype_kinds=list(neb.get("kinds", [])),
                nebentype_k=int(neb.get("k", 0)),
                inertia_profile=profile,
                frobenius_inputs=payload.get("frobenius_inputs", []),
                eigenvalues=eigen,
                expected=payload.get("expected"),
                certificates=payload.get("certificates", []),
                raw=payload,
            )
        except SchemaError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"malformed case file: {exc}") from exc

    @classmethod
    def load(cls, path: str) -> "CaseFile":
        try:
            with open(path) as fh:
                payload = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise SchemaError(f"cannot read case file {path}: {exc}") from exc
        return cls.from_dict(payload)


def bundled_case_names() -> tuple[str, ...]:
    return BUNDLED


def load_bundled_case(name: str) -> CaseFile:
    if name not in BUNDLED:
        raise SchemaError(f"unknown bundled case {name}")
    text = resources.files("padic_serre").joinpath(f"cases/{name}.json").read_text()
    return CaseFile.from_dict(json.loads(text))


def _cycle_type_checked(case: CaseFile, entry: dict) -> tuple[int, ...]:
    """Stored cycle type, cross-checked against the sextic mod ell whenever
    the reduction is squarefree."""
    ell = int(entry["ell"])
    stored = tuple(int(x) for x in entry.get("cycle_type", ()))
    if case.sextic is not None and discriminant(case.sextic) % ell != 0:
        computed = cycle_type_mod_ell(case.sextic, ell)
        if stored and stored != computed:
            raise InconsistencyError(
                f"case {case.name}: stored cycle type {stored} at ell={ell}"
                f" disagrees with the recomputed {computed}"
            )
        return computed
    if not stored:
        raise InconsistencyError(
            f"case {case.name}: ell={ell} has non-squarefree reduction and no stored cycle type"
        )
    return stored


def _frobenius_entry_mod5(entry: dict, cycle_type, eps_sign: int) -> dict:
    cls = frobenius_class(cycle_type, int(entry.get("artin_power", 0)),
                          int(entry.get("residue_degree", lcm(*cycle_type))))
    poly = frob_charpoly(cls, eps_sign)
    return {
        "ell": int(entry["ell"]),
        "cycle_type": list(cycle_type),
        "class": cls,
        "charpolys": [[[c.c0, c.c1] for c in poly]],
    }


def _frobenius_entry_mod3(entry: dict, cycle_type, eps_sign: int, p: int) -> dict:
    base = coarse_from_cycle_type(cycle_type)
    if base.label == "5ab" and entry.get("fine_order5") in ("5a", "5b"):
        base = CoarseClassA6("5ab", None, entry["fine_order5"])
    candidates = mod3_charpoly_candidates(base)
    eps = fp2_make(p).elem(eps_sign)
    twisted = [[(eps**k) * c for k, c in enumerate(poly)] for poly in candidates]
    out = {
        "ell": int(entry["ell"]),
        "cycle_type": list(cycle_type),
        "class": base.label if base.fine_order5 in (None, "unknown") else base.fine_order5,
        "charpolys": [[[c.c0, c.c1] for c in poly] for poly in twisted],
    }
    if len(twisted) > 1:
        out["note"] = "order-5 class unresolved: equal or conjugate"
    return out


def _frobenius_section(case: CaseFile, eps: DirichletCharacter, ell_max: int) -> list[dict]:
    out = []
    for entry in case.frobenius_inputs:
        ell = int(entry["ell"])
        if ell > ell_max:
            continue
        cycle_type = _cycle_type_checked(case, entry)
        sign = eps.sign_at(ell)
        if case.p == 5:
            out.append(_frobenius_entry_mod5(entry, cycle_type, sign))
        elif case.p == 3:
            out.append(_frobenius_entry_mod3(entry, cycle_type, sign, case.p))
        else:
            raise InconsistencyError(
                f"no frozen class data for p = {case.p}; only p in (3, 5) is bundled"
            )
    return out


def _attachment_section(case: CaseFile, frob_section: list[dict]):
    if not case.eigenvalues:
        return None
    model = fp2_make(case.p)
    records = [EigenvalueRecord.from_json(e, case.p) for e in case.eigenvalues]
    frob_polys = {}
    for entry in frob_section:
        polys = [[model.elem(c0, c1) for c0, c1 in poly] for poly in entry["charpolys"]]
        frob_polys[entry["ell"]] = polys
    return check_attached(records, frob_polys).to_json()


def _golden_mismatches(case: CaseFile, report: dict) -> list[str]:
    expected = case.expected or {}
    mismatches = []
    if "level" in expected:
        want = {str(q): int(e) for q, e in expected["level"].items()}
        got = report["level"]["exponents"]
        if want != got:
            mismatches.append(f"level: expected {want}, computed {got}")
    if "nebentype" in expected and expected["nebentype"] != report["nebentype"]["kind"]:
        mismatches.append(
            f"nebentype: expected {expected['nebentype']}, computed {report['nebentype']['kind']}"
        )
    if "weights" in expected:
        want_w = sorted(tuple(int(x) for x in w) for w in expected["weights"])
        got_w = sorted(tuple(w) for w in report["weights"])
        if want_w != got_w:
            mismatches.append(f"weights: expected {want_w}, computed {got_w}")
    for ell, label in (expected.get("frobenius_classes") or {}).items():
        found = next((e for e in report["frobenius"] if e["ell"] == int(ell)), None)
        if found is None or found.get("class") != label:
            mismatches.append(
                f"frobenius class at {ell}: expected {label}, "
                f"computed {found.get('class') if found else 'missing'}"
            )
    return mismatches


def _certificate_section(case: CaseFile) -> list[dict]:
    out = []
    for req in case.certificates:
        cert = certify_same_extension(
            IntPoly.from_json(req["f"]),
            IntPoly.from_json(req["g"]),
            int(req["p"]),
            tuple(req["evidence_f"]),
            tuple(req["evidence_g"]),
            req.get("method", "prop1"),
        )
        out.append(cert.to_json())
    return out


def verify_case(case: CaseFile, ell_max: int = DEFAULT_ELL_MAX) -> dict:
    """Run the full pipeline and return the report dictionary.

    Golden mismatches are recorded in the report, not raised; callers that
    need the exit-code contract check report["golden"]["mismatches"].
    """
    if case.data_only:
        return {
            "name": case.name,
            "data_only": True,
            "note": case.raw.get("note", ""),
            "golden": {"checked": False, "mismatches": []},
        }
    exponents, n = level(
        [LevelDatum(int(d["q"]), RamFiltration.from_json(d["filtration"]))
         for d in case.level_data],
        p=case.p,
    )
    eps = DirichletCharacter(case.p, frozenset(case.nebentype_kinds))
    nebentype_factor(case.nebentype_k, eps, n)
    weights = predicted_weights(case.inertia_profile, case.p)
    frob_section = _frobenius_section(case, eps, ell_max)
    attachment = _attachment_section(case, frob_section)
    model = fp2_make(case.p)
    report = {
        "name": case.name,
        "p": case.p,
        "field_model": {"p": case.p, "quadratic_modulus": model.modulus_coeffs()},
        "level": {
            "exponents": {str(q): e for q, e in sorted(exponents.items())},
            "N": str(n),
        },
        "nebentype": {"kind": eps.kind, "conductor": eps.conductor, "k": case.nebentype_k},
        "weights": [list(w) for w in sorted(weights)],
        "weights_printed": [str(w) for w in sorted(weights)],
        "frobenius": frob_section,
        "attachment": attachment,
        "certificates": _certificate_section(case),
        "provenance": {
            "inertia_profile": case.inertia_profile.provenance,
            "skipped_ells": case.raw.get("skipped_ells", []),
        },
    }
    report["golden"] = {
        "checked": case.expected is not None,
        "mismatches": _golden_mismatches(case, report),
    }
    return report


def report_to_json(report: dict) -> str:
    """Canonical serialization: sorted keys, no trailing whitespace."""
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
