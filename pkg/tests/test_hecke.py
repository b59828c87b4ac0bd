import random

import pytest

from padic_serre.arith import Fp2Elem, fp2_make
from padic_serre.errors import InconsistencyError
from padic_serre.hecke import (
    EigenvalueRecord,
    check_attached,
    conjugate_cubic,
    hecke_poly,
    solve_record,
)

F25 = fp2_make(5)


def _random_cubic(rng, model):
    p = model.p
    return [model.one()] + [model.elem(rng.randrange(p), rng.randrange(p)) for _ in range(3)]


def test_hecke_poly_trivial_representation():
    ell = 7
    li = Fp2Elem(5, 7, 0)
    rec = EigenvalueRecord(ell, F25.elem(3), F25.elem(3) * li.inverse(),
                           li.inverse() ** 3)
    assert hecke_poly(rec, 5) == [F25.one(), F25.elem(-3), F25.elem(3), F25.elem(-1)]


def test_hecke_poly_coefficient_pattern():
    # exponents ell^(k(k-1)/2) for k = 0..3 are 1, 1, ell, ell^3, and the
    # polynomial is linear in each eigenvalue
    rng = random.Random(70)
    for _ in range(100):
        ell = rng.choice([2, 3, 7, 11, 13])
        model = F25
        rec = EigenvalueRecord(ell, *(_random_cubic(rng, model)[1:]))
        base = hecke_poly(rec, 5)
        delta = model.elem(rng.randrange(1, 5), rng.randrange(5))
        bumped = EigenvalueRecord(ell, rec.a1, rec.a2 + delta, rec.a3)
        diff = [b - a for a, b in zip(base, hecke_poly(bumped, 5))]
        li = model.elem(ell)
        assert diff == [model.zero(), model.zero(), li * delta, model.zero()]


def test_hecke_poly_rejects_ell_divisible_by_p():
    rec = EigenvalueRecord(5, F25.one(), F25.one(), F25.one())
    with pytest.raises(InconsistencyError):
        hecke_poly(rec, 5)


@pytest.mark.parametrize("p", [3, 5])
def test_round_trip_attached(p):
    model = fp2_make(p)
    rng = random.Random(71 + p)
    ells = [ell for ell in (2, 3, 7, 11, 13, 17, 19) if ell % p][:5]
    polys = {ell: [_random_cubic(rng, model)] for ell in ells}
    records = [solve_record(ell, polys[ell][0], p) for ell in ells]
    verdict = check_attached(records, polys)
    assert verdict.overall == "attached"
    assert all(status == "match" for status in verdict.per_ell.values())


def test_perturbation_detected():
    rng = random.Random(72)
    ells = [2, 3, 7]
    polys = {ell: [_random_cubic(rng, F25)] for ell in ells}
    records = [solve_record(ell, polys[ell][0], 5) for ell in ells]
    bad = records[1]
    records[1] = EigenvalueRecord(bad.ell, bad.a1 + 1, bad.a2, bad.a3)
    verdict = check_attached(records, polys)
    assert verdict.overall == "not-attached"
    assert verdict.per_ell[3] == "mismatch"
    assert verdict.per_ell[2] == "match" and verdict.per_ell[7] == "match"


def test_global_conjugation_detected():
    rng = random.Random(73)
    ells = [2, 3, 7, 11]
    polys = {}
    for ell in ells:
        cubic = _random_cubic(rng, F25)
        while conjugate_cubic(cubic) == cubic:
            cubic = _random_cubic(rng, F25)
        polys[ell] = [cubic]
    records = [solve_record(ell, polys[ell][0], 5).conjugate() for ell in ells]
    verdict = check_attached(records, polys)
    assert verdict.overall == "attached-up-to-conjugacy"
    assert all(status == "conjugate-match" for status in verdict.per_ell.values())


def test_verdict_equivariance_under_conjugation():
    rng = random.Random(74)
    for _ in range(50):
        ells = [2, 3, 7]
        polys = {ell: [_random_cubic(rng, F25)] for ell in ells}
        records = [solve_record(ell, polys[ell][0], 5) for ell in ells]
        if rng.random() < 0.5:
            i = rng.randrange(3)
            r = records[i]
            records[i] = EigenvalueRecord(r.ell, r.a1, r.a2 + 1, r.a3)
        before = check_attached(records, polys)
        conj_polys = {ell: [conjugate_cubic(c) for c in polys[ell]] for ell in ells}
        conj_records = [r.conjugate() for r in records]
        after = check_attached(conj_records, conj_polys)
        assert before.overall == after.overall
        assert before.per_ell == after.per_ell


def test_two_candidate_entries():
    rng = random.Random(75)
    cubic = _random_cubic(rng, F25)
    other = _random_cubic(rng, F25)
    polys = {7: [other, cubic]}
    rec = solve_record(7, cubic, 5)
    verdict = check_attached([rec], polys)
    assert verdict.overall == "attached"
    assert verdict.indeterminate_ells == (7,)


def test_missing_ell_rejected():
    rec = solve_record(7, [F25.one()] + [F25.zero()] * 3, 5)
    with pytest.raises(InconsistencyError):
        check_attached([rec], {11: [[F25.one()] + [F25.zero()] * 3]})


def test_solve_record_requires_unit_constant():
    with pytest.raises(InconsistencyError):
        solve_record(7, [F25.elem(2)] + [F25.zero()] * 3, 5)


def test_record_json_round_trip():
    rec = EigenvalueRecord(7, F25.elem(1, 2), F25.elem(3, 4), F25.elem(0, 1))
    assert EigenvalueRecord.from_json(rec.to_json(), 5) == rec
