import json

import pytest

from asprank.covers import genus, p_rank_DS, ramification_data
from asprank.deform import (
    choose_specialization,
    make_family,
    specialize,
    verify_closure_step,
    verify_deformation,
)
from asprank.errors import DeformationHypothesisError
from asprank.fieldarith import GF
from asprank.strata import enumerate_partitions


def test_make_family_orders_parts():
    fam = make_family(3, 2, 3)
    assert (fam.e1, fam.e2, fam.e) == (3, 2, 5)
    assert str(fam) == "y^3 - y = x^4/(1 - x t)^3"


@pytest.mark.parametrize("p,e1,e2", [(3, 2, 2), (3, 1, 3), (5, 3, 3), (3, 3, 4), (2, 3, 3), (5, 5, 1)])
def test_make_family_rejects(p, e1, e2):
    with pytest.raises(DeformationHypothesisError):
        make_family(p, e1, e2)


def test_p3_example_over_f9():
    rep = verify_deformation(3, 3, 3, GF(3, 2))
    assert rep.passed
    assert rep.field == (3, 2) and rep.t0 == 1
    assert rep.special.partition == (6,) and rep.generic.partition == (3, 3)
    assert rep.special.genus == rep.generic.genus == 4
    assert (rep.special.p_rank, rep.generic.p_rank) == (0, 2)
    assert (rep.special.oracle_p_rank, rep.generic.oracle_p_rank) == (0, 2)


def test_p2_example_over_f8():
    rep = verify_deformation(2, 2, 4, GF(2, 3))
    assert rep.passed
    assert rep.special.partition == (6,) and rep.generic.partition == (2, 4)
    assert rep.special.genus == rep.generic.genus == 2
    assert (rep.special.p_rank, rep.generic.p_rank) == (0, 1)


def test_p2_split_of_four_degenerates_over_f4():
    # every t0 in F4* has t0^3 = 1, which cancels the pole at 1/t0 modulo y^2 - y
    fam = make_family(2, 2, 2)
    for t0 in (1, 2, 3):
        c = specialize(fam, t0, GF(2, 2))
        assert ramification_data(c).partition.parts == (2,)
        assert genus(c) == 0
    F, t0 = choose_specialization(fam, GF(2, 2))
    assert (F.p, F.n) == (2, 4)
    F, t0 = choose_specialization(fam, GF(2))
    assert (F.p, F.n, t0) == (2, 3, 2)
    rep = verify_deformation(2, 2, 2)
    assert rep.passed and rep.generic.partition == (2, 2) and rep.generic.genus == 1


def test_special_fibre_has_one_branch_point():
    c = specialize(make_family(5, 5, 3), 0, GF(5))
    assert ramification_data(c).partition.parts == (8,)
    assert p_rank_DS(c) == 0


ADMISSIBLE = [(2, 2, 2), (2, 2, 4), (2, 2, 6), (2, 4, 4), (2, 2, 8), (2, 4, 6),
              (3, 2, 3), (3, 3, 3), (3, 2, 6), (3, 3, 5), (3, 3, 6),
              (5, 2, 5), (5, 3, 5), (5, 4, 5), (5, 5, 5)]


@pytest.mark.parametrize("p,e1,e2", ADMISSIBLE)
def test_all_admissible_splits_pass(p, e1, e2):
    rep = verify_deformation(p, e1, e2)
    assert rep.passed, rep.checks
    assert set(rep.checks) >= {"special_partition", "generic_partition", "equal_genus",
                               "p_rank_jump", "leading_term_at_pole"}


def test_report_json_is_stable():
    rep = verify_deformation(3, 3, 3, GF(3, 2))
    text = rep.to_json()
    assert text == verify_deformation(3, 3, 3, GF(3, 2)).to_json()
    data = json.loads(text)
    assert list(data) == ["p", "e1", "e2", "field", "t0", "special", "generic", "checks", "passed"]
    assert data["passed"] is True


@pytest.mark.parametrize("p", [2, 3, 5])
def test_closure_steps_on_explicit_covers(p):
    for d in range(1, 11):
        if p == 2 and d % 2:
            continue
        for E in enumerate_partitions(p, d):
            if max(E.parts) < p + 2:
                with pytest.raises(DeformationHypothesisError):
                    verify_closure_step(p, E)
                continue
            rep = verify_closure_step(p, E)
            assert rep.passed, (E, rep.checks)
            assert rep.special.partition == E.parts
