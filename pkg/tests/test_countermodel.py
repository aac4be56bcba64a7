import random

import pytest

from bmdl.countermodel import (
    build,
    model_of_json,
    result_to_json,
    truth_lemma_audit,
)
from bmdl.formula import SetSequent, to_set_sequent
from bmdl.gen import random_sequent
from bmdl.parser import parse_sequent
from bmdl.search import Budget, BudgetExceeded, decide
from bmdl.semantics import falsifies, model_from_json, validate_frame

UNDERIVABLE = [
    "|- false",
    "|- p",
    "p |- q",
    "|- O(p / q)",
    "O(p / q) |-",
    "O(a / ~d) |-",
    "p | q |-",
    "|- []p",
    "[]p |- []q",
    "O(p / q) |- O(p / r)",
    "O(p / q), O(q / r) |- O(p / r)",
    "|- O(p / q) -> O(p & q / q)",
    "[](p -> q) |- O(q / r) -> O(p / r)",
    "[]O(p / q) |- [](p -> q)",
]


@pytest.mark.parametrize("text", UNDERIVABLE)
def test_builds_are_certified(text):
    s = parse_sequent(text)
    res = build(s)
    assert res.certified
    assert res.root in res.model.worlds
    assert validate_frame(res.model) == []
    assert truth_lemma_audit(res.model, res.resolved) == []
    assert falsifies(res.model, res.root, s)


def test_derivable_goals_are_refused():
    with pytest.raises(ValueError):
        build(parse_sequent("|- p | ~p"))


def test_root_world_extends_the_goal():
    s = parse_sequent("O(p / q) |- O(p / r)")
    res = build(s)
    root = res.resolved[res.root]
    assert to_set_sequent(s) <= root
    assert res.traces[res.root][0] == to_set_sequent(s)


def test_every_world_sequent_is_underivable():
    res = build(parse_sequent("O(p / q), O(q / r) |- O(p / r)"))
    for ss in res.resolved.values():
        assert not decide(ss)


def test_condition_formulas_are_decided_at_every_world():
    s = parse_sequent("O(a / ~d) |-")
    res = build(s)
    cond = parse_sequent("~d |-").ante[0]
    for ss in res.resolved.values():
        assert cond in ss.ante or cond in ss.succ


def test_seeded_batch_stays_sound():
    rng = random.Random(5)
    built = 0
    while built < 60:
        s = random_sequent(rng, size=6)
        if decide(s):
            continue
        res = build(s)
        assert res.certified
        assert falsifies(res.model, res.root, s)
        built += 1


def test_budget_exhaustion_propagates():
    with pytest.raises(BudgetExceeded):
        build(parse_sequent("O(p / q), O(q / r) |- O(p / r)"), budget=Budget(20))


def test_audit_flags_a_doctored_world_map():
    res = build(parse_sequent("p |- q"))
    wrong = {
        w: SetSequent(ss.succ, ss.ante) for w, ss in res.resolved.items()
    }
    assert truth_lemma_audit(res.model, wrong)


def test_report_serialization():
    res = build(parse_sequent("|- O(p / q)"))
    data = result_to_json(res)
    assert data["certified"] is True
    assert data["root"] in data["histories"]
    assert data["goal"] == "|- O(p / q)"
    m = model_of_json(data)
    assert m == res.model
    assert model_of_json(data["model"]) == res.model
    assert model_from_json(data["model"]) == res.model


def test_world_names_follow_creation_order():
    res = build(parse_sequent("O(p / q), O(q / r) |- O(p / r)"))
    assert list(res.model.worlds) == [f"h{i}" for i in range(len(res.model.worlds))]
    assert res.root == "h0"
