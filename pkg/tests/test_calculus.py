from hypothesis import given

from bmdl.calculus import (
    CHECKER_ONLY,
    ONE_PREMISS_STATIC,
    RuleId,
    TRANSITIONAL,
    TWO_PREMISS_STATIC,
    ZERO_PREMISS,
    applications,
    is_initial,
    one_premiss_static_applications,
    transitional_applications,
    two_premiss_static_applications,
    zero_premiss_applications,
)
from bmdl.formula import (
    And,
    Atom,
    BOT,
    Box,
    Imp,
    Neg,
    Obl,
    Or,
    set_sequent,
    to_set_sequent,
)

from conftest import sequents

p, q, r, t = Atom("p"), Atom("q"), Atom("r"), Atom("t")


def test_rule_groups_partition_the_rule_set():
    groups = [ZERO_PREMISS, ONE_PREMISS_STATIC, TWO_PREMISS_STATIC, TRANSITIONAL, CHECKER_ONLY]
    seen = [rule for g in groups for rule in g]
    assert len(seen) == len(set(seen)) == len(RuleId)


def test_is_initial():
    assert is_initial(set_sequent([BOT], []))
    assert is_initial(set_sequent([p], [p, q]))
    assert not is_initial(set_sequent([p], [q]))
    assert is_initial(set_sequent([And(p, q)], [And(p, q)]))
    assert not is_initial(set_sequent([And(p, q)], [And(p, q)]), atomic_init=True)
    assert is_initial(set_sequent([p, And(p, q)], [p]), atomic_init=True)
    assert is_initial(set_sequent([BOT], []), atomic_init=True)


def test_one_premiss_rules_copy_their_principal():
    s = set_sequent([And(p, q)], [r])
    (app,) = one_premiss_static_applications(s)
    assert app.rule == RuleId.AND_L
    (prem,) = app.premisses
    assert And(p, q) in prem.ante
    assert prem == set_sequent([And(p, q), p, q], [r])


def test_one_premiss_rules_skip_settled_principals():
    # everything the rules would add is already present
    s = set_sequent([And(p, q), p, q, Neg(r)], [r, p, Or(p, r)])
    assert one_premiss_static_applications(s) == []


def test_one_premiss_enumeration_order_is_by_side_then_formula():
    s = set_sequent([Neg(p), Box(q)], [Imp(p, r)])
    rules = [a.rule for a in one_premiss_static_applications(s)]
    assert rules == [RuleId.NEG_L, RuleId.T, RuleId.IMP_R]


def test_two_premiss_rules_need_both_premisses_productive():
    s = set_sequent([Or(p, q)], [q])
    (app,) = two_premiss_static_applications(s)
    assert app.rule == RuleId.OR_L
    assert app.premisses == (
        set_sequent([Or(p, q), p], [q]),
        set_sequent([Or(p, q), q], [q]),
    )
    # one branch would add nothing, so the application is withheld
    settled = set_sequent([Or(p, q), q], [q])
    assert two_premiss_static_applications(settled) == []


def test_implication_left_premisses():
    s = set_sequent([Imp(p, q)], [r])
    (app,) = two_premiss_static_applications(s)
    assert app.premisses == (
        set_sequent([Imp(p, q)], [r, p]),
        set_sequent([Imp(p, q), q], [r]),
    )


def test_transitional_four_keeps_only_boxed_context():
    s = set_sequent([Box(p), q, Obl(p, q)], [Box(r), t])
    fours = [a for a in transitional_applications(s) if a.rule == RuleId.FOUR]
    assert len(fours) == 1
    assert fours[0].premisses == (set_sequent([Box(p)], [r]),)


def test_transitional_d1_premiss():
    s = set_sequent([Box(p), Obl(q, r)], [t])
    d1s = [a for a in transitional_applications(s) if a.rule == RuleId.D1]
    assert len(d1s) == 1
    assert d1s[0].principal == (Obl(q, r),)
    assert d1s[0].premisses == (set_sequent([Box(p), q], []),)


def test_transitional_d2_premiss_triple():
    s = set_sequent([Obl(p, q), Obl(r, t)], [])
    d2s = [a for a in transitional_applications(s) if a.rule == RuleId.D2]
    assert len(d2s) == 1
    assert d2s[0].premisses == (
        set_sequent([p, r], []),
        set_sequent([q], [t]),
        set_sequent([t], [q]),
    )


def test_transitional_d2_counts_unordered_pairs():
    s = set_sequent([Obl(p, q), Obl(r, t), Obl(q, p)], [])
    d2s = [a for a in transitional_applications(s) if a.rule == RuleId.D2]
    assert len(d2s) == 3


def test_transitional_mon_premiss_triple():
    s = set_sequent([Box(p), Obl(p, q)], [Obl(r, t)])
    mons = [a for a in transitional_applications(s) if a.rule == RuleId.MON]
    assert len(mons) == 1
    assert mons[0].principal == (Obl(p, q), Obl(r, t))
    assert mons[0].premisses == (
        set_sequent([Box(p), p], [r]),
        set_sequent([Box(p), q], [t]),
        set_sequent([Box(p), t], [q]),
    )


def test_transitional_enumeration_order():
    s = set_sequent([Obl(p, q), Obl(q, r)], [Obl(r, t), Box(p)])
    rules = [a.rule for a in transitional_applications(s)]
    assert rules == [
        RuleId.D1,
        RuleId.D1,
        RuleId.D2,
        RuleId.MON,
        RuleId.MON,
        RuleId.FOUR,
    ]


def test_zero_premiss_applications():
    s = set_sequent([BOT, p], [p, q])
    apps = zero_premiss_applications(s)
    assert [a.rule for a in apps] == [RuleId.INIT, RuleId.BOTTOM_L]
    assert apps[0].principal == (p,)


@given(sequents)
def test_static_premisses_strictly_grow(seq):
    s = to_set_sequent(seq)
    for app in one_premiss_static_applications(s) + two_premiss_static_applications(s):
        for prem in app.premisses:
            assert s <= prem and prem != s


@given(sequents)
def test_applications_cover_all_groups(seq):
    s = to_set_sequent(seq)
    apps = applications(s)
    assert [a for a in apps if a.rule in ZERO_PREMISS] == zero_premiss_applications(s)
    for app in apps:
        assert app.rule not in CHECKER_ONLY


@given(sequents)
def test_enumeration_is_deterministic(seq):
    s = to_set_sequent(seq)
    assert applications(s) == applications(s)
