"""Backward rule applications of the sequent calculus, at the set level.

Principal formulas are copied into the premisses, so static premisses are
always componentwise supersets of their conclusion.  A static application is
enumerated only when every premiss strictly extends the conclusion; an
application with a premiss equal to the conclusion is an immediately
subsumed repeat and can never occur in a minimal derivation, while
enumerating it would make the search loop.

Rule groups:

    zero premiss        Init, BottomL
    one-premiss static  NegL, NegR, AndL, OrR, ImpR, T
    two-premiss static  AndR, OrL, ImpL
    transitional        D1, D2, Mon, Four   (antecedent restricted to its
                                             boxed part, boxes kept)

The checker-only rules (Cut, WeakL/WeakR, ConL/ConR, Assumption) never
appear in backward search; the kernel handles them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .formula import (
    And,
    Atom,
    BOT,
    Box,
    Formula,
    Imp,
    Neg,
    Obl,
    Or,
    SetSequent,
    boxed_part,
    sorted_formulas,
)


class RuleId(Enum):
    INIT = "Init"
    BOTTOM_L = "BottomL"
    NEG_L = "NegL"
    NEG_R = "NegR"
    AND_L = "AndL"
    AND_R = "AndR"
    OR_L = "OrL"
    OR_R = "OrR"
    IMP_L = "ImpL"
    IMP_R = "ImpR"
    T = "T"
    FOUR = "Four"
    MON = "Mon"
    D1 = "D1"
    D2 = "D2"
    CUT = "Cut"
    WEAK_L = "WeakL"
    WEAK_R = "WeakR"
    CON_L = "ConL"
    CON_R = "ConR"
    ASSUMPTION = "Assumption"


ZERO_PREMISS = frozenset({RuleId.INIT, RuleId.BOTTOM_L})
ONE_PREMISS_STATIC = frozenset(
    {RuleId.NEG_L, RuleId.NEG_R, RuleId.AND_L, RuleId.OR_R, RuleId.IMP_R, RuleId.T}
)
TWO_PREMISS_STATIC = frozenset({RuleId.AND_R, RuleId.OR_L, RuleId.IMP_L})
TRANSITIONAL = frozenset({RuleId.D1, RuleId.D2, RuleId.MON, RuleId.FOUR})
CHECKER_ONLY = frozenset(
    {RuleId.CUT, RuleId.WEAK_L, RuleId.WEAK_R, RuleId.CON_L, RuleId.CON_R, RuleId.ASSUMPTION}
)


@dataclass(frozen=True)
class RuleApplication:
    rule: RuleId
    principal: tuple[Formula, ...]
    premisses: tuple[SetSequent, ...]


def is_initial(s: SetSequent, atomic_init: bool = False) -> bool:
    """Closed without premisses: a shared formula, or falsum on the left.

    With atomic_init only shared atoms count, as in plain G3.
    """
    if BOT in s.ante:
        return True
    shared = s.ante & s.succ
    if atomic_init:
        return any(isinstance(f, Atom) for f in shared)
    return bool(shared)


def _grown(s: SetSequent, ante=(), succ=()) -> SetSequent:
    return SetSequent(s.ante.union(ante), s.succ.union(succ))


def one_premiss_static_applications(s: SetSequent) -> list[RuleApplication]:
    apps = []

    def add(rule, f, premiss):
        if premiss != s:
            apps.append(RuleApplication(rule, (f,), (premiss,)))

    for f in sorted_formulas(s.ante):
        match f:
            case Neg(g):
                add(RuleId.NEG_L, f, _grown(s, succ=(g,)))
            case And(l, r):
                add(RuleId.AND_L, f, _grown(s, ante=(l, r)))
            case Box(g):
                add(RuleId.T, f, _grown(s, ante=(g,)))
    for f in sorted_formulas(s.succ):
        match f:
            case Neg(g):
                add(RuleId.NEG_R, f, _grown(s, ante=(g,)))
            case Or(l, r):
                add(RuleId.OR_R, f, _grown(s, succ=(l, r)))
            case Imp(l, r):
                add(RuleId.IMP_R, f, _grown(s, ante=(l,), succ=(r,)))
    return apps


def two_premiss_static_applications(s: SetSequent) -> list[RuleApplication]:
    apps = []

    def add(rule, f, p1, p2):
        if p1 != s and p2 != s:
            apps.append(RuleApplication(rule, (f,), (p1, p2)))

    for f in sorted_formulas(s.succ):
        if isinstance(f, And):
            add(RuleId.AND_R, f, _grown(s, succ=(f.l,)), _grown(s, succ=(f.r,)))
    for f in sorted_formulas(s.ante):
        if isinstance(f, Or):
            add(RuleId.OR_L, f, _grown(s, ante=(f.l,)), _grown(s, ante=(f.r,)))
    for f in sorted_formulas(s.ante):
        if isinstance(f, Imp):
            add(RuleId.IMP_L, f, _grown(s, succ=(f.l,)), _grown(s, ante=(f.r,)))
    return apps


def transitional_applications(s: SetSequent) -> list[RuleApplication]:
    """D1, D2, Mon, Four instances, in that (heuristically cheap-first) order.

    Premisses keep the boxed part of the antecedent; everything else is
    dropped, so these premisses are never supersets of the conclusion and
    need no productivity filter.
    """
    boxed = boxed_part(s.ante)
    obls_ante = [f for f in sorted_formulas(s.ante) if isinstance(f, Obl)]
    obls_succ = [f for f in sorted_formulas(s.succ) if isinstance(f, Obl)]
    apps = []
    for o in obls_ante:
        apps.append(
            RuleApplication(
                RuleId.D1, (o,), (SetSequent(boxed | {o.body}, frozenset()),)
            )
        )
    for o1, o2 in itertools.combinations(obls_ante, 2):
        apps.append(
            RuleApplication(
                RuleId.D2,
                (o1, o2),
                (
                    SetSequent(boxed | {o1.body, o2.body}, frozenset()),
                    SetSequent(boxed | {o1.cond}, frozenset({o2.cond})),
                    SetSequent(boxed | {o2.cond}, frozenset({o1.cond})),
                ),
            )
        )
    for o1 in obls_ante:
        for o2 in obls_succ:
            apps.append(
                RuleApplication(
                    RuleId.MON,
                    (o1, o2),
                    (
                        SetSequent(boxed | {o1.body}, frozenset({o2.body})),
                        SetSequent(boxed | {o1.cond}, frozenset({o2.cond})),
                        SetSequent(boxed | {o2.cond}, frozenset({o1.cond})),
                    ),
                )
            )
    for f in sorted_formulas(s.succ):
        if isinstance(f, Box):
            apps.append(
                RuleApplication(RuleId.FOUR, (f,), (SetSequent(boxed, frozenset({f.f})),))
            )
    return apps


def zero_premiss_applications(s: SetSequent, atomic_init: bool = False) -> list[RuleApplication]:
    apps = []
    for f in sorted_formulas(s.ante & s.succ):
        if not atomic_init or isinstance(f, Atom):
            apps.append(RuleApplication(RuleId.INIT, (f,), ()))
    if BOT in s.ante:
        apps.append(RuleApplication(RuleId.BOTTOM_L, (BOT,), ()))
    return apps


def applications(s: SetSequent, atomic_init: bool = False) -> list[RuleApplication]:
    """Every rule application with conclusion s, in deterministic order."""
    return (
        zero_premiss_applications(s, atomic_init)
        + one_premiss_static_applications(s)
        + two_premiss_static_applications(s)
        + transitional_applications(s)
    )
