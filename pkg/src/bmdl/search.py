"""Backward proof search over set sequents.

The search works on a history, a nonempty list of set sequents whose last
entry is the current goal.  A goal is first saturated under the one-premiss
static rules (replacing it in the history), then closed if it is initial,
and otherwise attacked with two-premiss static rules and finally with
transitional rules.  Transitional premisses are loop checked: a premiss is
refused when it is componentwise contained in the last sequent of some
prefix of the history, the current one included.  Static premisses need no
check because the application filter keeps only strictly growing premisses.

Accepted goals come back as a tree of ProofNode records, which
assemble_derivation turns into an exact multiset derivation for the kernel.
The translation keeps one invariant: the multiset conclusion built for a
node always has the node's set sequent as its support, so the kernel-level
premisses of each rule line up with the set-level premisses the search used
and no weakening or contraction is ever inserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .calculus import (
    RuleApplication,
    RuleId,
    one_premiss_static_applications,
    transitional_applications,
    two_premiss_static_applications,
)
from .formula import (
    Atom,
    BOT,
    Formula,
    Sequent,
    SetSequent,
    sorted_formulas,
    to_set_sequent,
)
from .kernel import Derivation, premisses_for

DEFAULT_BUDGET = 1_000_000


class BudgetExceeded(RuntimeError):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"search budget of {limit} steps exhausted")


class Budget:
    """Mutable step counter, shareable between related searches so that a
    whole batch of oracle calls stays within one bound."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def spend(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(self.limit)

    @classmethod
    def ensure(cls, b: Union[int, "Budget"]) -> "Budget":
        return b if isinstance(b, Budget) else cls(b)


@dataclass(frozen=True)
class SatStep:
    """One saturation move: the rule, its principal, and the set sequent it
    produced."""

    rule: RuleId
    principal: tuple[Formula, ...]
    result: SetSequent


def saturate(s: SetSequent) -> tuple[tuple[SatStep, ...], SetSequent]:
    """Close s under the one-premiss static rules, recording the moves.

    Each move strictly grows one side inside the subformula universe, so the
    scan reaches a fixpoint.  Moves are taken first-found in the fixed
    enumeration order, which keeps saturation deterministic.
    """
    steps: list[SatStep] = []
    while True:
        apps = one_premiss_static_applications(s)
        if not apps:
            return tuple(steps), s
        app = apps[0]
        s = app.premisses[0]
        steps.append(SatStep(app.rule, app.principal, s))


def closure_of(
    s: SetSequent, atomic_init: bool = False
) -> Optional[tuple[RuleId, tuple[Formula, ...]]]:
    """The zero-premiss rule closing s, if any, with its principal."""
    if BOT in s.ante:
        return (RuleId.BOTTOM_L, ())
    shared = s.ante & s.succ
    if atomic_init:
        shared = frozenset(f for f in shared if isinstance(f, Atom))
    if shared:
        return (RuleId.INIT, (sorted_formulas(shared)[0],))
    return None


@dataclass(frozen=True)
class ProofNode:
    """Accepted search node.  Exactly one of closure and application is set."""

    start: SetSequent
    steps: tuple[SatStep, ...]
    saturated: SetSequent
    closure: Optional[tuple[RuleId, tuple[Formula, ...]]]
    application: Optional[RuleApplication]
    children: tuple["ProofNode", ...]


class _Search:
    def __init__(self, budget: Budget, atomic_init: bool, static_loopcheck: bool):
        self.budget = budget
        self.atomic_init = atomic_init
        self.static_loopcheck = static_loopcheck

    def run(self, goal: SetSequent) -> Optional[ProofNode]:
        return self._node((goal,))

    def _node(self, history: tuple[SetSequent, ...]) -> Optional[ProofNode]:
        start = history[-1]
        steps, sat = saturate(start)
        self.budget.spend(1 + len(steps))
        cl = closure_of(sat, self.atomic_init)
        if cl is not None:
            return ProofNode(start, steps, sat, cl, None, ())
        h = history[:-1] + (sat,)
        for app in two_premiss_static_applications(sat):
            kids = self._try(h, app, self.static_loopcheck)
            if kids is not None:
                return ProofNode(start, steps, sat, None, app, kids)
        for app in transitional_applications(sat):
            kids = self._try(h, app, True)
            if kids is not None:
                return ProofNode(start, steps, sat, None, app, kids)
        return None

    def _try(
        self, h: tuple[SetSequent, ...], app: RuleApplication, loopcheck: bool
    ) -> Optional[tuple[ProofNode, ...]]:
        """Evaluate an application's premisses left to right; None as soon as
        one premiss loops or is rejected, the remaining ones unexplored."""
        kids = []
        for prem in app.premisses:
            self.budget.spend()
            if loopcheck and any(prem <= old for old in h):
                return None
            kid = self._node(h + (prem,))
            if kid is None:
                return None
            kids.append(kid)
        return tuple(kids)


def proof_tree(
    s: Union[Sequent, SetSequent],
    budget: Union[int, Budget] = DEFAULT_BUDGET,
    *,
    atomic_init: bool = False,
    static_loopcheck: bool = False,
) -> Optional[ProofNode]:
    goal = s if isinstance(s, SetSequent) else to_set_sequent(s)
    searcher = _Search(Budget.ensure(budget), atomic_init, static_loopcheck)
    return searcher.run(goal)


def decide(
    s: Union[Sequent, SetSequent],
    budget: Union[int, Budget] = DEFAULT_BUDGET,
    *,
    atomic_init: bool = False,
    static_loopcheck: bool = False,
) -> bool:
    """Derivability verdict alone."""
    return proof_tree(s, budget, atomic_init=atomic_init, static_loopcheck=static_loopcheck) is not None


def assemble_derivation(node: ProofNode, target: Sequent) -> Derivation:
    """Turn an accepted search tree into a kernel derivation of target.

    Requires the support of target to be node.start.  Saturation moves are
    replayed as one-premiss inferences on the multiset sequent, then the
    node's closing rule or branching application is emitted with the exact
    premisses the kernel schema computes at that multiset conclusion.
    """
    chain: list[tuple[Sequent, RuleId, tuple[Formula, ...]]] = []
    cur = target
    for step in node.steps:
        chain.append((cur, step.rule, step.principal))
        cur = premisses_for(step.rule, step.principal, cur)[0]
    if node.closure is not None:
        rule, principal = node.closure
        d = Derivation(cur, rule, principal)
    else:
        app = node.application
        assert app is not None
        prems = premisses_for(app.rule, app.principal, cur)
        kids = tuple(
            assemble_derivation(child, prem)
            for child, prem in zip(node.children, prems)
        )
        d = Derivation(cur, app.rule, app.principal, kids)
    for conc, rule, principal in reversed(chain):
        d = Derivation(conc, rule, principal, (d,))
    return d


@dataclass(frozen=True)
class SearchResult:
    sequent: Sequent
    accepted: bool
    derivation: Optional[Derivation]
    steps_used: int


def prove(
    s: Sequent,
    budget: Union[int, Budget] = DEFAULT_BUDGET,
    *,
    atomic_init: bool = False,
    static_loopcheck: bool = False,
) -> SearchResult:
    """Search for s and, on acceptance, assemble the checkable derivation."""
    b = Budget.ensure(budget)
    node = proof_tree(s, b, atomic_init=atomic_init, static_loopcheck=static_loopcheck)
    if node is None:
        return SearchResult(s, False, None, b.used)
    return SearchResult(s, True, assemble_derivation(node, s), b.used)
