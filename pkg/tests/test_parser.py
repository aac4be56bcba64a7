import pytest
from hypothesis import given

from bmdl.formula import (
    And,
    Atom,
    BOT,
    Box,
    Imp,
    Neg,
    Obl,
    Or,
    Sequent,
    TOP,
)
from bmdl.parser import (
    ParseError,
    parse_formula,
    parse_problem,
    parse_sequent,
    print_formula,
    print_sequent,
)

from conftest import formulas, sequents

p, q, r, s = Atom("p"), Atom("q"), Atom("r"), Atom("s")


def test_atoms_and_keywords():
    assert parse_formula("p") == p
    assert parse_formula("dhe_2x") == Atom("dhe_2x")
    assert parse_formula("false") == BOT
    assert parse_formula("true") == TOP
    assert parse_formula("  p  ") == p


def test_operator_precedence():
    assert parse_formula("p & q | r -> s") == Imp(Or(And(p, q), r), s)
    assert parse_formula("p -> q -> r") == Imp(p, Imp(q, r))
    assert parse_formula("p | q & r") == Or(p, And(q, r))
    assert parse_formula("p & q & r") == And(And(p, q), r)
    assert parse_formula("~[]p & q") == And(Neg(Box(p)), q)
    assert parse_formula("[]~p") == Box(Neg(p))
    assert parse_formula("(p -> q) & r") == And(Imp(p, q), r)


def test_obligation_syntax():
    assert parse_formula("O(p / q)") == Obl(p, q)
    assert parse_formula("O(p -> q / ~r)") == Obl(Imp(p, q), Neg(r))
    assert parse_formula("~O(false / q)") == Neg(Obl(BOT, q))
    assert parse_formula("O(O(p / q) / r)") == Obl(Obl(p, q), r)


def test_sequent_syntax():
    assert parse_sequent("p, q |- r") == Sequent((p, q), (r,))
    assert parse_sequent("|- p") == Sequent((), (p,))
    assert parse_sequent("p |-") == Sequent((p,), ())
    assert parse_sequent("|-") == Sequent((), ())
    assert parse_sequent("p, p |- q") == Sequent((p, p), (q,))


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("p &", 1, 4),
        ("(p", 1, 3),
        ("p -> ", 1, 6),
        ("p - q", 1, 3),
        ("[p", 1, 1),
        ("p | | q", 1, 5),
        ("p @ q", 1, 3),
        ("O(p, q)", 1, 4),
        ("p q", 1, 3),
    ],
)
def test_error_positions(text, line, col):
    with pytest.raises(ParseError) as err:
        parse_formula(text)
    assert err.value.line == line
    assert err.value.col == col


def test_error_mentions_expectation():
    with pytest.raises(ParseError) as err:
        parse_sequent("p, |- q")
    assert err.value.expected


@given(formulas)
def test_formula_print_parse_round_trip(f):
    assert parse_formula(print_formula(f)) == f


@given(sequents)
def test_sequent_print_parse_round_trip(s):
    assert parse_sequent(print_sequent(s)) == s


def test_printing_is_minimal_on_parentheses():
    assert print_formula(Imp(Or(And(p, q), r), s)) == "p & q | r -> s"
    assert print_formula(And(p, Or(q, r))) == "p & (q | r)"
    assert print_formula(Imp(Imp(p, q), r)) == "(p -> q) -> r"
    assert print_formula(Neg(And(p, q))) == "~(p & q)"
    assert print_formula(Box(Imp(p, q))) == "[](p -> q)"
    assert print_formula(TOP) == "true"
    assert print_formula(Neg(Neg(p))) == "~~p"


def test_unicode_printing():
    f = Imp(And(Box(p), Neg(q)), Obl(BOT, q))
    assert print_formula(f, unicode=True) == "□p ∧ ¬q → O(⊥ / q)"
    assert print_sequent(Sequent((p,), (q,)), unicode=True) == "p ⊢ q"


def test_problem_files():
    prob = parse_problem(
        """
        # the two clauses share a condition
        assume O(p / r)
        assume O(q / r)
        assume O(p / r)
        goal |- O(p & q / r)
        mode prove
        """
    )
    assert prob.assumptions == (Obl(p, r), Obl(q, r))
    assert prob.goal == Sequent((), (Obl(And(p, q), r),))
    assert prob.mode == "prove"


def test_problem_mode_defaults():
    assert parse_problem("assume p").mode == "consistency"
    assert parse_problem("goal |- p").mode == "prove"
    assert parse_problem("").assumptions == ()


def test_problem_errors_carry_the_file_line():
    with pytest.raises(ParseError) as err:
        parse_problem("assume p\n\nassume q &\n")
    assert err.value.line == 3
    with pytest.raises(ParseError):
        parse_problem("mode sideways")
    with pytest.raises(ParseError):
        parse_problem("prove |- p")


def test_trailing_input_is_rejected():
    with pytest.raises(ParseError):
        parse_formula("p |- q")
    with pytest.raises(ParseError):
        parse_sequent("p |- q |- r")
