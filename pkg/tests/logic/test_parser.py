import os
import tempfile

import pytest

from logiparam.exceptions import ParseError
from logiparam.logic.formula import (
    BOT,
    TOP,
    And,
    Atom,
    Box,
    BoxA,
    Const,
    Dia,
    Exists,
    Forall,
    Forb,
    Iff,
    Impl,
    Not,
    Ob,
    ObA,
    ObC,
    Or,
    Perm,
    PermC,
    Pred,
    Var,
)
from logiparam.logic.parser import parse_formula, parse_formula_file, parse_formula_lines, tokenize

p, q, r = Atom("p"), Atom("q"), Atom("r")


@pytest.mark.logic
def test_precedence_and_associativity():
    assert parse_formula("p -> q -> r", "KD") == Impl(p, Impl(q, r))
    assert parse_formula("p & q | r", "KD") == Or(And(p, q), r)
    assert parse_formula("p | q & r", "KD") == Or(p, And(q, r))
    assert parse_formula("p <-> q <-> r", "KD") == Iff(Iff(p, q), r)
    assert parse_formula("~p & q", "KD") == And(Not(p), q)
    assert parse_formula("(p -> q) -> r", "KD") == Impl(Impl(p, q), r)
    assert parse_formula("true -> false", "KD") == Impl(TOP, BOT)


@pytest.mark.logic
def test_deontic_operators():
    assert parse_formula("O(p) -> P(p)", "KD") == Impl(Ob(p), Perm(p))
    assert parse_formula("F(p | q)", "KD") == Forb(Or(p, q))
    assert parse_formula("O(q|p)", "DDLE") == ObC(q, p)
    assert parse_formula("P(~q|p & r)", "DDLE") == PermC(Not(q), And(p, r))
    # a disjunctive consequent needs its own parentheses
    assert parse_formula("O((p | q)|r)", "DDLE") == ObC(Or(p, q), r)
    assert parse_formula("Box p -> Dia q", "DDLE") == Impl(Box(p), Dia(q))
    assert parse_formula("BoxA p & Oa q", "DDL_CJ") == And(BoxA(p), ObA(q))


@pytest.mark.logic
def test_first_order_terms():
    f = parse_formula("forall x. Man(x) -> Mortal(x)", "FOL")
    assert f == Forall("x", Impl(Pred("Man", (Var("x"),)), Pred("Mortal", (Var("x"),))))

    f = parse_formula("exists e. Playing(e) & Agent(e, jim)", "FOL")
    agent = Pred("Agent", (Var("e"), Const("jim")))
    assert f == Exists("e", And(Pred("Playing", (Var("e"),)), agent))

    # nullary predicates stand in for atoms, and O/P/F are ordinary names in FOL
    assert parse_formula("Rain", "FOL") == Pred("Rain", ())
    assert parse_formula("O(jones)", "FOL") == Pred("O", (Const("jones"),))


@pytest.mark.logic
def test_nested_quantifiers_need_parentheses():
    body = Pred("Q", (Var("x"),))
    assert parse_formula("P(a) & (forall x. Q(x))", "FOL") == And(
        Pred("P", (Const("a"),)), Forall("x", body)
    )
    # the body of a quantifier extends to the end of the formula
    assert parse_formula("forall x. Q(x) & P(a)", "FOL") == Forall(
        "x", And(body, Pred("P", (Const("a"),)))
    )
    with pytest.raises(ParseError) as err:
        parse_formula("P(a) & forall x. Q(x)", "FOL")
    assert err.value.category == "grammar"
    assert err.value.span == (7, 13)


@pytest.mark.logic
def test_grammar_error_messages():
    with pytest.raises(ParseError) as err:
        parse_formula("O(p", "KD")
    assert err.value.message.startswith("unexpected end of input")
    assert err.value.span == (3, 3)

    with pytest.raises(ParseError) as err:
        parse_formula("p q", "KD")
    assert err.value.message.startswith("unexpected 'q'")
    assert err.value.span == (2, 3)
    assert err.value.prefix_end == 1


@pytest.mark.logic
def test_tokenize():
    kinds = [(t.kind, t.text) for t in tokenize("O(p)->q")]
    assert kinds == [
        ("ident", "O"),
        ("symbol", "("),
        ("ident", "p"),
        ("symbol", ")"),
        ("symbol", "->"),
        ("ident", "q"),
        ("eof", ""),
    ]


@pytest.mark.logic
def test_lexical_errors_use_byte_spans():
    with pytest.raises(ParseError) as err:
        parse_formula("p $ q", "KD")
    assert err.value.category == "lexical"
    assert err.value.span == (2, 3)

    # 'é' is two bytes in UTF-8
    with pytest.raises(ParseError) as err:
        parse_formula("p & é", "KD")
    assert err.value.span == (4, 6)
    assert err.value.prefix_end <= err.value.span[0]

    with pytest.raises(ParseError) as err:
        parse_formula("p - q", "KD")
    assert "->" in err.value.message


@pytest.mark.logic
@pytest.mark.parametrize("text", ["p &", "(p", "O(p", "p q", "", "forall . p"])
def test_grammar_errors(text):
    with pytest.raises(ParseError) as err:
        parse_formula(text, "KD" if "forall" not in text else "FOL")
    print(err.value)
    assert err.value.category == "grammar"
    assert err.value.prefix_end <= err.value.span[0]


@pytest.mark.logic
def test_signature_violations():
    cases = [
        ("O(q|p)", "KD"),
        ("Box p", "KD"),
        ("Oa p", "DDLE"),
        ("Man(socrates)", "KD"),
        ("R(a) & R(a, b)", "FOL"),
    ]
    for text, logic in cases:
        with pytest.raises(ParseError) as err:
            parse_formula(text, logic)
        print(f"{logic}: {text} -> {err.value}")
        assert err.value.category == "signature-violation"

    with pytest.raises(ParseError) as err:
        parse_formula("p & Box q", "KD")
    assert err.value.span == (4, 9)


@pytest.mark.logic
def test_scope_errors():
    with pytest.raises(ParseError) as err:
        parse_formula("forall x. forall x. P(x)", "FOL")
    assert err.value.category == "scope"

    with pytest.raises(ParseError) as err:
        parse_formula("forall x. x", "FOL")
    assert err.value.category == "scope"


@pytest.mark.logic
def test_parse_formula_lines():
    text = "# premises\nO(p)\n\nO(p) -> P(p)  # axiom D\n"
    assert parse_formula_lines(text, "KD") == [Ob(p), Impl(Ob(p), Perm(p))]

    with pytest.raises(ParseError) as err:
        parse_formula_lines("p\nq &\n", "KD")
    assert err.value.field == "line 2"
    assert "line 2" in err.value.msg


@pytest.mark.logic
def test_parse_formula_file():
    with tempfile.TemporaryDirectory() as tmpdir:
        path = os.path.join(tmpdir, "theory.txt")
        with open(path, "w") as fd:
            fd.write("O(help)\nO(help) -> O(go)\n")
        assert parse_formula_file(path, "KD") == [
            Ob(Atom("help")),
            Impl(Ob(Atom("help")), Ob(Atom("go"))),
        ]
