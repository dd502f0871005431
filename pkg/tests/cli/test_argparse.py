import argparse

import pytest

from logiparam.cli import (
    LogiParamParser,
    bound_list,
    get_parser,
    logic_list,
    positive_float,
    positive_number,
)


@pytest.mark.cli
def test_positive_number():
    assert 1 == positive_number(1)
    assert 3 == positive_number("3")
    with pytest.raises(argparse.ArgumentTypeError) as err:
        positive_number(0)
        print(err)

    with pytest.raises(argparse.ArgumentTypeError):
        positive_number([1, 2, 3])
    with pytest.raises(argparse.ArgumentTypeError):
        positive_number("hello")


@pytest.mark.cli
def test_positive_float():
    assert positive_float("2.5") == 2.5
    for value in ("0", "-1", "soon"):
        with pytest.raises(argparse.ArgumentTypeError):
            positive_float(value)


@pytest.mark.cli
def test_bound_list():
    assert bound_list("3,1,2") == [1, 2, 3]
    assert bound_list("2, 2") == [2]
    for value in ("", "0,1", "a"):
        with pytest.raises(argparse.ArgumentTypeError):
            bound_list(value)


@pytest.mark.cli
def test_logic_list():
    assert logic_list("kd,FOL,kd") == ["KD", "FOL"]
    assert logic_list("ddl_cj") == ["DDL_CJ"]
    for value in ("S5", ","):
        with pytest.raises(argparse.ArgumentTypeError):
            logic_list(value)


@pytest.mark.cli
def test_parser():
    parser = LogiParamParser()
    commands = ["parse", "consistency", "prove", "verify", "eval", "selfcheck"]
    assert parser.get_subcommands() == commands
    assert isinstance(get_parser(), argparse.ArgumentParser)

    args = parser.parse(
        ["--seed", "7", "prove", "--logic", "kd", "--goal", "O(p)", "--bounds", "2,1"]
    )
    assert args.subcommands == "prove"
    assert args.logic == "KD"
    assert args.bounds == [1, 2]
    assert args.theory is None
    assert args.seed == 7

    args = parser.parse(["verify", "case.json", "--logic", "DDLE", "-t", "2"])
    assert args.formalizer == "gold-mock"
    assert args.iterations == 2

    args = parser.parse(["eval", "fixtures", "-o", "out.csv", "--formalizer", "gold-mock"])
    assert args.formalizer == ["gold-mock"]
    assert args.format is None

    with pytest.raises(SystemExit):
        parser.parse(["prove", "--logic", "S5", "--goal", "p"])
    with pytest.raises(SystemExit):
        parser.parse(["verify", "case.json", "--logic", "KD", "-t", "0"])
