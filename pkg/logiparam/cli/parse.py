from rich.tree import Tree

from logiparam.defaults import console
from logiparam.logic.formula import Atom, Pred, _Quantifier
from logiparam.logic.parser import parse_formula_file
from logiparam.logic.printer import pretty


def _label(f):
    name = type(f).__name__
    if isinstance(f, Atom):
        return f"{name} [bold]{f.name}[/bold]"
    if isinstance(f, Pred):
        args = ", ".join(str(arg) for arg in f.args)
        return f"{name} [bold]{f.name}[/bold]({args})"
    if isinstance(f, _Quantifier):
        return f"{name} [bold]{f.var}[/bold]"
    return name


def ast_tree(f, tree=None):
    """Return a rich :class:`Tree` of the syntax tree of ``f``"""
    node = Tree(_label(f)) if tree is None else tree.add(_label(f))
    for child in f.children():
        ast_tree(child, node)
    return node


def parse_cmd(path, logic, ast=False):
    """Entry point for ``logiparam parse``. Prints every formula of ``path`` in
    canonical form, or as a syntax tree with ``--ast``.

    Raises:
        ParseError: located at the offending line of the file
    """
    formulas = parse_formula_file(path, logic)
    for index, f in enumerate(formulas, start=1):
        if ast:
            console.print(ast_tree(f))
        else:
            console.print(f"{index:>3}  {pretty(f)}", markup=False, highlight=False)
    console.print(f"Parsed {len(formulas)} formula(s) in {logic}", style="bold blue")
    return 0
