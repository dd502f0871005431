"""
Constraints on the Carmo-Jones obligation function ``ob``.

``ob`` maps a context X (a set of worlds) to the sets of worlds that are
obligatory in that context. Each :class:`ObRule` is a universally quantified
implication over subsets of the worlds; the same table drives
:func:`cj_violations` and the clauses of the bounded encoder, so the two never
disagree.
"""

import itertools
from dataclasses import dataclass
from typing import Callable

EMPTY = frozenset()


def subsets(worlds):
    """All subsets of ``worlds`` as frozensets, ordered by size then content"""
    worlds = sorted(worlds)
    return [
        frozenset(combo)
        for size in range(len(worlds) + 1)
        for combo in itertools.combinations(worlds, size)
    ]


@dataclass(frozen=True)
class ObRule:
    """``guard(*sets)`` implies that if every pair of ``body`` is in ob then ``head`` is.

    A rule without a head forbids the body outright.
    """

    name: str
    description: str
    arity: int
    guard: Callable
    body: Callable
    head: Callable

    def instances(self, worlds):
        """Yield ``(body pairs, head pair or None)`` for every guarded instance over ``worlds``"""
        for sets in itertools.product(subsets(worlds), repeat=self.arity):
            if self.guard(*sets):
                yield self.body(*sets), self.head(*sets)


CJ_OB_RULES = (
    ObRule(
        "5a",
        "no context makes the empty set obligatory",
        1,
        lambda X: True,
        lambda X: [(X, EMPTY)],
        lambda X: None,
    ),
    ObRule(
        "5b",
        "obligations depend only on their part inside the context",
        3,
        lambda X, Y, Z: Y != Z and Y & X == Z & X,
        lambda X, Y, Z: [(X, Y)],
        lambda X, Y, Z: (X, Z),
    ),
    ObRule(
        "5c",
        "jointly satisfiable obligations of one context aggregate",
        3,
        lambda X, Y, Z: bool(X & Y & Z),
        lambda X, Y, Z: [(X, Y), (X, Z)],
        lambda X, Y, Z: (X, Y & Z),
    ),
    ObRule(
        "5d",
        "an obligation survives extending its context",
        3,
        lambda X, Y, Z: Y <= X <= Z,
        lambda X, Y, Z: [(X, Y)],
        lambda X, Y, Z: (Z, (Z - X) | Y),
    ),
    ObRule(
        "5e",
        "an obligation survives restricting its context to a set it still meets",
        3,
        lambda X, Y, Z: Y <= X and bool(Y & Z),
        lambda X, Y, Z: [(X, Z)],
        lambda X, Y, Z: (Y, Z),
    ),
)


def _fmt(pair):
    context, obligation = pair
    return f"{sorted(obligation)} in ob({sorted(context)})"


def frame_violations(worlds, av, pv):
    problems = []
    for w in worlds:
        if not av.get(w):
            problems.append(f"av({w}) is empty")
        if not av.get(w, EMPTY) <= pv.get(w, EMPTY):
            problems.append(f"av({w}) is not a subset of pv({w})")
        if w not in pv.get(w, EMPTY):
            problems.append(f"world {w} is not in pv({w})")
    return problems


def ob_violations(worlds, ob):
    """Check ``ob`` against :data:`CJ_OB_RULES`, returning one message per failed instance"""
    def member(pair):
        context, obligation = pair
        return obligation in ob.get(context, EMPTY)

    problems = []
    for rule in CJ_OB_RULES:
        for body, head in rule.instances(worlds):
            if not all(member(pair) for pair in body):
                continue
            if head is None:
                problems.append(f"{rule.name}: {_fmt(body[0])} is forbidden")
            elif not member(head):
                premises = " and ".join(_fmt(pair) for pair in body)
                problems.append(f"{rule.name}: {premises} requires {_fmt(head)}")
    return problems


def cj_violations(model):
    frame = frame_violations(model.worlds, model.av, model.pv)
    return frame + ob_violations(model.worlds, model.ob)
