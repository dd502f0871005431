"""
Finite model structures for the four logics.

Worlds are the integers ``0..k-1``. Valuations map an atom name to the frozenset
of worlds where it holds. Kripke and preference models check their frame
conditions on construction; Carmo-Jones models are checked on demand with
:func:`validate_model` because the test suites build deliberately broken ones.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Mapping, Tuple

import yaml

from logiparam.exceptions import ModelError
from logiparam.logic.formula import LogicId
from logiparam.semantics.carmo_jones import cj_violations


def _freeze_valuation(valuation):
    return {name: frozenset(worlds) for name, worlds in sorted(valuation.items())}


@dataclass(frozen=True)
class KripkeModel:
    worlds: Tuple[int, ...]
    access: FrozenSet[Tuple[int, int]]
    valuation: Mapping[str, FrozenSet[int]] = field(default_factory=dict)
    serial: bool = True

    logic = LogicId.KD

    def __post_init__(self):
        object.__setattr__(self, "worlds", tuple(self.worlds))
        object.__setattr__(self, "access", frozenset(self.access))
        object.__setattr__(self, "valuation", _freeze_valuation(self.valuation))
        problems = self.violations()
        if problems:
            raise ModelError("invalid Kripke model", *problems)

    @classmethod
    def build(cls, k, access, valuation=None, serial=True):
        return cls(tuple(range(k)), access, valuation or {}, serial)

    def successors(self, w):
        return frozenset(v for (u, v) in self.access if u == w)

    def violations(self):
        problems = []
        if not self.worlds:
            problems.append("no worlds")
        for u, v in self.access:
            if u not in self.worlds or v not in self.worlds:
                problems.append(f"access pair ({u}, {v}) mentions an unknown world")
        for name, worlds in self.valuation.items():
            if not worlds <= set(self.worlds):
                problems.append(f"valuation of {name} mentions an unknown world")
        if self.serial:
            for w in self.worlds:
                if not self.successors(w):
                    problems.append(f"world {w} has no successor")
        return problems


@dataclass(frozen=True)
class PreferenceModel:
    """``better`` holds ``(w, v)`` when w is at least as good as v"""

    worlds: Tuple[int, ...]
    better: FrozenSet[Tuple[int, int]]
    valuation: Mapping[str, FrozenSet[int]] = field(default_factory=dict)

    logic = LogicId.DDLE

    def __post_init__(self):
        object.__setattr__(self, "worlds", tuple(self.worlds))
        object.__setattr__(self, "better", frozenset(self.better))
        object.__setattr__(self, "valuation", _freeze_valuation(self.valuation))
        problems = self.violations()
        if problems:
            raise ModelError("invalid preference model", *problems)

    @classmethod
    def from_ranking(cls, ranks, valuation=None):
        """Build from ``ranks`` (world -> int), lower ranks being better"""
        worlds = tuple(sorted(ranks))
        better = {(w, v) for w in worlds for v in worlds if ranks[w] <= ranks[v]}
        return cls(worlds, better, valuation or {})

    def best(self, candidates):
        candidates = frozenset(candidates)
        return frozenset(
            w for w in candidates if all((w, v) in self.better for v in candidates)
        )

    def violations(self):
        problems = []
        if not self.worlds:
            problems.append("no worlds")
        for w in self.worlds:
            if (w, w) not in self.better:
                problems.append(f"betterness is not reflexive at {w}")
        for w in self.worlds:
            for v in self.worlds:
                if (w, v) not in self.better and (v, w) not in self.better:
                    problems.append(f"worlds {w} and {v} are incomparable")
                for u in self.worlds:
                    chain = (w, v) in self.better and (v, u) in self.better
                    if chain and (w, u) not in self.better:
                        problems.append(f"betterness is not transitive on {w}, {v}, {u}")
        return problems


@dataclass(frozen=True)
class CJModel:
    worlds: Tuple[int, ...]
    av: Mapping[int, FrozenSet[int]]
    pv: Mapping[int, FrozenSet[int]]
    ob: Mapping[FrozenSet[int], FrozenSet[FrozenSet[int]]]
    valuation: Mapping[str, FrozenSet[int]] = field(default_factory=dict)

    logic = LogicId.DDL_CJ

    def __post_init__(self):
        object.__setattr__(self, "worlds", tuple(self.worlds))
        object.__setattr__(self, "av", {w: frozenset(s) for w, s in self.av.items()})
        object.__setattr__(self, "pv", {w: frozenset(s) for w, s in self.pv.items()})
        object.__setattr__(
            self,
            "ob",
            {frozenset(x): frozenset(frozenset(y) for y in ys) for x, ys in self.ob.items()},
        )
        object.__setattr__(self, "valuation", _freeze_valuation(self.valuation))

    def obligatory(self, context, target):
        return frozenset(target) in self.ob.get(frozenset(context), frozenset())

    def violations(self):
        return cj_violations(self)


@dataclass(frozen=True)
class FolInterp:
    domain: Tuple[str, ...]
    relations: Dict[str, FrozenSet[Tuple[str, ...]]]
    arities: Dict[str, int] = field(default_factory=dict)

    logic = LogicId.FOL

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        relations = {
            name: frozenset(tuple(t) for t in rows) for name, rows in self.relations.items()
        }
        arities = dict(self.arities)
        for name, rows in relations.items():
            if name not in arities:
                arities[name] = len(next(iter(rows))) if rows else 0
        object.__setattr__(self, "relations", relations)
        object.__setattr__(self, "arities", arities)
        problems = self.violations()
        if problems:
            raise ModelError("invalid first-order interpretation", *problems)

    def violations(self):
        problems = []
        if not self.domain:
            problems.append("empty domain")
        for name, rows in self.relations.items():
            for row in rows:
                if len(row) != self.arities[name]:
                    problems.append(
                        f"tuple {row} of {name} does not have arity {self.arities[name]}"
                    )
                if not set(row) <= set(self.domain):
                    problems.append(f"tuple {row} of {name} leaves the domain")
        return problems


def validate_model(model):
    """Return the list of frame-condition violations of ``model``, empty when valid"""
    return model.violations()


def _worlds_of(worlds):
    return sorted(worlds)


def model_to_dict(model):
    """Plain-data view of ``model`` with every set sorted, for YAML and JSON export"""
    if isinstance(model, FolInterp):
        return {
            "logic": str(model.logic),
            "domain": list(model.domain),
            "relations": {
                name: [list(row) for row in sorted(rows)]
                for name, rows in sorted(model.relations.items())
            },
        }

    data = {"logic": str(model.logic), "worlds": list(model.worlds)}
    if isinstance(model, KripkeModel):
        data["access"] = [list(pair) for pair in sorted(model.access)]
        if not model.serial:
            data["serial"] = False
    elif isinstance(model, PreferenceModel):
        data["betterness"] = [
            list(pair) for pair in sorted(model.better) if pair[0] != pair[1]
        ]
    elif isinstance(model, CJModel):
        data["av"] = {w: _worlds_of(model.av.get(w, ())) for w in model.worlds}
        data["pv"] = {w: _worlds_of(model.pv.get(w, ())) for w in model.worlds}
        data["ob"] = [
            {"context": _worlds_of(context), "obligatory": sorted(_worlds_of(y) for y in ys)}
            for context, ys in sorted(
                model.ob.items(), key=lambda item: (len(item[0]), sorted(item[0]))
            )
            if ys
        ]
    data["valuation"] = {name: _worlds_of(worlds) for name, worlds in model.valuation.items()}
    return data


def dump_model(model):
    """Render ``model`` as YAML text: worlds, relations and the per-atom valuation"""
    return yaml.safe_dump(model_to_dict(model), sort_keys=False, default_flow_style=None)
