"""Models, the satisfaction relation, frame validity, and bisimulation.

Frame validity enumerates valuations over the atoms occurring in the formula
only; this restriction is sound because any other atom is irrelevant to the
formula's truth.  Valuations are scanned as binary counters and worlds in
lexicographic order, so reported counter-models are reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import kernels
from .errors import BudgetExceeded, UnknownWorld
from .formulas import (
    And,
    Atom,
    Bottom,
    Box,
    Diamond,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Top,
    atoms,
)
from .frames import Frame, frame_from_dict, frame_to_dict, preimage

DEFAULT_BUDGET = 1 << 20  # valuation count


@dataclass(frozen=True)
class Model:
    frame: Frame
    valuation: dict

    @staticmethod
    def make(frame: Frame, valuation) -> "Model":
        cleaned = {}
        declared = set(frame.worlds)
        for atom_name, worlds in valuation.items():
            worlds = frozenset(worlds)
            if not worlds <= declared:
                extra = sorted(worlds - declared)
                raise UnknownWorld(f"valuation of {atom_name!r} mentions {extra}")
            cleaned[str(atom_name)] = worlds
        return Model(frame, cleaned)

    def holds_at(self, atom_name, world):
        return world in self.valuation.get(atom_name, frozenset())


def satisfies(model: Model, x: str, f: Formula) -> bool:
    """Satisfaction at a world, by the recursive truth clauses."""
    if x not in model.frame._succ:
        raise UnknownWorld(f"unknown world {x!r}")
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Atom):
        return model.holds_at(f.name, x)
    if isinstance(f, Not):
        return not satisfies(model, x, f.arg)
    if isinstance(f, And):
        return satisfies(model, x, f.left) and satisfies(model, x, f.right)
    if isinstance(f, Or):
        return satisfies(model, x, f.left) or satisfies(model, x, f.right)
    if isinstance(f, Implies):
        return (not satisfies(model, x, f.left)) or satisfies(model, x, f.right)
    if isinstance(f, Iff):
        return satisfies(model, x, f.left) == satisfies(model, x, f.right)
    if isinstance(f, Box):
        return all(satisfies(model, y, f.arg) for y in model.frame.succ(x))
    if isinstance(f, Diamond):
        return any(satisfies(model, y, f.arg) for y in model.frame.succ(x))
    raise TypeError(f"not a formula: {f!r}")


def truth_set(model: Model, f: Formula) -> frozenset[str]:
    """Worlds at which the formula holds."""
    return frozenset(x for x in model.frame.worlds if satisfies(model, x, f))


# ---------------------------------------------------------------------------
# Frame validity by valuation enumeration


def compile_program(f: Formula, atom_index: dict) -> tuple[list[int], list[int]]:
    """Postorder opcode program for the bitmask kernels."""
    ops: list[int] = []
    args: list[int] = []

    def walk(node):
        if isinstance(node, Top):
            ops.append(kernels.OP_TOP)
            args.append(0)
        elif isinstance(node, Bottom):
            ops.append(kernels.OP_BOT)
            args.append(0)
        elif isinstance(node, Atom):
            ops.append(kernels.OP_ATOM)
            args.append(atom_index[node.name])
        elif isinstance(node, Not):
            walk(node.arg)
            ops.append(kernels.OP_NOT)
            args.append(0)
        elif isinstance(node, Box):
            walk(node.arg)
            ops.append(kernels.OP_BOX)
            args.append(0)
        elif isinstance(node, Diamond):
            walk(node.arg)
            ops.append(kernels.OP_DIA)
            args.append(0)
        else:
            walk(node.left)
            walk(node.right)
            opcode = {
                And: kernels.OP_AND,
                Or: kernels.OP_OR,
                Implies: kernels.OP_IMP,
                Iff: kernels.OP_IFF,
            }[type(node)]
            ops.append(opcode)
            args.append(0)

    walk(f)
    return ops, args


def succ_masks(frame: Frame) -> list[int]:
    index = {w: i for i, w in enumerate(frame.worlds)}
    masks = [0] * len(frame.worlds)
    for a, b in frame.rel:
        masks[index[a]] |= 1 << index[b]
    return masks


@dataclass(frozen=True)
class ValidityVerdict:
    valid: bool
    world: str | None = None
    valuation: dict | None = None

    def __bool__(self):
        return self.valid

    def render(self) -> str:
        if self.valid:
            return "VALID"
        val = json.dumps(
            {a: sorted(ws) for a, ws in self.valuation.items()},
            separators=(",", ":"),
            sort_keys=True,
        )
        return f"COUNTER world={self.world} valuation={val}"


def frame_validates(frame: Frame, f: Formula, budget: int = DEFAULT_BUDGET) -> ValidityVerdict:
    """Exhaustive validity check over all valuations of the formula's atoms.

    Raises BudgetExceeded (reporting the required valuation count) instead of
    ever sampling; sampling is never used for validity verdicts.
    """
    names = sorted(atoms(f))
    n = len(frame.worlds)
    bits = n * len(names)
    required = 1 << bits
    if required > budget:
        raise BudgetExceeded(required, budget)
    atom_index = {name: i for i, name in enumerate(names)}
    ops, args = compile_program(f, atom_index)
    hit = kernels.find_countermodel(succ_masks(frame), n, len(names), ops, args, required)
    if hit is None:
        return ValidityVerdict(True)
    v, world_idx = hit
    full = (1 << n) - 1
    valuation = {}
    for name, i in atom_index.items():
        mask = (v >> (i * n)) & full
        valuation[name] = frozenset(
            frame.worlds[j] for j in range(n) if mask & (1 << j)
        )
    return ValidityVerdict(False, frame.worlds[world_idx], valuation)


# ---------------------------------------------------------------------------
# Bisimulation


@dataclass(frozen=True)
class Bisimulation:
    pairs: frozenset

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


@dataclass(frozen=True)
class BisimVerdict:
    holds: bool
    clause: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


def _model_atoms(m1, m2):
    return sorted(set(m1.valuation) | set(m2.valuation))


def is_bisimulation(m1: Model, m2: Model, pairs) -> BisimVerdict:
    """Check the forth, back, and atom-agreement clauses exhaustively.

    Atom agreement is checked in both directions; with one-directional
    agreement, negated atoms would not be preserved and bisimilar worlds
    could disagree on modal formulas.
    """
    pairs = frozenset(tuple(p) for p in pairs)
    if not pairs:
        raise ValueError("a bisimulation must be a nonempty relation")
    for w, w2 in pairs:
        if w not in m1.frame._succ:
            raise UnknownWorld(f"unknown world {w!r} in first model")
        if w2 not in m2.frame._succ:
            raise UnknownWorld(f"unknown world {w2!r} in second model")
    shared_atoms = _model_atoms(m1, m2)
    for w, w2 in sorted(pairs):
        for p in shared_atoms:
            if m1.holds_at(p, w) != m2.holds_at(p, w2):
                return BisimVerdict(False, "atoms", (w, w2, p))
        for v in sorted(m1.frame.succ(w)):
            if not any((v, v2) in pairs for v2 in m2.frame.succ(w2)):
                return BisimVerdict(False, "forth", (w, v, w2))
        for v2 in sorted(m2.frame.succ(w2)):
            if not any((v, v2) in pairs for v in m1.frame.succ(w)):
                return BisimVerdict(False, "back", (w, w2, v2))
    return BisimVerdict(True)


def coarsest_bisimulation(m1: Model, m2: Model) -> Bisimulation | None:
    """Greatest bisimulation between two models, or None when empty.

    Starts from all atom-agreeing pairs (the full product when neither model
    valuates any atom) and prunes forth/back violations to a fixpoint.
    """
    shared_atoms = _model_atoms(m1, m2)
    pairs = {
        (w, w2)
        for w in m1.frame.worlds
        for w2 in m2.frame.worlds
        if all(m1.holds_at(p, w) == m2.holds_at(p, w2) for p in shared_atoms)
    }
    changed = True
    while changed:
        changed = False
        for w, w2 in sorted(pairs):
            ok = all(
                any((v, v2) in pairs for v2 in m2.frame.succ(w2))
                for v in m1.frame.succ(w)
            ) and all(
                any((v, v2) in pairs for v in m1.frame.succ(w))
                for v2 in m2.frame.succ(w2)
            )
            if not ok:
                pairs.discard((w, w2))
                changed = True
    if not pairs:
        return None
    return Bisimulation(frozenset(pairs))


# ---------------------------------------------------------------------------
# Model files


def model_from_dict(data) -> Model:
    frame = frame_from_dict(data)
    return Model.make(frame, data.get("valuations", {}))


def model_to_dict(model: Model) -> dict:
    data = frame_to_dict(model.frame)
    data["valuations"] = {a: sorted(ws) for a, ws in sorted(model.valuation.items())}
    return data


def load_model(path) -> Model:
    with open(path, encoding="utf-8") as handle:
        return model_from_dict(json.load(handle))


def save_model(model: Model, path):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(model_to_dict(model), handle, indent=1, sort_keys=True)
        handle.write("\n")


def diamond_preimage_identity(model: Model, f: Formula) -> bool:
    """|[<>f]| equals the preimage of |[f]| — the cone characterization."""
    return truth_set(model, Diamond(f)) == preimage(model.frame, truth_set(model, f))
