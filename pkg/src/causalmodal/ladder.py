"""Causal frames carrying the chron/after relation pair, validation of their
structural invariants, and the causal-ladder classifier."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .errors import InvariantViolation, UnknownWorld
from .frames import Frame, check_property, transitive_closure_pairs

NOT_FRAME_CHECKABLE = ("strongly_causal", "stably_causal", "globally_hyperbolic")

LADDER_FLAGS = (
    "totally_vicious",
    "ntv",
    "chronological",
    "cntv",
    "causal",
    "past_distinguishing",
    "future_distinguishing",
    "distinguishing",
    "reflecting",
)


@dataclass(frozen=True)
class CausalFrame:
    """Finite worlds with the two primitive relations; caus and chroneq are
    derived as the reflexive completions of after and chron."""

    worlds: tuple[str, ...]
    chron: frozenset
    after: frozenset
    origin: str = "user"

    @staticmethod
    def make(worlds, chron, after, origin="user") -> "CausalFrame":
        worlds = tuple(sorted(set(str(w) for w in worlds)))
        declared = set(worlds)
        chron = frozenset((str(a), str(b)) for a, b in chron)
        after = frozenset((str(a), str(b)) for a, b in after)
        for name, rel in (("chron", chron), ("after", after)):
            for a, b in rel:
                if a not in declared or b not in declared:
                    raise UnknownWorld(f"{name} pair ({a}, {b}) mentions an undeclared world")
        return CausalFrame(worlds, chron, after, origin)

    @property
    def caus(self) -> frozenset:
        return self.after | frozenset((w, w) for w in self.worlds)

    @property
    def chroneq(self) -> frozenset:
        return self.chron | frozenset((w, w) for w in self.worlds)

    def chron_frame(self) -> Frame:
        return Frame.make(self.worlds, self.chron)

    def after_frame(self) -> Frame:
        return Frame.make(self.worlds, self.after)

    def caus_frame(self) -> Frame:
        return Frame.make(self.worlds, self.caus)


def _compose_subset(left, right, target):
    by_source = {}
    for a, b in right:
        by_source.setdefault(a, set()).add(b)
    for a, b in sorted(left):
        for c in sorted(by_source.get(b, ())):
            if (a, c) not in target:
                return (a, b, c)
    return None


def validate(cf: CausalFrame, *, require_loop_property=False):
    """Check the structural invariants, raising InvariantViolation on the
    first failure.  The loop property is only enforced on demand; see
    loop_property for why arbitrary finite frames may legitimately lack it."""
    for a, b in sorted(cf.chron):
        if (a, b) not in cf.after:
            raise InvariantViolation("chron contained in after", (a, b))
    for name, frame in (("chron", cf.chron_frame()), ("after", cf.after_frame())):
        verdict = check_property(frame, "transitive")
        if not verdict.holds:
            raise InvariantViolation(f"{name} transitive", verdict.counterexample)
    witness = _compose_subset(cf.chron, cf.caus, cf.chron)
    if witness is not None:
        raise InvariantViolation("push-up chron ; caus within chron", witness)
    witness = _compose_subset(cf.caus, cf.chron, cf.chron)
    if witness is not None:
        raise InvariantViolation("push-up caus ; chron within chron", witness)
    if require_loop_property:
        verdict = loop_property(cf)
        if not verdict[0]:
            raise InvariantViolation("after loops pass through a second point", verdict[1])


def loop_property(cf: CausalFrame):
    """Whether every after-reflexive point lies on a loop through a second
    point.  Spacetime-derived relations have this by continuity; a finite
    sample may not, so it is a checkable predicate rather than a hard
    invariant of the type."""
    for x in cf.worlds:
        if (x, x) in cf.after:
            if not any(
                (x, w) in cf.after and (w, x) in cf.after
                for w in cf.worlds
                if w != x
            ):
                return False, (x,)
    return True, None


@dataclass(frozen=True)
class LadderPosition:
    totally_vicious: bool
    ntv: bool
    chronological: bool
    cntv: bool
    causal: bool
    past_distinguishing: bool
    future_distinguishing: bool
    distinguishing: bool
    reflecting: bool
    sample_relative: bool = False

    def flags(self) -> dict:
        return {name: getattr(self, name) for name in LADDER_FLAGS}


def classify(cf: CausalFrame, *, distinguishing_relation="chron") -> LadderPosition:
    """Direct-definition ladder flags.

    Distinguishing and reflecting are judged on the chron relation (matching
    the I+/I- cone definitions); pass distinguishing_relation="after" to
    judge them on after instead.  Classifications of sampled spacetimes are
    marked sample-relative: two sampled points can spuriously share their
    sampled cones.
    """
    validate(cf)
    if not cf.worlds:
        raise ValueError("classification needs at least one world")
    chron_refl = [(x, x) in cf.chron for x in cf.worlds]
    after_refl = [(x, x) in cf.after for x in cf.worlds]
    if distinguishing_relation == "chron":
        cone_frame = cf.chron_frame()
    elif distinguishing_relation == "after":
        cone_frame = cf.after_frame()
    else:
        raise ValueError("distinguishing_relation must be 'chron' or 'after'")
    past = check_property(cone_frame, "past_distinguishing").holds
    future = check_property(cone_frame, "future_distinguishing").holds
    return LadderPosition(
        totally_vicious=all(chron_refl),
        ntv=not all(chron_refl),
        chronological=not any(chron_refl),
        cntv=not all(after_refl),
        causal=not any(after_refl),
        past_distinguishing=past,
        future_distinguishing=future,
        distinguishing=past and future,
        reflecting=check_property(cone_frame, "reflecting").holds,
        sample_relative=cf.origin == "sample",
    )


@dataclass(frozen=True)
class ImplicationReport:
    implications: tuple

    @property
    def holds(self) -> bool:
        return all(ok for _, ok in self.implications)

    def violations(self):
        return [name for name, ok in self.implications if not ok]


def check_ladder_implications(pos: LadderPosition) -> ImplicationReport:
    """The implication chain of the refined ladder: causal sits below both
    cNTV and chronological, which each sit below NTV.  Distinguishing below
    causal is a spacetime theorem, not forced by frame definitions, so it is
    deliberately not asserted here."""
    checks = (
        ("causal=>cntv", (not pos.causal) or pos.cntv),
        ("causal=>chronological", (not pos.causal) or pos.chronological),
        ("cntv=>ntv", (not pos.cntv) or pos.ntv),
        ("chronological=>ntv", (not pos.chronological) or pos.ntv),
    )
    return ImplicationReport(checks)


@dataclass(frozen=True)
class AfterIrreflexivityReport:
    caus_antisymmetric: bool
    after_irreflexive: bool
    antisymmetry_witness: tuple | None
    irreflexivity_witness: tuple | None

    @property
    def equivalent(self) -> bool:
        return self.caus_antisymmetric == self.after_irreflexive


def causal_iff_after_irreflexive(cf: CausalFrame) -> AfterIrreflexivityReport:
    """Antisymmetry of caus against irreflexivity of after.  These agree on
    frames with the loop property (in particular spacetime samples); the
    report states both sides rather than assuming the equivalence."""
    anti = check_property(cf.caus_frame(), "antisymmetric")
    irref = check_property(cf.after_frame(), "irreflexive")
    return AfterIrreflexivityReport(
        caus_antisymmetric=anti.holds,
        after_irreflexive=irref.holds,
        antisymmetry_witness=anti.counterexample,
        irreflexivity_witness=irref.counterexample,
    )


def fixtures():
    """Named catalog of figure fixtures with their expected-property
    manifests."""
    from .fixtures import build_catalog

    return build_catalog()


# ---------------------------------------------------------------------------
# Causal-frame files


def causal_frame_from_dict(data) -> CausalFrame:
    worlds = data["worlds"]
    relations = data["relations"]
    if "chron" not in relations or "after" not in relations:
        raise ValueError("causal-frame file needs relations named 'chron' and 'after'")
    rels = {}
    for name in ("chron", "after"):
        pairs = [tuple(p) for p in relations[name]]
        if len(set(pairs)) != len(pairs):
            raise ValueError(f"duplicate pairs in relation {name!r}")
        if "transitive" in data.get("close", []):
            pairs = transitive_closure_pairs(worlds, pairs)
        rels[name] = pairs
    cf = CausalFrame.make(worlds, rels["chron"], rels["after"], data.get("origin", "user"))
    validate(cf)
    return cf


def causal_frame_to_dict(cf: CausalFrame) -> dict:
    data = {
        "worlds": list(cf.worlds),
        "relations": {
            "chron": [list(p) for p in sorted(cf.chron)],
            "after": [list(p) for p in sorted(cf.after)],
        },
    }
    if cf.origin != "user":
        data["origin"] = cf.origin
    return data


def load_causal_frame(path) -> CausalFrame:
    with open(path, encoding="utf-8") as handle:
        return causal_frame_from_dict(json.load(handle))


def save_causal_frame(cf: CausalFrame, path):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(causal_frame_to_dict(cf), handle, indent=1, sort_keys=True)
        handle.write("\n")


def with_origin(cf: CausalFrame, origin: str) -> CausalFrame:
    return replace(cf, origin=origin)
