"""First-order frame correspondents for the catalog axioms.

Each supported axiom gets a hand-coded polynomial-time check; the
`crosscheck` harness runs the check side by side with valuation-enumeration
validity, which is the defining test for every correspondent here (including
the 3,2-density one, which is derived by minimal-valuation computation rather
than quoted from a published display).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedAxiom
from .formulas import axiom
from .frames import Frame
from .models import ValidityVerdict, frame_validates, succ_masks

SUPPORTED_AXIOMS = ("a4", "aT", "aD", "ad", "ad2", "a2", "ad32", "aaf", "aa2f")


@dataclass(frozen=True)
class FOVerdict:
    axiom: str
    holds: bool
    assignment: dict | None = None

    def __bool__(self):
        return self.holds

    def render(self) -> str:
        if self.holds:
            return "HOLDS"
        binding = ",".join(f"{k}={v}" for k, v in self.assignment.items())
        return f"COUNTER {binding}"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Adj:
    def __init__(self, frame):
        self.worlds = frame.worlds
        self.n = len(frame.worlds)
        self.succ = succ_masks(frame)
        self.pred = [0] * self.n
        index = {w: i for i, w in enumerate(frame.worlds)}
        for a, b in frame.rel:
            self.pred[index[b]] |= 1 << index[a]

    def has(self, i, j):
        return bool(self.succ[i] & (1 << j))

    def name(self, i):
        return self.worlds[i]


def _cex(adj, **indices):
    return {var: adj.name(i) for var, i in indices.items()}


def _check_a4(adj):
    for x in range(adj.n):
        for y in _bits(adj.succ[x]):
            beyond = adj.succ[y] & ~adj.succ[x]
            if beyond:
                z = next(_bits(beyond))
                return _cex(adj, x=x, y=y, z=z)
    return None


def _check_aT(adj):
    for x in range(adj.n):
        if not adj.has(x, x):
            return _cex(adj, x=x)
    return None


def _check_aD(adj):
    for x in range(adj.n):
        if not adj.succ[x]:
            return _cex(adj, x=x)
    return None


def _check_ad(adj):
    for x in range(adj.n):
        for y in _bits(adj.succ[x]):
            if not adj.succ[x] & adj.pred[y]:
                return _cex(adj, x=x, y=y)
    return None


def _check_ad2(adj):
    for x in range(adj.n):
        for y1 in _bits(adj.succ[x]):
            for y2 in _bits(adj.succ[x]):
                if not adj.succ[x] & adj.pred[y1] & adj.pred[y2]:
                    return _cex(adj, x=x, y1=y1, y2=y2)
    return None


def _check_a2(adj):
    for x in range(adj.n):
        for y1 in _bits(adj.succ[x]):
            for y2 in _bits(adj.succ[x]):
                if not adj.succ[y1] & adj.succ[y2]:
                    return _cex(adj, x=x, y1=y1, y2=y2)
    return None


def _check_ad32(adj):
    # Derived by minimal valuation: of any three successors, some successor t
    # reaches two of them.  The y_i need not be distinct, which is what makes
    # this correspondent entail density.
    for x in range(adj.n):
        for y1 in _bits(adj.succ[x]):
            for y2 in _bits(adj.succ[x]):
                p12 = adj.pred[y1] & adj.pred[y2]
                for y3 in _bits(adj.succ[x]):
                    reach2 = p12 | (adj.pred[y3] & (adj.pred[y1] | adj.pred[y2]))
                    if not adj.succ[x] & reach2:
                        return _cex(adj, x=x, y1=y1, y2=y2, y3=y3)
    return None


def _incomparable(adj, y1, y2):
    return y1 != y2 and not adj.has(y1, y2) and not adj.has(y2, y1)


def _check_aaf(adj):
    for x in range(adj.n):
        for y in _bits(adj.succ[x]):
            for y1 in _bits(adj.succ[y]):
                for y2 in _bits(adj.succ[y]):
                    if not _incomparable(adj, y1, y2):
                        continue
                    sees_either = adj.pred[y1] | adj.pred[y2]
                    for z in _bits(adj.succ[x]):
                        if not adj.succ[x] & adj.pred[z] & sees_either:
                            return _cex(adj, x=x, y=y, y1=y1, y2=y2, z=z)
    return None


def _check_aa2f(adj):
    for x in range(adj.n):
        for y1 in _bits(adj.succ[x]):
            for y2 in _bits(adj.succ[x]):
                if not _incomparable(adj, y1, y2):
                    continue
                sees_either = adj.pred[y1] | adj.pred[y2]
                for z in _bits(adj.succ[x]):
                    if not adj.succ[x] & adj.pred[z] & sees_either:
                        return _cex(adj, x=x, y1=y1, y2=y2, z=z)
    return None


_FO_CHECKS = {
    "a4": _check_a4,
    "aT": _check_aT,
    "aD": _check_aD,
    "ad": _check_ad,
    "ad2": _check_ad2,
    "a2": _check_a2,
    "ad32": _check_ad32,
    "aaf": _check_aaf,
    "aa2f": _check_aa2f,
}


def fo_check(frame: Frame, name: str) -> FOVerdict:
    """Exhaustive first-order correspondent check.

    Counterexamples bind all universal variables; the search is lexicographic
    over world tuples, so the reported binding is deterministic.
    """
    if name not in _FO_CHECKS:
        raise UnsupportedAxiom(
            f"no first-order correspondent implemented for {name!r}"
        )
    cex = _FO_CHECKS[name](_Adj(frame))
    return FOVerdict(name, cex is None, cex)


@dataclass(frozen=True)
class CrosscheckReport:
    axiom: str
    fo: FOVerdict
    validity: ValidityVerdict
    agree: bool

    def render(self) -> str:
        return (
            f"axiom={self.axiom} fo={'holds' if self.fo.holds else 'fails'} "
            f"validity={'holds' if self.validity.valid else 'fails'} "
            f"agree={'yes' if self.agree else 'no'}"
        )


def crosscheck(frame: Frame, name: str, budget=None) -> CrosscheckReport:
    """Run the FO check and valuation enumeration side by side."""
    fo = fo_check(frame, name)
    if budget is None:
        validity = frame_validates(frame, axiom(name))
    else:
        validity = frame_validates(frame, axiom(name), budget=budget)
    return CrosscheckReport(name, fo, validity, fo.holds == validity.valid)
