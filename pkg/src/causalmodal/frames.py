"""Finite Kripke frames: relation algebra, property predicates, clusters.

Worlds are strings ordered lexicographically; every exhaustive search
enumerates in that order so counterexamples are deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

from .errors import NotTransitive, PreconditionFailed, UnknownWorld

FRAME_PROPERTIES = (
    "reflexive",
    "irreflexive",
    "transitive",
    "serial",
    "dense",
    "two_dense",
    "semi_full",
    "confluent",
    "antisymmetric",
    "past_distinguishing",
    "future_distinguishing",
    "distinguishing",
    "reflecting",
)


@dataclass(frozen=True)
class Frame:
    """Finite frame: an ordered world set and a single binary relation."""

    worlds: tuple[str, ...]
    rel: frozenset[tuple[str, str]]
    _succ: dict = field(default_factory=dict, compare=False, repr=False)
    _pred: dict = field(default_factory=dict, compare=False, repr=False)

    @staticmethod
    def make(worlds, pairs) -> "Frame":
        worlds = tuple(sorted(set(worlds)))
        pairs = frozenset((str(a), str(b)) for a, b in pairs)
        frame = Frame(worlds, pairs)
        declared = set(worlds)
        for a, b in pairs:
            if a not in declared or b not in declared:
                raise UnknownWorld(f"relation pair ({a}, {b}) mentions an undeclared world")
        for w in worlds:
            frame._succ[w] = frozenset(b for a, b in pairs if a == w)
            frame._pred[w] = frozenset(a for a, b in pairs if b == w)
        return frame

    def succ(self, x: str) -> frozenset[str]:
        try:
            return self._succ[x]
        except KeyError:
            raise UnknownWorld(f"unknown world {x!r}") from None

    def pred(self, x: str) -> frozenset[str]:
        try:
            return self._pred[x]
        except KeyError:
            raise UnknownWorld(f"unknown world {x!r}") from None

    def has(self, x: str, y: str) -> bool:
        return (x, y) in self.rel

    def reverse(self) -> "Frame":
        return Frame.make(self.worlds, {(b, a) for a, b in self.rel})

    def restrict(self, keep) -> "Frame":
        keep = set(keep)
        return Frame.make(keep, {(a, b) for a, b in self.rel if a in keep and b in keep})


def image(frame: Frame, worlds) -> frozenset[str]:
    """Forward image of a world set under the relation."""
    worlds = set(worlds)
    for w in worlds:
        if w not in frame._succ:
            raise UnknownWorld(f"unknown world {w!r}")
    return frozenset().union(*(frame.succ(w) for w in worlds)) if worlds else frozenset()


def preimage(frame: Frame, worlds) -> frozenset[str]:
    """Backward image of a world set under the relation."""
    worlds = set(worlds)
    for w in worlds:
        if w not in frame._pred:
            raise UnknownWorld(f"unknown world {w!r}")
    return frozenset().union(*(frame.pred(w) for w in worlds)) if worlds else frozenset()


def transitive_closure_pairs(worlds, pairs):
    succ = {w: {b for a, b in pairs if a == w} for w in worlds}
    changed = True
    while changed:
        changed = False
        for w in worlds:
            extra = set().union(*(succ[v] for v in succ[w])) if succ[w] else set()
            if not extra <= succ[w]:
                succ[w] |= extra
                changed = True
    return {(a, b) for a in worlds for b in succ[a]}


def transitive_closure(frame: Frame) -> Frame:
    return Frame.make(frame.worlds, transitive_closure_pairs(frame.worlds, frame.rel))


# ---------------------------------------------------------------------------
# Frame-property predicates


@dataclass(frozen=True)
class PropertyVerdict:
    prop: str
    holds: bool
    counterexample: tuple[str, ...] | None = None

    def __bool__(self):
        return self.holds


def _check_reflexive(fr):
    for x in fr.worlds:
        if not fr.has(x, x):
            return (x,)
    return None


def _check_irreflexive(fr):
    for x in fr.worlds:
        if fr.has(x, x):
            return (x,)
    return None


def _check_transitive(fr):
    for x in fr.worlds:
        for y in sorted(fr.succ(x)):
            for z in sorted(fr.succ(y)):
                if not fr.has(x, z):
                    return (x, y, z)
    return None


def _check_serial(fr):
    for x in fr.worlds:
        if not fr.succ(x):
            return (x,)
    return None


def _check_dense(fr):
    for x in fr.worlds:
        for y in sorted(fr.succ(x)):
            if not any(fr.has(z, y) for z in fr.succ(x)):
                return (x, y)
    return None


def _check_two_dense(fr):
    for x in fr.worlds:
        succ = sorted(fr.succ(x))
        for y1 in succ:
            for y2 in succ:
                if not any(fr.has(z, y1) and fr.has(z, y2) for z in succ):
                    return (x, y1, y2)
    return None


def _check_confluent(fr):
    for x in fr.worlds:
        succ = sorted(fr.succ(x))
        for y1 in succ:
            for y2 in succ:
                if not any(z in fr.succ(y2) for z in sorted(fr.succ(y1))):
                    return (x, y1, y2)
    return None


def _check_antisymmetric(fr):
    for x, y in sorted(fr.rel):
        if x != y and fr.has(y, x):
            return (x, y)
    return None


def _check_past_distinguishing(fr):
    for x in fr.worlds:
        for y in fr.worlds:
            if x < y and fr.pred(x) == fr.pred(y):
                return (x, y)
    return None


def _check_future_distinguishing(fr):
    for x in fr.worlds:
        for y in fr.worlds:
            if x < y and fr.succ(x) == fr.succ(y):
                return (x, y)
    return None


def _check_reflecting(fr):
    # future-cone containment must coincide with reversed past-cone containment
    for x in fr.worlds:
        for y in fr.worlds:
            if (fr.succ(x) >= fr.succ(y)) != (fr.pred(x) <= fr.pred(y)):
                return (x, y)
    return None


def check_property(frame: Frame, prop: str) -> PropertyVerdict:
    """Exhaustively decide a frame property; counterexamples instantiate the
    violated quantifier prefix."""
    if prop == "semi_full":
        for sub in ("serial", "two_dense"):
            verdict = check_property(frame, sub)
            if not verdict.holds:
                return PropertyVerdict(prop, False, verdict.counterexample)
        return PropertyVerdict(prop, True)
    if prop == "distinguishing":
        for sub in ("past_distinguishing", "future_distinguishing"):
            verdict = check_property(frame, sub)
            if not verdict.holds:
                return PropertyVerdict(prop, False, verdict.counterexample)
        return PropertyVerdict(prop, True)
    try:
        checker = _CHECKERS[prop]
    except KeyError:
        raise ValueError(f"unknown frame property {prop!r}") from None
    cex = checker(frame)
    return PropertyVerdict(prop, cex is None, cex)


_CHECKERS = {
    "reflexive": _check_reflexive,
    "irreflexive": _check_irreflexive,
    "transitive": _check_transitive,
    "serial": _check_serial,
    "dense": _check_dense,
    "two_dense": _check_two_dense,
    "confluent": _check_confluent,
    "antisymmetric": _check_antisymmetric,
    "past_distinguishing": _check_past_distinguishing,
    "future_distinguishing": _check_future_distinguishing,
    "reflecting": _check_reflecting,
}


# ---------------------------------------------------------------------------
# Clusters, successor clusters, chains


def _cluster_key(cluster):
    return tuple(sorted(cluster))


@dataclass(frozen=True)
class ClusterDecomposition:
    """Partition of a transitive frame into mutual-reachability clusters.

    ``successor_map`` maps each world x to its successor clusters: clusters C
    other than the cluster of x, entirely after x, with no third cluster
    strictly between x and C.  ``order`` holds cluster reachability pairs.
    """

    clusters: tuple[frozenset[str], ...]
    cluster_of: dict
    degenerate: frozenset[frozenset[str]]
    successor_map: dict
    order: frozenset

    def is_degenerate(self, cluster) -> bool:
        return cluster in self.degenerate


def _require_transitive(frame):
    verdict = check_property(frame, "transitive")
    if not verdict.holds:
        raise NotTransitive(f"frame is not transitive: witness {verdict.counterexample}")


def clusters(frame: Frame) -> ClusterDecomposition:
    _require_transitive(frame)
    cluster_of = {}
    unique = []
    for x in frame.worlds:
        members = frozenset({x} | {y for y in frame.succ(x) if frame.has(y, x)})
        cluster_of[x] = members
        if members not in unique:
            unique.append(members)
    unique.sort(key=_cluster_key)
    degenerate = frozenset(
        c for c in unique if len(c) == 1 and not frame.has(next(iter(c)), next(iter(c)))
    )
    successor_map = {x: successor_clusters(frame, x, unique, cluster_of) for x in frame.worlds}
    order = frozenset(
        (a, b)
        for a in unique
        for b in unique
        if a != b and frame.has(min(a), min(b))
    )
    return ClusterDecomposition(tuple(unique), cluster_of, degenerate, successor_map, order)


def successor_clusters(frame, x, all_clusters, cluster_of):
    own = cluster_of[x]
    succ = frame.succ(x)
    result = []
    for cluster in all_clusters:
        if cluster == own or not cluster <= succ:
            continue
        blocked = False
        for mid in succ - cluster - own:
            if any(frame.has(mid, y) for y in cluster):
                blocked = True
                break
        if not blocked:
            result.append(cluster)
    return tuple(result)


@dataclass(frozen=True)
class ClusterChain:
    clusters: tuple[frozenset[str], ...]

    def __len__(self):
        return len(self.clusters)

    def __iter__(self):
        return iter(self.clusters)


def generated_subframe(frame: Frame, x: str) -> Frame:
    """Subframe on {x} together with everything x sees."""
    return frame.restrict({x} | set(frame.succ(x)))


def _chain_extensions(frame, decomp, seen):
    extensions = []
    for cluster in decomp.clusters:
        if cluster <= seen:
            continue
        want = seen if decomp.is_degenerate(cluster) else seen | cluster
        if all(frame.pred(c) == want for c in cluster):
            extensions.append(cluster)
    return extensions


def chains_of_clusters(frame: Frame, x: str) -> list[ClusterChain]:
    """All maximal chains of clusters rooted at x inside its generated
    subframe.  Each chain starts with the cluster of x; chains of length one
    (no successor cluster can follow) are not reported."""
    _require_transitive(frame)
    sub = generated_subframe(frame, x)
    decomp = clusters(sub)
    root = decomp.cluster_of[x]
    want_root = frozenset() if decomp.is_degenerate(root) else root
    if any(sub.pred(c) != want_root for c in root):
        return []

    results = []

    def extend(chain, seen):
        extensions = _chain_extensions(sub, decomp, seen)
        if not extensions:
            if len(chain) > 1:
                results.append(ClusterChain(tuple(chain)))
            return
        for cluster in sorted(extensions, key=_cluster_key):
            extend(chain + [cluster], seen | cluster)

    extend([root], frozenset(root))
    return results


# ---------------------------------------------------------------------------
# Successor-cluster criterion for the weakened 3-density schema


@dataclass(frozen=True)
class CriterionVerdict:
    holds: bool
    counterexample: tuple | None = None

    def __bool__(self):
        return self.holds


def aaf_cluster_criterion(frame: Frame) -> CriterionVerdict:
    """Cluster-level criterion equivalent to validity of the after formula on
    finite transitive dense frames.

    For every irreflexive x, every non-degenerate successor cluster S of x,
    and every incomparable distinct pair y1, y2 in the image of S, every
    successor cluster of x must sit inside pred(y1) | pred(y2).
    """
    for prop in ("transitive", "dense"):
        verdict = check_property(frame, prop)
        if not verdict.holds:
            raise PreconditionFailed(
                f"aaf_cluster_criterion requires a {prop} frame; "
                f"witness {verdict.counterexample}"
            )
    decomp = clusters(frame)
    for x in frame.worlds:
        if frame.has(x, x):
            continue
        succ_clusters = decomp.successor_map[x]
        union = set().union(*succ_clusters) if succ_clusters else set()
        for cluster in succ_clusters:
            if decomp.is_degenerate(cluster):
                continue
            reach = sorted(image(frame, cluster))
            for y1, y2 in product(reach, reach):
                if y1 >= y2 or frame.has(y1, y2) or frame.has(y2, y1):
                    continue
                allowed = frame.pred(y1) | frame.pred(y2)
                for w in sorted(union):
                    if w not in allowed:
                        return CriterionVerdict(
                            False, (x, _cluster_key(cluster), y1, y2, w)
                        )
    return CriterionVerdict(True)


# ---------------------------------------------------------------------------
# Frame files


def frame_from_dict(data, relation="R") -> Frame:
    worlds = data["worlds"]
    if len(set(worlds)) != len(worlds):
        raise ValueError("duplicate world identifiers")
    try:
        raw_pairs = data["relations"][relation]
    except KeyError:
        raise ValueError(f"frame file lacks relation {relation!r}") from None
    pairs = [tuple(p) for p in raw_pairs]
    if len(set(pairs)) != len(pairs):
        raise ValueError(f"duplicate pairs in relation {relation!r}")
    if "transitive" in data.get("close", []):
        pairs = transitive_closure_pairs(worlds, pairs)
    return Frame.make(worlds, pairs)


def frame_to_dict(frame: Frame) -> dict:
    return {
        "worlds": list(frame.worlds),
        "relations": {"R": [list(p) for p in sorted(frame.rel)]},
    }


def load_frame(path, relation="R") -> Frame:
    with open(path, encoding="utf-8") as handle:
        return frame_from_dict(json.load(handle), relation=relation)


def save_frame(frame: Frame, path):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(frame_to_dict(frame), handle, indent=1, sort_keys=True)
        handle.write("\n")
