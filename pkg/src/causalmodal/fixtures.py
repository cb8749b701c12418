"""Figure fixtures: hand-encoded frames, models, and causal frames together
with their expected-property manifests.

Frames drawn Hasse-style in the source figures are stored with generator
edges and closed transitively here; reflexive loops are listed explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .frames import Frame, transitive_closure_pairs
from .geometry import Cylinder, Minkowski, Point, sample_frame
from .ladder import CausalFrame, validate, with_origin
from .models import Model


@dataclass(frozen=True)
class FramePair:
    """Two frames with a candidate bisimulation between them."""

    f1: Frame
    f2: Frame
    z: frozenset


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str  # frame | model | causal_frame | frame_pair
    obj: object
    manifest: dict


def _closed_frame(worlds, edges, reflexive=()):
    pairs = set(edges) | {(w, w) for w in reflexive}
    return Frame.make(worlds, transitive_closure_pairs(worlds, pairs))


def _fig6a() -> Model:
    worlds = ["root", "0", "1", "00", "01", "top"]
    edges = [
        ("root", "0"),
        ("root", "1"),
        ("0", "00"),
        ("0", "01"),
        ("00", "top"),
        ("01", "top"),
        ("1", "top"),
    ]
    frame = _closed_frame(worlds, edges, reflexive=("0", "1", "top"))
    return Model.make(frame, {"p1": ["00"], "p2": ["01"], "q": ["1"]})


def _fig6b() -> Model:
    worlds = ["s", "0", "1", "00", "01"]
    edges = [("s", "0"), ("s", "1"), ("0", "00"), ("0", "01")]
    pairs = set(edges) | {(w, w) for w in worlds}
    frame = Frame.make(worlds, pairs)  # deliberately not closed
    return Model.make(frame, {"p1": ["00"], "p2": ["01"], "q": ["1"]})


def _fig9() -> Frame:
    worlds = [
        "x",
        "X0_a", "X0_b", "X0_c",
        "X1_a", "X1_b", "X1_c", "X1_d",
        "y",
        "Y0_a", "Y0_b",
        "Y1_a", "Y1_b",
        "ix_a", "ix_b", "ix_c",
        "iy_a",
    ]
    edges = [
        ("x", "X0_a"), ("x", "X1_a"),
        ("X0_a", "X0_b"), ("X0_a", "ix_a"), ("X0_a", "ix_b"), ("X0_a", "ix_c"),
        ("X0_b", "X0_c"),
        ("X0_c", "Y0_b"),
        ("X1_a", "ix_a"), ("X1_a", "ix_b"), ("X1_a", "X1_b"),
        ("X1_b", "X1_c"),
        ("X1_c", "ix_c"), ("X1_c", "X1_d"),
        ("ix_a", "y"),
        ("ix_b", "Y0_a"),
        ("ix_c", "Y1_b"),
        ("y", "Y0_a"), ("y", "Y1_a"),
        ("Y0_a", "Y0_b"), ("Y0_a", "iy_a"),
        ("Y1_a", "Y1_b"), ("Y1_a", "iy_a"),
    ]
    reflexive = (
        "X0_a", "X0_c",
        "X1_a", "X1_b", "X1_d",
        "ix_a", "ix_b", "ix_c",
        "Y0_a", "Y0_b", "Y1_a", "Y1_b",
        "iy_a",
    )
    return _closed_frame(worlds, edges, reflexive=reflexive)


def _fig10() -> FramePair:
    f1 = Frame.make(
        ["x", "y", "z"],
        [("y", "x"), ("z", "x"), ("y", "y"), ("z", "z")],
    )
    f2 = Frame.make(["xp", "yp"], [("yp", "xp"), ("yp", "yp")])
    z = frozenset({("x", "xp"), ("y", "yp"), ("z", "yp")})
    return FramePair(f1, f2, z)


def _fig11() -> Model:
    worlds = ["s", "a", "b", "c"]
    edges = [("s", "a"), ("s", "b"), ("s", "c")]
    frame = _closed_frame(worlds, edges, reflexive=("a", "b", "c"))
    return Model.make(frame, {"p1": ["a"], "p2": ["b"], "q": ["c"]})


def _fig12() -> Model:
    worlds = ["s", "u", "ua", "ub", "v"]
    edges = [("s", "u"), ("s", "v"), ("u", "ua"), ("u", "ub")]
    frame = _closed_frame(worlds, edges, reflexive=("u", "ua", "ub", "v"))
    return Model.make(frame, {"p1": ["ua"], "p2": ["ub"], "q": ["v"]})


def _cylinder_grid(psis, thetas):
    return [Point.of(psi + theta, theta) for psi in psis for theta in thetas]


def _fig4a() -> CausalFrame:
    # 12 grid points, three per right-null circle, so every causal loop is
    # witnessed by a second sampled point
    space = Cylinder.make(1)
    psis = [Fraction(0), Fraction(-1, 4), Fraction(-1, 2), Fraction(-3, 4)]
    thetas = [Fraction(0), Fraction(1, 4), Fraction(1, 2)]
    return with_origin(sample_frame(space, _cylinder_grid(psis, thetas)), "fixture")


def _fig4a_punctured() -> CausalFrame:
    # puncture at the origin; two sampled points share its null circle and
    # become after-irreflexive, the other circles keep their loops
    space = Cylinder.make(1, [Point.of(0, 0)])
    points = [Point.of(Fraction(1, 4), Fraction(1, 4)), Point.of(Fraction(1, 2), Fraction(1, 2))]
    psis = [Fraction(-1, 4), Fraction(-1, 2), Fraction(1, 4)]
    thetas = [Fraction(0), Fraction(1, 4), Fraction(1, 2)]
    points += _cylinder_grid(psis, thetas)
    return with_origin(sample_frame(space, points), "fixture")


def _fig4b() -> CausalFrame:
    """Abstract stand-in for the tilted-cone cylinder: two worlds below the
    boundary (chron-reflexive), two on it (after-reflexive only), two above
    (no loops).  Exact relations of that metric live outside this package's
    scope, so only the caption-level structure is encoded."""
    below = ("b1", "b2")
    boundary = ("m1", "m2")
    above = ("a1", "a2")
    worlds = below + boundary + above
    chron = set()
    for a in below:
        for b in below + boundary + above:
            chron.add((a, b))
    for m in boundary:
        for a in above:
            chron.add((m, a))
    after = set(chron)
    for m in boundary:
        for m2 in boundary:
            after.add((m, m2))
    after.add(("a1", "a2"))
    cf = CausalFrame.make(worlds, chron, after, origin="fixture")
    validate(cf, require_loop_property=True)
    return cf


def _totally_vicious_3() -> CausalFrame:
    worlds = ("v0", "v1", "v2")
    allp = {(a, b) for a in worlds for b in worlds}
    return CausalFrame.make(worlds, allp, allp, origin="fixture")


def _mink_sample(points, dim) -> CausalFrame:
    return with_origin(sample_frame(Minkowski(dim), points), "fixture")


def build_catalog() -> dict[str, Fixture]:
    catalog = [
        Fixture(
            "fig6a",
            "model",
            _fig6a(),
            {
                "properties": {
                    "transitive": True,
                    "serial": True,
                    "dense": True,
                    "confluent": True,
                },
                "validates": {"aaf": False},
            },
        ),
        Fixture(
            "fig6b",
            "model",
            _fig6b(),
            {
                "properties": {"reflexive": True, "transitive": False},
                "validates": {"aaf": False},
            },
        ),
        Fixture(
            "fig9",
            "frame",
            _fig9(),
            {
                "properties": {"transitive": True, "dense": True},
                "fo": {"aaf": True},
                "chains_at": {"x": 2, "y": 2},
            },
        ),
        Fixture(
            "fig10",
            "frame_pair",
            _fig10(),
            {"past_distinguishing": {"f1": True, "f2": False}},
        ),
        Fixture(
            "fig11",
            "model",
            _fig11(),
            {
                "fo": {"aD": True, "a4": True, "ad": True, "aaf": True},
                "validates": {"aa2f": False},
            },
        ),
        Fixture(
            "fig12",
            "model",
            _fig12(),
            {
                "fo": {"a4": True, "ad32": True},
                "validates": {"aa2f": False},
            },
        ),
        Fixture(
            "fig4a",
            "causal_frame",
            _fig4a(),
            {
                "flags": {
                    "totally_vicious": False,
                    "ntv": True,
                    "chronological": True,
                    "cntv": False,
                    "causal": False,
                }
            },
        ),
        Fixture(
            "fig4a_punctured",
            "causal_frame",
            _fig4a_punctured(),
            {
                "flags": {
                    "ntv": True,
                    "chronological": True,
                    "cntv": True,
                    "causal": False,
                }
            },
        ),
        Fixture(
            "fig4b",
            "causal_frame",
            _fig4b(),
            {
                "flags": {
                    "ntv": True,
                    "chronological": False,
                    "cntv": True,
                    "causal": False,
                }
            },
        ),
        Fixture(
            "totally_vicious_3",
            "causal_frame",
            _totally_vicious_3(),
            {
                "flags": {"totally_vicious": True, "ntv": False},
                "chron_equals_caus": True,
            },
        ),
        Fixture(
            "mink1_sample",
            "causal_frame",
            _mink_sample(
                [
                    Point.of(0, 0),
                    Point.of(1, -1),
                    Point.of(1, 0),
                    Point.of(1, 1),
                    Point.of(2, 0),
                    Point.of(3, 2),
                ],
                1,
            ),
            {"flags": {"causal": True, "cntv": True, "chronological": True}},
        ),
        Fixture(
            "mink2_sample",
            "causal_frame",
            _mink_sample(
                [
                    Point.of(0, 0, 0),
                    Point.of(1, 0, 0),
                    Point.of(1, 1, 0),
                    Point.of(2, 0, 1),
                    Point.of(2, 1, 1),
                    Point.of(3, 0, 0),
                ],
                2,
            ),
            {"flags": {"causal": True, "cntv": True, "chronological": True}},
        ),
    ]
    return {fixture.name: fixture for fixture in catalog}
