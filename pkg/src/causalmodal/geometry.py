"""Exact causal relations over rational coordinates.

Minkowski verdicts compare squared norms so that every relation is decidable
in exact rational arithmetic; no floating point is used anywhere here.

The cylinder is the null quotient of 2D Minkowski space by
(t, theta) ~ (t + L, theta + L).  Writing u = dt - dtheta on any pair of
representatives, u is invariant under the identification and the relations
collapse to sign tests on u: chron iff u > 0, after iff u >= 0 (a lift
argument shows winding always realizes the causal curve), horismos iff the
pair is causal but not chronological.  Right-null lines close up into
circles, so every point causally loops to itself; removing punctures blocks
exactly the loops and null arcs that would have to pass through them, while
chronological reachability survives because timelike diamonds have interior.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, PreconditionFailed, WitnessSearchExhausted
from .ladder import CausalFrame


@dataclass(frozen=True)
class Point:
    """Point with exact rational coordinates, time component first."""

    coords: tuple

    @staticmethod
    def of(*values) -> "Point":
        return Point(tuple(Fraction(v) for v in values))

    @staticmethod
    def parse(text: str) -> "Point":
        return Point(tuple(Fraction(part.strip()) for part in text.split(",")))

    def format(self) -> str:
        return ",".join(str(c) for c in self.coords)

    @property
    def time(self):
        return self.coords[0]

    @property
    def spatial(self):
        return self.coords[1:]


@dataclass(frozen=True)
class Minkowski:
    spatial_dim: int

    def __post_init__(self):
        if self.spatial_dim < 1:
            raise ValueError("Minkowski space needs at least one spatial dimension")


@dataclass(frozen=True)
class Cylinder:
    circumference: Fraction
    punctures: tuple = ()

    @staticmethod
    def make(circumference, punctures=()) -> "Cylinder":
        length = Fraction(circumference)
        if length <= 0:
            raise ValueError("circumference must be positive")
        canon = []
        for p in punctures:
            if len(p.coords) != 2:
                raise DimensionMismatch("cylinder punctures need (t, theta) coordinates")
            canon.append(_canonical_cylinder(length, p))
        if len(set(canon)) != len(canon):
            raise ValueError("punctures coincide modulo the identification")
        return Cylinder(length, tuple(canon))


Space = Minkowski | Cylinder


def parse_space(text: str) -> Space:
    if text.startswith("mink:"):
        return Minkowski(int(text[len("mink:"):]))
    if text.startswith("cyl:"):
        parts = text[len("cyl:"):].split(",puncture=")
        if not parts[0].startswith("L="):
            raise ValueError(f"cylinder spec must start with L=, got {text!r}")
        length = Fraction(parts[0][2:])
        return Cylinder.make(length, [Point.parse(p) for p in parts[1:]])
    raise ValueError(f"unknown space {text!r}; use mink:N or cyl:L=Q[,puncture=t,th]")


def format_space(space: Space) -> str:
    if isinstance(space, Minkowski):
        return f"mink:{space.spatial_dim}"
    tail = "".join(f",puncture={p.format()}" for p in space.punctures)
    return f"cyl:L={space.circumference}{tail}"


def _canonical_cylinder(length, point: Point) -> Point:
    t, theta = point.coords
    wrapped = theta % length
    return Point((t - (theta - wrapped), wrapped))


def canonical(space: Space, point: Point) -> Point:
    """Canonical representative: for the cylinder, theta shifted into [0, L)
    along the (L, L) identification."""
    if isinstance(space, Minkowski):
        _check_dim(space, point)
        return point
    if len(point.coords) != 2:
        raise DimensionMismatch("cylinder points need (t, theta) coordinates")
    return _canonical_cylinder(space.circumference, point)


def _check_dim(space: Minkowski, point: Point):
    if len(point.coords) != space.spatial_dim + 1:
        raise DimensionMismatch(
            f"point {point.format()} has {len(point.coords)} coordinates, "
            f"space needs {space.spatial_dim + 1}"
        )


@dataclass(frozen=True)
class RelationVerdict:
    chron: bool
    caus: bool
    horismos: bool
    after: bool

    def summary(self) -> str:
        if self.chron:
            return "chron"
        if self.after and self.horismos:
            return "horismos"
        if self.caus:
            return "equal"
        return "unrelated"


def _delta(x: Point, y: Point):
    return tuple(b - a for a, b in zip(x.coords, y.coords))


def _relate_minkowski(space, x, y) -> RelationVerdict:
    _check_dim(space, x)
    _check_dim(space, y)
    d = _delta(x, y)
    dt = d[0]
    gap = dt * dt - sum(c * c for c in d[1:])
    equal = x == y
    chron = dt > 0 and gap > 0
    caus = equal or (dt >= 0 and gap >= 0)
    horismos = equal or (dt >= 0 and gap == 0)
    return RelationVerdict(chron=chron, caus=caus, horismos=horismos, after=caus and not equal)


def _u(x: Point, y: Point):
    # invariant of the (L, L) identification
    return (y.coords[0] - x.coords[0]) - (y.coords[1] - x.coords[1])


def _null_arc_clear(space: Cylinder, x: Point, y: Point) -> bool:
    # x, y canonical with u == 0; the connecting causal curve must follow the
    # right-null circle forward, so it is blocked iff a puncture sits on the
    # open forward arc (the whole circle for the x == y loop)
    length = space.circumference
    on_circle = [q for q in space.punctures if _u(x, q) == 0]
    if not on_circle:
        return True
    if x == y:
        return False
    goal = (y.coords[1] - x.coords[1]) % length
    return not any(0 < (q.coords[1] - x.coords[1]) % length < goal for q in on_circle)


def _relate_cylinder(space, x, y) -> RelationVerdict:
    x = canonical(space, x)
    y = canonical(space, y)
    if x in space.punctures or y in space.punctures:
        raise PreconditionFailed("query point is a puncture, not a point of the space")
    u = _u(x, y)
    equal = x == y
    chron = u > 0
    if u > 0:
        after = True
    elif u == 0:
        after = _null_arc_clear(space, x, y)
    else:
        after = False
    caus = after or equal
    return RelationVerdict(chron=chron, caus=caus, horismos=caus and not chron, after=after)


def relate(space: Space, x: Point, y: Point) -> RelationVerdict:
    """Exact verdict for the four causal relations between two points."""
    if isinstance(space, Minkowski):
        return _relate_minkowski(space, x, y)
    return _relate_cylinder(space, x, y)


def after_reflexive(space: Cylinder, x: Point) -> bool:
    """Whether x causally loops to itself: its right-null circle must avoid
    every puncture."""
    if not isinstance(space, Cylinder):
        raise PreconditionFailed("after_reflexive is a cylinder question")
    x = canonical(space, x)
    if x in space.punctures:
        raise PreconditionFailed("query point is a puncture, not a point of the space")
    return all(_u(x, q) != 0 for q in space.punctures)


def sample_frame(space: Space, points) -> CausalFrame:
    """Finite restriction of the analytic relations to the given points."""
    canon = [canonical(space, p) for p in points]
    names = [p.format() for p in canon]
    if len(set(names)) != len(names):
        raise ValueError("sample points must be distinct in the space")
    chron = set()
    after = set()
    for i, p in enumerate(canon):
        for j, q in enumerate(canon):
            verdict = relate(space, p, q)
            if verdict.chron:
                chron.add((names[i], names[j]))
            if verdict.after:
                after.add((names[i], names[j]))
    return CausalFrame.make(names, chron, after, origin="sample")


# ---------------------------------------------------------------------------
# Witness construction and refutation

_MAX_HALVINGS = 64


def _shift_toward(a: Point, b: Point, lam) -> Point:
    return Point(tuple(p + lam * (q - p) for p, q in zip(a.coords, b.coords)))


def _midpoint(a: Point, b: Point) -> Point:
    return Point(tuple((p + q) / 2 for p, q in zip(a.coords, b.coords)))


def _require(condition, what):
    if not condition:
        raise PreconditionFailed(what)


def _bisect_chron_diamond(space, x, z, target) -> Point:
    # x << z: walk x toward the segment midpoint; openness of the
    # chronological cones guarantees success for small enough steps
    mid = _midpoint(x, z)
    lam = Fraction(1)
    for _ in range(_MAX_HALVINGS):
        t = _shift_toward(x, mid, lam)
        if (
            relate(space, x, t).chron
            and relate(space, t, target).chron
            and relate(space, t, z).chron
        ):
            return t
        lam /= 2
    raise WitnessSearchExhausted("chronological diamond bisection hit the halving cap")


def _bisect_null_segment(space, x, z, target) -> Point:
    # x -> z: walk down the null segment toward x until inside I^-(target)
    lam = Fraction(1, 2)
    for _ in range(_MAX_HALVINGS):
        t = _shift_toward(x, z, lam)
        if relate(space, t, target).chron:
            return t
        lam /= 2
    raise WitnessSearchExhausted("null segment bisection hit the halving cap")


def _witness_ok(space, x, t, z, y1, y2) -> bool:
    return (
        relate(space, x, t).after
        and relate(space, t, z).after
        and (relate(space, t, y1).after or relate(space, t, y2).after)
    )


def aaf_witness(space: Minkowski, x, y, y1, y2, z) -> Point:
    """Intermediate point t with x after t, t after z, and t after one y_i.

    Follows the existence proof: one y_i must be chronological from x; then
    either 2-density inside the open diamond (x << z) or a point on the null
    segment [x, z] close enough to x (x -> z) gives the witness.
    """
    _require(isinstance(space, Minkowski), "witness construction runs in Minkowski spaces")
    _require(relate(space, x, y).after, "need x after y")
    _require(relate(space, y, y1).after, "need y after y1")
    _require(relate(space, y, y2).after, "need y after y2")
    _require(
        y1 != y2
        and not relate(space, y1, y2).after
        and not relate(space, y2, y1).after,
        "need y1, y2 distinct and incomparable",
    )
    if x == z:
        return x
    _require(relate(space, x, z).after, "need x after z")
    chron_targets = [w for w in (y1, y2) if relate(space, x, w).chron]
    if not chron_targets:
        raise WitnessSearchExhausted(
            "neither y_i is chronological from x; contradicts the unique-lightline lemma"
        )
    x_z = relate(space, x, z)
    for target in chron_targets:
        if x_z.chron:
            t = _bisect_chron_diamond(space, x, z, target)
        else:
            t = _bisect_null_segment(space, x, z, target)
        if _witness_ok(space, x, t, z, y1, y2):
            return t
    raise WitnessSearchExhausted("constructed point failed relate verification")


_RIGHT = (Fraction(1), Fraction(1))
_LEFT = (Fraction(1), Fraction(-1))


def _null_coords(v):
    # v = a*(1,1) + b*(1,-1)
    return (v[0] + v[1]) / 2, (v[0] - v[1]) / 2


def _shift_along(p: Point, scale, direction) -> Point:
    return Point(tuple(c + scale * d for c, d in zip(p.coords, direction)))


def aa2f_witness_2d(x, y1, y2, z) -> Point:
    """Witness for the two-dimensional schema: only two light lines pass
    through x, so a third reachable point shares a line with some y_i."""
    space = Minkowski(1)
    for p in (x, y1, y2, z):
        _check_dim(space, p)
    if x == z:
        return x
    _require(relate(space, x, y1).after, "need x after y1")
    _require(relate(space, x, y2).after, "need x after y2")
    _require(relate(space, x, z).after, "need x after z")
    _require(
        y1 != y2
        and not relate(space, y1, y2).after
        and not relate(space, y2, y1).after,
        "need y1, y2 distinct and incomparable",
    )
    x_z = relate(space, x, z)
    for target in (w for w in (y1, y2) if relate(space, x, w).chron):
        if x_z.chron:
            t = _bisect_chron_diamond(space, x, z, target)
        else:
            t = _bisect_null_segment(space, x, z, target)
        if _witness_ok(space, x, t, z, y1, y2):
            return t

    # both y_i sit on the two distinct light rays out of x
    placements = {}
    for name, w in (("y1", y1), ("y2", y2)):
        a, b = _null_coords(_delta(x, w))
        placements[name] = ("right", a) if b == 0 else ("left", b)
    az, bz = _null_coords(_delta(x, z))
    if x_z.horismos:
        z_side = "right" if bz == 0 else "left"
        z_pos = az if z_side == "right" else bz
        for name, w in (("y1", y1), ("y2", y2)):
            side, pos = placements[name]
            if side == z_side:
                t = _shift_along(
                    x, min(z_pos, pos) / 2, _RIGHT if side == "right" else _LEFT
                )
                if _witness_ok(space, x, t, z, y1, y2):
                    return t
    else:
        # x << z: split z - x into null components; the component on y1's
        # ray bounds how far along that ray t may sit
        side, pos = placements["y1"]
        cap = az if side == "right" else bz
        t = _shift_along(x, min(cap, pos) / 2, _RIGHT if side == "right" else _LEFT)
        if _witness_ok(space, x, t, z, y1, y2):
            return t
    raise WitnessSearchExhausted("2D case analysis failed relate verification")


@dataclass(frozen=True)
class NoWitnessCertificate:
    """Certifies that no t other than x satisfies x after t after z with
    t after y1 or t after y2.

    Because x -> z, the causal diamond between them degenerates to the null
    segment [x, z]; along it, t causally below y_i reduces (with w_i, v the
    null direction vectors toward y_i and z) to -2 s eta_i >= 0, where
    eta_i = w_i^0 v^0 - w_i.v > 0 strictly whenever the rays differ.
    """

    x: Point
    y1: Point
    y2: Point
    z: Point
    eta1: Fraction
    eta2: Fraction

    def render(self) -> str:
        return f"CERTIFIED no-witness eta1={self.eta1} eta2={self.eta2}"


def _parallel_rays(u, v) -> bool:
    # future null vectors are positive multiples of one another iff all the
    # time-normalized spatial components agree
    return all(u[0] * vk == v[0] * uk for uk, vk in zip(u[1:], v[1:]))


def no_witness_certificate(x, y1, y2, z) -> NoWitnessCertificate:
    """Certificate that the three-ray horismos configuration admits no
    witness point (spatial dimension at least two)."""
    n = len(x.coords) - 1
    _require(n >= 2, "three distinct rays need spatial dimension >= 2")
    space = Minkowski(n)
    for name, p in (("y1", y1), ("y2", y2), ("z", z)):
        verdict = relate(space, x, p)
        _require(verdict.horismos and verdict.after, f"need x -> {name} with x != {name}")
    for a, b, label in ((y1, y2, "y1/y2"), (y1, z, "y1/z"), (y2, z, "y2/z")):
        _require(
            not relate(space, a, b).caus and not relate(space, b, a).caus,
            f"need {label} spacelike separated",
        )
    w1 = _delta(x, y1)
    w2 = _delta(x, y2)
    v = _delta(x, z)
    for a, b, label in ((w1, w2, "y1/y2"), (w1, v, "y1/z"), (w2, v, "y2/z")):
        _require(not _parallel_rays(a, b), f"rays to {label} must be distinct")
    eta1 = w1[0] * v[0] - sum(a * b for a, b in zip(w1[1:], v[1:]))
    eta2 = w2[0] * v[0] - sum(a * b for a, b in zip(w2[1:], v[1:]))
    _require(eta1 > 0 and eta2 > 0, "degenerate ray configuration")
    return NoWitnessCertificate(x, y1, y2, z, eta1, eta2)


def horismos_chain_check(x, y, y1, y2) -> bool:
    """Whether two points lightlike after a common lightlike chain are
    themselves lightlike related (expected always, by collinearity)."""
    space = Minkowski(len(x.coords) - 1)
    for a, b, label in (
        (x, y, "x -> y"),
        (y, y1, "y -> y1"),
        (y, y2, "y -> y2"),
        (x, y1, "x -> y1"),
        (x, y2, "x -> y2"),
    ):
        _require(relate(space, a, b).horismos, f"need {label}")
    return relate(space, y1, y2).horismos or relate(space, y2, y1).horismos
