"""Seeded random generation of frames, models, formulas, and geometric
configurations.  Every generator takes an explicit ``random.Random`` so that
runs are reproducible; per-task streams are derived with ``derived_rng`` and
do not depend on worker count."""

from __future__ import annotations

import random
from fractions import Fraction
from math import isqrt

from .formulas import And, Atom, Box, Diamond, Formula, Iff, Implies, Not, Or, TOP
from .frames import Frame, transitive_closure_pairs
from .geometry import Cylinder, Minkowski, Point, canonical, relate
from .models import Model


def derived_rng(seed: int, task: int) -> random.Random:
    return random.Random((seed * 1_000_003 + task) & 0x7FFFFFFFFFFFFFFF)


# ---------------------------------------------------------------------------
# Frames and models


def random_frame(rng, max_worlds=5, *, close=False, min_worlds=1) -> Frame:
    n = rng.randint(min_worlds, max_worlds)
    worlds = [f"w{i}" for i in range(n)]
    density = rng.choice((0.1, 0.25, 0.4, 0.55, 0.75))
    reflexive = rng.choice((0.0, 0.3, 0.7, 1.0))
    pairs = set()
    for a in worlds:
        for b in worlds:
            prob = reflexive if a == b else density
            if rng.random() < prob:
                pairs.add((a, b))
    if close:
        pairs = transitive_closure_pairs(worlds, pairs)
    return Frame.make(worlds, pairs)


def random_model(rng, frame: Frame, atom_names) -> Model:
    valuation = {}
    for name in atom_names:
        valuation[name] = frozenset(w for w in frame.worlds if rng.random() < 0.5)
    return Model.make(frame, valuation)


def random_formula(rng, depth: int, atom_names) -> Formula:
    if depth <= 0 or rng.random() < 0.2:
        roll = rng.random()
        if roll < 0.1:
            return TOP
        return Atom(rng.choice(atom_names))
    kind = rng.choice(("not", "and", "or", "implies", "iff", "box", "diamond"))
    if kind == "not":
        return Not(random_formula(rng, depth - 1, atom_names))
    if kind == "box":
        return Box(random_formula(rng, depth - 1, atom_names))
    if kind == "diamond":
        return Diamond(random_formula(rng, depth - 1, atom_names))
    left = random_formula(rng, depth - 1, atom_names)
    right = random_formula(rng, depth - 1, atom_names)
    ctor = {"and": And, "or": Or, "implies": Implies, "iff": Iff}[kind]
    return ctor(left, right)


# ---------------------------------------------------------------------------
# Points and geometric configurations


def random_point(rng, spatial_dim: int, *, span=3, denom=4) -> Point:
    coords = tuple(
        Fraction(rng.randint(-span * denom, span * denom), denom)
        for _ in range(spatial_dim + 1)
    )
    return Point(coords)


def random_cylinder_point(rng, space: Cylinder, *, span=3, denom=4) -> Point:
    while True:
        t = Fraction(rng.randint(-span * denom, span * denom), denom)
        theta_scale = space.circumference / denom
        theta = theta_scale * rng.randint(0, denom - 1)
        point = canonical(space, Point((t, theta)))
        if point not in space.punctures:
            return point


def _null_directions(spatial_dim: int, limit: int) -> list[tuple[int, ...]]:
    # integer spatial vectors whose Euclidean norm is itself an integer, so
    # the lifted (norm, vector) is an exactly rational future null direction
    found = []

    def walk(prefix, remaining):
        if remaining == 0:
            sq = sum(c * c for c in prefix)
            if sq > 0 and isqrt(sq) ** 2 == sq:
                found.append((isqrt(sq),) + tuple(prefix))
            return
        for c in range(-limit, limit + 1):
            walk(prefix + [c], remaining - 1)

    walk([], spatial_dim)
    return found


_NULL_DIRECTION_CACHE: dict = {}


def null_directions(spatial_dim: int) -> list[tuple[int, ...]]:
    if spatial_dim not in _NULL_DIRECTION_CACHE:
        limit = {1: 3, 2: 12, 3: 8}.get(spatial_dim, 4)
        _NULL_DIRECTION_CACHE[spatial_dim] = _null_directions(spatial_dim, limit)
    return _NULL_DIRECTION_CACHE[spatial_dim]


def random_null_direction(rng, spatial_dim: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in rng.choice(null_directions(spatial_dim)))


def _shift(point: Point, scale, direction) -> Point:
    return Point(tuple(c + scale * d for c, d in zip(point.coords, direction)))


def random_horismos_future(rng, base: Point, *, denom=4) -> Point:
    direction = random_null_direction(rng, len(base.coords) - 1)
    scale = Fraction(rng.randint(1, 3 * denom), denom)
    return _shift(base, scale, direction)


def random_chron_future(rng, space: Minkowski, base: Point, *, span=3, denom=4) -> Point:
    while True:
        offset = random_point(rng, space.spatial_dim, span=span, denom=denom)
        candidate = Point(
            (base.coords[0] + abs(offset.coords[0]) + Fraction(1, denom),)
            + tuple(b + o for b, o in zip(base.coords[1:], offset.coords[1:]))
        )
        if relate(space, base, candidate).chron:
            return candidate


def random_causal_future(rng, space: Minkowski, base: Point, **kw) -> Point:
    if rng.random() < 0.35:
        return random_horismos_future(rng, base)
    return random_chron_future(rng, space, base, **kw)


def random_aaf_config(rng, spatial_dim: int):
    """Configuration satisfying the witness preconditions: x after y after
    both y_i, x after z, with y1, y2 incomparable."""
    space = Minkowski(spatial_dim)
    while True:
        x = random_point(rng, spatial_dim)
        y = random_causal_future(rng, space, x)
        y1 = random_causal_future(rng, space, y)
        y2 = random_causal_future(rng, space, y)
        z = random_causal_future(rng, space, x)
        r12 = relate(space, y1, y2)
        r21 = relate(space, y2, y1)
        if y1 != y2 and not r12.after and not r21.after:
            return x, y, y1, y2, z


def random_aa2f_config(rng):
    """2D configuration satisfying the two-dimensional witness preconditions;
    mixes interior and light-line placements to reach all proof branches."""
    space = Minkowski(1)
    right = (Fraction(1), Fraction(1))
    left = (Fraction(1), Fraction(-1))
    while True:
        x = random_point(rng, 1)
        mode = rng.random()
        if mode < 0.4:
            y1 = random_causal_future(rng, space, x)
            y2 = random_causal_future(rng, space, x)
            z = random_causal_future(rng, space, x)
        else:
            s1 = Fraction(rng.randint(1, 12), 4)
            s2 = Fraction(rng.randint(1, 12), 4)
            y1 = _shift(x, s1, right)
            y2 = _shift(x, s2, left)
            if mode < 0.7:
                side = right if rng.random() < 0.5 else left
                z = _shift(x, Fraction(rng.randint(1, 12), 4), side)
            else:
                z = random_chron_future(rng, space, x)
        if y1 == y2:
            continue
        if relate(space, y1, y2).after or relate(space, y2, y1).after:
            continue
        return x, y1, y2, z


def random_three_ray_config(rng, spatial_dim: int):
    """x plus three horismos points on pairwise-distinct light rays."""
    assert spatial_dim >= 2
    directions = null_directions(spatial_dim)
    while True:
        x = random_point(rng, spatial_dim)
        picks = [rng.choice(directions) for _ in range(3)]
        points = [
            _shift(x, Fraction(rng.randint(1, 8), 2), tuple(Fraction(c) for c in d))
            for d in picks
        ]
        if _pairwise_distinct_rays(x, points):
            return (x, *points)


def _pairwise_distinct_rays(x, points):
    vecs = [tuple(p - q for p, q in zip(pt.coords, x.coords)) for pt in points]
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            u, v = vecs[i], vecs[j]
            if all(u[0] * vk == v[0] * uk for uk, vk in zip(u[1:], v[1:])):
                return False
    return True


def random_horismos_chain_config(rng, spatial_dim: int):
    """Premise-satisfying chain built constructively: y on a light ray from
    x, and each y_i = y + lambda_i (y - x) further along the same ray."""
    while True:
        x = random_point(rng, spatial_dim)
        direction = random_null_direction(rng, spatial_dim)
        scale = Fraction(rng.randint(0, 8), 2)  # scale 0 gives the x == y case
        y = _shift(x, scale, direction)
        if x == y:
            ray = tuple(d for d in direction)
            y1 = _shift(x, Fraction(rng.randint(1, 8), 2), ray)
            y2 = _shift(x, Fraction(rng.randint(1, 8), 2), ray)
            return x, y, y1, y2
        step = tuple(b - a for a, b in zip(x.coords, y.coords))
        lam1 = Fraction(rng.randint(0, 12), 4)
        lam2 = Fraction(rng.randint(0, 12), 4)
        return x, y, _shift(y, lam1, step), _shift(y, lam2, step)


def random_pushup_triple(rng, space, *, chron_first: bool):
    """Triple x, y, z with x<<y and y<=z (or x<=y, y<<z when not
    chron_first), sampled constructively and verified by relate."""
    if isinstance(space, Minkowski):
        sample_point = lambda: random_point(rng, space.spatial_dim)
        chron_step = lambda base: random_chron_future(rng, space, base)
        causal_step = lambda base: random_causal_future(rng, space, base)
    else:
        sample_point = lambda: random_cylinder_point(rng, space)
        chron_step = lambda base: _cylinder_future(rng, space, base, strict=True)
        causal_step = lambda base: _cylinder_future(rng, space, base, strict=False)
    while True:
        x = sample_point()
        y = chron_step(x) if chron_first else causal_step(x)
        z = causal_step(y) if chron_first else chron_step(y)
        first = relate(space, x, y)
        second = relate(space, y, z)
        ok_first = first.chron if chron_first else first.caus
        ok_second = second.caus if chron_first else second.chron
        if ok_first and ok_second:
            return x, y, z


def _cylinder_future(rng, space: Cylinder, base: Point, *, strict: bool):
    denom = 4
    while True:
        dtheta = space.circumference * Fraction(rng.randint(-denom, denom), denom)
        low = 1 if strict else 0
        du = Fraction(rng.randint(low, 3 * denom), denom)
        candidate = canonical(
            space, Point((base.coords[0] + dtheta + du, base.coords[1] + dtheta))
        )
        if candidate in space.punctures:
            continue
        verdict = relate(space, base, candidate)
        if verdict.chron if strict else verdict.caus:
            return candidate
