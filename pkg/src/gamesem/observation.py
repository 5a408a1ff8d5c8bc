"""Observations: what a strategy looks like through O-views alone.

A single completed play is remembered only as the set of O-views of its
prefixes.  Collecting that set for every complete play a strategy can
produce (against innocent, single-threaded Opponents) yields the
strategy's observation: a set of view-sets.  Each view-set is
O-deterministic, and such sets double as tests: an O-deterministic set
induces a probing strategy that walks the recorded views against the
strategy under test and reports success on an auxiliary one-question
arena.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property

from .arena import Arena, arrow, make_empty, make_sigma
from .bounds import Bounds
from .plays import (
    ROOT,
    Play,
    is_complete,
    is_legal,
    is_single_threaded,
    is_well_bracketed,
    lift_to_test,
    oview,
    prefixes,
)
from .strategy import (
    BoundExceeded,
    InnocentStrategy,
    as_thunk,
    compose,
    explore,
    from_view_table,
)


def prefix_oviews(s: Play) -> frozenset[Play]:
    """O-views of every prefix of s (the empty view included)."""
    return frozenset(oview(t) for t in prefixes(s))


def is_oview_shaped(v: Play) -> bool:
    """True when v is its own O-view.

    Equivalently: moves alternate starting with O, and every P-move
    points at the move immediately before it.
    """
    if not is_legal(v):
        return False
    return oview(v) == v


def odet_violation(arena: Arena, views: frozenset[Play]):
    """Why `views` fails to be an O-deterministic view-set, or None.

    Conditions: every element is a single-threaded well-bracketed
    O-view over `arena`; the set is closed under prefixes; nonempty
    elements share one initial move; and an even-length element has at
    most one one-move extension in the set (Opponent branching is
    resolved, Proponent branching is free).
    """
    for v in views:
        if v.arena != arena:
            return f"element over wrong arena {v.arena.name}"
        if not is_oview_shaped(v):
            return f"element is not an O-view: {v!r}"
        if not is_single_threaded(v):
            return f"element has several initial moves: {v!r}"
        if not is_well_bracketed(v):
            return f"element is not well-bracketed: {v!r}"
        for t in prefixes(v):
            if t not in views:
                return f"set is not prefix-closed at {t!r}"
    firsts = {v.moves[0] for v in views if v.moves}
    if len(firsts) > 1:
        return f"several initial moves across the set: {sorted(m for m, _ in firsts)}"
    ochild: dict[tuple, Play] = {}
    for v in views:
        if len(v.moves) % 2 == 1:
            key = v.moves[:-1]
            if key in ochild and ochild[key] != v:
                return f"two Opponent continuations after {v.prefix(len(v.moves) - 1)!r}"
            ochild[key] = v
    return None


def is_o_deterministic(arena: Arena, views: frozenset[Play]) -> bool:
    return odet_violation(arena, views) is None


@dataclass(frozen=True)
class ODetSet:
    """A prefix-closed, O-deterministic set of O-views over one arena."""
    arena: Arena
    views: frozenset[Play]

    @classmethod
    def make(cls, arena: Arena, views) -> "ODetSet":
        closed = set()
        for v in views:
            closed.update(prefixes(v))
        closed = frozenset(closed)
        bad = odet_violation(arena, closed)
        if bad is not None:
            raise ValueError(f"not an O-deterministic view-set: {bad}")
        return cls(arena, closed)

    @cached_property
    def initial(self):
        firsts = {v.moves[0][0] for v in self.views if v.moves}
        return next(iter(firsts)) if firsts else None

    def to_json(self, include_arena: bool = False) -> dict:
        doc = {
            "initial": self.initial,
            "views": [v.to_json(arena_ref="name") for v in sorted_views(self.views)],
        }
        if include_arena:
            doc["arena"] = self.arena.to_json()
        return doc

    @classmethod
    def from_json(cls, doc: dict, arena: Arena | None = None) -> "ODetSet":
        if arena is None:
            if "arena" not in doc:
                raise ValueError("no arena given and none embedded in the document")
            arena = Arena.from_json(doc["arena"])
        views = [Play.from_json(v, arena=arena) for v in doc["views"]]
        return cls.make(arena, views)

    def __repr__(self) -> str:
        return f"ODetSet({self.arena.name}, {len(self.views)} views)"


def play_key(p: Play):
    return (len(p.moves), p.moves)


def sorted_views(views) -> list[Play]:
    return sorted(views, key=play_key)


def viewset_key(views):
    vs = sorted_views(views)
    return (sum(len(v.moves) for v in vs), len(vs), tuple(play_key(v) for v in vs))


def induced_test(s: ODetSet) -> InnocentStrategy:
    """The probing strategy a view-set defines.

    Over arrow(A, Sigma): once the Sigma question is asked, replay the
    recorded Opponent moves of A on the left; whenever the replay
    completes one of the set's complete elements, answer the Sigma
    question instead.  O-determinacy of the set is exactly what makes
    the table below single-valued.
    """
    test_arena = arrow(s.arena, make_sigma())
    table: dict[tuple, tuple[str, int]] = {}

    def put(key: Play, resp: tuple[str, int]):
        if key.moves in table and table[key.moves] != resp:
            raise ValueError("ill-formed test: a view is answered two ways")
        table[key.moves] = resp

    for v in s.views:
        if len(v.moves) % 2 == 1:
            body = lift_to_test(v.prefix(len(v.moves) - 1), s.arena, test_arena)
            m, ptr = v.moves[-1]
            put(body, ("L." + m, 0 if ptr == ROOT else ptr + 1))
        elif v.moves and is_complete(v):
            put(lift_to_test(v, s.arena, test_arena), ("R.a", 0))

    def view_fn(view: Play):
        return table.get(view.moves)

    name = f"test[{len(s.views)} views on {s.arena.name}]"
    return InnocentStrategy(test_arena, name, view_fn=view_fn)


class TestVerdict(enum.Enum):
    TOP = "top"
    BOT = "bot"
    BOUND_EXCEEDED = "bound_exceeded"


def run_test(sigma: InnocentStrategy, s: ODetSet, b: Bounds) -> TestVerdict:
    """Compose sigma with the test for s and see if the probe succeeds."""
    if s.arena != sigma.arena:
        raise ValueError("view-set and strategy live on different arenas")
    probe = compose(as_thunk(sigma), induced_test(s), b)
    opening = Play(probe.arena, (("R.q", ROOT),))
    try:
        r = probe.respond(opening)
    except BoundExceeded:
        return TestVerdict.BOUND_EXCEEDED
    return TestVerdict.TOP if r is not None else TestVerdict.BOT


@dataclass(frozen=True)
class ObservationalStrategy:
    """A strategy's observation: its complete plays seen through O-views."""
    arena: Arena
    sets: frozenset[frozenset[Play]]
    bounds: Bounds = field(compare=False)
    bound_exceeded: int = field(default=0, compare=False)

    def to_json(self, include_arena: bool = False) -> dict:
        ordered = sorted(self.sets, key=viewset_key)
        doc = {
            "bounds": self.bounds.to_json(),
            "bound_exceeded": self.bound_exceeded,
            "sets": [[v.to_json(arena_ref="name") for v in sorted_views(vs)]
                     for vs in ordered],
        }
        if include_arena:
            doc["arena"] = self.arena.to_json()
        return doc

    @classmethod
    def from_json(cls, doc: dict, arena: Arena | None = None) -> "ObservationalStrategy":
        if arena is None:
            if "arena" not in doc:
                raise ValueError("no arena given and none embedded in the document")
            arena = Arena.from_json(doc["arena"])
        sets = frozenset(
            frozenset(Play.from_json(v, arena=arena) for v in vs)
            for vs in doc["sets"])
        return cls(arena, sets, Bounds.from_json(doc.get("bounds", {})),
                   int(doc.get("bound_exceeded", 0)))

    def __repr__(self) -> str:
        return f"ObservationalStrategy({self.arena.name}, {len(self.sets)} sets)"


def observations(sigma: InnocentStrategy, b: Bounds) -> ObservationalStrategy:
    """Collect prefix_oviews(s) over sigma's complete single-threaded traces.

    Opponent is restricted to innocent, single-threaded behavior; each
    complete play contributes one view-set.  Plays cut short by the
    length bound contribute nothing, but positions where the strategy's
    own computation hit a bound are counted in bound_exceeded.
    """
    res = explore(sigma, b, o_innocent_only=True, single_threaded_only=True)
    sets = frozenset(prefix_oviews(p) for p in res.plays if is_complete(p))
    return ObservationalStrategy(sigma.arena, sets, b, res.bound_exceeded)


def obs_leq(x: ObservationalStrategy, y: ObservationalStrategy) -> bool:
    """Every view-set of x contains some view-set of y."""
    if x.arena != y.arena:
        raise ValueError("observations over different arenas")
    return all(any(t <= s for t in y.sets) for s in x.sets)


def is_observational(x: ObservationalStrategy) -> bool:
    """Do the view-sets pairwise disagree on some Opponent move?

    For every two distinct sets there must be a shared even-length body
    that the two extend with different Opponent moves.  Observations of
    innocent strategies should have this property; sets built by hand
    need not.
    """
    sets = list(x.sets)
    for i, s in enumerate(sets):
        for t in sets[i + 1:]:
            if not _o_separated(s, t):
                return False
    return True


def _o_separated(s: frozenset[Play], t: frozenset[Play]) -> bool:
    ext_s = {v.moves[:-1]: v.moves[-1] for v in s if len(v.moves) % 2 == 1}
    ext_t = {v.moves[:-1]: v.moves[-1] for v in t if len(v.moves) % 2 == 1}
    return any(body in ext_t and ext_t[body] != last
               for body, last in ext_s.items())
