"""Innocent strategies: deterministic P-view functions, queried on demand.

A strategy answers the question "given this legal play ending with an
Opponent move, what does Proponent do next?".  Innocence means the
answer depends only on the P-view of the play, so most strategies here
are given as a function from P-views to a response.  Strategies whose
responder is easier to state on whole plays (notably composites, which
replay a hidden interaction) supply `play_fn` instead; they remain
innocent, which the test suite checks on every generated trace.

Responses name their justifier: a `view_fn` returns (move, index into
the P-view), a `play_fn` returns (move, index into the play).  Every
emitted response is validated against the arena before being trusted.

Composition runs the standard parallel interaction: the two strategies
exchange moves in the shared middle component, which is hidden from the
outside.  Interactions are capped at `bounds.max_play_len` occurrences
counting hidden moves; hitting the cap raises BoundExceeded, which is
deliberately distinct from a genuine refusal to respond.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .arena import Arena, arrow, make_empty
from .bounds import Bounds
from .plays import (
    ROOT,
    Play,
    is_legal,
    is_o_innocent,
    legality_violation,
    legal_extensions,
    pview_with_positions,
)


class BoundExceeded(Exception):
    """An exploration or interaction hit its configured bound."""


class StrategyError(Exception):
    """A strategy emitted a response its arena does not allow."""


class InconsistentPlay(Exception):
    """A composite was asked about a play it would never have produced."""


class InnocentStrategy:
    def __init__(self, arena: Arena, name: str, view_fn=None, play_fn=None):
        if (view_fn is None) == (play_fn is None):
            raise ValueError("exactly one of view_fn / play_fn required")
        self.arena = arena
        self.name = name
        self._view_fn = view_fn
        self._play_fn = play_fn

    def respond(self, s: Play):
        """Proponent's reply to a legal odd-length play, or None.

        Returns (move, justifier index into s).  Raises BoundExceeded if
        computing the reply hit an interaction bound, StrategyError if
        the underlying function emitted an illegal move.
        """
        if s.arena != self.arena:
            raise ValueError(f"play is over {s.arena.name}, strategy over {self.arena.name}")
        bad = legality_violation(s)
        if bad is not None:
            raise ValueError(f"illegal play: {bad}")
        if len(s.moves) % 2 != 1:
            raise ValueError("can only respond to odd-length plays")
        if self._play_fn is not None:
            r = self._play_fn(s)
        else:
            view, positions = pview_with_positions(s)
            r = self._view_fn(view)
            if r is not None:
                r = (r[0], positions[r[1]])
        if r is None:
            return None
        move, ptr = r
        if move not in self.arena.moves or self.arena.label(move).polarity != "P":
            raise StrategyError(f"{self.name}: emitted non-P move {move!r}")
        if not 0 <= ptr < len(s.moves) or not self.arena.enables(s.moves[ptr][0], move):
            raise StrategyError(f"{self.name}: move {move!r} not enabled at position {ptr}")
        return move, ptr

    def __repr__(self) -> str:
        return f"InnocentStrategy({self.name} : {self.arena.name})"


@dataclass(frozen=True)
class TraceResult:
    plays: frozenset[Play]
    bound_exceeded: int


def explore(sigma: InnocentStrategy, b: Bounds, o_innocent_only: bool = False,
            single_threaded_only: bool = False) -> TraceResult:
    """Even-length plays reachable against sigma within the bounds.

    Opponent ranges over every legal choice, optionally pruned to
    O-innocent or single-threaded continuations; Proponent plays
    sigma's response.  Positions where the response computation hit an
    interaction bound are counted, not silently dropped.
    """
    empty = Play(sigma.arena)
    result = {empty}
    stack = [empty]
    exceeded = 0
    while stack:
        s = stack.pop()
        if len(s.moves) + 2 > b.max_play_len:
            continue
        for so in legal_extensions(s, single_threaded=single_threaded_only):
            if o_innocent_only and not is_o_innocent(so):
                continue
            try:
                r = sigma.respond(so)
            except BoundExceeded:
                exceeded += 1
                continue
            if r is None:
                continue
            sop = so.extend(*r)
            if sop not in result:
                result.add(sop)
                stack.append(sop)
    return TraceResult(frozenset(result), exceeded)


def traces(sigma: InnocentStrategy, b: Bounds, o_innocent_only: bool = False,
           single_threaded_only: bool = False) -> frozenset[Play]:
    """The even-length-prefix-closed trace set of sigma at the bounds."""
    return explore(sigma, b, o_innocent_only, single_threaded_only).plays


def tabulate(sigma: InnocentStrategy, b: Bounds) -> list[tuple[Play, tuple[str, int]]]:
    """The reachable part of sigma's view function, canonically ordered.

    Walks the trace tree, records (P-view, response with view-relative
    pointer) for every answered position, and checks along the way that
    equal views always received equal responses.
    """
    entries: dict[tuple, tuple[tuple, tuple[str, int]]] = {}
    empty = Play(sigma.arena)
    stack = [empty]
    while stack:
        s = stack.pop()
        if len(s.moves) + 2 > b.max_play_len:
            continue
        for so in legal_extensions(s):
            try:
                r = sigma.respond(so)
            except BoundExceeded:
                continue
            if r is None:
                continue
            view, positions = pview_with_positions(so)
            entry = (r[0], positions.index(r[1]))
            key = view.moves
            if key in entries and entries[key][1] != entry:
                raise StrategyError(f"{sigma.name}: view answered two ways")
            entries[key] = (view.moves, entry)
            sop = so.extend(*r)
            stack.append(sop)
    out = [(Play(sigma.arena, k), e) for k, (_, e) in entries.items()]
    out.sort(key=lambda ve: json.dumps(ve[0].to_json(arena_ref="name"),
                                       sort_keys=True))
    return out


def tabulation_to_json(sigma: InnocentStrategy, b: Bounds) -> list[dict]:
    return [
        {"view": v.to_json(arena_ref="name"), "response": {"m": m, "ptr": p}}
        for v, (m, p) in tabulate(sigma, b)
    ]


def from_view_table(arena: Arena, name: str, table: dict[tuple, tuple[str, int]]) -> InnocentStrategy:
    """Strategy backed by a finite map from view move-tuples to responses."""
    def view_fn(v: Play):
        return table.get(v.moves)
    return InnocentStrategy(arena, name, view_fn=view_fn)


def _swap_by_prefix(pairs: list[tuple[str, str]]):
    """Involution on move ids defined by swapping path prefixes.

    `pairs` lists (left, right) prefix pairs; both directions are
    installed and longer prefixes are tried first.
    """
    rules = []
    for a, b in pairs:
        rules.append((a, b))
        rules.append((b, a))
    rules.sort(key=lambda r: -len(r[0]))

    def swap(move: str):
        for src, dst in rules:
            if move.startswith(src):
                return dst + move[len(src):]
        return None

    return swap


def mirror_strategy(arena: Arena, swap, name: str) -> InnocentStrategy:
    """Copycat-style strategy: echo the last Opponent move through `swap`.

    The echo's justifier is found by the pairing discipline of copycat
    views: the partner of the justifier sits immediately before it, with
    an unjustified opener echoed by a move pointing at the opener
    itself.  Views that do not exhibit the discipline get no response.
    """
    def view_fn(v: Play):
        m, ptr = v.moves[-1]
        mm = swap(m)
        if mm is None:
            return None
        if ptr == ROOT:
            j = len(v.moves) - 1
        else:
            partner = swap(v.moves[ptr][0])
            if partner is None:
                return None
            if ptr - 1 >= 0 and v.moves[ptr - 1][0] == partner:
                j = ptr - 1
            else:
                hits = [i for i, (x, _) in enumerate(v.moves) if x == partner]
                if len(hits) != 1:
                    return None
                j = hits[0]
        if not arena.enables(v.moves[j][0], mm):
            return None
        return mm, j

    return InnocentStrategy(arena, name, view_fn=view_fn)


def copycat(a: Arena) -> InnocentStrategy:
    """The identity strategy on arrow(a, a)."""
    cc_arena = arrow(a, a)
    swap = _swap_by_prefix([("L.", "R.")])
    return mirror_strategy(cc_arena, swap, f"copycat({a.name})")


def rename_strategy(sigma: InnocentStrategy, fwd, inv, new_arena: Arena, name: str) -> InnocentStrategy:
    """Transport sigma along a move renaming onto an isomorphic arena."""
    if {fwd(m) for m in sigma.arena.moves} != set(new_arena.moves):
        raise ValueError("renaming does not map onto the target arena")

    def play_fn(s: Play):
        inner = Play(sigma.arena, tuple((inv(m), p) for m, p in s.moves))
        r = sigma.respond(inner)
        if r is None:
            return None
        return fwd(r[0]), r[1]

    return InnocentStrategy(new_arena, name, play_fn=play_fn)


def prefix_renamer(pairs: list[tuple[str, str]]):
    """One-directional prefix rewriter (longest prefix wins)."""
    rules = sorted(pairs, key=lambda r: -len(r[0]))

    def fn(move: str) -> str:
        for src, dst in rules:
            if move.startswith(src):
                return dst + move[len(src):]
        raise ValueError(f"no rename rule for {move!r}")

    return fn


def as_thunk(sigma: InnocentStrategy) -> InnocentStrategy:
    """View a strategy on A as a strategy on arrow(Empty, A)."""
    outer = arrow(make_empty(), sigma.arena)
    fwd = prefix_renamer([("", "R.")])
    inv = prefix_renamer([("R.", "")])
    return rename_strategy(sigma, fwd, inv, outer, f"thunk({sigma.name})")


def compose(sigma: InnocentStrategy, tau: InnocentStrategy, b: Bounds,
            name: str | None = None) -> InnocentStrategy:
    """Sequential composition of sigma : arrow(A, B) with tau : arrow(B, C).

    The composite answers a play over arrow(A, C) by replaying it as the
    unique interaction over the three components: visible moves are laid
    down as given, and between them sigma and tau ping-pong in B until
    one of them surfaces.  The interaction, hidden moves included, may
    not grow past b.max_play_len.

    Component bookkeeping: in the interaction each occurrence is tagged
    A, B or C.  Projecting to sigma keeps A and B (B-initial occurrences
    become unjustified since their justifier lives in C); projecting to
    tau keeps B and C.  An A-initial move is justified by a B-initial in
    the interaction, and re-pointed to that move's own C justifier when
    it surfaces.

    Responses are cached by P-view, which lazily tabulates the
    composite's view function.
    """
    if sigma.arena.kind != "arrow" or tau.arena.kind != "arrow":
        raise ValueError("compose needs arrow-shaped arenas")
    a, b_mid = sigma.arena.parts
    b_mid2, c = tau.arena.parts
    if b_mid != b_mid2:
        raise ValueError(
            f"middle arenas differ: {b_mid.name} vs {b_mid2.name}")
    outer = arrow(a, c)
    cap = b.max_play_len
    cache: dict[tuple, object] = {}
    cname = name or f"({sigma.name} ; {tau.name})"

    def play_fn(s: Play):
        view, positions = pview_with_positions(s)
        key = view.moves
        if key in cache:
            hit = cache[key]
            if hit == "bound":
                raise BoundExceeded(cname)
            if hit is None:
                return None
            mv, vptr = hit
            return mv, positions[vptr]
        try:
            r = _replay(s)
        except BoundExceeded:
            cache[key] = "bound"
            raise
        if r is None:
            cache[key] = None
            return None
        if r[1] not in positions:
            raise StrategyError(f"{cname}: response justifier escaped the P-view")
        cache[key] = (r[0], positions.index(r[1]))
        return r

    def _replay(s: Play):
        u_comp: list[str] = []
        u_move: list[str] = []
        u_ptr: list[int] = []
        vis_of: list[int] = []   # s index -> u index
        s_of: dict[int, int] = {}  # u index -> s index

        def append(comp: str, mv: str, up: int) -> int:
            if len(u_comp) + 1 > cap:
                raise BoundExceeded(cname)
            u_comp.append(comp)
            u_move.append(mv)
            u_ptr.append(up)
            return len(u_comp) - 1

        def project(side: str) -> tuple[Play, list[int]]:
            comps = ("A", "B") if side == "sigma" else ("B", "C")
            strat = sigma if side == "sigma" else tau
            left = "A" if side == "sigma" else "B"
            idx = [i for i in range(len(u_comp)) if u_comp[i] in comps]
            pos_of = {ui: k for k, ui in enumerate(idx)}
            mlist = []
            for ui in idx:
                comp = u_comp[ui]
                tag = ("L." if comp == left else "R.") + u_move[ui]
                up = u_ptr[ui]
                if side == "sigma" and comp == "B" and up != ROOT and u_comp[up] == "C":
                    mlist.append((tag, ROOT))
                elif up == ROOT:
                    mlist.append((tag, ROOT))
                else:
                    mlist.append((tag, pos_of[up]))
            return Play(strat.arena, tuple(mlist)), idx

        def visible_ptr(ui: int) -> int:
            up = u_ptr[ui]
            if up == ROOT:
                return ROOT
            if u_comp[ui] == "A" and u_comp[up] == "B":
                up = u_ptr[up]   # A-initial: surface via the B-initial's C justifier
            return s_of[up]

        def run_until_visible():
            while True:
                lastc = u_comp[-1]
                if lastc == "A":
                    side = "sigma"
                elif lastc == "C":
                    side = "tau"
                else:
                    lab = sigma.arena.label("R." + u_move[-1])
                    side = "tau" if lab.polarity == "P" else "sigma"
                pl, idx = project(side)
                strat = sigma if side == "sigma" else tau
                r = strat.respond(pl)
                if r is None:
                    return None
                mv, pptr = r
                if side == "sigma":
                    comp = "A" if mv.startswith("L.") else "B"
                else:
                    comp = "B" if mv.startswith("L.") else "C"
                ui = append(comp, mv[2:], idx[pptr])
                if comp == "B":
                    continue
                return ui

        for k, (m, ptr) in enumerate(s.moves):
            if k % 2 == 0:
                comp = "C" if m.startswith("R.") else "A"
                up = ROOT if ptr == ROOT else vis_of[ptr]
                ui = append(comp, m[2:], up)
                vis_of.append(ui)
                s_of[ui] = k
            else:
                ui = run_until_visible()
                if ui is None:
                    raise InconsistentPlay(f"{cname}: no response where the play has {m!r}")
                got = ("L." if u_comp[ui] == "A" else "R.") + u_move[ui]
                s_of[ui] = k
                if got != m or visible_ptr(ui) != ptr:
                    raise InconsistentPlay(
                        f"{cname}: computed {got!r} where the play has {m!r}")
                vis_of.append(ui)
        ui = run_until_visible()
        if ui is None:
            return None
        mv = ("L." if u_comp[ui] == "A" else "R.") + u_move[ui]
        s_of[ui] = len(s.moves)
        return mv, visible_ptr(ui)

    return InnocentStrategy(outer, cname, play_fn=play_fn)
