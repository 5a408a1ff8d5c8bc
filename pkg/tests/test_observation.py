import json

import pytest

from gamesem.arena import arrow, make_nat_arena, make_sigma
from gamesem.bounds import Bounds
from gamesem.observation import (
    ODetSet,
    ObservationalStrategy,
    induced_test,
    is_o_deterministic,
    is_observational,
    obs_leq,
    observations,
    odet_violation,
    prefix_oviews,
    run_test,
    viewset_key,
)
from gamesem.observation import TestVerdict as Verdict
from gamesem.pcf import builtin, denote, parse
from gamesem.plays import ROOT, Play, is_complete
from gamesem.strategy import InnocentStrategy, traces

N2 = make_nat_arena(2)
ARROW = arrow(N2, N2)


def P(arena, *moves):
    return Play(arena, tuple(moves))


def V(arena, *pairs):
    return frozenset(P(arena, *pairs[:k]) for k in range(len(pairs) + 1))


def test_prefix_oviews_of_interrogation():
    s = P(ARROW, ("R.q", ROOT), ("L.q", 0), ("L.1", 1), ("R.2", 0))
    got = prefix_oviews(s)
    want = {
        P(ARROW),
        P(ARROW, ("R.q", ROOT)),
        P(ARROW, ("R.q", ROOT), ("L.q", 0)),
        P(ARROW, ("R.q", ROOT), ("L.q", 0), ("L.1", 1)),
        P(ARROW, ("R.q", ROOT), ("R.2", 0)),
    }
    assert got == want


def test_odet_accepts_interrogation_views():
    s = P(ARROW, ("R.q", ROOT), ("L.q", 0), ("L.1", 1), ("R.2", 0))
    assert is_o_deterministic(ARROW, prefix_oviews(s))


def test_odet_rejects_unclosed_set():
    # two numeral answers with the shared one-move body missing
    views = frozenset({
        P(N2, ("q", ROOT), ("2", 0)),
        P(N2, ("q", ROOT), ("1", 0)),
    })
    reason = odet_violation(N2, views)
    assert reason is not None and "prefix" in reason


def test_odet_rejects_opponent_branching():
    # two Opponent answers to the same argument question
    views = frozenset({
        P(ARROW),
        P(ARROW, ("R.q", ROOT)),
        P(ARROW, ("R.q", ROOT), ("L.q", 0)),
        P(ARROW, ("R.q", ROOT), ("L.q", 0), ("L.0", 1)),
        P(ARROW, ("R.q", ROOT), ("L.q", 0), ("L.1", 1)),
    })
    reason = odet_violation(ARROW, views)
    assert reason is not None and "Opponent" in reason


def test_odet_allows_proponent_answer_branching():
    # numeral answers are Proponent moves, so this set is fine
    views = frozenset({
        P(N2),
        P(N2, ("q", ROOT)),
        P(N2, ("q", ROOT), ("2", 0)),
        P(N2, ("q", ROOT), ("1", 0)),
    })
    assert odet_violation(N2, views) is None


def test_odet_allows_proponent_branching():
    # after the opening question both a left probe and a direct answer
    views = frozenset({
        P(ARROW),
        P(ARROW, ("R.q", ROOT)),
        P(ARROW, ("R.q", ROOT), ("L.q", 0)),
        P(ARROW, ("R.q", ROOT), ("L.q", 0), ("L.1", 1)),
        P(ARROW, ("R.q", ROOT), ("R.0", 0)),
    })
    assert is_o_deterministic(ARROW, views)


def test_odet_rejects_two_initials():
    # a product arena has two initial questions; a view-set may use one
    from gamesem.arena import product
    pa = product(N2, N2)
    bad = frozenset({
        Play(pa, ()),
        Play(pa, (("L.q", ROOT),)),
        Play(pa, (("R.q", ROOT),)),
    })
    assert odet_violation(pa, bad) is not None


def test_odet_set_make_closes_prefixes():
    s = ODetSet.make(N2, [P(N2, ("q", ROOT), ("1", 0))])
    assert len(s.views) == 3
    assert s.initial == "q"


def test_odet_set_make_rejects_opponent_branching():
    with pytest.raises(ValueError):
        ODetSet.make(ARROW, [
            P(ARROW, ("R.q", ROOT), ("L.q", 0), ("L.0", 1)),
            P(ARROW, ("R.q", ROOT), ("L.q", 0), ("L.1", 1)),
        ])


def test_odet_set_json_roundtrip():
    s = ODetSet.make(ARROW, prefix_oviews(
        P(ARROW, ("R.q", ROOT), ("L.q", 0), ("L.1", 1), ("R.2", 0))))
    doc = s.to_json(include_arena=True)
    assert ODetSet.from_json(doc) == s
    assert ODetSet.from_json(s.to_json(), arena=ARROW) == s


def test_induced_test_lifts_and_answers():
    s = ODetSet.make(N2, [P(N2, ("q", ROOT), ("1", 0))])
    t = induced_test(s)
    opening = Play(t.arena, (("R.q", ROOT),))
    assert t.respond(opening) == ("L.q", 0)
    answered = opening.extend("L.q", 0).extend("L.1", 1)
    assert t.respond(answered) == ("R.a", 0)
    wrong = opening.extend("L.q", 0).extend("L.2", 1)
    assert t.respond(wrong) is None


def test_run_test_verdicts():
    b = Bounds(max_nat=2, max_play_len=8)
    one = denote(parse("succ 0"), b)
    s_good = ODetSet.make(one.arena, [P(one.arena, ("q", ROOT), ("1", 0))])
    s_bad = ODetSet.make(one.arena, [P(one.arena, ("q", ROOT), ("2", 0))])
    assert run_test(one, s_good, b) is Verdict.TOP
    assert run_test(one, s_bad, b) is Verdict.BOT
    bottom = denote(parse("fix (fun x: nat -> x)"), b)
    assert run_test(bottom, s_good, b) is Verdict.BOT


def test_run_test_empty_set_is_bot():
    b = Bounds(max_nat=1, max_play_len=8)
    one = denote(parse("0"), b)
    s = ODetSet(one.arena, frozenset())
    assert run_test(one, s, b) is Verdict.BOT


def test_observations_of_add():
    b = Bounds(max_nat=2, max_play_len=6)
    x = observations(builtin("add_LR", 2), b)
    assert len(x.sets) == 9  # one per answer pair (m, n) with m, n <= 2
    assert x.bound_exceeded == 0


def test_observations_of_bottom_empty():
    b = Bounds(max_nat=1, max_play_len=8)
    bot = denote(parse("fix (fun x: nat -> x)"), b)
    assert observations(bot, b).sets == frozenset()


def test_observations_complete_plays_only():
    b = Bounds(max_nat=1, max_play_len=8)
    x = observations(denote(parse("0"), b), b)
    assert len(x.sets) == 1
    (s,) = x.sets
    assert P(make_nat_arena(1), ("q", ROOT), ("0", 0)) in s


def test_obs_leq_and_equality():
    b = Bounds(max_nat=2, max_play_len=6)
    x = observations(builtin("add_LR", 2), b)
    y = observations(builtin("add_RL", 2), b)
    assert obs_leq(x, y) and obs_leq(y, x)
    assert x.sets == y.sets


def test_is_observational_on_real_obs():
    b = Bounds(max_nat=2, max_play_len=6)
    for name in ("add_LR", "add_RL"):
        assert is_observational(observations(builtin(name, 2), b))


def test_is_observational_rejects_unseparated():
    # two sets sharing the even body [q] but extended by the same move
    # cannot be told apart by one Opponent move
    s1 = V(N2, ("q", ROOT), ("1", 0))
    s2 = frozenset(s1 | {P(N2, ("q", ROOT), ("1", 0))})
    x = ObservationalStrategy(N2, frozenset({s1}), Bounds())
    assert is_observational(x)  # single set is trivially separated
    b2 = ObservationalStrategy(
        N2,
        frozenset({V(N2, ("q", ROOT), ("1", 0)), V(N2, ("q", ROOT))}),
        Bounds(),
    )
    # {eps, q} vs {eps, q, q1}: at body [q] only one of them answers
    assert not is_observational(b2)


def test_observational_strategy_json_roundtrip_and_order():
    b = Bounds(max_nat=2, max_play_len=6)
    x = observations(builtin("add_LR", 2), b)
    doc = x.to_json(include_arena=True)
    y = ObservationalStrategy.from_json(doc)
    assert y.sets == x.sets and y.arena == x.arena
    blob1 = json.dumps(doc, sort_keys=True)
    blob2 = json.dumps(observations(builtin("add_LR", 2), b).to_json(include_arena=True),
                       sort_keys=True)
    assert blob1 == blob2


def test_viewset_key_orders_by_total_size():
    small = V(N2, ("q", ROOT))
    big = V(N2, ("q", ROOT), ("1", 0))
    assert viewset_key(small) < viewset_key(big)


def test_top_like_strategy_absorbs_every_test():
    # the strategy answering the observation question immediately
    sig = make_sigma()
    top = InnocentStrategy(
        sig, "converge",
        view_fn=lambda v: ("a", 0) if v.moves == (("q", ROOT),) else None)
    b = Bounds(max_nat=1, max_play_len=6, max_view_len=4)
    s = ODetSet.make(sig, [P(sig, ("q", ROOT), ("a", 0))])
    assert run_test(top, s, b) is Verdict.TOP
