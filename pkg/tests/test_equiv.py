import pytest

from gamesem.arena import arrow, make_nat_arena, make_sigma, product
from gamesem.bounds import Bounds
from gamesem.corpus import CorpusEntry, entry
from gamesem.equiv import (
    brute_force_leq,
    check_category_laws,
    enumerate_closed_odet_sets,
    enumerate_oviews,
    obs_equiv,
)
from gamesem.observation import is_o_deterministic, is_oview_shaped
from gamesem.plays import ROOT, Play, is_well_bracketed
from gamesem.strategy import InnocentStrategy

N1 = make_nat_arena(1)
FLAT = Bounds(max_nat=1, max_play_len=8, max_view_len=4)


def _sigma_pair():
    sig = make_sigma()
    top = InnocentStrategy(
        sig, "converge",
        view_fn=lambda v: ("a", 0) if v.moves == (("q", ROOT),) else None)
    bot = InnocentStrategy(sig, "diverge", view_fn=lambda v: None)
    return sig, top, bot


# ----------------------------------------------------- view enumeration


def test_enumerate_oviews_shape_and_cap():
    a = arrow(N1, N1)
    vs = enumerate_oviews(a, 4)
    assert all(is_oview_shaped(v) for v in vs)
    assert all(is_well_bracketed(v) for v in vs)
    assert all(len(v.moves) <= 4 for v in vs)
    assert len(vs) == len(set(vs))
    assert Play(a, ()) in vs


def test_enumerate_oviews_flat():
    vs = enumerate_oviews(N1, 4)
    # empty, the question, and one view per answer
    assert len(vs) == 4


def test_closed_set_counts():
    counts = {
        "flat": (N1, 6),
        "first_order": (arrow(N1, N1), 18),
        "two_arguments": (arrow(product(N1, N1), N1), 66),
        "curried": (arrow(N1, arrow(N1, N1)), 66),
    }
    for _, (a, want) in counts.items():
        got = enumerate_closed_odet_sets(a, 4)
        assert len(got) == want
        assert len(set(got)) == want


def test_closed_sets_are_all_deterministic():
    a = arrow(N1, N1)
    sets = enumerate_closed_odet_sets(a, 4)
    assert frozenset() in sets
    assert frozenset({Play(a, ())}) in sets
    for vs in sets:
        assert is_o_deterministic(a, vs)


# ----------------------------------------------------------- obs_equiv


def test_obs_equiv_positive():
    b = Bounds(max_nat=2, max_play_len=6)
    r = obs_equiv(entry("add_LR").build(), entry("add_RL").build(), b)
    assert r.equal and r.witness is None and r.witness_side is None
    assert r.verdict == "EQUIV_AT_BOUNDS"
    assert r.to_json()["bound_exceeded_count"] == 0


def test_obs_equiv_negative_picks_smallest_witness():
    add = CorpusEntry("add_LR", None, FLAT).build()
    proj = CorpusEntry("proj_fst", None, FLAT).build()
    r = obs_equiv(add, proj, FLAT)
    assert not r.equal and r.verdict == "INEQUIV"
    # smallest separating behaviour: the projection answering 0 after
    # reading only its first argument
    assert r.witness_side == "right"
    got = sorted([tuple(m for m, _ in v.moves) for v in r.witness.views],
                 key=lambda t: (len(t), t))
    assert got == [
        (),
        ("R.q",),
        ("R.q", "L.L.q"),
        ("R.q", "R.0"),
        ("R.q", "L.L.q", "L.L.0"),
    ]


def test_obs_equiv_rejects_arena_mismatch():
    b = FLAT
    with pytest.raises(ValueError):
        obs_equiv(CorpusEntry("num_0", "0", b).build(),
                  CorpusEntry("proj_fst", None, b).build(), b)


def test_obs_equiv_symmetric_verdict():
    add = CorpusEntry("add_LR", None, FLAT).build()
    proj = CorpusEntry("proj_fst", None, FLAT).build()
    r1 = obs_equiv(add, proj, FLAT)
    r2 = obs_equiv(proj, add, FLAT)
    assert r1.witness == r2.witness
    assert {r1.witness_side, r2.witness_side} == {"left", "right"}


# ------------------------------------------------------ brute_force_leq


def test_brute_force_leq_on_observation_arena():
    sig, top, bot = _sigma_pair()
    b = Bounds(max_nat=1, max_play_len=6, max_view_len=4)
    r = brute_force_leq(bot, top, b)
    assert r.holds and r.verdict == "HOLDS_AT_BOUNDS"
    assert r.tested == 4 and r.bound_exceeded == 0
    assert r.witness is None


def test_brute_force_leq_failure_witness():
    sig, top, bot = _sigma_pair()
    b = Bounds(max_nat=1, max_play_len=6, max_view_len=4)
    r = brute_force_leq(top, bot, b)
    assert not r.holds and r.verdict == "FAILS"
    got = sorted([tuple(m for m, _ in v.moves) for v in r.witness.views],
                 key=len)
    assert got == [(), ("q",), ("q", "a")]
    doc = r.to_json()
    assert doc["verdict"] == "FAILS" and doc["tested"] == 4


def test_brute_force_agrees_with_obs_on_numerals():
    b = FLAT
    zero = CorpusEntry("num_0", "0", b).build()
    one = CorpusEntry("num_1", "1", b).build()
    assert not obs_equiv(zero, one, b).equal
    fwd = brute_force_leq(zero, one, b)
    bwd = brute_force_leq(one, zero, b)
    assert not (fwd.holds and bwd.holds)


# ---------------------------------------------------------------- laws


def test_category_laws_hold_and_report():
    rep = check_category_laws(Bounds())
    assert rep.all_pass
    assert len(rep.checks) == 11
    laws = {c.law for c in rep.checks}
    assert laws == {"identity_left", "identity_right", "associativity",
                    "associativity_value", "congruence"}
    doc = rep.to_json()
    assert doc["verdict"] == "ALL_LAWS_HOLD"
    assert all(c["passed"] for c in doc["checks"])


def test_associativity_value_names_the_sum():
    rep = check_category_laws(Bounds(max_nat=4))
    assert rep.all_pass
    (val,) = [c for c in rep.checks if c.law == "associativity_value"]
    assert val.subject == "equals numeral 4"
