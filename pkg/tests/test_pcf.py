import pytest

from gamesem.arena import arrow, make_nat_arena
from gamesem.bounds import Bounds
from gamesem.pcf import (
    NAT,
    Add,
    App,
    Ifz,
    Lam,
    Num,
    PcfParseError,
    PcfTypeError,
    Succ,
    TFun,
    Var,
    builtin,
    denote,
    parse,
    parse_type,
    pragmas,
    term_to_json,
    tokenize,
    typecheck,
)
from gamesem.plays import ROOT, Play
from gamesem.strategy import traces


# ------------------------------------------------------------ lexing


def test_tokenize_skips_comments_and_tracks_positions():
    toks = tokenize("succ 0 # trailing note\n+ 1")
    assert [t.text for t in toks] == ["succ", "0", "+", "1", ""]
    assert toks[0].pos == (1, 1)
    assert toks[1].pos == (1, 6)
    assert toks[2].pos == (2, 1)


def test_tokenize_identifier_charset():
    toks = tokenize("fun x': nat -> x_2")
    assert [t.text for t in toks if t.kind == "ident"] == ["x'", "x_2"]


def test_tokenize_rejects_stray_character():
    with pytest.raises(PcfParseError) as e:
        tokenize("0 ? 1")
    assert "1:3" in str(e.value)


def test_pragma_lines_lex_as_comments():
    src = "#pragma add_rl\n1 + 2"
    assert pragmas(src) == frozenset({"add_rl"})
    assert parse(src) == Add(Num(1), Num(2))
    assert pragmas("succ 0") == frozenset()


# ----------------------------------------------------------- parsing


def test_application_binds_tighter_than_sum():
    t = parse("f x + g y")
    assert t == Add(App(Var("f"), Var("x")), App(Var("g"), Var("y")))


def test_sum_and_application_are_left_associative():
    assert parse("1 + 2 + 3") == Add(Add(Num(1), Num(2)), Num(3))
    assert parse("f x y") == App(App(Var("f"), Var("x")), Var("y"))


def test_prefix_forms_extend_to_the_right():
    assert parse("succ 0 + 1") == Succ(Add(Num(0), Num(1)))
    assert parse("(succ 0) + 1") == Add(Succ(Num(0)), Num(1))


def test_ifz_branches_take_whole_terms():
    t = parse("ifz x then 1 + 1 else f 0")
    assert t == Ifz(Var("x"), Add(Num(1), Num(1)), App(Var("f"), Num(0)))


def test_binder_type_stops_before_body_arrow():
    t = parse("fun f: nat -> nat -> f")
    assert t == Lam("f", TFun(NAT, NAT), Var("f"))
    assert typecheck(t) == TFun(TFun(NAT, NAT), TFun(NAT, NAT))


def test_parenthesised_binder_type():
    t = parse("fun f: (nat -> nat) -> f 0")
    assert t == Lam("f", TFun(NAT, NAT), App(Var("f"), Num(0)))


def test_parse_type_right_associative():
    assert parse_type("nat -> nat -> nat") == TFun(NAT, TFun(NAT, NAT))
    assert parse_type("(nat -> nat) -> nat") == TFun(TFun(NAT, NAT), NAT)


def test_parse_error_reports_position():
    with pytest.raises(PcfParseError) as e:
        parse("fun x nat -> x")
    assert "1:7" in str(e.value)
    with pytest.raises(PcfParseError) as e:
        parse("succ 0)")
    assert "trailing" in str(e.value)


def test_parse_error_on_empty_input():
    with pytest.raises(PcfParseError):
        parse("   # nothing here")


# ------------------------------------------------------------ typing


def test_typecheck_basics():
    assert typecheck(parse("succ (pred 0)")) == NAT
    assert typecheck(parse("fun x: nat -> x + x")) == TFun(NAT, NAT)
    assert typecheck(parse("fix (fun x: nat -> x)")) == NAT


def test_type_errors_carry_positions():
    with pytest.raises(PcfTypeError) as e:
        typecheck(parse("y"))
    assert "unbound" in str(e.value) and "1:1" in str(e.value)
    with pytest.raises(PcfTypeError):
        typecheck(parse("0 1"))
    with pytest.raises(PcfTypeError):
        typecheck(parse("(fun f: nat -> nat -> f) 0"))
    with pytest.raises(PcfTypeError):
        typecheck(parse("ifz (fun x: nat -> x) then 0 else 0"))
    with pytest.raises(PcfTypeError):
        typecheck(parse("ifz 0 then 0 else fun x: nat -> x"))
    with pytest.raises(PcfTypeError):
        typecheck(parse("fix 0"))
    with pytest.raises(PcfTypeError):
        typecheck(parse("0 + (fun x: nat -> x)"))


def test_shadowing_uses_innermost_binding():
    t = parse("fun x: nat -> fun x: nat -> nat -> x")
    assert typecheck(t) == TFun(NAT, TFun(TFun(NAT, NAT), TFun(NAT, NAT)))


# ------------------------------------------------------- term_to_json


def test_term_to_json_shape():
    doc = term_to_json(parse("fun x: nat -> ifz x then 0 else succ x"))
    assert doc["node"] == "fun" and doc["ty"] == "nat"
    body = doc["body"]
    assert body["node"] == "ifz"
    assert body["cond"] == {"node": "var", "name": "x"}
    assert body["else"] == {"node": "succ", "arg": {"node": "var", "name": "x"}}


# --------------------------------------------------------- denotation


def _value(src: str, b: Bounds, rl_add: bool = False):
    """Answer the opening question of a closed ground-type program."""
    d = denote(parse(src), b, rl_add=rl_add)
    r = d.respond(Play(d.arena, (("q", ROOT),)))
    return None if r is None else int(r[0])


def test_numerals_clamp_to_max_nat():
    b = Bounds(max_nat=3)
    assert _value("2", b) == 2
    assert _value("7", b) == 3


def test_arithmetic_saturates():
    b = Bounds(max_nat=3)
    assert _value("succ 2", b) == 3
    assert _value("succ 3", b) == 3
    assert _value("pred 0", b) == 0
    assert _value("pred 2", b) == 1
    assert _value("2 + 2", b) == 3
    assert _value("1 + 2", b) == 3


def test_ifz_selects_branch():
    b = Bounds(max_nat=2)
    assert _value("ifz 0 then 1 else 2", b) == 1
    assert _value("ifz 2 then 1 else 0", b) == 0


def test_fix_of_identity_diverges():
    b = Bounds(max_nat=1)
    d = denote(parse("fix (fun x: nat -> x)"), b)
    assert d.respond(Play(d.arena, (("q", ROOT),))) is None


def test_fix_computes_recursive_zero():
    b = Bounds(max_nat=1, max_play_len=24, max_view_len=4, fix_depth=2)
    src = "(fix (fun f: nat -> nat -> fun x: nat -> ifz x then 0 else f (pred x))) 1"
    assert _value(src, b) == 0


def test_denoted_arena_follows_the_type():
    b = Bounds(max_nat=2)
    d = denote(parse("fun x: nat -> x"), b)
    assert d.arena == arrow(make_nat_arena(2), make_nat_arena(2))


def test_double_interrogates_argument_twice():
    b = Bounds(max_nat=2, max_play_len=8)
    d = denote(parse("fun x: nat -> x + x"), b)
    a = d.arena
    s = Play(a, (("R.q", ROOT), ("L.q", 0), ("L.1", 1),
                 ("L.q", 0), ("L.1", 3), ("R.2", 0)))
    assert s in traces(d, b)


def test_curried_sum_asks_left_argument_first():
    b = Bounds(max_nat=2, max_play_len=8)
    d = denote(parse("fun x: nat -> fun y: nat -> x + y"), b)
    opening = Play(d.arena, (("R.R.q", ROOT),))
    assert d.respond(opening) == ("L.q", 0)
    after_x = opening.extend("L.q", 0).extend("L.1", 1)
    assert d.respond(after_x) == ("R.L.q", 0)
    after_y = after_x.extend("R.L.q", 0).extend("R.L.1", 3)
    assert d.respond(after_y) == ("R.R.2", 0)


def test_add_rl_pragma_flips_interrogation_order():
    b = Bounds(max_nat=2, max_play_len=8)
    d = denote(parse("fun x: nat -> fun y: nat -> x + y"), b, rl_add=True)
    opening = Play(d.arena, (("R.R.q", ROOT),))
    assert d.respond(opening) == ("R.L.q", 0)


def test_flipped_sum_under_pragma_is_trace_identical():
    # y + x evaluated right-to-left asks x first, like x + y does
    b = Bounds(max_nat=2, max_play_len=8)
    lr = denote(parse("fun x: nat -> fun y: nat -> x + y"), b)
    rl = denote(parse("fun x: nat -> fun y: nat -> y + x"), b, rl_add=True)
    assert traces(lr, b) == traces(rl, b)


def test_builtin_add_orders():
    b = Bounds(max_nat=2, max_play_len=6)
    lr = builtin("add_LR", 2)
    opening = Play(lr.arena, (("R.q", ROOT),))
    assert lr.respond(opening) == ("L.L.q", 0)
    assert builtin("add_RL", 2).respond(opening) == ("L.R.q", 0)
    with pytest.raises(ValueError):
        builtin("no_such", 2)
