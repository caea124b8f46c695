import pytest

import cartcoh
from cartcoh import Mode


def test_letter_length():
    obj = cartcoh.parse_object("((p*q)*p)*(T*p)")
    assert obj.letter_length == 4
    assert obj.symbol_length == 9
    assert str(obj) == "((p * q) * p) * (T * p)"


def test_parse_print_and_type():
    t = cartcoh.parse_arrow("p1{p,T} . <id{p}, bang{p}>")
    dom, cod = cartcoh.typecheck(t)
    assert str(dom) == "p" and str(cod) == "p"
    assert cartcoh.parse_arrow(cartcoh.print_arrow(t)) == t
    assert str(cartcoh.parse_arrow("swap{p,q}")) == "<p2{p,q}, p1{p,q}>"


def test_graph_and_synth():
    t = cartcoh.parse_arrow("p2{p,q}")
    assert cartcoh.graph_of(t) == {"source_letters": 2, "target_letters": 1, "map": [2]}
    dom = cartcoh.parse_object("p*q")
    cod = cartcoh.parse_object("q")
    assert cartcoh.synth_from_graph(dom, cod, [2]) == t
    dup = cartcoh.synth_from_graph(cartcoh.parse_object("p"), cartcoh.parse_object("p*p"), [1, 1])
    assert str(dup) == "<id{p}, id{p}>"


def test_normalize_trace():
    trace = cartcoh.normalize(cartcoh.parse_arrow("id{p*q}"))
    degrees = [s["degree_before"] for s in trace["steps"]] + [trace["steps"][-1]["degree_after"]]
    assert degrees == [(0, 3, 3), (0, 2, 19), (0, 2, 13), (0, 2, 7)]
    assert str(trace["result"]) == "<p1{p,q}, p2{p,q}>"
    assert cartcoh.is_normal_form(trace["result"])


def test_equality():
    f = cartcoh.parse_arrow("id{p*q}")
    g = cartcoh.parse_arrow("<p1{p,q}, p2{p,q}>")
    assert cartcoh.equal_in_cart(f, g)
    assert cartcoh.equal_via_normal_forms(f, g)
    k1 = cartcoh.parse_arrow("p1{p,p}")
    k2 = cartcoh.parse_arrow("p2{p,p}")
    assert not cartcoh.equal_in_cart(k1, k2)


def test_collapse_witness():
    w = cartcoh.collapse_witness(cartcoh.parse_arrow("p1{p,p}"), cartcoh.parse_arrow("p2{p,p}"))
    assert w["verified"]
    assert (w["letter"], w["position"]) == ("p", 1)
    assert str(w["lhs_normal"]) == "p1{p,p}"
    assert str(w["rhs_normal"]) == "p2{p,p}"


def test_errors_carry_codes():
    with pytest.raises(cartcoh.CartcohError) as e:
        cartcoh.parse_arrow("<id{p}, id{q}>")
    assert e.value.args[0] == "TypeMismatch"
    with pytest.raises(cartcoh.CartcohError) as e:
        cartcoh.parse_arrow("bang{p}", Mode.BINARY_PRODUCTS)
    assert e.value.args[0] == "ModeViolation"
    p = cartcoh.parse_arrow("id{p}")
    with pytest.raises(cartcoh.CartcohError) as e:
        cartcoh.collapse_witness(p, p)
    assert e.value.args[0] == "AlreadyEqual"


def test_cli():
    code, out, err = cartcoh.run_cli(["check", "p1{p,q}"])
    assert (code, out, err) == (0, "p * q -> p\n", "")
    code, _, err = cartcoh.run_cli(["--mode", "binary-products", "check", "bang{p}"])
    assert code == 2 and "ModeViolation" in err
