import pytest

import provmod


def test_canonical_printing():
    assert provmod.canonical("~p -> bot") == "~~p"
    assert provmod.canonical("[]p", "rhd") == "~p |> bot"


def test_pre_interpolant():
    star = provmod.pre_interpolant("p -> []p")
    assert provmod.is_purely_modal(star)
    assert provmod.classical_entails([star], "p -> []p")
    assert not provmod.is_purely_modal("p -> []p")


def test_decide_and_countermodel():
    assert provmod.decide("gl", "[]([]p -> p) -> []p")["status"] == "theorem"
    v = provmod.decide("gl", "[]p -> p")
    assert v["status"] == "non_theorem"
    assert provmod.evaluate(v["countermodel"], v["world"], "[]p -> p") is False
    r = provmod.countermodel("gl", "~[]bot")
    assert r["soundness_failures"] == []
    assert provmod.evaluate(r["model"], r["world"], "~[]bot") is False


def test_ilm():
    assert provmod.decide("ilm", "<>p |> p")["status"] == "non_theorem_up_to_bound_unknown"
    r = provmod.countermodel("ilm", "p |> q")
    assert provmod.evaluate(r["model"], r["world"], "p |> q") is False


def test_interpretation():
    out = provmod.interpret({"kind": "finite_axioms_mp", "axioms": ["p"]}, "[]p -> [][]p")
    assert out["value"] is False
    assert provmod.interpret({"kind": "gl_theorems"}, "[]([]p -> p) -> []p")["value"] is True


def test_representatives_and_errors():
    assert len(provmod.representatives("gl", 1, ["p"])) == 4
    with pytest.raises(provmod.EnvelopeError):
        provmod.representatives("gl", 3, ["p"])
    with pytest.raises(provmod.ParseError):
        provmod.canonical("p ->")
    assert provmod.gl_consequence(["[]([]p -> p)"], "[]p")
    assert provmod.phrase_cnf("[]p -> []q") == [(["[]p"], ["[]q"])]
