import os
from pathlib import Path

import pytest

import mugames as mg

DATA = Path(os.environ.get("MUGAMES_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def test_formula_basics():
    f = mg.parse("mu X. nu Y. ([]Y & mu Z. [](X | Z))")
    assert f.index_class() == "{0,1} Σ2"
    assert f.index() == (0, 1)
    assert f.is_guarded
    assert str(mg.Formula(str(f))) == str(f)


def test_parse_error():
    with pytest.raises(mg.ParseError):
        mg.parse("mu X. (P")
    with pytest.raises(ValueError):
        mg.Structure("edge a b\n")


def test_model_checking_agrees_with_evaluation():
    t = mg.Structure((DATA / "chain.kr").read_text())
    f = mg.parse((DATA / "reach.mu").read_text())
    assert mg.holds(t, f)
    assert mg.satisfies(t, f)
    assert mg.mc_game(t, f).winner() == "Even"
    assert not mg.holds(t, mg.parse("[][]Q"))


def test_parity_formula_interprets():
    f = mg.parse((DATA / "alternating.mu").read_text())
    corpus = mg.corpus(["P"], max_nodes=2, samples=20, seed=1)
    ok = mg.check_interprets(f, mg.parity_formula((0, 1)), corpus)
    assert ok["passed"] and ok["checked"] == len(corpus)
    bad = mg.check_interprets(f, mg.parse("ff"), corpus)
    assert not bad["passed"]
    assert bad["expected"] and not bad["actual"]


def test_collapse_and_simplify():
    a = mg.parse("mu X. nu Y. ([]Y & mu Z. [](X | Z))")
    corpus = mg.enumerate_structures(3, [])
    assert mg.check_equivalent(a, mg.parse("mu X. []X"), corpus)["passed"]
    report = mg.simplify(a, mg.parity_formula((0, 1)), corpus)
    assert report.startswith("mugames-simplify 1\n")


def test_solver_and_encoding():
    arena = mg.Arena((DATA / "loop.arena").read_text())
    assert arena.solve() == ["Even", "Even", "Odd"]
    assert len(arena.encode()) == len(arena)


def test_challenge():
    arena = mg.Arena((DATA / "loop.arena").read_text())
    r = mg.challenge(arena, (DATA / "hold.script").read_text(), variant="general", n=1)
    assert r["winner"] == "Even"
    assert r["dominant"] == 2
    assert r["cycle_start"] == 1
    with pytest.raises(mg.Error):
        mg.challenge(arena, "move 1\n", variant="general")
