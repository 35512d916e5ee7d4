from fractions import Fraction

import pytest

from convexcount import cli
from convexcount.graph import Graph, complete_graph, parse_graph, serialize_graph
from convexcount.harness import (
    check_lemma3,
    gen_random_formula,
    gen_random_graph,
    rerun_trial,
    verify_lemma,
)
from convexcount.oracles import MonotoneFormula, parse_cnf, serialize_cnf


def test_gen_random_graph_extremes():
    assert gen_random_graph(3, 1, seed=11) == complete_graph(3)
    assert gen_random_graph(3, 0, seed=11) == Graph(3)
    assert gen_random_graph(5, Fraction(1, 2), 7) == gen_random_graph(5, Fraction(1, 2), 7)
    with pytest.raises(ValueError):
        gen_random_graph(0, Fraction(1, 2), 1)
    with pytest.raises(ValueError):
        gen_random_graph(3, Fraction(3, 2), 1)


def test_gen_random_graph_golden():
    # frozen output; guards the documented MT19937 draw order
    g = gen_random_graph(5, Fraction(1, 2), 7)
    assert serialize_graph(g) == "p edge 5 7\ne 1 3\ne 1 5\ne 2 3\ne 2 4\ne 3 4\ne 3 5\ne 4 5\n"


def test_gen_random_formula():
    assert gen_random_formula(2, 1, seed=99) == MonotoneFormula(2, ((1, 2),))
    with pytest.raises(ValueError):
        gen_random_formula(3, 1, seed=0)
    f = gen_random_formula(4, 2, seed=1)
    assert f == gen_random_formula(4, 2, seed=1)
    assert not f.unused_variables()


def test_verify_lemma4_all_pass():
    report = verify_lemma(4, trials=200, seed=3, max_n=8)
    assert report.ok and report.skipped == 0 and report.attempted == 200


def test_verify_lemma1_reports_mu():
    report = verify_lemma(1, trials=1, seed=0, max_n=2)
    assert report.ok
    assert report.mu == 3
    assert report.claimed_factor_agrees is False
    text = report.render()
    assert "mu 3" in text and "claimed-factor 2^|C| disagree" in text
    assert report.trials[0].lhs == "9"


def test_verify_lemma3_both_modes():
    report = verify_lemma(3, trials=2, seed=0, max_n=4)
    assert report.ok
    assert "note trial 1 uncorrected-term mismatch l=2 uncorrected=6 actual=4" in report.render()
    strict = verify_lemma(3, trials=2, seed=0, max_n=4, bridge_corrected=False)
    assert not strict.ok
    fail = strict.first_counterexample
    assert fail.index == 1 and fail.lhs == "2,4" and fail.rhs == "2,6"


def test_failing_trial_reproduces_standalone():
    strict = verify_lemma(3, trials=6, seed=4, max_n=5, bridge_corrected=False)
    assert strict.failures
    for t in strict.failures:
        again = rerun_trial(3, t.instance, bridge_corrected=False)
        assert (again.status, again.lhs, again.rhs) == (t.status, t.lhs, t.rhs)


@pytest.mark.parametrize("lemma", [1, 2, 3, 4])
def test_trials_rerun_from_serialization(lemma):
    report = verify_lemma(lemma, trials=4, seed=9, max_n=4)
    for t in report.trials:
        if t.status == "skip":
            continue
        again = rerun_trial(lemma, t.instance)
        assert (again.status, again.lhs, again.rhs) == (t.status, t.lhs, t.rhs)


def test_verify_skips_oversized():
    report = verify_lemma(2, trials=10, seed=1, max_n=5)
    assert report.skipped > 0
    assert all("padded vertices" in t.note for t in report.trials if t.status == "skip")


def test_check_lemma3_precondition():
    from convexcount.harness import PreconditionError

    with pytest.raises(PreconditionError):
        check_lemma3(complete_graph(4))


def test_verify_rejects_unknown_lemma():
    with pytest.raises(ValueError):
        verify_lemma(5, 1, 0, 3)


# -- CLI ---------------------------------------------------------------------


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("c one clause\np cnf 2 1\n1 2 0\n")
    k3 = tmp_path / "k3.graph"
    k3.write_text(serialize_graph(complete_graph(3)))
    return tmp_path, cnf, k3


def test_cli_count(capsys, files):
    tmp, cnf, k3 = files
    assert run(capsys, "count", "sat", "-i", cnf)[1] == "3\n"
    assert run(capsys, "count", "cocircuits", "-i", k3)[1] == "3\n"
    assert run(capsys, "count", "cocircuits", "-k", 2, "-i", k3)[1] == "3\n"
    assert run(capsys, "count", "cuts", "-k", 2, "-i", k3)[1] == "3\n"
    assert run(capsys, "count", "convex2", "-i", k3)[1] == "8\n"


def test_cli_spectrum(capsys, files):
    _, _, k3 = files
    assert run(capsys, "spectrum", "-i", k3)[1] == "1 0\n2 3\n3 0\n"
    assert run(capsys, "spectrum", "-i", k3, "--via-stretch")[1] == "1 0\n2 3\n3 0\n"


def test_cli_reduce_and_stretch(capsys, files):
    tmp, cnf, k3 = files
    out_graph = tmp / "m.graph"
    assert run(capsys, "reduce", "sat2cut", "-i", cnf, "-o", out_graph)[1] == "8\n"
    assert parse_graph(out_graph.read_text()).m == 9
    k2 = tmp / "k2.graph"
    k2.write_text("p edge 2 1\ne 1 2\n")
    padded = tmp / "p.graph"
    assert run(capsys, "reduce", "cut2cocirc", "-i", k2, "-k", 1, "-o", padded)[1] == "7\n"
    assert parse_graph(padded.read_text()).n == 8
    hexagon = tmp / "c6.graph"
    run(capsys, "stretch", "-i", k3, "-l", 2, "-o", hexagon)
    g = parse_graph(hexagon.read_text())
    assert (g.n, g.m) == (6, 6)


def test_cli_chain(capsys, files):
    _, cnf, _ = files
    code, out, _ = run(capsys, "chain", "-i", cnf)
    assert code == 0
    assert out.splitlines()[2] == "instance cocircuits n=92 m=189 k=98"


def test_cli_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--lemma", 4, "--trials", 20, "--seed", 1, "--max-n", 6)
    assert code == 0 and out.rstrip().endswith("status PASS")
    code, out, _ = run(capsys, "verify", "--lemma", 3, "--trials", 2, "--seed", 0, "--max-n", 4, "--uncorrected")
    assert code == 1 and "first-counterexample trial 1" in out


def test_cli_gen(capsys):
    code, out, _ = run(capsys, "gen", "graph", "--n", 5, "--p", "1/2", "--seed", 7)
    assert code == 0 and parse_graph(out) == gen_random_graph(5, Fraction(1, 2), 7)
    code, out, _ = run(capsys, "gen", "formula", "--vars", 4, "--clauses", 2, "--seed", 1)
    assert parse_cnf(out) == gen_random_formula(4, 2, 1)


def test_cli_errors(capsys, tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("p edge 2 1\ne 1 1\n")
    code, _, err = run(capsys, "count", "convex2", "-i", bad)
    assert code == 2 and "line 2" in err
    neg = tmp_path / "neg.cnf"
    neg.write_text("p cnf 2 1\n-1 2 0\n")
    code, _, err = run(capsys, "count", "sat", "-i", neg)
    assert code == 2 and "negative" in err
    unused = tmp_path / "u.cnf"
    unused.write_text(serialize_cnf(MonotoneFormula(3, ((1, 2),))))
    code, _, err = run(capsys, "chain", "-i", unused)
    assert code == 2 and "x3" in err
