import json

from pbrauer.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_mult(capsys):
    code, out = run(capsys, "mult", "--n", "1", "1 | 1'", "1 | 1'")
    assert code == 0 and out.out.strip() == "dp * {1 | 1'}"
    code, out = run(capsys, "mult", "--n", "1", "--delta", "2", "--delta-prime", "3/2", "1 | 1'", "1 | 1'")
    assert out.out.strip() == "3/2 * {1 | 1'}"


def test_dims(capsys):
    code, out = run(capsys, "dims", "--n", "2", "--json")
    obj = json.loads(out.out)
    assert code == 0 and obj["dims"] == {"∅": 2, "(1)": 2, "(2)": 1, "(1,1)": 1} and obj["sum_of_squares"] == 10


def test_verify(capsys):
    assert run(capsys, "verify", "presentation", "--n", "3")[0] == 0
    assert run(capsys, "verify", "decorated", "--n", "2")[0] == 0
    assert run(capsys, "verify", "degenerate", "--n", "2", "--mode", "d1")[0] == 0


def test_reports_are_deterministic(capsys):
    a = run(capsys, "verify", "morita", "--n", "2", "--json", "--seed", "4")[1].out
    b = run(capsys, "verify", "morita", "--n", "2", "--json", "--seed", "4")[1].out
    assert a == b and json.loads(a)["schema"] == "pbrauer.report/1"


def test_gram_and_simple(capsys):
    code, out = run(capsys, "gram", "--n", "1", "--lambda", "")
    assert code == 0 and out.out.strip() == "dp"
    code, out = run(capsys, "simple-dims", "--n", "1", "--delta", "2", "--delta-prime", "0", "--json")
    assert json.loads(out.out)["simple_dims"] == {"∅": 0, "(1)": 1}


def test_schur_weyl(capsys):
    code, out = run(capsys, "schur-weyl", "--m", "2", "--k", "2")
    assert code == 0
    assert json.loads(out.out) == {"rank": 10, "expected": 10, "injective": True, "commutant_dim": 10}
    code, out = run(capsys, "schur-weyl", "--m", "2", "--k", "1", "--skip-commutant")
    assert json.loads(out.out)["injective"] is False


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "--n", "3", "--brauer", "--count")
    assert out.out.strip() == "15"


def test_parse_errors(capsys):
    code, out = run(capsys, "mult", "--n", "1", "1 | 2'", "1 | 1'")
    assert code == 2 and "error" in out.err
    assert run(capsys, "gram", "--n", "2", "--lambda", "(3)")[0] == 2
    try:
        main(["mult", "--n", "1", "--delta", "x/y", "1 | 1'", "1 | 1'"])
    except SystemExit as exc:
        assert exc.code == 2
