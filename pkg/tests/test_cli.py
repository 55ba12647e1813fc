import json

from grouporders.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_zn_witness(capsys):
    code, out, _ = run(capsys, "zn", "witness", "--matrix", "1 1; 0 1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["sign"] != data["sign_after"]
    assert data["flag"]["n"] == 2


def test_zn_sign_and_act(capsys):
    code, out, _ = run(capsys, "zn", "sign", "--matrix", "1 0; 0 1",
                       "--vector", "-1 7")
    assert code == 0 and out.strip() == "Negative"
    code, out, _ = run(capsys, "zn", "act", "--matrix", "1 1; 0 1",
                       "--flag", "1 0; 0 1")
    assert code == 0


def test_zn_realize_negative_result(capsys):
    code, _, err = run(capsys, "zn", "realize", "--vectors", "1 0; -1 0")
    assert code == 2
    assert "NoCone" in err


def test_free_separate_common_root(capsys):
    code, _, err = run(capsys, "free", "separate", "x1^2", "x1")
    assert code == 2
    assert "CommonRoot" in err


def test_free_separate_twisted(capsys):
    code, out, _ = run(capsys, "free", "separate", "x1 x2", "x2 x1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "twisted"


def test_free_sign_compare_depth(capsys):
    code, out, _ = run(capsys, "free", "sign", "x1^-1 x2")
    assert code == 0 and out.strip() == "Negative"
    code, out, _ = run(capsys, "free", "compare", "x1", "x1 x2")
    assert code == 0 and out.strip() == "Less"
    code, out, _ = run(capsys, "free", "depth", "x1 x2 x1^-1 x2^-1")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "free", "depth", "x1 x2 x1^-1 x2^-1", "--cap", "1")
    assert code == 3


def test_free_axioms(capsys):
    code, out, _ = run(capsys, "free", "axioms", "--radius", "2")
    assert code == 0
    assert "totality=ok" in out


def test_free_sign_accepts_inline_ordering_json(capsys):
    code, out, _ = run(capsys, "free", "separate", "x1", "x2", "--json")
    ordering_json = out
    code, out, _ = run(capsys, "free", "sign", "x2",
                       "--ordering", ordering_json)
    assert code == 0 and out.strip() == "Negative"


def test_aut_witness_and_root(capsys):
    code, out, _ = run(capsys, "aut", "witness", "x1 -> x1 x2 ; x2 -> x2", "--json")
    assert code == 0
    data = json.loads(out)
    assert {data["sign_before"], data["sign_after"]} == {"+", "-"}
    code, out, _ = run(capsys, "aut", "root", "x2^-1 x1^3 x2")
    assert code == 0 and out.strip() == "x2^-1 x1 x2 ^ 3"


def test_aut_common_power(capsys):
    code, out, _ = run(capsys, "aut", "common-power", "x1^2", "x1^3")
    assert code == 0 and "g^3 = k^2" in out
    code, out, _ = run(capsys, "aut", "common-power", "x1", "x2")
    assert code == 2


def test_aut_boundary(capsys):
    code, out, _ = run(capsys, "aut", "boundary", "x1 -> x1 x2 ; x2 -> x2")
    assert code == 0 and out.strip() == "x1"


def test_aut_witness_identity_is_usage_error(capsys):
    code, _, err = run(capsys, "aut", "witness", "x1 -> x1")
    assert code == 1
    assert "Identity" in err


def test_klein_commands(capsys):
    code, out, _ = run(capsys, "klein", "mul", "y", "x")
    assert code == 0 and out.strip() == "x y^-1"
    code, out, _ = run(capsys, "klein", "orderings", "--json")
    assert code == 0 and json.loads(out)["count"] == 4
    code, out, _ = run(capsys, "klein", "pull", "x -> x^-1 ; y -> y^-1", "++")
    assert code == 0 and out.strip() == "(-,-)"
    code, out, _ = run(capsys, "klein", "table")
    assert code == 0
    assert "Z/2 x Z/2 = True" in out
    assert "faithful = False" in out


def test_report_single_criterion(capsys):
    code, out, _ = run(capsys, "report", "--only", "10", "--json")
    assert code == 0
    (entry,) = json.loads(out)
    assert entry["criterion"] == 10 and entry["passed"]


def test_bad_usage(capsys):
    assert run(capsys, "zn", "sign", "--matrix", "1 0; 0 1",
               "--vector", "not numbers")[0] == 1
    assert run(capsys, "nonsense")[0] == 1


def test_round_trip_through_files(tmp_path, capsys):
    code, out, _ = run(capsys, "free", "separate", "x1", "x2", "--json")
    path = tmp_path / "ordering.json"
    path.write_text(out)
    code, out, _ = run(capsys, "free", "distance",
                       "--ordering1", str(path), "--ordering2", str(path),
                       "--radius", "3")
    assert code == 0 and out.strip() == "3"
