import json

from odd_diagrams.cli import run


def test_diagram(capsys):
    assert run(["diagram", "--perm", "1432"]) == 0
    out = capsys.readouterr().out
    assert "*" in out and out.count("\n") == 4


def test_poincare(capsys):
    assert run(["poincare", "--interval", "5431627", "7461523"]) == 0
    assert capsys.readouterr().out.strip() == "1+3t+5t^2+5t^3+3t^4+t^5"


def test_factorize(capsys):
    assert run(["factorize", "--interval", "213", "312"]) == 0
    assert capsys.readouterr().out.strip() == "[2] = 1+t"


def test_partition(capsys):
    assert run(["partition", "--interval", "5431627", "7461523"]) == 0
    out = capsys.readouterr().out
    assert "k=3 a=3 b=7 anchors=[3, 5, 7] m=3" in out
    assert out.count("block") == 3


def test_class(capsys):
    assert run(["class", "--perm", "213"]) == 0
    out = capsys.readouterr().out
    assert "min: 213" in out
    assert "max: 312" in out
    assert "size: 2" in out


def test_kl_and_rpoly(capsys):
    assert run(["kl", "--x", "1234", "--y", "3412"]) == 0
    assert capsys.readouterr().out.strip() == "1+q"
    assert run(["rpoly", "--x", "12", "--y", "21"]) == 0
    assert capsys.readouterr().out.strip() == "-1+q"


def test_hasse_dot(tmp_path, capsys):
    path = tmp_path / "s3.dot"
    assert run(["hasse", "--interval", "123", "321", "--dot", str(path)]) == 0
    dot = path.read_text()
    assert dot.startswith("graph")
    assert dot.count("--") == 8


def test_classes_report(tmp_path, capsys):
    path = tmp_path / "s4.json"
    assert run(["classes", "--n", "4", "--out", str(path)]) == 0
    report = json.loads(path.read_text())
    assert report["schema"] == 1
    assert report["n"] == 4
    assert sum(c["size"] for c in report["classes"]) == 24
    assert all("self_dual" in c and "kl_is_one" in c for c in report["classes"])


def test_census(capsys):
    assert run(["census", "--n", "5"]) == 0
    out = capsys.readouterr().out
    assert "non-self-dual: 0" in out


def test_census_requires_long_at_10(capsys):
    assert run(["census", "--n", "10"]) == 2


def test_verify_ok(capsys):
    assert run(["verify", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "theorem_b" in out
    assert "FAIL" not in out


def test_verify_subset(tmp_path, capsys):
    path = tmp_path / "report.json"
    assert run([
        "verify", "--n", "4", "--checks", "theorem_b,factorization",
        "--out", str(path),
    ]) == 0
    report = json.loads(path.read_text())
    assert [c["name"] for c in report["checks"]] == ["theorem_b", "factorization"]
    assert all(c["failed"] == 0 for c in report["checks"])


def test_verify_unknown_check(capsys):
    assert run(["verify", "--n", "3", "--checks", "nope"]) == 2


def test_usage_errors(capsys):
    assert run(["poincare", "--interval", "21", "12"]) == 2
    assert run(["diagram", "--perm", "1,1,2"]) == 2
    assert run(["nonsense"]) == 2
    assert run(["classes", "--n", "11"]) == 2
