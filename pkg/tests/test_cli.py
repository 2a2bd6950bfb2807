import json

import pytest

from grasseff.cli import run_subcommand


def run(capsys, *argv):
    code = run_subcommand(list(argv))
    captured = capsys.readouterr()
    out = json.loads(captured.out) if captured.out.strip() else None
    return code, out, captured.err


def test_degree(capsys):
    code, out, _ = run(capsys, "degree", "--k", "3", "--n", "6")
    assert code == 0 and out == {"degree": 42}


def test_degree_output_is_byte_canonical(capsys):
    run_subcommand(["degree", "--k", "2", "--n", "4"])
    first = capsys.readouterr().out
    run_subcommand(["degree", "--k", "2", "--n", "4"])
    assert capsys.readouterr().out == first == '{"degree":2}\n'


def test_mult(capsys):
    code, out, _ = run(capsys, "mult", "--k", "2", "--n", "5",
                       "--lambda", "2,1", "--mu", "3,3")
    assert code == 0 and out == {"multiplicity": 2}


def test_product(capsys):
    code, out, _ = run(capsys, "product", "--k", "2", "--n", "4", "--a", "1", "--b", "1")
    assert code == 0
    assert out["terms"] == [{"c": 1, "lambda": [2]}, {"c": 1, "lambda": [1, 1]}]


def test_pieri_and_giambelli(capsys):
    code, out, _ = run(capsys, "pieri", "--k", "2", "--n", "5", "--special", "1", "--mu", "2,1")
    assert code == 0 and len(out["terms"]) == 2
    code, out, _ = run(capsys, "giambelli", "--k", "2", "--n", "5", "--lambda", "2,1")
    assert code == 0
    assert sorted((m["sign"], tuple(m["sizes"])) for m in out["monomials"]) \
        == [(-1, (3,)), (1, (2, 1))]


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "degree", "--k", "2")[0] == 2
    assert run(capsys, "mult", "--k", "2", "--n", "5", "--lambda", "x", "--mu", "1")[0] == 2
    assert run(capsys, "mult", "--k", "2", "--n", "5", "--lambda", "2,1", "--mu", "1,1")[0] == 2


def test_cone_check_exit_codes(capsys, tmp_path):
    gens = tmp_path / "gens.json"
    gens.write_text(json.dumps([[1, 0], [0, 1]]))
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"vector": ["2", "1/2"]}))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vector": ["-1", "0"]}))
    code, out, _ = run(capsys, "cone", "check", "--generators", str(gens), "--class", str(good))
    assert code == 0 and out["verdict"] == "in-span" and out["witness"] == {"g0": "2", "g1": "1/2"}
    code, out, _ = run(capsys, "cone", "check", "--generators", str(gens), "--class", str(bad))
    assert code == 3 and out["verdict"] == "not-in-span" and "certificate" in out
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert run(capsys, "cone", "check", "--generators", str(gens), "--class", str(broken))[0] == 2


def test_cone_sgen_nonspan_class(capsys, tmp_path):
    cls = {"k": 2, "n": 4, "grading": "dim", "m": 2,
           "terms": [{"lambda": [2], "c": 1}, {"lambda": [1, 1], "c": 1}],
           "exc": [1, 1, 1]}
    path = tmp_path / "cls.json"
    path.write_text(json.dumps(cls))
    code, out, _ = run(capsys, "cone", "sgen", "--k", "2", "--n", "4", "--r", "3",
                       "--dim", "2", "--class", str(path))
    assert code == 3 and out["verdict"] == "not-in-span"
    cls["exc"] = [1, 1]
    path.write_text(json.dumps(cls))
    code, out, _ = run(capsys, "cone", "sgen", "--k", "2", "--n", "4", "--r", "2",
                       "--dim", "2", "--class", str(path))
    assert code == 0 and out["verdict"] == "in-span"


def test_cone_sgen_bound_only(capsys):
    code, out, _ = run(capsys, "cone", "sgen", "--k", "2", "--n", "5", "--r", "4", "--dim", "2")
    assert code == 0 and out["bound"] == 4 and out["bound_satisfied"] is True


def test_orbits_list_and_check(capsys):
    code, out, _ = run(capsys, "orbits", "list", "--k", "2", "--dim", "2")
    assert code == 0
    dims = {tuple(map(tuple, rec["pairs"])): rec["dimension"] for rec in out["orbits"]}
    assert dims[((1, 2), (2, 1))] == 4
    code, out, _ = run(capsys, "orbits", "check", "--k", "2")
    assert code == 0 and all(rep["agree"] for rep in out["reports"])


def test_delpezzo_verify(capsys):
    code, out, _ = run(capsys, "delpezzo", "verify", "--case", "grass25", "--q", "1/10")
    assert code == 0 and out["ok"] is True and out["assumptions"] == ["SHGH"]
    assert run(capsys, "delpezzo", "verify", "--case", "grass25", "--q", "1/3")[0] == 2
    assert run(capsys, "delpezzo", "verify", "--case", "nope", "--q", "1/10")[0] == 2


def test_verify_both_names(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0 and out["ok"] is True and out["failed"] == []
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0 and out["ok"] is True


def test_export_ring_and_cache(capsys, tmp_path, monkeypatch):
    out_path = tmp_path / "ring.json"
    code, out, _ = run(capsys, "export-ring", "--k", "2", "--n", "4", "--out", str(out_path))
    assert code == 0 and out["basis_size"] == 6
    cache = tmp_path / "cache"
    monkeypatch.setenv("GRASSEFF_RING_CACHE", str(cache))
    code, out, _ = run(capsys, "export-ring", "--k", "2", "--n", "4")
    assert code == 0 and (cache / "ring_2_4.json").exists()
    code, out, _ = run(capsys, "degree", "--k", "2", "--n", "4")
    assert code == 0 and out == {"degree": 2}
    assert run(capsys, "export-ring", "--k", "3", "--n", "8", "--cap", "12")[0] == 2
