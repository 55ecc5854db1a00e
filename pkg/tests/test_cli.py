import json

import pytest

from eicat.category import category_to_json
from eicat.cli import main
from eicat.families import chain_poset, diamond_poset, poset_category, stabilized_alpha_category


def write_category(tmp_path, c, name="cat.json"):
    path = tmp_path / name
    path.write_text(json.dumps(category_to_json(c)))
    return str(path)


@pytest.fixture()
def chain_file(tmp_path):
    return write_category(tmp_path, poset_category(chain_poset(3)))


@pytest.fixture()
def diamond_file(tmp_path):
    return write_category(tmp_path, poset_category(diamond_poset()))


def test_validate_ok(chain_file, capsys):
    assert main(["validate", chain_file]) == 0
    assert "ok:" in capsys.readouterr().out


def test_validate_rejects_non_ei(tmp_path, capsys):
    raw = {
        "objects": ["x"],
        "morphisms": [
            {"id": "e", "src": "x", "dst": "x", "identity": True},
            {"id": "t", "src": "x", "dst": "x"},
        ],
        "composition": [["t", "t", "t"]],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(raw))
    assert main(["validate", str(path)]) == 1
    assert "NotEI" in capsys.readouterr().out


def test_malformed_json_is_usage_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert main(["validate", str(path)]) == 2


def test_missing_subcommand_is_usage_error():
    assert main([]) == 2
    assert main(["no-such-command"]) == 2


def test_classify_output_schema(chain_file, tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["classify", chain_file, "--char", "2", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["characteristic"] == 2
    assert report["hereditary"] is True
    assert report["gorenstein_dim_bound"] == 1
    assert "explain" not in report


def test_classify_explain_includes_ledger(diamond_file, capsys):
    assert main(["classify", diamond_file, "--explain"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["free"] is False
    ledger = report["explain"]["mstar_ledger"]
    assert ledger["3"] == {"cover_dim": 4, "dim": 3, "projective": False}


def test_freeness_output(diamond_file, capsys):
    assert main(["freeness", diamond_file]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["free"] is False
    assert rep["counterexample"]["morphism"] == "x_to_w"
    assert all(len(v) > 0 for v in rep["unfactorizables"].values())


def test_projectivity_depends_on_characteristic(tmp_path, capsys):
    path = write_category(tmp_path, stabilized_alpha_category())
    assert main(["projectivity", path, "--char", "2"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["projective_over_k"] is False
    assert rep["witnesses"][0]["morphism"] == "alpha"
    assert rep["witnesses"][0]["stabilizers"] == {"left": 1, "right": 2}
    assert main(["projectivity", path, "--char", "3"]) == 0
    rep3 = json.loads(capsys.readouterr().out)
    assert rep3["projective_over_k"] is True and rep3["witnesses"] == []


def test_matrix_then_oracle_roundtrip(chain_file, tmp_path, capsys):
    mat = tmp_path / "alg.json"
    assert main(["matrix", chain_file, "--char", "0", "--out", str(mat)]) == 0
    obj = json.loads(mat.read_text())
    assert "basis" in obj and "mstar_dims" in obj
    assert obj["mstar_dims"]["2"] == {"dim": 2, "cover_dim": 2}
    # feed the structure constants back to the oracle
    assert main(["oracle", str(mat), "--char", "0"]) == 0
    verdict = json.loads(capsys.readouterr().out)
    assert verdict == {"left": 1, "right": 1, "gldim": 1, "cap": 8}
    assert "agrees" not in verdict


def test_oracle_on_category_reports_agreement(diamond_file, capsys):
    assert main(["oracle", diamond_file, "--char", "5"]) == 0
    verdict = json.loads(capsys.readouterr().out)
    assert verdict["left"] == 2 and verdict["right"] == 2 and verdict["gldim"] == 2
    assert verdict["agrees"] is True


def test_oracle_cap_semantics(tmp_path, capsys):
    path = write_category(tmp_path, stabilized_alpha_category())
    assert main(["oracle", path, "--char", "2", "--cap", "4"]) == 0
    verdict = json.loads(capsys.readouterr().out)
    assert verdict["left"] == ">4" and verdict["cap"] == 4
    assert verdict["agrees"] is True


def test_oracle_dimension_limit(chain_file, capsys):
    assert main(["oracle", chain_file, "--limit", "3"]) == 1


def test_bad_characteristic_is_usage_error(chain_file):
    assert main(["classify", chain_file, "--char", "4"]) == 2


def test_gen_named_poset_matches_library(capsys):
    assert main(["gen", "poset", "diamond"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj == category_to_json(poset_category(diamond_poset()))


def test_gen_group_and_biset(capsys):
    assert main(["gen", "group", "s3"]) == 0
    assert len(json.loads(capsys.readouterr().out)["morphisms"]) == 6
    assert main(["gen", "biset", "regular_orbit"]) == 0
    assert len(json.loads(capsys.readouterr().out)["morphisms"]) == 5
    assert main(["gen", "biset", "nope"]) == 2


def test_gen_corpus_writes_deterministic_files(tmp_path, capsys):
    d1 = tmp_path / "c1"
    d2 = tmp_path / "c2"
    assert main(["gen", "corpus", "--out", str(d1), "--seed", "0", "--count", "5"]) == 0
    assert main(["gen", "corpus", "--out", str(d2), "--seed", "0", "--count", "5"]) == 0
    files1 = sorted(p.name for p in d1.iterdir())
    files2 = sorted(p.name for p in d2.iterdir())
    assert files1 == files2 and len(files1) == 5
    for name in files1:
        assert (d1 / name).read_text() == (d2 / name).read_text()
    # generated files are themselves valid inputs
    assert main(["validate", str(d1 / files1[0])]) == 0
