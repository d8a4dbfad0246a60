import json

import pytest

from colorgder import make_A, make_D
from colorgder.cli import main
from colorgder.io import DocumentError, dumps_algebra, load_algebra, loads_algebra, save_algebra

from corpus import catalog, random_corpus


@pytest.mark.parametrize("alg", list(catalog()) + list(random_corpus()[:5]), ids=lambda a: a.name)
def test_canonical_round_trip(alg):
    text = dumps_algebra(alg)
    back = loads_algebra(text)
    assert back == alg
    assert dumps_algebra(back) == text


def test_generator_document_expands():
    doc = {"dim": 3, "arity": 3, "closure": "antisymmetrize",
           "products": [{"args": [0, 1, 2], "out": {"0": "1"}}]}
    assert loads_algebra(json.dumps(doc)) == make_A(3)


def _err(text):
    with pytest.raises(DocumentError) as ei:
        loads_algebra(text, source="doc.json")
    return ei.value


def test_located_errors():
    e = _err('{"dim": 2,\n "arity": 2,\n "products": [\n  {"args": [0, 5], "out": {}}\n]}')
    assert e.line == 4 and "args" in e.path and str(e).startswith("doc.json:4")
    e = _err('{"dim": 2, "arity": 2, "products": [}')
    assert e.line == 1 and "invalid JSON" in e.message
    e = _err('{"dim": 2,\n "arity": 2,\n "products": [],\n "colour": 1}')
    assert e.line == 4 and "colour" in e.message
    e = _err('{"dim": 2, "arity": 2}')
    assert "products" in e.message
    e = _err('{"dim": 1, "arity": 2, "group": [0], "degrees": [[1]], "bicharacter": [["1"]],'
             ' "products": [{"args": [0, 0], "out": {"0": "1"}}]}')
    assert "degree" in str(e)


def test_save_and_load(tmp_path):
    p = tmp_path / "a.json"
    save_algebra(make_D(3), str(p))
    assert load_algebra(str(p)) == make_D(3)


def test_cli_catalog_and_spaces(tmp_path, capsys):
    a = tmp_path / "a3.json"
    assert main(["catalog", "--make", "A", "--n", "3", "--out", str(a)]) == 0
    assert load_algebra(str(a)) == make_A(3)
    rep = tmp_path / "r.json"
    assert main(["spaces", "--input", str(a), "--class", "der", "--json", str(rep)]) == 0
    out = capsys.readouterr().out
    assert "total dim 6" in out
    data = json.loads(rep.read_text())
    assert data["total_dim"] == 6 and data["class"] == "der"


def test_cli_verify_and_extend(tmp_path):
    a = tmp_path / "d3.json"
    main(["catalog", "--make", "D", "--n", "3", "--out", str(a)])
    rep = tmp_path / "v.json"
    assert main(["verify", "--input", str(a), "--suite", "s1", "--json", str(rep)]) == 0
    data = json.loads(rep.read_text())
    assert data["summary"]["fail"] == 0 and data["checks"][0]["id"] == "inclusion-chain"
    out = tmp_path / "ext.json"
    assert main(["extend", "--input", str(a), "--out", str(out)]) == 0
    assert load_algebra(str(out)).dim == 8


def test_cli_exit_codes(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2}')
    assert main(["verify", "--input", str(bad)]) == 2
    assert main(["verify", "--input", str(tmp_path / "missing.json")]) == 2
    assert main(["catalog", "--make", "A", "--n", "2", "--field", "4"]) == 2
    assert main(["catalog", "--make", "LB", "--n", "3"]) == 2
    assert main(["spaces"]) == 2


def test_cli_reports_are_deterministic(tmp_path):
    a = tmp_path / "a.json"
    main(["catalog", "--make", "A", "--n", "3", "--out", str(a)])
    rep = tmp_path / "r.json"
    argv = ["verify", "--input", str(a), "--json", str(rep)]
    assert main(argv) == 0
    first = rep.read_bytes()
    assert main(argv) == 0
    assert rep.read_bytes() == first
