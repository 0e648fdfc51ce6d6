import json

from src.utils import safe_name, save_results, to_ndjson


def test_safe_name():
    assert safe_name("BAL_0([K1,K1,K1])") == "BAL_0_K1_K1_K1"
    assert safe_name("  ") == "result"
    assert len(safe_name("x" * 80)) == 50


def test_save_results(tmp_path):
    path = save_results({"b": 1, "a": [1, 2]}, "theorems n=6", output_dir=tmp_path)
    assert path == tmp_path / "implab_theorems_n_6.json"
    assert json.loads(path.read_text(encoding="utf-8")) == {"a": [1, 2], "b": 1}


def test_to_ndjson():
    text = to_ndjson([{"b": 2, "a": 1}, {"c": None}])
    assert text == '{"a":1,"b":2}\n{"c":null}\n'
    assert to_ndjson([]) == ""
