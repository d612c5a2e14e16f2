import json

from revpat.cli import run


def _out(capsys):
    return capsys.readouterr().out.strip()


def test_classify(capsys):
    assert run(["classify", "xyxY"]) == 0
    assert _out(capsys) == "3"
    assert run(["classify", "xyX"]) == 0
    assert _out(capsys) == "infinity"
    assert run(["--json", "classify", "xxx"]) == 0
    assert json.loads(_out(capsys)) == {"pattern": "xxx", "avoidability_index": 2}


def test_canon(capsys):
    assert run(["canon", "Xyy"]) == 0
    assert _out(capsys) == "xxy"


def test_class_lists_sorted_members(capsys):
    assert run(["class", "x"]) == 0
    assert _out(capsys).splitlines() == ["x", "X", "y", "Y"]
    assert run(["--json", "class", "x"]) == 0
    assert json.loads(_out(capsys))["members"] == ["x", "X", "y", "Y"]


def test_graph(capsys):
    assert run(["graph", "xX", "--check-bipartite"]) == 0
    out = _out(capsys)
    assert "X -- X" in out and "bipartite: no" in out
    assert run(["--json", "graph", "xy", "--check-bipartite"]) == 0
    payload = json.loads(_out(capsys))
    assert payload["bipartite"] is True
    assert payload["coloring"]["X"] != payload["coloring"]["y"]


def test_generate_and_cache(tmp_path, capsys):
    assert run(["generate", "thue-morse", "--length", "16",
                "--cache", str(tmp_path)]) == 0
    assert _out(capsys) == "0110100110010110"
    assert (tmp_path / "thue-morse-16.txt").read_text() == "0110100110010110\n"


def test_generate_env_cache(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("REVPAT_CACHE", str(tmp_path))
    assert run(["generate", "alternating", "--length", "6"]) == 0
    assert _out(capsys) == "010101"
    assert (tmp_path / "alternating-6.txt").exists()


def test_generate_rejects_unknown_sequence(capsys):
    assert run(["--json", "generate", "bogus", "--length", "5"]) == 2
    assert "error" in json.loads(_out(capsys))


def test_search_witness_and_exhaustion(capsys):
    assert run(["search", "xX", "--alphabet", "2", "--target-length", "24"]) == 0
    assert _out(capsys).endswith("010101010101010101010101")
    assert run(["--json", "search", "xyx", "--alphabet", "2",
                "--target-length", "50"]) == 0
    payload = json.loads(_out(capsys))
    assert payload["outcome"] == "exhausted"
    assert payload["longest_word_length"] == 4
    assert "unavoidable" not in json.dumps(payload)


def test_verify_single_check(capsys):
    assert run(["verify", "--only", "pigeonhole"]) == 0
    assert _out(capsys).startswith("PASS pigeonhole")
    assert run(["--json", "verify", "--only", "pigeonhole", "--params", "k=1"]) == 0
    reports = json.loads(_out(capsys))
    assert reports[0]["parameters"]["k"] == 1 and reports[0]["passed"]


def test_verify_failure_exits_one(capsys):
    assert run(["verify", "--only", "w3"]) == 1
    assert _out(capsys).startswith("FAIL w3")


def test_verify_rejects_unknown_id(capsys):
    assert run(["verify", "--only", "nope"]) == 2


def test_malformed_pattern_is_a_usage_error(capsys):
    assert run(["classify", "xq"]) == 2
    assert run(["--json", "classify", "xq"]) == 2
    assert "error" in json.loads(_out(capsys))


def test_usage_error_exit_code(capsys):
    assert run(["generate", "thue-morse"]) == 2  # missing --length
