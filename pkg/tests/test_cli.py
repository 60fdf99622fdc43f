import json

import pytest

from dslab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_encode_parse_check_enumerate(capsys):
    code, out, _ = run(capsys, "encode", "parse", "♥♠(♦♠♣)")
    assert code == 0 and out.startswith("hs(dsc)")
    code, out, _ = run(capsys, "encode", "check", "*shsc", "--format", "json")
    assert code == 1 and json.loads(out) == {"input": "*shsc", "legal": False, "violations": ["count:d"],
                                             "class": None}
    code, out, _ = run(capsys, "encode", "enumerate", "--max-stars", "1")
    assert code == 0 and len(out.strip().splitlines()) == 17


def test_encode_parse_error(capsys):
    code, _, err = run(capsys, "encode", "parse", "h(sd)")
    assert code == 2 and "error" in err


def test_synth_generate(capsys):
    code, out, _ = run(capsys, "synth", "generate", "--encoding", "hs(dsc)")
    assert code == 0 and out.strip() == "abcacbc"
    code, out, _ = run(capsys, "synth", "generate", "--encoding", "hcsc", "--format", "json")
    d = json.loads(out)
    assert d["sequences"] == ["abcdbdadbcd"] and d["class"] == 1 and d["trees"][0]["role"] == "apex"


def test_synth_prototypes_and_psi(capsys):
    code, out, _ = run(capsys, "synth", "prototypes", "--format", "json")
    entries = json.loads(out)
    assert len(entries) == 17 and {"class", "encoding", "trees", "sequences"} <= set(entries[0])
    code, out, _ = run(capsys, "synth", "psi", "--max-stars", "1")
    assert out.splitlines()[0] == "ababa" and len(out.splitlines()) >= 18


def test_xi_build_stats_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "xi", "build", "--i", "1", "--j", "1", "--c", "1")
    assert out.splitlines() == ["# xi i=1 j=1 c=1 L=2", "C0 V1 C1 V2"]
    f = tmp_path / "xi.txt"
    code, out, _ = run(capsys, "xi", "build", "--i", "2", "--j", "1", "--out", str(f))
    assert code == 0 and f.read_text().startswith("# xi i=2 j=1 c=1 L=8")
    code, out, _ = run(capsys, "xi", "stats", "--i", "2", "--j", "1", "--format", "json")
    st = json.loads(out)
    assert st["length"] == st["expected_length"] == 30
    code, out, _ = run(capsys, "xi", "verify", "--i", "2", "--j", "1", "--sample", "50", "--seed", "3")
    assert code == 0 and "FAIL" not in out


def test_xi_too_large(capsys):
    code, _, err = run(capsys, "xi", "stats", "--i", "2", "--j", "2", "--c", "2")
    assert code == 2 and "exceeds" in err


def test_match(capsys, tmp_path):
    f = tmp_path / "xi.txt"
    run(capsys, "xi", "build", "--i", "2", "--j", "2", "--out", str(f))
    code, out, _ = run(capsys, "match", "--pattern", "ababa", "--text-file", str(f))
    assert code == 0 and out.strip() == "not contained"
    code, out, _ = run(capsys, "match", "--pattern", "abab", "--text", "abcacbc")
    assert out.startswith("contained at")


def test_ex_brute(capsys):
    code, out, _ = run(capsys, "ex", "brute", "--pattern", "ababa", "--n", "2", "--cap", "20", "--format", "json")
    assert code == 0 and json.loads(out) == {"kind": "exact", "value": 4, "witness": "abab", "witness_valid": True}


def test_digraph(capsys):
    code, out, _ = run(capsys, "digraph", "--sequence", "ababa", "--check-scc")
    assert "strongly connected: True" in out
    code, out, _ = run(capsys, "digraph", "--sequence", "abcdbdadbcd", "--rule", "alternation", "--format", "json")
    assert json.loads(out)["strongly_connected"] is False


def test_kv(capsys):
    code, out, _ = run(capsys, "kv", "closure", "--depth", "1", "--max-k", "1", "--max-len", "5")
    assert code == 0 and "abaab" in out


def test_verify_thm53_and_report(capsys):
    code, out, _ = run(capsys, "verify", "thm53")
    assert code == 0 and "pi2 abcacbc" in out
    code, out, _ = run(capsys, "report", "--format", "json")
    rows = json.loads(out)
    assert rows[0]["length"] == 4 and any(r["leaves"] == "TOO_LARGE" for r in rows)


def test_verify_thm51_small(capsys):
    code, out, _ = run(capsys, "verify", "thm51", "--max-i", "2", "--max-j", "1", "--max-stars", "0")
    assert code == 0 and "embeddings: 0" in out


def test_json_is_deterministic(capsys):
    _, a, _ = run(capsys, "synth", "prototypes", "--format", "json")
    _, b, _ = run(capsys, "synth", "prototypes", "--format", "json")
    assert a == b


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code != 0
