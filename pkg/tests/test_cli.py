"""CLI behavior: output formats, exit codes, streaming, reports."""

import json

import numpy as np

from swapmatch.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, data: bytes):
    path = tmp_path / name
    path.write_bytes(data)
    return str(path)


def test_search_single_match(tmp_path, capsys):
    f = write(tmp_path, "t.txt", b"cagac")
    code, out, _ = run_cli(capsys, "search", "-p", "cagca", "-e", "encoded-swap", f)
    assert code == 0
    assert out == "4\n"


def test_search_every_engine_agrees(tmp_path, capsys):
    f = write(tmp_path, "t.txt", b"cagcacagac")
    for engine in ("oracle-dp", "nfa", "plain-swap", "encoded-swap"):
        code, out, _ = run_cli(capsys, "search", "-p", "cagca", "-e", engine, f)
        assert code == 0
        assert out == "4\n9\n"


def test_search_count(tmp_path, capsys):
    f = write(tmp_path, "t.txt", b"cagcacagac")
    code, out, _ = run_cli(capsys, "search", "-p", "cagca", "--count", f)
    assert code == 0
    assert out == "2\n"


def test_search_no_match_exit_one(tmp_path, capsys):
    f = write(tmp_path, "t.txt", b"abc")
    code, out, _ = run_cli(capsys, "search", "-p", "zzz", f)
    assert code == 1
    assert out == ""


def test_search_missing_file_exit_two(tmp_path, capsys):
    code, _, err = run_cli(capsys, "search", "-p", "abc", str(tmp_path / "nope"))
    assert code == 2
    assert "nope" in err


def test_search_json_schema(tmp_path, capsys):
    f = write(tmp_path, "t.txt", b"cagcacagac")
    code, out, _ = run_cli(capsys, "search", "-p", "cagca", "--json", f)
    assert code == 0
    rows = json.loads(out)
    assert rows == [{"file": f, "position": 4}, {"file": f, "position": 9}]


def test_search_start_positions(tmp_path, capsys):
    f = write(tmp_path, "t.txt", b"xxcagac")
    code, out, _ = run_cli(capsys, "search", "-p", "cagca", "--start-positions", f)
    assert code == 0
    assert out == "2\n"


def test_search_multiple_files_prefixed(tmp_path, capsys):
    f1 = write(tmp_path, "a.txt", b"cagca")
    f2 = write(tmp_path, "b.txt", b"nothing here")
    code, out, _ = run_cli(capsys, "search", "-p", "cagca", f1, f2)
    assert code == 0
    assert out == f"{f1}:4\n"


def test_search_large_file_streams(tmp_path, capsys):
    rng = np.random.default_rng(5)
    blob = bytes(rng.integers(97, 101, 300_000, dtype=np.uint8))
    f = write(tmp_path, "big.bin", blob + b"cagac")
    code, out, _ = run_cli(capsys, "search", "-p", "cagca", "-e", "plain-swap",
                           "--count", f)
    assert code == 0
    assert int(out) >= 1


def test_verify_clean_run(capsys):
    code, out, _ = run_cli(capsys, "verify", "--sigma", "2,4", "--m-max", "8",
                           "-n", "200", "--iterations", "25", "--seed", "1")
    assert code == 0
    assert "result: OK" in out


def test_verify_defaults_pass(capsys):
    # default flags: sigma 2,4 / m <= 25 / n = 2000 / 200 iterations / seed 1
    code, out, _ = run_cli(capsys, "verify")
    assert code == 0
    assert "cases: 200" in out
    assert "result: OK" in out


def test_verify_deterministic_output(capsys):
    args = ("verify", "--sigma", "2", "--m-max", "6", "-n", "100",
            "--iterations", "10", "--seed", "7")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_verify_catches_injected_fault(capsys, monkeypatch):
    # dropping a transfer direction must be caught with a counterexample
    import swapmatch.verify as verify_mod
    from swapmatch import encoded

    real_build = encoded.build_swap_engine

    def sabotaged(p):
        eng = real_build(p)
        eng.t21.intra[:] = 0
        eng.t21.cross[:] = 0
        eng._tables.clear()
        return eng

    monkeypatch.setattr(encoded, "build_swap_engine", sabotaged)
    monkeypatch.setattr(verify_mod, "build_swap_engine", sabotaged)
    code, out, _ = run_cli(capsys, "verify", "--sigma", "2,4", "--m-max", "10",
                           "-n", "400", "--iterations", "40", "--seed", "3")
    assert code == 1
    assert "FAILURES" in out
    assert "pattern" in out  # reproducing case dumped


def test_bench_csv_and_plot(tmp_path, capsys):
    rng = np.random.default_rng(9)
    corpus = write(tmp_path, "corpus.bin",
                   bytes(rng.integers(97, 101, 40_000, dtype=np.uint8)))
    plot = str(tmp_path / "bench.png")
    code, out, _ = run_cli(capsys, "bench", "-p", "cagca", "-p", "acgt",
                           corpus, "--repeat", "1", "--plot", plot)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "engine,n,m,sigma,k,k_prime,ns_per_byte,matches"
    assert len(lines) == 1 + 2 * 2  # two engines x two patterns
    counts = {}
    for line in lines[1:]:
        fields = line.split(",")
        counts.setdefault(fields[2], set()).add(fields[-1])
    for matches in counts.values():
        assert len(matches) == 1  # identical match counts per pattern
    png = (tmp_path / "bench.png").read_bytes()
    assert png[:8] == b"\x89PNG\r\n\x1a\n"


def test_bench_missing_corpus_exit_two(tmp_path, capsys):
    code, _, err = run_cli(capsys, "bench", "-p", "ab", str(tmp_path / "gone"))
    assert code == 2
    assert "gone" in err


def test_inspect_worked_example(capsys):
    code, out, _ = run_cli(capsys, "inspect", "cagca")
    assert code == 0
    assert "p_even: cgaac" in out
    assert "p_odd:  accga" in out
    assert "cag|ca  (k'=2)" in out
    assert "ca|g|ca  (k=3)" in out
    assert "cg|a|ac" in out and "ac|c|ga" in out


def test_inspect_all_distinct(capsys):
    code, out, _ = run_cli(capsys, "inspect", "abcd")
    assert "(k'=1)" in out and "(k=1)" in out


def test_inspect_dot_matches_nfa_edges(capsys):
    from swapmatch.core import build_explicit_swap_nfa

    code, out, _ = run_cli(capsys, "inspect", "cagca", "--dot")
    assert code == 0
    assert out.count("q") >= 10
    nfa = build_explicit_swap_nfa(b"cagca")
    for state, symbol, dst in nfa.edges():
        assert f'q{state} -> q{dst} [label="{chr(symbol)}"];' in out
    assert 'q0 -> q0 [label="*"];' in out
    assert "doublecircle" in out


def test_stdin_search(tmp_path, capsys, monkeypatch):
    import io
    import sys

    monkeypatch.setattr(sys, "stdin",
                        type("S", (), {"buffer": io.BytesIO(b"cagac")})())
    code, out, _ = run_cli(capsys, "search", "-p", "cagca")
    assert code == 0
    assert out == "4\n"
