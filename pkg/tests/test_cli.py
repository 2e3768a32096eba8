import hashlib
import json
import os
import subprocess
import sys

import pytest

from conftest import english_corpus, fixed_seed
from qpp_rng import cli
from qpp_rng.cli import EXIT_ERROR, EXIT_OK, EXIT_STAT_FAIL, main, parse_length
from test_generator import GEN_1MIB_SHA256


@pytest.fixture
def seed_file(tmp_path, test_seed):
    p = tmp_path / "seed.bin"
    p.write_bytes(test_seed)
    return p


def run(*args):
    return main([str(a) for a in args])


def test_parse_length():
    assert parse_length("0") == 0
    assert parse_length("123") == 123
    assert parse_length("4K") == 4096
    assert parse_length("1M") == 1 << 20
    assert parse_length("2g") == 2 << 30
    assert parse_length("3MiB") == 3 << 20
    with pytest.raises(Exception):
        parse_length("1.5M")


def test_seed_command(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run("seed", "--out", a) == EXIT_OK
    assert run("seed", "--out", b) == EXIT_OK
    assert a.stat().st_size == b.stat().st_size == 16384
    assert a.read_bytes() != b.read_bytes()
    out = tmp_path / "s.bin"
    assert run("gen", "--seed", a, "--length", "1K", "--out", out) == EXIT_OK
    assert out.stat().st_size == 1024


def test_seed_unavailable_leaves_no_file(tmp_path, monkeypatch):
    def broken(n):
        raise OSError("no entropy")
    monkeypatch.setattr(cli.os, "urandom", broken)
    target = tmp_path / "seed.bin"
    assert run("seed", "--out", target) == EXIT_ERROR
    assert list(tmp_path.iterdir()) == []


def test_gen_deterministic_golden(tmp_path, seed_file):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run("gen", "--seed", seed_file, "--length", "1M", "--out", a) == EXIT_OK
    assert run("gen", "--seed", seed_file, "--length", "1M", "--out", b) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    assert hashlib.sha256(a.read_bytes()).hexdigest() == GEN_1MIB_SHA256


def test_gen_chunk_boundaries(tmp_path, seed_file):
    # a length straddling the 1 MiB I/O chunk matches a prefix of a longer run
    a, b = tmp_path / "a", tmp_path / "b"
    run("gen", "--seed", seed_file, "--length", str((1 << 20) + 5), "--out", a)
    run("gen", "--seed", seed_file, "--length", str((2 << 20) + 1), "--out", b)
    assert b.read_bytes().startswith(a.read_bytes())


def test_gen_zero_length(tmp_path, seed_file):
    out = tmp_path / "empty"
    assert run("gen", "--seed", seed_file, "--length", "0", "--out", out) == EXIT_OK
    assert out.read_bytes() == b""


def test_hex_seed(tmp_path, test_seed):
    hexfile = tmp_path / "seed.hex"
    hexfile.write_text(test_seed.hex() + "\n")
    out = tmp_path / "o"
    assert run("gen", "--seed", hexfile, "--length", "1M", "--out", out) == EXIT_OK
    assert hashlib.sha256(out.read_bytes()).hexdigest() == GEN_1MIB_SHA256


def test_bad_seed(tmp_path, capsys):
    bad = tmp_path / "bad"
    bad.write_bytes(bytes(1000))
    out = tmp_path / "o"
    assert run("gen", "--seed", bad, "--length", "10", "--out", out) == EXIT_ERROR
    assert "16384" in capsys.readouterr().err
    assert not out.exists()
    assert run("boost", "--seed", tmp_path / "missing", "--in", bad, "--out", out) == EXIT_ERROR
    assert not out.exists()


def test_boost_unboost_roundtrip(tmp_path, seed_file):
    data = os.urandom(10 << 20)
    src, mid, back = tmp_path / "src", tmp_path / "mid", tmp_path / "back"
    src.write_bytes(data)
    assert run("boost", "--seed", seed_file, "--in", src, "--out", mid) == EXIT_OK
    assert run("unboost", "--seed", seed_file, "--in", mid, "--out", back) == EXIT_OK
    assert mid.stat().st_size == len(data)
    assert back.read_bytes() == data


def test_boost_empty(tmp_path, seed_file):
    src, out = tmp_path / "src", tmp_path / "out"
    src.write_bytes(b"")
    assert run("boost", "--seed", seed_file, "--in", src, "--out", out) == EXIT_OK
    assert out.read_bytes() == b""


def test_boost_text_improves_report(tmp_path, seed_file, capsys):
    src, out = tmp_path / "text", tmp_path / "boosted"
    src.write_bytes(english_corpus(1 << 20))
    run("boost", "--seed", seed_file, "--in", src, "--out", out)
    capsys.readouterr()
    assert run("test", "--in", src, "--format", "machine") == EXIT_STAT_FAIL
    before = json.loads(capsys.readouterr().out)
    run("test", "--in", out, "--format", "machine")
    after = json.loads(capsys.readouterr().out)
    assert before["entropy_bits_per_byte"] < 5 < 7.99 < after["entropy_bits_per_byte"]
    assert before["monte_carlo_pi"] == 4.0
    assert abs(after["serial_correlation"]) < abs(before["serial_correlation"])


def test_test_command_uniform_is_too_perfect(tmp_path, capsys):
    f = tmp_path / "ramp"
    f.write_bytes(bytes(range(256)) * 100)
    assert run("test", "--in", f) == EXIT_STAT_FAIL
    assert "p-Value" in capsys.readouterr().out


def test_test_command_passes_on_generator_output(tmp_path, capsys):
    # this seed's 4 MiB stream has chi-square p-value inside [0.01, 0.99]
    seed = tmp_path / "seed"
    seed.write_bytes(fixed_seed("cli pass"))
    out = tmp_path / "stream"
    run("gen", "--seed", seed, "--length", "4M", "--out", out)
    assert run("test", "--in", out, "--format", "machine") == EXIT_OK
    d = json.loads(capsys.readouterr().out)
    assert d["sample_bytes"] == 4 << 20


def test_test_command_english_fails(tmp_path):
    f = tmp_path / "text"
    f.write_bytes(english_corpus(100_000))
    assert run("test", "--in", f) == EXIT_STAT_FAIL


def test_test_command_errors(tmp_path):
    assert run("test", "--in", tmp_path / "nope") == EXIT_ERROR
    short = tmp_path / "short"
    short.write_bytes(b"abc")
    assert run("test", "--in", short) == EXIT_ERROR


def test_missing_required_flags():
    with pytest.raises(SystemExit) as e:
        main(["gen", "--length", "10"])
    assert e.value.code == EXIT_ERROR
    with pytest.raises(SystemExit) as e:
        main(["boost"])
    assert e.value.code == EXIT_ERROR
    with pytest.raises(SystemExit) as e:
        main(["gen", "--seed", "x", "--length", "lots"])
    assert e.value.code == EXIT_ERROR


def test_stdin_stdout_pipeline(tmp_path, seed_file):
    data = os.urandom(300_000)
    env = dict(os.environ)
    boosted = subprocess.run(
        [sys.executable, "-m", "qpp_rng.cli", "boost", "--seed", str(seed_file), "--in", "-", "--out", "-"],
        input=data, capture_output=True, check=True, env=env).stdout
    restored = subprocess.run(
        [sys.executable, "-m", "qpp_rng.cli", "unboost", "--seed", str(seed_file)],
        input=boosted, capture_output=True, check=True, env=env).stdout
    assert len(boosted) == len(data) and restored == data
