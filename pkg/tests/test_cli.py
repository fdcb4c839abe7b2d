from __future__ import annotations

import pytest

from jointcross import serialize_instance
from jointcross.cli import main

from .toys import k4_adjacent_faces, triangle_star_anchored


@pytest.fixture()
def anchored_file(tmp_path):
    path = tmp_path / "anchored.inst"
    path.write_text(serialize_instance(triangle_star_anchored()))
    return str(path)


@pytest.fixture()
def fa_file(tmp_path):
    path = tmp_path / "k4adj.inst"
    path.write_text(serialize_instance(k4_adjacent_faces()))
    return str(path)


def test_verify_counts_prints_all_four(capsys) -> None:
    assert main(["verify", "counts", "--k", "3", "--T", "7"]) == 0
    out = capsys.readouterr().out
    assert "gamma(3) = 172" in out
    assert "beta(3,7)" in out
    assert "canonical_fa_count(3,7)" in out
    assert "canonical_fplus_count(3,7)" in out
    assert out.count("ok") == 4


def test_verify_cuts(capsys) -> None:
    assert main(["verify", "cuts", "--k", "2"]) == 0
    out = capsys.readouterr().out
    assert "mincut(a2 | rest) = 8" in out
    assert "mincut(a1 | rest) = 11" in out


def test_verify_ordering(capsys) -> None:
    assert main(["verify", "ordering", "--samples", "50"]) == 0
    assert "0 violations" in capsys.readouterr().out


def test_gen_writes_deterministic_file(tmp_path, capsys) -> None:
    out = tmp_path / "fkt.inst"
    assert main(["gen", "fkt", "--k", "2", "--T", "5", "-o", str(out), "--check"]) == 0
    first = out.read_bytes()
    assert main(["gen", "fkt", "--k", "2", "--T", "5", "-o", str(out)]) == 0
    assert out.read_bytes() == first


def test_gen_to_stdout(capsys) -> None:
    assert main(["gen", "grid", "--p", "3", "--q", "3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("format = jointcross-instance 1")


def test_gen_validation_failure_is_exit_1(capsys) -> None:
    assert main(["gen", "grid", "--p", "2", "--q", "3"]) == 1
    assert "error:" in capsys.readouterr().err


def test_usage_error_is_exit_2() -> None:
    with pytest.raises(SystemExit) as exc:
        main(["gen", "grid", "--p", "3"])
    assert exc.value.code == 2


def test_unknown_flag_is_exit_2() -> None:
    with pytest.raises(SystemExit) as exc:
        main(["verify", "counts", "--k", "3", "--T", "7", "--bogus"])
    assert exc.value.code == 2


def test_reduce_full_writes_instance_and_receipt(tmp_path, anchored_file, capsys) -> None:
    out = tmp_path / "full.inst"
    rcpt = tmp_path / "full.rcpt"
    code = main(
        [
            "reduce", "full",
            "--in", anchored_file,
            "--out", str(out),
            "--receipt", str(rcpt),
            "--check",
        ]
    )
    assert code == 0
    assert out.exists() and rcpt.exists()
    assert "genus 6" in capsys.readouterr().out
    assert rcpt.read_text().startswith("kind = composite")


def test_reduce_wrong_kind_is_exit_1(fa_file, tmp_path, capsys) -> None:
    code = main(
        ["reduce", "anchored2fa6", "--in", fa_file, "--out", str(tmp_path / "x")]
    )
    assert code == 1
    assert "anchored" in capsys.readouterr().err


def test_verify_genus_on_fa_file(fa_file, capsys) -> None:
    assert main(["verify", "genus", "--in", fa_file]) == 0
    out = capsys.readouterr().out
    assert "genus = 0" in out


def test_verify_a2(anchored_file, capsys) -> None:
    assert main(["verify", "a2", "--in", anchored_file]) == 0
    out = capsys.readouterr().out
    assert out.count("-> ok") == 4


def test_oracle_with_check(fa_file, capsys) -> None:
    assert main(["oracle", "--in", fa_file, "--check"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("oracle ")
    assert out.split()[2] == "1"


def test_oracle_budget_exceeds(fa_file, capsys) -> None:
    assert main(["oracle", "--in", fa_file, "--max-crossings", "0"]) == 0
    assert "EXCEEDS" in capsys.readouterr().out


def test_export_dot(fa_file, capsys) -> None:
    assert main(["export-dot", "--in", fa_file, "--check"]) == 0
    assert capsys.readouterr().out.startswith('graph "joint"')


def test_missing_file_is_exit_1(capsys) -> None:
    assert main(["oracle", "--in", "/nonexistent/path.inst"]) == 1
    assert "error:" in capsys.readouterr().err
