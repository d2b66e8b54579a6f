"""Tests for the command line, result files and the hv and microbench harnesses."""

import argparse
import io
import json

import pandas as pd
import pytest

from mcrhdc.base import MicrobenchConfig
from mcrhdc.cli import parse_and_dispatch, resolve_config
from mcrhdc.cli.main import EXIT_CONFIG_ERROR, EXIT_OK, EXIT_RUNTIME_ERROR, int_list
from mcrhdc.cli.microbench import RESULT_COLUMNS as MICROBENCH_COLUMNS
from mcrhdc.cli.microbench import run_microbench
from mcrhdc.errors import DatasetError, InvalidArgumentError
from mcrhdc.ring import Hypervector
from mcrhdc.utils.io import CONFIG_PREFIX, read_results

CAPACITY_ARGS = ["capacity", "--models", "mcr16,bsc", "--d", "4", "--m", "3,6", "--dim", "64", "--codebooks", "1",
                 "--sequences", "2", "--seed", "3", "--no-progress"]


def stdout_table(text):
    first, _, body = text.partition("\n")
    assert first.startswith(CONFIG_PREFIX)
    return json.loads(first[len(CONFIG_PREFIX):]), pd.read_csv(io.StringIO(body))


class TestArguments:

    def test_int_list(self):
        assert int_list("8,16,32") == [8, 16, 32]
        assert int_list("10:30:10") == [10, 20, 30]
        with pytest.raises(argparse.ArgumentTypeError):
            int_list("10:30")
        with pytest.raises(argparse.ArgumentTypeError):
            int_list("eight")

    def test_help(self):
        assert parse_and_dispatch(["capacity", "--help"]) == EXIT_OK

    @pytest.mark.parametrize("argv", [[], ["nonsense"], ["latency", "--simd", "x"], ["capacity", "--bogus", "1"]])
    def test_usage_errors(self, argv):
        assert parse_and_dispatch(argv) == EXIT_CONFIG_ERROR

    def test_resolve_config(self):
        experiment = resolve_config({"subcommand": "latency", "simd": [8], "dims": [64], "format": "json",
                                     "log_level": "debug", "progress": False})
        assert experiment.format == "json"
        assert experiment.params.simd == [8]
        assert experiment.result_header() == {"subcommand": "latency", "params": experiment.params.to_dict()}


class TestExitCodes:

    @pytest.mark.parametrize("argv", [
        ["microbench", "--repetitions", "0"],
        ["capacity", "--models", "mcr3", "--arithmetic", "fast", "--no-progress"],
        ["capacity", "--d", "1"],
        ["latency", "--simd", "12"],
        ["latency", "--jobs", "0"],
        ["latency", "--log-level", "LOUD"],
        ["hv", "random", "--r", "16"],
    ])
    def test_configuration_errors(self, argv):
        assert parse_and_dispatch(argv) == EXIT_CONFIG_ERROR

    def test_runtime_error(self, tmp_path):
        argv = ["classify", "--data", str(tmp_path), "--datasets", "missing", "--no-progress"]
        assert parse_and_dispatch(argv) == EXIT_RUNTIME_ERROR


class TestResultFiles:

    def test_latency_to_stdout(self, capsys):
        assert parse_and_dispatch(["latency", "--simd", "8", "--dim", "2048", "--freq", "auto"]) == EXIT_OK
        config, table = stdout_table(capsys.readouterr().out)
        assert config["subcommand"] == "latency"
        assert config["params"]["freq"] == "auto"
        assert table.loc[0, "bind"] == 256
        assert table.loc[0, "normalize"] == 2560

    def test_json_format(self, capsys):
        assert parse_and_dispatch(["latency", "--simd", "8,16", "--dim", "64", "--format", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["config"]["params"]["simd"] == [8, 16]
        assert [row["bind"] for row in payload["rows"]] == [8, 4]

    def test_rerun_reproduces_csv(self, tmp_path):
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        assert parse_and_dispatch(CAPACITY_ARGS + ["--out", str(first)]) == EXIT_OK
        assert parse_and_dispatch(["rerun", str(first), "--out", str(second), "--no-progress"]) == EXIT_OK
        assert first.read_bytes() == second.read_bytes()
        config, table = read_results(second)
        assert config["params"]["models"] == ["mcr16", "bsc"]
        assert len(table) == 4

    def test_same_seed_same_bytes(self, tmp_path):
        outs = [tmp_path / f"{i}.csv" for i in range(2)]
        for out in outs:
            assert parse_and_dispatch(CAPACITY_ARGS + ["--out", str(out), "--jobs", "2"]) == EXIT_OK
        assert outs[0].read_bytes() == outs[1].read_bytes()

    def test_rerun_json(self, tmp_path):
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        assert parse_and_dispatch(["latency", "--dataset", "Letter", "--format", "json", "--out", str(first)]) == 0
        assert parse_and_dispatch(["rerun", str(first), "--format", "json", "--out", str(second)]) == 0
        assert json.loads(first.read_text()) == json.loads(second.read_text())

    def test_missing_header(self, tmp_path):
        path = tmp_path / "plain.csv"
        path.write_text("a,b\n1,2\n")
        with pytest.raises(DatasetError):
            read_results(path)
        with pytest.raises(DatasetError):
            read_results(tmp_path / "absent.csv")


class TestHvCommand:

    def test_random_inspect_unpack_pack(self, tmp_path, capsys):
        vec, text, again = tmp_path / "v.mcrv", tmp_path / "v.txt", tmp_path / "w.mcrv"
        assert parse_and_dispatch(["hv", "random", "--r", "16", "--dim", "100", "--seed", "1",
                                   "--output", str(vec)]) == EXIT_OK
        capsys.readouterr()
        assert vec.stat().st_size == 16 + 50

        assert parse_and_dispatch(["hv", "inspect", "--input", str(vec)]) == EXIT_OK
        _, table = stdout_table(capsys.readouterr().out)
        assert (table.loc[0, "r"], table.loc[0, "b"], table.loc[0, "D"]) == (16, 4, 100)
        assert table.loc[0, "payload_bytes"] == 50

        assert parse_and_dispatch(["hv", "unpack", "--input", str(vec), "--output", str(text)]) == EXIT_OK
        assert len(text.read_text().split()) == 100

        assert parse_and_dispatch(["hv", "pack", "--r", "16", "--input", str(text), "--output", str(again)]) == 0
        assert again.read_bytes() == vec.read_bytes()
        assert Hypervector.load(again) == Hypervector.load(vec)

    def test_pack_rejects_out_of_range(self, tmp_path):
        text = tmp_path / "c.txt"
        text.write_text("0 1 2 16\n")
        argv = ["hv", "pack", "--r", "16", "--input", str(text), "--output", str(tmp_path / "c.mcrv")]
        assert parse_and_dispatch(argv) == EXIT_CONFIG_ERROR

    def test_missing_input(self, tmp_path):
        assert parse_and_dispatch(["hv", "inspect", "--input", str(tmp_path / "nope.mcrv")]) == EXIT_RUNTIME_ERROR


class TestMicrobench:

    def test_table(self):
        config = MicrobenchConfig(ops=["bind", "unbind", "distance", "normalize"], models=["mcr16", "mcr-r4"],
                                  dims=[64, 128], repetitions=2, batch=4)
        table = run_microbench(config)
        assert list(table.columns) == MICROBENCH_COLUMNS
        assert len(table) == 2 * 4 * 2
        assert (table["reference_median_s"] > 0).all() and (table["fast_median_s"] > 0).all()
        assert set(table["r"]) == {4, 16}

    def test_only_mcr_models(self):
        with pytest.raises(InvalidArgumentError):
            run_microbench(MicrobenchConfig(models=["bsc"], dims=[64], repetitions=1, batch=1))

    def test_normalize_needs_quadrants(self):
        with pytest.raises(InvalidArgumentError):
            run_microbench(MicrobenchConfig(ops=["normalize"], models=["mcr2"], dims=[64], repetitions=1, batch=1))

    def test_fast_path_rejects_general_modulus(self):
        with pytest.raises(ValueError):
            run_microbench(MicrobenchConfig(models=["mcr12"], dims=[64], repetitions=1, batch=1))
