"""Tests for the analytic accelerator cycle model and the latency sweep."""

import numpy as np
import pytest

from mcrhdc.base import LatencyConfig
from mcrhdc.errors import InvalidArgumentError
from mcrhdc.latency import (
    DATASET_SHAPES,
    OPERATIONS,
    REFERENCE_FREQUENCIES_MHZ,
    REFERENCE_OP_TIMES_US,
    BinaryUnitSpec,
    LatencySpec,
    bsc_cycles,
    bsc_inference_cycles,
    cycles,
    inference_cycles,
    run_latency_sweep,
    to_microseconds,
)
from mcrhdc.latency.sweep import RESULT_COLUMNS


class TestCycleModel:

    def test_reference_point(self):
        spec = LatencySpec(simd=8, dim=2048, classes=26)
        assert cycles("bind", spec) == 256
        assert cycles("unbind", spec) == 256
        assert cycles("permute", spec) == 256
        assert cycles("distance", spec) == 259
        assert cycles("superimpose", spec) == 512
        assert cycles("normalize", spec) == 2560
        assert cycles("search", spec) == 26 * 260

    @pytest.mark.parametrize("r, factor", [(4, 2), (8, 3), (16, 5), (32, 9)])
    def test_normalize_scales_with_quadrant_size(self, r, factor):
        spec = LatencySpec(simd=16, dim=512, r=r)
        assert cycles("normalize", spec) == 2 * 32 * factor

    @pytest.mark.parametrize("op", ["bind", "superimpose", "normalize", "permute"])
    def test_doubling_simd_halves_block_ops(self, op):
        narrow = LatencySpec(simd=8, dim=2048)
        wide = LatencySpec(simd=16, dim=2048)
        assert cycles(op, wide) * 2 == cycles(op, narrow)

    def test_partial_last_block(self):
        spec = LatencySpec(simd=8, dim=100)
        assert spec.blocks == 13
        assert cycles("bind", spec) == 13

    def test_simd_wider_than_vector(self):
        spec = LatencySpec(simd=64, dim=32)
        assert spec.simd_clamped
        assert spec.effective_simd == 32
        assert cycles("bind", spec) == 1
        assert cycles("distance", spec) == 1 + 5

    def test_binary_counterpart(self):
        spec = LatencySpec(simd=32, dim=1024, classes=2)
        assert [bsc_cycles(op, spec) for op in ("bind", "superimpose", "normalize")] == [32, 32, 32]
        assert bsc_cycles("distance", spec) == 37
        assert bsc_cycles("search", spec) == 2 * 38

    def test_unknown_operation(self):
        spec = LatencySpec(simd=8, dim=64)
        with pytest.raises(InvalidArgumentError):
            cycles("rotate", spec)
        with pytest.raises(InvalidArgumentError):
            bsc_cycles("rotate", spec)

    @pytest.mark.parametrize("fields", [
        {"simd": 0, "dim": 64}, {"simd": 12, "dim": 64}, {"simd": 8, "dim": 0}, {"simd": 8, "dim": 64, "r": 12},
        {"simd": 8, "dim": 64, "r": 2}, {"simd": 8, "dim": 64, "classes": 0}, {"simd": 8, "dim": 64, "freq_mhz": 0.0},
    ])
    def test_invalid_spec(self, fields):
        with pytest.raises(ValueError):
            LatencySpec(**fields)

    def test_paired_binary_unit(self):
        spec = LatencySpec(simd=8, r=8, dim=96, classes=3, freq_mhz=150.0)
        binary = BinaryUnitSpec.paired_with(spec)
        assert (binary.simd, binary.dim, binary.classes) == (24, 96, 3)
        assert binary.freq_mhz is None
        assert bsc_cycles("bind", binary) == 4
        assert bsc_cycles("distance", binary) == 4 + 5
        assert BinaryUnitSpec.paired_with(spec, dim=1024).blocks == 43

    @pytest.mark.parametrize("fields", [{"simd": 0, "dim": 64}, {"simd": 24, "dim": 64, "r": 12}])
    def test_invalid_binary_unit(self, fields):
        with pytest.raises(ValueError):
            BinaryUnitSpec(**fields)


class TestInference:

    def test_breakdown(self):
        spec = LatencySpec(simd=8, dim=64, classes=2)
        b = inference_cycles(spec, 3)
        assert (b.bind, b.superimpose, b.normalize, b.search) == (24, 48, 80, 24)
        assert b.total == 176

    def test_needs_features(self):
        with pytest.raises(InvalidArgumentError):
            inference_cycles(LatencySpec(simd=8, dim=64), 0)
        with pytest.raises(InvalidArgumentError):
            bsc_inference_cycles(LatencySpec(simd=8, dim=64), 0)

    @pytest.mark.parametrize("name", sorted(DATASET_SHAPES))
    def test_small_mcr_beats_wide_bsc(self, name):
        features, classes = DATASET_SHAPES[name]
        mcr = inference_cycles(LatencySpec(simd=8, r=16, dim=64, classes=classes), features)
        bsc = bsc_inference_cycles(LatencySpec(simd=32, r=16, dim=1024, classes=classes), features)
        assert mcr.total < bsc.total

    def test_time_conversion(self):
        assert to_microseconds(300, 150.0) == pytest.approx(2.0)
        assert to_microseconds(300, None) is None


class TestMeasuredTimes:

    @pytest.mark.parametrize("simd, dim", sorted(REFERENCE_OP_TIMES_US))
    def test_predictions_stay_below_measurements(self, simd, dim):
        spec = LatencySpec(simd=simd, dim=dim)
        freq = REFERENCE_FREQUENCIES_MHZ[simd]
        for op, measured in REFERENCE_OP_TIMES_US[(simd, dim)].items():
            assert to_microseconds(cycles(op, spec), freq) <= measured

    @pytest.mark.parametrize("simd, dim", sorted(REFERENCE_OP_TIMES_US))
    def test_same_order_of_magnitude(self, simd, dim):
        spec = LatencySpec(simd=simd, dim=dim)
        freq = REFERENCE_FREQUENCIES_MHZ[simd]
        normalize = to_microseconds(cycles("normalize", spec), freq)
        assert normalize * 10 > REFERENCE_OP_TIMES_US[(simd, dim)]["normalize"]


class TestSweep:

    def test_default_grid(self):
        table = run_latency_sweep(LatencyConfig())
        assert list(table.columns) == RESULT_COLUMNS
        assert len(table) == 12
        assert (table["family"] == "mcr").all()
        assert table["freq_mhz"].isna().all()

    def test_reference_clocks(self):
        table = run_latency_sweep(LatencyConfig(simd=[8], dims=[2048], freq="auto"))
        row = table.iloc[0]
        assert row["bind"] == 256
        assert row["freq_mhz"] == 150.0
        assert row["inference_us"] == pytest.approx(row["inference"] / 150.0)
        measured = REFERENCE_OP_TIMES_US[(8, 2048)]
        expected = measured["bind"] + measured["superimpose"] + measured["normalize"] + measured["distance"]
        assert row["measured_composite_us"] == pytest.approx(expected)
        assert row["inference_us"] <= row["measured_composite_us"]

    def test_fixed_clock(self):
        table = run_latency_sweep(LatencyConfig(simd=[16], dims=[512], freq=100.0))
        assert table.loc[0, "inference_us"] == pytest.approx(table.loc[0, "inference"] / 100.0)

    def test_dataset_preset(self):
        table = run_latency_sweep(LatencyConfig(simd=[8], dims=[64], dataset="isolet"))
        assert (table.loc[0, "features"], table.loc[0, "classes"]) == (617, 26)

    def test_unknown_preset(self):
        with pytest.raises(InvalidArgumentError):
            run_latency_sweep(LatencyConfig(dataset="mnist"))

    def test_binary_comparison_rows(self):
        config = LatencyConfig(simd=[8], dims=[64], bsc_dims=[1024], compare_bsc=True, dataset="HabermanSurvival",
                               freq="auto")
        table = run_latency_sweep(config).set_index("family")
        assert table.loc["bsc", "simd"] == 32
        assert table.loc["bsc", "dim"] == 1024
        assert table.loc["bsc", "r"] == 2
        assert np.isnan(table.loc["bsc", "freq_mhz"])
        assert table.loc["mcr", "inference"] < table.loc["bsc", "inference"]

    def test_binary_rows_for_non_power_of_two_lanes(self):
        config = LatencyConfig(simd=[8], dims=[64], r=[8], bsc_dims=[1024], compare_bsc=True, freq=100.0)
        table = run_latency_sweep(config).set_index("family")
        assert table.loc["bsc", "simd"] == 24
        assert table.loc["bsc", "bind"] == 43
        assert table.loc["bsc", "freq_mhz"] == 100.0

    def test_clamped_rows(self):
        table = run_latency_sweep(LatencyConfig(simd=[64], dims=[32]))
        assert bool(table.loc[0, "simd_clamped"])
        assert table.loc[0, "effective_simd"] == 32

    def test_every_operation_reported(self):
        table = run_latency_sweep(LatencyConfig(simd=[8], dims=[64]))
        assert all(table.loc[0, op] > 0 for op in OPERATIONS)

    @pytest.mark.parametrize("fields", [{"simd": [12]}, {"r": [12]}, {"dims": []}, {"freq": -5.0}])
    def test_invalid_config(self, fields):
        with pytest.raises(ValueError):
            LatencyConfig(**fields)
