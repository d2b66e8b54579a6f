"""Tests for the component domain, packed storage, random streams and lane kernels."""

import numpy as np
import pytest
from scipy import stats

from mcrhdc.errors import InvalidArgumentError, UnsupportedError
from mcrhdc.ring import (
    Hypervector,
    Modulus,
    PackedKernel,
    RandomSource,
    lane_width,
    mod_reduce,
    pack,
    payload_size,
    random_components,
    random_hypervector,
    unpack,
)
from mcrhdc.ring.hypervector import HEADER
from mcrhdc.mcr.ops import distance_components


class TestModulus:

    @pytest.mark.parametrize("r, b", [(2, 1), (3, 2), (4, 2), (5, 3), (16, 4), (17, 5), (256, 8), (257, 9),
                                      (65536, 16)])
    def test_bit_width(self, r, b):
        assert Modulus(r=r).b == b

    def test_power_of_two_flag(self):
        assert Modulus(r=16).power_of_two
        assert not Modulus(r=12).power_of_two

    def test_storage_dtype(self):
        assert Modulus(r=256).dtype == np.uint8
        assert Modulus(r=257).dtype == np.uint16

    @pytest.mark.parametrize("r", [0, 1, 65537])
    def test_out_of_range(self, r):
        with pytest.raises(ValueError):
            Modulus(r=r)

    def test_mask_matches_division_for_powers_of_two(self):
        rng = np.random.default_rng(7)
        x = rng.integers(-10_000, 10_000, size=5000)
        for r in (2, 4, 8, 16, 256):
            mod = Modulus(r=r)
            np.testing.assert_array_equal(mod_reduce(x, mod, "mask"), mod_reduce(x, mod, "division"))

    def test_mask_path_rejects_general_modulus(self):
        with pytest.raises(InvalidArgumentError):
            mod_reduce(7, Modulus(r=5), "mask")

    def test_scalar_reduction(self):
        assert mod_reduce(-1, Modulus(r=5)) == 4
        assert mod_reduce(17, Modulus(r=16)) == 1


class TestPacking:

    def test_payload_size(self):
        assert payload_size(3, Modulus(r=16)) == 2
        assert payload_size(1000, Modulus(r=3)) == 250
        assert payload_size(5, Modulus(r=5)) == 2

    def test_bit_layout_is_little_endian(self):
        assert pack([1, 2, 15], Modulus(r=16)) == bytes([0x21, 0x0F])
        assert pack([1, 2, 0, 1], Modulus(r=3)) == bytes([1 | 2 << 2 | 1 << 6])

    @pytest.mark.parametrize("r, dim", [(2, 1), (3, 17), (5, 100), (16, 1024), (200, 33), (1000, 64), (65536, 9)])
    def test_lossless(self, r, dim):
        mod = Modulus(r=r)
        comps = random_components(mod, dim, RandomSource(3, r, dim))
        data = pack(comps, mod)
        assert len(data) == payload_size(dim, mod)
        np.testing.assert_array_equal(unpack(data, mod, dim), comps)

    def test_out_of_range_components_rejected(self):
        with pytest.raises(InvalidArgumentError):
            pack([0, 5], Modulus(r=5))

    def test_short_payload_rejected(self):
        with pytest.raises(InvalidArgumentError):
            unpack(b"\x00", Modulus(r=16), 4)


class TestHypervector:

    def test_components_are_read_only(self):
        hv = Hypervector.from_components([0, 1, 2], 4)
        assert not hv.components.flags.writeable

    @pytest.mark.parametrize("components", [[0, 4], [], [[0, 1]], [0.5, 1.0]])
    def test_invalid_components(self, components):
        with pytest.raises(ValueError):
            Hypervector.from_components(components, 4)

    @pytest.mark.parametrize("dim", [0, -1])
    def test_random_hypervector_needs_components(self, dim):
        with pytest.raises(InvalidArgumentError):
            random_hypervector(Modulus(r=8), dim, RandomSource(1))

    def test_file_round_trip(self, tmp_path):
        hv = random_hypervector(Modulus(r=16), 1000, RandomSource(11))
        path = tmp_path / "v.mcrv"
        hv.save(path)
        blob = path.read_bytes()
        assert len(blob) == HEADER.size + 500
        assert blob[:4] == b"MCRV"
        assert Hypervector.load(path) == hv

    def test_largest_modulus_header(self):
        hv = Hypervector.from_components([0, 65535, 1, 2], 65536)
        blob = hv.to_bytes()
        assert blob[5:7] == b"\x00\x00"
        assert Hypervector.from_bytes(blob) == hv

    def test_bad_magic(self):
        blob = bytearray(Hypervector.from_components([1, 2, 3], 4).to_bytes())
        blob[:4] = b"XXXX"
        with pytest.raises(InvalidArgumentError):
            Hypervector.from_bytes(bytes(blob))

    def test_equality_and_hash(self):
        a = Hypervector.from_components([1, 2, 3], 4)
        b = Hypervector.from_components(np.array([1, 2, 3], dtype=np.int64), 4)
        c = Hypervector.from_components([1, 2, 3], 5)
        assert a == b and hash(a) == hash(b)
        assert a != c


class TestRandomSource:

    def test_same_key_path_same_stream(self):
        a = RandomSource(5, "codebook", 3).integers(0, 1000, size=50)
        b = RandomSource(5, "codebook", 3).integers(0, 1000, size=50)
        np.testing.assert_array_equal(a, b)

    def test_keys_separate_streams(self):
        a = RandomSource(5, "codebook", 3).integers(0, 1 << 30, size=50)
        b = RandomSource(5, "codebook", 4).integers(0, 1 << 30, size=50)
        assert not np.array_equal(a, b)

    def test_substream_equals_extended_key_path(self):
        parent = RandomSource(9, "a")
        parent.integers(0, 10, size=100)
        np.testing.assert_array_equal(parent.substream("b", 2).uniform(size=10),
                                      RandomSource(9, "a", "b", 2).uniform(size=10))

    def test_negative_seed_rejected(self):
        with pytest.raises(InvalidArgumentError):
            RandomSource(-1)

    def test_components_uniform(self):
        mod = Modulus(r=16)
        comps = random_components(mod, 160_000, RandomSource(2024))
        counts = np.bincount(comps, minlength=16)
        assert stats.chisquare(counts).pvalue > 1e-3

    def test_batch_shape(self):
        comps = random_components(Modulus(r=7), 10, RandomSource(1), count=4)
        assert comps.shape == (4, 10)
        assert comps.max() < 7


class TestPackedKernel:

    @pytest.mark.parametrize("r, width", [(2, 2), (4, 4), (8, 4), (16, 8), (128, 8), (256, 16), (65536, 32)])
    def test_lane_width(self, r, width):
        assert lane_width(Modulus(r=r)) == width

    def test_general_modulus_unsupported(self):
        with pytest.raises(UnsupportedError):
            PackedKernel(Modulus(r=12))

    @pytest.mark.parametrize("r", [2, 4, 8, 16, 64, 256, 1024, 65536])
    def test_matches_explicit_arithmetic(self, r):
        mod = Modulus(r=r)
        kernel = PackedKernel(mod)
        rng = RandomSource(17, r)
        dim = 37
        rows = random_components(mod, dim, rng, count=5)
        query = random_components(mod, dim, rng)
        pq, pr = kernel.pack(query), kernel.pack(rows)
        a64, b64 = query.astype(np.int64), rows.astype(np.int64)

        np.testing.assert_array_equal(kernel.unpack(kernel.add(pq, pr), dim), np.remainder(a64 + b64, r))
        np.testing.assert_array_equal(kernel.unpack(kernel.sub(pq, pr), dim), np.remainder(a64 - b64, r))
        np.testing.assert_array_equal(kernel.distance(pq, pr), distance_components(query, rows, mod))

    def test_unpack_inverts_pack(self):
        mod = Modulus(r=8)
        kernel = PackedKernel(mod)
        comps = random_components(mod, 100, RandomSource(4), count=3)
        words = kernel.pack(comps)
        assert words.shape == (3, kernel.n_words(100))
        np.testing.assert_array_equal(kernel.unpack(words, 100), comps)

    def test_out_of_range_rejected(self):
        with pytest.raises(InvalidArgumentError):
            PackedKernel(Modulus(r=4)).pack(np.array([0, 4]))
