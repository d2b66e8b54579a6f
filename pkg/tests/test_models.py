"""Tests for the model descriptors, token grammar and the five model families."""

import numpy as np
import pytest

from mcrhdc.errors import InvalidArgumentError
from mcrhdc.models import GenericHV, ModelDescriptor, ModelFactory, ModelFamily, parse_model_list, parse_model_token
from mcrhdc.models.bsc import BSCModel
from mcrhdc.models.fhrr import FHRRModel, phase_of
from mcrhdc.models.map import MAPModel, quantize
from mcrhdc.models.mcr import MCRModel
from mcrhdc.ring import RandomSource

DIM = 256
TOKENS = ["bsc", "mcr16", "mcr-r12", "mapi4", "mapi32", "mapc32", "fhrr"]


def model_for(token, dim=DIM, arithmetic="reference", seed=7):
    return ModelFactory.get_model(parse_model_token(token, "capacity", dim, arithmetic), seed)


def circular_gap(a, b):
    d = np.remainder(np.abs(a - b), 2 * np.pi)
    return np.minimum(d, 2 * np.pi - d).max()


class TestDescriptor:

    @pytest.mark.parametrize("token, bits, label", [
        ("bsc", 1, "bsc"), ("mcr16", 4, "mcr-r16"), ("mcr-r12", 4, "mcr-r12"), ("mcr8", 3, "mcr-r8"),
        ("mapi3", 3, "mapi3"), ("mapi32", 32, "mapi32"), ("mapc32", 32, "mapc32"), ("fhrr", 128, "fhrr"),
    ])
    def test_bits_and_label(self, token, bits, label):
        descriptor = parse_model_token(token, "capacity", 100)
        assert descriptor.bits_per_component == bits
        assert descriptor.label == label
        assert str(descriptor) == f"{label}:100"

    @pytest.mark.parametrize("fields", [
        {"family": ModelFamily.MCR, "dim": 10},
        {"family": ModelFamily.MCR, "dim": 10, "r": 12, "arithmetic": "fast"},
        {"family": ModelFamily.MAP_I, "dim": 10, "int_bits": 1},
        {"family": ModelFamily.BSC, "dim": 10, "r": 4},
        {"family": ModelFamily.FHRR, "dim": 0},
    ])
    def test_invalid(self, fields):
        with pytest.raises(ValueError):
            ModelDescriptor(**fields)

    def test_with_dim_revalidates(self):
        descriptor = parse_model_token("mcr16", "capacity", 100)
        assert descriptor.with_dim(64).dim == 64
        with pytest.raises(ValueError):
            descriptor.with_dim(0)

    def test_with_arithmetic(self):
        descriptor = parse_model_token("mcr16", "capacity", 100)
        assert descriptor.with_arithmetic("fast").arithmetic == "fast"
        with pytest.raises(ValueError):
            parse_model_token("mcr-r12", "capacity", 100).with_arithmetic("fast")


class TestTokens:

    def test_mcr_reads_modulus_for_capacity_and_bits_for_classify(self):
        assert parse_model_token("mcr16", "capacity", 500).r == 16
        assert parse_model_token("mcr4", "classify", 1024).r == 16

    def test_explicit_forms_and_dimension_suffix(self):
        descriptor = parse_model_token("mcr-b4:256", "capacity", 1024)
        assert (descriptor.r, descriptor.dim) == (16, 256)
        assert parse_model_token("mcr-r8", "classify", 64).r == 8
        assert parse_model_token("BSC:1024").dim == 1024

    def test_list(self):
        descriptors = parse_model_list("mcr4:64, bsc:1024,mapi4", "classify", 512)
        assert [d.label for d in descriptors] == ["mcr-r16", "bsc", "mapi4"]
        assert [d.dim for d in descriptors] == [64, 1024, 512]

    @pytest.mark.parametrize("token", ["foo", "mcr", "mapi", "bsc:x", "hrr"])
    def test_malformed(self, token):
        with pytest.raises(InvalidArgumentError):
            parse_model_token(token, "capacity", 100)

    def test_missing_dimension(self):
        with pytest.raises(InvalidArgumentError):
            parse_model_token("bsc")

    def test_fast_path_rejects_general_modulus(self):
        with pytest.raises(ValueError):
            parse_model_token("mcr3", "capacity", 100, "fast")

    def test_factory_classes(self):
        assert isinstance(model_for("bsc"), BSCModel)
        assert isinstance(model_for("mcr16"), MCRModel)
        assert isinstance(model_for("mapi4"), MAPModel)
        assert isinstance(model_for("mapc32"), MAPModel)
        assert isinstance(model_for("fhrr"), FHRRModel)


class TestUniformContract:

    @pytest.mark.parametrize("token", TOKENS)
    def test_distance_identity_and_symmetry(self, token):
        model = model_for(token)
        rng = RandomSource(1, token)
        a, b = model.random(rng), model.random(rng)
        assert model.model_distance(a, a) == pytest.approx(0.0, abs=1e-12)
        assert model.model_distance(a, b) == pytest.approx(model.model_distance(b, a))
        assert model.model_distance(a, b) > 0

    @pytest.mark.parametrize("token", TOKENS)
    def test_unbind_inverts_bind(self, token):
        model = model_for(token)
        rng = RandomSource(2, token)
        a, b = model.random(rng), model.random(rng)
        recovered = model.model_unbind(model.model_bind(a, b), b)
        assert model.model_distance(recovered, a) == pytest.approx(0.0, abs=1e-9)

    @pytest.mark.parametrize("token", TOKENS)
    def test_permutation_is_invertible(self, token):
        model = model_for(token)
        a = model.random(RandomSource(3, token))
        assert model.model_permute(a, 0) == a
        assert model.model_permute(model.model_permute(a, 5), -5) == a

    @pytest.mark.parametrize("token", TOKENS)
    def test_bundle_is_closer_to_members(self, token):
        model = model_for(token)
        rng = RandomSource(4, token)
        members = [model.random(rng) for _ in range(3)]
        outsider = model.random(rng)
        bundle = model.model_normalize(model.model_superpose(members))
        for member in members:
            assert model.model_distance(bundle, member) < model.model_distance(bundle, outsider)

    def test_descriptor_mismatch(self):
        model = model_for("bsc")
        other = model_for("bsc", dim=DIM + 1)
        with pytest.raises(InvalidArgumentError):
            model.model_bind(model.random(RandomSource(1)), other.random(RandomSource(1)))

    def test_empty_superposition(self):
        with pytest.raises(InvalidArgumentError):
            model_for("fhrr").model_superpose([])

    @pytest.mark.parametrize("token, payload", [
        ("bsc", [0, 2, 1]), ("mcr16", [0, 16, 1]), ("fhrr", [0.0, 7.0, 1.0]), ("mapc32", [0.0, np.nan, 1.0]),
    ])
    def test_payload_domain(self, token, payload):
        descriptor = parse_model_token(token, "capacity", 3)
        with pytest.raises(ValueError):
            GenericHV(descriptor=descriptor, payload=np.array(payload))


class TestBSC:

    def test_self_binding_is_zero(self):
        model = model_for("bsc")
        h = model.random(RandomSource(5))
        assert not model.model_bind(h, h).payload.any()

    def test_distance_to_complement(self):
        model = model_for("bsc")
        h = model.random(RandomSource(6))
        assert model.model_distance(h, model.wrap(1 - h.payload)) == DIM

    def test_majority_of_duplicates(self):
        model = model_for("bsc")
        rng = RandomSource(7)
        h, u = model.random(rng), model.random(rng)
        assert model.model_normalize(model.model_superpose([h, h, u])) == h

    def test_ties_are_seeded(self):
        rows = np.stack([np.zeros(DIM, dtype=np.uint8), np.ones(DIM, dtype=np.uint8)])
        first = model_for("bsc", seed=11).bundle_payload(rows)
        again = model_for("bsc", seed=11).bundle_payload(rows)
        other = model_for("bsc", seed=12).bundle_payload(rows)
        np.testing.assert_array_equal(first, again)
        assert not np.array_equal(first, other)
        assert 0.35 < first.mean() < 0.65

    def test_shift_distance_is_binomial(self):
        model = model_for("bsc", dim=1024)
        h = model.random(RandomSource(8))
        assert abs(model.model_distance(h, model.model_permute(h, 1)) - 512) <= 3 * 16

    def test_embedding_sign(self):
        model = model_for("bsc")
        np.testing.assert_array_equal(model.embed(np.array([0, 1])), [1.0, -1.0])
        np.testing.assert_array_equal(model.discretize(np.array([0.3, -0.2, 0.0])), [0, 1, 0])


class TestMAP:

    def test_self_binding_is_ones(self):
        model = model_for("mapi4")
        h = model.random(RandomSource(9))
        np.testing.assert_array_equal(model.model_bind(h, h).payload, np.ones(DIM))

    def test_quantizer_range_and_monotonicity(self):
        values = np.array([-7.0, -3.0, 0.0, 1.0, 2.0, 9.0])
        q = quantize(values, 4)
        assert q.min() == -8 and q.max() == 7
        assert np.all(np.diff(q) >= 0)

    def test_constant_row_maps_to_one_level(self):
        assert len(set(quantize(np.full(10, 3.0), 4).tolist())) == 1

    def test_rows_are_rescaled_independently(self):
        q = quantize(np.array([[0.0, 1.0, 2.0], [0.0, 100.0, 200.0]]), 2)
        np.testing.assert_array_equal(q[0], q[1])

    def test_continuous_variant_keeps_sums(self):
        model = model_for("mapc32")
        rows = model.random_payload(RandomSource(10), count=5)
        np.testing.assert_array_equal(model.bundle_payload(rows), rows.sum(axis=0))

    def test_zero_vector_distance(self):
        model = model_for("mapc32", dim=3)
        assert model.distance_payload(np.zeros(3), np.ones(3)) == 1.0


class TestFHRR:

    def test_antipodal_distance(self):
        model = model_for("fhrr")
        h = model.random(RandomSource(13))
        shifted = model.wrap(np.remainder(h.payload + np.pi, 2 * np.pi))
        assert model.model_distance(h, shifted) == pytest.approx(np.pi, abs=1e-9)

    def test_doubling_keeps_phase(self):
        model = model_for("fhrr")
        h = model.random(RandomSource(14))
        bundle = model.model_normalize(model.model_superpose([h, h]))
        assert circular_gap(bundle.payload, h.payload) < 1e-9

    def test_zero_resultant_phase(self):
        np.testing.assert_array_equal(phase_of(np.array([0.0 + 0.0j, 1e-12 + 0j])), [0.0, 0.0])


class TestMCRModel:

    def test_embedding_round_trip(self):
        model = model_for("mcr16")
        payload = model.random_payload(RandomSource(15))
        np.testing.assert_array_equal(model.discretize(model.embed(payload)), payload)
        np.testing.assert_array_equal(model.discretize(np.zeros(3, dtype=complex)), [0, 0, 0])

    def test_binary_modulus_fast_path_bundles(self):
        model = model_for("mcr2", arithmetic="fast")
        rows = model.random_payload(RandomSource(16), count=5)
        reference = model_for("mcr2").bundle_payload(rows)
        np.testing.assert_array_equal(model.bundle_payload(rows), reference)

    @pytest.mark.parametrize("token", ["mcr4", "mcr16"])
    def test_fast_and_reference_payload_ops_agree(self, token):
        fast, reference = model_for(token, arithmetic="fast"), model_for(token)
        rng = RandomSource(17, token)
        a = reference.random_payload(rng, count=8)
        b = reference.random_payload(rng)
        np.testing.assert_array_equal(fast.bind_payload(a, b), reference.bind_payload(a, b))
        np.testing.assert_array_equal(fast.unbind_payload(a, b), reference.unbind_payload(a, b))
        np.testing.assert_array_equal(fast.distance_payload(a, b), reference.distance_payload(a, b))
