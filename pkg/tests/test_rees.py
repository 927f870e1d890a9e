import json
import warnings

import pytest

from vpfbetti.counting import DegreeMatrix
from vpfbetti.hilbert import (
    DataIntegrityWarning,
    KappaNumerator,
    hf_module,
    series_identity_check,
)
from vpfbetti.rees import (
    SpecFormatError,
    ToriSpec,
    UnsupportedRankError,
    ci_shifts,
    ingest,
    serialize,
    to_document,
)


def test_ci_236_shifts():
    spec = ci_shifts((2, 3, 6))
    assert spec.tor(0).terms == (((0, 0), 1),)
    assert spec.tor(1).terms == (
        ((5, 1), 1),
        ((8, 1), 1),
        ((9, 1), 1),
        ((11, 2), -1),
    )
    assert spec.tor(2).terms == (((11, 1), 1),)


def test_ci_pair_koszul():
    spec = ci_shifts((1, 1))
    assert spec.tor(1).terms == (((2, 1), 1),)
    for index, kappa in spec.tors:
        assert series_identity_check(kappa, (12, 6))


def test_ci_sorts_degrees():
    assert ci_shifts((6, 2, 3)).degrees == (2, 3, 6)


def test_ci_unsupported_rank():
    with pytest.raises(UnsupportedRankError):
        ci_shifts((2, 3, 4, 5))
    with pytest.raises(UnsupportedRankError):
        ci_shifts((2,))


def test_euler_characteristic_identity():
    # alternating sum of the three numerators equals the resolution numerator
    spec = ci_shifts((2, 3, 6))
    ring = spec.ring
    resolution = KappaNumerator.from_terms(
        ring,
        [((0, 0), 1), ((5, 1), -1), ((8, 1), -1), ((9, 1), -1), ((11, 1), 1), ((11, 2), 1)],
    )
    for mu in range(0, 79):
        for t in range(0, 13):
            val = (
                hf_module(spec.tor(0), (mu, t))
                - hf_module(spec.tor(1), (mu, t))
                + hf_module(spec.tor(2), (mu, t))
            )
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", DataIntegrityWarning)
                assert val == hf_module(resolution, (mu, t))


def test_hf_nonnegative_all_indices():
    for degrees in [(2, 3, 6), (1, 1), (2, 3), (4, 7), (2, 2, 5)]:
        spec = ci_shifts(degrees)
        hi = max(degrees)
        for _, kappa in spec.tors:
            for t in range(0, 13):
                for mu in range(0, hi * t + hi * 3 + 1):
                    assert hf_module(kappa, (mu, t)) >= 0


def test_round_trip():
    spec = ci_shifts((2, 3, 6))
    assert ingest(serialize(spec)) == spec


def test_round_trip_via_dict():
    spec = ci_shifts((4, 7))
    assert ingest(to_document(spec)) == spec


def test_ingest_merges_duplicate_shifts():
    doc = {
        "generators": [[2, 1], [3, 1], [6, 1]],
        "tor": [
            {"index": 1, "shifts": [{"a": [5, 1], "c": 1}, {"a": [5, 1], "c": 1}]}
        ],
    }
    spec = ingest(doc)
    assert spec.tor(1).terms == (((5, 1), 2),)


def test_ingest_malformed_coefficient():
    doc = {
        "generators": [[2, 1]],
        "tor": [{"index": 1, "shifts": [{"a": [5, 1], "c": "one"}]}],
    }
    with pytest.raises(SpecFormatError, match=r"tor\[0\].shifts\[0\].c"):
        ingest(doc)


def test_ingest_unknown_field_rejected():
    doc = {
        "generators": [[2, 1]],
        "tor": [{"index": 1, "shifts": [{"a": [5, 1], "c": 1, "extra": 0}]}],
    }
    with pytest.raises(SpecFormatError, match="extra"):
        ingest(doc)


def test_ingest_negative_t_shift_rejected():
    doc = {
        "generators": [[2, 1], [3, 1], [6, 1]],
        "tor": [{"index": 1, "shifts": [{"a": [8, -1], "c": 1}]}],
    }
    with pytest.raises(SpecFormatError, match="negative T-degree"):
        ingest(doc)


def test_ingest_unsorted_degrees_rejected():
    doc = {"generators": [[3, 1], [2, 1]], "tor": []}
    with pytest.raises(SpecFormatError, match="sorted"):
        ingest(doc)


def test_ingest_second_component_must_be_one():
    doc = {"generators": [[2, 2]], "tor": []}
    with pytest.raises(SpecFormatError):
        ingest(doc)


def test_ingest_duplicate_index_rejected():
    doc = {
        "generators": [[2, 1], [3, 1]],
        "tor": [
            {"index": 1, "shifts": [{"a": [5, 1], "c": 1}]},
            {"index": 1, "shifts": [{"a": [5, 1], "c": 1}]},
        ],
    }
    with pytest.raises(SpecFormatError, match="duplicate"):
        ingest(doc)


def test_ingest_index0_must_be_unit():
    doc = {
        "generators": [[2, 1], [3, 1]],
        "tor": [{"index": 0, "shifts": [{"a": [1, 0], "c": 1}]}],
    }
    with pytest.raises(SpecFormatError, match="unit"):
        ingest(doc)


def test_ingest_invalid_json_text():
    with pytest.raises(SpecFormatError, match="invalid JSON"):
        ingest("{not json")


def test_serialize_canonical_and_stable():
    spec = ci_shifts((2, 3, 6))
    assert serialize(spec) == serialize(ingest(serialize(spec)))
    assert serialize(spec).endswith("\n")
    json.loads(serialize(spec))  # well-formed


def test_shift_second_coordinate_bounds():
    # for the built-in families the T-degree of every shift is within
    # homological index + 1
    for degrees in [(2, 3, 6), (1, 4), (3, 3, 7)]:
        spec = ci_shifts(degrees)
        for index, kappa in spec.tors:
            for shift, _ in kappa.terms:
                assert 0 <= shift[1] <= index + 1
