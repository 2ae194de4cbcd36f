"""Certificate text format: golden file, round trips, strict rejection."""

import random
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclocert import (
    Certificate,
    CertFormatError,
    CertInvariantError,
    CertVersionError,
    RingElement,
    SeedTrust,
    cert_decode,
    cert_encode,
    cyclotomic_value,
)

GOLDEN = Path(__file__).parent / "data" / "golden_n7.cert"


def fixture_cert():
    return Certificate("1", 3, 2, 7, 19, 3, RingElement((3, 1, 6)), SeedTrust.PROBABLE)


def random_valid_cert(rng):
    p = rng.choice((3, 5))
    n = rng.randrange(3, 2**48) * 2 + 1
    phi = cyclotomic_value(n, p)
    k = 1
    for cand in range(2, 100):
        if phi % cand == 0:
            k = cand
            break
    d = rng.randrange(2, min(n - 1, 10**6))
    w = RingElement(tuple(rng.randrange(n) for _ in range(p)))
    trust = rng.choice((SeedTrust.PROBABLE, SeedTrust.EXTERNALLY_PROVEN))
    return Certificate("1", p, d, n, phi // k, k, w, trust)


class TestGoldenFile:
    def test_encode_matches_committed_bytes(self):
        assert cert_encode(fixture_cert()) == GOLDEN.read_text()

    def test_decode_golden(self):
        assert cert_decode(GOLDEN.read_text()) == fixture_cert()


class TestRoundTrip:
    def test_thousand_random_certificates(self):
        rng = random.Random(123)
        for _ in range(1000):
            cert = random_valid_cert(rng)
            assert cert_decode(cert_encode(cert)) == cert

    @given(st.data())
    @settings(max_examples=50)
    def test_roundtrip_property(self, data):
        rng = random.Random(data.draw(st.integers(0, 2**32)))
        cert = random_valid_cert(rng)
        assert cert_decode(cert_encode(cert)) == cert


class TestEncodeValidation:
    def test_out_of_range_coefficient_refused(self):
        bad = Certificate("1", 3, 2, 7, 19, 3, RingElement((7, 0, 0)), SeedTrust.PROBABLE)
        with pytest.raises(CertInvariantError):
            cert_encode(bad)

    def test_cofactor_mismatch_refused(self):
        bad = Certificate("1", 3, 2, 7, 19, 4, RingElement((3, 1, 6)), SeedTrust.PROBABLE)
        with pytest.raises(CertInvariantError):
            cert_encode(bad)

    def test_unknown_version_refused(self):
        bad = Certificate("2", 3, 2, 7, 19, 3, RingElement((3, 1, 6)), SeedTrust.PROBABLE)
        with pytest.raises(CertVersionError):
            cert_encode(bad)


class TestDecodeValidation:
    def test_empty_input(self):
        with pytest.raises(CertFormatError):
            cert_decode("")

    def test_missing_key(self):
        text = GOLDEN.read_text().replace("k=3\n", "")
        with pytest.raises(CertFormatError, match="missing"):
            cert_decode(text)

    def test_unknown_key(self):
        with pytest.raises(CertFormatError, match="unknown"):
            cert_decode(GOLDEN.read_text() + "extra=1\n")

    def test_duplicate_key(self):
        with pytest.raises(CertFormatError, match="duplicate"):
            cert_decode(GOLDEN.read_text() + "k=3\n")

    def test_leading_zero_rejected(self):
        text = GOLDEN.read_text().replace("k=3", "k=03")
        with pytest.raises(CertFormatError):
            cert_decode(text)

    def test_signed_integer_rejected(self):
        text = GOLDEN.read_text().replace("k=3", "k=+3")
        with pytest.raises(CertFormatError):
            cert_decode(text)

    def test_unsupported_version(self):
        text = GOLDEN.read_text().replace("version=1", "version=9")
        with pytest.raises(CertVersionError):
            cert_decode(text)

    def test_cofactor_invariant_enforced(self):
        text = GOLDEN.read_text().replace("q=19", "q=23")
        with pytest.raises(CertInvariantError):
            cert_decode(text)

    def test_coefficient_range_enforced(self):
        text = GOLDEN.read_text().replace("w0=3", "w0=7")
        with pytest.raises(CertInvariantError):
            cert_decode(text)

    def test_bad_trust_label(self):
        text = GOLDEN.read_text().replace("seed_trust=PROBABLE", "seed_trust=MAYBE")
        with pytest.raises(CertFormatError):
            cert_decode(text)

    def test_garbage_line(self):
        with pytest.raises(CertFormatError):
            cert_decode("this is not a certificate\n")
