import pytest

from coverscope import arith, disqualify
from coverscope.cover import Candidate
from coverscope.dataset import KIND_BOTH, KIND_R, KIND_S, load_corpus, default_corpus_path
from oracles import trial_division_prime


class TestFirstPrimeExponent:
    def test_k5_hits_immediately(self):
        record = disqualify.first_prime_exponent(Candidate(5, 1), 8)
        assert record.n_found == 1
        assert record.primality.n == 11

    def test_k143_needs_53(self):
        record = disqualify.first_prime_exponent(Candidate(143, 1), 100)
        assert record.n_found == 53
        assert record.primality.method == arith.METHOD_PROTH

    def test_k47_needs_583_with_proth_witness(self):
        record = disqualify.first_prime_exponent(Candidate(47, 1), 600)
        assert record.n_found == 583
        result = record.primality
        n = 47 * 2**583 + 1
        assert result.n == n and result.method == arith.METHOD_PROTH
        assert pow(result.witness, (n - 1) // 2, n) == n - 1

    def test_nothing_found_is_data(self):
        record = disqualify.first_prime_exponent(Candidate(78557, 1), 100)
        assert record.n_found is None
        assert record.primality is None
        assert record.n_searched == 100
        assert not record.disqualified

    def test_verbose_trail_rechecks_minimality(self):
        record = disqualify.first_prime_exponent(Candidate(143, 1), 100, verbose=True)
        assert len(record.trail) == 53
        for i, result in enumerate(record.trail, start=1):
            assert result.n == 143 * 2**i + 1
            assert result.is_prime == (i == 53)

    def test_minimality_against_oracle(self):
        # small enough to confirm every skipped term composite by division
        record = disqualify.first_prime_exponent(Candidate(143, 1), 60, verbose=True)
        for i, result in enumerate(record.trail[:20], start=1):
            assert trial_division_prime(143 * 2**i + 1) == result.is_prime

    def test_riesel_side(self):
        # 509203*2^n - 1 composite throughout (covered); 3*2^n - 1 prime at n=1
        assert disqualify.first_prime_exponent(Candidate(3, -1), 8).n_found == 1
        assert disqualify.first_prime_exponent(Candidate(509203, -1), 50).n_found is None

    def test_bad_n_max(self):
        with pytest.raises(ValueError):
            disqualify.first_prime_exponent(Candidate(5, 1), 0)


class TestSurveyRange:
    def test_first_hundred_odd_k(self):
        records = disqualify.survey_range(1, 199, 1, 8)
        assert len(records) == 100
        survivors = [r.candidate.k for r in records if not r.disqualified]
        assert survivors == [47, 103, 143, 197]
        assert sum(1 for r in records if r.disqualified) == 96

    def test_deeper_scan_eliminates_103_and_197(self):
        records = disqualify.survey_range(103, 197, 1, 16)
        by_k = {r.candidate.k: r for r in records}
        assert by_k[103].disqualified
        assert by_k[197].disqualified
        assert not by_k[143].disqualified

    def test_riesel_k1_edge(self):
        # 1*2^1 - 1 = 1 is not prime
        records = disqualify.survey_range(1, 1, -1, 1)
        assert len(records) == 1
        assert not records[0].disqualified
        assert records[0].n_searched == 1

    def test_even_bounds_rejected(self):
        with pytest.raises(ValueError):
            disqualify.survey_range(2, 9, 1, 8)
        with pytest.raises(ValueError):
            disqualify.survey_range(3, 8, 1, 8)
        with pytest.raises(ValueError):
            disqualify.survey_range(9, 3, 1, 8)


class TestConsistencyWithCovers:
    def test_covered_numbers_never_disqualified(self):
        # a verified cover means no prime ever, so none below 240 either
        records = load_corpus(default_corpus_path())
        for record in records:
            if record.kind not in (KIND_S, KIND_R, KIND_BOTH):
                continue
            for sign, _ in record.covers:
                result = disqualify.first_prime_exponent(
                    Candidate(record.k, sign), 240
                )
                assert result.n_found is None, (record.k, sign, result.n_found)


class TestReports:
    def test_dict_shape(self):
        record = disqualify.first_prime_exponent(Candidate(143, 1), 60)
        doc = disqualify.record_to_dict(record)
        assert doc["k"] == "143"
        assert doc["n_found"] == 53
        assert doc["method"] == arith.METHOD_PROTH
        assert doc["primality"]["is_prime"] is True
        assert doc["primality"]["witness"].isdigit()

    def test_text_table(self):
        records = disqualify.survey_range(45, 49, 1, 8)
        text = disqualify.records_to_text(records)
        assert "none <= 8" in text  # k=47 survives
        assert text.splitlines()[0].split() == ["k", "n", "method"]
