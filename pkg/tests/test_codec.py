import json
import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from helix import (
    Codebook,
    CodecError,
    Codeword,
    DecodeError,
    SoundnessError,
    builtin_table1,
    codebook_from_json,
    codebook_to_json,
    color_name,
    decode_strand,
    dump_codebook,
    encode_assignment,
    generate_codebook,
    load_codebook,
    render,
    save_codebook,
    validate_codebook,
)
from helix.codec import coloring_from_strand, strand_from_coloring

R1 = "AAGGCAGGAACAGATCAACC"
G1 = "CGTTCTAAATAGGGTCGTGT"
R2 = "CCACAATGTTATAATACCAC"
G2 = "ATCTTAGCACGATTCTCCTG"
B12 = "TCTCAACAGCGTCTGGAAGT"


def test_color_names():
    assert [color_name(c) for c in range(5)] == ["red", "green", "blue", "color3", "color4"]


def test_table1_shape(table1):
    assert (table1.n, table1.k) == (12, 3)
    assert len(table1.codewords()) == 36
    assert table1.codeword(1, 0).sequence == R1
    assert table1.codeword(12, 2).sequence == B12


def test_table1_irregular_lengths_kept_verbatim(table1):
    hist = Counter(len(cw.sequence) for cw in table1.codewords())
    assert hist == {20: 31, 21: 3, 19: 2}
    assert len(table1.codeword(3, 0).sequence) == 19
    assert len(table1.codeword(8, 2).sequence) == 19
    assert len(table1.codeword(5, 0).sequence) == 21


def test_table1_passes_validation(table1):
    report = table1.validation()
    assert report.ok
    assert report.duplicates == ()
    assert report.junction_violations == ()
    assert report.min_pairwise_hamming is not None and report.min_pairwise_hamming >= 1


def _tiny_cb(*seqs):
    entries = [Codeword(v, 0, s) for v, s in enumerate(seqs, start=1)]
    return Codebook(len(seqs), 1, entries, provenance="test")


def test_duplicate_sequences_reported():
    report = validate_codebook(_tiny_cb("ACGT", "ACGT"))
    assert not report.ok
    assert len(report.duplicates) == 1
    a, b = report.duplicates[0]
    assert (a.vertex, b.vertex) == (1, 2)


def test_junction_violation_reported_with_offset():
    report = validate_codebook(_tiny_cb("AAAA", "AAAT"))
    assert not report.ok
    hits = {
        (v.word.sequence, v.left.sequence, v.right.sequence, v.offset)
        for v in report.junction_violations
    }
    # AAAA straddles the AAAA|AAAT junction three bases in: ...A AAA|A...
    assert ("AAAA", "AAAA", "AAAT", 3) in hits
    # and every reported witness really is a misaligned occurrence
    for word, left, right, offset in hits:
        assert (left + right)[offset : offset + len(word)] == word
        assert offset not in (0, len(left))


def test_junction_report_is_exhaustive_not_first_hit():
    report = validate_codebook(_tiny_cb("AAAA", "AAAT"))
    # AAAA alone occurs misaligned inside AAAA+AAAA at offsets 1, 2, 3
    self_hits = [
        v.offset
        for v in report.junction_violations
        if v.word.sequence == "AAAA" and v.left.sequence == "AAAA" and v.right.sequence == "AAAA"
    ]
    assert self_hits == [1, 2, 3]


def test_min_hamming_only_among_equal_lengths():
    report = validate_codebook(_tiny_cb("ACGTA", "AGGTA", "ACGTACGT"))
    assert report.min_pairwise_hamming == 1
    assert validate_codebook(_tiny_cb("ACGT", "ACGTACGT")).min_pairwise_hamming is None


def test_codebook_construction_checks():
    with pytest.raises(CodecError, match="non-DNA"):
        _tiny_cb("ACGU")
    with pytest.raises(CodecError, match="empty"):
        _tiny_cb("")
    with pytest.raises(CodecError, match="needs 4"):
        Codebook(2, 2, [Codeword(1, 0, "ACGT")], provenance="test")
    with pytest.raises(CodecError, match="outside"):
        Codebook(1, 1, [Codeword(2, 0, "ACGT")], provenance="test")
    with pytest.raises(CodecError, match="two entries"):
        Codebook(1, 1, [Codeword(1, 0, "ACGT"), Codeword(1, 0, "AAAA")], provenance="test")


def test_generate_is_deterministic_and_valid():
    a = generate_codebook(5, 3, 20, 7)
    b = generate_codebook(5, 3, 20, 7)
    assert [cw.sequence for cw in a.codewords()] == [cw.sequence for cw in b.codewords()]
    assert dump_codebook(a) == dump_codebook(b)
    assert a.validation().ok


def test_generate_matches_requested_shape():
    cb = generate_codebook(12, 3, 20, 7)
    assert (cb.n, cb.k, cb.length) == (12, 3, 20)
    assert all(len(cw.sequence) == 20 for cw in cb.codewords())
    assert validate_codebook(cb).ok


def test_generate_empty_codebook():
    cb = generate_codebook(0, 3, 8, 1)
    assert cb.codewords() == []
    assert cb.validation().ok


def test_generate_rejects_bad_params():
    with pytest.raises(CodecError, match="at least 4"):
        generate_codebook(2, 2, 3, 0)
    with pytest.raises(CodecError, match="positive"):
        generate_codebook(2, 0, 8, 0)


def test_encode_assignment(table1):
    assert encode_assignment(table1, {}) == ()
    assert encode_assignment(table1, {1: 0}) == ((1, 0),)
    strand = encode_assignment(table1, {1: 0, 2: 1})
    assert strand == ((1, 0), (2, 1))
    assert render(strand, table1) == R1 + G2


def test_encode_rejects_gaps_and_bad_colors(table1):
    with pytest.raises(CodecError, match="exactly 1..i"):
        encode_assignment(table1, {2: 0})
    with pytest.raises(CodecError, match="no codeword"):
        encode_assignment(table1, {1: 3})


def test_render(table1):
    assert render((), table1) == ""
    assert render(((1, 1), (2, 0)), table1) == G1 + R2


def test_decode_inverts_render(table1):
    for strand in [(), ((1, 0),), ((1, 1), (2, 0)), ((3, 0), (5, 0), (9, 1))]:
        assert decode_strand(render(strand, table1), table1) == strand


def test_decode_errors(table1):
    with pytest.raises(DecodeError, match="position 0"):
        decode_strand("AAAA", table1)
    with pytest.raises(DecodeError, match="position 20"):
        decode_strand(R1 + "ACGT", table1)


def test_decode_refuses_unvalidated_codebook():
    bad = _tiny_cb("ACGT", "ACGT")
    with pytest.raises(SoundnessError):
        decode_strand("ACGT", bad)


def test_json_round_trip(tmp_path, table1):
    doc = codebook_to_json(table1)
    assert set(doc) == {"n", "k", "length", "provenance", "entries"}
    assert doc["length"] is None
    again = codebook_from_json(doc)
    assert codebook_to_json(again) == doc

    path = tmp_path / "cb.json"
    cb = generate_codebook(4, 2, 12, 3)
    save_codebook(cb, path)
    loaded = load_codebook(path)
    assert codebook_to_json(loaded) == codebook_to_json(cb)
    assert json.loads(path.read_text())["length"] == 12


def test_codebook_from_json_rejects_garbage():
    with pytest.raises(CodecError, match="missing fields"):
        codebook_from_json({"n": 1})
    with pytest.raises(CodecError):
        codebook_from_json([1, 2])


def test_strand_coloring_round_trip():
    strand = strand_from_coloring((2, 0, 1))
    assert strand == ((1, 2), (2, 0), (3, 1))
    assert coloring_from_strand(strand, 3) == (2, 0, 1)
    with pytest.raises(DecodeError, match="misses"):
        coloring_from_strand(((1, 0),), 2)
    with pytest.raises(DecodeError, match="twice"):
        coloring_from_strand(((1, 0), (1, 1)), 1)


@st.composite
def cb_and_strand(draw):
    seed = draw(st.integers(0, 4))
    cb = _GEN_CACHE[seed]
    vertices = draw(st.lists(st.integers(1, cb.n), unique=True, max_size=cb.n))
    strand = tuple((v, draw(st.integers(0, cb.k - 1))) for v in vertices)
    return cb, strand


_GEN_CACHE = {seed: generate_codebook(6, 3, 14, seed) for seed in range(5)}


@settings(max_examples=300, deadline=None)
@given(cb_and_strand())
def test_junction_soundness_on_generated_codebooks(pair):
    # a codeword's sequence occurs in the rendered strand iff its token is on it
    cb, strand = pair
    rendered = render(strand, cb)
    for cw in cb.codewords():
        assert ((cw.vertex, cw.color) in strand) == (cw.sequence in rendered)


@settings(max_examples=300, deadline=None)
@given(cb_and_strand())
def test_decode_render_round_trip_property(pair):
    cb, strand = pair
    assert decode_strand(render(strand, cb), cb) == strand


def test_junction_soundness_on_table1_samples(table1):
    rng = random.Random(99)
    for _ in range(200):
        vertices = rng.sample(range(1, 13), rng.randint(0, 8))
        strand = tuple((v, rng.randrange(3)) for v in vertices)
        rendered = render(strand, table1)
        for cw in table1.codewords():
            assert ((cw.vertex, cw.color) in strand) == (cw.sequence in rendered)
