from __future__ import annotations

import io

import pytest

from alphaforest.enumeration import (KNOWN_COUNTS, enumerate_nonisomorphic, native_stream,
                                     read_graph6_stream, write_graph6)
from alphaforest.errors import CapacityError, Graph6Error, ParameterError
from alphaforest.forests import contains, make_spec
from alphaforest.graph import all_labeled_graphs, canonical_form, encode_graph6, make_path


def _dedup_count(n: int) -> int:
    return len({canonical_form(g) for g in all_labeled_graphs(n)})


@pytest.mark.parametrize("n", range(0, 6))
def test_counts_against_dedup_oracle(n):
    assert len(enumerate_nonisomorphic(n)) == _dedup_count(n)


@pytest.mark.parametrize("n", [6, 7])
def test_regression_counts(n):
    graphs = enumerate_nonisomorphic(n)
    assert len(graphs) == KNOWN_COUNTS[n]
    forms = [canonical_form(g) for g in graphs]
    assert forms == sorted(set(forms))


@pytest.mark.slow
def test_regression_count_eight():
    assert len(enumerate_nonisomorphic(8)) == 12346


def test_examples():
    assert len(enumerate_nonisomorphic(3)) == 4
    assert len(enumerate_nonisomorphic(4)) == 11


def test_emitted_graphs_are_canonical_and_valid():
    for g in enumerate_nonisomorphic(6):
        assert encode_graph6(g).encode() == canonical_form(g)
        for v in range(g.n):
            for u in g.neighbors(v):
                assert g.has_edge(u, v) and u != v


def test_filtered_generation_matches_filtering():
    spec = make_spec([3, 3])
    full = [g for g in enumerate_nonisomorphic(7) if not contains(g, spec)]
    pruned = enumerate_nonisomorphic(7, keep=lambda g: not contains(g, spec))
    assert [canonical_form(g) for g in pruned] == [canonical_form(g) for g in full]


def test_caps():
    with pytest.raises(CapacityError, match="graph6 stream"):
        enumerate_nonisomorphic(9)
    with pytest.raises(CapacityError):
        enumerate_nonisomorphic(11, keep=lambda g: True)
    with pytest.raises(ParameterError):
        enumerate_nonisomorphic(-1)


def test_native_stream_counts():
    stream = native_stream(4)
    assert stream.count_emitted == 0
    assert len(list(stream)) == 11
    assert stream.count_emitted == 11


def test_read_three_valid_lines(tmp_path):
    path = tmp_path / "three.g6"
    path.write_text("D?{\nA_\nC~\n")
    stream = read_graph6_stream(path)
    graphs = list(stream)
    assert [g.n for g in graphs] == [5, 2, 4]
    assert stream.count_emitted == 3 and not stream.diagnostics


def test_read_lenient_malformed_line():
    stream = read_graph6_stream(io.StringIO("D?{\nD?{zz\nC~\n"))
    graphs = list(stream)
    assert len(graphs) == 2
    assert len(stream.diagnostics) == 1
    assert stream.diagnostics[0].line == 2


def test_read_strict_raises():
    stream = read_graph6_stream(["D?{\n", "bad line\n"], strict=True)
    with pytest.raises(Graph6Error, match="line 2"):
        list(stream)


def test_read_empty(tmp_path):
    path = tmp_path / "empty.g6"
    path.write_text("")
    assert list(read_graph6_stream(path)) == []


def test_write_then_read_roundtrip():
    buf = io.StringIO()
    graphs = enumerate_nonisomorphic(5)
    assert write_graph6(graphs, buf) == 34
    back = list(read_graph6_stream(io.StringIO(buf.getvalue())))
    assert back == graphs
    assert read_graph6_stream([encode_graph6(make_path(3))]).source == "<lines>"
