"""Snapshot persistence: byte-stable round trips and corruption detection."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from hazkg.graph import (
    CorruptSnapshot,
    IoFailure,
    PropertyGraph,
    load_snapshot,
    natural_view,
    save_snapshot,
)
from tests.gengraph import random_graph


def test_round_trip_small_graph(tmp_path):
    g = PropertyGraph()
    s = g.add_node("Substance", {"key": "CAS:107-02-8", "name": "Acrylaldehyde", "source": "REACH"})
    o = g.add_node("Organ", {"Organ": "heart"})
    g.add_edge(s.id, o.id, "target_organ", {"min_exposure": "5"})
    path = tmp_path / "g.snap"
    checksum = save_snapshot(g, path)
    loaded, loaded_checksum = load_snapshot(path)
    assert loaded_checksum == checksum
    assert natural_view(loaded) == natural_view(g)
    assert loaded.stats() == g.stats()


def test_round_trip_empty_graph(tmp_path):
    path = tmp_path / "empty.snap"
    save_snapshot(PropertyGraph(), path)
    loaded, _ = load_snapshot(path)
    assert sum(loaded.stats()["nodes"].values()) == 0


def test_save_is_byte_stable(tmp_path):
    g = random_graph(random.Random(7), max_nodes=30)
    p1, p2 = tmp_path / "a.snap", tmp_path / "b.snap"
    save_snapshot(g, p1)
    save_snapshot(g, p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_truncated_file_detected(tmp_path):
    g = random_graph(random.Random(3), max_nodes=30)
    path = tmp_path / "g.snap"
    save_snapshot(g, path)
    data = path.read_bytes()
    path.write_bytes(data[: max(len(data) - 9, 10)])
    with pytest.raises(CorruptSnapshot):
        load_snapshot(path)


def test_edited_byte_detected(tmp_path):
    g = random_graph(random.Random(4), max_nodes=30)
    path = tmp_path / "g.snap"
    save_snapshot(g, path)
    data = bytearray(path.read_bytes())
    data[-2] ^= 0x01
    path.write_bytes(bytes(data))
    with pytest.raises(CorruptSnapshot):
        load_snapshot(path)


def test_garbage_header_detected(tmp_path):
    path = tmp_path / "g.snap"
    path.write_text("not a snapshot\n")
    with pytest.raises(CorruptSnapshot):
        load_snapshot(path)


def test_missing_file_is_io_failure(tmp_path):
    with pytest.raises(IoFailure):
        load_snapshot(tmp_path / "absent.snap")


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_round_trip_isomorphism_property(tmp_path_factory, seed):
    g = random_graph(random.Random(seed), max_nodes=60)
    path = tmp_path_factory.mktemp("snap") / "g.snap"
    save_snapshot(g, path)
    loaded, _ = load_snapshot(path)
    assert natural_view(loaded) == natural_view(g)


def test_unicode_properties_survive(tmp_path):
    g = PropertyGraph()
    g.add_node("Organ", {"Organ": "œil   ligne", "note": "tab\tnewline\nquote\"'"})
    path = tmp_path / "u.snap"
    save_snapshot(g, path)
    loaded, _ = load_snapshot(path)
    assert natural_view(loaded) == natural_view(g)
