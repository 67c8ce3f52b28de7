import subprocess
import sys

import pytest

from reconkit import (
    Graph,
    canonical_form,
    complete,
    disjoint_union,
    graph_union,
    path,
    star,
)
from reconkit.store import (
    ResultRecord,
    format_record,
    parse_record,
    parse_filter,
    store_append,
    store_scan,
)
from reconkit.sweep import (
    CLAIMS,
    evaluate_graph,
    pair_certifies,
    identifying_cards,
    sweep_caterpillars,
    sweep_disconnected,
    sweep_trees,
)
from reconkit.caterpillar import CaterpillarSeq


def rec_for(g):
    return evaluate_graph(g)


# --- store -------------------------------------------------------------------

def test_record_round_trip(tmp_path):
    rec = rec_for(disjoint_union(2, path(3)))
    assert parse_record(format_record(rec)) == rec
    store = tmp_path / "s.txt"
    store_append(store, rec)
    records, stats = store_scan(store)
    assert records == [rec]
    assert stats == {"corrupt": 0, "duplicates": 0}


def test_store_duplicates_and_corruption(tmp_path):
    store = tmp_path / "s.txt"
    rec = rec_for(path(4))
    store_append(store, rec)
    store_append(store, rec)
    with open(store, "a") as fh:
        fh.write("not a record\n")
    records, stats = store_scan(store)
    assert len(records) == 1
    assert stats["duplicates"] == 1 and stats["corrupt"] == 1
    assert sum(1 for _ in open(store)) == 3  # appends never rewrite


def test_store_filter(tmp_path):
    store = tmp_path / "s.txt"
    for g in (
        disjoint_union(2, complete(3)),
        disjoint_union(2, star(3)),
        disjoint_union(2, path(3)),
        graph_union(star(3), complete(3)),
    ):
        store_append(store, rec_for(g))
    records, _ = store_scan(store, "dern>=3")
    got = {r.g6 for r in records}
    want = {
        canonical_form(disjoint_union(2, star(3))).canon,
        canonical_form(disjoint_union(2, path(3))).canon,
    }
    assert got == want
    with pytest.raises(ValueError):
        parse_filter("bogus ~ 3")


def test_indeterminate_round_trips(tmp_path):
    rec = rec_for(star(3))
    assert rec.dern is None and rec.ern is None
    assert parse_record(format_record(rec)) == rec
    records, _ = store_scan_write(tmp_path, rec)
    assert records[0].dern is None


def store_scan_write(tmp_path, rec):
    store = tmp_path / "i.txt"
    store_append(store, rec)
    return store_scan(store)


# --- sweeps ------------------------------------------------------------------

def test_tree_sweep_counts_and_claim(tmp_path):
    store = tmp_path / "trees.txt"
    report = sweep_trees(9, "dern-le-2", str(store))
    assert len(report.records) == 47
    assert report.violations == [] and not report.failed


def test_census_claim_lists_expected_trees(tmp_path):
    report = sweep_trees(9, "ern-eq-3-census", None)
    hits = {r.g6 for r in report.violations}
    assert canonical_form(path(9)).canon in hits
    from reconkit import caterpillar_graph

    assert canonical_form(caterpillar_graph([2, 0, 0, 0, 2])).canon in hits
    assert len(hits) == 2
    assert not report.failed  # census claims never fail a sweep


def test_sweep_detects_violations(tmp_path):
    # trees on 4 vertices include the star whose full da-edeck is blocked
    report = sweep_trees(4, "dern-le-2", None)
    assert report.failed
    assert [r.g6 for r in report.violations] == [canonical_form(star(3)).canon]


def test_sweep_resume_matches_uninterrupted(tmp_path):
    full = tmp_path / "full.txt"
    part = tmp_path / "part.txt"
    sweep_trees(8, "dern-le-2", str(full))
    sweep_trees(8, "dern-le-2", str(part), limit=10)  # interrupted run
    resumed = sweep_trees(8, "dern-le-2", str(part))
    assert resumed.resumed == 10 and resumed.computed == 13
    full_records, _ = store_scan(full)
    part_records, _ = store_scan(part)
    strip = lambda recs: [(r.g6, r.ern, r.dern, r.witness) for r in recs]
    assert strip(full_records) == strip(part_records)


def test_sweep_deterministic():
    a = sweep_trees(7, "dern-le-2", None)
    b = sweep_trees(7, "dern-le-2", None)
    assert [r.g6 for r in a.records] == [r.g6 for r in b.records]
    assert [r.witness for r in a.records] == [r.witness for r in b.records]


def test_disconnected_sweep_star_conjecture():
    report = sweep_disconnected(2, 4, "conj-2.1", None)
    assert not report.failed
    # every union here with ern > 3 (or blocked outright) is a union of
    # stars: 2K_2, 2K_{1,2}, 2K_{1,3}
    big = {r.g6 for r in report.records if r.ern is None or r.ern > 3}
    want = {
        canonical_form(disjoint_union(2, Graph.from_edges(2, [(0, 1)]))).canon,
        canonical_form(disjoint_union(2, path(3))).canon,
        canonical_form(disjoint_union(2, star(3))).canon,
    }
    assert big == want


def test_disconnected_sweep_uniform_cards_conjecture():
    report = sweep_disconnected(2, 4, "conj-4.1", None)
    assert not report.failed


def test_caterpillar_sweep_certification():
    report = sweep_caterpillars(7, "dern-le-2", None)
    assert not report.failed
    from reconkit import caterpillar_graph, identifying_pair

    s = CaterpillarSeq((3, 3))
    cards = identifying_cards(s, identifying_pair(s))
    assert pair_certifies(caterpillar_graph(s), cards)
    # two leaf-deletion cards do not always pin the caterpillar down among
    # all graphs: for <2,0,2> a 5-cycle with a pendant leaf (plus isolate)
    # carries both copies of the pair's da-ecard
    s = CaterpillarSeq((2, 0, 2))
    cards = identifying_cards(s, identifying_pair(s))
    assert not pair_certifies(caterpillar_graph(s), cards)


def test_claims_registry():
    assert set(CLAIMS) == {"dern-le-2", "ern-eq-3-census", "conj-2.1", "conj-4.1"}


# --- CLI ----------------------------------------------------------------------

def run_cli(args, env_store=None):
    import os

    env = dict(os.environ)
    if env_store:
        env["RECONKIT_STORE"] = str(env_store)
    return subprocess.run(
        [sys.executable, "-m", "reconkit.cli", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def test_cli_deck_and_recon():
    out = run_cli(["deck", "U:2*S:3", "--da"])
    assert out.returncode == 0
    line = out.stdout.strip().splitlines()[0].split()
    assert line[0] == "6" and line[1] == "2"
    out = run_cli(["deck", "P:4"])
    assert len(out.stdout.strip().splitlines()) == 2
    out = run_cli(["recon", "U:2*S:3", "--which=dern"])
    assert "dern = 4" in out.stdout
    out = run_cli(["recon", "U:2*P:3", "--which=dern"])
    assert "dern = 3" in out.stdout
    out = run_cli(["recon", "spider:2,2,2", "--which=dern"])
    assert "dern = 2" in out.stdout
    out = run_cli(["adv", "K:4", "--da"])
    assert "adv-dern = 1" in out.stdout


def test_cli_caterpillar():
    out = run_cli(["caterpillar", "reconstruct", "3,4,2,7,7,2,4,3", "3,4,1,7,7,3,4,3"])
    assert out.stdout.strip().splitlines() == ["3,4,2,7,7,3,4,3"]
    out = run_cli(["caterpillar", "pair", "2,7,3,5,3,6,2"])
    assert "positions: 2,6" in out.stdout


def test_cli_sweep_exit_codes(tmp_path):
    out = run_cli(
        ["sweep", "--trees", "9", "--claim", "dern-le-2", "--no-store"],
    )
    assert out.returncode == 0 and "violations: 0" in out.stdout
    out = run_cli(["sweep", "--trees", "4", "--claim", "dern-le-2", "--no-store"])
    assert out.returncode == 2  # violation found
    out = run_cli(["sweep", "--trees", "11", "--claim", "dern-le-2", "--no-store"])
    assert out.returncode == 1  # cap exceeded without --force


def test_cli_store_roundtrip(tmp_path):
    store = tmp_path / "store.txt"
    out = run_cli(
        ["sweep", "--trees", "6", "--claim", "dern-le-2"], env_store=store
    )
    assert out.returncode == 0
    out = run_cli(["store", "scan"], env_store=store)
    assert len(out.stdout.strip().splitlines()) == 6
    out = run_cli(["store", "scan", "--filter", "dern>=2"], env_store=store)
    for line in out.stdout.strip().splitlines():
        assert int(line.split("\t")[4]) >= 2


def test_cli_family_and_errors():
    out = run_cli(["family", "gen", "cat:2,0,2"])
    assert out.returncode == 0 and out.stdout.strip()
    out = run_cli(["family", "list", "trees", "7"])
    assert len(out.stdout.strip().splitlines()) == 11
    out = run_cli(["family", "list", "graphs", "5", "--edges", "4"])
    assert len(out.stdout.strip().splitlines()) == 6
    out = run_cli(["deck", "not-a-graph"])
    assert out.returncode == 1
    out = run_cli(["nope"])
    assert out.returncode == 1
