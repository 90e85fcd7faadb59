import csv
import json

import pytest

from sfnets.harness import (
    CPDClass,
    ExperimentConfig,
    GEClass,
    Summary,
    SummaryTable,
    cell_seed,
    classify_cpd,
    classify_ge,
    emit_table1,
    load_config,
    replay_cell,
    run_experiment,
    run_replicates,
    summarize,
)

SMALL = dict(n=120, m_values=(1,), replicates=2, algorithms=("BA", "MB"))


def test_summarize_examples():
    s = summarize([1, 2, 3, 4, 5])
    assert (s.mean, s.median, s.q1, s.q3) == (3.0, 3.0, 2.0, 4.0)
    s = summarize([2, 2, 2, 2])
    assert s.q1 == s.median == s.q3 == 2.0
    s = summarize([1, 1, 3, 5])
    assert s.mean == 2.5 and s.median == 2.0
    s = summarize([None, 4.0, None])
    assert s.count == 1 and s.excluded == 2 and s.median == 4.0
    assert summarize([None, None]) == Summary(None, None, None, None, 0, 2)
    with pytest.raises(ValueError):
        summarize([])


@pytest.mark.parametrize("x, band", [
    (0.15, GEClass.HIGH), (0.08, GEClass.MEDIUM), (0.03, GEClass.LOW), (0.005, GEClass.VERY_LOW),
    (0.12, GEClass.MEDIUM), (0.05, GEClass.LOW), (0.01, GEClass.VERY_LOW), (1.0, GEClass.HIGH),
])
def test_classify_ge(x, band):
    assert classify_ge(x) is band


@pytest.mark.parametrize("x, band", [
    (0.75, CPDClass.VERY_HIGH), (0.5, CPDClass.HIGH), (0.3, CPDClass.MEDIUM),
    (0.15, CPDClass.LOW), (0.05, CPDClass.VERY_LOW), (0.7, CPDClass.HIGH), (0.0, CPDClass.VERY_LOW),
])
def test_classify_cpd(x, band):
    assert classify_cpd(x) is band


@pytest.mark.parametrize("bad", [-0.01, 1.5, None])
def test_classify_rejects_out_of_range(bad):
    with pytest.raises(ValueError):
        classify_ge(bad)
    with pytest.raises(ValueError):
        classify_cpd(bad)


def test_config_validation():
    with pytest.raises(ValueError, match="unknown algorithm"):
        ExperimentConfig(algorithms=("BA", "XX"))
    with pytest.raises(ValueError):
        ExperimentConfig(replicates=0)
    with pytest.raises(ValueError):
        ExperimentConfig(n=10, m_values=(10,))
    with pytest.raises(ValueError):
        ExperimentConfig(sequence_mode="other")
    cfg = ExperimentConfig(algorithms=("mb", "ba", "BA"), m_values=(2, 1))
    assert cfg.algorithms == ("BA", "MB") and cfg.m_values == (1, 2)


def test_cell_seeds_distinct_and_stable():
    seeds = {cell_seed(7, a, m, r) for a in ("BA", "MR", "MB") for m in (1, 2) for r in range(20)}
    assert len(seeds) == 120
    assert cell_seed(7, "mb", 1, 3) == cell_seed(7, "MB", 1, 3)


def test_small_run_rows_and_outputs(tmp_path):
    cfg = ExperimentConfig(**SMALL, output_dir=str(tmp_path))
    table = run_experiment(cfg)
    rows = list(csv.DictReader(open(tmp_path / "replicates.csv")))
    assert len(rows) == 4
    assert [(r["algorithm"], r["replicate"]) for r in rows] == [("BA", "0"), ("BA", "1"), ("MB", "0"), ("MB", "1")]
    for name in ("knn_long.csv", "generation.csv", "summary.csv", "table1.csv", "table1.txt"):
        assert (tmp_path / name).stat().st_size > 0
    meta = json.loads((tmp_path / "run_metadata.json").read_text())
    assert meta["config"]["replicates"] == 2
    assert table.cells[("BA", 1)]["components"].mean == 1.0


def test_same_base_network_within_replicate():
    cfg = ExperimentConfig(**SMALL)
    ba, mb = (run_replicates(cfg)[i] for i in (0, 2))
    # both cells of replicate 0 realize the same number of stubs at most
    assert mb.row["edges"] <= ba.row["edges"]


def test_workers_do_not_change_results(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run_experiment(ExperimentConfig(**SMALL, output_dir=str(a)))
    run_experiment(ExperimentConfig(**SMALL, workers=2, output_dir=str(b)))
    for name in ("replicates.csv", "knn_long.csv", "summary.csv", "table1.csv", "run_metadata.json"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_replay_matches_full_run():
    cfg = ExperimentConfig(**SMALL)
    full = run_replicates(cfg)
    assert replay_cell(cfg, "MB", 1, 1) == full[3].row


def test_emit_table1_shape_and_na():
    t = SummaryTable()
    t.cells[("BA", 1)] = {
        "components": summarize([1, 1]),
        "giant_pct": summarize([100.0, 100.0]),
        "ge": summarize([0.2, 0.3]),
        "cpd": summarize([None]),
    }
    csv_text, txt = emit_table1(t, cells=[("BA", 1), ("MB", 1)])
    lines = csv_text.splitlines()
    assert lines[0] == "measure,BA m=1,MB m=1"
    assert lines[1] == "No. components,1.00,NA"
    assert lines[2] == "GC size (%),100.00,NA"
    assert lines[3] == "Efficiency (GE),High,NA"
    assert lines[4] == "Dependence (CPD),NA,NA"
    assert len(txt.splitlines()) == 5


def test_load_config(tmp_path):
    p = tmp_path / "run.cfg"
    p.write_text("# comment\nn = 200\nm_values = 1,2\nreplicates = 3\nseed = 9\nalgorithms = BA, MR\nmode = resample\n")
    cfg = load_config(p, replicates=4)
    assert (cfg.n, cfg.m_values, cfg.replicates, cfg.master_seed) == (200, (1, 2), 4, 9)
    assert cfg.algorithms == ("BA", "MR") and cfg.sequence_mode == "resample"
    p.write_text("bogus = 1\n")
    with pytest.raises(ValueError, match="unknown config key"):
        load_config(p)
    p.write_text("n = ten\n")
    with pytest.raises(ValueError, match="bad value"):
        load_config(p)


def test_resample_mode_runs():
    cfg = ExperimentConfig(n=100, m_values=(2,), replicates=1, algorithms=("MR",), sequence_mode="resample")
    (cell,) = run_replicates(cfg)
    assert cell.row["n"] == 100
