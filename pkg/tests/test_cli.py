from __future__ import annotations

import json

import pytest

from dihedral_cm import cache as cache_mod
from dihedral_cm import spectrum
from dihedral_cm.cache import CacheEntry, CentralCache, convention_hash
from dihedral_cm.cli import RunReport, main, run
from dihedral_cm.spectrum import central_generators, set_generator_store


def _json(capsys, argv):
    code = main(["--format", "json", *argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_success_exit_code(capsys, tmp_path):
    code, data = _json(capsys, ["--cache-dir", str(tmp_path), "invariants", "--d", "5"])
    assert code == 0
    assert data["command"] == "invariants"
    assert all(c["status"] == "pass" for c in data["checks"])


def test_failed_check_gives_exit_one(capsys, tmp_path):
    # the reference count of B2 relations disagrees with the derived presentation
    code, data = _json(capsys, ["--cache-dir", str(tmp_path), "centre", "--d", "4", "verify"])
    assert code == 1
    assert any(c["status"] == "fail" for c in data["checks"])


@pytest.mark.parametrize("argv", [
    ["families", "--d", "5", "--a", "1", "--b", "2"],
    ["families", "--d", "4", "--symbolic"],
    ["centre", "--d", "4", "bogus"],
    ["lie", "--d", "3", "--a", "1", "--b", "1"],
    ["families", "--d", "4", "--a", "x", "--b", "1"],
])
def test_usage_errors_exit_two(argv, tmp_path, capsys):
    _, code, _ = run(["--no-cache", *argv])
    capsys.readouterr()
    assert code == 2


def test_report_json_round_trip(capsys, tmp_path):
    code, data = _json(capsys, ["--no-cache", "cellular", "--d", "4", "--a", "1", "--b", "0"])
    assert code == 0
    report = RunReport.from_json(data)
    assert report.to_json() == data
    assert "chi_1" in " ".join(data["result"]["cellular characters"])


def test_output_is_deterministic(capsys):
    argv = ["--no-cache", "families", "--d", "6", "--a", "2", "--b", "1"]
    _, first = _json(capsys, argv)
    _, second = _json(capsys, argv)
    first.pop("timing"), second.pop("timing")
    assert first == second


def test_symbolic_regime_uses_representative(capsys):
    code, data = _json(capsys, ["--no-cache", "cuspidal", "--d", "4", "--symbolic", "--regime", "equal"])
    assert code == 0
    assert data["result"]["cuspidal families"]


def test_text_output(capsys):
    code = main(["--no-cache", "lie", "--d", "4", "--a", "1", "--b", "1", "verify-aleph"])
    out = capsys.readouterr().out
    assert code == 0 and "morphism" in out and "PASS" in out.upper()


def test_fixtures_dump(capsys):
    code, data = _json(capsys, ["--no-cache", "fixtures", "dump"])
    assert code == 0
    rel = data["result"]["presentations"]["3"][0]
    assert set(rel) == {"vars", "terms"}
    assert all(len(e) == len(rel["vars"]) for e, _ in rel["terms"])


def _forget_in_process_results():
    for fn in vars(spectrum).values():
        if hasattr(fn, "cache_clear"):
            fn.cache_clear()


def test_cache_warm_equals_cold(capsys, tmp_path):
    _forget_in_process_results()
    argv = ["--cache-dir", str(tmp_path), "--format", "json", "centre", "--d", "3", "derive"]
    main(argv)
    cold = json.loads(capsys.readouterr().out)
    files = sorted(p.name for p in tmp_path.glob("d3_*.json"))
    assert files and all(convention_hash() in f for f in files)
    stamps = {p.name: p.stat().st_mtime_ns for p in tmp_path.glob("d3_*.json")}
    _forget_in_process_results()
    main(argv)
    warm = json.loads(capsys.readouterr().out)
    cold.pop("timing"), warm.pop("timing")
    assert cold == warm
    assert stamps == {p.name: p.stat().st_mtime_ns for p in tmp_path.glob("d3_*.json")}
    _forget_in_process_results()
    main(["--no-cache", "--format", "json", "centre", "--d", "3", "derive"])
    fresh = json.loads(capsys.readouterr().out)
    fresh.pop("timing")
    assert fresh == cold


def test_cache_inspect_and_clear(capsys, tmp_path):
    store = CentralCache(tmp_path)
    set_generator_store(store)
    central_generators(3)
    set_generator_store(None)
    code, data = _json(capsys, ["--cache-dir", str(tmp_path), "cache", "inspect"])
    assert code == 0 and data["result"]["entries"]
    assert all(e["status"] == "ok" for e in data["result"]["entries"])
    code, data = _json(capsys, ["--cache-dir", str(tmp_path), "cache", "clear"])
    assert data["result"]["removed"] > 0
    assert not list(tmp_path.glob("d*_*.json"))


def test_cached_lift_matches_fresh(tmp_path):
    fresh = central_generators(4).a[1]
    store = CentralCache(tmp_path)
    set_generator_store(store)
    first = central_generators(4).a[1]
    set_generator_store(store)
    second = central_generators(4).a[1]
    assert store.hits >= 1
    assert first.to_json() == fresh.to_json() == second.to_json()


def test_convention_change_invalidates(tmp_path, monkeypatch):
    store = CentralCache(tmp_path)
    set_generator_store(store)
    central_generators(3)
    set_generator_store(None)
    old = convention_hash()
    monkeypatch.setitem(cache_mod.CONVENTION, "t_sign", "-1")
    assert convention_hash() != old
    assert store.get(3, "a1") is None
    # an entry whose recorded convention is stale is rejected even under the current file name
    monkeypatch.setitem(cache_mod.CONVENTION, "t_sign", "+1")
    path = next(tmp_path.glob("d3_a1_*.json"))
    data = json.loads(path.read_text())
    data["key"]["convention"] = "0" * 16
    path.write_text(json.dumps(data))
    assert store.get(3, "a1") is None
    assert not path.exists()


def test_corrupted_entry_is_rejected(tmp_path):
    store = CentralCache(tmp_path)
    set_generator_store(store)
    central_generators(3)
    set_generator_store(None)
    path = next(tmp_path.glob("d3_a1_*.json"))
    entry = CacheEntry.from_json(json.loads(path.read_text()))
    entry.value["terms"] = entry.value["terms"][1:]
    path.write_text(json.dumps(entry.to_json()))
    assert store.get(3, "a1") is None
