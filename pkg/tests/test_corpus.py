import json

import pytest

from bmdl.corpus import (
    CorpusEntry,
    load_manifest,
    read_sequent_file,
    run_corpus,
    run_entry,
)
from bmdl.formula import Atom, Sequent
from bmdl.parser import ParseError

from conftest import CORPUS


def test_manifest_loads():
    entries = load_manifest(CORPUS)
    assert len(entries) >= 15
    kinds = {e.kind for e in entries}
    assert kinds == {"sequent", "assumption-set", "model", "derivation"}
    assert all(e.basis for e in entries)


def test_manifest_must_exist(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_manifest(tmp_path)


def test_unknown_kinds_are_rejected(tmp_path):
    (tmp_path / "manifest.json").write_text(
        json.dumps({"entries": [{"file": "x", "kind": "mystery"}]})
    )
    with pytest.raises(ValueError):
        load_manifest(tmp_path)


def test_read_sequent_file_skips_comments(tmp_path):
    f = tmp_path / "a.seq"
    f.write_text("# leading note\n\n  p |- q  # trailing note\n")
    assert read_sequent_file(f) == Sequent((Atom("p"),), (Atom("q"),))
    f.write_text("# nothing else\n")
    with pytest.raises(ParseError):
        read_sequent_file(f)


def test_whole_corpus_passes():
    report = run_corpus(CORPUS)
    assert report.total == len(load_manifest(CORPUS))
    failures = [(r.entry.file, r.detail) for r in report.results if not r.ok]
    assert not failures, failures
    assert report.passed == report.total
    data = report.to_json()
    assert data["total"] == report.total
    assert all(e["detail"] for e in data["entries"])


def test_wrong_expectation_is_reported():
    entry = CorpusEntry(file="s4_t.seq", kind="sequent", expect={"derivable": False})
    result = run_entry(CORPUS, entry, budget=100_000)
    assert not result.ok
    assert "expected" in result.detail


def test_missing_file_is_reported():
    entry = CorpusEntry(file="nope.seq", kind="sequent", expect={"derivable": True})
    result = run_entry(CORPUS, entry, budget=1000)
    assert not result.ok and result.detail == "file missing"


def test_budget_exhaustion_is_reported():
    entry = CorpusEntry(
        file="axiom1.seq", kind="sequent", expect={"derivable": True}
    )
    result = run_entry(CORPUS, entry, budget=3)
    assert not result.ok and "budget" in result.detail
