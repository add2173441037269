"""Engine vs. brute-force reference agreement."""

import itertools

import pytest

from ptrac import Lexicon, LexEntry, StudyConfig, StudyError, run_study
from ptrac.oracle import oracle_matrix
from randlex import make_case

COMBOS = list(
    itertools.product(
        ("clusters", "positions"),
        ("type-frequency", "unweighted"),
        ("unordered", "ordered"),
    )
)


def assert_matrices_equal(a, b, label=""):
    keys = set(a.cells) | set(b.cells)
    for k in keys:
        assert a.cell(*k).weighted == b.cell(*k).weighted, (label, k)
        assert a.cell(*k).pairs == b.cell(*k).pairs, (label, k)


def test_oracle_matches_on_fixture(fixture_lexicon, persian):
    for kind, weighting, orientation in COMBOS:
        cfg = StudyConfig(kind=kind, weighting=weighting, orientation=orientation)
        assert_matrices_equal(
            run_study(fixture_lexicon, persian, cfg).matrix,
            oracle_matrix(fixture_lexicon, persian, cfg),
            label=(kind, weighting, orientation),
        )


def test_oracle_fixture_voice_row(fixture_lexicon, persian):
    m = oracle_matrix(fixture_lexicon, persian, StudyConfig())
    by_frame = {"_l": 2, "_m": 1, "_r": 5, "_n": 1}
    got = {}
    for (frame, feat), cell in m.cells.items():
        if feat == "voice":
            got[frame] = got.get(frame, 0) + cell.weighted
    assert got == by_frame


def test_oracle_empty_lexicon(persian):
    m = oracle_matrix(Lexicon([], persian), persian, StudyConfig())
    assert not m.cells


def test_oracle_guard(persian, monkeypatch):
    monkeypatch.setattr("ptrac.oracle.GUARD", 1)
    lex = Lexicon(
        [LexEntry("band", tuple("band")), LexEntry("bard", tuple("bard"))], persian
    )
    with pytest.raises(StudyError, match="guard"):
        oracle_matrix(lex, persian, StudyConfig())


@pytest.mark.parametrize("seed", range(20))
def test_oracle_agreement_randomized(seed):
    inv, lex = make_case(seed)
    for kind, weighting, orientation in COMBOS:
        cfg = StudyConfig(kind=kind, weighting=weighting, orientation=orientation)
        assert_matrices_equal(
            run_study(lex, inv, cfg).matrix,
            oracle_matrix(lex, inv, cfg),
            label=(seed, kind, weighting, orientation),
        )
