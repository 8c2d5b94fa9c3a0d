from fractions import Fraction

import pytest

from doamachine.errors import SearchSpaceTooLarge
from doamachine.geometry import pair_distances
from doamachine.identify import (
    LayoutSearcher,
    Verdict,
    check_identifiability,
    has_unwrapped_pair,
    search_identifiable_layouts,
)


def _positions(results):
    return [layout.positions for layout, _ in results]


def test_search_two_sensors_keeps_short_layouts():
    results = search_identifiable_layouts(2, 1, "0.5", max_results=10)
    assert _positions(results) == [(0, 1), (0, Fraction(1, 2))]
    assert [aperture for _, aperture in results] == [1, Fraction(1, 2)]


def test_search_finds_example_b():
    results = search_identifiable_layouts(3, "8.1", "0.9", max_results=None)
    assert (0, Fraction(18, 5), Fraction(81, 10)) in _positions(results)
    assert results[0][1] == Fraction(81, 10)


def test_search_first_result_is_widest_then_lexicographic():
    (layout, aperture), = search_identifiable_layouts(3, "8.1", "0.9", max_results=1)
    assert aperture == Fraction(81, 10)
    assert layout.positions == (0, Fraction(9, 10), Fraction(81, 10))


def test_search_excludes_example_a():
    results = search_identifiable_layouts(3, 6, "1.2", max_results=None)
    assert (0, Fraction(6, 5), 6) not in _positions(results)


def test_search_results_are_never_ambiguous():
    for layout, _ in search_identifiable_layouts(3, 6, "0.6", max_results=None):
        assert check_identifiability(layout).verdict is not Verdict.UNIDENTIFIABLE


def test_search_require_wrapping():
    results = search_identifiable_layouts(3, 6, "0.6", max_results=None, require_wrapping=True)
    assert results
    for layout, _ in results:
        assert min(b - a for a, b in zip(layout.positions, layout.positions[1:])) > 1


def test_search_require_wrapping_matches_predicate():
    everything = search_identifiable_layouts(3, 6, "0.6", max_results=None)
    wrapping = search_identifiable_layouts(3, 6, "0.6", max_results=None, require_wrapping=True)
    expected = [layout.positions for layout, _ in everything if not has_unwrapped_pair(pair_distances(layout))]
    assert _positions(wrapping) == expected
    assert len(expected) < len(everything)


def test_search_sorted_by_descending_aperture():
    apertures = [aperture for _, aperture in search_identifiable_layouts(3, 6, "0.6", max_results=None)]
    assert apertures == sorted(apertures, reverse=True)


def test_search_is_deterministic_across_workers():
    serial = search_identifiable_layouts(3, "7.2", "0.6", max_results=None, n_jobs=1)
    parallel = search_identifiable_layouts(3, "7.2", "0.6", max_results=None, n_jobs=2)
    assert _positions(serial) == _positions(parallel)


def test_score_summary():
    searcher = LayoutSearcher(3, "8.1", "0.9")
    searcher.fit(max_results=3)
    summary = searcher.score_summary()
    assert list(summary.columns) == ["positions", "aperture", "verdict"]
    assert len(summary) == 3
    assert set(summary["aperture"]) == {"81/10"}


def test_search_guards():
    with pytest.raises(SearchSpaceTooLarge):
        LayoutSearcher(3, 100, "1/1000")
    with pytest.raises(SearchSpaceTooLarge):
        LayoutSearcher(5, 100, 1)
    with pytest.raises(ValueError):
        LayoutSearcher(1, 10, 1)
