from __future__ import annotations

from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jointcross import (
    ValidationError,
    canonical_fa_count,
    canonical_fa_witness,
    canonical_fplus_count,
    canonical_fplus_witness,
    validate_drawn_witness,
)
from jointcross.witness import expected_ladder_costs


@pytest.mark.parametrize("k,big_t", [(2, 10), (2, 1), (3, 4)])
def test_canonical_fa_witness_validates_to_closed_form(k: int, big_t: int) -> None:
    w = canonical_fa_witness(k, big_t)
    assert validate_drawn_witness(w) == canonical_fa_count(k, big_t)


@pytest.mark.parametrize("k,big_t", [(2, 10), (3, 4)])
def test_canonical_fplus_witness_validates_to_closed_form(k: int, big_t: int) -> None:
    w = canonical_fplus_witness(k, big_t)
    assert validate_drawn_witness(w) == canonical_fplus_count(k, big_t)


@given(st.integers(2, 5), st.integers(1, 12))
@settings(max_examples=20, deadline=None)
def test_ladder_cost_table_totals_the_count(k: int, big_t: int) -> None:
    """The per-edge cost table is an independent route to the same number:
    its total must be the closed-form single-copy count."""
    costs = expected_ladder_costs(k, big_t)
    assert sum(costs.values()) == canonical_fa_count(k, big_t)


def test_tampered_crossing_list_is_rejected() -> None:
    w = canonical_fa_witness(2, 10)
    victim = next(iter(w.crossings))
    bad = dict(w.crossings)
    bad[victim] = bad[victim][:-1]  # drop one declared crossing
    with pytest.raises(ValidationError):
        validate_drawn_witness(replace(w, crossings=bad))


def test_moved_vertex_is_rejected() -> None:
    w = canonical_fplus_witness(2, 10)
    victim = next(iter(w.layout2))
    bad = dict(w.layout2)
    x, y = bad[victim]
    bad[victim] = (x + 1, y + 900)  # drag a ladder vertex far off its track
    with pytest.raises(ValidationError):
        validate_drawn_witness(replace(w, layout2=bad))


def test_witness_cost_matches_validation() -> None:
    w = canonical_fa_witness(3, 5)
    assert w.cost() == validate_drawn_witness(w)
