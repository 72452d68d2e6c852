from __future__ import annotations

from fractions import Fraction

import pytest

from hyperdyn.graphs import build_graph


def F(text) -> Fraction:
    return Fraction(text)


@pytest.fixture
def arc():
    """Single unit interval: vertices v0 -- v1."""
    return build_graph([("e", "v0", "v1")])


@pytest.fixture
def star3():
    """Three unit arms glued at a center c."""
    return build_graph([("a1", "c", "l1"), ("a2", "c", "l2"), ("a3", "c", "l3")])


@pytest.fixture
def star4():
    return build_graph(
        [("a1", "c", "l1"), ("a2", "c", "l2"), ("a3", "c", "l3"), ("a4", "c", "l4")]
    )


@pytest.fixture
def circle():
    """One loop edge."""
    return build_graph([("loop", "w", "w")])
