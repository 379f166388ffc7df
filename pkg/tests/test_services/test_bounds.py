"""Tests the functionality of the symtc.services.bounds module."""

import pytest

from symtc.services.bounds import first_refuting_grade
from symtc.services.bounds import upper_bound_sigma
from symtc.types.enums import ConnectivityVerdict
from symtc.types.report import ACYCLIC_CAVEAT
from symtc.types.report import CONNECTIVITY_CAVEAT
from symtc.types.report import TC_S_CAVEAT
from symtc.utils.errors import ConnectivityRefutedError
from symtc.utils.errors import DisconnectedInputError
from tests.testutils import sset_of


@pytest.mark.parametrize("n", range(1, 11))
def test_upper_bound_for_spheres(n):
    """Test that an (n-1)-connected space of dimension n has upper bound 2."""
    assert upper_bound_sigma(n, n - 1) == 2


@pytest.mark.parametrize("m", range(1, 6))
def test_upper_bound_for_simply_connected(m):
    """Test that a simply connected space of dimension 2m has upper bound 2m."""
    assert upper_bound_sigma(2 * m, 1) == 2 * m


@pytest.mark.parametrize("dim, s, expected", [(0, 0, 0), (1, 0, 2), (2, 0, 4), (3, 1, 3), (4, 5, 1)])
def test_upper_bound_values(dim, s, expected):
    """Test that the upper bound is the largest integer strictly below (2·dim + 1) / (s + 1)."""
    assert upper_bound_sigma(dim, s) == expected
    assert expected < (2 * dim + 1) / (s + 1) <= expected + 1


def test_upper_bound_is_monotone():
    """Test that the upper bound never increases with the connectivity and never decreases with the dimension."""
    for dim in range(13):
        for s in range(13):
            assert upper_bound_sigma(dim, s + 1) <= upper_bound_sigma(dim, s)
            assert upper_bound_sigma(dim + 1, s) >= upper_bound_sigma(dim, s)


@pytest.mark.parametrize("dim, s", [(-1, 0), (2, -1)])
def test_upper_bound_rejects_negative(dim, s):
    """Test that negative arguments are rejected."""
    with pytest.raises(ValueError):
        upper_bound_sigma(dim, s)


@pytest.mark.parametrize(
    "betti, s, expected",
    [((1, 2, 1), 0, None), ((1, 2, 1), 1, (1, 2)), ((2,), 0, (0, 1)), ((1, 0, 1), 1, None), ((1, 0, 1), 2, (2, 1))],
)
def test_first_refuting_grade(betti, s, expected):
    """Test that the first grade with a nonzero reduced Betti number is found."""
    assert first_refuting_grade(betti, s) == expected


@pytest.mark.parametrize(
    "kind, n, tc, kernel, relative",
    [
        ("point", None, 0, 0, 0),
        ("sphere", 1, 1, 1, 2),
        ("sphere", 2, 1, 2, 2),
        ("sphere", 3, 1, 2, 2),
        ("rp2", None, 3, 4, 4),
    ],
)
def test_lower_bounds(engine, kind, n, tc, kernel, relative):
    """Test the three lower bounds on small inputs."""
    x = sset_of(kind, n)
    assert engine.lower_bound_tc(x) == tc
    assert engine.lower_bound_sigma_kernel(x) == kernel
    assert engine.lower_bound_sigma_relative(x) == relative
    assert engine.lower_bound_sigma_kernel(x) <= engine.lower_bound_sigma_relative(x)


def test_lower_bound_tc_surfaces(engine, torus, rp2):
    """Test the zero-divisor cup-length of the torus and the projective plane."""
    assert engine.lower_bound_tc(torus) == 2
    assert engine.lower_bound_tc(rp2) == 3


@pytest.mark.parametrize("method", ["lower_bound_tc", "lower_bound_sigma_kernel", "lower_bound_sigma_relative"])
def test_lower_bounds_require_connected_input(engine, method):
    """Test that every lower bound rejects a disconnected input."""
    with pytest.raises(DisconnectedInputError) as ex_info:
        getattr(engine, method)(sset_of("sphere", 0))
    assert ex_info.value.method == method


@pytest.mark.parametrize(
    "kind, n, s, verdict",
    [
        ("sphere", 2, 1, ConnectivityVerdict.CONSISTENT),
        ("torus", None, 1, ConnectivityVerdict.REFUTED),
        ("torus", None, 0, ConnectivityVerdict.CONSISTENT),
        ("rp2", None, 1, ConnectivityVerdict.REFUTED),
        ("sphere", 0, 0, ConnectivityVerdict.REFUTED),
    ],
)
def test_connectivity_check(engine, kind, n, s, verdict):
    """Test the homological guard on the declared connectivity."""
    assert engine.connectivity_check(sset_of(kind, n), s) == verdict


@pytest.mark.parametrize("kind, n, s", [("sphere", 1, 0), ("sphere", 2, 1), ("sphere", 3, 2)])
def test_sphere_bounds(engine, kind, n, s):
    """Test that spheres are certified to have TC^Σ = 2."""
    # First, compute the report
    report = engine.bounds_report(sset_of(kind, n), s)

    # Next, verify the interval and the connectivity record
    assert report.interval == (2, 2)
    assert report.bounds.sigma_upper == 2
    assert report.connectivity.s == s
    assert report.connectivity.declared
    assert report.connectivity.verdict == ConnectivityVerdict.CONSISTENT

    # Finally, verify the caveats
    assert CONNECTIVITY_CAVEAT in report.caveats
    assert TC_S_CAVEAT in report.caveats
    assert ACYCLIC_CAVEAT not in report.caveats
    assert any(caveat.startswith("s = ") for caveat in report.caveats) == (s >= 1)


def test_circle_is_certified_by_relative_bound(engine, circle):
    """Test that the circle needs the relative bound: the other two lower bounds only reach 1."""
    report = engine.bounds_report(circle)
    assert report.bounds.tc_lower == 1
    assert report.bounds.sigma_kernel_lower == 1
    assert report.bounds.sigma_relative_lower == 2
    assert report.betti["SP2,dX"] == [0, 1, 1]
    assert len(report.provenance) == 4


def test_even_sphere_is_certified_by_kernel_bound(engine, sphere2):
    """Test that the 2-sphere is certified by the kernel bound although its zero-divisor cup-length is 1."""
    report = engine.bounds_report(sphere2, 1)
    assert report.bounds.tc_lower == 1
    assert report.bounds.sigma_kernel_lower == 2
    assert report.interval == (2, 2)


def test_three_sphere_is_certified_by_kernel_bound(engine, sphere3):
    """Test that the 3-sphere reaches the upper bound through the kernel bound."""
    report = engine.bounds_report(sphere3, 2)
    assert report.bounds.tc_lower == 1
    assert report.bounds.sigma_kernel_lower == 2
    assert report.bounds.sigma_relative_lower == 2
    assert report.bounds.sigma_upper == 2
    assert report.interval == (2, 2)


def test_torus_bounds(engine, torus):
    """Test the bounds of the torus with the default connectivity."""
    report = engine.bounds_report(torus, 0, declared=False)
    assert report.bounds.tc_lower == 2
    assert report.bounds.sigma_upper == 4
    assert 2 <= report.interval[0] <= report.interval[1] == 4
    assert not report.connectivity.declared


def test_torus_connectivity_refuted(engine, torus):
    """Test that declaring the torus simply connected is refuted before any bound is computed."""
    with pytest.raises(ConnectivityRefutedError) as ex_info:
        engine.bounds_report(torus, 1)
    assert ex_info.value.grade == 1
    assert ex_info.value.betti == 2
    assert ex_info.value.connectivity == 1


def test_point_bounds(engine, point):
    """Test that a point gets a zero-width interval and the acyclic caveat."""
    report = engine.bounds_report(point)
    assert report.interval == (0, 0)
    assert ACYCLIC_CAVEAT in report.caveats


def test_disconnected_bounds(engine):
    """Test that a bounds report requires a connected input."""
    with pytest.raises(DisconnectedInputError) as ex_info:
        engine.bounds_report(sset_of("sphere", 0))
    assert ex_info.value.method == "bounds_report"


def test_triangulations_agree(engine, sphere2):
    """Test that two triangulations of the 2-sphere produce the same report apart from the space label."""
    first = engine.bounds_report(sphere2, 1).model_dump()
    second = engine.bounds_report(sset_of("octahedron"), 1).model_dump()
    assert first.pop("space") == "S^2"
    assert second.pop("space") == "octahedron"
    assert first == second
