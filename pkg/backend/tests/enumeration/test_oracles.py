"""
Tests for exact path laws and the brute-force geodesic oracle.
"""

from fractions import Fraction

import numpy as np
import pytest

from src.enumeration.channeled import channeled_counts, phi_bijection_check
from src.enumeration.laws import exact_weighted_law, ruin_probability, total_mass
from src.enumeration.oracle import all_directed_paths, brute_force_geodesics
from src.errors import CapExceededError, UnreachableError
from src.models.distances import Mode
from src.models.planar_map import OrientedMap


@pytest.fixture
def diamond():
    """s=0 -> a=2 -> t=1 on the right and s -> b=3 -> t on the left."""
    return OrientedMap(
        tails=np.array([0, 2, 0, 3]),
        heads=np.array([2, 1, 3, 1]),
        missing=np.array([False] * 4),
        rotations=((0, 2), (3, 1), (1, 0), (3, 2)),
        root_edge=0,
    )


class TestExactLaws:
    @pytest.mark.parametrize("n", range(7))
    @pytest.mark.parametrize("weighting", ["plain", "h-transform", "flipped"])
    def test_mass_one(self, n, weighting):
        assert total_mass(exact_weighted_law(n, weighting)) == 1

    def test_plain_masses(self):
        law = exact_weighted_law(3, "plain")
        assert len(law) == 27
        assert set(law.values()) == {Fraction(1, 27)}

    @pytest.mark.parametrize("n", range(8))
    def test_flip_identity(self, n):
        assert exact_weighted_law(n, "flipped") == exact_weighted_law(n, "h-transform")

    def test_h_transform_first_step(self):
        law = exact_weighted_law(1, "h-transform")
        assert law == {"a": Fraction(2, 3), "c": Fraction(1, 3)}

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            exact_weighted_law(2, "tilted")
        with pytest.raises(CapExceededError):
            exact_weighted_law(10, "plain")


class TestRuinProbability:
    @pytest.mark.parametrize("K", range(0, 12))
    def test_gamblers_ruin(self, K):
        for s in range(K + 1):
            assert ruin_probability(s, K) == Fraction(s + 1, K + 1)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            ruin_probability(3, 2)


class TestBruteForceGeodesics:
    def test_diamond_paths(self, diamond):
        assert sorted(all_directed_paths(diamond, 0, 1)) == [(0, 1), (2, 3)]
        assert list(all_directed_paths(diamond, 2, 2)) == [()]

    @pytest.mark.parametrize("mode", list(Mode))
    def test_diamond_leftmost(self, diamond, mode):
        oracle = brute_force_geodesics(diamond, mode, 0, 1)
        assert oracle.length == 2
        assert set(oracle.geodesics) == {(0, 1), (2, 3)}
        assert oracle.leftmost == (2, 3)
        assert oracle.dominating == 1

    def test_triangle(self, map_factory):
        oracle = brute_force_geodesics(map_factory("ca"), Mode.LDP, 0, 1)
        assert oracle.geodesics == ((1, 2),)
        assert oracle.length == 2

    def test_unreachable(self, diamond):
        with pytest.raises(UnreachableError):
            brute_force_geodesics(diamond, Mode.SDP, 1, 0)

    def test_edge_cap(self, diamond):
        with pytest.raises(CapExceededError):
            brute_force_geodesics(diamond, Mode.SDP, 0, 1, edge_cap=3)


class TestChanneledClasses:
    def test_single_interior_edge(self):
        assert channeled_counts(1, 3, 1) == 1

    @pytest.mark.parametrize("l, r, k", [(1, 2, 1), (1, 3, 1), (1, 3, 2), (2, 2, 1)])
    def test_phi_bijection(self, l, r, k):
        for interior in range(4):
            assert phi_bijection_check(l, r, k, interior) == []

    def test_k_range(self):
        with pytest.raises(ValueError):
            phi_bijection_check(1, 2, 2, 0)
