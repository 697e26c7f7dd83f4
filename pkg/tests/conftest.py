"""Shared fixtures: restricted-root frames are expensive, build them once."""

import pytest

from crosscontact import crossmodel
from crosscontact.crossmodel import Family, SpaceId


@pytest.fixture(scope="session")
def frames():
    """Representative frame per family, keyed by label."""
    spaces = [
        SpaceId(Family.SPHERE, 3), SpaceId(Family.SPHERE, 4),
        SpaceId(Family.REAL_PROJECTIVE, 3),
        SpaceId(Family.COMPLEX_PROJECTIVE, 2), SpaceId(Family.COMPLEX_PROJECTIVE, 3),
        SpaceId(Family.QUATERNIONIC_PROJECTIVE, 1),
        SpaceId(Family.QUATERNIONIC_PROJECTIVE, 2),
        SpaceId(Family.CAYLEY_PLANE),
    ]
    return {s.label(): crossmodel.build_frame(s) for s in spaces}


@pytest.fixture(scope="session")
def cp2(frames):
    return frames["cp2"]


@pytest.fixture(scope="session")
def hp2(frames):
    return frames["hp2"]


@pytest.fixture(scope="session")
def sphere4(frames):
    return frames["sphere4"]
