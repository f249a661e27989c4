#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

import pytest
from pytest_socket import disable_socket

from nlcalc.core.config import clearCaches, resetOverrides


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: exhaustive sweeps at full scale")


def pytest_runtest_setup():
    disable_socket(allow_unix_socket=True)


@pytest.fixture
def isolatedSettings():
    yield
    resetOverrides()


@pytest.fixture
def freshCaches():
    clearCaches()
    yield
    resetOverrides()
    clearCaches()


# s_[mu] s_[nu] for nonempty mu, nu inside the 2x2 box. The (1,1) x (2,1)
# row includes s_[1,1,1], which alpha = (1) contributes.
APPENDIX_PRODUCTS = {
    ((1,), (1,)): {(): 1, (1, 1): 1, (2,): 1},
    ((1,), (2,)): {(1,): 1, (2, 1): 1, (3,): 1},
    ((1,), (1, 1)): {(1,): 1, (1, 1, 1): 1, (2, 1): 1},
    ((1,), (2, 1)): {(1, 1): 1, (2,): 1, (2, 1, 1): 1, (2, 2): 1,
                     (3, 1): 1},
    ((1,), (2, 2)): {(2, 1): 1, (2, 2, 1): 1, (3, 2): 1},
    ((2,), (2,)): {(): 1, (1, 1): 1, (2,): 1, (2, 2): 1, (3, 1): 1,
                   (4,): 1},
    ((2,), (1, 1)): {(1, 1): 1, (2,): 1, (2, 1, 1): 1, (3, 1): 1},
    ((2,), (2, 1)): {(1,): 1, (1, 1, 1): 1, (2, 1): 2, (3,): 1,
                     (2, 2, 1): 1, (3, 1, 1): 1, (3, 2): 1, (4, 1): 1},
    ((2,), (2, 2)): {(2,): 1, (2, 1, 1): 1, (2, 2): 1, (3, 1): 1,
                     (2, 2, 2): 1, (3, 2, 1): 1, (4, 2): 1},
    ((1, 1), (1, 1)): {(): 1, (1, 1): 1, (2,): 1, (1, 1, 1, 1): 1,
                       (2, 1, 1): 1, (2, 2): 1},
    ((1, 1), (2, 1)): {(1,): 1, (1, 1, 1): 1, (2, 1): 2, (3,): 1,
                       (2, 1, 1, 1): 1, (2, 2, 1): 1, (3, 1, 1): 1,
                       (3, 2): 1},
    ((1, 1), (2, 2)): {(1, 1): 1, (2, 1, 1): 1, (2, 2): 1, (3, 1): 1,
                       (2, 2, 1, 1): 1, (3, 2, 1): 1, (3, 3): 1},
    ((2, 1), (2, 1)): {(): 1, (1, 1): 2, (2,): 2, (1, 1, 1, 1): 1,
                       (2, 1, 1): 3, (2, 2): 2, (3, 1): 3, (4,): 1,
                       (2, 2, 1, 1): 1, (2, 2, 2): 1, (3, 1, 1, 1): 1,
                       (3, 2, 1): 2, (3, 3): 1, (4, 1, 1): 1, (4, 2): 1},
    ((2, 1), (2, 2)): {(1,): 1, (1, 1, 1): 1, (2, 1): 2, (3,): 1,
                       (2, 1, 1, 1): 1, (2, 2, 1): 2, (3, 1, 1): 2,
                       (3, 2): 2, (4, 1): 1, (2, 2, 2, 1): 1,
                       (3, 2, 1, 1): 1, (3, 2, 2): 1, (3, 3, 1): 1,
                       (4, 2, 1): 1, (4, 3): 1},
    ((2, 2), (2, 2)): {(): 1, (1, 1): 1, (2,): 1, (1, 1, 1, 1): 1,
                       (2, 1, 1): 1, (2, 2): 2, (3, 1): 1, (4,): 1,
                       (2, 2, 1, 1): 1, (2, 2, 2): 1, (3, 1, 1, 1): 1,
                       (3, 2, 1): 2, (3, 3): 1, (4, 1, 1): 1, (4, 2): 1,
                       (2, 2, 2, 2): 1, (3, 2, 2, 1): 1, (3, 3, 1, 1): 1,
                       (4, 2, 2): 1, (4, 3, 1): 1, (4, 4): 1},
}


@pytest.fixture
def appendixProducts():
    return APPENDIX_PRODUCTS
