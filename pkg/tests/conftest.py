import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from linkinv import fox, laurent

DATA = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    "src",
    "linkinv",
    "data",
)


def read_data(name):
    with open(os.path.join(DATA, name)) as f:
        return f.read()


@pytest.fixture(scope="session")
def mt_pd():
    return fox.parse_pd(read_data("mt_link.pd"))


@pytest.fixture(scope="session")
def mt_presentation(mt_pd):
    return fox.wirtinger_from_pd(mt_pd)


@pytest.fixture(scope="session")
def mt_delta(mt_presentation):
    return laurent.normalize_units(fox.alexander_polynomial(mt_presentation))


@pytest.fixture(scope="session")
def eq3():
    return laurent.mt_link_polynomial()
