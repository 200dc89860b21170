import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from affschubert import cartan_data
from affschubert.poly import Polynomial
from affschubert.weyl import element

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SL3 = cartan_data("A", 3)
SL4 = cartan_data("A", 4)
SP4 = cartan_data("C", 2)
SO7 = cartan_data("B", 3)

SMALL_GROUPS = [SL3, SL4, SP4, SO7]


def el(data, word):
    return element(data, word)


def words(data, max_len):
    return st.lists(st.integers(0, data.rank), max_size=max_len)


def elements(data, max_len):
    return words(data, max_len).map(lambda w: element(data, w))


@st.composite
def polynomials(draw, nvars, max_deg=3, max_terms=5, coef=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        deg = draw(st.integers(0, max_deg))
        exp = [0] * nvars
        for _ in range(deg):
            exp[draw(st.integers(0, nvars - 1))] += 1
        terms[tuple(exp)] = draw(st.integers(-coef, coef))
    return Polynomial(nvars, terms)


@st.composite
def homogeneous(draw, nvars, deg, max_terms=4, coef=4):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        exp = [0] * nvars
        for _ in range(deg):
            exp[draw(st.integers(0, nvars - 1))] += 1
        terms[tuple(exp)] = draw(st.integers(-coef, coef))
    return Polynomial(nvars, terms)


@pytest.fixture(params=SMALL_GROUPS, ids=lambda d: d.name)
def group(request):
    return request.param
