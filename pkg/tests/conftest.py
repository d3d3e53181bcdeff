import random
from fractions import Fraction
from importlib.resources import files

import pytest

from galois_rules.context import FormalContext, Thresholds, parse_context
from galois_rules.exportio import build_workspace
from galois_rules.lattice import build_lattice
from galois_rules.rules import extract_rules
from galois_rules.taxonomy import parse_taxonomy


def load_data(name: str) -> str:
    return files("galois_rules.data").joinpath(name).read_text(encoding="utf-8")


def random_context(rng: random.Random, max_ind: int = 8, max_prop: int = 8) -> FormalContext:
    n_ind = rng.randint(1, max_ind)
    n_prop = rng.randint(1, max_prop)
    incidence = [[rng.randint(0, 1) for _ in range(n_prop)] for _ in range(n_ind)]
    return FormalContext(
        [f"i{k}" for k in range(n_ind)],
        [f"p{k}" for k in range(n_prop)],
        incidence,
    )


def random_thresholds(rng: random.Random) -> Thresholds:
    return Thresholds(Fraction(rng.randint(0, 10), 10), Fraction(rng.randint(0, 10), 10))


@pytest.fixture(scope="session")
def course_ctx():
    return parse_context(load_data("cours.csv"), "csv")


@pytest.fixture(scope="session")
def course_lattice(course_ctx):
    return build_lattice(course_ctx)


@pytest.fixture(scope="session")
def half_thresholds():
    return Thresholds(Fraction(1, 2), Fraction(1, 2))


@pytest.fixture(scope="session")
def course_rules(course_lattice, course_ctx, half_thresholds):
    return extract_rules(course_lattice, course_ctx, half_thresholds)


@pytest.fixture(scope="session")
def course_tax(course_ctx):
    return parse_taxonomy(load_data("cours_taxonomy.txt"), course_ctx)


@pytest.fixture(scope="session")
def course_workspace(course_ctx, half_thresholds, course_tax):
    return build_workspace(course_ctx, half_thresholds, course_tax)


@pytest.fixture(scope="session")
def zoo_ctx():
    return parse_context(load_data("zoo40.csv"), "csv")


@pytest.fixture(scope="session")
def zoo_workspace(zoo_ctx):
    return build_workspace(zoo_ctx, Thresholds(Fraction(3, 10), Fraction(1, 2)))
