import pytest

from csa.orders import Disorder, DisorderSet, PairJudgment, StrictRelation, Verdict
from csa.weighting import ComparisonMatrix

D5_IDS = ("d1", "d2", "d3", "d4", "d5")

EXAMPLE1_PAIRS = [
    ("d1", "d5"), ("d1", "d4"), ("d1", "d2"), ("d3", "d1"), ("d3", "d2"),
    ("d3", "d4"), ("d3", "d5"), ("d5", "d4"), ("d5", "d2"), ("d4", "d2"),
]

EXAMPLE2_PAIRS = [
    ("d1", "d3"), ("d1", "d4"), ("d1", "d5"), ("d2", "d3"), ("d2", "d4"),
    ("d2", "d5"), ("d3", "d4"), ("d3", "d5"),
]

EXAMPLE3_PAIRS = [
    ("d1", "d2"), ("d1", "d3"), ("d1", "d4"), ("d1", "d5"), ("d2", "d4"),
    ("d2", "d5"), ("d3", "d5"), ("d4", "d5"),
]

TABLE3_LABELS = ("D1", "D2", "D3", "D4", "D5", "D6")
TABLE3_ROWS = [
    [1, 3, 1 / 2, 4, 2, 1 / 3],
    [1 / 3, 1, 1 / 7, 1, 1 / 2, 1 / 9],
    [2, 7, 1, 9, 5, 1 / 2],
    [1 / 4, 1, 1 / 9, 1, 1 / 2, 1 / 9],
    [1 / 2, 2, 1 / 5, 2, 1, 1 / 6],
    [3, 9, 2, 9, 6, 1],
]
TABLE3_WEIGHTS = (0.140, 0.041, 0.290, 0.038, 0.071, 0.420)

TABLE4_LABELS = ("A", "B", "C", "D", "E")
TABLE4_ROWS = [
    [1, 2, 3, 5, 9],
    [1 / 2, 1, 2, 4, 6],
    [1 / 3, 1 / 2, 1, 2, 3],
    [1 / 5, 1 / 4, 1 / 2, 1, 2],
    [1 / 9, 1 / 6, 1 / 3, 1 / 2, 1],
]
TABLE4_WEIGHTS = (0.450, 0.277, 0.147, 0.081, 0.046)


def make_universe(ids=D5_IDS) -> DisorderSet:
    return DisorderSet(disorders=tuple(Disorder(id=i) for i in ids))


def make_relation(pairs, ids=D5_IDS) -> StrictRelation:
    return StrictRelation(universe=make_universe(ids), pairs=frozenset(pairs))


def preferred_judgments(pairs):
    return [PairJudgment(first=a, second=b, verdict=Verdict.PREFERRED)
            for a, b in pairs]


@pytest.fixture
def universe5():
    return make_universe()


@pytest.fixture
def example1():
    return make_relation(EXAMPLE1_PAIRS)


@pytest.fixture
def example2():
    return make_relation(EXAMPLE2_PAIRS)


@pytest.fixture
def example3():
    return make_relation(EXAMPLE3_PAIRS)


@pytest.fixture
def table3_matrix():
    return ComparisonMatrix(labels=TABLE3_LABELS, entries=TABLE3_ROWS)


@pytest.fixture
def table4_matrix():
    return ComparisonMatrix(labels=TABLE4_LABELS, entries=TABLE4_ROWS)


def relation_doc_for(pairs, ids=D5_IDS) -> dict:
    return {
        "disorders": list(ids),
        "judgments": [{"first": a, "second": b, "verdict": "PREFERRED"}
                      for a, b in pairs],
    }


def table3_hierarchy_doc() -> dict:
    """Table 3 as six singleton clusters (CLI/API fixture)."""
    return {
        "clusters": [{"id": lab, "members": [lab],
                      "matrix": {"labels": [lab], "rows": [[1]]}}
                     for lab in TABLE3_LABELS],
        "cluster_matrix": {
            "labels": list(TABLE3_LABELS),
            "rows": [["1", "3", "1/2", "4", "2", "1/3"],
                     ["1/3", "1", "1/7", "1", "1/2", "1/9"],
                     ["2", "7", "1", "9", "5", "1/2"],
                     ["1/4", "1", "1/9", "1", "1/2", "1/9"],
                     ["1/2", "2", "1/5", "2", "1", "1/6"],
                     ["3", "9", "2", "9", "6", "1"]],
        },
    }
