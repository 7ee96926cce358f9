import itertools
from collections import Counter

import pytest

from universes import (
    LabelAssignment,
    RealityClass,
    ShapeError,
    SystemShape,
    apply_subject_permutation,
    classify_2_1,
    classify_system,
    is_feasible,
    paper_order_convert,
)
from universes.classify import DOGMATIC_VARIANT, SUPER_REAL
from universes.model import TO_PAPER


@pytest.mark.parametrize("bits,expected", [
    ("0000", RealityClass.METAPHYSICAL_REALIST),
    ("1111", RealityClass.MAYA),
    ("0111", RealityClass.SYNAESTHETIC),
    ("1101", RealityClass.PERSONAL_UNIVERSE),
    ("0101", RealityClass.PERSONAL_UNIVERSE),
    ("1001", RealityClass.PERSONAL_UNIVERSE),
    ("1100", RealityClass.PERSONAL_UNIVERSE),
    ("1010", RealityClass.UNCLASSIFIED),
    ("0011", RealityClass.UNCLASSIFIED),
    ("1011", RealityClass.UNCLASSIFIED),
])
def test_named_patterns(bits, expected):
    assert classify_2_1(bits) is expected


def test_rejections():
    with pytest.raises(ValueError):
        classify_2_1("0100")
    with pytest.raises(ShapeError):
        classify_2_1("0", shape=SystemShape(1, 1))
    with pytest.raises(ShapeError):
        classify_2_1("00000")


def test_partition_of_feasible_patterns(s21):
    counts = Counter()
    for bits in itertools.product((0, 1), repeat=4):
        if not is_feasible(bits, s21):
            continue
        cls = classify_2_1(bits, order="internal")
        counts[cls] += 1
        assert classify_2_1(apply_subject_permutation(bits, (1, 0), s21), order="internal") is cls
        if cls is RealityClass.PERSONAL_UNIVERSE:
            assert paper_order_convert(bits, s21.shape, TO_PAPER)[2] == 0
    assert counts == {
        RealityClass.METAPHYSICAL_REALIST: 1,
        RealityClass.MAYA: 1,
        RealityClass.SYNAESTHETIC: 1,
        RealityClass.PERSONAL_UNIVERSE: 4,
        RealityClass.UNCLASSIFIED: 5,
    }


def test_classify_system_examples():
    same = LabelAssignment(SystemShape(2, 1), ((0,), (0,)), (0, 0))
    r = classify_system(same)
    assert r.counts == {RealityClass.METAPHYSICAL_REALIST: 1}
    assert r.tags == ()
    assert classify_system(same, dogmatic=True).tags == (DOGMATIC_VARIANT,)

    hidden = LabelAssignment(SystemShape(2, 2, (0,)), ((0,), (1,)), (2, 2))
    r = classify_system(hidden)
    assert sum(r.counts.values()) == 1
    assert r.tags == (SUPER_REAL,)

    distinct = LabelAssignment(SystemShape(3, 1), ((0,), (1,), (2,)), (3, 4, 5))
    assert classify_system(distinct).counts == {RealityClass.MAYA: 3}


def test_classify_system_degenerate():
    single = LabelAssignment(SystemShape(1, 2, (1,)), ((0,),), (0,))
    r = classify_system(single)
    assert r.counts == {}
    assert r.tags == (SUPER_REAL,)


def test_summary_serialization():
    a = LabelAssignment(SystemShape(3, 1), ((0,), (0,), (1,)), (0, 0, 0))
    d = classify_system(a).as_dict()
    assert sum(d["classes"].values()) == 3
    assert list(d["classes"]) == sorted(d["classes"])
