"""Coarse classification and the transverse quotient."""

import pytest

from legknots.classify import (
    ambient_tight_class_count,
    class_of,
    classify_level,
    classify_stabilized,
    looseness_verdict,
    positive_stab_looseness,
    transverse_classes,
)
from legknots.diagram import (
    Presentation,
    enumerate_presentations,
    is_ambient_tight,
    nonvanishing_condition,
)
from legknots.invariants import classical_invariants


# ---- verdicts


def test_verdicts_trefoil_level0():
    assert looseness_verdict(Presentation(2, 3, (1,), (-1, 0))) == "tight"
    assert looseness_verdict(Presentation(2, 3, (1,), (1, 0))) == "strongly_nonloose"
    assert looseness_verdict(Presentation(2, 3, (-1,), (-1, 0))) == "strongly_nonloose"


def test_verdict_mixed_stabilizations_go_loose():
    pres = Presentation(2, 3, (1,), (1, 0), 1, 1)
    assert looseness_verdict(pres) == "loose"


def test_verdict_follows_surviving_sign():
    nonvan = Presentation(2, 3, (1,), (1, 0))
    assert looseness_verdict(nonvan.stabilize(neg=4)) == "strongly_nonloose"
    assert looseness_verdict(nonvan.stabilize(pos=1)) == "loose"
    # the conjugate survives positive stabilization instead
    assert looseness_verdict(nonvan.conjugate().stabilize(pos=4)) == "strongly_nonloose"
    assert looseness_verdict(nonvan.conjugate().stabilize(neg=1)) == "loose"


# ---- partitions


def test_classify_level_partitions_everything():
    for level in (1, 2):
        classes = classify_stabilized(3, 4, level)
        total = sum(cls.size for cls in classes)
        assert total == len(list(enumerate_presentations(3, 4, level)))
        members = [pres for cls in classes for pres in cls.members]
        assert len(set(members)) == total


def test_classes_share_invariants():
    for cls in classify_stabilized(2, 5, 2):
        invs = {(i.tb, i.rot, i.d3) for i in map(classical_invariants, cls.members)}
        assert len(invs) == 1


def test_classify_stabilized_requires_positive_level():
    with pytest.raises(ValueError):
        classify_stabilized(2, 3, 0)


def test_class_of_roundtrip():
    for pres in enumerate_presentations(2, 5, 1):
        assert pres in class_of(pres).members


def test_tight_classes_merge_by_rotation():
    # at level 1 the tight trefoil classes are (tb, rot) = (-7, 2), (-7, 0)
    # twice over, (-7, -2): the rot-0 class collects both stabilization signs
    classes = classify_stabilized(2, 3, 1)
    tight = [cls for cls in classes if cls.ambient_tight]
    assert sorted((cls.invariants.rot, cls.size) for cls in tight) == [(-2, 1), (0, 2), (2, 1)]


def test_ambient_tight_counts():
    assert [ambient_tight_class_count(2, 3, lv) for lv in range(4)] == [2, 3, 4, 5]
    assert [ambient_tight_class_count(2, 5, lv) for lv in range(4)] == [4, 5, 6, 7]
    assert [ambient_tight_class_count(3, 4, lv) for lv in range(4)] == [2, 3, 4, 5]
    # the (3, 5) ladder opens with a double step: its two balanced rotations
    # sit 4 apart, so one stabilization fills neither middle slot
    assert [ambient_tight_class_count(3, 5, lv) for lv in range(4)] == [2, 4, 5, 6]


def test_conjugation_acts_on_classes():
    for cls in classify_stabilized(3, 5, 1):
        image = {pres.conjugate() for pres in cls.members}
        partner = class_of(next(iter(image)))
        assert image == set(partner.members)
        assert partner.invariants.rot == -cls.invariants.rot
        assert partner.invariants.d3 == cls.invariants.d3


# ---- transverse classes


def test_transverse_counts_families():
    assert len(transverse_classes(2, 3)) == 1
    assert len(transverse_classes(2, 7)) == 3
    assert len(transverse_classes(4, 5)) == 3
    assert len(transverse_classes(5, 8)) == 4


def test_transverse_classes_are_singleton_nonvanishing():
    for p, q in ((2, 5), (3, 4), (5, 8)):
        classes = transverse_classes(p, q)
        expected = [
            pres for pres in enumerate_presentations(p, q, 0) if nonvanishing_condition(pres)
        ]
        assert sum(cls.size for cls in classes) == len(expected)
        for cls in classes:
            assert cls.strongly_nonloose and cls.transverse and not cls.loose
            assert not is_ambient_tight(cls.representative)


def test_transverse_t58_locations():
    got = {
        (cls.invariants.alexander, cls.invariants.maslov)
        for cls in transverse_classes(5, 8)
    }
    assert got == {(14, 0), (4, -6), (-2, -12), (-12, -26)}


def test_negative_stabilizations_stay_distinct():
    # deep negative stabilization keeps the transverse representatives in
    # pairwise distinct strongly non-loose classes
    reps = [
        pres.stabilize(neg=8)
        for pres in enumerate_presentations(5, 8, 0)
        if nonvanishing_condition(pres)
    ]
    classes = {class_of(pres) for pres in reps}
    assert len(classes) == len(reps)
    for cls in classes:
        assert cls.strongly_nonloose


# ---- positive stabilization


def test_positive_stab_looseness():
    for p, q in ((2, 3), (2, 5), (5, 8)):
        for pres in enumerate_presentations(p, q, 0):
            if nonvanishing_condition(pres):
                assert positive_stab_looseness(pres)


def test_positive_stab_looseness_rejects_vanishing():
    with pytest.raises(ValueError):
        positive_stab_looseness(Presentation(2, 3, (-1,), (1, 0)))
    with pytest.raises(ValueError):
        positive_stab_looseness(Presentation(2, 3, (1,), (1, 0), 0, 1))
