import json
from itertools import combinations

import pytest

from genomic_schur.bijection import phi
from genomic_schur.combinatorics import lambda_variant
from genomic_schur.genome import (
    equivalence_classes, gamma_path, genome_key, linear_extension, order_leq,
    order_leq_printed, sweep, verify_theorem,
)
from genomic_schur.hecke import InvariantViolation
from genomic_schur.tableaux import Tableau, enumerate_iglt, enumerate_syt, occurrences

from conftest import all_cases

t = Tableau.from_string


def admissible_paths(T, v):
    """Every up/right lattice path between the prescribed corners that separates < v from >= v."""
    occ = occurrences(T, v)
    start = (occ.bottom.row, occ.bottom.col - 1)
    end = (occ.top.row - 1, occ.top.col)
    ups, rights = start[0] - end[0], end[1] - start[1]
    found = []
    for up_slots in combinations(range(ups + rights), ups):
        p, path, ok = start, [start], True
        for k in range(ups + rights):
            i, j = p
            if k in up_slots:
                # crossing between the boxes (i, j) and (i, j + 1)
                ok = ok and T[i, j] < v <= T[i, j + 1]
                p = (i - 1, j)
            else:
                # crossing between the boxes (i, j + 1) and (i + 1, j + 1)
                ok = ok and T[i, j + 1] < v <= T[i + 1, j + 1]
                p = (i, j + 1)
            path.append(p)
        if ok:
            found.append(tuple(path))
    return found


def class_of(classes, text):
    return next(E for E in classes if t(text) in E.members)


def members(E):
    return {str(T) for T in E.members}


@pytest.mark.parametrize("text, v, path", [
    ("1 2 / 2", 2, [(2, 0), (1, 0), (1, 1), (0, 1), (0, 2)]),
    ("1 3 4 / 2 4", 4, [(2, 1), (1, 1), (1, 2), (0, 2), (0, 3)]),
    ("1 2 4 / 3 4", 4, [(2, 1), (1, 1), (1, 2), (0, 2), (0, 3)]),
])
def test_gamma_path_examples(text, v, path):
    T = t(text)
    assert gamma_path(T, v) == tuple(path)
    assert admissible_paths(T, v) == [tuple(path)]


def test_gamma_path_requires_repeated_value():
    with pytest.raises(ValueError):
        gamma_path(t("1 2 / 2"), 1)


def test_gamma_path_reports_missing_path():
    # not increasing, so no separating path exists
    with pytest.raises(InvariantViolation):
        gamma_path(t("1 1 1 / 1 1"), 1)


@pytest.mark.parametrize("lam, m", all_cases(8))
def test_gamma_path_unique(lam, m):
    for T in enumerate_iglt(lam, m):
        for v, boxes in T.positions.items():
            if len(boxes) > 1:
                assert admissible_paths(T, v) == [gamma_path(T, v)]


def test_classes_three_two_four():
    classes = equivalence_classes((3, 2), 4)
    assert sorted(map(members, classes), key=sorted) == sorted([
        {"1 2 3 / 2 4", "1 2 4 / 2 3"},
        {"1 2 3 / 3 4"},
        {"1 3 4 / 2 4", "1 2 4 / 3 4"},
    ], key=sorted)
    assert class_of(classes, "1 3 4 / 2 4").family == 2
    assert class_of(classes, "1 2 3 / 2 4").family == 1
    assert class_of(classes, "1 2 3 / 3 4").family == 1
    key = class_of(classes, "1 3 4 / 2 4").key
    assert [set(g.boxes) for g in key] == [{(1, 3), (2, 2)}]


@pytest.mark.parametrize("lam, m", [((2, 2), 4), ((3, 2), 5), ((4, 3), 7)])
def test_full_degree_single_class(lam, m):
    (E,) = equivalence_classes(lam, m)
    assert E.family == 1 and E.key == ()
    assert E.members == enumerate_syt(lam)


def test_classes_two_two_three():
    (E,) = equivalence_classes((2, 2), 3)
    assert members(E) == {"1 2 / 2 3"}


@pytest.mark.parametrize("lam, m", all_cases(8))
def test_class_structure(lam, m):
    classes = equivalence_classes(lam, m)
    tabs = enumerate_iglt(lam, m)
    assert sum(len(E.members) for E in classes) == len(tabs)
    assert {T for E in classes for T in E.members} == set(tabs)
    for E in classes:
        shapes = {phi(T).output.shape for T in E.members}
        assert shapes == {lambda_variant(lam, m, E.family)}
        assert all(genome_key(T) == E.key for T in E.members)
        cols = E.bottom_columns
        assert list(cols) == sorted(set(cols))
    for x in (1, 2):
        size = sum(len(E.members) for E in classes if E.family == x)
        shape = lambda_variant(lam, m, x)
        assert size == (len(enumerate_syt(shape)) if shape else 0)


def test_order_examples():
    classes = equivalence_classes((3, 2), 4)
    a = class_of(classes, "1 2 3 / 2 4")
    b = class_of(classes, "1 2 3 / 3 4")
    assert order_leq(a, b) and not order_leq(b, a)
    assert order_leq(a, a)
    # bottom columns alone cannot tell them apart
    assert order_leq_printed(a, b) and order_leq_printed(b, a)
    fam1 = [E for E in classes if E.family == 1]
    assert [members(E) for E in linear_extension(fam1)] == [members(a), members(b)]
    with pytest.raises(ValueError):
        order_leq(a, equivalence_classes((3, 2), 5)[0])


@pytest.mark.parametrize("lam, m", all_cases(8))
def test_linear_extension_respects_order(lam, m):
    classes = equivalence_classes(lam, m)
    for x in (1, 2):
        ordered = linear_extension([E for E in classes if E.family == x])
        for i, E1 in enumerate(ordered):
            for E2 in ordered[:i]:
                assert not order_leq(E1, E2)


@pytest.mark.parametrize("lam, m, stages", [
    ((3, 2), 4, {1: [{"1 2 3 / 2 4", "1 2 4 / 2 3"}, {"1 2 3 / 3 4"}],
                 2: [{"1 3 4 / 2 4", "1 2 4 / 3 4"}]}),
    ((2, 2), 4, {1: [{"1 2 / 3 4", "1 3 / 2 4"}]}),
    ((2, 1), 2, {2: [{"1 2 / 2"}]}),
])
def test_verify_examples(lam, m, stages):
    report = verify_theorem(lam, m)
    assert report.verified
    got = {f.x: [members(f.classes[k]) for k in f.order] for f in report.families}
    assert got == stages


def test_verify_shapes_three_two_four():
    report = verify_theorem((3, 2), 4)
    assert {f.x: f.shape for f in report.families} == {1: (2, 1, 1), 2: (2, 2)}
    assert report.par == [(2, 1, 1), (2, 2)] and report.par_printed == [(2, 2)]


def test_verify_catches_bad_order(monkeypatch):
    from genomic_schur import genome
    monkeypatch.setattr(genome, "extension_key",
                        lambda E: tuple(-c for c in E.bottom_columns + E.top_columns))
    report = genome.verify_theorem((3, 2), 4)
    assert not report.verified
    fam1 = next(f for f in report.families if f.x == 1)
    assert not fam1.closure_ok
    assert report.failures[0].check in {"closure", "quotient_iso"}


def test_report_json_schema():
    data = json.loads(json.dumps(verify_theorem((3, 2), 4).to_json()))
    assert data["lambda"] == [3, 2] and data["m"] == 4 and data["verified"] is True
    assert data["schur_expansion_ok"] is True
    fam = data["families"][0]
    assert set(fam) >= {"x", "shape", "classes", "order", "closure_ok",
                        "quotient_iso_ok", "c1_ok"}
    assert sorted(fam["order"]) == list(range(len(fam["classes"])))
    cls = fam["classes"][0]
    assert set(cls) == {"members", "key"}
    assert all(set(g) == {"boxes", "path"} for g in cls["key"])


def test_paper_gap_example():
    report = verify_theorem((4, 2), 5)
    assert report.verified
    fam2 = next(f for f in report.families if f.x == 2)
    a = class_of(fam2.classes, "1 3 4 5 / 2 5")
    b = class_of(fam2.classes, "1 3 4 5 / 2 4")
    ia, ib = fam2.classes.index(a), fam2.classes.index(b)
    assert (min(ia, ib), max(ia, ib)) in fam2.printed_ties
    assert order_leq(b, a) and not order_leq(a, b)
    assert fam2.order.index(ib) < fam2.order.index(ia)


def test_all_extensions_recorded():
    report = verify_theorem((4, 2), 5, all_extensions=True)
    ext = {f.x: f.extensions for f in report.families}
    assert ext[2] == {"total": 2, "passed": 1}
    assert ext[1]["passed"] >= 1


@pytest.mark.parametrize("n_max, count", [(2, 1), (4, 7)])
def test_sweep_small(n_max, count):
    reports = sweep(n_max)
    assert len(reports) == count and all(r.verified for r in reports)
    if n_max == 2:
        assert (reports[0].lam, reports[0].m) == ((1, 1), 2)


def test_sweep_rejects_small_bound():
    with pytest.raises(ValueError):
        sweep(1)


def test_sweep_parallel_matches_serial():
    serial = [r.to_json() for r in sweep(6)]
    parallel = [r.to_json() for r in sweep(6, jobs=3)]
    assert json.dumps(serial) == json.dumps(parallel)
