"""Genome classes of two-row gapless tableaux and the filtration verifier.

Lattice point ``(i, j)`` sits on horizontal grid line ``i`` (line 0 is the
top edge of row 1) and vertical grid line ``j`` (line 0 is the left edge of
column 1).  Paths run from the lower-left corner of the bottommost box of a
repeated value up and right to the upper-right corner of its topmost box.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import NamedTuple

from .bijection import phi, phi_inverse
from .combinatorics import (
    Box, lambda_variant, par_by_family, par_candidates_printed, two_row,
    two_row_partitions, valid_degrees,
)
from .hecke import (
    ZERO, InvariantViolation, characteristic_by_descents, check_relations, g_module,
    x_module,
)
from .qsym import check_schur_expansion, schur_via_syt
from .tableaux import enumerate_iglt, occurrences, repeated_values


def path_endpoints(T, v):
    occ = occurrences(T, v)
    return (occ.bottom.row, occ.bottom.col - 1), (occ.top.row - 1, occ.top.col)


def step_ok(T, v, p, q):
    """Whether the unit step ``p -> q`` separates entries ``< v`` from entries ``>= v``."""
    (i, j), (i2, j2) = p, q
    if (i2, j2) == (i - 1, j):
        left, right = T[i, j], T[i, j + 1]
    elif (i2, j2) == (i, j + 1):
        left, right = T[i, j + 1], T[i + 1, j + 1]
    else:
        raise ValueError(f"not an up or right unit step: {p} -> {q}")
    return left < v <= right


def gamma_path(T, v):
    """The separating lattice path of the repeated value ``v``.

    At every lattice point at most one of the two moves is admissible, so
    walking greedily either finds the path or proves there is none.
    """
    if v not in repeated_values(T):
        raise ValueError(f"{v} is not a repeated value of {T}")
    start, end = path_endpoints(T, v)
    path = [start]
    p = start
    while p != end:
        i, j = p
        up, right = (i - 1, j), (i, j + 1)
        if i > end[0] and step_ok(T, v, p, up):
            p = up
        elif j < end[1] and step_ok(T, v, p, right):
            p = right
        else:
            raise InvariantViolation(f"no separating path for {v} in {T}")
        path.append(p)
    return tuple(path)


class Gene(NamedTuple):
    path: tuple
    boxes: frozenset

    @property
    def bottom(self):
        return max(self.boxes)

    @property
    def top(self):
        return min(self.boxes)


def genome_key(T):
    """Canonical form of ``{(path, boxes)}`` over repeated values, by bottom column."""
    genes = [Gene(gamma_path(T, v), frozenset(T.positions[v])) for v in repeated_values(T)]
    return tuple(sorted(genes, key=lambda g: g.bottom.col))


@dataclass
class EquivClass:
    key: tuple
    members: list
    family: int = None

    @property
    def bottom_columns(self):
        return tuple(g.bottom.col for g in self.key)

    @property
    def top_columns(self):
        return tuple(g.top.col for g in self.key)

    def to_json(self):
        return {
            "members": [str(t) for t in self.members],
            "key": [{"boxes": [list(b) for b in sorted(g.boxes)],
                     "path": [list(p) for p in g.path]} for g in self.key],
        }


def class_family(E, lam):
    """Family 2 iff some gene occupies the last box of the second row.

    Cross-checked against the shape of the Pechenik image of every member.
    """
    lam = two_row(lam)
    corner = Box(2, lam.lambda2)
    fam = 2 if any(corner in g.boxes for g in E.key) else 1
    m = E.members[0].max_entry
    expected = lambda_variant(lam, m, fam)
    for T in E.members:
        if (T[corner] in repeated_values(T)) != (fam == 2):
            raise InvariantViolation(f"corner test disagrees on {T}")
        if phi(T).output.shape != expected:
            raise InvariantViolation(
                f"phi({T}) has shape {phi(T).output.shape}, family {fam} expects {expected}")
    return fam


def equivalence_classes(lam, m):
    """Group ``IGLT(lam)_m`` by genome key, in order of first appearance."""
    lam = two_row(lam)
    groups = {}
    for T in enumerate_iglt(lam, m):
        groups.setdefault(genome_key(T), []).append(T)
    classes = [EquivClass(k, ms) for k, ms in groups.items()]
    for E in classes:
        E.family = class_family(E, lam)
    return classes


def order_leq_printed(E1, E2):
    """Componentwise comparison of bottom columns only."""
    _check_comparable(E1, E2)
    return all(a <= b for a, b in zip(E1.bottom_columns, E2.bottom_columns))


def order_leq(E1, E2):
    """Componentwise comparison of bottom columns and of top columns."""
    _check_comparable(E1, E2)
    return order_leq_printed(E1, E2) and all(
        a <= b for a, b in zip(E1.top_columns, E2.top_columns))


def _check_comparable(E1, E2):
    if len(E1.key) != len(E2.key):
        raise ValueError("classes have different numbers of repeated values")


def extension_key(E):
    return E.bottom_columns + E.top_columns


def linear_extension(classes):
    """Lexicographic order on (bottom columns, top columns); extends :func:`order_leq`."""
    return sorted(classes, key=extension_key)


def printed_ties(classes):
    """Pairs of distinct classes that are mutually below each other under the bottom-column order."""
    out = []
    for a in range(len(classes)):
        for b in range(a + 1, len(classes)):
            if (order_leq_printed(classes[a], classes[b])
                    and order_leq_printed(classes[b], classes[a])):
                out.append((a, b))
    return out


class Failure(NamedTuple):
    check: str
    family: int
    stage: int
    generator: int
    tableau: str


@dataclass
class FamilyReport:
    x: int
    shape: tuple
    classes: list
    order: list
    closure_ok: bool = True
    quotient_iso_ok: bool = True
    class_closure_ok: bool = True
    c1_ok: bool = True
    size_ok: bool = True
    printed_ties: list = field(default_factory=list)
    extensions: dict = None

    @property
    def ok(self):
        return (self.closure_ok and self.quotient_iso_ok and self.class_closure_ok
                and self.c1_ok and self.size_ok)

    def to_json(self):
        out = {
            "x": self.x,
            "shape": list(self.shape),
            "classes": [E.to_json() for E in self.classes],
            "order": list(self.order),
            "closure_ok": self.closure_ok,
            "quotient_iso_ok": self.quotient_iso_ok,
            "class_closure_ok": self.class_closure_ok,
            "c1_ok": self.c1_ok,
            "size_ok": self.size_ok,
            "printed_ties": [list(p) for p in self.printed_ties],
        }
        if self.extensions is not None:
            out["extensions"] = self.extensions
        return out


@dataclass
class FiltrationReport:
    lam: tuple
    m: int
    families: list
    par: list
    par_printed: list
    relations_ok: bool
    schur_expansion_ok: bool
    failures: list = field(default_factory=list)

    @property
    def verified(self):
        return (self.relations_ok and self.schur_expansion_ok and not self.failures
                and all(f.ok for f in self.families))

    def to_json(self):
        return {
            "lambda": list(self.lam),
            "m": self.m,
            "par": [list(s) for s in self.par],
            "par_printed": [list(s) for s in self.par_printed],
            "families": [f.to_json() for f in self.families],
            "relations_ok": self.relations_ok,
            "schur_expansion_ok": self.schur_expansion_ok,
            "failures": [f._asdict() for f in self.failures],
            "verified": self.verified,
        }


def _check_family(x, lam, ordered, G, X, failures):
    """Closure, quotient-isomorphism and class-closure checks for one ordered family.

    Returns the three flags; the first witness of each failed check goes to ``failures``.
    """
    m = G.m
    stage = {T: j for j, E in enumerate(ordered, 1) for T in E.members}
    flags = {"closure": True, "quotient_iso": True, "class_closure": True}

    def fail(name, j, i, T):
        if flags[name]:
            failures.append(Failure(name, x, j, i, str(T)))
        flags[name] = False

    for j, E in enumerate(ordered, 1):
        for T in E.members:
            S = phi(T).output
            for i in range(1, m):
                piS = X.act(i, S)
                piT = G.act(i, T)
                if piT is not ZERO and stage.get(piT) != j:
                    fail("class_closure", j, i, T)
                if piS is ZERO:
                    pre = None
                else:
                    pre = stage.get(phi_inverse(piS, lam, m))
                    if pre is None or pre > j:
                        fail("closure", j, i, T)
                if piT == T:
                    good = piS == S
                elif piT is ZERO:
                    good = piS is ZERO or (pre is not None and pre < j)
                else:
                    good = piS is not ZERO and piS == phi(piT).output
                if not good:
                    fail("quotient_iso", j, i, T)
    return flags["closure"], flags["quotient_iso"], flags["class_closure"]


def _linear_extensions_printed(classes):
    """All orderings of ``classes`` that never put a strictly larger class first."""
    for perm in permutations(range(len(classes))):
        seq = [classes[p] for p in perm]
        if all(not (order_leq_printed(seq[b], seq[a]) and not order_leq_printed(seq[a], seq[b]))
               for a in range(len(seq)) for b in range(a + 1, len(seq))):
            yield perm


def verify_theorem(lam, m, *, all_extensions=False, max_extension_classes=7):
    """Check the filtration of each Searles module by genome classes.

    Never raises on a mathematical failure; the returned report carries the
    witnesses instead.  With ``all_extensions`` every linear extension of the
    bottom-column order is also tried (for families of at most
    ``max_extension_classes`` classes) and the pass/fail counts are recorded.
    """
    lam = two_row(lam)
    par = par_by_family(lam, m)
    G = g_module(lam, m)
    relations_ok = check_relations(G).ok
    failures = []
    classes = equivalence_classes(lam, m)
    families = []
    for x in (1, 2):
        fam_classes = [E for E in classes if E.family == x]
        if x not in par:
            if fam_classes:
                failures.append(Failure("empty_variant", x, 0, 0, str(fam_classes[0].members[0])))
            continue
        mu = par[x]
        X = x_module(mu)
        relations_ok = relations_ok and check_relations(X).ok
        ordered = linear_extension(fam_classes)
        report = FamilyReport(
            x, mu, fam_classes, [fam_classes.index(E) for E in ordered],
            printed_ties=printed_ties(fam_classes))
        if ordered:
            flags = _check_family(x, lam, ordered, G, X, failures)
            report.closure_ok, report.quotient_iso_ok, report.class_closure_ok = flags
        members = [T for E in fam_classes for T in E.members]
        report.size_ok = len(members) == len(X.basis)
        report.c1_ok = characteristic_by_descents(G, members) == schur_via_syt(mu)
        if all_extensions and 0 < len(fam_classes) <= max_extension_classes:
            passed = total = 0
            for perm in _linear_extensions_printed(fam_classes):
                total += 1
                trial = _check_family(x, lam, [fam_classes[p] for p in perm], G, X, [])
                passed += all(trial)
            report.extensions = {"total": total, "passed": passed}
        families.append(report)
    return FiltrationReport(
        tuple(lam), m, families,
        par=sorted(par.values()),
        par_printed=sorted(par_candidates_printed(lam, m)),
        relations_ok=relations_ok,
        schur_expansion_ok=check_schur_expansion(lam, [m]).ok,
        failures=failures,
    )


def all_cases(n_max):
    """Every ``(lam, m)`` with ``lam`` a two-row partition of ``2 <= n <= n_max``."""
    return [(lam, m) for n in range(2, n_max + 1)
            for lam in reversed(two_row_partitions(n)) for m in valid_degrees(lam)]


def _verify_case(args):
    lam, m, all_extensions = args
    return verify_theorem(lam, m, all_extensions=all_extensions)


def sweep(n_max, jobs=1, all_extensions=False):
    """Verify every case up to ``n_max``; results come back in canonical order."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    tasks = [(lam, m, all_extensions) for lam, m in all_cases(n_max)]
    if jobs <= 1:
        return [_verify_case(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_case, tasks))
