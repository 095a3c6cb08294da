"""Exact quasisymmetric expressions in the fundamental basis."""
from collections import defaultdict
from itertools import combinations_with_replacement
from typing import NamedTuple

from .combinatorics import comp_of, par_candidates, set_of, two_row, valid_degrees
from .tableaux import descent_set, enumerate_iglt, enumerate_syt


class QSymExpr:
    """Integer linear combination of fundamental quasisymmetric functions.

    Terms are keyed by composition tuples; zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc = defaultdict(int)
        for comp, c in dict(terms or {}).items():
            acc[tuple(comp)] += c
        self._terms = {k: v for k, v in acc.items() if v}

    @property
    def terms(self):
        return dict(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, comp):
        return self._terms.get(tuple(comp), 0)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        return isinstance(other, QSymExpr) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = defaultdict(int, self._terms)
        for k, v in other._terms.items():
            out[k] += v
        return QSymExpr(out)

    def __radd__(self, other):
        # lets sum() start from 0
        if other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return QSymExpr({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return QSymExpr({k: scalar * v for k, v in self._terms.items()})

    def degrees(self):
        return sorted({sum(k) for k in self._terms})

    def component(self, degree):
        return QSymExpr({k: v for k, v in self._terms.items() if sum(k) == degree})

    @property
    def degree(self):
        """The common degree of a homogeneous expression (None if zero)."""
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError(f"expression is not homogeneous: degrees {ds}")
        return ds[0] if ds else None

    def to_json(self):
        return [{"comp": list(k), "coeff": v} for k, v in self]

    @classmethod
    def from_json(cls, data):
        return cls({tuple(t["comp"]): t["coeff"] for t in data})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for comp, c in self:
            name = "F(" + ",".join(map(str, comp)) + ")"
            parts.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(parts)

    def __repr__(self):
        return f"QSymExpr({self._terms!r})"


def fundamental(alpha):
    return QSymExpr({tuple(alpha): 1})


def descent_expansion(tableaux, m):
    """Sum of ``F_comp(Des(T))`` over ``tableaux`` with max entry ``m``."""
    acc = defaultdict(int)
    for T in tableaux:
        acc[comp_of(descent_set(T), m)] += 1
    return QSymExpr(acc)


def schur_via_syt(mu):
    mu = tuple(mu)
    return descent_expansion(enumerate_syt(mu), sum(mu))


def genomic_component(lam, m):
    """The degree-``m`` piece of the genomic Schur function ``U_lam``."""
    return descent_expansion(enumerate_iglt(lam, m), m)


def genomic_schur(lam):
    """Nonzero graded pieces ``[(m, U_{lam;m}), ...]`` of ``U_lam``."""
    lam = two_row(lam)
    return [(m, genomic_component(lam, m)) for m in valid_degrees(lam)]


class ExpansionCheck(NamedTuple):
    ok: bool
    witness: tuple = None  # (m, composition, genomic coeff, schur-side coeff)


def schur_side(lam, m):
    return sum((schur_via_syt(mu) for mu in par_candidates(lam, m)), QSymExpr())


def check_schur_expansion(lam, degrees=None):
    """Compare ``U_{lam;m}`` with the sum of Schur functions over ``Par(lam; m)``."""
    lam = two_row(lam)
    for m in degrees if degrees is not None else valid_degrees(lam):
        lhs = genomic_component(lam, m)
        rhs = schur_side(lam, m)
        if lhs != rhs:
            comp = min(k for k in lhs.terms.keys() | rhs.terms.keys()
                       if lhs[k] != rhs[k])
            return ExpansionCheck(False, (m, comp, lhs[comp], rhs[comp]))
    return ExpansionCheck(True)


def _weak_sequences(n, nvars):
    """Weakly increasing index sequences with their strict-ascent positions."""
    for seq in combinations_with_replacement(range(nvars), n):
        strict = frozenset(j for j in range(1, n) if seq[j - 1] < seq[j])
        exps = [0] * nvars
        for s in seq:
            exps[s] += 1
        yield tuple(exps), strict


def expand_monomials(expr, nvars):
    """Expand ``expr`` in ``nvars`` variables as ``{exponent vector: coeff}``.

    Variables beyond ``x_nvars`` are set to zero.
    """
    if nvars < 1:
        raise ValueError("need at least one variable")
    out = defaultdict(int)
    for degree in expr.degrees():
        piece = [(set_of(c), v) for c, v in expr.component(degree)]
        for exps, strict in _weak_sequences(degree, nvars):
            for cuts, coeff in piece:
                if cuts <= strict:
                    out[exps] += coeff
    return {k: v for k, v in out.items() if v}


def swap_variables(poly, j):
    """Exchange ``x_j`` and ``x_{j+1}`` (1-based) in a monomial expansion."""
    out = {}
    for exps, c in poly.items():
        e = list(exps)
        e[j - 1], e[j] = e[j], e[j - 1]
        out[tuple(e)] = c
    return out
