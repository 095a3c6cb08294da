"""Finite 0-Hecke modules whose generators send basis tableaux to a basis tableau or zero."""
from dataclasses import dataclass
from typing import NamedTuple

from .qsym import descent_expansion
from .tableaux import descent_data, enumerate_iglt, enumerate_syt, Tableau
from .combinatorics import l_lambda, two_row

ZERO = None


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class HeckeModule:
    """Action tables for ``pi_1 .. pi_{m-1}`` on an ordered tableau basis.

    ``action[i][b]`` is the index of ``pi_i . basis[b]`` or ``ZERO``.  An entry
    equal to ``b`` means the basis element is fixed.
    """

    m: int
    basis: tuple
    action: dict

    @property
    def generators(self):
        return range(1, self.m)

    def index(self, tableau):
        return self._index[tableau]

    def __post_init__(self):
        object.__setattr__(self, "_index", {t: k for k, t in enumerate(self.basis)})

    def apply(self, i, b):
        """``pi_i`` on a basis index (``ZERO`` maps to ``ZERO``)."""
        return ZERO if b is ZERO else self.action[i][b]

    def act(self, i, tableau):
        """``pi_i . tableau`` as a Tableau, or ``ZERO``."""
        out = self.action[i][self._index[tableau]]
        return ZERO if out is ZERO else self.basis[out]

    def apply_word(self, word, b):
        """Apply ``pi_{word[-1]}`` first, ``pi_{word[0]}`` last."""
        for i in reversed(word):
            b = self.apply(i, b)
        return b

    def with_action(self, i, b, target):
        action = {g: list(row) for g, row in self.action.items()}
        action[i][b] = target
        return HeckeModule(self.m, self.basis, {g: tuple(r) for g, r in action.items()})

    def to_json(self):
        def cell(b, t):
            if t is ZERO:
                return "zero"
            return "fixed" if t == b else t
        return {
            "m": self.m,
            "basis": [str(t) for t in self.basis],
            "action": {str(i): {str(b): cell(b, t) for b, t in enumerate(row)}
                       for i, row in sorted(self.action.items())},
        }

    @classmethod
    def from_json(cls, data):
        def parse(b, v):
            if v == "zero":
                return ZERO
            return b if v == "fixed" else int(v)
        basis = tuple(Tableau.from_string(s) for s in data["basis"])
        action = {int(i): tuple(parse(int(b), row[str(b)]) for b in range(len(basis)))
                  for i, row in data["action"].items()}
        return cls(data["m"], basis, action)


def _build(m, basis, rule):
    index = {t: k for k, t in enumerate(basis)}
    action = {}
    for i in range(1, m):
        row = []
        for t in basis:
            out = rule(t, i)
            if out is ZERO:
                row.append(ZERO)
            elif out not in index:
                raise InvariantViolation(f"pi_{i} sends {t} outside the basis: {out}")
            else:
                row.append(index[out])
        action[i] = tuple(row)
    return HeckeModule(m, tuple(basis), action)


def searles_action(S, i):
    """``pi_i`` on a standard tableau: compare the columns of ``i`` and ``i + 1``."""
    (a,), (b,) = S.positions[i], S.positions[i + 1]
    if a.col < b.col:
        return S
    if a.col == b.col:
        return ZERO
    return S.swap(i)


def kim_yoo_action(T, i):
    """``pi_i`` on an increasing gapless tableau via its descent type."""
    data = descent_data(T)
    if i not in data.descents:
        return T
    if i in data.attacking:
        return ZERO
    out = T.swap(i)
    if not out.is_gapless():
        raise InvariantViolation(f"non-attacking swap of {i} in {T} gave {out}")
    return out


def x_module(mu):
    """Searles' module on the standard tableaux of shape ``mu``."""
    mu = tuple(mu)
    return _build(sum(mu), enumerate_syt(mu), searles_action)


def g_module(lam, m):
    """Kim--Yoo module on the increasing gapless tableaux of shape ``lam`` with max ``m``."""
    lam = two_row(lam)
    if not l_lambda(lam) <= m <= lam.n:
        raise ValueError(f"m={m} outside [{l_lambda(lam)}, {lam.n}] for shape {tuple(lam)}")
    return _build(m, enumerate_iglt(lam, m), kim_yoo_action)


class RelationCheck(NamedTuple):
    ok: bool
    witness: tuple = None  # (relation, generators, basis index)


def check_relations(M):
    """Check idempotence, braid and far-commutation relations on every basis element."""
    gens = list(M.generators)
    tests = [(("idempotent", (i,)), (i, i), (i,)) for i in gens]
    tests += [(("braid", (i, i + 1)), (i, i + 1, i), (i + 1, i, i + 1))
              for i in gens if i + 1 in M.action]
    tests += [(("commute", (i, j)), (i, j), (j, i))
              for i in gens for j in gens if j >= i + 2]
    for (name, idx), lhs, rhs in tests:
        for b in range(len(M.basis)):
            if M.apply_word(lhs, b) != M.apply_word(rhs, b):
                return RelationCheck(False, (name, idx, b))
    return RelationCheck(True)


def characteristic_by_descents(M, basis=None):
    """Descent-sum characteristic of ``M`` (or of the span of ``basis`` inside it)."""
    return descent_expansion(M.basis if basis is None else basis, M.m)
