"""(H, beta)-Lie coalgebras, the beta-cocommutator, and Lie bialgebras.

A cobracket or coproduct is stored per basis vector as a sparse tensor
``{(j, k): c}`` meaning ``sum c e_j (x) e_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import FieldMismatch
from .grading import Bicharacter, bichar_verify, require
from .gradedalg import (
    GradedBasis,
    GradedLieAlgebra,
    _check_setting,
    _vector_witness,
    acc,
    axpy,
    clean,
    named,
)
from .report import DEFAULT_CAP, Check, VerificationReport, Witness, scan
from .scalars import FieldDescriptor


def _tensor_map(basis, field, entries, what):
    out = {}
    for i, tensor in (entries or {}).items():
        if not 0 <= i < len(basis):
            raise IndexError(f"{what} entry {i} out of range")
        tensor = clean({(j, k): field(c) for (j, k), c in tensor.items()})
        for j, k in tensor:
            if not (0 <= j < len(basis) and 0 <= k < len(basis)):
                raise IndexError(f"{what} output ({j}, {k}) out of range")
        if tensor:
            out[i] = tensor
    return out


def _tensor_rows(basis, field, rows):
    entries = {}
    for name, terms in rows:
        tensor = entries.setdefault(basis.index(name), {})
        for n1, n2, c in terms:
            acc(tensor, (basis.index(n1), basis.index(n2)), field(c))
    return entries


def _rows_of(basis, entries):
    names = basis.names
    return [
        (names[i], [(names[j], names[k], t[j, k]) for j, k in sorted(t)])
        for i, t in sorted(entries.items())
    ]


class CobracketTable:
    """``delta(e_i) = sum c e_j (x) e_k``."""

    __slots__ = ("basis", "field", "entries")

    def __init__(self, basis: GradedBasis, field: FieldDescriptor, entries: Optional[dict] = None):
        self.basis, self.field = basis, field
        self.entries = _tensor_map(basis, field, entries, "cobracket")

    @classmethod
    def from_names(cls, basis, field, rows) -> "CobracketTable":
        """``rows`` is ``[(in_name, [(out1, out2, coeff), ...]), ...]``."""
        return cls(basis, field, _tensor_rows(basis, field, rows))

    @classmethod
    def zero(cls, basis, field) -> "CobracketTable":
        return cls(basis, field)

    def rows(self) -> list:
        return _rows_of(self.basis, self.entries)

    def get(self, i: int) -> dict:
        return self.entries.get(i, {})

    def apply(self, vec: dict) -> dict:
        out = {}
        for i, c in vec.items():
            axpy(out, c, self.get(i))
        return out

    def __eq__(self, other):
        if not isinstance(other, CobracketTable):
            return NotImplemented
        return (self.basis, self.field, self.entries) == (other.basis, other.field, other.entries)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class GradedCoalgebra:
    basis: GradedBasis
    field: FieldDescriptor
    coproduct: dict
    counit: dict

    def __post_init__(self):
        object.__setattr__(self, "coproduct", _tensor_map(self.basis, self.field, self.coproduct, "coproduct"))
        object.__setattr__(self, "counit", clean({i: self.field(c) for i, c in self.counit.items()}))

    @classmethod
    def from_names(cls, basis, field, rows, counit) -> "GradedCoalgebra":
        """``counit`` is ``[(name, coeff), ...]``; omitted names map to 0."""
        eps = {}
        for name, c in counit:
            acc(eps, basis.index(name), field(c))
        return cls(basis, field, _tensor_rows(basis, field, rows), eps)

    def rows(self) -> list:
        return _rows_of(self.basis, self.coproduct)


def tensor_grading_check(basis: GradedBasis, entries: dict, cap: int = DEFAULT_CAP,
                         check_id: str = "grading") -> Check:
    """Every nonzero ``e_j (x) e_k`` in the image of ``e_i`` has ``|j| + |k| = |i|``."""
    G, deg = basis.group, basis.degrees
    witnesses = []
    for i, tensor in sorted(entries.items()):
        bad = {jk: c for jk, c in tensor.items() if G.add(deg[jk[0]], deg[jk[1]]) != deg[i]}
        if bad:
            good = {jk: c for jk, c in tensor.items() if jk not in bad}
            witnesses.append(Witness((basis.names[i],), named(tensor, basis, basis),
                                     named(good, basis, basis), named(bad, basis, basis)))
    return Check(check_id, tuple(witnesses[:cap]), len(witnesses))


def _delta_first(d: dict, tensor: dict) -> dict:
    """``(d (x) id)`` applied to a 2-tensor; ``d`` maps index -> 2-tensor."""
    out = {}
    for (j, k), c in tensor.items():
        for (p, q), v in d.get(j, {}).items():
            acc(out, (p, q, k), c * v)
    return out


def _delta_second(d: dict, tensor: dict) -> dict:
    out = {}
    for (j, k), c in tensor.items():
        for (p, q), v in d.get(k, {}).items():
            acc(out, (j, p, q), c * v)
    return out


def coassoc_verify(C: GradedCoalgebra, cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    B, d, eps = C.basis, C.coproduct, C.counit
    names = B.names
    zero = B.group.zero
    grading = tensor_grading_check(B, d, cap)
    bad_eps = [i for i in sorted(eps) if B.degrees[i] != zero]
    if bad_eps:
        extra = tuple(Witness((names[i],), eps[i], C.field.zero, eps[i]) for i in bad_eps)
        grading = Check("grading", (grading.witnesses + extra)[:cap], grading.failures + len(extra))

    def coassoc(i):
        return _vector_witness((names[i],), _delta_first(d, d.get(i, {})),
                               _delta_second(d, d.get(i, {})), B, B, B)

    def counit(i):
        left, right = {}, {}
        for (j, k), c in d.get(i, {}).items():
            if j in eps:
                acc(left, k, eps[j] * c)
            if k in eps:
                acc(right, j, c * eps[k])
        e = {i: C.field.one}
        if left == e and right == e:
            return None
        # report the left-counit law if it fails, otherwise the right one
        lhs = left if left != e else right
        return _vector_witness((names[i], "left" if left != e else "right"), lhs, e, B)

    singles = [(i,) for i in range(len(B))]
    return VerificationReport([
        grading,
        scan("coassociativity", singles, coassoc, cap, workers),
        scan("counit", singles, counit, cap, workers),
    ])


def colie_verify(delta: CobracketTable, beta: Bicharacter, cap: int = DEFAULT_CAP,
                 workers: int = 1) -> VerificationReport:
    """Grading, beta-anticocommutativity and beta-co-Jacobi per basis vector.

    Writing ``(delta (x) id) delta(a) = sum t1 (x) t2 (x) t3``, co-Jacobi is::

        t1 (x) t2 (x) t3 + b(|t1|+|t2|, |t3|) t3 (x) t1 (x) t2
                         + b(|t1|, |t2|+|t3|) t2 (x) t3 (x) t1 = 0
    """
    _check_setting(delta.basis, delta.field, beta)
    B, d, b = delta.basis, delta.entries, beta.table
    G, deg, names = B.group, B.degrees, B.names

    def anti(i):
        lhs = d.get(i, {})
        rhs = {}
        for (j, k), c in lhs.items():
            acc(rhs, (k, j), -b[deg[j], deg[k]] * c)
        return _vector_witness((names[i],), lhs, rhs, B, B)

    def cojacobi(i):
        total = {}
        for (p, q, r), c in _delta_first(d, d.get(i, {})).items():
            acc(total, (p, q, r), c)
            acc(total, (r, p, q), b[G.add(deg[p], deg[q]), deg[r]] * c)
            acc(total, (q, r, p), b[deg[p], G.add(deg[q], deg[r])] * c)
        return _vector_witness((names[i],), total, {}, B, B, B)

    singles = [(i,) for i in range(len(B))]
    return VerificationReport([
        tensor_grading_check(B, d, cap),
        scan("anticocommutativity", singles, anti, cap, workers),
        scan("co-jacobi", singles, cojacobi, cap, workers),
    ])


def beta_cocommutator(C: GradedCoalgebra, beta: Bicharacter) -> CobracketTable:
    """``delta(c) = c1 (x) c2 - b(|c1|, |c2|) c2 (x) c1``."""
    _check_setting(C.basis, C.field, beta)
    require(coassoc_verify(C), "coalgebra")
    require(bichar_verify(beta), "bicharacter")
    deg = C.basis.degrees
    entries = {}
    for i, tensor in C.coproduct.items():
        out = {}
        for (j, k), c in tensor.items():
            acc(out, (j, k), c)
            acc(out, (k, j), -beta(deg[j], deg[k]) * c)
        entries[i] = out
    return CobracketTable(C.basis, C.field, entries)


def left_tensor(fn, tensor: dict) -> dict:
    """Apply a vector-valued ``fn(index)`` to the first slot of a 2-tensor."""
    out = {}
    for (j, k), c in tensor.items():
        for p, v in fn(j).items():
            acc(out, (p, k), c * v)
    return out


def right_tensor(fn, tensor: dict) -> dict:
    out = {}
    for (j, k), c in tensor.items():
        for q, v in fn(k).items():
            acc(out, (j, q), c * v)
    return out


def bialgebra_verify(L: GradedLieAlgebra, delta: CobracketTable, cap: int = DEFAULT_CAP,
                     workers: int = 1) -> VerificationReport:
    """Compatibility (LB) of bracket and cobracket on every basis pair::

        delta([a,b]) = [a, b1] (x) b2 + b(|a|, |b1|) b1 (x) [a, b2]
                     + a1 (x) [a2, b] + b(|a2|, |b|) [a1, b] (x) a2
    """
    if delta.basis != L.basis:
        raise FieldMismatch("Lie algebra and cobracket are on different bases")
    if delta.field != L.field:
        raise FieldMismatch("Lie algebra and cobracket are over different fields")
    B, t, d, b = L.basis, L.bracket, delta.entries, L.beta.table
    deg, names, n = B.degrees, B.names, len(B)

    def lb(i, j):
        lhs = delta.apply(t.get(i, j))
        rhs = left_tensor(lambda p: t.get(i, p), d.get(j, {}))
        for (p, q), c in d.get(j, {}).items():
            for r, v in t.get(i, q).items():
                acc(rhs, (p, r), b[deg[i], deg[p]] * c * v)
        for (p, q), c in d.get(i, {}).items():
            for r, v in t.get(q, j).items():
                acc(rhs, (p, r), c * v)
            for r, v in t.get(p, j).items():
                acc(rhs, (r, q), b[deg[q], deg[j]] * c * v)
        return _vector_witness((names[i], names[j]), lhs, rhs, B, B)

    pairs = [(i, j) for i in range(n) for j in range(n)]
    return VerificationReport([scan("LB", pairs, lb, cap, workers)])
