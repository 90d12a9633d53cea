"""Graded algebras and (H, beta)-Lie algebras on homogeneous bases.

Vectors are sparse ``dict``s from basis index to nonzero :class:`Scalar`;
tensors use tuples of indices as keys.  Bilinear maps are stored as
structure-constant tables on basis pairs, so every axiom reduces to a finite
loop over basis tuples in which the bicharacter is evaluated on degrees.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import FieldMismatch
from .grading import (
    Bicharacter,
    FiniteAbelianGroup,
    TwoCocycle,
    bichar_verify,
    cocycle_verify,
    require,
    twist_bicharacter,
)
from .report import DEFAULT_CAP, Check, VerificationReport, Witness, scan
from .scalars import FieldDescriptor, Scalar

GradedVector = dict


# sparse helpers -------------------------------------------------------------

def acc(out: dict, key, c: Scalar) -> None:
    """``out[key] += c``, keeping ``out`` free of zeros."""
    old = out.get(key)
    new = c if old is None else old + c
    if new:
        out[key] = new
    else:
        out.pop(key, None)


def axpy(out: dict, c: Scalar, vec: dict) -> None:
    for key, v in vec.items():
        acc(out, key, c * v)


def scaled(vec: dict, c: Scalar) -> dict:
    if not c:
        return {}
    return {k: c * v for k, v in vec.items()}


def diff(u: dict, v: dict) -> dict:
    out = dict(u)
    for key, c in v.items():
        acc(out, key, -c)
    return out


def clean(vec: dict) -> dict:
    return {k: v for k, v in vec.items() if v}


# bases and tables -----------------------------------------------------------

@dataclass(frozen=True)
class GradedBasis:
    group: FiniteAbelianGroup
    names: tuple
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "degrees", tuple(tuple(d) for d in self.degrees))
        if len(self.names) != len(self.degrees):
            raise ValueError("one degree per basis name required")
        if len(set(self.names)) != len(self.names):
            raise ValueError("basis names must be unique")
        for name, d in zip(self.names, self.degrees):
            if not self.group.is_canonical(d):
                raise ValueError(f"degree {d!r} of {name!r} is not an element of {self.group}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    @classmethod
    def from_pairs(cls, group, pairs: Iterable) -> "GradedBasis":
        pairs = list(pairs)
        return cls(group, [n for n, _ in pairs], [tuple(d) for _, d in pairs])

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown name {name!r}") from None

    def degree(self, i: int):
        return self.degrees[i]

    def vector(self, field: FieldDescriptor, terms) -> dict:
        """Sparse vector from ``[(name, coeff), ...]``."""
        out = {}
        for name, c in terms:
            acc(out, self.index(name), field(c))
        return out

    def restrict(self, indices: Sequence[int]) -> "GradedBasis":
        return GradedBasis(self.group, [self.names[i] for i in indices], [self.degrees[i] for i in indices])

    def __add__(self, other: "GradedBasis") -> "GradedBasis":
        if other.group != self.group:
            raise FieldMismatch("bases graded by different groups")
        return GradedBasis(self.group, self.names + other.names, self.degrees + other.degrees)


def named(vec: dict, *bases: GradedBasis) -> dict:
    """Re-key a sparse vector or tensor by basis names, in index order."""
    out = {}
    for key in sorted(vec):
        idx = key if isinstance(key, tuple) else (key,)
        out[tuple(b.names[i] for b, i in zip(bases, idx))] = vec[key]
    return out


class BilinearTable:
    """Structure constants of a bilinear map ``left x right -> out``."""

    __slots__ = ("left", "right", "out", "field", "entries")

    def __init__(self, left: GradedBasis, right: GradedBasis, out: GradedBasis,
                 field: FieldDescriptor, entries: Optional[dict] = None):
        if not (left.group == right.group == out.group):
            raise FieldMismatch("table bases graded by different groups")
        self.left, self.right, self.out, self.field = left, right, out, field
        self.entries = {}
        for (i, j), vec in (entries or {}).items():
            if not (0 <= i < len(left) and 0 <= j < len(right)):
                raise IndexError(f"table entry ({i}, {j}) out of range")
            vec = {k: field(c) for k, c in vec.items()}
            for k in vec:
                if not 0 <= k < len(out):
                    raise IndexError(f"output index {k} out of range")
            vec = clean(vec)
            if vec:
                self.entries[i, j] = vec

    @classmethod
    def from_names(cls, left, right, out, field, rows) -> "BilinearTable":
        """``rows`` is ``[(left_name, right_name, [(out_name, coeff), ...]), ...]``."""
        entries = {}
        for lname, rname, terms in rows:
            key = (left.index(lname), right.index(rname))
            vec = entries.setdefault(key, {})
            for oname, c in terms:
                acc(vec, out.index(oname), field(c))
        return cls(left, right, out, field, entries)

    def rows(self) -> list:
        """Inverse of :meth:`from_names`, in lexicographic index order."""
        return [
            (self.left.names[i], self.right.names[j],
             [(self.out.names[k], vec[k]) for k in sorted(vec)])
            for (i, j), vec in sorted(self.entries.items())
        ]

    def get(self, i: int, j: int) -> dict:
        return self.entries.get((i, j), {})

    def apply(self, u: dict, v: dict) -> dict:
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                vec = self.entries.get((i, j))
                if vec:
                    axpy(out, a * b, vec)
        return out

    def left_mul(self, i: int, v: dict) -> dict:
        """``t(e_i, v)``."""
        out = {}
        for j, b in v.items():
            vec = self.entries.get((i, j))
            if vec:
                axpy(out, b, vec)
        return out

    def right_mul(self, u: dict, j: int) -> dict:
        """``t(u, e_j)``."""
        out = {}
        for i, a in u.items():
            vec = self.entries.get((i, j))
            if vec:
                axpy(out, a, vec)
        return out

    def map_entries(self, fn) -> "BilinearTable":
        """New table with entry ``(i, j)`` replaced by ``fn(i, j, vec)``."""
        return BilinearTable(self.left, self.right, self.out, self.field,
                             {key: fn(*key, vec) for key, vec in self.entries.items()})

    def __eq__(self, other):
        if not isinstance(other, BilinearTable):
            return NotImplemented
        return (self.left, self.right, self.out, self.field, self.entries) == (
            other.left, other.right, other.out, other.field, other.entries)

    def __hash__(self):
        return hash((self.left, self.right, self.out, self.field, tuple(sorted(self.entries))))


def grading_check(t: BilinearTable, cap: int = DEFAULT_CAP, check_id: str = "grading") -> Check:
    """Every nonzero constant ``c_ij^k`` must have ``deg k = deg i + deg j``."""
    G = t.left.group
    items = []
    for (i, j), vec in sorted(t.entries.items()):
        target = G.add(t.left.degrees[i], t.right.degrees[j])
        bad = {k: c for k, c in vec.items() if t.out.degrees[k] != target}
        if bad:
            items.append(Witness(
                (t.left.names[i], t.right.names[j]),
                named(vec, t.out), named(diff(vec, bad), t.out), named(bad, t.out)))
    return Check(check_id, tuple(items[:cap]), len(items))


# algebras -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GradedAlgebra:
    basis: GradedBasis
    product: BilinearTable
    unit: Optional[dict] = None

    @property
    def field(self) -> FieldDescriptor:
        return self.product.field


@dataclass(frozen=True, eq=False)
class GradedLieAlgebra:
    basis: GradedBasis
    bracket: BilinearTable
    beta: Bicharacter

    def __post_init__(self):
        if self.beta.group != self.basis.group:
            raise FieldMismatch("bicharacter and basis graded by different groups")
        if self.beta.field != self.bracket.field:
            raise FieldMismatch("bicharacter and bracket over different fields")

    @property
    def field(self) -> FieldDescriptor:
        return self.bracket.field

    @classmethod
    def from_names(cls, basis, beta, rows) -> "GradedLieAlgebra":
        return cls(basis, BilinearTable.from_names(basis, basis, basis, beta.field, rows), beta)

    def br(self, u: dict, v: dict) -> dict:
        return self.bracket.apply(u, v)


def _warn_small_characteristic(field: FieldDescriptor):
    if field.characteristic in (2, 3):
        warnings.warn(
            f"characteristic {field.characteristic}: anticommutativity and Jacobi "
            "identities are weaker than in the classical setting",
            stacklevel=3,
        )


def _vector_witness(idx, lhs, rhs, *bases):
    if lhs == rhs:
        return None
    return Witness(idx, named(lhs, *bases), named(rhs, *bases), named(diff(lhs, rhs), *bases))


def assoc_verify(A: GradedAlgebra, cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    B, m = A.basis, A.product
    n = len(B)
    names = B.names
    report = VerificationReport([grading_check(m, cap)])

    def assoc(i, j, k):
        lhs = m.right_mul(m.get(i, j), k)
        rhs = m.left_mul(i, m.get(j, k))
        return _vector_witness((names[i], names[j], names[k]), lhs, rhs, B)

    triples = [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]
    report.checks.append(scan("associativity", triples, assoc, cap, workers))
    if A.unit is not None:
        unit = A.unit
        zero = B.group.zero
        bad_degree = {i: c for i, c in unit.items() if B.degrees[i] != zero}
        witnesses = []
        if bad_degree:
            witnesses.append(Witness(("unit",), named(unit, B), named(diff(unit, bad_degree), B),
                                     named(bad_degree, B)))
        for i in range(n):
            e = {i: A.field.one}
            for lhs in (m.apply(unit, e), m.apply(e, unit)):
                w = _vector_witness((names[i],), lhs, e, B)
                if w:
                    witnesses.append(w)
        report.checks.append(Check("unit", tuple(witnesses[:cap]), len(witnesses)))
    return report


def lie_verify(L: GradedLieAlgebra, cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """Grading, beta-anticommutativity and beta-Jacobi on all basis tuples.

    The identities are taken verbatim, including on the diagonal::

        [a, b] = -b(|a|, |b|) [b, a]
        [[a,b],c] + b(|a|, |b|+|c|) [[b,c],a] + b(|a|+|b|, |c|) [[c,a],b] = 0
    """
    _warn_small_characteristic(L.field)
    B, t, beta = L.basis, L.bracket, L.beta.table
    G = B.group
    deg, names, n = B.degrees, B.names, len(B)

    def anti(i, j):
        lhs = t.get(i, j)
        rhs = scaled(t.get(j, i), -beta[deg[i], deg[j]])
        return _vector_witness((names[i], names[j]), lhs, rhs, B)

    def jacobi(i, j, k):
        total = dict(t.right_mul(t.get(i, j), k))
        axpy(total, beta[deg[i], G.add(deg[j], deg[k])], t.right_mul(t.get(j, k), i))
        axpy(total, beta[G.add(deg[i], deg[j]), deg[k]], t.right_mul(t.get(k, i), j))
        return _vector_witness((names[i], names[j], names[k]), total, {}, B)

    pairs = [(i, j) for i in range(n) for j in range(n)]
    triples = [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]
    return VerificationReport([
        grading_check(t, cap),
        scan("anticommutativity", pairs, anti, cap, workers),
        scan("jacobi", triples, jacobi, cap, workers),
    ])


def _check_setting(basis: GradedBasis, field: FieldDescriptor, form):
    if form.group != basis.group:
        raise FieldMismatch(f"{type(form).__name__} over {form.group}, basis over {basis.group}")
    if form.field != field:
        raise FieldMismatch(f"{type(form).__name__} over {form.field}, structure over {field}")


def beta_commutator(A: GradedAlgebra, beta: Bicharacter) -> GradedLieAlgebra:
    """``[a, b] = ab - b(|a|, |b|) ba`` on homogeneous basis elements."""
    _check_setting(A.basis, A.field, beta)
    require(assoc_verify(A), "algebra")
    require(bichar_verify(beta), "bicharacter")
    B, m = A.basis, A.product
    deg = B.degrees
    entries = {}
    for i in range(len(B)):
        for j in range(len(B)):
            vec = dict(m.get(i, j))
            axpy(vec, -beta(deg[i], deg[j]), m.get(j, i))
            if vec:
                entries[i, j] = vec
    return GradedLieAlgebra(B, BilinearTable(B, B, B, A.field, entries), beta)


def twist_algebra(A: GradedAlgebra, sigma: TwoCocycle) -> GradedAlgebra:
    """Product ``a . b -> s(|a|, |b|) ab``.

    A unit ``1`` of ``A`` becomes ``s(0, 0)^-1 1``; this is the old unit when
    ``s`` is normalized.
    """
    _check_setting(A.basis, A.field, sigma)
    require(assoc_verify(A), "algebra")
    require(cocycle_verify(sigma), "cocycle")
    deg = A.basis.degrees
    product = A.product.map_entries(lambda i, j, vec: scaled(vec, sigma(deg[i], deg[j])))
    unit = None
    if A.unit is not None:
        zero = A.basis.group.zero
        unit = scaled(A.unit, sigma(zero, zero).inverse())
    return GradedAlgebra(A.basis, product, unit)


def twist_lie(L: GradedLieAlgebra, sigma: TwoCocycle) -> GradedLieAlgebra:
    """Bracket ``[a, b] -> s(|a|, |b|) [a, b]``, graded by the twisted bicharacter."""
    _check_setting(L.basis, L.field, sigma)
    require(lie_verify(L), "Lie algebra")
    require(cocycle_verify(sigma), "cocycle")
    return _twist_lie_unchecked(L, sigma, twist_bicharacter(L.beta, sigma))


def _twist_lie_unchecked(L, sigma, beta_sigma):
    deg = L.basis.degrees
    bracket = L.bracket.map_entries(lambda i, j, vec: scaled(vec, sigma(deg[i], deg[j])))
    return GradedLieAlgebra(L.basis, bracket, beta_sigma)


def compare_tables(t1: BilinearTable, t2: BilinearTable, cap: int = DEFAULT_CAP,
                   check_id: str = "table-equality") -> Check:
    """Entrywise comparison of two tables matched up by basis names."""
    if set(t1.left.names) != set(t2.left.names) or set(t1.right.names) != set(t2.right.names) \
            or set(t1.out.names) != set(t2.out.names):
        raise ValueError("tables are on different bases")
    witnesses = []
    for a in t1.left.names:
        for b in t1.right.names:
            lhs = named(t1.get(t1.left.index(a), t1.right.index(b)), t1.out)
            rhs = named(t2.get(t2.left.index(a), t2.right.index(b)), t2.out)
            if lhs != rhs:
                res = dict(lhs)
                for key, c in rhs.items():
                    acc(res, key, -c)
                witnesses.append(Witness((a, b), lhs, rhs, res))
    return Check(check_id, tuple(witnesses[:cap]), len(witnesses))
