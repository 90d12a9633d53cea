"""Finite abelian grading groups, bicharacters and 2-cocycles.

Over the group algebra of a finite abelian group every group element is
group-like, so the coaction on a homogeneous vector is just its degree and
the Hopf-algebraic axioms on a form ``G x G -> k*`` become identities on a
finite table.  Forms are stored as total tables and checked by enumeration.

The bicharacter identities checked are, for all ``x, y, z`` in ``G``::

    CT2  b(x, y+z) = b(x, y) b(x, z)
    CT3  b(x+y, z) = b(y, z) b(x, z)
    CT4  b(x, y) b(y, x) = 1

The braiding condition CT1 holds identically because a group algebra of an
abelian group is commutative and cocommutative, so it is not checked.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import FieldMismatch, PreconditionError
from .report import DEFAULT_CAP, VerificationReport, Witness, scan
from .scalars import FieldDescriptor, Scalar, root_of_unity_check

GroupElement = tuple


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """``Z_{n1} x ... x Z_{nk}`` with elements as tuples of residues."""

    orders: tuple = ()

    def __post_init__(self):
        orders = tuple(self.orders)
        for n in orders:
            if not isinstance(n, int) or n < 1:
                raise ValueError(f"group orders must be positive integers, got {n!r}")
        object.__setattr__(self, "orders", orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        out = 1
        for n in self.orders:
            out *= n
        return out

    @property
    def zero(self) -> GroupElement:
        return (0,) * self.rank

    def element(self, residues: Iterable[int]) -> GroupElement:
        residues = tuple(residues)
        if len(residues) != self.rank:
            raise ValueError(f"expected {self.rank} residues, got {residues!r}")
        return tuple(r % n for r, n in zip(residues, self.orders))

    def is_canonical(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == self.rank
            and all(isinstance(r, int) and 0 <= r < n for r, n in zip(x, self.orders))
        )

    def add(self, x: GroupElement, y: GroupElement) -> GroupElement:
        return tuple((a + b) % n for a, b, n in zip(x, y, self.orders))

    def neg(self, x: GroupElement) -> GroupElement:
        return tuple(-a % n for a, n in zip(x, self.orders))

    def elements(self) -> Iterator[GroupElement]:
        """Lexicographic enumeration of all ``|G|`` elements."""
        return itertools.product(*(range(n) for n in self.orders))

    def __len__(self) -> int:
        return self.order

    def __str__(self) -> str:
        if not self.orders:
            return "1"
        return " x ".join(f"Z{n}" for n in self.orders)


def group_make(orders: Sequence[int]) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(orders))


def format_element(x: GroupElement) -> str:
    return "(" + ",".join(map(str, x)) + ")"


class GroupForm:
    """Total table ``G x G -> k*``.  Shared shape of bicharacters and cocycles."""

    __slots__ = ("group", "field", "table")

    def __init__(self, group: FiniteAbelianGroup, field: FieldDescriptor, table: dict):
        full = {}
        for x in group.elements():
            for y in group.elements():
                try:
                    value = table[x, y]
                except KeyError:
                    raise ValueError(
                        f"{type(self).__name__} table has no entry at "
                        f"{format_element(x)}, {format_element(y)}"
                    ) from None
                value = field(value)
                if not value:
                    raise ValueError(
                        f"{type(self).__name__} value at {format_element(x)}, "
                        f"{format_element(y)} is zero"
                    )
                full[x, y] = value
        self.group = group
        self.field = field
        self.table = full

    @classmethod
    def from_entries(cls, group, field, entries=()):
        """Build from ``(x, y, value)`` triples; omitted entries default to 1."""
        table = {(x, y): field.one for x in group.elements() for y in group.elements()}
        for x, y, value in entries:
            x, y = tuple(x), tuple(y)
            if not (group.is_canonical(x) and group.is_canonical(y)):
                raise ValueError(f"degree {x!r} or {y!r} is not an element of {group}")
            table[x, y] = field(value)
        return cls(group, field, table)

    @classmethod
    def from_function(cls, group, field, fn: Callable):
        return cls(group, field, {(x, y): fn(x, y) for x in group.elements() for y in group.elements()})

    @classmethod
    def trivial(cls, group, field):
        return cls.from_entries(group, field)

    def __call__(self, x: GroupElement, y: GroupElement) -> Scalar:
        return self.table[x, y]

    def entries(self) -> list:
        """Non-unit entries in lexicographic order (the sparse serial form)."""
        one = self.field.one
        return [(x, y, v) for (x, y), v in self.table.items() if v != one]

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.group == other.group and self.field == other.field and self.table == other.table

    def __hash__(self):
        return hash((type(self).__name__, self.group, self.field, tuple(self.table.items())))

    def __repr__(self):
        body = ", ".join(f"{format_element(x)},{format_element(y)}:{v}" for x, y, v in self.entries())
        return f"{type(self).__name__}({self.group}, {self.field}, {{{body}}})"


class Bicharacter(GroupForm):
    __slots__ = ()


class TwoCocycle(GroupForm):
    __slots__ = ()

    def inverse(self) -> "TwoCocycle":
        """Pointwise inverse; on group-likes this is the convolution inverse."""
        return TwoCocycle(self.group, self.field, {k: v.inverse() for k, v in self.table.items()})


def _same_setting(*forms):
    first = forms[0]
    for f in forms[1:]:
        if f.group != first.group:
            raise FieldMismatch(f"group mismatch: {first.group} vs {f.group}")
        if f.field != first.field:
            raise FieldMismatch(f"field mismatch: {first.field} vs {f.field}")


def _scalar_witness(idx, lhs, rhs):
    if lhs == rhs:
        return None
    return Witness(tuple(format_element(g) for g in idx), lhs, rhs, lhs - rhs)


def bichar_verify(beta: Bicharacter, cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    G = beta.group
    elems = list(G.elements())
    add = G.add
    b = beta.table
    triples = [(x, y, z) for x in elems for y in elems for z in elems]
    pairs = [(x, y) for x in elems for y in elems]

    def ct2(x, y, z):
        return _scalar_witness((x, y, z), b[x, add(y, z)], b[x, y] * b[x, z])

    def ct3(x, y, z):
        return _scalar_witness((x, y, z), b[add(x, y), z], b[y, z] * b[x, z])

    def ct4(x, y):
        return _scalar_witness((x, y), b[x, y] * b[y, x], beta.field.one)

    return VerificationReport([
        scan("CT2", triples, ct2, cap, workers),
        scan("CT3", triples, ct3, cap, workers),
        scan("CT4", pairs, ct4, cap, workers),
    ])


def cocycle_verify(sigma: TwoCocycle, cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """Exhaustive check of ``s(g,h) s(g+h,l) = s(h,l) s(g,h+l)``.

    For group-likes in a commutative cocommutative Hopf algebra the left and
    right cocycle conditions are the same identity.
    """
    G = sigma.group
    elems = list(G.elements())
    add = G.add
    s = sigma.table

    def cocycle(g, h, l):
        return _scalar_witness((g, h, l), s[g, h] * s[add(g, h), l], s[h, l] * s[g, add(h, l)])

    triples = [(g, h, l) for g in elems for h in elems for l in elems]
    return VerificationReport([scan("cocycle", triples, cocycle, cap, workers)])


def bichar_from_exponents(
    group: FiniteAbelianGroup, omega: Scalar, n: int, exponents: Sequence[Sequence[int]]
) -> Bicharacter:
    """``b(x, y) = omega ** (x . B . y mod n)``, validated as a bicharacter."""
    if not root_of_unity_check(omega, n):
        raise ValueError(f"{omega} is not a primitive {n}-th root of unity in {omega.field}")
    k = group.rank
    if len(exponents) != k or any(len(row) != k for row in exponents):
        raise ValueError(f"exponent matrix must be {k}x{k}")

    def value(x, y):
        e = sum(x[i] * exponents[i][j] * y[j] for i in range(k) for j in range(k))
        return omega ** (e % n)

    beta = Bicharacter.from_function(group, omega.field, value)
    report = bichar_verify(beta)
    if not report.passed:
        raise PreconditionError(
            f"exponent data does not define a skew-symmetric bicharacter "
            f"(failing: {', '.join(report.failed())})",
            report,
        )
    return beta


def require(report: VerificationReport, what: str):
    if not report.passed:
        raise PreconditionError(f"{what} fails {', '.join(report.failed())}", report)


def twist_bicharacter(beta: Bicharacter, sigma: TwoCocycle) -> Bicharacter:
    """``b_s(x, y) = s(y, x)^-1 b(x, y) s(x, y)``."""
    _same_setting(beta, sigma)
    require(bichar_verify(beta), "bicharacter")
    require(cocycle_verify(sigma), "cocycle")
    s, b = sigma.table, beta.table
    return Bicharacter(
        beta.group,
        beta.field,
        {(x, y): s[y, x].inverse() * b[x, y] * s[x, y] for (x, y) in b},
    )
