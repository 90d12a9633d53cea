"""Matched pairs of (H, beta)-Lie algebras and their double cross sums.

A matched pair is two Lie algebras ``A`` and ``H`` over the same grading
group and bicharacter, with a left action ``h |> a`` of ``H`` on ``A`` and a
right action ``h <| a`` of ``A`` on ``H``.  Both actions are stored as
tables on ``H x A``: the left one lands in ``A``, the right one in ``H``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .colie import CobracketTable, bialgebra_verify, colie_verify
from .errors import FieldMismatch, NotClosed, PreconditionError
from .grading import (
    Bicharacter,
    TwoCocycle,
    cocycle_verify,
    format_element,
    require,
    twist_bicharacter,
)
from .gradedalg import (
    BilinearTable,
    GradedBasis,
    GradedLieAlgebra,
    _check_setting,
    _twist_lie_unchecked,
    _vector_witness,
    acc,
    axpy,
    compare_tables,
    grading_check,
    lie_verify,
    scaled,
    twist_lie,
)
from .report import DEFAULT_CAP, Check, VerificationReport, Witness, scan

RM_NOTE = "axiom RM (artifact convention)"


class _Action:
    __slots__ = ("table",)
    codomain = ""

    def __init__(self, table: BilinearTable):
        target = table.right if self.codomain == "A" else table.left
        if table.out != target:
            side = "acted-on space" if self.codomain == "A" else "acting space"
            raise ValueError(f"{type(self).__name__} must take values in the {side}")
        self.table = table

    @classmethod
    def from_names(cls, H: GradedBasis, A: GradedBasis, field, rows):
        """``rows`` is ``[(h_name, a_name, [(out_name, coeff), ...]), ...]``."""
        out = A if cls.codomain == "A" else H
        return cls(BilinearTable.from_names(H, A, out, field, rows))

    @classmethod
    def zero(cls, H: GradedBasis, A: GradedBasis, field):
        return cls.from_names(H, A, field, [])

    @property
    def acting(self) -> GradedBasis:
        return self.table.left

    @property
    def acted_on(self) -> GradedBasis:
        return self.table.right

    @property
    def field(self):
        return self.table.field

    def get(self, p: int, i: int) -> dict:
        return self.table.get(p, i)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.table == other.table

    __hash__ = None


class LeftAction(_Action):
    """``h |> a``, a table ``H x A -> A``."""

    __slots__ = ()
    codomain = "A"


class RightAction(_Action):
    """``h <| a``, a table ``H x A -> H``."""

    __slots__ = ()
    codomain = "H"


@dataclass(frozen=True, eq=False)
class MatchedPair:
    A: GradedLieAlgebra
    H: GradedLieAlgebra
    left: LeftAction
    right: RightAction

    def __post_init__(self):
        if self.A.beta != self.H.beta:
            raise FieldMismatch("A and H carry different bicharacters")
        for act in (self.left, self.right):
            if act.acting != self.H.basis or act.acted_on != self.A.basis:
                raise ValueError(f"{type(act).__name__} is not on H x A for this pair")
            if act.field != self.A.field:
                raise FieldMismatch("action over a different field")

    @property
    def beta(self) -> Bicharacter:
        return self.A.beta


@dataclass(frozen=True, eq=False)
class CobrackedPair:
    pair: MatchedPair
    deltaA: CobracketTable
    deltaH: CobracketTable

    def __post_init__(self):
        if self.deltaA.basis != self.pair.A.basis or self.deltaH.basis != self.pair.H.basis:
            raise ValueError("cobrackets are not on the bases of the pair")


def _beta(beta, default: Bicharacter) -> dict:
    return (beta or default).table


# module axioms --------------------------------------------------------------

def left_module_verify(H: GradedLieAlgebra, A: GradedBasis, act: LeftAction, beta=None,
                       cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """``[h,g] |> a = h |> (g |> a) - b(|h|,|g|) g |> (h |> a)``."""
    if act.acting != H.basis or act.acted_on != A:
        raise ValueError("action is not on H x A")
    b = _beta(beta, H.beta)
    t, hb = act.table, H.bracket
    dh, hn, an = H.basis.degrees, H.basis.names, A.names

    def lm(p, q, i):
        lhs = t.right_mul(hb.get(p, q), i)
        rhs = t.left_mul(p, t.get(q, i))
        axpy(rhs, -b[dh[p], dh[q]], t.left_mul(q, t.get(p, i)))
        return _vector_witness((hn[p], hn[q], an[i]), lhs, rhs, A)

    m, n = len(H.basis), len(A)
    return VerificationReport([
        grading_check(t, cap, "left-action grading"),
        scan("LM", [(p, q, i) for p in range(m) for q in range(m) for i in range(n)], lm, cap, workers),
    ])


def right_module_verify(A: GradedLieAlgebra, H: GradedBasis, act: RightAction, beta=None,
                        cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """``h <| [a,b] = (h <| a) <| b - b(|a|,|b|) (h <| b) <| a``.

    Mirror image of the left-module axiom; reported under ``RM`` with a note
    marking it as a convention of this package.
    """
    if act.acting != H or act.acted_on != A.basis:
        raise ValueError("action is not on H x A")
    b = _beta(beta, A.beta)
    t, ab = act.table, A.bracket
    da, hn, an = A.basis.degrees, H.names, A.basis.names

    def rm(p, i, j):
        lhs = t.left_mul(p, ab.get(i, j))
        rhs = t.right_mul(t.get(p, i), j)
        axpy(rhs, -b[da[i], da[j]], t.right_mul(t.get(p, j), i))
        return _vector_witness((hn[p], an[i], an[j]), lhs, rhs, H)

    m, n = len(H), len(A.basis)
    return VerificationReport([
        grading_check(t, cap, "right-action grading"),
        scan("RM", [(p, i, j) for p in range(m) for i in range(n) for j in range(n)], rm, cap,
             workers, note=RM_NOTE),
    ])


def module_lie_algebra_verify(act: LeftAction, A: GradedLieAlgebra, beta=None,
                              cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """``h |> [a,b] = [h |> a, b] + b(|h|,|a|) [a, h |> b]``."""
    if act.acted_on != A.basis:
        raise ValueError("action does not act on A")
    b = _beta(beta, A.beta)
    t, ab = act.table, A.bracket
    dh, da = act.acting.degrees, A.basis.degrees
    hn, an = act.acting.names, A.basis.names

    def mla(p, i, j):
        lhs = t.left_mul(p, ab.get(i, j))
        rhs = ab.right_mul(t.get(p, i), j)
        axpy(rhs, b[dh[p], da[i]], ab.left_mul(i, t.get(p, j)))
        return _vector_witness((hn[p], an[i], an[j]), lhs, rhs, A.basis)

    m, n = len(act.acting), len(A.basis)
    return VerificationReport([
        scan("module-Lie-algebra", [(p, i, j) for p in range(m) for i in range(n) for j in range(n)],
             mla, cap, workers),
    ])


def module_lie_coalgebra_verify(act: LeftAction, deltaA: CobracketTable, beta: Bicharacter,
                                cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """``delta(h |> a) = h |> a1 (x) a2 + b(|h|,|a1|) a1 (x) h |> a2``."""
    if deltaA.basis != act.acted_on:
        raise ValueError("cobracket is not on the acted-on space")
    b = beta.table
    t, A = act.table, deltaA.basis
    dh, da = act.acting.degrees, A.degrees
    hn, an = act.acting.names, A.names

    def mlc(p, i):
        lhs = deltaA.apply(t.get(p, i))
        rhs = {}
        for (j, k), c in deltaA.get(i).items():
            for r, v in t.get(p, j).items():
                acc(rhs, (r, k), c * v)
            f = b[dh[p], da[j]] * c
            for r, v in t.get(p, k).items():
                acc(rhs, (j, r), f * v)
        return _vector_witness((hn[p], an[i]), lhs, rhs, A, A)

    m, n = len(act.acting), len(A)
    return VerificationReport([
        scan("module-Lie-coalgebra", [(p, i) for p in range(m) for i in range(n)], mlc, cap, workers),
    ])


def right_module_lie_coalgebra_verify(act: RightAction, deltaH: CobracketTable, beta: Bicharacter,
                                      cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """``delta(h <| a) = h1 (x) h2 <| a + b(|h2|,|a|) h1 <| a (x) h2``."""
    if deltaH.basis != act.acting:
        raise ValueError("cobracket is not on the acting space")
    b = beta.table
    t, H = act.table, deltaH.basis
    dh, da = H.degrees, act.acted_on.degrees
    hn, an = H.names, act.acted_on.names

    def rmlc(p, i):
        lhs = deltaH.apply(t.get(p, i))
        rhs = {}
        for (q, r), c in deltaH.get(p).items():
            for s, v in t.get(r, i).items():
                acc(rhs, (q, s), c * v)
            f = b[dh[r], da[i]] * c
            for s, v in t.get(q, i).items():
                acc(rhs, (s, r), f * v)
        return _vector_witness((hn[p], an[i]), lhs, rhs, H, H)

    m, n = len(H), len(act.acted_on)
    return VerificationReport([
        scan("right-module-Lie-coalgebra", [(p, i) for p in range(m) for i in range(n)], rmlc, cap,
             workers, note="artifact convention"),
    ])


# matched-pair conditions ----------------------------------------------------

def bb1_verify(pair: MatchedPair, cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """``h |> [a,b] = [h |> a, b] + b(|h|,|a|) [a, h |> b]
    + (h <| a) |> b - b(|a|,|b|) (h <| b) |> a``."""
    A, H, L, R = pair.A, pair.H, pair.left.table, pair.right.table
    b = pair.beta.table
    ab, dh, da = A.bracket, H.basis.degrees, A.basis.degrees
    hn, an = H.basis.names, A.basis.names

    def bb1(p, i, j):
        lhs = L.left_mul(p, ab.get(i, j))
        rhs = ab.right_mul(L.get(p, i), j)
        axpy(rhs, b[dh[p], da[i]], ab.left_mul(i, L.get(p, j)))
        axpy(rhs, A.field.one, L.right_mul(R.get(p, i), j))
        axpy(rhs, -b[da[i], da[j]], L.right_mul(R.get(p, j), i))
        return _vector_witness((hn[p], an[i], an[j]), lhs, rhs, A.basis)

    m, n = len(H.basis), len(A.basis)
    return VerificationReport([
        scan("BB1", [(p, i, j) for p in range(m) for i in range(n) for j in range(n)], bb1, cap, workers),
    ])


def bb2_verify(pair: MatchedPair, cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """``[h,g] <| a = [h, g <| a] + b(|g|,|a|) [h <| a, g]
    + h <| (g |> a) - b(|h|,|g|) g <| (h |> a)``."""
    A, H, L, R = pair.A, pair.H, pair.left.table, pair.right.table
    b = pair.beta.table
    hb, dh, da = H.bracket, H.basis.degrees, A.basis.degrees
    hn, an = H.basis.names, A.basis.names

    def bb2(p, q, i):
        lhs = R.right_mul(hb.get(p, q), i)
        rhs = hb.left_mul(p, R.get(q, i))
        axpy(rhs, b[dh[q], da[i]], hb.right_mul(R.get(p, i), q))
        axpy(rhs, A.field.one, R.left_mul(p, L.get(q, i)))
        axpy(rhs, -b[dh[p], dh[q]], R.left_mul(q, L.get(p, i)))
        return _vector_witness((hn[p], hn[q], an[i]), lhs, rhs, H.basis)

    m, n = len(H.basis), len(A.basis)
    return VerificationReport([
        scan("BB2", [(p, q, i) for p in range(m) for q in range(m) for i in range(n)], bb2, cap, workers),
    ])


def bb3_verify(cp: CobrackedPair, cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """``sum h1 (x) h2 |> a + sum h <| a1 (x) a2 = 0`` in ``H (x) A``."""
    pair = cp.pair
    L, R = pair.left.table, pair.right.table
    HB, AB = pair.H.basis, pair.A.basis

    def bb3(p, i):
        total = {}
        for (q, r), c in cp.deltaH.get(p).items():
            for s, v in L.get(r, i).items():
                acc(total, (q, s), c * v)
        for (j, k), c in cp.deltaA.get(i).items():
            for s, v in R.get(p, j).items():
                acc(total, (s, k), c * v)
        return _vector_witness((HB.names[p], AB.names[i]), total, {}, HB, AB)

    return VerificationReport([
        scan("BB3", [(p, i) for p in range(len(HB)) for i in range(len(AB))], bb3, cap, workers),
    ])


def matched_verify(pair: MatchedPair, cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    """Every hypothesis of a matched pair, as one report."""
    report = VerificationReport()
    report.extend(lie_verify(pair.A, cap, workers), "A:")
    report.extend(lie_verify(pair.H, cap, workers), "H:")
    report.extend(left_module_verify(pair.H, pair.A.basis, pair.left, None, cap, workers))
    report.extend(right_module_verify(pair.A, pair.H.basis, pair.right, None, cap, workers))
    report.extend(bb1_verify(pair, cap, workers))
    report.extend(bb2_verify(pair, cap, workers))
    return report


# constructions --------------------------------------------------------------

def double_cross_sum(pair: MatchedPair, force: bool = False) -> GradedLieAlgebra:
    """The Lie algebra on ``A + H`` with ``[h, a] = h |> a + h <| a``.

    The basis is the A-basis followed by the H-basis.  ``[a, h]`` is fixed by
    beta-anticommutativity: ``[a, h] = -b(|a|,|h|) (h |> a + h <| a)``.
    Unless ``force`` is set the pair must pass :func:`matched_verify`.
    """
    if not force:
        require(matched_verify(pair), "matched pair")
    A, H = pair.A, pair.H
    clash = set(A.basis.names) & set(H.basis.names)
    if clash:
        raise ValueError(f"basis names shared by A and H: {sorted(clash)}")
    basis = A.basis + H.basis
    na = len(A.basis)
    b = pair.beta.table
    da, dh = A.basis.degrees, H.basis.degrees
    entries = dict(A.bracket.entries)
    for (p, q), vec in H.bracket.entries.items():
        entries[na + p, na + q] = {na + r: c for r, c in vec.items()}
    for p in range(len(H.basis)):
        for i in range(na):
            vec = dict(pair.left.get(p, i))
            for r, c in pair.right.get(p, i).items():
                vec[na + r] = c
            if vec:
                entries[na + p, i] = vec
                entries[i, na + p] = scaled(vec, -b[da[i], dh[p]])
    return GradedLieAlgebra(basis, BilinearTable(basis, basis, basis, A.field, entries), pair.beta)


def _named_failure(report: VerificationReport, what: str):
    if not report.passed:
        raise PreconditionError(f"{what} fails: {', '.join(report.failed())}", report)


def dcs_bialgebra(cp: CobrackedPair):
    """Double cross sum with the block-diagonal cobracket of ``A`` and ``H``."""
    pair = cp.pair
    beta = pair.beta
    _named_failure(matched_verify(pair), "matched pair")
    _named_failure(colie_verify(cp.deltaA, beta), "cobracket on A")
    _named_failure(colie_verify(cp.deltaH, beta), "cobracket on H")
    _named_failure(bialgebra_verify(pair.A, cp.deltaA), "Lie bialgebra A")
    _named_failure(bialgebra_verify(pair.H, cp.deltaH), "Lie bialgebra H")
    _named_failure(module_lie_coalgebra_verify(pair.left, cp.deltaA, beta), "A as H-module Lie coalgebra")
    _named_failure(right_module_lie_coalgebra_verify(pair.right, cp.deltaH, beta),
                   "H as A-module Lie coalgebra")
    _named_failure(bb3_verify(cp), "BB3")
    L = double_cross_sum(pair)
    na = len(pair.A.basis)
    entries = dict(cp.deltaA.entries)
    for p, tensor in cp.deltaH.entries.items():
        entries[na + p] = {(na + q, na + r): c for (q, r), c in tensor.items()}
    return L, CobracketTable(L.basis, L.field, entries)


def split_from_decomposition(L: GradedLieAlgebra, a_part: Sequence, h_part: Sequence) -> MatchedPair:
    """Read a matched pair off a Lie algebra that is a sum of two subalgebras.

    ``a_part`` and ``h_part`` are basis names or indices partitioning the
    basis of ``L``.  The actions are the two components of ``[h, a]``.
    """
    B = L.basis
    a_idx = [B.index(x) if isinstance(x, str) else x for x in a_part]
    h_idx = [B.index(x) if isinstance(x, str) else x for x in h_part]
    if sorted(a_idx + h_idx) != list(range(len(B))):
        raise ValueError("partition must split the basis into two disjoint parts")
    a_pos = {g: k for k, g in enumerate(a_idx)}
    h_pos = {g: k for k, g in enumerate(h_idx)}

    def restrict(part, pos, name):
        entries = {}
        for x in part:
            for y in part:
                vec = L.bracket.get(x, y)
                stray = [k for k in vec if k not in pos]
                if stray:
                    raise NotClosed(
                        f"[{B.names[x]}, {B.names[y]}] has components "
                        f"{[B.names[k] for k in stray]} outside span of {name}")
                if vec:
                    entries[pos[x], pos[y]] = {pos[k]: c for k, c in vec.items()}
        sub = B.restrict(part)
        return GradedLieAlgebra(sub, BilinearTable(sub, sub, sub, L.field, entries), L.beta)

    A = restrict(a_idx, a_pos, "A")
    H = restrict(h_idx, h_pos, "H")
    left, right = {}, {}
    for h in h_idx:
        for a in a_idx:
            vec = L.bracket.get(h, a)
            la = {a_pos[k]: c for k, c in vec.items() if k in a_pos}
            rh = {h_pos[k]: c for k, c in vec.items() if k in h_pos}
            if la:
                left[h_pos[h], a_pos[a]] = la
            if rh:
                right[h_pos[h], a_pos[a]] = rh
    return MatchedPair(
        A, H,
        LeftAction(BilinearTable(H.basis, A.basis, A.basis, L.field, left)),
        RightAction(BilinearTable(H.basis, A.basis, H.basis, L.field, right)),
    )


def _twist_action(act, sigma: TwoCocycle):
    _check_setting(act.acting, act.field, sigma)
    dh, da = act.acting.degrees, act.acted_on.degrees
    return type(act)(act.table.map_entries(lambda p, i, vec: scaled(vec, sigma(dh[p], da[i]))))


def twist_left_action(act: LeftAction, sigma: TwoCocycle) -> LeftAction:
    """``h |> a -> s(|h|, |a|) h |> a``."""
    return _twist_action(act, sigma)


def twist_right_action(act: RightAction, sigma: TwoCocycle) -> RightAction:
    """``h <| a -> s(|h|, |a|) h <| a``."""
    return _twist_action(act, sigma)


def twist_matched_pair(pair: MatchedPair, sigma: TwoCocycle) -> MatchedPair:
    """Twist both Lie algebras and both actions by ``sigma``.

    The result lives over the twisted bicharacter.
    """
    _check_setting(pair.A.basis, pair.A.field, sigma)
    require(matched_verify(pair), "matched pair")
    require(cocycle_verify(sigma), "cocycle")
    beta_sigma = twist_bicharacter(pair.beta, sigma)
    return MatchedPair(
        _twist_lie_unchecked(pair.A, sigma, beta_sigma),
        _twist_lie_unchecked(pair.H, sigma, beta_sigma),
        twist_left_action(pair.left, sigma),
        twist_right_action(pair.right, sigma),
    )


def iso_check(pair: MatchedPair, sigma: TwoCocycle, cap: int = DEFAULT_CAP,
              pair_sigma: Optional[TwoCocycle] = None) -> VerificationReport:
    """Compare the double cross sum of the twisted pair with the twisted
    double cross sum, entrywise on the shared basis (identity map).

    ``pair_sigma`` twists the pair side by a different cocycle; it exists only
    to confirm that the comparison can fail.
    """
    require(matched_verify(pair), "matched pair")
    require(cocycle_verify(sigma), "cocycle")
    left_side = double_cross_sum(twist_matched_pair(pair, pair_sigma or sigma), force=pair_sigma is not None)
    right_side = twist_lie(double_cross_sum(pair), sigma)
    witnesses = []
    for (x, y), v in left_side.beta.table.items():
        w = right_side.beta(x, y)
        if v != w:
            witnesses.append(Witness((format_element(x), format_element(y)), v, w, v - w))
    return VerificationReport([
        compare_tables(left_side.bracket, right_side.bracket, cap, "iso (identity map)"),
        Check("bicharacter-equality", tuple(witnesses[:cap]), len(witnesses)),
    ])
