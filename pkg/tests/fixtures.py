"""Small structures used throughout the test suite."""

from hbeta import (
    GF,
    Q,
    Bicharacter,
    BilinearTable,
    CobracketTable,
    CobrackedPair,
    GradedAlgebra,
    GradedBasis,
    GradedCoalgebra,
    GradedLieAlgebra,
    LeftAction,
    MatchedPair,
    RightAction,
    TwoCocycle,
    bichar_from_exponents,
    beta_commutator,
    group_make,
    split_from_decomposition,
)

F5 = GF(5)
F7 = GF(7)
TRIVIAL = group_make([])
Z2 = group_make([2])
Z2xZ2 = group_make([2, 2])
Z3xZ3 = group_make([3, 3])


def sign_beta(field=F5):
    return bichar_from_exponents(Z2, field(-1), 2, [[1]])


def trivial_beta(group=TRIVIAL, field=Q):
    return Bicharacter.trivial(group, field)


def sigma_2xy(field=F5):
    """Z_2 cocycle s(x, y) = 2^(xy)."""
    return TwoCocycle.from_function(Z2, field, lambda x, y: 2 ** (x[0] * y[0]))


def sl2(field=Q, he=2):
    basis = GradedBasis.from_pairs(TRIVIAL, [("e", ()), ("h", ()), ("f", ())])
    rows = [
        ("h", "e", [("e", he)]), ("e", "h", [("e", -he)]),
        ("h", "f", [("f", -2)]), ("f", "h", [("f", 2)]),
        ("e", "f", [("h", 1)]), ("f", "e", [("h", -1)]),
    ]
    return GradedLieAlgebra.from_names(basis, trivial_beta(TRIVIAL, field), rows)


def matrix_units(field=Q, group=TRIVIAL, degree=None):
    """2x2 matrix units ``E_ab E_cd = delta_bc E_ad`` with unit E11 + E22."""
    degree = degree or (lambda a, b: group.zero)
    basis = GradedBasis.from_pairs(group, [(f"E{a}{b}", degree(a, b)) for a in (1, 2) for b in (1, 2)])
    rows = [(f"E{a}{b}", f"E{b}{d}", [(f"E{a}{d}", 1)]) for a in (1, 2) for b in (1, 2) for d in (1, 2)]
    product = BilinearTable.from_names(basis, basis, basis, field, rows)
    return GradedAlgebra(basis, product, basis.vector(field, [("E11", 1), ("E22", 1)]))


def super_matrix_units(field=F5):
    return matrix_units(field, Z2, lambda a, b: ((a + b) % 2,))


def gl11(field=F5):
    return beta_commutator(super_matrix_units(field), sign_beta(field))


def comatrix(field=Q, group=TRIVIAL, degree=None):
    degree = degree or (lambda a, b: group.zero)
    basis = GradedBasis.from_pairs(group, [(f"E{a}{b}", degree(a, b)) for a in (1, 2) for b in (1, 2)])
    rows = [(f"E{a}{b}", [(f"E{a}{c}", f"E{c}{b}", 1) for c in (1, 2)]) for a in (1, 2) for b in (1, 2)]
    return GradedCoalgebra.from_names(basis, field, rows, [("E11", 1), ("E22", 1)])


def super_comatrix(field=F5):
    return comatrix(field, Z2, lambda a, b: ((a + b) % 2,))


def grouplike_coalgebra(field, group, degree, eps=1):
    basis = GradedBasis.from_pairs(group, [("c", degree)])
    return GradedCoalgebra.from_names(basis, field, [("c", [("c", "c", 1)])], [("c", eps)] if eps else [])


def two_dim_bialgebra(field=Q, flipped=False):
    """``[H0, X] = X``, ``delta(X) = X (x) H0 - H0 (x) X``, ``delta(H0) = 0``."""
    basis = GradedBasis.from_pairs(TRIVIAL, [("H0", ()), ("X", ())])
    beta = trivial_beta(TRIVIAL, field)
    L = GradedLieAlgebra.from_names(basis, beta, [("H0", "X", [("X", 1)]), ("X", "H0", [("X", -1)])])
    sign = -1 if flipped else 1
    delta = CobracketTable.from_names(basis, field, [("X", [("X", "H0", sign), ("H0", "X", -sign)])])
    return L, delta


def abelian(names, degrees, beta):
    basis = GradedBasis.from_pairs(beta.group, zip(names, degrees))
    return GradedLieAlgebra.from_names(basis, beta, [])


def super_pair(field=F5, h_a2=2):
    """A = span{a1 (deg 1), a2 (deg 0)}, [a1, a1] = a2; H = span{h};
    h |> a1 = a1, h |> a2 = 2 a2; no right action."""
    beta = sign_beta(field)
    Ab = GradedBasis.from_pairs(Z2, [("a1", (1,)), ("a2", (0,))])
    A = GradedLieAlgebra.from_names(Ab, beta, [("a1", "a1", [("a2", 1)])])
    H = abelian(["h"], [(0,)], beta)
    left = LeftAction.from_names(H.basis, Ab, field, [("h", "a1", [("a1", 1)]), ("h", "a2", [("a2", h_a2)])])
    return MatchedPair(A, H, left, RightAction.zero(H.basis, Ab, field))


def sl2_split(field=Q):
    return split_from_decomposition(sl2(field), ["e"], ["h", "f"])


def sl2_split_by_hand(field=Q, f_e=-1):
    """A = span{e}, H = span{h, f} with h |> e = 2e, f <| e = -h."""
    L = sl2(field)
    beta = L.beta
    A = abelian(["e"], [()], beta)
    Hb = GradedBasis.from_pairs(TRIVIAL, [("h", ()), ("f", ())])
    H = GradedLieAlgebra.from_names(Hb, beta, [("h", "f", [("f", -2)]), ("f", "h", [("f", 2)])])
    left = LeftAction.from_names(Hb, A.basis, field, [("h", "e", [("e", 2)])])
    right = RightAction.from_names(Hb, A.basis, field, [("f", "e", [("h", f_e)])])
    return MatchedPair(A, H, left, right)


def semidirect_1d(field=Q):
    beta = trivial_beta(TRIVIAL, field)
    A = abelian(["a"], [()], beta)
    H = abelian(["t"], [()], beta)
    left = LeftAction.from_names(H.basis, A.basis, field, [("t", "a", [("a", 1)])])
    return MatchedPair(A, H, left, RightAction.zero(H.basis, A.basis, field))


def bb3_failure(field=Q):
    """H = span{x, y} abelian with delta(x) = x (x) y - y (x) x, y |> a = a."""
    beta = trivial_beta(TRIVIAL, field)
    A = abelian(["a"], [()], beta)
    H = abelian(["x", "y"], [(), ()], beta)
    left = LeftAction.from_names(H.basis, A.basis, field, [("y", "a", [("a", 1)])])
    pair = MatchedPair(A, H, left, RightAction.zero(H.basis, A.basis, field))
    dH = CobracketTable.from_names(H.basis, field, [("x", [("x", "y", 1), ("y", "x", -1)])])
    return CobrackedPair(pair, CobracketTable.zero(A.basis, field), dH)


def color_beta():
    """Z3 x Z3 over F7, b(x, y) = 2^(x1 y2 - x2 y1)."""
    return bichar_from_exponents(Z3xZ3, F7(2), 3, [[0, 1], [-1, 0]])


def color_algebra():
    """Upper triangular 3x3 matrix units graded by Z3 x Z3 over F7."""
    g = {1: (0, 0), 2: (1, 0), 3: (0, 1)}
    idx = [(1, 1), (2, 2), (3, 3), (1, 2), (1, 3), (2, 3)]
    deg = lambda a, b: Z3xZ3.element(x - y for x, y in zip(g[a], g[b]))
    basis = GradedBasis.from_pairs(Z3xZ3, [(f"E{a}{b}", deg(a, b)) for a, b in idx])
    rows = []
    for a, b in idx:
        for c, d in idx:
            if b == c:
                rows.append((f"E{a}{b}", f"E{c}{d}", [(f"E{a}{d}", 1)]))
    product = BilinearTable.from_names(basis, basis, basis, F7, rows)
    unit = basis.vector(F7, [("E11", 1), ("E22", 1), ("E33", 1)])
    return GradedAlgebra(basis, product, unit)


def color_upper_triangular():
    """The color algebra as a Lie color algebra under the commutator."""
    return beta_commutator(color_algebra(), color_beta())


def color_pairs():
    L = color_upper_triangular()
    diag, strict = ["E11", "E22", "E33"], ["E12", "E13", "E23"]
    return [split_from_decomposition(L, strict, diag), split_from_decomposition(L, diag, strict)]


def color_sigma():
    """A non-symmetric bicharacter on Z3 x Z3, used as a cocycle."""
    return TwoCocycle.from_function(Z3xZ3, F7, lambda x, y: F7(2) ** (x[0] * y[1] % 3))


def sl2_bialgebra(field=Q, f_sign=1):
    """Standard cobracket ``delta(e) = e^h``, ``delta(f) = f^h``; ``f_sign=-1``
    flips ``delta(f)``, which keeps co-Jacobi but breaks compatibility."""
    L = sl2(field)
    delta = CobracketTable.from_names(L.basis, field, [
        ("e", [("e", "h", 1), ("h", "e", -1)]),
        ("f", [("f", "h", f_sign), ("h", "f", -f_sign)]),
    ])
    return L, delta


def sl2_split_bb1_failure(field=Q):
    """Split {e, h} | {f} with f <| h scaled from 2f to 6f: only BB1 fails."""
    p = split_from_decomposition(sl2(field), ["e", "h"], ["f"])
    right = RightAction(p.right.table.map_entries(lambda i, j, vec: {k: 3 * c for k, c in vec.items()}))
    return MatchedPair(p.A, p.H, p.left, right)


def sl2_split_bb2_failure(field=Q):
    """The hand-written split with the extra entry h <| e = h: only BB2 fails."""
    p = sl2_split_by_hand(field)
    right = RightAction.from_names(p.H.basis, p.A.basis, field,
                                   [("h", "e", [("h", 1)]), ("f", "e", [("h", -1)])])
    return MatchedPair(p.A, p.H, p.left, right)


def extended_bialgebra(field=Q):
    """A = the 2-dim bialgebra, H = span{t} with t |> X = X, zero cobracket on H."""
    L, delta = two_dim_bialgebra(field)
    H = abelian(["t"], [()], L.beta)
    left = LeftAction.from_names(H.basis, L.basis, field, [("t", "X", [("X", 1)])])
    pair = MatchedPair(L, H, left, RightAction.zero(H.basis, L.basis, field))
    return CobrackedPair(pair, delta, CobracketTable.zero(H.basis, field))


def zero_action_pair(A, H):
    F = A.field
    return MatchedPair(A, H, LeftAction.zero(H.basis, A.basis, F), RightAction.zero(H.basis, A.basis, F))


def zero_cobrackets(pair):
    F = pair.A.field
    return CobrackedPair(pair, CobracketTable.zero(pair.A.basis, F), CobracketTable.zero(pair.H.basis, F))


def transposed_cobracket(L):
    """``delta(e_k) = sum c_ij^k e_i (x) e_j``: co-Jacobi iff ``L`` is Jacobi (trivial grading)."""
    rows = {}
    for a, b, terms in L.bracket.rows():
        for k, c in terms:
            rows.setdefault(k, []).append((a, b, c))
    return CobracketTable.from_names(L.basis, L.field, list(rows.items()))
