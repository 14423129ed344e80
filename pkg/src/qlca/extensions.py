"""One-dimensional central extensions of quadratic Lie conformal algebras.

Two independent solvers are shipped and cross-checked:

* ``solve_extensions_theorem`` solves the closed equation system on the
  four bilinear forms α_0..α_3 (valid whenever the λ-degree of cocycles is
  forced to be ≤ 3, e.g. when the Novikov part is spanned by products);
* ``solve_extensions_direct`` expands the cocycle functional equation with
  a degree-N ansatz and collects every λ^p μ^q coefficient. It acts as the
  brute-force oracle for the first method and also detects unbounded
  per-degree families.

The induced 2-cocycles of the coefficient Lie algebra (modes a⊗t^m) are
computed and verified exactly as well.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .gd import GDBialgebra
from .poly import LAM, FormalPoly, RatMatrix, ZERO, nullspace_basis, span_rank

MAX_CLOSED_DEGREE = 3  # λ-degree bound of the closed-form system


@dataclass(frozen=True)
class CocycleQuadruple:
    """The four bilinear forms of a λ-degree ≤ 3 cocycle, as n×n rational
    matrices; alpha[k][i][j] is the λ^k form evaluated at (a_i, a_j)."""

    alpha: tuple  # 4 × n × n nested tuples of Fraction

    @classmethod
    def from_vector(cls, n, vec):
        """Unpack a flat vector indexed by (k, i, j)."""
        mats = []
        for k in range(4):
            mat = []
            for i in range(n):
                row = []
                for j in range(n):
                    row.append(vec[(k * n + i) * n + j])
                mat.append(tuple(row))
            mats.append(tuple(mat))
        return cls(tuple(mats))

    @classmethod
    def zero(cls, n):
        z = tuple(tuple([ZERO] * n) for _ in range(n))
        return cls((z, z, z, z))

    @classmethod
    def single(cls, n, k, i, j, value=1, symmetrize=True):
        """Quadruple with α_k(a_i, a_j) = value; by default the pair entry
        is filled in with the parity sign (-1)^{k+1}."""
        value = Fraction(value)
        mats = [[[ZERO] * n for _ in range(n)] for _ in range(4)]
        mats[k][i][j] = value
        if symmetrize and (i, j) != (j, i):
            mats[k][j][i] = value if k % 2 else -value
        return cls(tuple(tuple(tuple(r) for r in m) for m in mats))

    def dim(self):
        return len(self.alpha[0])

    def form(self, k, x, y):
        """α_k extended bilinearly to coordinate vectors."""
        total = ZERO
        mat = self.alpha[k]
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    total += xi * yj * mat[i][j]
        return total

    def lambda_poly(self, i, j):
        """Σ_k λ^k α_k(a_i, a_j) as a FormalPoly."""
        out = FormalPoly.zero()
        for k in range(4):
            c = self.alpha[k][i][j]
            if c:
                out = out + FormalPoly.sym(LAM, k, c)
        return out

    def as_vector(self):
        n = self.dim()
        return tuple(
            self.alpha[k][i][j]
            for k in range(4)
            for i in range(n)
            for j in range(n)
        )

    def is_zero(self):
        return not any(self.as_vector())


@dataclass(frozen=True)
class CocycleSpace:
    algebra: GDBialgebra
    basis: tuple  # CocycleQuadruples
    method: str  # "theorem-system" | "direct-expansion"
    degree_probe: int = MAX_CLOSED_DEGREE
    stable: bool = True
    per_degree: tuple = ()  # dims of the degree-k projections, k = 0..probe
    warnings: tuple = ()

    @property
    def dimension(self):
        return len(self.basis)


# ---------------------------------------------------------------------
# Closed system on α_0..α_3
# ---------------------------------------------------------------------


def _bilinear_terms(eq, sign, k, x, y, n, unknown):
    """Accumulate sign * α_k(x, y) into equation dict ``eq`` where x, y
    are coordinate vectors and unknowns are indexed by ``unknown``."""
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if not yj:
                continue
            u = unknown(k, i, j)
            s = eq.get(u, ZERO) + sign * xi * yj
            if s:
                eq[u] = s
            else:
                eq.pop(u, None)


def solve_extensions_theorem(A: GDBialgebra) -> CocycleSpace:
    """Nullspace of the closed equation system on the 4n² unknowns
    α_k(a_i, a_j), instantiated at all basis triples."""
    n = A.dim
    e = [A.basis_elem(i) for i in range(n)]

    def unknown(k, i, j):
        return (k * n + i) * n + j

    rows = []

    # parity: α_k(a,b) - (-1)^{k+1} α_k(b,a) = 0
    for k in range(4):
        sign = Fraction(-1) if k % 2 else Fraction(1)  # -(-1)^{k+1}
        for i in range(n):
            for j in range(n):
                eq = {}
                u1, u2 = unknown(k, i, j), unknown(k, j, i)
                eq[u1] = eq.get(u1, ZERO) + 1
                eq[u2] = eq.get(u2, ZERO) + sign
                rows.append({u: v for u, v in eq.items() if v})

    circ, star, br = A.circ, A.star, A.bracket
    for ia in range(n):
        for ib in range(n):
            for ic in range(n):
                a, b, c = e[ia], e[ib], e[ic]
                ab, ba = circ(a, b), circ(b, a)
                cb, ca = circ(c, b), circ(c, a)
                bc_star = star(b, c)
                lcb, lba = br(c, b), br(b, a)

                # α_3(a, c∘b) = α_3(a∘b, c) and α_3(a∘b, c) = α_3(b∘a, c)
                eq = {}
                _bilinear_terms(eq, 1, 3, a, cb, n, unknown)
                _bilinear_terms(eq, -1, 3, ab, c, n, unknown)
                rows.append(eq)
                eq = {}
                _bilinear_terms(eq, 1, 3, ab, c, n, unknown)
                _bilinear_terms(eq, -1, 3, ba, c, n, unknown)
                rows.append(eq)

                # α_2(a, c∘b) + α_3(a, [c,b]) = α_2(a∘b, c) + α_3([b,a], c)
                eq = {}
                _bilinear_terms(eq, 1, 2, a, cb, n, unknown)
                _bilinear_terms(eq, 1, 3, a, lcb, n, unknown)
                _bilinear_terms(eq, -1, 2, ab, c, n, unknown)
                _bilinear_terms(eq, -1, 3, lba, c, n, unknown)
                rows.append(eq)

                # α_2(a, b∗c) + α_2(b∘a, c) = 2α_2(a∘b, c) + 3α_3([b,a], c)
                eq = {}
                _bilinear_terms(eq, 1, 2, a, bc_star, n, unknown)
                _bilinear_terms(eq, 1, 2, ba, c, n, unknown)
                _bilinear_terms(eq, -2, 2, ab, c, n, unknown)
                _bilinear_terms(eq, -3, 3, lba, c, n, unknown)
                rows.append(eq)

                # α_1(a, c∘b) + α_2(a, [c,b]) = α_1(a∘b, c) + α_2([b,a], c)
                eq = {}
                _bilinear_terms(eq, 1, 1, a, cb, n, unknown)
                _bilinear_terms(eq, 1, 2, a, lcb, n, unknown)
                _bilinear_terms(eq, -1, 1, ab, c, n, unknown)
                _bilinear_terms(eq, -1, 2, lba, c, n, unknown)
                rows.append(eq)

                # α_1(a, b∗c) - α_1(b, a∗c)
                #   = -α_1(b∘a, c) + α_1(a∘b, c) + 2α_2([b,a], c)
                eq = {}
                _bilinear_terms(eq, 1, 1, a, bc_star, n, unknown)
                _bilinear_terms(eq, -1, 1, b, star(a, c), n, unknown)
                _bilinear_terms(eq, 1, 1, ba, c, n, unknown)
                _bilinear_terms(eq, -1, 1, ab, c, n, unknown)
                _bilinear_terms(eq, -2, 2, lba, c, n, unknown)
                rows.append(eq)

                # α_0(a, c∘b) + α_1(a, [c,b]) - α_0(b, a∗c)
                #   = α_0(a∘b, c) + α_1([b,a], c)
                eq = {}
                _bilinear_terms(eq, 1, 0, a, cb, n, unknown)
                _bilinear_terms(eq, 1, 1, a, lcb, n, unknown)
                _bilinear_terms(eq, -1, 0, b, star(a, c), n, unknown)
                _bilinear_terms(eq, -1, 0, ab, c, n, unknown)
                _bilinear_terms(eq, -1, 1, lba, c, n, unknown)
                rows.append(eq)

                # α_0(a, [c,b]) - α_0(b, [c,a]) = α_0([b,a], c)
                eq = {}
                _bilinear_terms(eq, 1, 0, a, lcb, n, unknown)
                _bilinear_terms(eq, -1, 0, b, br(c, a), n, unknown)
                _bilinear_terms(eq, -1, 0, lba, c, n, unknown)
                rows.append(eq)

    m = RatMatrix.from_rows((r for r in rows if r), 4 * n * n)
    basis = tuple(
        CocycleQuadruple.from_vector(n, v) for v in nullspace_basis(m)
    )
    per_degree = _per_degree_profile(basis, n, MAX_CLOSED_DEGREE)
    return CocycleSpace(A, basis, "theorem-system", MAX_CLOSED_DEGREE, True, per_degree)


# ---------------------------------------------------------------------
# Direct expansion of the functional equation
# ---------------------------------------------------------------------


def _direct_rows(A, N):
    """Rows of the linear system obtained by expanding skew-symmetry and
    the cocycle functional equation with ansatz α_λ = Σ_{i<=N} λ^i α_i."""
    n = A.dim
    e = [A.basis_elem(i) for i in range(n)]

    def unknown(i, p, q):
        return (i * n + p) * n + q

    rows = {}  # (triple-tag, λ-pow, μ-pow) -> {unknown: coeff}

    def add(tag, lpow, mpow, sign, i, x, y):
        eq = rows.setdefault((tag, lpow, mpow), {})
        for p, xp in enumerate(x):
            if not xp:
                continue
            for q, yq in enumerate(y):
                if not yq:
                    continue
                u = unknown(i, p, q)
                s = eq.get(u, ZERO) + sign * xp * yq
                if s:
                    eq[u] = s
                else:
                    eq.pop(u, None)

    # skew: λ^i coefficient of α_λ(a,b) + α_{-λ}(b,a)
    for p in range(n):
        for q in range(n):
            for i in range(N + 1):
                add(("skew", p, q), i, 0, Fraction(1), i, e[p], e[q])
                add(("skew", p, q), i, 0, Fraction((-1) ** i), i, e[q], e[p])

    from math import comb

    circ, star, br = A.circ, A.star, A.bracket
    for ia in range(n):
        for ib in range(n):
            for ic in range(n):
                tag = ("fe", ia, ib, ic)
                a, b, c = e[ia], e[ib], e[ic]
                for i in range(N + 1):
                    # λ·α_λ(a, c∘b): λ^{i+1}
                    add(tag, i + 1, 0, Fraction(1), i, a, circ(c, b))
                    # μ·α_λ(a, b∗c): λ^i μ
                    add(tag, i, 1, Fraction(1), i, a, star(b, c))
                    # α_λ(a, [c,b]): λ^i
                    add(tag, i, 0, Fraction(1), i, a, br(c, b))
                    # -μ·α_μ(b, c∘a): μ^{i+1}
                    add(tag, 0, i + 1, Fraction(-1), i, b, circ(c, a))
                    # -λ·α_μ(b, a∗c): λ μ^i
                    add(tag, 1, i, Fraction(-1), i, b, star(a, c))
                    # -α_μ(b, [c,a]): μ^i
                    add(tag, 0, i, Fraction(-1), i, b, br(c, a))
                    # RHS, subtracted:
                    # (-λ-μ)·α_{λ+μ}(b∘a, c) = -(λ+μ)^{i+1} α_i(b∘a, c)
                    for s in range(i + 2):
                        add(tag, s, i + 1 - s, Fraction(comb(i + 1, s)), i,
                            circ(b, a), c)
                    # λ·α_{λ+μ}(a∗b, c)
                    for s in range(i + 1):
                        add(tag, s + 1, i - s, Fraction(-comb(i, s)), i,
                            star(a, b), c)
                    # α_{λ+μ}([b,a], c)
                    for s in range(i + 1):
                        add(tag, s, i - s, Fraction(-comb(i, s)), i,
                            br(b, a), c)
    return [r for r in rows.values() if r], unknown


def _direct_nullspace(A, N, restrict_deg3=False):
    n = A.dim
    rows, unknown = _direct_rows(A, N)
    if restrict_deg3:
        for i in range(4, N + 1):
            for p in range(n):
                for q in range(n):
                    rows.append({unknown(i, p, q): Fraction(1)})
    m = RatMatrix.from_rows(rows, (N + 1) * n * n)
    return nullspace_basis(m)


def _per_degree_profile(basis, n, maxdeg):
    """Rank of the degree-k projection of the solution span, k = 0..maxdeg.
    Basis entries may be CocycleQuadruples or flat (deg, i, j) vectors."""
    dims = []
    for k in range(maxdeg + 1):
        mats = []
        for b in basis:
            if isinstance(b, CocycleQuadruple):
                flat = (
                    [b.alpha[k][i][j] for i in range(n) for j in range(n)]
                    if k < 4
                    else [ZERO] * (n * n)
                )
            else:
                flat = list(b[k * n * n : (k + 1) * n * n])
            mats.append(tuple(flat))
        dims.append(span_rank(mats) if mats else 0)
    return tuple(dims)


def solve_extensions_direct(A: GDBialgebra, degree_bound: int = 6) -> CocycleSpace:
    """Brute-force cocycle solver with explicit λ-degree ansatz.

    Solves at ``degree_bound`` and again at ``degree_bound + 1``; if the
    dimensions differ the per-degree family is unbounded and the result
    carries an "unbounded family" warning. The returned quadruple basis is
    the (always well-defined) subspace of solutions supported in degrees
    ≤ 3.
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be non-negative")
    n = A.dim
    N = degree_bound
    sols = _direct_nullspace(A, N)
    probe = _direct_nullspace(A, N + 1)
    stable = len(probe) == len(sols)
    warnings = ()
    if not stable:
        warnings = (
            "unbounded family: cocycle space keeps growing with the "
            f"λ-degree bound (dim {len(sols)} at N={N}, {len(probe)} at N={N + 1})",
        )
    deg3 = _direct_nullspace(A, max(N, MAX_CLOSED_DEGREE), restrict_deg3=True)
    basis = tuple(CocycleQuadruple.from_vector(n, v) for v in deg3)
    per_degree = _per_degree_profile(sols, n, N)
    return CocycleSpace(A, basis, "direct-expansion", N, stable, per_degree, warnings)


# ---------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------


def verify_cocycle(A: GDBialgebra, q: CocycleQuadruple):
    """Residual report of skew-symmetry and the functional equation for a
    concrete quadruple; empty iff q is a genuine cocycle."""
    n = A.dim
    e = [A.basis_elem(i) for i in range(n)]
    out = []

    def alpha(k, x, y):
        return q.form(k, x, y)

    # skew: α_i(a,b) + (-1)^i α_i(b,a) = 0
    for p in range(n):
        for r in range(n):
            for i in range(4):
                res = alpha(i, e[p], e[r]) + (-1) ** i * alpha(i, e[r], e[p])
                if res:
                    out.append(("skew", (p, r), i, res))

    from math import comb

    circ, star, br = A.circ, A.star, A.bracket
    for ia in range(n):
        for ib in range(n):
            for ic in range(n):
                a, b, c = e[ia], e[ib], e[ic]
                acc = {}  # (λ-pow, μ-pow) -> Fraction

                def put(lp, mp, v):
                    if v:
                        acc[lp, mp] = acc.get((lp, mp), ZERO) + v

                for i in range(4):
                    put(i + 1, 0, alpha(i, a, circ(c, b)))
                    put(i, 1, alpha(i, a, star(b, c)))
                    put(i, 0, alpha(i, a, br(c, b)))
                    put(0, i + 1, -alpha(i, b, circ(c, a)))
                    put(1, i, -alpha(i, b, star(a, c)))
                    put(0, i, -alpha(i, b, br(c, a)))
                    v = alpha(i, circ(b, a), c)
                    for s in range(i + 2):
                        put(s, i + 1 - s, comb(i + 1, s) * v)
                    v = alpha(i, star(a, b), c)
                    for s in range(i + 1):
                        put(s + 1, i - s, -comb(i, s) * v)
                    v = alpha(i, br(b, a), c)
                    for s in range(i + 1):
                        put(s, i - s, -comb(i, s) * v)
                for (lp, mp), v in sorted(acc.items()):
                    if v:
                        out.append(("functional", (ia, ib, ic), (lp, mp), v))
    return out


def extended_bracket(A: GDBialgebra, q: CocycleQuadruple, i: int, j: int):
    """(module part, central part) of the extended bracket on basis
    generators: the plain λ-bracket plus Σ_k λ^k α_k(a_i, a_j)·𝔠."""
    from .conformal import QuadraticLCA, bracket_basis

    R = QuadraticLCA(A)
    return bracket_basis(R, i, j), q.lambda_poly(i, j)


# ---------------------------------------------------------------------
# Coefficient (mode) algebra
# ---------------------------------------------------------------------


def coeff_bracket(A: GDBialgebra, q: CocycleQuadruple, gen1, gen2):
    """Bracket of modes [a_i ⊗ t^m, a_j ⊗ t^n] in the centrally extended
    coefficient algebra.

    Returns (terms, central) where terms maps (basis index, mode index) to
    a Fraction and central is the rational coefficient of the center.
    The module part is [a_i, a_j]-reversed at mode m+n plus the two
    Novikov shifts; the central part collects the four mode cocycles
    π_0..π_3.
    """
    (i, m) = gen1
    (j, n_mode) = gen2
    terms = {}

    def put(k, mode, v):
        if v:
            key = (k, mode)
            s = terms.get(key, ZERO) + v
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)

    # a_(0)b = ∂(b∘a) + [b,a] contributes [b,a]_{m+n} - (m+n)(b∘a)_{m+n-1};
    # a_(1)b = a∗b contributes m(a∗b)_{m+n-1}; together:
    # [b,a]_{m+n} + m(a∘b)_{m+n-1} - n(b∘a)_{m+n-1}
    lie_ji = A.lie[j][i]
    ij = A.novikov[i][j]
    ji = A.novikov[j][i]
    for k in range(A.dim):
        put(k, m + n_mode, lie_ji[k])
        put(k, m + n_mode - 1, m * ij[k] - n_mode * ji[k])

    central = ZERO
    if m + n_mode + 1 == 0:
        central += q.alpha[0][i][j]
    if m + n_mode == 0:
        central += m * q.alpha[1][i][j]
    if m + n_mode - 1 == 0:
        central += m * (m - 1) * q.alpha[2][i][j]
    if m + n_mode - 2 == 0:
        central += m * (m - 1) * (m - 2) * q.alpha[3][i][j]
    return terms, central


def _mode_cocycle(A, q, gen1, gen2):
    """π(x, y): the central part only."""
    (i, m) = gen1
    (j, n_mode) = gen2
    s = m + n_mode
    if -1 <= s <= 2:
        return coeff_bracket(A, q, gen1, gen2)[1]
    return ZERO


def check_coeff_cocycle(A: GDBialgebra, q: CocycleQuadruple, window: int,
                        samples: int | None = None, seed: int = 0):
    """Verify antisymmetry and the Lie 2-cocycle identity of the induced
    mode cocycle on generators a_i ⊗ t^m with |m| ≤ window.

    Runs exhaustively when ``samples`` is None or at least the number of
    generator triples; otherwise checks ``samples`` seeded random triples.
    Exact equality required; returns the list of failures.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    n = A.dim
    modes = range(-window, window + 1)
    gens = [(i, m) for i in range(n) for m in modes]
    total = len(gens) ** 3
    out = []

    alpha = q.alpha

    def pi(i, m, j, s):
        """Central pairing of (a_i ⊗ t^m) with a generator at total mode
        s = m + n, inlined for speed."""
        if s == -1:
            return alpha[0][i][j]
        if s == 0:
            return m * alpha[1][i][j]
        if s == 1:
            return m * (m - 1) * alpha[2][i][j]
        if s == 2:
            return m * (m - 1) * (m - 2) * alpha[3][i][j]
        return ZERO

    # antisymmetry of π on generator pairs (cheap, always exhaustive)
    for (i, m) in gens:
        for (j, nn) in gens:
            r = pi(i, m, j, m + nn) + pi(j, nn, i, m + nn)
            if r:
                out.append(("antisymmetry", (i, m), (j, nn), r))

    # per-pair module structure of the mode bracket, precomputed once:
    # [a_i⊗t^m, a_j⊗t^n] = Σ_k lie_c·(k, m+n) + (m·c_ij - n·c_ji)·(k, m+n-1)
    pair_terms = [
        [
            [
                (k, A.lie[j][i][k], A.novikov[i][j][k], A.novikov[j][i][k])
                for k in range(n)
                if A.lie[j][i][k] or A.novikov[i][j][k] or A.novikov[j][i][k]
            ]
            for j in range(n)
        ]
        for i in range(n)
    ]

    def cocycle_residual(x, y, z):
        res = ZERO
        for (iu, mu), (iv, mv), (iw, mw) in ((x, y, z), (y, z, x), (z, x, y)):
            base = mu + mv
            s0 = base + mw
            for k, lie_c, cij, cji in pair_terms[iu][iv]:
                if lie_c and -1 <= s0 <= 2:
                    res += lie_c * pi(k, base, iw, s0)
                if -1 <= s0 - 1 <= 2:
                    c = mu * cij - mv * cji
                    if c:
                        res += c * pi(k, base - 1, iw, s0 - 1)
        return res

    if samples is None or samples >= total:
        triples = (
            (x, y, z) for x in gens for y in gens for z in gens
        )
    else:
        rng = random.Random(seed)
        triples = (
            (rng.choice(gens), rng.choice(gens), rng.choice(gens))
            for _ in range(samples)
        )
    for x, y, z in triples:
        r = cocycle_residual(x, y, z)
        if r:
            out.append(("cocycle", x, y, z, r))
    return out


def coeff_relation_consistency(A: GDBialgebra, window: int,
                               q: CocycleQuadruple | None = None):
    """Recompute mode brackets from first principles and compare with the
    closed form of coeff_bracket, for all |m|, |n| ≤ window.

    The independent route reads the λ-expansion coefficients a_(0)b and
    a_(1)b off the λ-bracket on generators, applies the binomial mode
    formula, and reduces (∂x)_k = -k x_{k-1}. With a quadruple given, the
    central contributions are also derived independently from the falling
    factorials of the mode index.
    """
    from .conformal import QuadraticLCA, bracket_basis

    if q is None:
        q = CocycleQuadruple.zero(A.dim)
    R = QuadraticLCA(A)
    n = A.dim
    out = []
    for i in range(n):
        for j in range(n):
            expr = bracket_basis(R, i, j)
            # split coords of [a_i λ a_j] into λ-degree 0/1 and ∂-degree 0/1
            for m in range(-window, window + 1):
                for nn in range(-window, window + 1):
                    expected = {}
                    for k, pol in enumerate(expr):
                        for (ed, el, em), c in pol.terms.items():
                            mode = m + nn
                            if el == 0:
                                coeff = c
                            elif el == 1:
                                coeff = m * c
                                mode -= 1
                            else:
                                raise AssertionError("quadratic bracket has λ-degree ≤ 1")
                            if ed == 1:
                                coeff = -mode * coeff
                                mode -= 1
                            elif ed > 1:
                                raise AssertionError("quadratic bracket has ∂-degree ≤ 1")
                            if coeff:
                                key = (k, mode)
                                s = expected.get(key, ZERO) + coeff
                                if s:
                                    expected[key] = s
                                else:
                                    expected.pop(key, None)
                    # central part: Σ_p m(m-1)…(m-p+1) α_p δ_{m+n-p+1,0}
                    central = ZERO
                    for p in range(4):
                        if m + nn - p + 1 == 0:
                            fall = 1
                            for t in range(p):
                                fall *= m - t
                            central += fall * q.alpha[p][i][j]
                    got_terms, got_central = coeff_bracket(A, q, (i, m), (j, nn))
                    if got_terms != expected or got_central != central:
                        out.append(((i, m), (j, nn), expected, central,
                                    got_terms, got_central))
    return out
