"""Gauss decomposition T(u) = F(u)D(u)E(u), inverse-matrix entries
t'_{i,j}(u), composite root series, diagonal ratios h_i(u), and an
independent quasideterminant oracle.

Matrices of series are kept as nested dicts keyed by 1-based (row,
column).
"""

from __future__ import annotations

from .core import AlgebraContext
from .series import USeries


def t_series(ctx: AlgebraContext, i: int, j: int) -> USeries:
    """The generating series t[i,j](u) = delta_ij + sum_r t[i,j;r] u^-r."""
    return USeries(ctx, [ctx.t_entry(i, j, r) for r in range(ctx.N + 1)])


def t_matrix(ctx: AlgebraContext) -> dict:
    size = ctx.size
    return {
        i: {j: t_series(ctx, i, j) for j in range(1, size + 1)}
        for i in range(1, size + 1)
    }


def matrix_mul(A: dict, B: dict) -> dict:
    keys = sorted(A)
    out: dict = {}
    for i in keys:
        out[i] = {}
        for j in keys:
            acc = None
            for k in keys:
                term = A[i][k] * B[k][j]
                acc = term if acc is None else acc + term
            out[i][j] = acc
    return out


def identity_matrix(ctx, keys) -> dict:
    keys = list(keys)
    return {
        i: {j: USeries.constant(ctx, 1 if i == j else 0) for j in keys}
        for i in keys
    }


def matrix_inverse(M: dict) -> dict:
    """Two-sided inverse of a series matrix with unital diagonal, by
    noncommutative Gauss-Jordan elimination (left row operations)."""
    keys = sorted(M)
    A = {i: {j: M[i][j] for j in keys} for i in keys}
    ctx = A[keys[0]][keys[0]].ctx
    B = identity_matrix(ctx, keys)
    for k in keys:
        piv = A[k][k]
        if not piv.is_unital():
            raise ValueError(f"pivot at ({k},{k}) is not unital")
        pinv = piv.inverse()
        A[k] = {j: pinv * A[k][j] for j in keys}
        B[k] = {j: pinv * B[k][j] for j in keys}
        for i in keys:
            if i == k:
                continue
            c = A[i][k]
            if c.is_zero():
                continue
            A[i] = {j: A[i][j] - c * A[k][j] for j in keys}
            B[i] = {j: B[i][j] - c * B[k][j] for j in keys}
    return B


class GaussData:
    """Output of the Gauss decomposition of T(u), all series exact to
    order N: d_i, d_i', e_{i,j}, f_{j,i}, h_i, and the entries of
    T(u)^{-1}."""

    __slots__ = ("ctx", "d", "dprime", "e", "f", "h", "_tprime")

    def __init__(self, ctx, d, dprime, e, f, h):
        self.ctx = ctx
        self.d = d          # i -> USeries, unital
        self.dprime = dprime
        self.e = e          # (i, j), i < j -> USeries, no constant term
        self.f = f          # (j, i), i < j -> USeries
        self.h = h          # i -> USeries, constant term -(-1)^{|i|}
        self._tprime = None

    # -- simple root series --------------------------------------------------

    def e_simple(self, i: int) -> USeries:
        return self.e[(i, i + 1)]

    def f_simple(self, i: int) -> USeries:
        return self.f[(i + 1, i)]

    def e_matrix(self) -> dict:
        out = identity_matrix(self.ctx, range(1, self.ctx.size + 1))
        for (i, j), s in self.e.items():
            out[i][j] = s
        return out

    def f_matrix(self) -> dict:
        out = identity_matrix(self.ctx, range(1, self.ctx.size + 1))
        for (j, i), s in self.f.items():
            out[j][i] = s
        return out

    def d_matrix(self) -> dict:
        out = identity_matrix(self.ctx, range(1, self.ctx.size + 1))
        for i in range(1, self.ctx.size + 1):
            out[i][i] = self.d[i]
        return out

    def t_prime(self) -> dict:
        """T(u)^{-1} = E(u)^{-1} D(u)^{-1} F(u)^{-1}."""
        if self._tprime is None:
            size = self.ctx.size
            dinv = identity_matrix(self.ctx, range(1, size + 1))
            for i in range(1, size + 1):
                dinv[i][i] = self.dprime[i]
            einv = matrix_inverse(self.e_matrix())
            finv = matrix_inverse(self.f_matrix())
            self._tprime = matrix_mul(matrix_mul(einv, dinv), finv)
        return self._tprime


def gauss_decompose(ctx: AlgebraContext) -> GaussData:
    """Iterated noncommutative Schur complement down the diagonal:
    pivot d_k = current (k,k) entry, e_{k,j} = d_k^{-1} (k,j),
    f_{j,k} = (j,k) d_k^{-1}, then update the trailing block."""
    size = ctx.size
    A = t_matrix(ctx)
    d, dprime, e, f = {}, {}, {}, {}
    for k in range(1, size + 1):
        piv = A[k][k]
        d[k] = piv
        pinv = piv.inverse()
        dprime[k] = pinv
        for j in range(k + 1, size + 1):
            e[(k, j)] = pinv * A[k][j]
            f[(j, k)] = A[j][k] * pinv
        for i in range(k + 1, size + 1):
            for j in range(k + 1, size + 1):
                A[i][j] = A[i][j] - A[i][k] * pinv * A[k][j]
    h = {}
    for i in range(1, size):
        sign = -1 if ctx.index_parity(i) == 0 else 1
        h[i] = (d[i + 1] * dprime[i]).scale(sign)
    return GaussData(ctx, d, dprime, e, f, h)


def quasideterminant(M: dict, rows, cols, i: int, j: int) -> USeries:
    """|M|_{ij} = m_ij - (row i w/o j)(submatrix)^{-1}(column j w/o i)
    for a matrix given as a dict with explicit row/column label lists."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise ValueError("quasideterminant needs a square matrix")
    sub_rows = [r for r in rows if r != i]
    sub_cols = [c for c in cols if c != j]
    if not sub_rows:
        return M[i][j]
    # relabel columns by row position so the generic inverse applies;
    # subinv[a][b] is then (S^{-1})[column-at-position(a)][b]
    pos = {r: k for k, r in enumerate(sub_rows)}
    relab = {r: {r2: M[r][sub_cols[pos[r2]]] for r2 in sub_rows} for r in sub_rows}
    subinv = matrix_inverse(relab)
    acc = None
    for a in sub_rows:
        for b in sub_rows:
            term = M[i][sub_cols[pos[a]]] * subinv[a][b] * M[b][j]
            acc = term if acc is None else acc + term
    return M[i][j] - acc


def leading_minor_quasidet(ctx: AlgebraContext, k: int) -> USeries:
    """Boxed (k,k) quasideterminant of the k-by-k leading minor of T(u);
    independent oracle for d_k(u)."""
    rows = list(range(1, k + 1))
    M = {r: {c: t_series(ctx, r, c) for c in rows} for r in rows}
    return quasideterminant(M, rows, rows, k, k)


def e_quasidet(ctx: AlgebraContext, gd: GaussData, i: int, j: int) -> USeries:
    """Quasideterminant oracle for e_{i,j}(u)."""
    rows = list(range(1, i + 1))
    cols = list(range(1, i)) + [j]
    M = {r: {c: t_series(ctx, r, c) for c in cols} for r in rows}
    return gd.dprime[i] * quasideterminant(M, rows, cols, i, j)


def f_quasidet(ctx: AlgebraContext, gd: GaussData, j: int, i: int) -> USeries:
    """Quasideterminant oracle for f_{j,i}(u)."""
    rows = list(range(1, i)) + [j]
    cols = list(range(1, i + 1))
    M = {r: {c: t_series(ctx, r, c) for c in cols} for r in rows}
    return quasideterminant(M, rows, cols, j, i) * gd.dprime[i]


def composite_root_series(gd: GaussData, i: int, j: int):
    """(e_{i,j}(u), f_{j,i}(u)) from the bracket recursion
    e_{i,j}^{(r)} = (-1)^{|j-1|}[e_{i,j-1}^{(r)}, e_{j-1}^{(1)}],
    f_{j,i}^{(r)} = (-1)^{|j-1|}[f_{j-1}^{(1)}, f_{j-1,i}^{(r)}]."""
    ctx = gd.ctx
    if not (1 <= i < j <= ctx.size and j > i + 1):
        raise ValueError(f"need 1 <= i, i+1 < j <= {ctx.size}, got ({i},{j})")
    if j - 1 == i + 1:
        e_prev, f_prev = gd.e_simple(i), gd.f_simple(i)
    else:
        e_prev, f_prev = composite_root_series(gd, i, j - 1)
    sign = 1 if ctx.index_parity(j - 1) == 0 else -1
    e1 = gd.e_simple(j - 1)[1]
    f1 = gd.f_simple(j - 1)[1]
    e_coeffs = [ctx.zero()]
    f_coeffs = [ctx.zero()]
    for r in range(1, ctx.N + 1):
        e_coeffs.append(e_prev[r].supercommutator(e1).scale(sign))
        f_coeffs.append(f1.supercommutator(f_prev[r]).scale(sign))
    return USeries(ctx, e_coeffs), USeries(ctx, f_coeffs)


def cartan_entry(ctx: AlgebraContext, i: int, j: int) -> int:
    """Cartan matrix entry a_{i,j} of sl_{m|n}, reduced mod p."""
    si = -1 if ctx.index_parity(i) else 1
    si1 = -1 if ctx.index_parity(i + 1) else 1
    val = si * ((1 if i == j else 0) - (1 if i == j + 1 else 0)) - si1 * (
        (1 if i + 1 == j else 0) - (1 if i + 1 == j + 1 else 0)
    )
    return val % ctx.p


def kappa_xi(gd: GaussData, i: int):
    """(kappa_i(u), xi_i^+(u), xi_i^-(u)): the half-shifted Cartan-type
    generators; requires p odd.  Coefficient index s sits at order s+1."""
    ctx = gd.ctx
    if ctx.p == 2:
        raise ValueError("half-integer shifts require p odd")
    inv2 = pow(2, ctx.p - 2, ctx.p)
    sign = -1 if ctx.index_parity(i) else 1
    c = sign * (i - ctx.m) * inv2 % ctx.p
    kappa = gd.h[i].shift(c) + USeries.constant(ctx, sign)
    xi_p = gd.e_simple(i).shift(c)
    xi_m = gd.f_simple(i).shift(c)
    return kappa, xi_p, xi_m
