"""Truncated enveloping algebra of the current superalgebra
gl_{m|n}[x]: Lie bracket, PBW straightening, restricted p-map,
p-center generators, the central elements z_r, the top-graded map from
the RTT algebra, and a brute-force symmetric-invariant checker.

Loop powers are truncated at L = N - 1 (the quotient by x^{N} g), so
that the loop grading here matches the loop filtration of the RTT
algebra under superscript r <-> loop power r - 1.
"""

from __future__ import annotations

from bisect import bisect_left
from itertools import combinations_with_replacement
from math import comb

from .linalg import kernel_mod_p
from .pbw import PBWContext, PBWElement, RSTRIDE


class CurrentElement(PBWElement):
    """F_p-linear combination of ordered supermonomials in e_{i,j}x^r."""

    def serialize(self):
        out = []
        dec = self.ctx.decode
        for w in sorted(self.terms):
            runs = []
            idx = 0
            while idx < len(w):
                run = 1
                while idx + run < len(w) and w[idx + run] == w[idx]:
                    run += 1
                i, j, r = dec(w[idx])
                runs.append([i, j, r, run])
                idx += run
            out.append([runs, self.terms[w]])
        return out


class CurrentContext(PBWContext):
    """U(gl_{m|n}[x] / x^N gl_{m|n}[x]) over F_p."""

    kind = "current"

    def __init__(self, m: int, n: int, p: int, N: int):
        if N < 1:
            raise ValueError(f"truncation order must be >= 1, got {N}")
        super().__init__(m, n, p)
        self.N = N
        self.L = N - 1  # max loop power
        self.element_class = CurrentElement

    def _key(self):
        return (self.kind, self.m, self.n, self.p, self.N)

    def min_superscript(self) -> int:
        return 0

    def gen_loop_degree(self, code: int) -> int:
        return code % RSTRIDE

    def gen_symbol(self, code: int) -> str:
        i, j, r = self.decode(code)
        return f"e[{i},{j}]" + ("" if r == 0 else f"x^{r}" if r > 1 else "x")

    def deserialize(self, data) -> CurrentElement:
        terms = {}
        for runs, coeff in data:
            word = []
            for i, j, r, exp in runs:
                word.extend([self.encode(i, j, r)] * exp)
            terms[tuple(word)] = coeff % self.p
        return CurrentElement(self, {w: c for w, c in terms.items() if c})

    def _bracket_gens(self, g1: int, g2: int) -> dict:
        """[e_{i,j}x^r, e_{k,l}x^s] with loop powers past L dropped."""
        i, j, r = self.decode(g1)
        k, l, s = self.decode(g2)
        if r + s > self.L:
            return {}
        res: dict = {}
        if k == j:
            res[(self.encode(i, l, r + s),)] = 1
        if l == i:
            sign = -1 if (self.gen_parity(g1) & self.gen_parity(g2)) else 1
            code = (self.encode(k, j, r + s),)
            c = (res.get(code, 0) - sign) % self.p
            if c:
                res[code] = c
            else:
                res.pop(code, None)
        return res

    def generator(self, i: int, j: int, r: int) -> CurrentElement:
        if not (0 <= r <= self.L):
            raise ValueError(f"loop power {r} outside 0..{self.L}")
        return CurrentElement(self, {(self.encode(i, j, r),): 1})

    def basis_generators(self, max_r: int | None = None):
        if max_r is None:
            max_r = self.L
        for i in range(1, self.size + 1):
            for j in range(1, self.size + 1):
                for r in range(max_r + 1):
                    yield self.generator(i, j, r)


def current_bracket(ctx: CurrentContext, a, b) -> CurrentElement:
    """Bracket of two basis generators given as (i, j, r) triples;
    raises on loop-degree overflow past the truncation."""
    (i, j, r), (k, l, s) = a, b
    if r + s > ctx.L:
        raise ValueError(
            f"loop degree {r}+{s} exceeds the truncation bound {ctx.L}")
    return CurrentElement(
        ctx, dict(ctx.bracket_gens(ctx.encode(i, j, r), ctx.encode(k, l, s))))


def z_element(ctx: CurrentContext, r: int) -> CurrentElement:
    """z_r = sum_i e_{i,i}x^r."""
    acc = ctx.zero()
    for i in range(1, ctx.size + 1):
        acc = acc + ctx.generator(i, i, r)
    return acc


def p_map(ctx: CurrentContext, i: int, j: int, r: int) -> CurrentElement:
    """(e_{i,j}x^r)^[p] = delta_ij e_{i,i}x^{rp} (p-th matrix power)."""
    if (ctx.index_parity(i) + ctx.index_parity(j)) % 2:
        raise ValueError(f"p-map is defined on even elements only, got ({i},{j})")
    if i != j:
        return ctx.zero()
    if r * ctx.p > ctx.L:
        raise ValueError(
            f"loop power {r * ctx.p} exceeds the truncation bound {ctx.L}")
    return ctx.generator(i, i, r * ctx.p)


def p_center_gen(ctx: CurrentContext, i: int, j: int, r: int) -> CurrentElement:
    """(e_{i,j}x^r)^p - delta_ij e_{i,i}x^{rp}."""
    return ctx.generator(i, j, r) ** ctx.p - p_map(ctx, i, j, r)


def top_graded(el, cur_ctx: CurrentContext, degree: int | None = None):
    """Image of an RTT-algebra element in the associated graded of the
    loop filtration, realized inside U(gl_{m|n}[x]): keep the words of
    top (or given) loop degree and map t[i,j;r] -> (-1)^{|i|} e_{i,j}x^{r-1}
    factorwise."""
    if degree is None:
        degree = el.loop_degree()
        if degree is None:
            return cur_ctx.zero()
    ctx = el.ctx
    acc = cur_ctx.zero()
    for w, c in el.terms.items():
        if ctx.word_loop_degree(w) != degree:
            continue
        term = cur_ctx.scalar(c)
        for g in w:
            i, j, r = ctx.decode(g)
            sign = -1 if ctx.index_parity(i) else 1
            term = term * cur_ctx.generator(i, j, r - 1).scale(sign)
        acc = acc + term
    return acc


# -- symmetric invariants ------------------------------------------------


def _sym_monomials(ctx: CurrentContext, d: int, L: int):
    """Sorted code tuples of degree-d supersymmetric monomials with
    loop powers <= L (odd generators squarefree)."""
    gens = sorted(
        ctx.encode(i, j, r)
        for i in range(1, ctx.size + 1)
        for j in range(1, ctx.size + 1)
        for r in range(L + 1)
    )
    out = []
    for combo in combinations_with_replacement(gens, d):
        ok = True
        for t in range(1, d):
            if combo[t] == combo[t - 1] and ctx.gen_parity(combo[t]):
                ok = False
                break
        if ok:
            out.append(combo)
    return out


def _diag_weight(ctx: CurrentContext, mono, i: int) -> int:
    """Eigenvalue of ad(e_{i,i}x^0) on a supersymmetric monomial."""
    w = 0
    for g in mono:
        gi, gj, _ = ctx.decode(g)
        w += (1 if gi == i else 0) - (1 if gj == i else 0)
    return w % ctx.p


def _ad_on_monomial(ctx: CurrentContext, a_code: int, mono) -> dict:
    """ad(e_{k,l}x^s) on a supersymmetric monomial (untruncated loop
    powers); returns monomial -> coefficient."""
    p = ctx.p
    k, l, s = ctx.decode(a_code)
    apar = ctx.gen_parity(a_code)
    out: dict = {}
    pre_par = 0
    for t, g in enumerate(mono):
        i, j, r = ctx.decode(g)
        gpar = ctx.gen_parity(g)
        sign0 = -1 if (apar & pre_par) else 1
        # [e_{k,l}x^s, e_{i,j}x^r]
        br = []
        if i == l:
            br.append((ctx.encode(k, j, s + r), 1))
        if k == j:
            sg = -1 if (apar & gpar) else 1
            br.append((ctx.encode(i, l, s + r), -sg))
        rest = mono[:t] + mono[t + 1:]
        for b, c in br:
            idx = bisect_left(rest, b)
            bpar = ctx.gen_parity(b)
            if bpar and idx < len(rest) and rest[idx] == b:
                continue  # odd square vanishes in S(g)
            if idx < t:
                crossed = rest[idx:t]
            else:
                crossed = rest[t:idx]
            odd_crossed = sum(ctx.gen_parity(x) for x in crossed) & 1
            sign1 = -1 if (bpar and odd_crossed) else 1
            new = rest[:idx] + (b,) + rest[idx:]
            cc = (out.get(new, 0) + sign0 * sign1 * c) % p
            if cc:
                out[new] = cc
            else:
                out.pop(new, None)
        pre_par ^= gpar
    return out


def invariant_dimension(ctx: CurrentContext, d: int, L: int,
                        op_loop_bound: int | None = None):
    """Dimension of the g-invariants in the degree-d part of S(g)
    restricted to loop powers <= L, by exact kernel computation over
    F_p against the adjoint operators ad(e_{k,l}x^s), s <= L + 1.
    Returns (dimension, kernel basis as monomial->coeff dicts)."""
    if d == 0:
        return 1, [{(): 1}]
    if op_loop_bound is None:
        op_loop_bound = L + 1
    monos = _sym_monomials(ctx, d, L)
    # diagonal-weight prefilter: invariants must have weight 0 for every i
    cols = [mo for mo in monos
            if all(_diag_weight(ctx, mo, i) == 0
                   for i in range(1, ctx.size + 1))]
    if not cols:
        return 0, []
    col_index = {mo: t for t, mo in enumerate(cols)}
    rows = []
    ops = [ctx.encode(k, l, s)
           for k in range(1, ctx.size + 1)
           for l in range(1, ctx.size + 1)
           for s in range(op_loop_bound + 1)]
    for a in ops:
        images = [_ad_on_monomial(ctx, a, mo) for mo in cols]
        out_index: dict = {}
        for img in images:
            for mo in img:
                out_index.setdefault(mo, len(out_index))
        if not out_index:
            continue
        block = [[0] * len(cols) for _ in range(len(out_index))]
        for cidx, img in enumerate(images):
            for mo, c in img.items():
                block[out_index[mo]][cidx] = c
        rows.extend(block)
    basis = kernel_mod_p(rows, ctx.p, ncols=len(cols))
    vecs = []
    for v in basis:
        vecs.append({cols[t]: c for t, c in enumerate(v) if c})
    return len(basis), vecs


def expected_invariant_count(ctx: CurrentContext, d: int, L: int) -> int:
    """Number of degree-d monomials in the free generators of the
    invariant algebra restricted to loop powers <= L: z_0..z_L (degree
    1) and (e_{i,j}x^r)^p for even (i,j) != (1,1), r <= L (degree p)."""
    n_even = sum(
        1
        for i in range(1, ctx.size + 1)
        for j in range(1, ctx.size + 1)
        if (i, j) != (1, 1)
        and (ctx.index_parity(i) + ctx.index_parity(j)) % 2 == 0
    )
    n_pow = n_even * (L + 1)
    total = 0
    for k in range(d // ctx.p + 1):
        rem = d - k * ctx.p
        total += comb(n_pow + k - 1, k) * comb(L + rem, rem)
    return total
