"""Algebra maps between RTT contexts: multiplication by a series
(mu_f), translation (eta_c), permutation automorphisms, the reflection
rho, the inversion omega, the embedding phi_k, the shift map psi_k =
omega . phi_k . omega, and the swap map zeta = rho . omega.

Maps are generator-assignments (i, j, r) -> target Element, extended
multiplicatively; composites are evaluated by composing evaluators.
"""

from __future__ import annotations

from .core import AlgebraContext, Element
from .gauss import gauss_decompose
from .series import USeries, binomial_mod_p


class AlgebraMap:
    """A multiplicative algebra map determined by generator images."""

    def __init__(self, name: str, source: AlgebraContext,
                 target: AlgebraContext, image_fn, is_anti: bool = False,
                 claimed_iso: bool = True):
        self.name = name
        self.source = source
        self.target = target
        self._image_fn = image_fn
        self.is_anti = is_anti
        self.claimed_iso = claimed_iso
        self._cache: dict = {}

    def image(self, i: int, j: int, r: int) -> Element:
        key = (i, j, r)
        img = self._cache.get(key)
        if img is None:
            img = self._image_fn(i, j, r)
            self._cache[key] = img
        return img

    def apply(self, el: Element) -> Element:
        if el.ctx != self.source:
            raise ValueError("element is not in the source algebra")
        tgt = self.target
        acc = tgt.zero()
        for w, c in el.terms.items():
            term = tgt.scalar(c)
            factors = reversed(w) if self.is_anti else w
            for g in factors:
                i, j, r = el.ctx.decode(g)
                term = term * self.image(i, j, r)
            acc = acc + term
        return acc

    def apply_series(self, s: USeries) -> USeries:
        return USeries(self.target, [self.apply(c) for c in s.coeffs])

    def then(self, outer: "AlgebraMap") -> "AlgebraMap":
        """Composite outer . self."""
        if self.target != outer.source:
            raise ValueError(
                f"cannot compose {outer.name} after {self.name}: context mismatch")

        def image_fn(i, j, r):
            return outer.apply(self.image(i, j, r))

        return AlgebraMap(f"{outer.name}.{self.name}", self.source,
                          outer.target, image_fn,
                          is_anti=self.is_anti ^ outer.is_anti)


def identity_map(ctx: AlgebraContext) -> AlgebraMap:
    return AlgebraMap("id", ctx, ctx, lambda i, j, r: ctx.generator(i, j, r))


def mu_f(ctx: AlgebraContext, f) -> AlgebraMap:
    """Multiplication by a unital scalar series: t_{i,j}(u) -> f(u)t_{i,j}(u),
    i.e. t_{i,j}^{(r)} -> sum_{s<=r} f^{(r-s)} t_{i,j}^{(s)}.  `f` is a
    list of scalar coefficients f^{(0)}..f^{(N)}."""
    f = [c % ctx.p for c in f]
    f += [0] * (ctx.N + 1 - len(f))
    if f[0] != 1:
        raise ValueError("mu_f needs a unital series")

    def image_fn(i, j, r):
        acc = ctx.zero()
        for s in range(r + 1):
            c = f[r - s]
            if c:
                acc = acc + ctx.t_entry(i, j, s).scale(c)
        return acc

    return AlgebraMap("mu_f", ctx, ctx, image_fn)


def eta_c(ctx: AlgebraContext, c: int) -> AlgebraMap:
    """Translation t_{i,j}(u) -> t_{i,j}(u - c):
    t_{i,j}^{(r)} -> sum_{s=1}^{r} C(r-1, r-s) c^{r-s} t_{i,j}^{(s)}."""
    c %= ctx.p

    def image_fn(i, j, r):
        acc = ctx.zero()
        ck = 1
        for s in range(r, 0, -1):
            b = binomial_mod_p(r - 1, r - s, ctx.p)
            scal = b * ck % ctx.p
            if scal:
                acc = acc + ctx.generator(i, j, s).scale(scal)
            ck = ck * c % ctx.p
        return acc

    return AlgebraMap(f"eta_{c}", ctx, ctx, image_fn)


def permutation(ctx: AlgebraContext, w) -> AlgebraMap:
    """Permutation automorphism t_{i,j}^{(r)} -> t_{w(i),w(j)}^{(r)}.
    `w` maps 1..m+n to 1..m+n; for p > 2 it must preserve the blocks
    {1..m} and {m+1..m+n}."""
    w = {i: w[i] if isinstance(w, dict) else w[i - 1]
         for i in range(1, ctx.size + 1)}
    if sorted(w.values()) != list(range(1, ctx.size + 1)):
        raise ValueError("w is not a permutation of 1..m+n")
    if ctx.p > 2:
        for i in range(1, ctx.size + 1):
            if ctx.index_parity(i) != ctx.index_parity(w[i]):
                raise ValueError(
                    f"permutation crosses the m|n wall at {i}; needs p = 2")
    return AlgebraMap("perm", ctx, ctx,
                      lambda i, j, r: ctx.generator(w[i], w[j], r))


def rho(ctx: AlgebraContext) -> AlgebraMap:
    """rho: Y_{m|n} -> Y_{n|m}, t_{i,j}(u) -> t_{M+1-i,M+1-j}(-u)."""
    target = AlgebraContext(ctx.n, ctx.m, ctx.p, ctx.N)
    M = ctx.size

    def image_fn(i, j, r):
        g = target.generator(M + 1 - i, M + 1 - j, r)
        return g if r % 2 == 0 else -g

    return AlgebraMap("rho", ctx, target, image_fn)


def omega(ctx: AlgebraContext) -> AlgebraMap:
    """omega: T(u) -> (T(-u))^{-1}, i.e. t_{i,j}^{(r)} -> (-1)^r t'_{i,j}^{(r)}."""
    tp = gauss_decompose(ctx).t_prime()

    def image_fn(i, j, r):
        if r > ctx.N:
            raise ValueError(f"omega image of superscript {r} exceeds truncation")
        img = tp[i][j][r]
        return img if r % 2 == 0 else -img

    return AlgebraMap("omega", ctx, ctx, image_fn)


def phi_k(ctx: AlgebraContext, k: int) -> AlgebraMap:
    """Embedding Y_{m|n} -> Y_{m+k|n}, t_{i,j}^{(r)} -> t_{k+i,k+j}^{(r)}."""
    target = AlgebraContext(ctx.m + k, ctx.n, ctx.p, ctx.N)
    return AlgebraMap(f"phi_{k}", ctx, target,
                      lambda i, j, r: target.generator(k + i, k + j, r))


def psi_k(ctx: AlgebraContext, k: int) -> AlgebraMap:
    """Shift map psi_k = omega_{m+k|n} . phi_k . omega_{m|n}."""
    phi = phi_k(ctx, k)
    amap = omega(ctx).then(phi).then(omega(phi.target))
    amap.name = f"psi_{k}"
    return amap


def zeta(ctx: AlgebraContext) -> AlgebraMap:
    """Swap map zeta = rho . omega : Y_{m|n} -> Y_{n|m}."""
    amap = omega(ctx).then(rho(ctx))
    amap.name = "zeta"
    return amap


def check_homomorphism(amap: AlgebraMap, bound: int):
    """Verify the RTT relation on generator images for all pairs with
    r + s <= bound: amap(g1 g2) = amap(g1) amap(g2) in the target.
    Returns (ok, witnesses) where each witness is
    ((i,j,r), (k,l,s), difference)."""
    src = amap.source
    witnesses = []
    gens = [(i, j, r)
            for i in range(1, src.size + 1)
            for j in range(1, src.size + 1)
            for r in range(1, bound)]
    for (i, j, r) in gens:
        g1 = src.generator(i, j, r)
        im1 = amap.image(i, j, r)
        for (k, l, s) in gens:
            if r + s > bound:
                continue
            g2 = src.generator(k, l, s)
            lhs = amap.apply(g1 * g2)
            if amap.is_anti:
                rhs = amap.image(k, l, s) * im1
            else:
                rhs = im1 * amap.image(k, l, s)
            if lhs != rhs:
                witnesses.append(((i, j, r), (k, l, s), lhs - rhs))
    return not witnesses, witnesses
