"""Truncated formal power series in u^-1 (and u^-1, v^-1) with
element coefficients, plus the binomial-mod-p combinatorics used by
argument shifts.

All series are exact in the quotient by orders > N: every operation
here (Cauchy products, shifts by scalars, inverses of unital series)
only reads input coefficients of order <= the output order, so no
error terms accumulate.
"""

from __future__ import annotations


def binomial_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    res = 1
    while n or k:
        nd, kd = n % p, k % p
        if kd > nd:
            return 0
        num = den = 1
        for t in range(kd):
            num = num * (nd - t) % p
            den = den * (t + 1) % p
        res = res * num * pow(den, p - 2, p) % p
        n //= p
        k //= p
    return res


class USeries:
    """sum_{r=0..N} c_r u^-r with PBW-element coefficients."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        N = ctx.N
        if len(coeffs) < N + 1:
            coeffs = list(coeffs) + [ctx.zero()] * (N + 1 - len(coeffs))
        self.coeffs = list(coeffs[: N + 1])

    @classmethod
    def constant(cls, ctx, c: int = 1) -> "USeries":
        return cls(ctx, [ctx.scalar(c)])

    @classmethod
    def from_coeff_fn(cls, ctx, fn) -> "USeries":
        return cls(ctx, [fn(r) for r in range(ctx.N + 1)])

    def __getitem__(self, r: int):
        if not (0 <= r <= self.ctx.N):
            raise IndexError(f"order {r} outside truncation 0..{self.ctx.N}")
        return self.coeffs[r]

    def _check(self, other: "USeries"):
        if self.ctx != other.ctx:
            raise ValueError("context mismatch")

    def __add__(self, other):
        if isinstance(other, int):
            other = USeries.constant(self.ctx, other)
        self._check(other)
        return USeries(self.ctx, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return USeries(self.ctx, [-a for a in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = USeries.constant(self.ctx, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "USeries":
        return USeries(self.ctx, [a.scale(c) for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        N = self.ctx.N
        a, b = self.coeffs, other.coeffs
        out = []
        for r in range(N + 1):
            acc = self.ctx.zero()
            for t in range(r + 1):
                if a[t] and b[r - t]:
                    acc = acc + a[t] * b[r - t]
            out.append(acc)
        return USeries(self.ctx, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def is_unital(self) -> bool:
        return self.coeffs[0] == self.ctx.one()

    def inverse(self) -> "USeries":
        """Two-sided inverse of a unital series, by the order recursion."""
        if not self.is_unital():
            raise ValueError("series inverse requires constant term 1")
        N = self.ctx.N
        inv = [self.ctx.one()]
        for r in range(1, N + 1):
            acc = self.ctx.zero()
            for t in range(1, r + 1):
                if self.coeffs[t]:
                    acc = acc + self.coeffs[t] * inv[r - t]
            inv.append(-acc)
        return USeries(self.ctx, inv)

    def shift(self, c: int) -> "USeries":
        """g(u - c): substitute using (u-c)^-r = sum_k C(r+k-1,k) c^k u^-(r+k)."""
        p = self.ctx.p
        c %= p
        if c == 0:
            return self
        N = self.ctx.N
        out = [self.ctx.zero() for _ in range(N + 1)]
        out[0] = self.coeffs[0]
        for r in range(1, N + 1):
            g = self.coeffs[r]
            if not g:
                continue
            ck = 1
            for k in range(N - r + 1):
                b = binomial_mod_p(r + k - 1, k, p)
                scal = b * ck % p
                if scal:
                    out[r + k] = out[r + k] + g.scale(scal)
                ck = ck * c % p
        return USeries(self.ctx, out)

    def pow_p(self) -> "USeries":
        """p-fold product, exact to order N."""
        res = USeries.constant(self.ctx, 1)
        for _ in range(self.ctx.p):
            res = res * self
        return res

    def truncate_below(self, r0: int) -> "USeries":
        """Drop coefficients of order < r0 (used for series with valuation)."""
        out = list(self.coeffs)
        for r in range(min(r0, self.ctx.N + 1)):
            out[r] = self.ctx.zero()
        return USeries(self.ctx, out)

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def serialize(self):
        return [c.serialize() for c in self.coeffs]

    def __repr__(self):
        bits = []
        for r, c in enumerate(self.coeffs):
            if c:
                bits.append(f"({c!r})" + ("" if r == 0 else f"*u^-{r}"))
        return " + ".join(bits) if bits else "0"


def series_add(a: USeries, b: USeries) -> USeries:
    return a + b


def series_mul(a: USeries, b: USeries) -> USeries:
    return a * b


def series_inverse(g: USeries) -> USeries:
    return g.inverse()


def series_shift(g: USeries, c: int) -> USeries:
    return g.shift(c)


def series_pow_p(g: USeries) -> USeries:
    return g.pow_p()


class UVSeries:
    """Bivariate truncation: coefficients c_{r,s} of u^-r v^-s, exact for
    r + s <= order.  The order shrinks by one under multiplication by the
    symbolic factor (u - v)."""

    __slots__ = ("ctx", "order", "coeffs")

    def __init__(self, ctx, order: int, coeffs: dict | None = None):
        self.ctx = ctx
        self.order = order
        self.coeffs = {}
        if coeffs:
            for (r, s), c in coeffs.items():
                if r + s <= order and c:
                    self.coeffs[(r, s)] = c

    def __getitem__(self, key):
        r, s = key
        if r + s > self.order:
            raise IndexError(f"coefficient ({r},{s}) beyond valid order {self.order}")
        return self.coeffs.get((r, s), self.ctx.zero())

    @classmethod
    def from_u(cls, g: USeries, order: int) -> "UVSeries":
        return cls(g.ctx, order, {(r, 0): g[r] for r in range(min(order, g.ctx.N) + 1)})

    @classmethod
    def from_v(cls, g: USeries, order: int) -> "UVSeries":
        return cls(g.ctx, order, {(0, s): g[s] for s in range(min(order, g.ctx.N) + 1)})

    @classmethod
    def constant(cls, ctx, c: int, order: int) -> "UVSeries":
        return cls(ctx, order, {(0, 0): ctx.scalar(c)})

    def _align(self, other: "UVSeries") -> int:
        if self.ctx != other.ctx:
            raise ValueError("context mismatch")
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, int):
            other = UVSeries.constant(self.ctx, other, self.order)
        order = self._align(other)
        out: dict = {}
        for (r, s), c in self.coeffs.items():
            if r + s <= order:
                out[(r, s)] = c
        for (r, s), c in other.coeffs.items():
            if r + s <= order:
                cc = out.get((r, s), self.ctx.zero()) + c
                if cc:
                    out[(r, s)] = cc
                else:
                    out.pop((r, s), None)
        return UVSeries(self.ctx, order, out)

    __radd__ = __add__

    def __neg__(self):
        return UVSeries(self.ctx, self.order, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = UVSeries.constant(self.ctx, other, self.order)
        return self + (-other)

    def scale(self, c: int) -> "UVSeries":
        return UVSeries(self.ctx, self.order, {k: v.scale(c) for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        order = self._align(other)
        out: dict = {}
        for (r1, s1), c1 in self.coeffs.items():
            if r1 + s1 > order:
                continue
            for (r2, s2), c2 in other.coeffs.items():
                r, s = r1 + r2, s1 + s2
                if r + s > order:
                    continue
                prod = c1 * c2
                if prod:
                    key = (r, s)
                    cc = out.get(key, self.ctx.zero()) + prod
                    if cc:
                        out[key] = cc
                    else:
                        out.pop(key, None)
        return UVSeries(self.ctx, order, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def bracket(self, other: "UVSeries") -> "UVSeries":
        """Coefficientwise supercommutator [self, other]."""
        order = self._align(other)
        out: dict = {}
        for (r1, s1), c1 in self.coeffs.items():
            for (r2, s2), c2 in other.coeffs.items():
                r, s = r1 + r2, s1 + s2
                if r + s > order:
                    continue
                br = c1.supercommutator(c2)
                if br:
                    key = (r, s)
                    cc = out.get(key, self.ctx.zero()) + br
                    if cc:
                        out[key] = cc
                    else:
                        out.pop(key, None)
        return UVSeries(self.ctx, order, out)

    def times_u_minus_v(self, c: int = 0) -> "UVSeries":
        """(u - v - c) * self; valid one order lower."""
        order = self.order - 1
        c %= self.ctx.p
        out: dict = {}
        for r in range(order + 1):
            for s in range(order + 1 - r):
                val = self.ctx.zero()
                a = self.coeffs.get((r + 1, s))
                if a is not None:
                    val = val + a
                b = self.coeffs.get((r, s + 1))
                if b is not None:
                    val = val - b
                if c:
                    d = self.coeffs.get((r, s))
                    if d is not None:
                        val = val - d.scale(c)
                if val:
                    out[(r, s)] = val
        return UVSeries(self.ctx, order, out)

    def __pow__(self, k: int) -> "UVSeries":
        res = UVSeries.constant(self.ctx, 1, self.order)
        for _ in range(k):
            res = res * self
        return res

    def swap_uv(self) -> "UVSeries":
        return UVSeries(self.ctx, self.order, {(s, r): c for (r, s), c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, UVSeries):
            return NotImplemented
        order = self._align(other)
        for r in range(order + 1):
            for s in range(order + 1 - r):
                if self.coeffs.get((r, s)) != other.coeffs.get((r, s)):
                    a = self.coeffs.get((r, s), self.ctx.zero())
                    b = other.coeffs.get((r, s), self.ctx.zero())
                    if a != b:
                        return False
        return True

    def difference_witness(self, other: "UVSeries", order: int | None = None):
        """First (r, s, lhs - rhs) where the two disagree, or None."""
        bound = self._align(other)
        if order is not None:
            bound = min(bound, order)
        for tot in range(bound + 1):
            for r in range(tot + 1):
                s = tot - r
                a = self.coeffs.get((r, s), self.ctx.zero())
                b = other.coeffs.get((r, s), self.ctx.zero())
                if a != b:
                    return (r, s, a - b)
        return None


def geometric_uv(ctx, order: int) -> UVSeries:
    """1/(u - v) expanded in the region |u| > |v|:
    sum_{k>=0} v^k u^{-k-1} is not a u^-1,v^-1 series; every identity
    checked here only needs (g(v) - g(u))/(u - v), provided below."""
    raise NotImplementedError("use divided_difference instead")


def divided_difference(g: USeries, order: int) -> UVSeries:
    """(g(v) - g(u))/(u - v) = sum_{r,s>=1} g^{(r+s-1)} u^-r v^-s."""
    ctx = g.ctx
    out: dict = {}
    for r in range(1, order + 1):
        for s in range(1, order + 1 - r):
            c = g[r + s - 1]
            if c:
                out[(r, s)] = c
    return UVSeries(ctx, order, out)
