"""Exact arithmetic in the modular super Yangian.

The algebra is generated by t[i,j;r] (1 <= i,j <= m+n, r >= 1) over
F_p, with the quadratic RTT rewriting rule supplying the normal form.
PBW order is lexicographic on (i, j, r).
"""

from __future__ import annotations

from .pbw import PBWContext, PBWElement, RSTRIDE


class Element(PBWElement):
    """F_p-linear combination of ordered supermonomials in t[i,j;r]."""

    def serialize(self):
        """Canonical serialization: sorted [[ [i,j,r,exp], ... ], coeff]."""
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


class AlgebraContext(PBWContext):
    """The tuple (m, n, p, N): shape, characteristic, truncation order."""

    kind = "yangian"

    def __init__(self, m: int, n: int, p: int, N: int):
        if N < 1:
            raise ValueError(f"truncation order must be >= 1, got {N}")
        super().__init__(m, n, p)
        self.N = N
        self.element_class = Element

    def _key(self):
        return (self.kind, self.m, self.n, self.p, self.N)

    def gen_loop_degree(self, code: int) -> int:
        return (code % RSTRIDE) - 1

    def gen_symbol(self, code: int) -> str:
        i, j, r = self.decode(code)
        return f"t[{i},{j};{r}]"

    def deserialize(self, data) -> Element:
        terms = {}
        for runs, coeff in data:
            word = []
            for i, j, r, exp in runs:
                word.extend([self.encode(i, j, r)] * exp)
            terms[tuple(word)] = coeff % self.p
        return Element(self, {w: c for w, c in terms.items() if c})

    # -- RTT bracket --------------------------------------------------------

    def _bracket_gens(self, g1: int, g2: int) -> dict:
        """Normal form of [t[i,j;r], t[k,l;s]] from the defining relation."""
        i, j, r = self.decode(g1)
        k, l, s = self.decode(g2)
        p = self.p
        pi, pj, pk = (
            self._idx_parity[i],
            self._idx_parity[j],
            self._idx_parity[k],
        )
        sign = p - 1 if (pi * pj + pi * pk + pj * pk) % 2 else 1
        res: dict = {}

        def acc(terms: dict, c: int):
            for w, cw in terms.items():
                cc = (res.get(w, 0) + c * cw) % p
                if cc:
                    res[w] = cc
                else:
                    res.pop(w, None)

        for t in range(min(r, s)):
            hi = r + s - 1 - t
            # + t[k,j;t] * t[i,l;hi]
            if t == 0:
                if k == j:
                    acc({(self.encode(i, l, hi),): 1}, sign)
            else:
                acc(
                    self.word_times_gen((self.encode(k, j, t),), self.encode(i, l, hi)),
                    sign,
                )
            # - t[k,j;hi] * t[i,l;t]
            if t == 0:
                if i == l:
                    acc({(self.encode(k, j, hi),): 1}, p - sign)
            else:
                acc(
                    self.word_times_gen((self.encode(k, j, hi),), self.encode(i, l, t)),
                    p - sign,
                )
        return res

    # -- generators -----------------------------------------------------------

    def generator(self, i: int, j: int, r: int) -> Element:
        """The single-term element t[i,j;r]."""
        if r < 1:
            raise ValueError(f"superscript must be >= 1, got {r}")
        return Element(self, {(self.encode(i, j, r),): 1})

    def t_entry(self, i: int, j: int, r: int) -> Element:
        """Series coefficient t[i,j;r] with the r = 0 convention delta_ij."""
        if r == 0:
            return self.scalar(1 if i == j else 0)
        return self.generator(i, j, r)

    def generators(self, max_r: int | None = None):
        """All t[i,j;r] with r up to max_r (default N)."""
        if max_r is None:
            max_r = self.N
        for i in range(1, self.size + 1):
            for j in range(1, self.size + 1):
                for r in range(1, max_r + 1):
                    yield self.generator(i, j, r)


def generator(ctx: AlgebraContext, i: int, j: int, r: int) -> Element:
    return ctx.generator(i, j, r)


def supercommutator(a: Element, b: Element) -> Element:
    return a.supercommutator(b)


def loop_degree(a: Element):
    return a.loop_degree()
