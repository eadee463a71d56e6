"""Shared PBW straightening machinery.

Both the RTT algebra and the enveloping algebra of the current
superalgebra are filtered superalgebras with a fixed totally ordered
generator set and a quadratic-plus-lower-terms rewriting rule.  This
module implements the generic part: sparse elements as dicts mapping
ordered words to scalars mod p, and the recursive straightening of
out-of-order products.  Subclasses of :class:`PBWContext` supply the
bracket of two generators in normal form.

Generators are packed into single ints so that integer comparison is
the PBW order: ``code = (i * (size + 1) + j) * RSTRIDE + r`` which is
lexicographic in (i, j, r) as long as r < RSTRIDE.
"""

from __future__ import annotations

RSTRIDE = 1024  # max superscript + 1 packed into the low bits


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PBWContext:
    """Base context: shape (m, n), characteristic p, generator packing.

    Holds the straightening caches.  Instances compare equal by their
    defining data so elements of two identically configured contexts
    interoperate.
    """

    kind = "pbw"

    def __init__(self, m: int, n: int, p: int):
        if m < 1 or n < 1:
            raise ValueError(f"need m, n >= 1, got m={m}, n={n}")
        if not is_prime(p):
            raise ValueError(f"p must be prime, got p={p}")
        self.m = m
        self.n = n
        self.p = p
        self.size = m + n
        # parity of a row/column index, 1-based
        self._idx_parity = [0] * (self.size + 1)
        for i in range(m + 1, self.size + 1):
            self._idx_parity[i] = 1
        # parity of a generator keyed by i*(size+1)+j
        self._pair_parity = [0] * ((self.size + 1) * (self.size + 1))
        for i in range(1, self.size + 1):
            for j in range(1, self.size + 1):
                self._pair_parity[i * (self.size + 1) + j] = (
                    self._idx_parity[i] + self._idx_parity[j]
                ) % 2
        self._inv2 = pow(2, p - 2, p) if p > 2 else None
        self._bracket_cache: dict = {}
        self._word_gen_cache: dict = {}

    # -- generator packing ------------------------------------------------

    def encode(self, i: int, j: int, r: int) -> int:
        if not (1 <= i <= self.size):
            raise ValueError(f"row index {i} out of range 1..{self.size}")
        if not (1 <= j <= self.size):
            raise ValueError(f"column index {j} out of range 1..{self.size}")
        if not (self.min_superscript() <= r < RSTRIDE):
            raise ValueError(f"superscript {r} out of range")
        return (i * (self.size + 1) + j) * RSTRIDE + r

    def decode(self, code: int):
        ij, r = divmod(code, RSTRIDE)
        i, j = divmod(ij, self.size + 1)
        return i, j, r

    def min_superscript(self) -> int:
        return 1

    def index_parity(self, i: int) -> int:
        return self._idx_parity[i]

    def gen_parity(self, code: int) -> int:
        return self._pair_parity[code // RSTRIDE]

    def gen_loop_degree(self, code: int) -> int:
        raise NotImplementedError

    def gen_symbol(self, code: int) -> str:
        raise NotImplementedError

    def _key(self):
        return (self.kind, self.m, self.n, self.p)

    def __eq__(self, other):
        return isinstance(other, PBWContext) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"{type(self).__name__}(m={self.m}, n={self.n}, p={self.p})"

    # -- straightening ----------------------------------------------------

    def bracket_gens(self, g1: int, g2: int) -> dict:
        """Normal form of the supercommutator of two generators."""
        key = (g1, g2)
        cached = self._bracket_cache.get(key)
        if cached is None:
            cached = self._bracket_gens(g1, g2)
            self._bracket_cache[key] = cached
        return cached

    def _bracket_gens(self, g1: int, g2: int) -> dict:
        raise NotImplementedError

    def word_times_gen(self, word: tuple, g: int) -> dict:
        """Normal form of (normal word) * generator, as word -> coeff."""
        if not word:
            return {(g,): 1}
        key = (word, g)
        cached = self._word_gen_cache.get(key)
        if cached is not None:
            return cached
        p = self.p
        last = word[-1]
        prefix = word[:-1]
        if last < g:
            res = {word + (g,): 1}
        elif last == g:
            if self.gen_parity(g) == 1 and p > 2:
                # odd square: x*x = [x,x]/2, already lower in the filtration
                sq = self.bracket_gens(g, g)
                res = {}
                if sq:
                    half = {w: (c * self._inv2) % p for w, c in sq.items()}
                    res = self.word_times_terms(prefix, half)
            else:
                res = {word + (g,): 1}
        else:
            # last > g: last*g = +/- g*last + [last, g]
            sign = p - 1 if (self.gen_parity(last) & self.gen_parity(g)) else 1
            res = {}
            swapped = self.word_times_gen(prefix, g)
            for w1, c1 in swapped.items():
                for w2, c2 in self.word_times_gen(w1, last).items():
                    c = (res.get(w2, 0) + sign * c1 * c2) % p
                    if c:
                        res[w2] = c
                    else:
                        res.pop(w2, None)
            br = self.bracket_gens(last, g)
            if br:
                for w2, c2 in self.word_times_terms(prefix, br).items():
                    c = (res.get(w2, 0) + c2) % p
                    if c:
                        res[w2] = c
                    else:
                        res.pop(w2, None)
        self._word_gen_cache[key] = res
        return res

    def word_times_word(self, w1: tuple, w2: tuple) -> dict:
        acc = {w1: 1}
        p = self.p
        for g in w2:
            nxt: dict = {}
            for w, c in acc.items():
                for w3, c3 in self.word_times_gen(w, g).items():
                    cc = (nxt.get(w3, 0) + c * c3) % p
                    if cc:
                        nxt[w3] = cc
                    else:
                        nxt.pop(w3, None)
            acc = nxt
            if not acc:
                break
        return acc

    def word_times_terms(self, word: tuple, terms: dict) -> dict:
        p = self.p
        res: dict = {}
        for w2, c2 in terms.items():
            for w3, c3 in self.word_times_word(word, w2).items():
                c = (res.get(w3, 0) + c2 * c3) % p
                if c:
                    res[w3] = c
                else:
                    res.pop(w3, None)
        return res

    def mul_terms(self, a: dict, b: dict) -> dict:
        p = self.p
        res: dict = {}
        for w1, c1 in a.items():
            for w2, c2 in b.items():
                c12 = c1 * c2
                for w3, c3 in self.word_times_word(w1, w2).items():
                    c = (res.get(w3, 0) + c12 * c3) % p
                    if c:
                        res[w3] = c
                    else:
                        res.pop(w3, None)
        return res

    # -- element construction ---------------------------------------------

    element_class: type = None  # set after PBWElement is defined

    def element(self, terms: dict) -> "PBWElement":
        return self.element_class(self, terms)

    def zero(self) -> "PBWElement":
        return self.element_class(self, {})

    def one(self) -> "PBWElement":
        return self.element_class(self, {(): 1})

    def scalar(self, c: int) -> "PBWElement":
        c %= self.p
        return self.element_class(self, {(): c} if c else {})

    def word_loop_degree(self, word: tuple) -> int:
        return sum(self.gen_loop_degree(g) for g in word)

    def word_parity(self, word: tuple) -> int:
        par = 0
        for g in word:
            par ^= self.gen_parity(g)
        return par


class PBWElement:
    """A linear combination of ordered words in the generators, mod p.

    Immutable by convention: no method mutates ``terms`` after
    construction.  Words store generators with repetition, sorted
    ascending; coefficients are nonzero ints in 1..p-1.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: PBWContext, terms: dict):
        self.ctx = ctx
        self.terms = terms

    # -- ring ops ----------------------------------------------------------

    def _check(self, other: "PBWElement"):
        if self.ctx != other.ctx:
            raise ValueError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ctx.scalar(other)
        self._check(other)
        p = self.ctx.p
        res = dict(self.terms)
        for w, c in other.terms.items():
            cc = (res.get(w, 0) + c) % p
            if cc:
                res[w] = cc
            else:
                res.pop(w, None)
        return type(self)(self.ctx, res)

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return type(self)(self.ctx, {w: p - c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ctx.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "PBWElement":
        c %= self.ctx.p
        if c == 0:
            return self.ctx.zero()
        if c == 1:
            return self
        p = self.ctx.p
        return type(self)(self.ctx, {w: (k * c) % p for w, k in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        return type(self)(self.ctx, self.ctx.mul_terms(self.terms, other.terms))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        res = self.ctx.one()
        base = self
        while k:
            if k & 1:
                res = res * base
            base = base * base if k > 1 else base
            k >>= 1
        return res

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.scalar(other)
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def loop_degree(self):
        """Max loop degree over terms; None for the zero element."""
        if not self.terms:
            return None
        ld = self.ctx.word_loop_degree
        return max(ld(w) for w in self.terms)

    def parity_parts(self):
        """(even part, odd part)."""
        ev: dict = {}
        od: dict = {}
        wp = self.ctx.word_parity
        for w, c in self.terms.items():
            (od if wp(w) else ev)[w] = c
        cls = type(self)
        return cls(self.ctx, ev), cls(self.ctx, od)

    def parity(self):
        """0 or 1 for parity-homogeneous elements, None otherwise (0 for 0)."""
        par = None
        wp = self.ctx.word_parity
        for w in self.terms:
            q = wp(w)
            if par is None:
                par = q
            elif par != q:
                return None
        return 0 if par is None else par

    def supercommutator(self, other: "PBWElement") -> "PBWElement":
        """[a, b] = ab - (-1)^{|a||b|} ba, extended bilinearly."""
        if isinstance(other, int):
            return self.ctx.zero()
        self._check(other)
        _, a1 = self.parity_parts()
        _, b1 = other.parity_parts()
        res = self * other - other * self
        # correct the sign on the odd-odd piece: ab + ba instead of ab - ba
        if a1 and b1:
            res = res + (b1 * a1).scale(2)
        return res

    # -- presentation --------------------------------------------------------

    def monomials(self):
        return sorted(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        sym = self.ctx.gen_symbol
        for w in sorted(self.terms):
            c = self.terms[w]
            factors = []
            idx = 0
            while idx < len(w):
                run = 1
                while idx + run < len(w) and w[idx + run] == w[idx]:
                    run += 1
                s = sym(w[idx])
                factors.append(s if run == 1 else f"{s}^{run}")
                idx += run
            mono = "*".join(factors) if factors else "1"
            bits.append(mono if c == 1 and factors else f"{c}*{mono}")
        return " + ".join(bits)


PBWContext.element_class = PBWElement
