"""The Brauer algebra on its diagram basis, with exact scalars.

A diagram on 2n points is a fixed-point-free involution stored as a tuple
``pairing`` of length 2n: positions 0..n-1 are the top points, n..2n-1 the
bottom points, and ``pairing[p]`` is the partner of ``p``.  Composition
stacks the left factor above the right one, traces strands through the
middle boundary and counts the closed interior loops; each loop contributes
one factor of the loop parameter.

Algebra elements are finitely supported maps from diagram ids to scalars.
The scalar kind is whatever the loop parameter is: an exact Fraction for a
numeric parameter, or a univariate rational function for the generic one.
Diagram ids index the lexicographically sorted list of all diagrams, so
serialization order is canonical.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _all_pairings(m: int):
    """All fixed-point-free involutions of 0..m-1 (m even)."""
    if m == 0:
        return [()]
    out = []

    def rec(free, pairing):
        if not free:
            out.append(tuple(pairing))
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            pairing[a], pairing[b] = b, a
            rec(free[1:idx] + free[idx + 1 :], pairing)
        pairing[a] = -1

    rec(tuple(range(m)), [-1] * m)
    return out


@lru_cache(maxsize=None)
def all_diagrams(n: int) -> tuple[tuple[int, ...], ...]:
    """Every Brauer diagram on 2n points, sorted lexicographically."""
    return tuple(sorted(_all_pairings(2 * n)))


def compose_pairings(d1, d2, n: int):
    """Stack d1 above d2; return (pairing, loops)."""
    size = 2 * n
    res = [-1] * size
    mid_seen = [False] * n if n else []
    for start in range(size):
        if res[start] != -1:
            continue
        if start < n:
            in_top, p = True, d1[start]
        else:
            in_top, p = False, d2[start]
        while True:
            if in_top:
                if p < n:
                    end = p
                    break
                mid_seen[p - n] = True
                p = d2[p - n]
                in_top = False
            else:
                if p >= n:
                    end = p
                    break
                mid_seen[p] = True
                p = d1[p + n]
                in_top = True
        res[start] = end
        res[end] = start
    loops = 0
    for i in range(n):
        if mid_seen[i]:
            continue
        loops += 1
        j = i
        while True:
            mid_seen[j] = True
            j1 = d1[n + j] - n
            mid_seen[j1] = True
            j = d2[j1]
            if j == i:
                break
    return tuple(res), loops


def identity_pairing(n: int):
    return tuple(list(range(n, 2 * n)) + list(range(n)))


def transposition_pairing(n: int, k: int):
    """The diagram of s_k (1-based, crossing strands k and k+1)."""
    p = list(identity_pairing(n))
    a, b = k - 1, k
    p[a], p[b] = n + b, n + a
    p[n + a], p[n + b] = b, a
    return tuple(p)


def cup_cap_pairing(n: int, k: int):
    """The diagram of e_k (1-based, horizontal arcs joining k, k+1 on both rows)."""
    p = list(identity_pairing(n))
    a, b = k - 1, k
    p[a], p[b] = b, a
    p[n + a], p[n + b] = n + b, n + a
    return tuple(p)


def flip_pairing(pairing, n: int):
    """Reflect top and bottom rows (the * involution on diagrams)."""
    size = 2 * n

    def fl(p):
        return p + n if p < n else p - n

    out = [-1] * size
    for p in range(size):
        out[fl(p)] = fl(pairing[p])
    return tuple(out)


def extend_pairing(pairing, n: int):
    """Add one vertical strand on the right: an (n)-diagram as an (n+1)-diagram."""
    out = []
    for p in range(n):
        q = pairing[p]
        out.append(q if q < n else q + 1)
    out.append(2 * n + 1)
    for p in range(n, 2 * n):
        q = pairing[p]
        out.append(q if q < n else q + 1)
    out.append(n)
    return tuple(out)


# full multiplication tables only up to this many diagrams (table is count^2)
_TABLE_LIMIT = 1000


class BrauerAlgebra:
    """Context object for B_n(delta): interned diagrams and multiplication."""

    def __init__(self, n: int, delta):
        self.n = n
        self.delta = delta
        self.one_scalar = delta**0
        self.diagrams = all_diagrams(n)
        self.index = {d: i for i, d in enumerate(self.diagrams)}
        self.id_elem = self.index[identity_pairing(n)]
        self._delta_powers = [self.one_scalar]
        for _ in range(n + 1):
            self._delta_powers.append(self._delta_powers[-1] * delta)
        self._table = None
        self._pair_cache = {}
        self._star_map = tuple(
            self.index[flip_pairing(d, n)] for d in self.diagrams
        )

    def __repr__(self):
        return f"BrauerAlgebra(n={self.n}, delta={self.delta!r})"

    # -- diagram-level products --

    def _build_table(self):
        m = len(self.diagrams)
        table = [None] * (m * m)
        for a in range(m):
            da = self.diagrams[a]
            base = a * m
            for b in range(m):
                table[base + b] = compose_pairings(da, self.diagrams[b], self.n)
        self._table = [
            (self.index[p], loops) for (p, loops) in table
        ]

    def compose_ids(self, a: int, b: int):
        if self._table is not None:
            return self._table[a * len(self.diagrams) + b]
        key = (a, b)
        hit = self._pair_cache.get(key)
        if hit is None:
            p, loops = compose_pairings(self.diagrams[a], self.diagrams[b], self.n)
            hit = (self.index[p], loops)
            self._pair_cache[key] = hit
        return hit

    def enable_table(self, workload: int | None = None):
        """Build the full product table when it pays off.

        Small contexts always get one; larger ones only once a single
        product is big enough that repeated strand tracing would dominate.
        """
        if self._table is not None or len(self.diagrams) > _TABLE_LIMIT:
            return
        if len(self.diagrams) <= 120 or workload is None or workload > 20000:
            self._build_table()

    # -- element constructors --

    def zero(self):
        return Element(self, {})

    def one(self):
        return Element(self, {self.id_elem: self.one_scalar})

    def from_diagram(self, pairing):
        return Element(self, {self.index[tuple(pairing)]: self.one_scalar})

    def scalar(self, value):
        c = self.one_scalar * value
        if not c:
            return self.zero()
        return Element(self, {self.id_elem: c})

    def s(self, k: int):
        return self.from_diagram(transposition_pairing(self.n, k))

    def e(self, k: int):
        return self.from_diagram(cup_cap_pairing(self.n, k))

    def word(self, letters):
        """Product of generator diagrams given as ('s'|'e', k) pairs."""
        out = self.one()
        for kind, k in letters:
            out = out * (self.s(k) if kind == "s" else self.e(k))
        return out

    def jm_elements(self):
        """L_1, ..., L_n (list is 0-based: entry k-1 is L_k)."""
        out = [self.scalar((self.delta - 1) * Fraction(1, 2))]
        for k in range(1, self.n):
            sk = self.s(k)
            out.append(sk - self.e(k) + sk * out[-1] * sk)
        return out

    def elements_equal(self, a, b):
        return (a - b).is_zero()


class Element:
    """Finitely supported scalar combination of Brauer diagrams."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: BrauerAlgebra, coeffs: dict):
        self.alg = alg
        self.coeffs = coeffs

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        # diagram ids are canonical (sorted order), so elements of any two
        # same-size contexts are comparable
        return self.alg.n == other.alg.n and (self - other).is_zero()

    def __neg__(self):
        return Element(self.alg, {d: -c for d, c in self.coeffs.items()})

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        coeffs = dict(self.coeffs)
        for d, c in other.coeffs.items():
            s = coeffs.get(d)
            s = c if s is None else s + c
            if s:
                coeffs[d] = s
            else:
                coeffs.pop(d, None)
        return Element(self.alg, coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        alg = self.alg
        if not isinstance(other, Element):
            # scalar on the right
            if not other:
                return alg.zero()
            return Element(alg, {d: c * other for d, c in self.coeffs.items()})
        alg.enable_table(len(self.coeffs) * len(other.coeffs))
        powers = alg._delta_powers
        compose = alg.compose_ids
        out: dict = {}
        for da, ca in self.coeffs.items():
            for db, cb in other.coeffs.items():
                d, loops = compose(da, db)
                c = ca * cb
                if loops:
                    c = c * powers[loops]
                s = out.get(d)
                s = c if s is None else s + c
                if s:
                    out[d] = s
                else:
                    out.pop(d, None)
        return Element(alg, out)

    def __rmul__(self, other):
        # scalars commute with everything
        return self.__mul__(other)

    def scale(self, value):
        if not value:
            return self.alg.zero()
        return Element(self.alg, {d: value * c for d, c in self.coeffs.items()})

    def star(self):
        smap = self.alg._star_map
        return Element(self.alg, {smap[d]: c for d, c in self.coeffs.items()})

    def support(self):
        return sorted(self.coeffs)

    def items_sorted(self):
        return [(d, self.coeffs[d]) for d in sorted(self.coeffs)]

    def coefficient(self, pairing):
        idx = self.alg.index[tuple(pairing)]
        zero = self.alg.one_scalar - self.alg.one_scalar
        return self.coeffs.get(idx, zero)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for d, c in self.items_sorted():
            bits.append(f"({c})*D{d}")
        return " + ".join(bits)


def compose(alg: BrauerAlgebra, d1, d2):
    """Diagram-level product: (diagram, loops)."""
    return compose_pairings(tuple(d1), tuple(d2), alg.n)
