"""The homogeneous cellular basis built from the reduction machinery.

For each cell (shape, f) and each pair of up-down tableaux of that shape the
basis element is

    reversed-word(tail(s)) * cellhead * tail(t)

where cellhead = e(i) eps_1 eps_3 ... eps_(2f-1) e(i) at the residue
sequence i of the dominance-maximal tableau, and tail(t) is the product of
the intertwiner word sorting the maximal tableau to the reduced form of t
followed by the contraction word of the standard reduction of t.  The left
factor is the presentation involution applied to tail(s): it fixes each
generator and reverses products, so on a word it is plain reversal.  (It is
NOT the top-bottom mirror of diagrams: the realized generators psi_k and
eps_k for k >= 2 are not mirror-symmetric.)

Every factor is a homogeneous generator block, so each basis element
carries a construction degree; the degree bookkeeping tracks the
residue-sequence context through every letter of the word.
"""

from __future__ import annotations

from fractions import Fraction

from .diagrams import Element
from .generators import GeneratorSet
from .linalg import ExactLU, RankDeficient
from . import tableaux as tb


class BasisError(Exception):
    pass


class HeadTooSmall(BasisError):
    pass


def psi_block_degree(seq, k: int) -> int:
    a, b = Fraction(seq[k - 1]), Fraction(seq[k])
    if a == b:
        return -2
    if a == b + 1 or a == b - 1:
        return 1
    return 0


def eps_block_degree(left_seq, right_seq, k: int, delta) -> int:
    return tb.deg_k(left_seq, k, delta) + tb.deg_k(right_seq, k, delta)


class GradedBasis:
    def __init__(self, gens: GeneratorSet):
        self.gens = gens
        self.n = gens.n
        self.delta = gens.delta
        self.cells = tb.cells(self.n)
        self.tableaux: dict = {cell: [] for cell in self.cells}
        for t in tb.all_updown(self.n):
            self.tableaux[tb.cell_of(t)].append(t)
        self.cell_head: dict = {}
        self.cell_head_degree: dict = {}
        self._tails: dict = {}
        self._tail_degree: dict = {}
        self._rows: dict = {}
        self.elements: dict = {}
        self.degrees: dict = {}
        self.index: list = []
        self._lu = None
        self._build()

    # -- construction ---------------------------------------------------------

    def _build_cell_head(self, cell):
        gens = self.gens
        shape, f = cell
        i_lam = tb.residue_sequence(tb.maximal_tableau(shape, f), self.delta)
        elem = gens.e[i_lam]
        degree = 0
        for j in range(1, f + 1):
            k = 2 * j - 1
            elem = elem * gens.eps[k]
            degree += 2 * tb.deg_k(i_lam, k, self.delta)
        elem = elem * gens.e[i_lam]
        self.cell_head[cell] = elem
        self.cell_head_degree[cell] = degree

    def _tail_word(self, t):
        """The generator word of tail(t): a list of elements, plus its degree.

        The word is the sorting permutation's intertwiner letters followed by
        the reduction-step words with their boundary idempotents; the degree
        adds the block degree of every letter in its residue context.
        """
        gens = self.gens
        delta = self.delta
        shape, f = tb.cell_of(t)
        i_lam = tb.residue_sequence(tb.maximal_tableau(shape, f), delta)
        word = []
        degree = 0
        ctx = i_lam
        for k in tb.d_word(t):
            degree += psi_block_degree(ctx, k)
            word.append(gens.psi[k])
            ctx = ctx[: k - 1] + (ctx[k], ctx[k - 1]) + ctx[k:][1:]
        chain, rhos = tb.standard_reduction(t)
        for step in range(len(rhos) - 1, -1, -1):
            upper, lower = chain[step + 1], chain[step]
            letters, walk = tb.step_word(upper, lower, rhos[step])
            word.append(gens.e[tb.residue_sequence(upper, delta)])
            for pos, (kind, k) in enumerate(letters):
                left = tb.residue_sequence(walk[pos], delta)
                right = tb.residue_sequence(walk[pos + 1], delta)
                if kind == "psi":
                    degree += psi_block_degree(left, k)
                    word.append(gens.psi[k])
                else:
                    degree += eps_block_degree(left, right, k, delta)
                    word.append(gens.eps[k])
            word.append(gens.e[tb.residue_sequence(lower, delta)])
        return word, degree

    def _build(self):
        one = self.gens.alg.one()
        for cell in self.cells:
            self._build_cell_head(cell)
            tabs = self.tableaux[cell]
            rows = []
            lefts = []
            for t in tabs:
                word, wdeg = self._tail_word(t)
                self._tail_degree[(cell, t)] = wdeg
                tail = one
                for g in word:
                    tail = tail * g
                self._tails[(cell, t)] = tail
                rows.append(self.cell_head[cell] * tail)
                # the presentation involution fixes generators and reverses
                # words, so the left factor is the reversed product
                rev = one
                for g in reversed(word):
                    rev = rev * g
                lefts.append(rev)
            for ti, t in enumerate(tabs):
                self._rows[(cell, ti)] = rows[ti]
            for si, s in enumerate(tabs):
                for ti, t in enumerate(tabs):
                    key = (cell, si, ti)
                    self.elements[key] = lefts[si] * rows[ti]
                    self.degrees[key] = (
                        self.cell_head_degree[cell]
                        + self._tail_degree[(cell, s)]
                        + self._tail_degree[(cell, t)]
                    )
                    self.index.append(key)

    # -- linear algebra over the diagram basis ---------------------------------

    def coefficient_matrix(self):
        dim = len(self.gens.alg.diagrams)
        if len(self.index) != dim:
            raise BasisError(
                f"basis has {len(self.index)} elements but the algebra has dimension {dim}"
            )
        cols = []
        for key in self.index:
            coeffs = self.elements[key].coeffs
            cols.append([coeffs.get(d, Fraction(0)) for d in range(dim)])
        # transpose: rows indexed by diagrams
        return [[cols[c][d] for c in range(dim)] for d in range(dim)]

    def rank_certificate(self) -> int:
        """Exact rank of the coefficient matrix; raises RankDeficient if short."""
        self._ensure_lu()
        return len(self.index)

    def _ensure_lu(self):
        if self._lu is None:
            self._lu = ExactLU(self.coefficient_matrix())

    def expand(self, elem: Element) -> dict:
        """Coordinates of an arbitrary element in the basis."""
        self._ensure_lu()
        dim = len(self.gens.alg.diagrams)
        vec = [elem.coeffs.get(d, Fraction(0)) for d in range(dim)]
        sol = self._lu.solve(vec)
        return {self.index[c]: sol[c] for c in range(dim) if sol[c]}

    # -- reports ----------------------------------------------------------------

    def tableau_degrees(self):
        return {
            (cell, ti): tb.tableau_degree(t, self.delta)
            for cell in self.cells
            for ti, t in enumerate(self.tableaux[cell])
        }

    def poincare(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for key in self.index:
            d = self.degrees[key]
            hist[d] = hist.get(d, 0) + 1
        return dict(sorted(hist.items()))

    def degree_identity_failures(self):
        """Pairs where the construction degree differs from deg s + deg t."""
        tdeg = self.tableau_degrees()
        bad = []
        for cell, si, ti in self.index:
            want = tdeg[(cell, si)] + tdeg[(cell, ti)]
            if self.degrees[(cell, si, ti)] != want:
                bad.append(((cell, si, ti), self.degrees[(cell, si, ti)], want))
        return bad

    # -- cellular structure -------------------------------------------------------

    def filtration_check(self, cell, si: int, ti: int, g: Element) -> bool:
        """Expand basis[cell, s, t] * g; allow same-cell same-s terms or higher cells."""
        prod = self.elements[(cell, si, ti)] * g
        for (c2, s2, _t2), coeff in self.expand(prod).items():
            if not coeff:
                continue
            if c2 == cell and s2 == si:
                continue
            if c2[1] > cell[1]:
                continue
            return False
        return True

    def gram_matrix(self, cell):
        """The bilinear form of the cell, read off products of basis elements."""
        tabs = self.tableaux[cell]
        m = len(tabs)
        out = [[Fraction(0)] * m for _ in range(m)]
        for si in range(m):
            for ti in range(m):
                prod = self.elements[(cell, 0, si)] * self.elements[(cell, ti, 0)]
                for (c2, s2, t2), coeff in self.expand(prod).items():
                    if c2 == cell:
                        if (s2, t2) != (0, 0):
                            raise BasisError(
                                "product leaks into other rows of the same cell"
                            )
                        out[si][ti] = coeff
                    elif not c2[1] > cell[1]:
                        raise BasisError("product leaks below the cell")
        return out

    # -- restriction ---------------------------------------------------------------

    def restrict(self, cell, si: int, ti: int, f: int, small: "GradedBasis"):
        """Strip f leading trivial pairs off both indices of a basis element.

        Returns ((small_cell, u_index, v_index), element) in the level
        n - 2f basis; requires both tableaux to have head at least f.
        """
        if small.n != self.n - 2 * f or small.delta != self.delta:
            raise BasisError("target basis has the wrong size or parameter")
        s = self.tableaux[cell][si]
        t = self.tableaux[cell][ti]
        if tb.head(s) < f or tb.head(t) < f:
            raise HeadTooSmall(
                f"heads {tb.head(s)}, {tb.head(t)} are smaller than f={f}"
            )
        u, v = s[2 * f :], t[2 * f :]
        if self.n - 2 * f == 0:
            return (((), 0), 0, 0), small.gens.alg.one()
        scell = tb.cell_of(u)
        ui = small.tableaux[scell].index(u)
        vi = small.tableaux[scell].index(v)
        return (scell, ui, vi), small.elements[(scell, ui, vi)]


def presentation_involution(basis: GradedBasis, elem: Element) -> Element:
    """The anti-automorphism fixing every generator, realized via the basis.

    It transports the presentation involution through the isomorphism:
    expand, swap the two tableau indices of every basis coefficient,
    recombine.  This is a genuinely different map from the top-bottom
    diagram mirror.
    """
    out = basis.gens.alg.zero()
    for (cell, si, ti), coeff in basis.expand(elem).items():
        out = out + basis.elements[(cell, ti, si)].scale(coeff)
    return out


def poincare_string(hist: dict[int, int]) -> str:
    if not hist:
        return "0"
    bits = []
    for d in sorted(hist):
        c = hist[d]
        if d == 0:
            bits.append(str(c))
        else:
            q = "q" if d == 1 else f"q^{d}"
            bits.append(q if c == 1 else f"{c}*{q}")
    return " + ".join(bits)


def build_basis(gens: GeneratorSet) -> GradedBasis:
    """Construct the basis and certify full rank."""
    basis = GradedBasis(gens)
    basis.rank_certificate()
    return basis
