from fractions import Fraction as F

import pytest

from gbrauer import tableaux as tb
from gbrauer.basis import GradedBasis, HeadTooSmall, build_basis, poincare_string


@pytest.fixture(scope="module")
def b21(genset_cache):
    return build_basis(genset_cache(2, F(1)))


@pytest.fixture(scope="module")
def b20(genset_cache):
    return build_basis(genset_cache(2, F(0)))


@pytest.fixture(scope="module")
def b31(genset_cache):
    return build_basis(genset_cache(3, F(1)))


def test_n2_closed_forms(b21, genset_cache):
    gens = genset_cache(2, F(1))
    A = gens.alg
    one, s1, e1 = A.one(), A.s(1), A.e(1)
    got = {repr(b21.elements[key]) for key in b21.index}
    want = {
        repr((one + s1 - e1.scale(2)).scale(F(1, 2))),
        repr((one - s1).scale(F(1, 2))),
        repr(e1),
    }
    assert got == want
    assert b21.rank_certificate() == 3


def test_cell_head(b21, b20):
    # the fully contracted cell at two strands
    assert b21.cell_head[((), 1)] == b21.gens.alg.e(1)
    assert b21.cell_head_degree[((), 1)] == 0
    assert b20.cell_head_degree[((), 1)] == 2


def test_poincare(b21, b20):
    assert poincare_string(b21.poincare()) == "3"
    assert poincare_string(b20.poincare()) == "2 + q^2"
    assert sum(b21.poincare().values()) == 3


def test_degree_identity(b21, b20, b31):
    for b in (b21, b20, b31):
        assert b.degree_identity_failures() == []


def test_involution_symmetry(b31, genset_cache):
    # the presentation involution (fixes generators, reverses words) swaps
    # the two indices; realized by coefficient transport it must be an
    # anti-automorphism fixing every generator
    from gbrauer.basis import presentation_involution as tau

    gens = genset_cache(3, F(1))
    for key in b31.index:
        cell, si, ti = key
        assert tau(b31, b31.elements[key]) == b31.elements[(cell, ti, si)]
    gen_elems = (
        [gens.e[i] for i in gens.resseqs]
        + [gens.y_elem(k) for k in (1, 2, 3)]
        + [gens.psi[k] for k in (1, 2)]
        + [gens.eps[k] for k in (1, 2)]
    )
    for g in gen_elems:
        assert tau(b31, g) == g
    import random

    rng = random.Random(4)
    for _ in range(12):
        a, b = rng.choice(gen_elems), rng.choice(gen_elems)
        assert tau(b31, a * b) == tau(b31, b) * tau(b31, a)


def test_diagram_mirror_differs_from_involution(genset_cache):
    # the top-bottom mirror fixes s_k and e_k but not the realized psi_k,
    # eps_k for k >= 2: the two involutions genuinely differ
    gens = genset_cache(3, F(1))
    assert gens.psi[1].star() == gens.psi[1]
    assert gens.eps[1].star() == gens.eps[1]
    assert not (gens.psi[2].star() - gens.psi[2]).is_zero()
    assert not (gens.eps[2].star() - gens.eps[2]).is_zero()


def test_idempotent_sandwich(b31, genset_cache):
    gens = genset_cache(3, F(1))
    for cell in b31.cells:
        tabs = b31.tableaux[cell]
        for si, s in enumerate(tabs):
            for ti, t in enumerate(tabs):
                el = b31.elements[(cell, si, ti)]
                iseq = tb.residue_sequence(s, F(1))
                jseq = tb.residue_sequence(t, F(1))
                assert gens.e[iseq] * el * gens.e[jseq] == el
                for other in gens.resseqs:
                    prod = el * gens.e[other]
                    if other == jseq:
                        assert prod == el
                    else:
                        assert prod.is_zero()


def test_filtration_exhaustive_n3(b31, genset_cache):
    gens = genset_cache(3, F(1))
    gen_elems = (
        [gens.e[i] for i in gens.resseqs]
        + [gens.y_elem(k) for k in (1, 2, 3)]
        + [gens.psi[k] for k in (1, 2)]
        + [gens.eps[k] for k in (1, 2)]
    )
    for cell in b31.cells:
        m = len(b31.tableaux[cell])
        for si in range(m):
            for ti in range(m):
                for g in gen_elems:
                    assert b31.filtration_check(cell, si, ti, g)


def test_filtration_trivial_case(b21, genset_cache):
    gens = genset_cache(2, F(1))
    # the nilpotent part vanishes at two strands, so filtration is immediate
    assert gens.y_elem(2).is_zero()
    for key in b21.index:
        cell, si, ti = key
        assert b21.filtration_check(cell, si, ti, gens.y_elem(2))


def test_gram_matrices(b21, b20, b31):
    assert b21.gram_matrix(((), 1)) == [[F(1)]]
    assert b20.gram_matrix(((), 1)) == [[F(0)]]
    for b in (b21, b31):
        for cell in b.cells:
            g = b.gram_matrix(cell)
            m = len(g)
            for r in range(m):
                for c in range(m):
                    assert g[r][c] == g[c][r]


def test_reduced_word_independence(b31, genset_cache):
    gens = genset_cache(3, F(1))
    for cell in b31.cells:
        for t in b31.tableaux[cell]:
            w1, w2 = tb.d_word(t), tb.d_word_alternative(t)
            if w1 == w2:
                continue
            i_lam = tb.residue_sequence(tb.maximal_tableau(*cell), F(1))
            p1 = gens.e[i_lam]
            for k in w1:
                p1 = p1 * gens.psi[k]
            p2 = gens.e[i_lam]
            for k in w2:
                p2 = p2 * gens.psi[k]
            assert p1 == p2


def test_homogeneous_generator_blocks(b31, genset_cache):
    # each generator block expands in a single degree matching the table
    from gbrauer.basis import eps_block_degree, psi_block_degree

    gens = genset_cache(3, F(1))
    tdeg = b31.tableau_degrees()

    def expansion_degrees(elem):
        return {
            tdeg[(cell, si)] + tdeg[(cell, ti)]
            for (cell, si, ti), c in b31.expand(elem).items()
            if c
        }

    for i in gens.resseqs:
        degs = expansion_degrees(gens.e[i])
        assert degs <= {0}
    for k in (1, 2, 3):
        for i in gens.resseqs:
            degs = expansion_degrees(gens.y_elem(k) * gens.e[i])
            assert degs <= {2}
    for k in (1, 2):
        for i in gens.resseqs:
            sw = gens.swap_seq(i, k)
            blk = gens.e[i] * gens.psi[k]
            degs = expansion_degrees(blk)
            assert degs <= {psi_block_degree(i, k)}
            for j in gens.resseqs:
                blk = gens.e[i] * gens.eps[k] * gens.e[j]
                degs = expansion_degrees(blk)
                assert degs <= {eps_block_degree(i, j, k, F(1))}


def test_restriction(genset_cache):
    b21 = build_basis(genset_cache(2, F(1)))
    b01 = build_basis(genset_cache(0, F(1)))
    key, elem = b21.restrict(((), 1), 0, 0, 1, b01)
    assert elem == b01.gens.alg.one()
    with pytest.raises(HeadTooSmall):
        b21.restrict(((2,), 0), 0, 0, 1, b01)


def test_restriction_n4_to_n2(genset_cache):
    b41 = build_basis(genset_cache(4, F(1)))
    b21 = build_basis(genset_cache(2, F(1)))
    hits = 0
    for cell in b41.cells:
        tabs = b41.tableaux[cell]
        for si, s in enumerate(tabs):
            for ti, t in enumerate(tabs):
                if tb.head(s) >= 1 and tb.head(t) >= 1:
                    (scell, ui, vi), elem = b41.restrict(cell, si, ti, 1, b21)
                    assert b21.tableaux[scell][ui] == s[2:]
                    assert b21.tableaux[scell][vi] == t[2:]
                    assert elem == b21.elements[(scell, ui, vi)]
                    hits += 1
    # exactly one head->=1 tableau per cell with f >= 1, covering the whole
    # two-strand basis
    assert hits == 3


def test_rank_of_n4(genset_cache):
    basis = build_basis(genset_cache(4, F(1)))
    assert basis.rank_certificate() == 105
    assert len(basis.index) == 105


def test_filtration_sampled_n4(genset_cache):
    import random

    for delta in (F(1), F(0)):
        gens = genset_cache(4, delta)
        basis = build_basis(gens)
        rng = random.Random(9)
        gen_elems = (
            [gens.e[i] for i in gens.resseqs]
            + [gens.y_elem(k) for k in (2, 3, 4)]
            + [gens.psi[k] for k in (1, 2, 3)]
            + [gens.eps[k] for k in (1, 2, 3)]
        )
        for _ in range(25):
            cell, si, ti = rng.choice(basis.index)
            g = rng.choice(gen_elems)
            assert basis.filtration_check(cell, si, ti, g), (delta, cell, si, ti)
