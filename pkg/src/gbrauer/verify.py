"""Executable verification of the graded presentation, in the diagram model.

Every relation of the graded presentation is instantiated over the residue
sequences of the given size (plus, for the sandwich relation, over windows
of non-residue center values) and checked as an exact identity of algebra
elements.  Failures are data, not exceptions: each case yields a report
record carrying a witness.

The generic-parameter layer lives here too: seminormal idempotents over
Q(x), their eigenvalue/contraction actions, the two-variable partial
fraction identity behind the alternating count, and the scalar-level
correction lemmas with branch-coverage accounting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagrams import BrauerAlgebra, Element
from .exactarith import MultiPoly, RatFunc, qx_const, qx_content, qx_x
from .generators import GeneratorSet, pq_factor_lists
from . import tableaux as tb


@dataclass
class CheckReport:
    suite: str
    case: str
    status: str  # "pass" | "fail" | "trivial"
    detail: str = ""

    @property
    def ok(self):
        return self.status != "fail"


def _verdict(suite, case, lhs: Element, rhs: Element, note="") -> CheckReport:
    diff = lhs - rhs
    if diff.is_zero():
        status = "trivial" if lhs.is_zero() and rhs.is_zero() else "pass"
        return CheckReport(suite, case, status, note)
    witness = repr(diff)
    if len(witness) > 160:
        witness = witness[:157] + "..."
    return CheckReport(suite, case, "fail", f"{note} witness={witness}".strip())


def _zero_verdict(suite, case, lhs: Element, note="") -> CheckReport:
    if lhs.is_zero():
        return CheckReport(suite, case, "pass", note)
    witness = repr(lhs)
    if len(witness) > 160:
        witness = witness[:157] + "..."
    return CheckReport(suite, case, "fail", f"{note} witness={witness}".strip())


def _seqname(seq):
    return "(" + ",".join(str(v) for v in seq) + ")"


# ---------------------------------------------------------------------------
# relation suites in the specialized algebra


def _swap(seq, k):
    return seq[: k - 1] + (seq[k], seq[k - 1]) + seq[k + 1 :]


def _e_of(gens, seq):
    return gens.e.get(seq, gens.alg.zero())


def check_idempotent_relations(gens: GeneratorSet):
    out = []
    total = gens.alg.zero()
    for i in gens.resseqs:
        total = total + gens.e[i]
        out.append(
            _zero_verdict("idempotent", f"y1*e{_seqname(i)}", gens.y_elem(1) * gens.e[i])
        )
    out.append(_verdict("idempotent", "sum_e=1", total, gens.alg.one()))
    workload = len(gens.resseqs) ** 2 * len(gens.alg.diagrams)
    if workload <= 20_000_000:
        for a in gens.resseqs:
            for b in gens.resseqs:
                prod = gens.e[a] * gens.e[b]
                want = gens.e[a] if a == b else gens.alg.zero()
                out.append(
                    _verdict("idempotent", f"e{_seqname(a)}*e{_seqname(b)}", prod, want)
                )
    else:
        # the single-position projectors all commute (polynomials in the
        # commuting L_k), so vanishing of every same-position pair already
        # forces pairwise orthogonality of their products
        for a in gens.resseqs:
            out.append(
                _verdict(
                    "idempotent", f"e{_seqname(a)}^2", gens.e[a] * gens.e[a], gens.e[a]
                )
            )
        for k in range(1, gens.n + 1):
            for ci, c in enumerate(gens.res_values[k]):
                for c2 in gens.res_values[k][ci + 1 :]:
                    out.append(
                        _zero_verdict(
                            "idempotent",
                            f"proj{k}@{c}*proj{k}@{c2}",
                            gens.proj[(k, c)] * gens.proj[(k, c2)],
                        )
                    )
    for k in range(1, gens.n):
        for i in gens.resseqs:
            if i[k - 1] + i[k] != 0:
                out.append(
                    _zero_verdict(
                        "idempotent", f"e{_seqname(i)}*eps{k}", gens.e[i] * gens.eps[k]
                    )
                )
    # vanishing outside the residue sequences, over the attainable window
    misses = 0
    for i in _window(gens):
        if i not in gens.e:
            out.append(
                _zero_verdict(
                    "idempotent", f"e{_seqname(i)}=0 offgrid", gens.projector_product(i)
                )
            )
            misses += 1
            if misses >= 60:
                break
    return out


def _window(gens: GeneratorSet):
    """Tuples in prod_k Res(k) with the forced first entry, depth-first."""
    import itertools

    first = (gens.delta - 1) / 2
    values = [sorted(gens.res_values[k]) for k in range(2, gens.n + 1)]
    for rest in itertools.product(*values):
        yield (first,) + rest


def check_commutation_relations(gens: GeneratorSet):
    out = []
    n = gens.n
    for k in range(1, n + 1):
        for i in gens.resseqs:
            out.append(
                _verdict(
                    "commutation",
                    f"y{k}*e{_seqname(i)}",
                    gens.y_elem(k) * gens.e[i],
                    gens.e[i] * gens.y_elem(k),
                )
            )
    for k in range(1, n):
        for i in gens.resseqs:
            out.append(
                _verdict(
                    "commutation",
                    f"psi{k}~e{_seqname(i)}",
                    gens.e[i] * gens.psi[k],
                    gens.psi[k] * _e_of(gens, _swap(i, k)),
                )
            )
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            out.append(
                _verdict(
                    "commutation",
                    f"y{a}*y{b}",
                    gens.y_elem(a) * gens.y_elem(b),
                    gens.y_elem(b) * gens.y_elem(a),
                )
            )
    for k in range(1, n + 1):
        for r in range(1, n):
            if abs(k - r) <= 1:
                continue
            out.append(
                _verdict(
                    "commutation",
                    f"y{k}*psi{r}",
                    gens.y_elem(k) * gens.psi[r],
                    gens.psi[r] * gens.y_elem(k),
                )
            )
            out.append(
                _verdict(
                    "commutation",
                    f"y{k}*eps{r}",
                    gens.y_elem(k) * gens.eps[r],
                    gens.eps[r] * gens.y_elem(k),
                )
            )
    for k in range(1, n):
        for r in range(k + 2, n):
            for (na, xa) in (("psi", gens.psi[k]), ("eps", gens.eps[k])):
                for (nb, xb) in (("psi", gens.psi[r]), ("eps", gens.eps[r])):
                    out.append(
                        _verdict(
                            "commutation", f"{na}{k}*{nb}{r}", xa * xb, xb * xa
                        )
                    )
    return out


def check_essential_commutation(gens: GeneratorSet):
    out = []
    for k in range(1, gens.n):
        yp = gens.y_elem(k) * gens.psi[k]
        py = gens.psi[k] * gens.y_elem(k)
        pyy = gens.psi[k] * gens.y_elem(k + 1)
        yyp = gens.y_elem(k + 1) * gens.psi[k]
        for i in gens.resseqs:
            ei = gens.e[i]
            kron = ei if i[k - 1] == i[k] else gens.alg.zero()
            mid = ei * gens.eps[k] * _e_of(gens, _swap(i, k))
            out.append(
                _verdict(
                    "essential-commutation",
                    f"left k={k} i={_seqname(i)}",
                    ei * yp,
                    ei * pyy + mid - kron,
                )
            )
            out.append(
                _verdict(
                    "essential-commutation",
                    f"right k={k} i={_seqname(i)}",
                    ei * py,
                    ei * yyp + mid - kron,
                )
            )
    return out


def check_inverse_relations(gens: GeneratorSet):
    """Squares of the intertwiners.

    The neighbour cases attach a difference of dots; two rival pairings of
    the difference with the two cases are in circulation, so both are tried
    and the valid one recorded (the model consistently gives
    (y_k - y_{k+1}) e(i) when i_k = i_{k+1} - 1).
    """
    out = []
    d = gens.delta
    for k in range(1, gens.n):
        sq = gens.psi[k] * gens.psi[k]
        for i in gens.resseqs:
            ik, ik1 = i[k - 1], i[k]
            h = tb.h_k(i, k, d)
            ei = gens.e[i]
            name = f"k={k} i={_seqname(i)}"
            if ik == ik1 or (ik + ik1 == 0 and h != 0):
                out.append(_zero_verdict("inverse", name + " [zero]", ei * sq))
                continue
            if abs(ik - ik1) == 1 and ik + ik1 != 0:
                lhs = ei * sq
                down = (gens.y_elem(k) - gens.y_elem(k + 1)) * ei
                up = (gens.y_elem(k + 1) - gens.y_elem(k)) * ei
                lemma_rhs = down if ik == ik1 - 1 else up
                listed_rhs = up if ik == ik1 - 1 else down
                ok_lemma = (lhs - lemma_rhs).is_zero()
                ok_listed = (lhs - listed_rhs).is_zero()
                if ok_lemma or ok_listed:
                    which = "down->y_k-y_k+1" if ok_lemma else "down->y_k+1-y_k"
                    if ok_lemma and ok_listed:
                        which = "either"
                    out.append(
                        CheckReport(
                            "inverse", name + " [dots]", "pass", f"case pairing: {which}"
                        )
                    )
                else:
                    out.append(
                        CheckReport("inverse", name + " [dots]", "fail", "no pairing matches")
                    )
                continue
            out.append(_verdict("inverse", name + " [unit]", ei * sq, ei))
        # off-grid zero cases: e(i) itself vanishes, so psi_k^2 must too
        misses = 0
        for i in _window(gens):
            if i in gens.e:
                continue
            out.append(
                _zero_verdict(
                    "inverse",
                    f"k={k} offgrid i={_seqname(i)}",
                    gens.projector_product(i) * sq,
                )
            )
            misses += 1
            if misses >= 20:
                break
    return out


def _y_combination(gens: GeneratorSet, i, k: int) -> Element:
    a1, a2, a3, a4 = tb.a_sets(i, k)
    total = gens.alg.zero()
    for r in a1:
        total = total + gens.y_elem(r)
    for r in a2:
        total = total - gens.y_elem(r).scale(2)
    for r in a3:
        total = total + gens.y_elem(r)
    for r in a4:
        total = total - gens.y_elem(r).scale(2)
    return total


def check_essential_idempotent(gens: GeneratorSet):
    out = []
    d = gens.delta
    half = Fraction(1, 2)
    for k in range(1, gens.n):
        for i in gens.resseqs:
            ik, ik1 = i[k - 1], i[k]
            cls = tb.classify(i, k, d)
            a = tb.a_k(i, k, d)
            ei = gens.e[i]
            blk = ei * gens.eps[k] * ei
            if ik + ik1 == 0 and cls == "0" and ik not in (half, -half):
                out.append(
                    _verdict(
                        "essential-idempotent",
                        f"diag0 k={k} i={_seqname(i)}",
                        blk,
                        ei.scale(Fraction(-1) ** a),
                    )
                )
            if cls == "+" and ik + ik1 == 0:
                # the balance hypothesis is carried by the proof; without it
                # the left side vanishes while the right side need not
                out.append(
                    _verdict(
                        "essential-idempotent",
                        f"diag+ k={k} i={_seqname(i)}",
                        blk,
                        ((gens.y_elem(k + 1) - gens.y_elem(k)) * ei).scale(
                            Fraction(-1) ** (a + 1)
                        ),
                    )
                )
            elif cls == "+":
                out.append(
                    _zero_verdict(
                        "essential-idempotent",
                        f"diag+unbal k={k} i={_seqname(i)}",
                        blk,
                    )
                )
            if ik == -ik1 == half and cls == "0":
                corr = (gens.y_elem(k) * blk).scale(2 * Fraction(-1) ** a)
                out.append(
                    _verdict(
                        "essential-idempotent",
                        f"halfshift-l k={k} i={_seqname(i)}",
                        gens.y_elem(k + 1) * ei,
                        gens.y_elem(k) * ei - corr,
                    )
                )
                out.append(
                    _verdict(
                        "essential-idempotent",
                        f"halfshift-r k={k} i={_seqname(i)}",
                        gens.y_elem(k + 1) * ei,
                        gens.y_elem(k) * ei - (blk * gens.y_elem(k)).scale(2 * Fraction(-1) ** a),
                    )
                )
            if (
                k >= 2
                and cls == "0"
                and ik == -half
                and i[k - 2] == half
                and ik1 == half
            ):
                am = tb.a_k(i, k - 1, d)
                blkm = ei * gens.eps[k - 1] * ei
                mixed = ei * gens.eps[k - 1] * gens.eps[k] * ei + ei * gens.eps[k] * gens.eps[k - 1] * ei
                diag = blk.scale(Fraction(-1) ** a)
                # two rival conventions, differing by the sign of the last
                # three terms
                listed = diag - blkm.scale(2 * Fraction(-1) ** am) + mixed
                derived = diag + blkm.scale(2 * Fraction(-1) ** am) - mixed
                ok_listed = (listed - ei).is_zero()
                ok_derived = (derived - ei).is_zero()
                if ok_listed or ok_derived:
                    which = "-2eps+mixed" if ok_listed else "+2eps-mixed"
                    if ok_listed and ok_derived:
                        which = "either"
                    out.append(
                        CheckReport(
                            "essential-idempotent",
                            f"halfchain k={k} i={_seqname(i)}",
                            "pass",
                            f"valid sign convention: {which}",
                        )
                    )
                else:
                    out.append(
                        CheckReport(
                            "essential-idempotent",
                            f"halfchain k={k} i={_seqname(i)}",
                            "fail",
                            "neither sign convention matches",
                        )
                    )
            if cls == "-" and ik + ik1 == 0:
                mixed = ei * (gens.eps[k] * gens.y_elem(k) + gens.y_elem(k) * gens.eps[k]) * ei
                out.append(
                    _verdict(
                        "essential-idempotent",
                        f"minus k={k} i={_seqname(i)}",
                        ei,
                        mixed.scale(Fraction(-1) ** a),
                    )
                )
    return out


def check_sandwich(gens: GeneratorSet):
    """The eps e(i) eps relation.

    The center i ranges over every replacement of the two contracted
    residues of an outer sequence j by a window value (c, -c); away from the
    contracted strands the center must agree with the outer sequences, since
    the contraction blocks only connect sequences that are equal there.
    Centers that fall outside the residue sequences exercise the vanishing
    branches.
    """
    out = []
    d = gens.delta
    half = Fraction(1, 2)
    index = set(gens.resseqs)
    for k in range(1, gens.n):
        outer = [j for j in gens.resseqs if j[k - 1] + j[k] == 0]
        centers = set()
        for j in outer:
            for c in gens.res_values[k]:
                if -c in gens.res_values[k + 1]:
                    centers.add((j, j[: k - 1] + (c, -c) + j[k + 1 :]))
        for j, i in sorted(centers):
            cls = tb.classify(i, k, d)
            emid = gens.e[i] if i in index else gens.projector_product(i)
            lhs = gens.e[j] * gens.eps[k] * emid * gens.eps[k]
            base = gens.e[j] * gens.eps[k]
            tag = "in-grid" if i in index else "offgrid"
            name = f"k={k} j={_seqname(j)} i=({i[k-1]},{i[k]}) [{tag}]"
            if cls == "0":
                z = tb.z_k(i, k, d)
                rep = _verdict("sandwich", "cls0 " + name, lhs, base.scale(z))
            elif cls == "-":
                rep = _zero_verdict("sandwich", "cls- " + name, lhs)
            else:
                a = tb.a_k(i, k, d)
                factor = Fraction(-1) ** a * (1 + int(i[k - 1] == -half))
                rhs = (_y_combination(gens, i, k) * base).scale(factor)
                rep = _verdict("sandwich", "cls+ " + name, lhs, rhs)
            out.append(rep)
    return out


def check_untwist(gens: GeneratorSet):
    out = []
    d = gens.delta
    half = Fraction(1, 2)
    for k in range(1, gens.n):
        pe = gens.psi[k] * gens.eps[k]
        ep = gens.eps[k] * gens.psi[k]
        for i in gens.resseqs:
            cls = tb.classify(i, k, d)
            ei = gens.e[i]
            if cls == "+" and i[k - 1] not in (0, -half):
                a = tb.a_k(i, k, d)
                out.append(
                    _verdict(
                        "untwist",
                        f"left k={k} i={_seqname(i)}",
                        ei * pe,
                        (ei * gens.eps[k]).scale(Fraction(-1) ** a),
                    )
                )
                out.append(
                    _verdict(
                        "untwist",
                        f"right k={k} i={_seqname(i)}",
                        ep * ei,
                        (gens.eps[k] * ei).scale(Fraction(-1) ** a),
                    )
                )
            else:
                out.append(
                    _zero_verdict("untwist", f"left0 k={k} i={_seqname(i)}", ei * pe)
                )
                out.append(
                    _zero_verdict("untwist", f"right0 k={k} i={_seqname(i)}", ep * ei)
                )
    return out


def check_tangle(gens: GeneratorSet):
    out = []
    for k in range(2, gens.n):
        out.append(
            _verdict(
                "tangle",
                f"slide-r k={k}",
                gens.eps[k] * gens.eps[k - 1] * gens.psi[k],
                gens.eps[k] * gens.psi[k - 1],
            )
        )
        out.append(
            _verdict(
                "tangle",
                f"slide-l k={k}",
                gens.psi[k] * gens.eps[k - 1] * gens.eps[k],
                gens.psi[k - 1] * gens.eps[k],
            )
        )
        out.append(
            _verdict(
                "tangle",
                f"absorb k={k}",
                gens.eps[k] * gens.eps[k - 1] * gens.eps[k],
                gens.eps[k],
            )
        )
        out.append(
            _verdict(
                "tangle",
                f"absorb' k={k}",
                gens.eps[k - 1] * gens.eps[k] * gens.eps[k - 1],
                gens.eps[k - 1],
            )
        )
    for k in range(1, gens.n):
        out.append(
            _zero_verdict(
                "tangle",
                f"balance k={k}",
                gens.eps[k] * (gens.y_elem(k) + gens.y_elem(k + 1)),
            )
        )
    return out


def check_braid(gens: GeneratorSet):
    out = []
    d = gens.delta
    half = Fraction(1, 2)
    for k in range(2, gens.n):
        braid = (
            gens.psi[k] * gens.psi[k - 1] * gens.psi[k]
            - gens.psi[k - 1] * gens.psi[k] * gens.psi[k - 1]
        )
        for i in gens.resseqs:
            a, b, c = i[k - 2], i[k - 1], i[k]
            target = _swap(_swap(_swap(i, k), k - 1), k)
            et = _e_of(gens, target)
            ei = gens.e[i]
            lhs = ei * braid
            name = f"k={k} i={_seqname(i)}"
            triple = (a == b == -c) or (a == -b == c) or (-a == b == c)
            if triple and not (a == -b == c):
                # repeated neighbours force the difference to vanish
                out.append(_zero_verdict("braid", name + " [repeat]", lhs))
            elif not triple and b + c == 0 and (a == b - 1 or a == -(b - 1)):
                rhs = ei * gens.eps[k] * gens.eps[k - 1] * et
                out.append(_verdict("braid", name + " [cap-r+]", lhs, rhs))
            elif not triple and b + c == 0 and (a == b + 1 or a == -(b + 1)):
                rhs = -(ei * gens.eps[k] * gens.eps[k - 1] * et)
                out.append(_verdict("braid", name + " [cap-r-]", lhs, rhs))
            elif not triple and a + b == 0 and (c == b - 1 or c == -(b - 1)):
                rhs = ei * gens.eps[k - 1] * gens.eps[k] * et
                out.append(_verdict("braid", name + " [cap-l+]", lhs, rhs))
            elif not triple and a + b == 0 and (c == b + 1 or c == -(b + 1)):
                rhs = -(ei * gens.eps[k - 1] * gens.eps[k] * et)
                out.append(_verdict("braid", name + " [cap-l-]", lhs, rhs))
            elif a == -b == c and b not in (0, half, -half) and tb.h_k(i, k, d) == 0:
                akm = tb.a_k(i, k - 1, d)
                rhs = -(ei * gens.eps[k - 1] * et).scale(Fraction(-1) ** akm)
                out.append(_verdict("braid", name + " [mid-k]", lhs, rhs))
            elif a == -b == c and b not in (0, half, -half) and tb.h_k(i, k - 1, d) == 0:
                ak = tb.a_k(i, k, d)
                akm = tb.a_k(i, k - 1, d)
                rhs1 = (ei * gens.eps[k] * et).scale(Fraction(-1) ** ak)
                rhs2 = (ei * gens.eps[k] * et).scale(Fraction(-1) ** akm)
                d1 = (lhs - rhs1).is_zero()
                d2 = (lhs - rhs2).is_zero()
                if d1 or d2:
                    which = "a_k" if d1 else "a_k-1"
                    if d1 and d2:
                        which = "either"
                    out.append(
                        CheckReport(
                            "braid", name + " [mid-k-1]", "pass", f"sign exponent: {which}"
                        )
                    )
                else:
                    out.append(
                        CheckReport("braid", name + " [mid-k-1]", "fail", "no sign matches")
                    )
            elif (
                a + b != 0
                and a + c != 0
                and b + c != 0
                and a == c == b - 1
            ):
                out.append(_verdict("braid", name + " [asc]", lhs, ei))
            elif (
                a + b != 0
                and a + c != 0
                and b + c != 0
                and a == c == b + 1
            ):
                out.append(_verdict("braid", name + " [desc]", lhs, -ei))
            else:
                out.append(_zero_verdict("braid", name + " [zero]", lhs))
    return out


def check_derived_identities(gens: GeneratorSet):
    out = []
    n = gens.n
    for k in range(1, n - 1):
        e_k, e_k1 = gens.eps[k], gens.eps[k + 1]
        p_k, p_k1 = gens.psi[k], gens.psi[k + 1]
        out.append(
            _verdict("derived", f"contract-slide-a k={k}", e_k * e_k1 * p_k, e_k * p_k1)
        )
        out.append(
            _verdict(
                "derived",
                f"contract-slide-a' k={k}",
                e_k * e_k1 * e_k * p_k1,
                e_k * p_k1,
            )
        )
        out.append(
            _verdict("derived", f"contract-slide-b k={k}", p_k * e_k1 * e_k, p_k1 * e_k)
        )
        out.append(
            _verdict(
                "derived",
                f"contract-slide-b' k={k}",
                p_k1 * e_k * e_k1 * e_k,
                p_k1 * e_k,
            )
        )
        out.append(
            _verdict(
                "derived",
                f"hourglass k={k}",
                p_k1 * e_k * p_k1,
                p_k * e_k1 * p_k,
            )
        )
        out.append(
            _verdict(
                "derived",
                f"hourglass' k={k}",
                p_k * e_k1 * e_k * e_k1 * p_k,
                p_k * e_k1 * p_k,
            )
        )
        # sandwiched slide with sign, blockwise; at larger sizes the right
        # index is sampled (deterministically) to keep the pass quadratic
        mid1 = e_k * p_k1 * e_k
        mid2 = e_k * e_k1 * p_k * e_k
        j_cap = len(gens.resseqs) if len(gens.resseqs) ** 2 <= 500 else 8
        for i in gens.resseqs:
            for both in (True,):
                blk = gens.e[i] * mid1
                blk2 = gens.e[i] * mid2
                base = gens.e[i] * e_k
                emitted = 0
                for j in gens.resseqs:
                    if emitted >= j_cap:
                        break
                    b1 = blk * gens.e[j]
                    b2 = blk2 * gens.e[j]
                    bb = base * gens.e[j]
                    if bb.is_zero() and b1.is_zero() and b2.is_zero():
                        continue
                    emitted += 1
                    name = f"pm k={k} i={_seqname(i)} j={_seqname(j)}"
                    if not (b1 - b2).is_zero():
                        out.append(CheckReport("derived", name, "fail", "two forms differ"))
                        continue
                    if b1.is_zero():
                        # the printed +- is incomplete: the block can vanish
                        out.append(CheckReport("derived", name, "pass", "sign 0"))
                    elif (b1 - bb).is_zero():
                        out.append(CheckReport("derived", name, "pass", "sign +"))
                    elif (b1 + bb).is_zero():
                        out.append(CheckReport("derived", name, "pass", "sign -"))
                    else:
                        out.append(
                            CheckReport(
                                "derived", name, "fail", "not proportional by +-1"
                            )
                        )
        out.append(
            _verdict(
                "derived",
                f"shift-y k={k}",
                gens.y_elem(k) * e_k1 * e_k,
                -(e_k1 * gens.y_elem(k + 1) * e_k),
            )
        )
        out.append(
            _verdict(
                "derived",
                f"shift-y' k={k}",
                gens.y_elem(k) * e_k1 * e_k,
                e_k1 * e_k * gens.y_elem(k + 2),
            )
        )
    for k in range(2, n - 1):
        em, e_k, ep = gens.eps[k - 1], gens.eps[k], gens.eps[k + 1]
        pm, p_k, pp = gens.psi[k - 1], gens.psi[k], gens.psi[k + 1]
        out.append(
            _verdict("derived", f"wide-slide k={k}", pp * em * e_k * ep, em * p_k * ep)
        )
        out.append(
            _verdict(
                "derived", f"wide-slide' k={k}", em * p_k * ep, em * e_k * ep * pm
            )
        )
        out.append(
            _verdict("derived", f"wide-absorb k={k}", ep * em * e_k * ep, em * ep)
        )
        out.append(
            _verdict(
                "derived", f"wide-absorb' k={k}", em * ep, em * e_k * ep * em
            )
        )
        out.append(
            _verdict(
                "derived", f"wide-hourglass k={k}", pp * em * e_k * pp, em * p_k * ep * p_k
            )
        )
        out.append(
            _verdict(
                "derived",
                f"wide-hourglass' k={k}",
                em * p_k * ep * p_k,
                em * e_k * ep * pm * p_k,
            )
        )
    return out


RELATION_SUITES = {
    "idempotent": check_idempotent_relations,
    "commutation": check_commutation_relations,
    "essential-commutation": check_essential_commutation,
    "inverse": check_inverse_relations,
    "essential-idempotent": check_essential_idempotent,
    "sandwich": check_sandwich,
    "untwist": check_untwist,
    "tangle": check_tangle,
    "braid": check_braid,
    "derived": check_derived_identities,
}


def run_relation_suite(gens: GeneratorSet, suites=None, deadline=None):
    """Run the chosen suites; returns (reports, complete_flag)."""
    names = list(RELATION_SUITES) if suites in (None, "all", ["all"]) else list(suites)
    reports = []
    import time

    for name in names:
        if name not in RELATION_SUITES:
            raise ValueError(f"unknown suite {name!r}")
        if deadline is not None and time.monotonic() > deadline:
            return reports, False
        reports.extend(RELATION_SUITES[name](gens))
    return reports, True


def coverage_summary(reports):
    """Per-suite counts: (pass, fail, trivial); suites with no nontrivial
    instance are flagged by the caller."""
    summary = {}
    for rep in reports:
        p, f, t = summary.get(rep.suite, (0, 0, 0))
        if rep.status == "pass":
            p += 1
        elif rep.status == "fail":
            f += 1
        else:
            t += 1
        summary[rep.suite] = (p, f, t)
    return summary


# ---------------------------------------------------------------------------
# the generic-parameter (seminormal) layer


def content_function(node) -> RatFunc:
    sign, off = tb.content_offset(node)
    return qx_content(sign, off)


def content_values_at(k: int) -> list[RatFunc]:
    return [qx_content(s, o) for s, o in sorted(tb.contents_at(k))]


class SeminormalLayer:
    """Primitive idempotents of the generic-parameter algebra."""

    def __init__(self, n: int):
        self.n = n
        self.alg = BrauerAlgebra(n, qx_x())
        self.alg.enable_table()
        self.jm = self.alg.jm_elements()
        self.tabs = tb.all_updown(n)
        self._f: dict = {}

    def idempotent(self, t) -> Element:
        if t in self._f:
            return self._f[t]
        out = self.alg.one()
        for k in range(1, self.n + 1):
            ck = content_function(t[k - 1])
            for c in content_values_at(k):
                if c == ck:
                    continue
                out = out * (self.jm[k - 1] - self.alg.scalar(c)).scale(
                    (ck - c).invert()
                )
        self._f[t] = out
        return out

    def neighbours(self, t, k: int):
        """All u with u ~ t at the contraction position k (u(k) + u(k+1) = 0)."""
        walk = tb.shapes(t)
        mu = walk[k - 1]
        out = []
        for r, c in tb.addable_nodes(mu):
            node = (1, r, c)
            u = t[: k - 1] + (node, (-1, r, c)) + t[k + 1 :]
            out.append(u)
        for r, c in tb.removable_nodes(mu):
            node = (-1, r, c)
            u = t[: k - 1] + (node, (1, r, c)) + t[k + 1 :]
            out.append(u)
        return out

    def contraction_coeff(self, t, k: int) -> RatFunc:
        """e_k(t, t) = (2 c_t(k) + 1) prod (c_t(k) + c_u(k))/(c_t(k) - c_u(k))."""
        ck = content_function(t[k - 1])
        out = ck * 2 + 1
        for u in self.neighbours(t, k):
            if u == t:
                continue
            cu = content_function(u[k - 1])
            out = out * (ck + cu) * (ck - cu).invert()
        return out


def seminormal_suite(n: int, delta) -> list[CheckReport]:
    delta = Fraction(delta)
    layer = SeminormalLayer(n)
    out = []
    tabs = layer.tabs
    idems = {t: layer.idempotent(t) for t in tabs}
    total = layer.alg.zero()
    for t in tabs:
        ft = idems[t]
        total = total + ft
        out.append(_verdict("seminormal", f"F^2 t={t}", ft * ft, ft))
    out.append(_verdict("seminormal", "sum_F=1", total, layer.alg.one()))
    for a_i, s in enumerate(tabs):
        for t in tabs[a_i + 1 :]:
            out.append(
                _zero_verdict("seminormal", f"F*F s={s} t={t}", idems[s] * idems[t])
            )
    for t in tabs:
        ft = idems[t]
        for k in range(1, n + 1):
            ck = content_function(t[k - 1])
            out.append(
                _verdict(
                    "seminormal",
                    f"L{k} eig t={t}",
                    layer.jm[k - 1] * ft,
                    ft.scale(ck),
                )
            )
    for t in tabs:
        walk = tb.shapes(t)
        ft = idems[t]
        for k in range(1, n):
            if walk[k - 1] == walk[k + 1]:
                ekt = layer.contraction_coeff(t, k)
                out.append(
                    _verdict(
                        "seminormal",
                        f"cap t={t} k={k}",
                        ft * layer.alg.e(k) * ft,
                        ft.scale(ekt),
                    )
                )
                ck = content_function(t[k - 1])
                skt = (ekt - 1) * (ck * 2).invert()
                out.append(
                    _verdict(
                        "seminormal",
                        f"crossing t={t} k={k}",
                        ft * layer.alg.s(k) * ft,
                        ft.scale(skt),
                    )
                )
            else:
                swapped = tb.swap_entries(t, k)
                if not tb.is_updown(swapped):
                    ck = content_function(t[k - 1])
                    ck1 = content_function(t[k])
                    out.append(
                        _verdict(
                            "seminormal",
                            f"blocked t={t} k={k}",
                            ft * layer.alg.s(k) * ft,
                            ft.scale((ck1 - ck).invert()),
                        )
                    )
    # specialization: sums over a residue class are regular at x = delta
    gens = GeneratorSet(n, delta)
    by_res: dict = {}
    for t in tabs:
        by_res.setdefault(tb.residue_sequence(t, delta), []).append(t)
    for seq, ts in sorted(by_res.items()):
        total = layer.alg.zero()
        for t in ts:
            total = total + idems[t]
        point = (delta,)
        regular = all(c.regular_at(point) for c in total.coeffs.values())
        if not regular:
            out.append(
                CheckReport(
                    "seminormal",
                    f"specialize i={_seqname(seq)}",
                    "fail",
                    "pole at the parameter",
                )
            )
            continue
        coeffs = {}
        for d, c in total.coeffs.items():
            v = c.evaluate(point)
            if v:
                coeffs[d] = v
        specialized = Element(gens.alg, coeffs)
        out.append(
            _verdict(
                "seminormal",
                f"specialize i={_seqname(seq)}",
                specialized,
                gens.e.get(seq, gens.alg.zero()),
            )
        )
    return out


# ---------------------------------------------------------------------------
# the two-variable partial-fraction identity


_UV = ("u", "x")


def _uv_const(v):
    return RatFunc.const(_UV, v)


def _uv(name):
    return RatFunc.var(_UV, name)


def _uv_content(node) -> RatFunc:
    sign, off = tb.content_offset(node)
    x = _uv("x")
    base = x * Fraction(1, 2) + _uv_const(Fraction(off) - Fraction(1, 2))
    return base if sign > 0 else -base


def nazarov_identity_check(t, k: int) -> CheckReport:
    """The exact two-variable identity equating the telescoping product over
    earlier contents with the product over contraction neighbours.

    Both sides tend to 1 as u grows, which is why the right side must be a
    product of the neighbour factors, not their sum.
    """
    name = f"t={t} k={k}"
    if not (t[k - 1][0] == -t[k][0] and t[k - 1][1:] == t[k][1:]):
        return CheckReport("nazarov", name, "trivial", "positions do not cancel")
    u = _uv("u")
    x = _uv("x")
    half = Fraction(1, 2)
    lead = (u + x * half - _uv_const(half)) * (u - x * half + _uv_const(half)).invert()
    lhs = lead
    for r in range(1, k):
        cr = _uv_content(t[r - 1])
        lhs = lhs * ((u + cr) ** 2 - 1) * (((u - cr) ** 2 - 1).invert())
        lhs = lhs * (u - cr) ** 2 * ((u + cr) ** 2).invert()
    walk = tb.shapes(t)
    mu = walk[k - 1]
    rhs = RatFunc.const(_UV, 1)
    for r, c in tb.addable_nodes(mu):
        cs = _uv_content((1, r, c))
        rhs = rhs * (u + cs) * (u - cs).invert()
    for r, c in tb.removable_nodes(mu):
        cs = _uv_content((-1, r, c))
        rhs = rhs * (u + cs) * (u - cs).invert()
    if lhs == rhs:
        return CheckReport("nazarov", name, "pass")
    return CheckReport("nazarov", name, "fail")


def nazarov_suite(n: int) -> list[CheckReport]:
    out = []
    for t in tb.all_updown(n):
        for k in range(1, n):
            if t[k - 1][0] == -t[k][0] and t[k - 1][1:] == t[k][1:]:
                out.append(nazarov_identity_check(t, k))
    return out


# ---------------------------------------------------------------------------
# scalar-level correction lemmas over Q(x)


def _poly_eval_generic(p: MultiPoly, values):
    """Evaluate a polynomial at arbitrary commuting ring elements."""
    total = None
    for exp, coeff in p.terms.items():
        term = qx_const(coeff)
        for v, e in zip(values, exp):
            for _ in range(e):
                term = term * v
        total = term if total is None else total + term
    return total if total is not None else qx_const(0)


def _factor_scalar(desc, contents, k: int) -> RatFunc:
    inv, sign, dcoef, var, vcoef, const = desc
    d = (contents[k - 1] - contents[k]) * Fraction(1, 2)
    val = d * dcoef + qx_const(const)
    if var is not None:
        val = val + contents[var - 1] * vcoef
    return val.invert() * sign if inv else val * sign


def pq_scalar_values(t, k: int, delta) -> tuple[RatFunc, RatFunc]:
    """P_k, Q_k on one tableau: factor selection at the residue point,
    evaluation at the generic contents."""
    seq = tb.residue_sequence(t, Fraction(delta))
    contents = [content_function(node) for node in t]
    p_facts, q_facts = pq_factor_lists(seq, k)
    p = qx_const(1)
    for w in p_facts:
        p = p * _factor_scalar(w, contents, k)
    q = qx_const(1)
    for w in q_facts:
        q = q * _factor_scalar(w, contents, k)
    return p, q


def pq_lemma_checks(n: int, delta) -> tuple[list[CheckReport], dict]:
    delta = Fraction(delta)
    layer = SeminormalLayer(n)
    out = []
    coverage = {"pq3-class-0": 0, "pq3-class--": 0, "pq3-class-+": 0}
    half = Fraction(1, 2)
    for t in layer.tabs:
        seq = tb.residue_sequence(t, delta)
        contents = [content_function(node) for node in t]
        for k in range(1, n):
            # relation between inverse corrections across one crossing
            swapped = tb.swap_entries(t, k)
            if tb.is_updown(swapped):
                u = swapped
                pt, _qt = pq_scalar_values(t, k, delta)
                _pu, qu = pq_scalar_values(u, k, delta)
                cu = content_function(u[k - 1])
                cu1 = content_function(u[k])
                # the cases are keyed to the swapped sequence, i.e. to
                # i_k = i_{k+1} - 1 in the residues of t
                if seq[k] == seq[k - 1]:
                    want = (qx_const(1) - cu + cu1).invert()
                    tag = "equal"
                elif seq[k - 1] == seq[k] - 1:
                    want = cu - cu1
                    tag = "down"
                else:
                    want = (cu - cu1) * (qx_const(1) - cu + cu1).invert()
                    tag = "other"
                got = (pt * qu).invert()
                out.append(
                    CheckReport(
                        "pq-crossing",
                        f"t={t} k={k} [{tag}]",
                        "pass" if got == want else "fail",
                    )
                )
            # telescoping of adjacent corrections on a double cap
            if k >= 2 and t[k - 2] == t[k] and t[k - 2][0] == -t[k - 1][0] \
               and t[k - 2][1:] == t[k - 1][1:]:
                pt, qt = pq_scalar_values(t, k, delta)
                ptm, qtm = pq_scalar_values(t, k - 1, delta)
                ok = (qt * ptm == qx_const(1)) and (pt * qtm == qx_const(1))
                out.append(
                    CheckReport(
                        "pq-telescope", f"t={t} k={k}", "pass" if ok else "fail"
                    )
                )
            # diagonal values against the contraction coefficient
            if seq[k - 1] + seq[k] == 0 and t[k - 1][0] == -t[k][0] \
               and t[k - 1][1:] == t[k][1:]:
                cls = tb.classify(seq, k, delta)
                a = tb.a_k(seq, k, delta)
                pt, qt = pq_scalar_values(t, k, delta)
                ekt = layer.contraction_coeff(t, k)
                shift = (contents[k - 1] - qx_const(seq[k - 1])) * 2
                if cls == "0":
                    want = ekt * Fraction(-1) ** a
                    coverage["pq3-class-0"] += 1
                elif cls == "-":
                    want = ekt * shift * Fraction(-1) ** a
                    coverage["pq3-class--"] += 1
                else:
                    want = ekt * shift.invert() * Fraction(-1) ** a
                    coverage["pq3-class-+"] += 1
                out.append(
                    CheckReport(
                        "pq-diagonal",
                        f"t={t} k={k} [{cls}]",
                        "pass" if pt * qt == want else "fail",
                    )
                )
            # the cancellation value against the crossing coefficient
            if seq[k - 1] == seq[k]:
                pt, qt = pq_scalar_values(t, k, delta)
                vval = (pt * qt - 1) * (contents[k - 1] - contents[k]).invert()
                # consistency of the defining quotient
                ok = pt * qt == (contents[k - 1] - contents[k]) * vval + 1
                out.append(
                    CheckReport(
                        "v-quotient", f"t={t} k={k}", "pass" if ok else "fail"
                    )
                )
                if t[k - 1][0] == -t[k][0] and t[k - 1][1:] == t[k][1:]:
                    ekt = layer.contraction_coeff(t, k)
                    ck = content_function(t[k - 1])
                    skt = (ekt - 1) * (ck * 2).invert()
                    out.append(
                        CheckReport(
                            "v-crossing",
                            f"t={t} k={k}",
                            "pass" if vval == skt else "fail",
                        )
                    )
                # stability under distant swaps
                for r in range(1, k - 1):
                    s = tb.swap_entries(t, r)
                    if not tb.is_updown(s):
                        continue
                    ps, qs = pq_scalar_values(s, k, delta)
                    cs = [content_function(node) for node in s]
                    vs = (ps * qs - 1) * (cs[k - 1] - cs[k]).invert()
                    out.append(
                        CheckReport(
                            "v-stability",
                            f"t={t} k={k} r={r}",
                            "pass" if vs == vval else "fail",
                        )
                    )
    # pure sign identity at balanced positions
    for seq in tb.residue_sequences(n, delta):
        for k in range(1, n):
            if seq[k - 1] + seq[k] == 0 and tb.h_k(seq, k, delta) == 0:
                if seq[k - 1] == 0:
                    ok = Fraction(-1) ** tb.a_k(seq, k, delta) == 1
                else:
                    other = _swap(seq, k)
                    ok = (
                        Fraction(-1)
                        ** (tb.a_k(seq, k, delta) + tb.a_k(other, k, delta))
                        == 1
                    )
                out.append(
                    CheckReport(
                        "sign-balance",
                        f"i={_seqname(seq)} k={k}",
                        "pass" if ok else "fail",
                    )
                )
    return out, coverage
