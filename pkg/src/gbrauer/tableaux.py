"""Partitions, up-down tableaux, residues and the reduction machinery.

A partition is a tuple of weakly decreasing positive ints.  A signed node is
a triple (sign, row, col) with sign +1 for adding a box and -1 for removing
one; rows and columns are 1-based.  An up-down tableau of size n is a tuple
of n signed nodes whose induced shape walk stays inside Young's lattice.

Residues depend on the ambient parameter delta: a box (r, c) has residue
(delta-1)/2 + c - r, negated for removals.  All residues are exact
Fractions, so tests against 0, +-1/2, +-1 are exact.

Indices in the public API are 1-based to match the usual conventions for
positions in a sequence of n steps (t(k), s_k, and so on).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Node = tuple[int, int, int]  # (sign, row, col)
Tableau = tuple[Node, ...]
Partition = tuple[int, ...]
Cell = tuple[Partition, int]  # (shape, number of removals)

ORIGIN: Node = (1, 1, 1)


class TableauError(Exception):
    pass


# ---------------------------------------------------------------------------
# partitions


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def addable_nodes(shape: Partition) -> list[tuple[int, int]]:
    """Positions (row, col) where a box can be added, sorted by (row, col)."""
    if not shape:
        return [(1, 1)]
    out = [(1, shape[0] + 1)]
    for r in range(1, len(shape)):
        if shape[r] < shape[r - 1]:
            out.append((r + 1, shape[r] + 1))
    out.append((len(shape) + 1, 1))
    return sorted(out)


def removable_nodes(shape: Partition) -> list[tuple[int, int]]:
    out = []
    for r in range(len(shape)):
        if r + 1 == len(shape) or shape[r] > shape[r + 1]:
            out.append((r + 1, shape[r]))
    return sorted(out)


def add_box(shape: Partition, row: int, col: int) -> Partition:
    if (row, col) not in addable_nodes(shape):
        raise TableauError(f"({row},{col}) not addable to {shape}")
    parts = list(shape)
    if row == len(parts) + 1:
        parts.append(1)
    else:
        parts[row - 1] += 1
    return tuple(parts)


def remove_box(shape: Partition, row: int, col: int) -> Partition:
    if (row, col) not in removable_nodes(shape):
        raise TableauError(f"({row},{col}) not removable from {shape}")
    parts = list(shape)
    parts[row - 1] -= 1
    if parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def partition_dominates(mu: Partition, lam: Partition) -> bool:
    """True if lam is dominated by mu (partial sums of mu are >=)."""
    sl = sm = 0
    for i in range(max(len(lam), len(mu))):
        sl += lam[i] if i < len(lam) else 0
        sm += mu[i] if i < len(mu) else 0
        if sl > sm:
            return False
    return True


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in descending lexicographic order."""
    if n == 0:
        return ((),)
    out = []

    def rec(rest, maxpart, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rest, maxpart), 0, -1):
            rec(rest - p, p, prefix + [p])

    rec(n, n, [])
    return tuple(out)


def cells(n: int) -> list[Cell]:
    """All (shape, f) with |shape| + 2f = n, in ascending lexicographic order.

    The order is: smaller f first; for equal f, shapes ascending
    lexicographically.  This is the total refinement of the dominance order
    used by the cellular filtration.
    """
    out = []
    for f in range(n // 2 + 1):
        for shape in sorted(partitions_of(n - 2 * f)):
            out.append((shape, f))
    return out


def cell_dominates(big: Cell, small: Cell) -> bool:
    """Dominance: (lam,f) is below (mu,m) if f < m, or f = m and lam below mu."""
    mu, m = big
    lam, f = small
    if f < m:
        return True
    if f > m:
        return False
    return partition_dominates(mu, lam)


def cell_lex_less(a: Cell, b: Cell) -> bool:
    """Strict lexicographic order: compare f, then the shapes."""
    if a[1] != b[1]:
        return a[1] < b[1]
    return a[0] < b[0]


def cross_level_greater(a: Cell, b: Cell) -> bool:
    """Strict > in the total order joining all levels.

    Lower levels sit above higher ones; within a level, larger f first, then
    shapes compared lexicographically.
    """
    la = sum(a[0]) + 2 * a[1]
    lb = sum(b[0]) + 2 * b[1]
    if la != lb:
        return la < lb
    if a[1] != b[1]:
        return a[1] > b[1]
    return a[0] > b[0]


# ---------------------------------------------------------------------------
# up-down tableaux


def node_applies(shape: Partition, node: Node) -> bool:
    sign, r, c = node
    if sign > 0:
        return (r, c) in addable_nodes(shape)
    return (r, c) in removable_nodes(shape)


def apply_node(shape: Partition, node: Node) -> Partition:
    sign, r, c = node
    return add_box(shape, r, c) if sign > 0 else remove_box(shape, r, c)


def shapes(t: Tableau) -> list[Partition]:
    """The shape walk lam(0) = (), lam(1), ..., lam(n)."""
    walk = [()]
    for node in t:
        walk.append(apply_node(walk[-1], node))
    return walk


def is_updown(t) -> bool:
    shape: Partition = ()
    for node in t:
        if not node_applies(shape, node):
            return False
        shape = apply_node(shape, node)
    return True


def final_shape(t: Tableau) -> Partition:
    return shapes(t)[-1]


def cell_of(t: Tableau) -> Cell:
    shape = final_shape(t)
    return shape, (len(t) - sum(shape)) // 2


def content_offset(node: Node) -> tuple[int, int]:
    """(sign, col - row): the content is sign*((x-1)/2 + col - row)."""
    sign, r, c = node
    return sign, c - r


def residue(node: Node, delta: Fraction) -> Fraction:
    sign, r, c = node
    return sign * ((Fraction(delta) - 1) / 2 + (c - r))


def residue_sequence(t: Tableau, delta: Fraction) -> tuple[Fraction, ...]:
    return tuple(residue(node, delta) for node in t)


def swap_entries(t: Tableau, k: int) -> Tableau:
    """The right action of the transposition of positions k, k+1 (1-based)."""
    if not 1 <= k <= len(t) - 1:
        raise TableauError(f"transposition index {k} out of range")
    lst = list(t)
    lst[k - 1], lst[k] = lst[k], lst[k - 1]
    return tuple(lst)


def swap_is_updown(t: Tableau, k: int) -> bool:
    return is_updown(swap_entries(t, k))


def adjacent_boxes(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return (a[0] == b[0] and abs(a[1] - b[1]) == 1) or (
        a[1] == b[1] and abs(a[0] - b[0]) == 1
    )


def swap_allowed_by_cases(t: Tableau, k: int) -> bool:
    """The four sign/adjacency cases characterizing when t.s_k stays valid."""
    sa, ra, ca = t[k - 1]
    sb, rb, cb = t[k]
    if sa > 0 and sb > 0:
        return not adjacent_boxes((ra, ca), (rb, cb))
    if sa < 0 and sb < 0:
        return not adjacent_boxes((ra, ca), (rb, cb))
    # opposite signs: allowed unless the two nodes cancel
    return (ra, ca) != (rb, cb)


def _extensions(shape: Partition):
    for r, c in addable_nodes(shape):
        yield (1, r, c)
    for r, c in removable_nodes(shape):
        yield (-1, r, c)


def all_updown(n: int) -> list[Tableau]:
    """Every up-down tableau of size n, in the fixed depth-first order."""
    return _all_updown_cached(n)


@lru_cache(maxsize=None)
def _all_updown_cached(n: int) -> tuple[Tableau, ...]:
    out: list[Tableau] = []

    def rec(shape, prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for node in _extensions(shape):
            prefix.append(node)
            rec(apply_node(shape, node), prefix)
            prefix.pop()

    rec((), [])
    return tuple(out)


def updown_of_shape(n: int, shape: Partition, f: int | None = None) -> list[Tableau]:
    shape = tuple(shape)
    if f is not None and sum(shape) + 2 * f != n:
        raise TableauError(f"|shape| + 2f = {sum(shape) + 2 * f} != {n}")
    return [t for t in all_updown(n) if final_shape(t) == shape]


def updown_with_residues(n: int, delta: Fraction, seq) -> list[Tableau]:
    """All tableaux whose residue sequence equals seq (depth-first, pruned)."""
    seq = tuple(Fraction(s) for s in seq)
    if len(seq) != n:
        raise TableauError("residue sequence has wrong length")
    out: list[Tableau] = []

    def rec(shape, prefix):
        k = len(prefix)
        if k == n:
            out.append(tuple(prefix))
            return
        for node in _extensions(shape):
            if residue(node, delta) == seq[k]:
                prefix.append(node)
                rec(apply_node(shape, node), prefix)
                prefix.pop()

    rec((), [])
    return out


def residue_sequences(n: int, delta: Fraction) -> list[tuple[Fraction, ...]]:
    """All residue sequences of size-n up-down tableaux, sorted."""
    seen = {residue_sequence(t, delta) for t in all_updown(n)}
    return sorted(seen)


def contents_at(k: int) -> set[tuple[int, int]]:
    """All contents (sign, col-row) that step k of a tableau can carry.

    Level k-1 can be any shape with |shape| + 2f = k - 1; step k then adds or
    removes one of its boxes.
    """
    out = set()
    for shape, _f in cells(k - 1):
        for r, c in addable_nodes(shape):
            out.add((1, c - r))
        for r, c in removable_nodes(shape):
            out.add((-1, c - r))
    return out


def residue_values_at(k: int, delta: Fraction) -> set[Fraction]:
    half = (Fraction(delta) - 1) / 2
    return {sign * (half + off) for sign, off in contents_at(k)}


# ---------------------------------------------------------------------------
# the alternating-count function h_k and the position classification


def h_k(seq, k: int, delta: Fraction) -> int:
    seq = tuple(Fraction(s) for s in seq)
    half = (Fraction(delta) - 1) / 2
    ik = seq[k - 1]
    before = seq[: k - 1]
    val = int(ik == -half) - int(ik == half)
    val += sum(1 for r in before if r == -ik + 1 or r == -ik - 1)
    val -= sum(1 for r in before if r == ik + 1 or r == ik - 1)
    val += 2 * sum(1 for r in before if r == ik)
    val -= 2 * sum(1 for r in before if r == -ik)
    return val


def classify(seq, k: int, delta: Fraction) -> str:
    """The class '+', '-' or '0' of position k."""
    ik = Fraction(seq[k - 1])
    h = h_k(seq, k, delta)
    half = Fraction(1, 2)
    if ik not in (0, -half):
        if h == 0:
            return "+"
        if h == -2:
            return "-"
        return "0"
    if ik == -half:
        if h == -1:
            return "+"
        if h == -3:
            return "-"
        return "0"
    return "0"


def deg_k(seq, k: int, delta: Fraction) -> int:
    cls = classify(seq, k, delta)
    return {"+": 1, "-": -1, "0": 0}[cls]


def a_sets(seq, k: int) -> tuple[list[int], list[int], list[int], list[int]]:
    """The four index subsets of 1..k-1 entering the sandwich relation."""
    seq = tuple(Fraction(s) for s in seq)
    ik = seq[k - 1]
    a1 = [r for r in range(1, k) if seq[r - 1] in (-ik + 1, -ik - 1)]
    a2 = [r for r in range(1, k) if seq[r - 1] == ik]
    a3 = [r for r in range(1, k) if seq[r - 1] in (ik + 1, ik - 1)]
    a4 = [r for r in range(1, k) if seq[r - 1] == -ik]
    return a1, a2, a3, a4


def a_k(seq, k: int, delta: Fraction) -> int:
    seq = tuple(Fraction(s) for s in seq)
    half = (Fraction(delta) - 1) / 2
    m = (seq[k - 1] - seq[k]) / 2
    kron = int(m == half)
    count_pm1 = sum(1 for r in seq[: k - 1] if r in (-1, 1))
    if m == 0:
        return count_pm1 + 1 + kron
    if m == 1:
        return count_pm1 + kron
    if m == Fraction(1, 2):
        return kron
    hits = {m, m - 1, -m, -m + 1}
    return sum(1 for r in seq[: k - 1] if r in hits) + kron


def a_star_k(seq, k: int, delta: Fraction) -> int:
    seq = tuple(Fraction(s) for s in seq)
    if seq[k - 1] != 0:
        raise TableauError("defined only at positions with residue 0")
    kron = int(Fraction(delta) == 1)
    return sum(1 for r in seq[: k - 1] if r in (-1, 1)) + kron


def z_k(seq, k: int, delta: Fraction) -> Fraction:
    seq = tuple(Fraction(s) for s in seq)
    ik = seq[k - 1]
    h = h_k(seq, k, delta)
    a = a_k(seq, k, delta)
    if ik == 0:
        return Fraction(1 + (-1) ** a, 2)
    if -2 <= h < 0:
        return Fraction((-1) ** a * (1 + int(ik == Fraction(-1, 2))))
    return Fraction(0)


# ---------------------------------------------------------------------------
# membership tests for residue sequences


def is_residue_sequence(seq, delta: Fraction):
    """Exact test with a certificate.

    Returns (True, witness_tableau) or (False, k) where k is the first
    position at which no extension exists.
    """
    seq = tuple(Fraction(s) for s in seq)
    n = len(seq)

    def rec(shape, prefix):
        k = len(prefix)
        if k == n:
            return tuple(prefix)
        for node in _extensions(shape):
            if residue(node, delta) == seq[k]:
                prefix.append(node)
                found = rec(apply_node(shape, node), prefix)
                if found is not None:
                    return found
                prefix.pop()
        return None

    witness = rec((), [])
    if witness is not None:
        return True, witness
    # locate the first failing position for the certificate
    depth = 0

    def deepest(shape, k):
        nonlocal depth
        depth = max(depth, k)
        if k == n:
            return
        for node in _extensions(shape):
            if residue(node, delta) == seq[k]:
                deepest(apply_node(shape, node), k + 1)

    deepest((), 0)
    return False, depth + 1


def residue_sequence_quicktest(seq, delta: Fraction):
    """Sufficient conditions: True/False when decisive, None when not.

    h_k outside {-2,-1,0} anywhere rules the sequence out; h_k in {-2,-1}
    everywhere (allowing zero entries with odd companion count) rules it in.
    """
    seq = tuple(Fraction(s) for s in seq)
    sufficient = True
    for k in range(1, len(seq) + 1):
        h = h_k(seq, k, delta)
        if h not in (-2, -1, 0):
            return False
        if h in (-2, -1):
            continue
        if seq[k - 1] == 0 and a_star_k(seq, k, delta) % 2 == 1:
            continue
        sufficient = False
    return True if sufficient else None


# ---------------------------------------------------------------------------
# degrees


def step_degree(t: Tableau, k: int, delta: Fraction) -> int:
    """Degree contribution of step k (1-based)."""
    walk = shapes(t)
    lam, mu = walk[k - 1], walk[k]
    sign, r, c = t[k - 1]
    res = residue((1, r, c), delta)
    if sign > 0:
        added = [
            (rr, cc)
            for rr, cc in addable_nodes(lam)
            if rr > r and residue((1, rr, cc), delta) == res
        ]
        removed = [
            (rr, cc)
            for rr, cc in removable_nodes(lam)
            if rr > r and residue((1, rr, cc), delta) == res
        ]
        return len(added) - len(removed)
    added = [
        (rr, cc)
        for rr, cc in addable_nodes(mu)
        if rr != r and residue((1, rr, cc), delta) == -res
    ]
    removed = [
        (rr, cc)
        for rr, cc in removable_nodes(mu)
        if residue((1, rr, cc), delta) == -res
    ]
    return len(added) - len(removed) + int(res == Fraction(-1, 2))


def tableau_degree(t: Tableau, delta: Fraction, breakdown: bool = False):
    per_step = [step_degree(t, k, delta) for k in range(1, len(t) + 1)]
    total = sum(per_step)
    return (total, per_step) if breakdown else total


# ---------------------------------------------------------------------------
# remove pairs, heads and reduction sequences


def remove_pairs(t: Tableau) -> list[tuple[int, int]]:
    """Pairs (j, k), 1-based, matching each removal with its addition.

    A removal at position k cancels the nearest earlier unmatched addition of
    the same box; pairs are listed with increasing removal position.
    """
    open_at: dict[tuple[int, int], int] = {}
    pairs = []
    for pos, (sign, r, c) in enumerate(t, start=1):
        if sign > 0:
            open_at[(r, c)] = pos
        else:
            j = open_at.pop((r, c), None)
            if j is None:
                raise TableauError("removal without a matching addition")
            pairs.append((j, pos))
    pairs.sort(key=lambda jk: jk[1])
    return pairs


def head(t: Tableau) -> int:
    """Number of leading trivial pairs ((1,1) added then removed at the front)."""
    pairs = remove_pairs(t)
    h = 0
    for i, (j, k) in enumerate(pairs, start=1):
        if (
            j == 2 * i - 1
            and k == 2 * i
            and t[j - 1] == ORIGIN
            and t[k - 1] == (-1, 1, 1)
        ):
            h = i
        else:
            break
    return h


def pair_is_trivial(t: Tableau, pair: tuple[int, int]) -> bool:
    j, k = pair
    return t[j - 1] == ORIGIN and t[k - 1] == (-1, 1, 1)


def remove_pair_from(t: Tableau, pair: tuple[int, int]) -> Tableau:
    """Delete the two entries and prepend a trivial pair."""
    j, k = pair
    rest = tuple(node for pos, node in enumerate(t, start=1) if pos not in (j, k))
    return (ORIGIN, (-1, 1, 1)) + rest


def pair_is_removable(t: Tableau, pair: tuple[int, int]) -> bool:
    j, k = pair
    rest = tuple(node for pos, node in enumerate(t, start=1) if pos not in (j, k))
    return is_updown(rest)


def removable_pair_indices(t: Tableau) -> list[int]:
    """1-based indices of the removable pairs."""
    return [
        i
        for i, pair in enumerate(remove_pairs(t), start=1)
        if pair_is_removable(t, pair)
    ]


def standard_reduction(t: Tableau):
    """The standard reduction sequence of t.

    Returns (chain, rhos) where chain = [t = t(0), t(1), ..., t(m)] with
    t(m) the fully reduced tableau (head = f), and rhos[i] = (j, k) is the
    pair removed when passing from t(i) to t(i+1).  Each step removes the
    first nontrivial removable pair, which is the pair right after the
    current head.
    """
    _shape, f = cell_of(t)
    chain = [t]
    rhos: list[tuple[int, int]] = []
    cur = t
    while head(cur) < f:
        pairs = remove_pairs(cur)
        idx = head(cur)  # 0-based position of pair head+1
        pair = pairs[idx]
        if pair_is_trivial(cur, pair) or not pair_is_removable(cur, pair):
            raise TableauError(
                f"pair {pair} after the head of {cur} is not a nontrivial removable pair"
            )
        cur = remove_pair_from(cur, pair)
        rhos.append(pair)
        chain.append(cur)
    return chain, rhos


def reduced_form(t: Tableau) -> Tableau:
    """The endpoint of the standard reduction (all pairs trivial and leading)."""
    return standard_reduction(t)[0][-1]


def maximal_tableau(shape: Partition, f: int) -> Tableau:
    """f trivial pairs followed by the row-reading fill of the shape."""
    steps: list[Node] = []
    for _ in range(f):
        steps.append(ORIGIN)
        steps.append((-1, 1, 1))
    for r, width in enumerate(shape, start=1):
        for c in range(1, width + 1):
            steps.append((1, r, c))
    return tuple(steps)


def tableau_dominates(big: Tableau, small: Tableau) -> bool:
    """Levelwise dominance of the (shape, removals-so-far) walks."""
    if len(big) != len(small):
        raise TableauError("tableaux of different sizes")
    wb, ws = shapes(big), shapes(small)
    for k in range(1, len(big) + 1):
        fb = (k - sum(wb[k])) // 2
        fs = (k - sum(ws[k])) // 2
        if not cell_dominates((wb[k], fb), (ws[k], fs)):
            return False
    return True


# ---------------------------------------------------------------------------
# canonical words


def sorting_word(source: Tableau, target: Tableau, lo: int) -> list[int]:
    """Lex-smallest reduced word of adjacent swaps carrying source to target.

    Both tails source[lo-1:], target[lo-1:] must hold the same distinct
    entries; swaps s_k act on positions (k, k+1) with k >= lo.
    """
    n = len(source)
    cur = list(source)
    if sorted(cur[lo - 1 :]) != sorted(target[lo - 1 :]):
        raise TableauError("tails are not rearrangements of each other")
    pos_in_target = {node: p for p, node in enumerate(target)}
    word = []
    while tuple(cur) != target:
        for k in range(lo, n):
            if pos_in_target[cur[k - 1]] > pos_in_target[cur[k]]:
                cur[k - 1], cur[k] = cur[k], cur[k - 1]
                word.append(k)
                break
        else:
            raise TableauError("sorting stalled; tails not compatible")
    return word


def d_word(t: Tableau) -> list[int]:
    """Lex-smallest reduced word carrying the maximal tableau to reduced_form(t)."""
    shape, f = cell_of(t)
    return sorting_word(maximal_tableau(shape, f), reduced_form(t), 2 * f + 1)


def d_word_alternative(t: Tableau) -> list[int]:
    """A second reduced word for the same permutation (largest valid swap first)."""
    shape, f = cell_of(t)
    source = maximal_tableau(shape, f)
    target = reduced_form(t)
    n = len(source)
    cur = list(source)
    pos_in_target = {node: p for p, node in enumerate(target)}
    word = []
    while tuple(cur) != target:
        for k in range(n - 1, 2 * f, -1):
            if pos_in_target[cur[k - 1]] > pos_in_target[cur[k]]:
                cur[k - 1], cur[k] = cur[k], cur[k - 1]
                word.append(k)
                break
        else:
            raise TableauError("sorting stalled")
    return word


def step_word(upper: Tableau, lower: Tableau, rho: tuple[int, int]):
    """Generator word for one reduction step upper -> lower.

    rho = (a, b) is the removed pair of lower, h is the head of lower; the
    word reads eps_{2h+2} ... eps_a psi_{a+1} ... psi_{b-1}.  Returns
    (letters, chain) where letters is a list of ('eps'|'psi', k) and chain is
    the corresponding walk of tableaux from upper to lower (one tableau per
    word boundary, chain[0] = upper, chain[-1] = lower).
    """
    a, b = rho
    h = head(lower)
    letters = [("eps", k) for k in range(2 * h + 2, a + 1)]
    letters += [("psi", k) for k in range(a + 1, b)]
    # walk backwards from lower to recover intermediate tableaux
    chain = [lower]
    cur = lower
    for kind, k in reversed(letters):
        if kind == "psi":
            cur = swap_entries(cur, k)
        else:
            prev = list(cur)
            anchor = cur[k - 2]
            prev[k - 1] = (-anchor[0], anchor[1], anchor[2])
            prev[k] = anchor
            cur = tuple(prev)
        if not is_updown(cur):
            raise TableauError("intermediate step is not an up-down tableau")
        chain.append(cur)
    chain.reverse()
    if chain[0] != upper:
        raise TableauError(
            f"reduction step word does not reconnect to the source: {chain[0]} != {upper}"
        )
    return letters, chain


def epsilon_word(t: Tableau):
    """Full generator word of the reduction tail of t.

    Returns (letters, chain): letters is the concatenation of the step words
    from reduced_form(t) down to t and chain the matching walk of tableaux
    (chain[0] = reduced_form(t), chain[-1] = t).  A head-f tableau gives an
    empty word.
    """
    chain_red, rhos = standard_reduction(t)
    letters: list[tuple[str, int]] = []
    walk: list[Tableau] = [chain_red[-1]]
    for i in range(len(rhos) - 1, -1, -1):
        upper, lower = chain_red[i + 1], chain_red[i]
        step_letters, step_chain = step_word(upper, lower, rhos[i])
        letters.extend(step_letters)
        walk.extend(step_chain[1:])
    return letters, walk


def semi_reduced(word, t: Tableau) -> bool:
    """True if every prefix of the swap word keeps t a valid up-down tableau."""
    cur = t
    for k in word:
        cur = swap_entries(cur, k)
        if not is_updown(cur):
            return False
    return True
