"""Permutations of [n] and the (right) weak order.

Permutations are plain tuples in one-line notation with 1-based values, e.g.
``(2, 5, 3, 7, 1, 4, 6)``.  The empty permutation ``()`` is allowed and acts
as the unit of the graded products.

Inversions are stored as value pairs ``(b, a)`` with ``b > a``, meaning the
larger value ``b`` appears before the smaller value ``a`` in one-line
notation.  The weak order is containment of inversion sets.
"""

from __future__ import annotations

import functools
import itertools
from collections import deque
from collections.abc import Iterable, Sequence

Perm = tuple[int, ...]
Pair = tuple[int, int]


# ---------------------------------------------------------------------------
# basics

def is_permutation(values: Sequence[int]) -> bool:
    """True iff ``values`` is a rearrangement of 1..n."""
    return sorted(values) == list(range(1, len(values) + 1))


def check_permutation(values: Sequence[int]) -> Perm:
    p = tuple(values)
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    """The longest permutation ``n (n-1) ... 1``, the top of the weak order."""
    return tuple(range(n, 0, -1))


def complement(p: Perm) -> Perm:
    """Replace each value v by n+1-v (left multiplication by the longest
    permutation).  This is an antiautomorphism of the weak order that swaps
    descents and ascents in place."""
    n = len(p)
    return tuple(n + 1 - v for v in p)


def reverse(p: Perm) -> Perm:
    """Reverse the one-line word (right multiplication by the longest
    permutation); complements the inversion set."""
    return p[::-1]


def all_permutations(n: int) -> list[Perm]:
    """All of S_n in lexicographic one-line order."""
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def swap_positions(p: Perm, i: int) -> Perm:
    """Exchange the entries at positions i and i+1 (1-based)."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


# ---------------------------------------------------------------------------
# inversion sets and the weak order

def inversions(p: Perm) -> frozenset[Pair]:
    """All pairs (b, a) with b > a and b preceding a in ``p``."""
    out = set()
    for i, b in enumerate(p):
        for a in p[i + 1:]:
            if b > a:
                out.add((b, a))
    return frozenset(out)


def all_pairs(n: int) -> frozenset[Pair]:
    return frozenset((b, a) for b in range(2, n + 1) for a in range(1, b))


def _transitive_close(pairs: set[Pair]) -> set[Pair]:
    # (c, b) and (b, a) force (c, a); pair sets are tiny, iterate to fixpoint
    closed = set(pairs)
    changed = True
    while changed:
        changed = False
        smaller = {}
        for (b, a) in closed:
            smaller.setdefault(b, set()).add(a)
        for (c, b) in list(closed):
            for a in smaller.get(b, ()):
                if (c, a) not in closed:
                    closed.add((c, a))
                    changed = True
    return closed


def is_inversion_set(pairs: Iterable[Pair], n: int) -> bool:
    """A pair set is the inversion set of a permutation iff both it and its
    complement are transitively closed."""
    ps = set(pairs)
    comp = set(all_pairs(n)) - ps
    return _transitive_close(ps) == ps and _transitive_close(comp) == comp


def perm_from_inversions(pairs: Iterable[Pair], n: int) -> Perm:
    """The unique permutation with the given inversion set."""
    ps = frozenset(pairs)

    def cmp(u: int, v: int) -> int:
        if u == v:
            return 0
        if u < v:
            return 1 if (v, u) in ps else -1
        return -1 if (u, v) in ps else 1

    p = tuple(sorted(range(1, n + 1), key=functools.cmp_to_key(cmp)))
    if inversions(p) != ps:
        raise ValueError(f"not a valid inversion set on [{n}]: {sorted(ps)}")
    return p


def weak_leq(p: Perm, q: Perm) -> bool:
    """p <= q in the weak order, i.e. inv(p) is contained in inv(q)."""
    if len(p) != len(q):
        raise ValueError("size mismatch")
    return inversions(p) <= inversions(q)


def weak_join(p: Perm, q: Perm) -> Perm:
    """Lattice join: the permutation whose inversion set is the transitive
    closure of inv(p) | inv(q)."""
    if len(p) != len(q):
        raise ValueError("size mismatch")
    n = len(p)
    closed = _transitive_close(set(inversions(p)) | set(inversions(q)))
    comp = set(all_pairs(n)) - closed
    assert _transitive_close(comp) == comp, "join closure left an invalid complement"
    return perm_from_inversions(closed, n)


def weak_meet(p: Perm, q: Perm) -> Perm:
    """Lattice meet, computed as the order-dual of the join."""
    return reverse(weak_join(reverse(p), reverse(q)))


def descents(p: Perm) -> tuple[int, ...]:
    """Positions i (1-based) with p_i > p_{i+1}."""
    return tuple(i for i in range(1, len(p)) if p[i - 1] > p[i])


def ascents(p: Perm) -> tuple[int, ...]:
    return tuple(i for i in range(1, len(p)) if p[i - 1] < p[i])


def cover_relations(p: Perm) -> tuple[Perm, ...]:
    """Upward covers: transpose an adjacent ascent, adding one inversion."""
    return tuple(swap_positions(p, i) for i in ascents(p))


def interval(lo: Perm, hi: Perm) -> list[Perm]:
    """All permutations between lo and hi, in ascending one-line order.

    Breadth-first expansion from ``lo`` along cover relations, keeping only
    permutations below ``hi``.
    """
    if not weak_leq(lo, hi):
        raise ValueError(f"{lo} is not below {hi} in the weak order")
    hi_inv = inversions(hi)
    seen = {lo}
    queue = deque([lo])
    while queue:
        p = queue.popleft()
        for q in cover_relations(p):
            if q not in seen and inversions(q) <= hi_inv:
                seen.add(q)
                queue.append(q)
    return sorted(seen)


# ---------------------------------------------------------------------------
# join- and meet-irreducible permutations

def join_irreducible(p: Perm, i: int) -> Perm:
    """The join-irreducible permutation attached to a descent i of p.

    Its one-line word is 1..(p_{i+1}-1), then the values before position i
    lying strictly between p_{i+1} and p_i in increasing order, then
    p_i p_{i+1}, then the values after position i+1 lying strictly between
    them in increasing order, then (p_i+1)..n.  The result has a unique
    descent.
    """
    n = len(p)
    if i not in descents(p):
        raise ValueError(f"{i} is not a descent of {p}")
    hi, lo = p[i - 1], p[i]
    before = sorted(v for v in p[:i - 1] if lo < v < hi)
    after = sorted(v for v in p[i + 1:] if lo < v < hi)
    word = list(range(1, lo)) + before + [hi, lo] + after + list(range(hi + 1, n + 1))
    return tuple(word)


def meet_irreducible(p: Perm, i: int) -> Perm:
    """Dual construction for an ascent i, via conjugation by the longest
    permutation."""
    if i not in ascents(p):
        raise ValueError(f"{i} is not an ascent of {p}")
    return complement(join_irreducible(complement(p), i))


# ---------------------------------------------------------------------------
# standardization, shuffle, convolution

def standardize(word: Sequence[int]) -> Perm:
    """The permutation whose entries are in the same relative order as the
    (distinct) entries of ``word``."""
    ranks = {v: r for r, v in enumerate(sorted(word), start=1)}
    return tuple(ranks[v] for v in word)


def std_pos(p: Perm, positions: Iterable[int]) -> Perm:
    """Keep the entries at the given (1-based) positions, then standardize."""
    keep = sorted(set(positions))
    if keep and not (1 <= keep[0] and keep[-1] <= len(p)):
        raise ValueError(f"positions {keep} out of range for size {len(p)}")
    return standardize([p[r - 1] for r in keep])


def std_val(p: Perm, values: Iterable[int]) -> Perm:
    """Keep the entries whose value lies in ``values``, then standardize."""
    keep = set(values)
    if keep and not keep <= set(range(1, len(p) + 1)):
        raise ValueError(f"values {sorted(keep)} out of range for size {len(p)}")
    return standardize([v for v in p if v in keep])


def shifted_shuffle(p: Perm, q: Perm) -> list[Perm]:
    """All interleavings of p with q shifted by len(p), sorted.

    Equivalently the permutations whose values 1..m spell p and whose values
    m+1..m+n spell q shifted.
    """
    m, n = len(p), len(q)
    shifted = tuple(v + m for v in q)
    out = []
    for positions in itertools.combinations(range(m + n), m):
        word = [0] * (m + n)
        pos = set(positions)
        it_p, it_q = iter(p), iter(shifted)
        for idx in range(m + n):
            word[idx] = next(it_p) if idx in pos else next(it_q)
        out.append(tuple(word))
    return sorted(out)


def convolution(p: Perm, q: Perm) -> list[Perm]:
    """All permutations whose first len(p) entries standardize to p and whose
    remaining entries standardize to q, sorted."""
    m, n = len(p), len(q)
    out = []
    for head_values in itertools.combinations(range(1, m + n + 1), m):
        tail_values = [v for v in range(1, m + n + 1) if v not in set(head_values)]
        head = [head_values[v - 1] for v in p]
        tail = [tail_values[v - 1] for v in q]
        out.append(tuple(head + tail))
    return sorted(out)


def backslash(p: Perm, q: Perm) -> Perm:
    """p followed by q shifted; the minimum of the shifted shuffle."""
    m = len(p)
    return p + tuple(v + m for v in q)


def slash(q: Perm, p: Perm) -> Perm:
    """q shifted followed by p; the maximum of the shifted shuffle."""
    m = len(p)
    return tuple(v + m for v in q) + p


# ---------------------------------------------------------------------------
# parsing / serialization

def perm_to_json(p: Perm) -> list[int]:
    return list(p)


def perm_from_json(data) -> Perm:
    if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
        raise ValueError(f"permutation JSON must be a list of integers: {data!r}")
    return check_permutation(data)


def parse_perm(text: str) -> Perm:
    """Parse either a compact digit string (n <= 9) or a JSON-ish list."""
    text = text.strip()
    if text.startswith("["):
        import json

        return perm_from_json(json.loads(text))
    if not text:
        return ()
    if not text.isdigit():
        raise ValueError(f"cannot parse permutation from {text!r}")
    return check_permutation([int(c) for c in text])
