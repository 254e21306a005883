"""Weyl group elements as integer matrices acting on simple-root coordinates.

Two elements are equal exactly when their matrices agree. Reduced words are
recovered from inversion sets by peeling simple roots, so any input word (even
a non-reduced one) lands on the same canonical element and word.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .rootsys import RootSystem, Vector

Matrix = tuple[Vector, ...]


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(a[i], cols[j])) for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def _simple_matrix(rs: RootSystem, i: int) -> Matrix:
    # column j is s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i
    n = rs.rank
    rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    for j in range(n):
        rows[i - 1][j] -= rs.cartan_matrix[i - 1][j]
    return tuple(tuple(r) for r in rows)


def _is_negative(v: Sequence[int]) -> bool:
    return any(c < 0 for c in v)


class WeylElement:
    """An element of W(rs), stored as its action on the root lattice."""

    __slots__ = ("rs", "matrix", "_word", "_hash")

    def __init__(self, rs: RootSystem, matrix: Matrix, word: tuple[int, ...] | None = None):
        self.rs = rs
        self.matrix = matrix
        self._word = word
        self._hash = hash(matrix)

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.rs is other.rs and self.matrix == other.matrix

    def __hash__(self):
        return self._hash

    def __repr__(self):
        word = " ".join(map(str, self.word)) or "e"
        return f"<{self.rs.cartan_type} {word}>"

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return multiply(self, other)

    def apply(self, v: Sequence[int]) -> Vector:
        return tuple(sum(m * x for m, x in zip(row, v)) for row in self.matrix)

    def right_inversions(self) -> frozenset[int]:
        """Indices of positive roots beta with w(beta) < 0, i.e. the inversion set of w^-1."""
        return frozenset(k for k, b in enumerate(self.rs.positive_roots) if _is_negative(self.apply(b)))

    @property
    def word(self) -> tuple[int, ...]:
        """Canonical reduced word (smallest available descent peeled first)."""
        if self._word is None:
            inv_word = word_from_inversions(self.rs, self.right_inversions())
            self._word = tuple(reversed(inv_word))
        return self._word

    @property
    def length(self) -> int:
        return len(self.word)

    def matrix_column(self, i: int) -> Vector:
        """w(alpha_i)."""
        return tuple(row[i - 1] for row in self.matrix)

    def is_identity(self) -> bool:
        return self.matrix == _identity(self.rs.rank)


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, _identity(rs.rank), ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    if not 1 <= i <= rs.rank:
        raise ValueError(f"generator {i} out of range 1..{rs.rank}")
    return WeylElement(rs, _simple_matrix(rs, i), (i,))


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """The product s_{i1} s_{i2} ... s_{ik}; the word need not be reduced."""
    m = _identity(rs.rank)
    for i in word:
        if not 1 <= i <= rs.rank:
            raise ValueError(f"generator {i} out of range 1..{rs.rank}")
        m = _matmul(m, _simple_matrix(rs, i))
    return WeylElement(rs, m)


def _check_same(a: WeylElement, b: WeylElement):
    if a.rs is not b.rs:
        raise ValueError(f"elements of different root systems {a.rs} and {b.rs}")


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    _check_same(a, b)
    return WeylElement(a.rs, _matmul(a.matrix, b.matrix))


def inverse(w: WeylElement) -> WeylElement:
    return WeylElement(w.rs, from_word(w.rs, reversed(w.word)).matrix)


def length(w: WeylElement) -> int:
    return w.length


def inversion_set(rs: RootSystem, w: WeylElement) -> frozenset[int]:
    """Phi_w = {alpha > 0 : w^-1 alpha < 0}, as indices into ``rs.positive_roots``."""
    return inverse(w).right_inversions()


def right_descents(w: WeylElement) -> frozenset[int]:
    return frozenset(i for i in range(1, w.rs.rank + 1) if _is_negative(w.matrix_column(i)))


def left_descents(w: WeylElement) -> frozenset[int]:
    return right_descents(inverse(w))


def word_from_inversions(rs: RootSystem, inversions: Iterable) -> tuple[int, ...]:
    """Reduced word of the element whose inversion set is given.

    Accepts root indices or root coordinate tuples. Repeatedly removes a simple
    root alpha_i from the set and reflects the rest by s_i; the letters come out
    left to right. Raises ValueError if no simple root is available before the
    set is empty, which means the input was not an inversion set.
    """
    current = set()
    for x in inversions:
        current.add(tuple(rs.positive_roots[x]) if isinstance(x, int) else tuple(x))
    n = rs.rank
    word = []
    while current:
        for i in range(n):
            a = tuple(1 if k == i else 0 for k in range(n))
            if a in current:
                break
        else:
            raise ValueError("peeling stalled: not the inversion set of a Weyl group element")
        current.discard(a)
        nxt = set()
        for b in current:
            c = 2 * sum(b[j] * rs.gram[j][i] for j in range(n)) // rs.simple_lengths[i]
            r = list(b)
            r[i] -= c
            r = tuple(r)
            if _is_negative(r):
                raise ValueError("peeling produced a negative root: not an inversion set")
            nxt.add(r)
        current = nxt
        word.append(i + 1)
    return tuple(word)


@lru_cache(maxsize=None)
def longest_element(rs: RootSystem) -> WeylElement:
    """w0, built by right-multiplying ascents until none remain."""
    w = identity(rs)
    while True:
        for i in range(1, rs.rank + 1):
            if not _is_negative(w.matrix_column(i)):
                w = WeylElement(rs, _matmul(w.matrix, _simple_matrix(rs, i)))
                break
        else:
            return w


def elements(rs: RootSystem) -> list[WeylElement]:
    """All of W(rs), breadth first by length. Intended for small groups."""
    e = identity(rs)
    seen = {e}
    layer = [e]
    out = [e]
    while layer:
        nxt = []
        for w in layer:
            for i in range(1, rs.rank + 1):
                if not _is_negative(w.matrix_column(i)):
                    v = WeylElement(rs, _matmul(w.matrix, _simple_matrix(rs, i)))
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
        out.extend(nxt)
        layer = nxt
    return out


# --- Bruhat order -----------------------------------------------------------


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    """v <= w in Bruhat order, by the lifting property on left descents."""
    _check_same(v, w)
    return _bruhat(v, w)


@lru_cache(maxsize=1 << 16)
def _bruhat(v: WeylElement, w: WeylElement) -> bool:
    lv, lw = v.length, w.length
    if lv > lw:
        return False
    if lw == 0:
        return True
    if lv == lw:
        return v == w
    i = w.word[0]
    s = simple_reflection(w.rs, i)
    sw = multiply(s, w)
    sv = multiply(s, v)
    if sv.length < lv:
        return _bruhat(sv, sw)
    return _bruhat(v, sw)


class IntervalTooLarge(RuntimeError):
    pass


def lower_interval(w: WeylElement, cap: int | None = None) -> set[WeylElement]:
    """{v : v <= w}, from products of subwords of a reduced word of w."""
    rs = w.rs
    out = {identity(rs)}
    for i in w.word:
        s = _simple_matrix(rs, i)
        out |= {WeylElement(rs, _matmul(x.matrix, s)) for x in out}
        if cap is not None and len(out) > cap:
            raise IntervalTooLarge(f"lower interval of {w} exceeds {cap} elements")
    return out


# --- one-line notation for classical types -----------------------------------
#
# Right multiplication by a generator acts on positions:
#   A_n:  s_i swaps positions i, i+1 of a permutation of 1..n+1.
#   B/C:  s_i (i < n) swaps positions n-i, n-i+1; s_n negates position 1.
#   D_n:  s_i (i < n) as in B/C; s_n sends (a1, a2, ...) to (-a2, -a1, ...).


def _one_line_size(rs: RootSystem) -> int:
    ct = rs.cartan_type
    if not ct.is_classical:
        raise ValueError(f"one-line notation is only defined for classical types, not {ct}")
    return ct.rank + 1 if ct.family == "A" else ct.rank


def _act_right(family: str, n: int, seq: list[int], i: int) -> None:
    if family == "A":
        seq[i - 1], seq[i] = seq[i], seq[i - 1]
    elif i < n:
        p = n - i - 1
        seq[p], seq[p + 1] = seq[p + 1], seq[p]
    elif family in "BC":
        seq[0] = -seq[0]
    else:
        seq[0], seq[1] = -seq[1], -seq[0]


def one_line(w: WeylElement) -> tuple[int, ...]:
    rs = w.rs
    size = _one_line_size(rs)
    seq = list(range(1, size + 1))
    for i in w.word:
        _act_right(rs.cartan_type.family, rs.rank, seq, i)
    return tuple(seq)


def _sorting_word(family: str, n: int, seq: list[int]) -> list[int]:
    """Letters that right-multiply seq to the identity (not necessarily reduced)."""
    seq = list(seq)
    letters: list[int] = []

    def apply(i):
        _act_right(family, n, seq, i)
        letters.append(i)

    def swap_positions(p):  # swap 0-based positions p, p+1
        apply(p + 1 if family == "A" else n - p - 1)

    def move_to(src, dst):
        while src > dst:
            swap_positions(src - 1)
            src -= 1

    if family in "BC":
        while any(x < 0 for x in seq):
            move_to(next(k for k, x in enumerate(seq) if x < 0), 0)
            apply(n)
    elif family == "D":
        negs = [k for k, x in enumerate(seq) if x < 0]
        if len(negs) % 2:
            raise ValueError(f"{tuple(seq)} has an odd number of negative entries")
        while any(x < 0 for x in seq):
            move_to(next(k for k, x in enumerate(seq) if x < 0), 0)
            move_to(next(k for k, x in enumerate(seq) if x < 0 and k > 0), 1)
            apply(n)
    # bubble sort on the remaining positive entries
    changed = True
    while changed:
        changed = False
        for p in range(len(seq) - 1):
            if seq[p] > seq[p + 1]:
                swap_positions(p)
                changed = True
    return letters


def from_one_line(rs: RootSystem, seq: Sequence[int]) -> WeylElement:
    size = _one_line_size(rs)
    seq = [int(x) for x in seq]
    if sorted(abs(x) for x in seq) != list(range(1, size + 1)):
        raise ValueError(f"{tuple(seq)} is not a signed permutation of 1..{size}")
    family = rs.cartan_type.family
    if family == "A" and any(x < 0 for x in seq):
        raise ValueError("type A one-line notation has no signs")
    letters = _sorting_word(family, rs.rank, seq)
    # seq * s_{l1} ... s_{lk} = e, so the element is s_{lk} ... s_{l1}
    return from_word(rs, reversed(letters))
