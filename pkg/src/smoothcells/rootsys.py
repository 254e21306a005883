"""Exact root data for the finite crystallographic types.

Simple roots are abstract: a root is an integer coefficient vector over the
simple roots, and every geometric quantity comes from the symmetrized Cartan
matrix. Node numbering follows Bourbaki (see CONVENTIONS.md).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Vector = tuple[int, ...]

_RANK_OK = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 3,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_OK:
            raise ValueError(f"unknown Cartan family {self.family!r}")
        if not _RANK_OK[self.family](self.rank):
            raise ValueError(f"invalid rank {self.rank} for type {self.family}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """Parse labels such as ``"E6"`` or ``"B3"``."""
        text = text.strip()
        return cls(text[0].upper(), int(text[1:]))

    @property
    def is_classical(self) -> bool:
        return self.family in "ABCD"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def __str__(self):
        return f"{self.family}{self.rank}"


def _diagram(ct: CartanType) -> tuple[list[tuple[int, int]], list[int]]:
    """Edges (1-based node pairs) and squared root lengths (short roots = 2)."""
    n = ct.rank
    f = ct.family
    chain = [(i, i + 1) for i in range(1, n)]
    if f == "A":
        return chain, [2] * n
    if f == "B":
        return chain, [4] * (n - 1) + [2]
    if f == "C":
        return chain, [2] * (n - 1) + [4]
    if f == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)], [2] * n
    if f == "E":
        return [(1, 3), (3, 4), (4, 5)] + [(k, k + 1) for k in range(5, n)] + [(2, 4)], [2] * n
    if f == "F":
        return chain, [4, 4, 2, 2]
    # G2: alpha_1 short
    return chain, [2, 6]


class Root(tuple):
    """Coefficients of a root over the simple roots; never of mixed sign."""

    def __new__(cls, coords: Sequence[int]):
        coords = tuple(int(c) for c in coords)
        if any(c > 0 for c in coords) and any(c < 0 for c in coords):
            raise ValueError(f"mixed-sign root coordinates {coords}")
        return super().__new__(cls, coords)

    @property
    def is_positive(self) -> bool:
        return any(c > 0 for c in self)

    @property
    def height(self) -> int:
        return sum(self)

    def __neg__(self) -> "Root":
        return Root(-c for c in self)


@dataclass(frozen=True, eq=False)
class RootSystem:
    cartan_type: CartanType
    cartan_matrix: tuple[Vector, ...]
    # squared lengths of the simple roots; the symmetrizer is d_i = sq_i / 2
    simple_lengths: Vector
    gram: tuple[Vector, ...]
    positive_roots: tuple[Root, ...]
    _index: dict = field(repr=False)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def symmetrizer(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(s, 2) for s in self.simple_lengths)

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return self.positive_roots[: self.rank]

    def simple_root(self, i: int) -> Root:
        """The simple root alpha_i, 1-based."""
        return Root(1 if k == i - 1 else 0 for k in range(self.rank))

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    @property
    def highest_short_root(self) -> Root:
        short = min(self.simple_lengths)
        return max((b for b in self.positive_roots if self.norm(b) == short), key=sum)

    @property
    def roots(self) -> tuple[Root, ...]:
        """All roots: the positive ones, then their negatives in the same order."""
        return self.positive_roots + tuple(-b for b in self.positive_roots)

    def index(self, root: Sequence[int]) -> int:
        """Position of a positive root in ``positive_roots``."""
        return self._index[tuple(root)]

    def is_root(self, v: Sequence[int]) -> bool:
        v = tuple(v)
        return v in self._index or tuple(-c for c in v) in self._index

    def inner(self, a: Sequence[int], b: Sequence[int]) -> int:
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank) for j in range(self.rank) if a[i] and b[j])

    def norm(self, a: Sequence[int]) -> int:
        return self.inner(a, a)

    def cartan_integer(self, beta: Sequence[int], alpha: Sequence[int]) -> int:
        """<beta, alpha^vee> = 2(beta, alpha)/(alpha, alpha); always an integer for roots."""
        num, den = 2 * self.inner(beta, alpha), self.norm(alpha)
        q, r = divmod(num, den)
        if r:
            raise ValueError(f"non-integral pairing of {beta} with {alpha}")
        return q

    def __repr__(self):
        return f"RootSystem({self.cartan_type})"


def _reflect_vec(rs_gram, lengths, i: int, v: Vector) -> Vector:
    # s_i(v) = v - <v, alpha_i^vee> alpha_i
    c = 2 * sum(v[j] * rs_gram[j][i] for j in range(len(v))) // lengths[i]
    if c == 0:
        return v
    w = list(v)
    w[i] -= c
    return tuple(w)


@lru_cache(maxsize=None)
def build(cartan_type: CartanType | str) -> RootSystem:
    """Construct the root system of a Cartan type.

    Positive roots are generated by closing the simple roots under simple
    reflections and sorted by height, then lexicographically, so indices are
    stable between runs.
    """
    if isinstance(cartan_type, str):
        cartan_type = CartanType.parse(cartan_type)
    n = cartan_type.rank
    edges, lengths = _diagram(cartan_type)
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = lengths[i]
    for a, b in edges:
        val = -max(lengths[a - 1], lengths[b - 1]) // 2
        gram[a - 1][b - 1] = gram[b - 1][a - 1] = val
    cartan = tuple(tuple(2 * gram[i][j] // lengths[i] for j in range(n)) for i in range(n))

    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                w = _reflect_vec(gram, lengths, i, v)
                if w != v and all(c >= 0 for c in w) and w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    pos = sorted(seen, key=lambda v: (sum(v), v))
    # simple roots come first: height 1, and lexicographic order puts alpha_1 last
    # among them, so re-sort that block to match node numbering
    pos[:n] = simple
    roots = tuple(Root(v) for v in pos)
    return RootSystem(
        cartan_type=cartan_type,
        cartan_matrix=cartan,
        simple_lengths=tuple(lengths),
        gram=tuple(tuple(r) for r in gram),
        positive_roots=roots,
        _index={tuple(b): k for k, b in enumerate(roots)},
    )


def pairing(rs: RootSystem, weight: Sequence, alpha: Sequence[int]) -> Fraction:
    """(lambda, alpha^vee) for a weight given over the fundamental weights.

    With alpha = sum c_j alpha_j we have alpha^vee = sum c_j (|alpha_j|^2/|alpha|^2) alpha_j^vee.
    """
    if not rs.is_root(alpha):
        raise ValueError(f"{tuple(alpha)} is not a root of {rs.cartan_type}")
    norm = rs.norm(alpha)
    return sum(
        (Fraction(c * rs.simple_lengths[j], norm) * Fraction(weight[j]) for j, c in enumerate(alpha) if c),
        Fraction(0),
    )


def reflect(rs: RootSystem, alpha: Sequence[int], beta: Sequence[int]) -> Root:
    """s_alpha(beta) = beta - <beta, alpha^vee> alpha."""
    if not (rs.is_root(alpha) and rs.is_root(beta)):
        raise ValueError("reflect expects two roots")
    c = rs.cartan_integer(beta, alpha)
    return Root(b - c * a for a, b in zip(alpha, beta))


def rho(rs: RootSystem) -> tuple[Fraction, ...]:
    """Half the sum of positive roots, over the fundamental weights (all ones)."""
    return tuple(Fraction(1) for _ in range(rs.rank))
