"""The two-sided cell of elements with a unique reduced word, and its right cells.

The cell is computed from the definition (count of reduced words equal to 1).
The closed-form weak-order intervals for each right cell are kept separately
and only used to cross-check that computation.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .rootsys import CartanType, RootSystem
from .weyl import (
    WeylElement,
    left_descents,
    longest_element,
    multiply,
    right_descents,
    simple_reflection,
)

Side = Literal["C", "w0C"]


class CellMismatch(AssertionError):
    """The definition-based cell and the closed-form intervals disagree."""


@dataclass(frozen=True)
class CellDescriptor:
    cartan_type: object
    node: int
    side: Side = "C"


@dataclass(frozen=True)
class CellElements:
    descriptor: CellDescriptor
    elements: tuple[WeylElement, ...]

    @property
    def min_length_elements(self) -> tuple[WeylElement, ...]:
        m = min(w.length for w in self.elements)
        return tuple(w for w in self.elements if w.length == m)

    @property
    def max_length_elements(self) -> tuple[WeylElement, ...]:
        m = max(w.length for w in self.elements)
        return tuple(w for w in self.elements if w.length == m)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w):
        return w in self.elements


def _sort_key(w: WeylElement):
    return (w.length, w.word)


@lru_cache(maxsize=None)
def count_reduced_words(w: WeylElement) -> int:
    """Number of reduced words, summing over the last letter."""
    if w.length == 0:
        return 1
    return sum(count_reduced_words(multiply(w, simple_reflection(w.rs, s))) for s in right_descents(w))


def has_unique_reduced_word(w: WeylElement) -> bool:
    return count_reduced_words(w) == 1


@lru_cache(maxsize=None)
def enumerate_C(rs: RootSystem) -> frozenset[WeylElement]:
    """All w != e with a unique reduced word.

    Breadth-first right extension: a prefix of a unique-reduced-word element
    again has a unique reduced word, so nothing is missed by growing only from
    members.
    """
    layer = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    found = set(layer)
    while layer:
        nxt = []
        for w in layer:
            for i in range(1, rs.rank + 1):
                v = multiply(w, simple_reflection(rs, i))
                if v.length == w.length + 1 and v not in found and has_unique_reduced_word(v):
                    found.add(v)
                    nxt.append(v)
        layer = nxt
    return frozenset(found)


# Tops of the weak-order intervals s_i <= w <= top describing each right cell.
# Words are tuples of generator indices.


def _classical_tops(family: str, n: int, i: int) -> list[tuple[int, ...]]:
    up = lambda a, b: tuple(range(a, b + 1))
    down = lambda a, b: tuple(range(a, b - 1, -1))
    if family == "A":
        return [up(i, n), down(i, 1)]
    if family in "BC":
        if i < n:
            return [down(i, 1), up(i, n) + down(n - 1, 1)]
        return [down(n, 1), (n, n - 1, n)]
    # D_n
    if i <= n - 2:
        return [up(i, n - 1), up(i, n - 2) + (n,), down(i, 1)]
    if i == n - 1:
        return [down(n - 1, 1), (n - 1, n - 2, n)]
    return [(n,) + down(n - 2, 1), (n, n - 2, n - 1)]


def _w(text: str) -> tuple[int, ...]:
    return tuple(int(c) for c in text)


_EXCEPTIONAL_TOPS = {
    "E6": {
        1: ["13456", "1342"],
        2: ["2431", "2456"],
        3: ["31", "3456", "342"],
        4: ["431", "456", "42"],
        5: ["5431", "542", "56"],
        6: ["65431", "6542"],
    },
    "E7": {
        1: ["134567", "1342"],
        2: ["2431", "24567"],
        3: ["31", "34567", "342"],
        4: ["431", "4567", "42"],
        5: ["5431", "542", "567"],
        6: ["67", "65431", "6542"],
        7: ["765431", "76542"],
    },
    "E8": {
        1: ["1345678", "1342"],
        2: ["2431", "245678"],
        3: ["31", "345678", "342"],
        4: ["431", "45678", "42"],
        5: ["5431", "542", "5678"],
        6: ["678", "65431", "6542"],
        7: ["765431", "76542", "78"],
        8: ["8765431", "876542"],
    },
    "F4": {
        1: ["1234", "12321"],
        2: ["21", "234", "2321"],
        3: ["34", "321", "3234"],
        4: ["4321", "43234"],
    },
    "G2": {1: ["12121"], 2: ["21212"]},
}


def closed_form_tops(rs: RootSystem, i: int) -> list[tuple[int, ...]]:
    ct = rs.cartan_type
    if ct.is_classical:
        return _classical_tops(ct.family, ct.rank, i)
    return [_w(t) for t in _EXCEPTIONAL_TOPS[str(ct)][i]]


def weak_interval(bottom: WeylElement, top: WeylElement) -> set[WeylElement]:
    """{x : bottom <= x <= top} in right weak order, grown by length-adding suffixes."""
    rs = top.rs

    def below_top(x):
        # x <= top iff l(x) + l(x^-1 top) = l(top)
        from .weyl import inverse

        return x.length + multiply(inverse(x), top).length == top.length

    if not below_top(bottom):
        return set()
    out = {bottom}
    layer = [bottom]
    while layer:
        nxt = []
        for x in layer:
            for i in range(1, rs.rank + 1):
                y = multiply(x, simple_reflection(rs, i))
                if y.length == x.length + 1 and y not in out and below_top(y):
                    out.add(y)
                    nxt.append(y)
        layer = nxt
    return out


def closed_form_cell(rs: RootSystem, i: int) -> set[WeylElement]:
    from .weyl import from_word

    s = simple_reflection(rs, i)
    out = set()
    for top in closed_form_tops(rs, i):
        out |= weak_interval(s, from_word(rs, top))
    return out


def _check_node(rs: RootSystem, i: int):
    if not 1 <= i <= rs.rank:
        raise ValueError(f"node {i} out of range 1..{rs.rank}")


@lru_cache(maxsize=None)
def right_cell(rs: RootSystem, i: int) -> CellElements:
    """C_i = {w in C : left descent set {s_i}}, checked against the closed form."""
    _check_node(rs, i)
    by_definition = {w for w in enumerate_C(rs) if left_descents(w) == {i}}
    closed = closed_form_cell(rs, i)
    if by_definition != closed:
        raise CellMismatch(
            f"{rs.cartan_type} C_{i}: definition gives {sorted(map(repr, by_definition))}, "
            f"closed form gives {sorted(map(repr, closed))}"
        )
    elems = tuple(sorted(by_definition, key=_sort_key))
    return CellElements(CellDescriptor(rs.cartan_type, i, "C"), elems)


@lru_cache(maxsize=None)
def w0_right_cell(rs: RootSystem, i: int) -> CellElements:
    """w0 C_i; its shortest members are w0 times the longest members of C_i."""
    w0 = longest_element(rs)
    elems = tuple(sorted((multiply(w0, x) for x in right_cell(rs, i)), key=_sort_key))
    return CellElements(CellDescriptor(rs.cartan_type, i, "w0C"), elems)


def classify(w: WeylElement) -> tuple[int, Side] | None:
    """(i, "C") if w is in C_i, else (i, "w0C") if w is in w0 C_i, else None."""
    hit = classify_all(w)
    return hit[0] if hit else None


def classify_all(w: WeylElement) -> list[tuple[int, Side]]:
    rs = w.rs
    out: list[tuple[int, Side]] = []
    members = enumerate_C(rs)
    if w in members:
        (i,) = left_descents(w)
        out.append((i, "C"))
    x = multiply(longest_element(rs), w)
    if x in members:
        (i,) = left_descents(x)
        out.append((i, "w0C"))
    return out


def w0_cell_index(w: WeylElement) -> int | None:
    """i with w in w0 C_i, or None when w is outside w0 C."""
    for i, side in classify_all(w):
        if side == "w0C":
            return i
    return None


def table_cell_size(ct: CartanType, i: int) -> int | None:
    """|C_i| for the classical families; None for exceptional types."""
    n = ct.rank
    if ct.family in ("A", "D"):
        return n
    if ct.family in ("B", "C"):
        return n + 1 if i == n else 2 * n - 1
    return None
