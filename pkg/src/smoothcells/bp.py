"""Smoothness through stellar root subsystems and the flattening map.

A subsystem is stored by its simple roots (all positive in the host), a label
in {B2, G2, A3, B3, C3, D4}, and the map from its positive roots, written in
host coordinates, to coordinates over its own base. Flattening intersects an
inversion set with the subsystem and peels the result inside the small root
system of the label.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .rootsys import CartanType, RootSystem, Vector, build
from .verdict import SmoothnessVerdict
from .weyl import WeylElement, from_word, word_from_inversions

log = logging.getLogger(__name__)

STELLAR = ("B2", "G2", "A3", "B3", "C3", "D4")

# node search order: the star's centre first, then its leaves
_SEARCH_ORDER = {
    "B2": (1, 2),
    "G2": (1, 2),
    "A3": (2, 1, 3),
    "B3": (2, 1, 3),
    "C3": (2, 1, 3),
    "D4": (2, 1, 3, 4),
}

# Diagram automorphisms that respect root lengths.
_AUTOMORPHISMS = {
    "B2": [(1, 2)],
    "G2": [(1, 2)],
    "A3": [(1, 2, 3), (3, 2, 1)],
    "B3": [(1, 2, 3)],
    "C3": [(1, 2, 3)],
    "D4": [(a, 2, b, c) for a, b, c in permutations((1, 3, 4))],
}

# Forbidden elements per stellar type, bracket shorthand already expanded.
_FORBIDDEN_WORDS = {
    "B2": ["212"],
    "G2": ["121", "2121", "1212", "21212", "12121"],
    "A3": ["2132", "12321"],
    "B3": ["2132", "12321", "123213", "1232132", "1232123", "12321232"],
    "C3": ["2132", "32132", "21323", "321323", "32123", "12321323"],
    "D4": ["21342"],
}


@dataclass(frozen=True, eq=False)
class Subsystem:
    type_label: str
    base: tuple[Vector, ...]          # base[k] is the host root for node k+1
    positive_part: tuple[Vector, ...]
    coords: dict                      # host root -> coordinates over base

    def __repr__(self):
        return f"Subsystem({self.type_label}, base={self.base})"


@lru_cache(maxsize=None)
def label_system(label: str) -> RootSystem:
    return build(CartanType.parse(label))


def _in_span(basis_rows, v) -> bool:
    # basis_rows is a reduced echelon basis: list of (pivot, row)
    v = [Fraction(x) for x in v]
    for p, row in basis_rows:
        if v[p]:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return not any(v)


def _echelon(vectors):
    rows = []
    for vec in vectors:
        v = [Fraction(x) for x in vec]
        for p, row in rows:
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        piv = next((k for k, x in enumerate(v) if x), None)
        if piv is None:
            continue
        v = [x / v[piv] for x in v]
        rows = [(p, [a - r[piv] * b for a, b in zip(r, v)]) for p, r in rows]
        rows.append((piv, v))
    return rows


def _make_subsystem(rs: RootSystem, label: str, base: tuple[Vector, ...]) -> Subsystem:
    small = label_system(label)
    coords = {}
    for a in small.positive_roots:
        host = tuple(sum(c * b[j] for c, b in zip(a, base)) for j in range(rs.rank))
        coords[host] = tuple(a)
    return Subsystem(label, base, tuple(coords), coords)


def _is_full_intersection(rs: RootSystem, sub: Subsystem) -> bool:
    """True when the subsystem is all of (host roots) cap span(base)."""
    ech = _echelon(sub.base)
    count = sum(1 for b in rs.positive_roots if _in_span(ech, b))
    return count == len(sub.positive_part)


@lru_cache(maxsize=None)
def stellar_subsystems(rs: RootSystem) -> tuple[Subsystem, ...]:
    """Every stellar subsystem Delta = Phi cap V, once per root set.

    Bases are searched among positive roots of the host by matching Cartan
    integers node by node (centre first). Any such base is automatically the
    simple system of its positive part, since its positive span lies in Phi+.
    """
    pos = [tuple(b) for b in rs.positive_roots]
    out = []
    for label in STELLAR:
        small = label_system(label)
        if small.rank > rs.rank:
            continue
        order = _SEARCH_ORDER[label]
        seen = set()

        def extend(assigned: dict):
            if len(assigned) == len(order):
                yield dict(assigned)
                return
            node = order[len(assigned)]
            for b in pos:
                if b in assigned.values():
                    continue
                ok = all(
                    rs.cartan_integer(b, a) == small.cartan_matrix[m - 1][node - 1]
                    and rs.cartan_integer(a, b) == small.cartan_matrix[node - 1][m - 1]
                    for m, a in assigned.items()
                )
                if ok:
                    assigned[node] = b
                    yield from extend(assigned)
                    del assigned[node]

        for assignment in extend({}):
            base = tuple(assignment[k] for k in range(1, small.rank + 1))
            sub = _make_subsystem(rs, label, base)
            key = frozenset(sub.positive_part)
            if key in seen:
                continue
            seen.add(key)
            if _is_full_intersection(rs, sub):
                out.append(sub)
    return tuple(out)


def flatten(rs: RootSystem, w: WeylElement, sub: Subsystem, inversions=None) -> WeylElement:
    """f_Delta(w): the element of W(Delta) whose inversion set is Phi_w cap Delta+."""
    if inversions is None:
        from .weyl import inversion_set

        inversions = {tuple(rs.positive_roots[k]) for k in inversion_set(rs, w)}
    small = label_system(sub.type_label)
    local = [sub.coords[b] for b in sub.positive_part if b in inversions]
    word = word_from_inversions(small, local)
    return from_word(small, word)


@lru_cache(maxsize=None)
def forbidden_elements(label: str) -> frozenset[WeylElement]:
    small = label_system(label)
    out = set()
    for text in _FORBIDDEN_WORDS[label]:
        word = [int(c) for c in text]
        for auto in _AUTOMORPHISMS[label]:
            out.add(from_word(small, [auto[i - 1] for i in word]))
    return frozenset(out)


def smooth_bp(rs: RootSystem, w: WeylElement) -> SmoothnessVerdict:
    from .weyl import inversion_set

    inv = {tuple(rs.positive_roots[k]) for k in inversion_set(rs, w)}
    for sub in stellar_subsystems(rs):
        sigma = flatten(rs, w, sub, inv)
        if sigma in forbidden_elements(sub.type_label):
            return SmoothnessVerdict(False, "bp", (sub, sigma))
    return SmoothnessVerdict(True, "bp")
