"""Weights, dominance, and orbital-variety labels for integral minimal modules L_w.

Weights are rational vectors over the fundamental weights, so coordinate k is
the pairing (lambda, alpha_k^vee) and rho is the all-ones vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .cells import right_cell, w0_cell_index, w0_right_cell
from .rootsys import RootSystem, rho
from .weyl import WeylElement, longest_element, multiply, simple_reflection

Weight = tuple[Fraction, ...]


class NotIntegralMinimal(ValueError):
    """w is outside w0*C, so L_w is not integral minimal."""


class NonUniqueMinimum(AssertionError):
    pass


def simple_reflect_weight(rs: RootSystem, i: int, lam: Sequence) -> Weight:
    # s_i(lam) = lam - (lam, alpha_i^vee) alpha_i, and alpha_i has
    # fundamental-weight coordinates <alpha_i, alpha_j^vee> = cartan[j][i]
    c = Fraction(lam[i - 1])
    return tuple(Fraction(lam[j]) - c * rs.cartan_matrix[j][i - 1] for j in range(rs.rank))


def weyl_on_weight(w: WeylElement, lam: Sequence) -> Weight:
    out = tuple(Fraction(x) for x in lam)
    for i in reversed(w.word):
        out = simple_reflect_weight(w.rs, i, out)
    return out


def neg_w_rho(w: WeylElement) -> Weight:
    """-w(rho), the parameter lambda of L_w = L(-w rho)."""
    return tuple(-x for x in weyl_on_weight(w, rho(w.rs)))


def _positive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x > 0


def I_lambda(rs: RootSystem, w: WeylElement) -> frozenset[int]:
    """Nodes k with (-w rho, alpha_k^vee) a positive integer."""
    lam = neg_w_rho(w)
    return frozenset(k + 1 for k, x in enumerate(lam) if _positive_integer(x))


def is_dominant_for(rs: RootSystem, lam: Sequence, J: Iterable[int]) -> bool:
    """(lam, alpha^vee) in Z_{>0} for every simple root alpha_j, j in J."""
    return all(_positive_integer(Fraction(lam[j - 1])) for j in J)


def w0_involution(rs: RootSystem) -> dict[int, int]:
    """i -> k_i with w0(alpha_i) = -alpha_{k_i}."""
    w0 = longest_element(rs)
    out = {}
    for i in range(1, rs.rank + 1):
        img = w0.matrix_column(i)
        (k,) = [j + 1 for j, c in enumerate(img) if c]
        out[i] = k
    return out


@dataclass(frozen=True)
class AVResult:
    cell_index: int
    representative_min: WeylElement
    min_length_elements: tuple[WeylElement, ...]
    representative_max: WeylElement | None
    irreducible: bool = True

    @property
    def unique_min(self) -> bool:
        return len(self.min_length_elements) == 1


def av_representative(rs: RootSystem, w: WeylElement) -> AVResult:
    """The orbital variety label V(L_w) = V(w_min) for w in w0 C_i.

    w_min ranges over the shortest members of w0 C_i, i.e. w0 times the longest
    members of C_i. Outside simply laced types it must be unique, and a tie
    raises NonUniqueMinimum (this happens at node 3 of B3 and C3). In simply
    laced types ties do occur (D_n, E_6, and A_n with n+1 = 2i); all tied
    elements are reported, representative_min is the first in (length, word)
    order, and w_max = w0 s_i is the unique longest member.
    """
    i = w0_cell_index(w)
    if i is None:
        raise NotIntegralMinimal(f"{w} is not in w0*C: L_w is not integral minimal")
    cell = w0_right_cell(rs, i)
    mins = cell.min_length_elements
    if len(mins) > 1 and not rs.cartan_type.simply_laced:
        raise NonUniqueMinimum(f"{rs.cartan_type} w0 C_{i} has {len(mins)} shortest elements")
    w0 = longest_element(rs)
    assert all(multiply(w0, x) in right_cell(rs, i).max_length_elements for x in mins)
    w_max = None
    if rs.cartan_type.simply_laced:
        w_max = multiply(w0, simple_reflection(rs, i))
        assert cell.max_length_elements == (w_max,)
    return AVResult(i, mins[0], mins, w_max)


def dominance_skeleton(rs: RootSystem, i: int) -> dict:
    """Values behind the Gamma(w) = {w} arguments for node i.

    -w0 s_i rho = rho - alpha_{k_i}; it pairs to a non-positive integer with
    alpha_{k_i}^vee and is dominant for every other simple root.
    """
    k = w0_involution(rs)[i]
    lam = neg_w_rho(multiply(longest_element(rs), simple_reflection(rs, i)))
    others = [j for j in range(1, rs.rank + 1) if j != k]
    return {
        "node": i,
        "k": k,
        "weight": lam,
        "pairing_k": lam[k - 1],
        "dominant_off_k": is_dominant_for(rs, lam, others),
    }


# --- named representatives ----------------------------------------------------


def expected_wmin_words(rs: RootSystem) -> dict[int, tuple]:
    """Stated w_min per node, as words x with w_min = w0*x.

    Entries tagged ("elem", ...) are the element itself rather than w0*x.
    Covers D_n (n >= 5), E6, F4 and G2.
    """
    ct = rs.cartan_type
    f, n = ct.family, ct.rank
    if f == "D" and n >= 5:
        out = {1: tuple(range(1, n))}
        for i in range(2, n - 1):
            out[i] = tuple(range(i, n)) if n - i >= i else tuple(range(i, 0, -1))
        out[n - 1] = tuple(range(n - 1, 0, -1))
        out[n] = (n,) + tuple(range(n - 2, 0, -1))
        return out
    if str(ct) == "E6":
        return {1: (1, 3, 4, 5, 6), 2: (2, 4, 5, 6), 3: (3, 4, 5, 6), 4: (4, 5, 6), 5: (5, 4, 3, 1), 6: (6, 5, 4, 3, 1)}
    if str(ct) == "F4":
        return {1: (1, 2, 3, 2, 1), 2: (2, 3, 2, 1), 3: (3, 2, 3, 4), 4: (4, 3, 2, 3, 4)}
    if str(ct) == "G2":
        # w0 C_1 = C_2 and w0 C_2 = C_1; the label for w in C_j is s_j
        return {1: ("elem", 2), 2: ("elem", 1)}
    raise ValueError(f"no stated representatives for {ct}")


def expected_wmin(rs: RootSystem, i: int) -> WeylElement:
    from .weyl import from_word

    word = expected_wmin_words(rs)[i]
    if word and word[0] == "elem":
        return from_word(rs, word[1:])
    return multiply(longest_element(rs), from_word(rs, word))


def verify_av(rs: RootSystem) -> list[dict]:
    """Per node: stated w_min is among the shortest members; report uniqueness."""
    report = []
    for i in range(1, rs.rank + 1):
        cell = w0_right_cell(rs, i)
        mins = cell.min_length_elements
        entry = {"node": i, "unique": len(mins) == 1, "min_length_elements": mins}
        try:
            result = av_representative(rs, mins[0])
        except NonUniqueMinimum as exc:
            entry.update(result=None, error=str(exc))
        else:
            entry.update(result=result, error=None)
        try:
            stated = expected_wmin(rs, i)
        except ValueError:
            stated = None
        entry["stated"] = stated
        entry["stated_is_min"] = None if stated is None else stated in mins
        report.append(entry)
    return report
