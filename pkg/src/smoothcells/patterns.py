"""Signed-permutation patterns for the classical types."""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .cells import w0_cell_index
from .verdict import SmoothnessVerdict
from .weyl import WeylElement, one_line

SignedSequence = tuple[int, ...]


def fl(seq: Sequence[int]) -> SignedSequence:
    """Flatten a signed sequence to absolute values 1..k, keeping signs and relative order."""
    seq = tuple(int(x) for x in seq)
    if any(x == 0 for x in seq):
        raise ValueError("fl() needs nonzero entries")
    mags = [abs(x) for x in seq]
    if len(set(mags)) != len(mags):
        raise ValueError(f"repeated absolute value in {seq}")
    rank = {m: k for k, m in enumerate(sorted(mags), start=1)}
    return tuple(rank[abs(x)] if x > 0 else -rank[abs(x)] for x in seq)


def contains_signed_pattern(line: Sequence[int], pattern: Sequence[int]) -> tuple[int, ...] | None:
    """Positions (0-based) of a subsequence flattening to ``pattern``, or None."""
    pattern = tuple(pattern)
    k = len(pattern)
    if k > len(line):
        return None
    for pos in combinations(range(len(line)), k):
        if fl([line[p] for p in pos]) == pattern:
            return pos
    return None


def contains_typeA_pattern(perm: Sequence[int], pattern: str) -> tuple[int, ...] | None:
    """Witness positions i<j<k<l for 3412 (w_k<w_l<w_i<w_j) or 4231 (w_l<w_j<w_k<w_i)."""
    if pattern not in ("3412", "4231"):
        raise ValueError(f"unsupported type A pattern {pattern!r}")
    for i, j, k, l in combinations(range(len(perm)), 4):
        a, b, c, d = perm[i], perm[j], perm[k], perm[l]
        if pattern == "3412" and c < d < a < b:
            return (i, j, k, l)
        if pattern == "4231" and d < b < c < a:
            return (i, j, k, l)
    return None


def parse_bar(text: str) -> SignedSequence:
    """Read the compact notation used in tables: "-3-412" means (-3, -4, 1, 2)."""
    out, sign = [], 1
    for ch in text.replace(" ", ""):
        if ch == "-":
            sign = -1
        else:
            out.append(sign * int(ch))
            sign = 1
    return tuple(out)


def bar(pattern: Sequence[int], overbar: bool = True) -> str:
    """Render a signed pattern; negatives get a combining overbar (or a minus)."""
    if overbar:
        return "".join(f"{abs(x)}̄" if x < 0 else str(x) for x in pattern)
    return "".join(str(x) for x in pattern)


# Forbidden patterns for elements of w0*C, one list per family.
_RESTRICTED = {
    "B": "-12-3 1-2-3 1-3-2 -21-3 2-1-3 2-3-1 -31-2 -3-21 -32-1 -3-4-1-2 -2-1",
    "C": "-12-3 -2-1-3 -21-3 2-1-3 2-3-1 -3-2-1 -3-21 -32-1 3-2-1 -3-4-1-2 1-2",
    "D_even": "-1-3-2 21-3-4 -2-1-3 2-31-4 -2-431 31-2-4 3-21-4 -3-2-1 3-2-41 -3-4-1-2 3-41-2",
    "D_odd": "-12-3 1-3-2 -2-1-3 -21-3-4 21-3-4 2-1-3-4 -24-3-1 3-1-2-4 31-2-4 3-4-1-2",
}


# The printed odd-D list stops at ten entries. 2̄3̄14̄ is the witness used for
# w0 s_n s_{n-2} ... s_k in odd rank and is needed to agree with the subsystem
# engine on D5 (element (-2,-3,-4,1,-5)).
_RECOVERED = {"D_odd": "-2-31-4"}


def restricted_forbidden_list(family: str, n: int | None = None, verbatim: bool = False) -> list[SignedSequence]:
    """Patterns that decide smoothness on w0*C for types B, C and D (D needs the rank parity).

    ``verbatim=True`` gives the printed lists only; by default the odd-D list
    also carries the recovered eleventh pattern.
    """
    if family == "D":
        if n is None:
            raise ValueError("type D needs the rank to pick the parity list")
        key = "D_even" if n % 2 == 0 else "D_odd"
    elif family in ("B", "C"):
        key = family
    else:
        raise ValueError(f"no restricted list for type {family}")
    texts = _RESTRICTED[key].split()
    if not verbatim and key in _RECOVERED:
        texts.append(_RECOVERED[key])
    return [parse_bar(p) for p in texts]


class NotInW0C(ValueError):
    pass


def smooth_restricted(w: WeylElement, verbatim: bool = False) -> SmoothnessVerdict:
    rs = w.rs
    ct = rs.cartan_type
    if ct.family not in "BCD":
        raise ValueError(f"restricted lists exist only for B, C, D (got {ct})")
    if w0_cell_index(w) is None:
        raise NotInW0C(f"{w} is not in w0*C; the restricted lists do not apply")
    line = one_line(w)
    for p in restricted_forbidden_list(ct.family, ct.rank, verbatim):
        pos = contains_signed_pattern(line, p)
        if pos is not None:
            return SmoothnessVerdict(False, "restricted_list", (p, pos))
    return SmoothnessVerdict(True, "restricted_list")
