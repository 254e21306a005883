"""Smoothness dispatch, the Poincare-polynomial oracle, and S(w0 C_i)."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass

from .bp import smooth_bp
from .cells import w0_cell_index, w0_right_cell
from .patterns import contains_typeA_pattern, smooth_restricted
from .rootsys import RootSystem
from .verdict import SmoothnessVerdict
from .weyl import WeylElement, lower_interval, one_line

log = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP = 200_000

# Cross-check every applicable engine; disagreement raises when True, logs otherwise.
STRICT = True


class EngineDisagreement(AssertionError):
    pass


def smooth_typeA(w: WeylElement) -> SmoothnessVerdict:
    perm = one_line(w)
    for p in ("3412", "4231"):
        pos = contains_typeA_pattern(perm, p)
        if pos is not None:
            return SmoothnessVerdict(False, "typeA", (p, pos))
    return SmoothnessVerdict(True, "typeA")


def is_smooth(rs: RootSystem, w: WeylElement, cross_check: bool = False) -> SmoothnessVerdict:
    """Smoothness of the Schubert variety X(w).

    Type A uses 3412/4231 avoidance, B/C/D elements of w0*C use the
    restricted lists, everything else goes through subsystems. With
    ``cross_check`` the subsystem engine is run as well and must agree.
    """
    family = rs.cartan_type.family
    if family == "A":
        verdict = smooth_typeA(w)
    elif family in "BCD" and w0_cell_index(w) is not None:
        verdict = smooth_restricted(w)
    else:
        return smooth_bp(rs, w)
    if cross_check:
        other = smooth_bp(rs, w)
        if other.smooth != verdict.smooth:
            msg = f"{verdict.engine} says {verdict.smooth}, bp says {other.smooth} for {w}"
            if STRICT:
                raise EngineDisagreement(msg)
            log.error(msg)
    return verdict


@dataclass(frozen=True)
class PoincarePolynomial:
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coefficients):
            if k == 0:
                terms.append(str(c))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)


def poincare(rs: RootSystem, w: WeylElement, cap: int = DEFAULT_ORACLE_CAP) -> PoincarePolynomial:
    """p_w(t) = sum over v <= w of t^l(v). Refuses (IntervalTooLarge) beyond ``cap`` elements."""
    counts = Counter(v.length for v in lower_interval(w, cap=cap))
    return PoincarePolynomial(tuple(counts[k] for k in range(w.length + 1)))


def is_palindromic(p: PoincarePolynomial) -> bool:
    c = p.coefficients
    return c == c[::-1]


def rationally_smooth(rs: RootSystem, w: WeylElement, cap: int = DEFAULT_ORACLE_CAP) -> SmoothnessVerdict:
    p = poincare(rs, w, cap)
    return SmoothnessVerdict(is_palindromic(p), "oracle", p)


def smooth_elements_of_cell(rs: RootSystem, i: int, cross_check: bool = False) -> set[WeylElement]:
    return {w for w in w0_right_cell(rs, i) if is_smooth(rs, w, cross_check=cross_check).smooth}


# --- closed forms for S(w0 C_i) ----------------------------------------------


def _up(a: int, b: int) -> tuple[int, ...]:
    return tuple(range(a, b + 1))


def _down(a: int, b: int) -> tuple[int, ...]:
    return tuple(range(a, b - 1, -1))


def expected_smooth_words(rs: RootSystem) -> dict[int, list[tuple[int, ...]] | str]:
    """Closed forms for S(w0 C_i) as words x with the element w0*x.

    The value ``"all"`` means the whole cell. For G2 the listed words are the
    elements themselves (w0*C_1 = C_2), so they are returned pre-multiplied:
    each word is converted to w0^-1 * element by ``expected_smooth_set``.
    """
    ct = rs.cartan_type
    f, n = ct.family, ct.rank
    out: dict = {}
    if f == "A":
        for i in range(1, n + 1):
            out[i] = "all" if i in (1, n) else [_down(i, 1), _up(i, n)]
    elif f == "B":
        out[1] = [_up(1, n) + _down(n - 1, n - j + 1) for j in range(1, n + 1)]
        for i in range(2, n):
            out[i] = [_up(i, n) + _down(n - 1, 1)]
        out[n] = [_down(n, 1)]
    elif f == "C":
        out[1] = "all"
        for i in range(2, n):
            out[i] = [_down(i, 1), _up(i, n) + _down(n - 1, 1)]
        out[n] = [_down(n, 1)]
    elif f == "D":
        if n < 4:
            raise ValueError("closed forms cover D_n with n >= 4")
        out[1] = [_up(1, n - 1), _up(1, n - 2) + (n,)]
        for i in range(2, n - 1):
            out[i] = []
        if n == 4:
            # includes the two extra smooth elements of the D4 remark
            out[3] = [(3, 2, 1), (3, 2, 4)]
            out[4] = [(4, 2, 1), (4, 2, 3)]
        else:
            out[n - 1] = [_down(n - 1, 1)]
            out[n] = [(n,) + _down(n - 2, 1)]
    elif f in "EF":
        for i in range(1, n + 1):
            out[i] = []
    else:  # G2, stated as plain elements
        out[1] = [("elem", 2), ("elem", 2, 1), ("elem", 2, 1, 2)]
        out[2] = [("elem", 1), ("elem", 1, 2)]
    return out


def expected_smooth_set(rs: RootSystem, i: int) -> set[WeylElement]:
    from .weyl import from_word, longest_element, multiply

    spec = expected_smooth_words(rs)[i]
    if spec == "all":
        return set(w0_right_cell(rs, i))
    w0 = longest_element(rs)
    out = set()
    for word in spec:
        if word and word[0] == "elem":
            out.add(from_word(rs, word[1:]))
        else:
            out.add(multiply(w0, from_word(rs, word)))
    return out


def _element_json(w: WeylElement) -> dict:
    ct = w.rs.cartan_type
    return {
        "word": list(w.word),
        "one_line": list(one_line(w)) if ct.is_classical else None,
        "length": w.length,
    }


def _sorted(ws):
    return sorted(ws, key=lambda w: (w.length, w.word))


def verify_theorem_smcell(rs: RootSystem, cross_check: bool = True) -> list[dict]:
    """Compare computed S(w0 C_i) with the closed forms, node by node."""
    report = []
    for i in range(1, rs.rank + 1):
        computed = smooth_elements_of_cell(rs, i, cross_check=cross_check)
        expected = expected_smooth_set(rs, i)
        report.append(
            {
                "node": i,
                "computed": [_element_json(w) for w in _sorted(computed)],
                "expected": [_element_json(w) for w in _sorted(expected)],
                "match": computed == expected,
            }
        )
    return report
