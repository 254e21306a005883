"""Robinson-Schensted row insertion."""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> list[int]:
        return [len(r) for r in self.rows]

    def is_standard_shape(self) -> bool:
        """Rows and columns strictly increase; row lengths weakly decrease."""
        rows = self.rows
        if any(len(rows[k]) < len(rows[k + 1]) for k in range(len(rows) - 1)):
            return False
        if any(r[j] >= r[j + 1] for r in rows for j in range(len(r) - 1)):
            return False
        return all(rows[k][j] < rows[k + 1][j] for k in range(len(rows) - 1) for j in range(len(rows[k + 1])))

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


def rs_insert(seq: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Insertion tableau P and recording tableau Q of a sequence of distinct integers."""
    if len(set(seq)) != len(seq):
        raise ValueError("RS insertion needs distinct entries")
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(seq, start=1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            k = bisect_right(row, x)  # leftmost entry strictly bigger than x
            if k == len(row):
                row.append(x)
                Q[r].append(step)
                break
            row[k], x = x, row[k]
            r += 1
    freeze = lambda T: Tableau(tuple(tuple(r) for r in T))
    return freeze(P), freeze(Q)


def shape(t: Tableau) -> list[int]:
    return t.shape
