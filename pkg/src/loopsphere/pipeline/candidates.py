"""Candidate sequences J for square classes (Q_J x_n)^2 in H_*(Omega^l S^{n+l})."""
from __future__ import annotations

from dataclasses import dataclass

from ..dl_core import dim_lower, to_upper
from .published import FAMILY_SEQUENCES

MIN_L, MAX_L = 4, 9


@dataclass(frozen=True)
class Candidate:
    J: tuple
    l: int
    extra: bool = False  # not among the published families

    @property
    def length(self) -> int:
        return len(self.J)

    def dim(self, n: int) -> int:
        return dim_lower(self.J, n)

    def upper(self, n: int) -> tuple:
        return to_upper(self.J, n)

    def height(self) -> int:
        # height of the square (Q_J x_n)^2
        return 2 * 2 ** len(self.J)

    def label(self) -> str:
        return "(" + ",".join(map(str, self.J)) + ")"


def is_candidate_sequence(J, l: int) -> bool:
    """Strictly increasing, entries in (0, l), j_1 odd, consecutive sums odd."""
    J = tuple(J)
    if not J:
        return True
    if J[0] % 2 == 0 or not all(0 < j < l for j in J):
        return False
    return all(b > a and (a + b) % 2 == 1 for a, b in zip(J, J[1:]))


def _sequences(l: int):
    def rec(prefix: tuple):
        yield prefix
        last = prefix[-1]
        for j in range(last + 1, l, 2):
            yield from rec(prefix + (j,))

    yield ()
    for j1 in range(1, l, 2):
        yield from rec((j1,))


def enumerate_candidates(l: int) -> list:
    if not MIN_L <= l <= MAX_L:
        raise ValueError(f"loop bound {l} outside {MIN_L}..{MAX_L}")
    out = []
    for J in _sequences(l):
        published = J in FAMILY_SEQUENCES and all(j < 8 for j in J)
        out.append(Candidate(J, l, extra=not published))
    return sorted(out, key=lambda c: (len(c.J), c.J))
