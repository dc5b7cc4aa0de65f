"""Structure of the tower Omega^l S^{n+l}: basis, suspension, height, and the
dimension-gap bookkeeping for the James-Hopf targets."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .dl_core import (
    INFINITY,
    Element,
    _q_terms,
    _toggle,
    dim_lower,
    excess,
    is_admissible,
    product_dim,
    to_lower,
    to_upper,
)
from .sqcone import StuntedComplex, is_power_of_two

STABLE = "STABLE"


@dataclass(frozen=True)
class BasisQuery:
    l: float
    n: int
    d: int

    def __post_init__(self):
        if self.n < 1 or self.d < self.n:
            raise ValueError("need n >= 1 and d >= n")


def _nondecreasing(n: int, lo: int, hi: float, cap: int) -> Iterator[tuple]:
    """Nondecreasing J with entries in [lo, hi) and dim Q_J x_n <= cap.

    Built innermost first, so the entries are produced right to left.
    """
    yield ()

    def rec(suffix: tuple, d: int, upper: int):
        # next entry (to the left) is <= the current leftmost one
        for j in range(1, upper + 1):
            nd = 2 * d + j
            if nd > cap:
                break
            J = (j,) + suffix
            yield J
            yield from rec(J, nd, j)

    top = cap if hi == INFINITY else min(cap, int(hi) - 1)
    for j in range(max(lo, 1), top + 1):
        d = 2 * n + j
        if d > cap:
            break
        yield (j,)
        yield from rec((j,), d, j)


def enumerate_basis(q: BasisQuery, products: bool = False) -> list:
    """Generator words of H_*(Omega^l S^{n+l}) of dimension <= q.d as lower sequences.

    With ``products=True`` the list holds every normal-form monomial instead
    (sorted tuples of upper words), the unit excluded.
    """
    gens = sorted(_nondecreasing(q.n, 1, q.l, q.d), key=lambda J: (dim_lower(J, q.n), J))
    if not products:
        return gens
    words = [(to_upper(J, q.n), dim_lower(J, q.n)) for J in gens]
    out = []

    def rec(start: int, prod: tuple, d: int):
        if prod:
            out.append(prod)
        for k in range(start, len(words)):
            w, wd = words[k]
            if d + wd > q.d:
                continue
            rec(k, prod + (w,), d + wd)

    rec(0, (), 0)
    return sorted((tuple(sorted(p)) for p in out), key=lambda p: (product_dim(p, q.n), p))


def upper_generators(n: int, cap: int) -> list:
    """Admissible upper words with excess > n and dimension <= cap, enumerated
    directly in upper indices (independent of the lower-index route)."""
    out = [()]

    def rec(word: tuple, total: int):
        # prepend i with i <= 2 * word[0] and i - total > n
        lo = total + n + 1
        hi = 2 * word[0] if word else cap
        for i in range(lo, hi + 1):
            if n + total + i > cap:
                break
            w = (i,) + word
            out.append(w)
            rec(w, total + i)

    rec((), 0)
    return out


def census(l: float, n: int, cap: int, products: bool = False) -> Counter:
    """Number of basis monomials per dimension, from a generating function."""
    gens = [dim_lower(J, n) for J in _nondecreasing(n, 1, l, cap)]
    if not products:
        return Counter(gens)
    ways = [1] + [0] * cap
    for g in gens:
        for d in range(g, cap + 1):
            ways[d] += ways[d - g]
    return Counter({d: w for d, w in enumerate(ways) if d and w})


def _shift_word(I: tuple, n: int) -> frozenset:
    """Q^I x_n re-based to x_{n+1}: a generator, or a square when ex(I) = n+1."""
    built = frozenset([((),)])
    for i in reversed(I):
        built = _q_terms(i, built, n + 1)
    return built


def suspend(e: Element, steps: int = 1) -> Element:
    """Iterated homology suspension: kills decomposables, re-bases generators."""
    if steps < 0:
        raise ValueError("negative suspension")
    for _ in range(steps):
        acc: set = set()
        for p in e.terms:
            if len(p) != 1:
                continue
            for t in _shift_word(p[0], e.n):
                _toggle(acc, t)
        e = Element(e.n + 1, acc)
    return e


def is_decomposable_sum(e: Element) -> bool:
    return all(len(p) != 1 for p in e.terms)


def max_suspension(e: Element, l: float = INFINITY):
    """Largest j with suspend(e, j) nonzero, and that image.

    Returns ``(STABLE, image)`` when e has an x_n summand (the bottom class
    survives every suspension); ``l`` caps j for an l-fold loop space.
    """
    if not e:
        raise ValueError("zero element")
    j = 0
    while True:
        if ((),) in e.terms:
            return STABLE, e
        if j >= l:
            return j, e
        nxt = suspend(e)
        if not nxt:
            return j, e
        e, j = nxt, j + 1


def height(p: tuple) -> int:
    """Additive over products, doubling under each operation: sum of 2^{len(word)}."""
    return sum(2 ** len(w) for w in p)


def james_hopf_project(e: Element, r: int) -> Element:
    return Element(e.n, [p for p in e.terms if height(p) == r])


def d2_stunted(n: int, k: int) -> StuntedComplex:
    """D_2(S^n, k) as Sigma^n P_n^{n+k-1}."""
    if n < 1 or k < 1:
        raise ValueError("need n, k >= 1")
    return StuntedComplex(n, n, n + k - 1)


def top_dimension(l0: int, l: int, n: int) -> int:
    """Top cell of D_{2^{l0}}(S^{n+1}, l-1)."""
    return (2 ** l0 - 1) * (l - 2) + 2 ** l0 * (n + 1)


@dataclass
class GapReport:
    J: tuple
    l: int
    n: int
    l0: int
    d: int
    top: int
    margin: int
    d_plus_1_mod4_is_2: bool
    d_plus_1_power_of_2: bool
    eliminated_by_gap: bool
    closed_form_d0: int
    exact_d0: int
    closed_form_margin: int
    exact_margin_at_d0: int
    discrepancy: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.__dict__.items()}


def gap_report(J: Sequence[int], l: int, n: int, l0: int | None = None) -> GapReport:
    J = tuple(J)
    if any(b <= a for a, b in zip(J, J[1:])):
        raise ValueError(f"{J} is not strictly increasing")
    if l == INFINITY:
        raise ValueError("gap report needs a finite loop bound")
    if l0 is None:
        l0 = len(J)
    d = dim_lower(J, n)
    top = top_dimension(l0, l, n)
    margin = 2 * d + 1 - top
    mod4 = (d + 1) % 4 == 2
    pow2 = is_power_of_two(d + 1)
    # least candidate dimension at this length, Q_1...Q_{l0} x_n, and the closed forms quoted for it
    exact_d0 = dim_lower(tuple(range(1, l0 + 1)), n)
    closed_d0 = 2 ** (l0 - 1) * (l0 - 1) + 1 + 2 ** l0 * n
    closed_margin = 2 ** l0 * (l0 + n - l) + l + 1
    exact_margin_d0 = 2 * exact_d0 + 1 - top
    discrepancy = {}
    if closed_d0 != exact_d0:
        discrepancy["d0"] = {"closed_form": closed_d0, "exact": exact_d0}
    if closed_margin != exact_margin_d0:
        discrepancy["margin_at_d0"] = {"closed_form": closed_margin, "exact": exact_margin_d0}
    return GapReport(
        J=J, l=l, n=n, l0=l0, d=d, top=top, margin=margin,
        d_plus_1_mod4_is_2=mod4, d_plus_1_power_of_2=pow2,
        eliminated_by_gap=margin > 2 and mod4 and not pow2,
        closed_form_d0=closed_d0, exact_d0=exact_d0,
        closed_form_margin=closed_margin, exact_margin_at_d0=exact_margin_d0,
        discrepancy=discrepancy,
    )


def replay_gap(report: GapReport) -> bool:
    fresh = gap_report(report.J, report.l, report.n, report.l0)
    return fresh.eliminated_by_gap and fresh.margin == report.margin


def lower_form(I: Sequence[int], n: int) -> tuple:
    return to_lower(I, n)


def is_generator_upper(I: Sequence[int], n: int) -> bool:
    return is_admissible(I) and excess(I) > n
