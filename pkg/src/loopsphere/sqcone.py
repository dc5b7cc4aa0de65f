"""Steenrod squares on the cohomology side: Adem normalization, stunted
projective spaces, and the two-cell cone detection question.

A Steenrod word ``(a_1, ..., a_s)`` is Sq^{a_1}...Sq^{a_s}; it is admissible
when a_k >= 2 a_{k+1}.  Inadmissible pairs are rewritten with

    Sq^a Sq^b = sum_{c=0}^{a/2} binom(b - c - 1, a - 2c) Sq^{a+b-c} Sq^c,  a < 2b.

The cone question: a stable map g: S^{2m-1} -> X is attached to X and we ask
whether Sq^m can carry an m-dimensional class xi of X onto the new top cell.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .dl_core import _toggle, binom_mod2

SqWord = tuple  # tuple[int, ...]

DEFAULT_HOPF_DIMS = frozenset({1, 2, 4, 8})


def is_power_of_two(m: int) -> bool:
    return m > 0 and m & (m - 1) == 0


def sq_is_admissible(w: Sequence[int]) -> bool:
    return all(w[k] >= 2 * w[k + 1] for k in range(len(w) - 1))


@lru_cache(maxsize=None)
def _normalize_word(w: SqWord) -> frozenset:
    w = tuple(a for a in w if a != 0)
    for k in range(len(w) - 1):
        a, b = w[k], w[k + 1]
        if a < 2 * b:
            head, tail = w[:k], w[k + 2:]
            acc: set = set()
            for c in range(a // 2 + 1):
                if binom_mod2(b - c - 1, a - 2 * c):
                    for t in _normalize_word(head + (a + b - c, c) + tail):
                        _toggle(acc, t)
            return frozenset(acc)
    return frozenset([w])


def adem_normalize_sq(words: Iterable[Sequence[int]]) -> frozenset:
    """Admissible normal form of a formal F2 sum of Steenrod words."""
    acc: set = set()
    for w in words:
        for t in _normalize_word(tuple(w)):
            _toggle(acc, t)
    return frozenset(acc)


def sq_product(*words: Iterable[Sequence[int]]) -> frozenset:
    """Normal form of the product of several formal sums of words."""
    current = frozenset([()])
    for factor in words:
        factor = list(factor)
        current = adem_normalize_sq(p + tuple(q) for p in current for q in factor)
    return current


def admissible_basis(degree: int) -> list:
    """All admissible words of the given degree (the empty word in degree 0)."""
    out = []

    def rec(prefix: tuple, remaining: int, cap: int):
        if remaining == 0:
            out.append(prefix)
            return
        for a in range(min(cap, remaining), 0, -1):
            rest = remaining - a
            if rest >= a:
                # the tail a/2 + a/4 + ... stays below a
                continue
            rec(prefix + (a,), rest, a // 2)

    rec((), degree, degree)
    return sorted(out)


def count_admissible(degree: int) -> int:
    """Enumerative census: partitions of degree into parts 2^k - 1."""
    parts = []
    p = 1
    while p <= degree:
        parts.append(p)
        p = 2 * p + 1
    ways = [1] + [0] * degree
    for part in parts:
        for d in range(part, degree + 1):
            ways[d] += ways[d - part]
    return ways[degree]


@dataclass(frozen=True)
class StuntedComplex:
    """Sigma^s P_a^b: one class in each cohomological dimension s+a ... s+b."""

    s: int
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < self.a or self.s < 0:
            raise ValueError(f"bad stunted complex Sigma^{self.s} P_{self.a}^{self.b}")

    @property
    def bottom(self) -> int:
        return self.s + self.a

    @property
    def top(self) -> int:
        return self.s + self.b

    @property
    def dims(self) -> range:
        return range(self.bottom, self.top + 1)

    def has_class(self, m: int) -> bool:
        return self.bottom <= m <= self.top

    @property
    def is_sphere(self) -> bool:
        return self.a == self.b

    def __str__(self) -> str:
        susp = f"Sigma^{self.s} " if self.s else ""
        return f"{susp}P_{self.a}^{self.b}"


class Sphere:
    """Marker for a sphere base; its only class sits in the detect dimension."""

    def __repr__(self) -> str:
        return "SPHERE"


SPHERE = Sphere()


def sq_stunted(k: int, m: int, X: StuntedComplex) -> int:
    """Sq^k on the class of dimension m; returns 1 if it hits a^{m+k}, else 0."""
    if not X.has_class(m):
        raise ValueError(f"no class in dimension {m} of {X}")
    if k == 0:
        return 1
    if m + k > X.top:
        return 0
    return binom_mod2(m - X.s, k)


def sq_word_on_class(w: Sequence[int], m: int, X: StuntedComplex) -> int | None:
    """Apply Sq^{a_1}...Sq^{a_s} (rightmost first); dimension of the image or None."""
    for a in reversed(tuple(w)):
        if not sq_stunted(a, m, X):
            return None
        m += a
    return m


def _compositions_pow2(m: int):
    if m == 0:
        yield ()
        return
    p = 1
    while p <= m:
        for rest in _compositions_pow2(m - p):
            yield (p,) + rest
        p *= 2


class Decompositions(frozenset):
    """Set of power-of-two words; ``exhaustive_for_detection`` is False when m = 2^t."""

    exhaustive_for_detection: bool = True


def decompositions_pow2(m: int) -> Decompositions:
    """Words of length >= 2 in Sq^{2^k} of total degree m with nonzero normal form."""
    if m < 2:
        raise ValueError("need m >= 2")
    words = [w for w in _compositions_pow2(m) if len(w) >= 2 and _normalize_word(w)]
    out = Decompositions(words)
    out.exhaustive_for_detection = not is_power_of_two(m)
    return out


class ConeVerdict(enum.Enum):
    IMPOSSIBLE = "IMPOSSIBLE"
    POSSIBLE = "POSSIBLE"
    NEEDS_EXTERNAL = "NEEDS-EXTERNAL"


@dataclass(frozen=True)
class ConeProblem:
    base: object  # StuntedComplex or SPHERE
    detect_dim: int
    hopf_dims: frozenset = DEFAULT_HOPF_DIMS

    @property
    def cone_dim(self) -> int:
        return 2 * self.detect_dim


@dataclass
class ConeResult:
    verdict: ConeVerdict
    route: str
    trace: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"verdict": self.verdict.value, "route": self.route, "trace": self.trace}


def _surviving_pow2_route(m: int, X: StuntedComplex) -> tuple | None:
    """A power-of-two word whose action short of its last square keeps xi nonzero.

    Stepwise search over images: every intermediate class lies below the cone
    cell, where the cone and the base agree.  Returns None when every route of
    length >= 2 dies before reaching the cone cell.
    """
    target = 2 * m
    # reach[dim] = word (rightmost first) bringing xi to a nonzero class of that dim
    reach = {m: ()}
    frontier = [m]
    while frontier:
        nxt = []
        for d in frontier:
            p = 1
            while d + p < target:
                e = d + p
                if e not in reach and sq_stunted(p, d, X):
                    reach[e] = reach[d] + (p,)
                    nxt.append(e)
                p *= 2
        frontier = nxt
    for d, path in sorted(reach.items()):
        if d == m:
            continue
        last = target - d
        if is_power_of_two(last):
            return (last,) + tuple(reversed(path))
    return None


def adem_consistency_system(m: int, X: StuntedComplex) -> tuple[list, list]:
    """Linear constraints on how the cone cell can be hit.

    Unknown v_x (x a class dimension of X below 2m) says whether Sq^{2m-x} sends
    the class of dimension x onto the cone class e.  Each Adem relation
    Sq^a Sq^b y = sum_c binom(b-c-1, a-2c) Sq^{a+b-c} Sq^c y, with a + b + dim y
    = 2m, evaluated on the e-coordinate gives one F2 equation.  Lower classes
    are computed inside X, which agrees with the cone below dimension 2m.
    Returns (variables, rows) with rows as sets of variable dimensions paired
    with the relation (y, a, b) that produced them.
    """
    target = 2 * m
    variables = [x for x in X.dims if x < target]
    rows = []
    for y in variables:
        total = target - y
        for b in range(1, total):
            a = total - b
            if a >= 2 * b:
                continue
            row: set = set()
            if sq_stunted(b, y, X):
                _toggle(row, y + b)
            for c in range(0, a // 2 + 1):
                if not binom_mod2(b - c - 1, a - 2 * c):
                    continue
                if c == 0:
                    _toggle(row, y)
                elif sq_stunted(c, y, X):
                    _toggle(row, y + c)
            if row:
                rows.append((frozenset(row), (y, a, b)))
    return variables, rows


def forced_zero_certificate(m: int, X: StuntedComplex) -> list | None:
    """Relations whose sum is the single equation v_m = 0, if they exist."""
    _, rows = adem_consistency_system(m, X)
    # Gaussian elimination over F2 tracking which relations were combined
    pivots: dict = {}
    for vec, origin in rows:
        vec = set(vec)
        used = {origin}
        while vec:
            p = max(vec)
            if p not in pivots:
                pivots[p] = (vec, used)
                break
            pvec, pused = pivots[p]
            vec ^= pvec
            used ^= pused
    # reduce the target vector {m}
    target = {m}
    used: set = set()
    while target:
        p = max(target)
        if p not in pivots:
            return None
        pvec, pused = pivots[p]
        target ^= pvec
        used ^= pused
    return sorted(used)


def replay_certificate(m: int, X: StuntedComplex, relations: Iterable) -> bool:
    """Check that the listed Adem relations sum to v_m = 0."""
    _, rows = adem_consistency_system(m, X)
    by_origin = {origin: vec for vec, origin in rows}
    total: set = set()
    for rel in relations:
        rel = tuple(rel)
        if rel not in by_origin:
            return False
        total ^= set(by_origin[rel])
    return total == {m}


def cone_detection_possible(p: ConeProblem) -> ConeResult:
    m = p.detect_dim
    if m < 1:
        raise ValueError("detect dimension must be positive")
    base = p.base
    if isinstance(base, StuntedComplex) and base.is_sphere:
        if base.bottom != m:
            raise ValueError(f"sphere class in dimension {base.bottom}, detect dimension {m}")
        base = SPHERE
    if base is SPHERE:
        ok = m in p.hopf_dims
        return ConeResult(
            ConeVerdict.POSSIBLE if ok else ConeVerdict.IMPOSSIBLE,
            "hopf-invariant-one",
            {"sq": m, "hopf_dims": sorted(p.hopf_dims)},
        )
    if not isinstance(base, StuntedComplex):
        raise TypeError("base must be a StuntedComplex or SPHERE")
    if not base.has_class(m):
        raise ValueError(f"{base} has no class in detect dimension {m}")
    if is_power_of_two(m):
        return ConeResult(ConeVerdict.NEEDS_EXTERNAL, "indecomposable", {"sq": m})
    if base.has_class(2 * m) and sq_stunted(m, m, base):
        # Sq^m xi is already nonzero in the base; detection on the new cell is not defined
        return ConeResult(ConeVerdict.NEEDS_EXTERNAL, "base-hit", {"sq": m, "base": str(base)})
    if m % 4 == 2 and m > 2:
        # Sq^{4k+2} = Sq^2 Sq^{4k} + Sq^1 Sq^{4k} Sq^1
        k4 = m - 2
        left = sq_word_on_class((k4,), m, base)
        right = sq_word_on_class((k4, 1), m, base)
        if left is None and right is None:
            return ConeResult(ConeVerdict.IMPOSSIBLE, "sq2-sq4k", {"sq": m, "base": str(base),
                              "relation": [[2, k4], [1, k4, 1]]})
    route = _surviving_pow2_route(m, base)
    if route is None:
        return ConeResult(ConeVerdict.IMPOSSIBLE, "pow2-exhaustive", {"sq": m, "base": str(base)})
    cert = forced_zero_certificate(m, base)
    if cert is not None:
        return ConeResult(
            ConeVerdict.IMPOSSIBLE,
            "adem-consistency",
            {"sq": m, "base": str(base), "surviving_pow2_word": list(route),
             "relations": [list(r) for r in cert]},
        )
    return ConeResult(
        ConeVerdict.POSSIBLE,
        "pow2-word",
        {"sq": m, "base": str(base), "surviving_pow2_word": list(route)},
    )


def replay_cone(p: ConeProblem, result: ConeResult) -> bool:
    """Re-derive an IMPOSSIBLE verdict from its trace."""
    m = p.detect_dim
    if result.route == "hopf-invariant-one":
        return (m in p.hopf_dims) == (result.verdict is ConeVerdict.POSSIBLE)
    if result.route == "sq2-sq4k":
        k4 = m - 2
        same = adem_normalize_sq([(m,)]) == adem_normalize_sq([(2, k4), (1, k4, 1)])
        return same and all(sq_word_on_class(w[1:], m, p.base) is None
                            for w in ((2, k4), (1, k4, 1)))
    if result.route == "pow2-exhaustive":
        return _surviving_pow2_route(m, p.base) is None
    if result.route == "adem-consistency":
        return replay_certificate(m, p.base, result.trace["relations"])
    if result.route == "pow2-word":
        w = result.trace["surviving_pow2_word"]
        return sum(w) == m and sq_word_on_class(w[1:], m, p.base) is not None
    if result.route == "base-hit":
        return p.base.has_class(2 * m) and bool(sq_stunted(m, m, p.base))
    return result.route == "indecomposable" and is_power_of_two(m)
