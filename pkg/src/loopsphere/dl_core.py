"""Mod 2 Dyer-Lashof monomials over a sphere class and their polynomial algebra.

A generator of H_*(QS^n) is an admissible upper-indexed word Q^I x_n with
excess ex(I) > n.  Words are plain tuples of ints ``(i_1, ..., i_s)`` read left
to right, so ``(15, 8)`` is Q^15 Q^8 x_n.  A product is a sorted tuple of words
(the empty tuple is the unit) and an :class:`Element` is a set of products with
F2 coefficients.

Normal form conventions:

* Q^i z = 0 for i < dim z and Q^{dim z} z = z*z, so a word of excess exactly n
  never appears; its square is stored as a repeated factor instead.
* Inadmissible composites are rewritten with the Adem relation, for r > 2s,

      Q^r Q^s = sum_k binom(k - s - 1, 2k - r) Q^{r+s-k} Q^k,

  the sum running over ceil(r/2) <= k <= r - s - 1.
* An operation meeting a product uses the Cartan formula
  Q^m(xy) = sum_{i+j=m} Q^i x * Q^j y.

Lower-indexed operations satisfy Q_j z = Q^{j + dim z} z; a lower word
``(j_1, ..., j_s)`` means Q_{j_1} ... Q_{j_s} x_n, innermost operation last.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

INFINITY = math.inf

Word = tuple  # tuple[int, ...]
Product = tuple  # tuple[Word, ...], sorted


def binom_mod2(a: int, b: int) -> int:
    """Parity of binomial(a, b); zero for negative arguments or b > a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return 1 if (a & b) == b else 0


def dim_lower(J: Sequence[int], n: int) -> int:
    d = n
    for j in reversed(J):
        d = 2 * d + j
    return d


def to_upper(J: Sequence[int], n: int) -> Word:
    upper = []
    d = n
    for j in reversed(J):
        upper.append(j + d)
        d = 2 * d + j
    return tuple(reversed(upper))


def to_lower(I: Sequence[int], n: int) -> Word:
    lower = []
    d = n
    for i in reversed(I):
        lower.append(i - d)
        d += i
    return tuple(reversed(lower))


def word_dim(I: Sequence[int], n: int) -> int:
    return n + sum(I)


def excess(I: Sequence[int]) -> float:
    """i_1 - (i_2 + ... + i_s), or +inf for the empty word."""
    if not I:
        return INFINITY
    return I[0] - sum(I[1:])


def relative_excess(I: Sequence[int], n: int) -> float:
    """ex(I) - n; equals j_1 for a word coming from lower indices."""
    return excess(I) - n


def is_admissible(I: Sequence[int]) -> bool:
    return all(I[k] <= 2 * I[k + 1] for k in range(len(I) - 1))


def is_generator(I: Sequence[int], n: int) -> bool:
    return is_admissible(I) and excess(I) > n


def product_dim(p: Product, n: int) -> int:
    return sum(word_dim(w, n) for w in p)


@dataclass(frozen=True)
class LowerWord:
    J: tuple
    n: int
    l: float = INFINITY

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"base dimension must be positive, got {self.n}")
        for j in self.J:
            if j <= 0 or j >= self.l:
                raise ValueError(f"lower index {j} outside (0, {self.l})")

    @property
    def dim(self) -> int:
        return dim_lower(self.J, self.n)

    @property
    def length(self) -> int:
        return len(self.J)

    def is_generator_word(self) -> bool:
        return all(a <= b for a, b in zip(self.J, self.J[1:]))

    def upper(self) -> "UpperWord":
        return UpperWord(to_upper(self.J, self.n), self.n)


@dataclass(frozen=True)
class UpperWord:
    I: tuple
    n: int

    @property
    def dim(self) -> int:
        return word_dim(self.I, self.n)

    @property
    def excess(self) -> float:
        return excess(self.I)

    def lower(self, l: float = INFINITY) -> LowerWord:
        return LowerWord(to_lower(self.I, self.n), self.n, l)


def _toggle(acc: set, item) -> None:
    if item in acc:
        acc.remove(item)
    else:
        acc.add(item)


def _mul_products(p: Product, q: Product) -> Product:
    return tuple(sorted(p + q))


def _mul_termsets(a: Iterable[Product], b: Iterable[Product]) -> frozenset:
    acc: set = set()
    b = list(b)
    for p in a:
        for q in b:
            _toggle(acc, _mul_products(p, q))
    return frozenset(acc)


class Element:
    """An F2 linear combination of normal-form products over x_n.

    Equality is structural, so two elements are equal exactly when they are
    the same homology class.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Iterable[Product] = ()):
        self.n = n
        self.terms = frozenset(terms)

    # constructors
    @classmethod
    def zero(cls, n: int) -> "Element":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "Element":
        return cls(n, [()])

    @classmethod
    def x(cls, n: int) -> "Element":
        return cls(n, [((),)])

    @classmethod
    def word(cls, I: Sequence[int], n: int) -> "Element":
        """Q^I x_n, normalized (so inadmissible or low-excess input is fine)."""
        return adem_normalize([[tuple(I)]], n)

    @classmethod
    def lower(cls, J: Sequence[int], n: int) -> "Element":
        return cls.word(to_upper(J, n), n)

    # algebra
    def __add__(self, other: "Element") -> "Element":
        _check_base(self, other)
        return Element(self.n, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def __pow__(self, k: int) -> "Element":
        out = Element.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, item) -> bool:
        if isinstance(item, Element):
            return item.terms <= self.terms
        return item in self.terms

    # inspection
    def sorted_terms(self) -> list:
        return sorted(self.terms, reverse=True)

    def leading(self) -> Product | None:
        return max(self.terms) if self.terms else None

    def dims(self) -> set:
        return {product_dim(p, self.n) for p in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.dims()) <= 1

    @property
    def dim(self) -> int:
        ds = self.dims()
        if len(ds) != 1:
            raise ValueError("element is zero or not homogeneous")
        return ds.pop()

    def __repr__(self) -> str:
        return f"Element({format_element(self)!s})"

    def __str__(self) -> str:
        return format_element(self)


def _check_base(a: Element, b: Element) -> None:
    if a.n != b.n:
        raise ValueError(f"elements over different spheres: x_{a.n} vs x_{b.n}")


def multiply(a: Element, b: Element) -> Element:
    _check_base(a, b)
    return Element(a.n, _mul_termsets(a.terms, b.terms))


@lru_cache(maxsize=None)
def _q_word(i: int, I: Word, n: int) -> frozenset:
    """Q^i applied to the generator Q^I x_n, as a frozenset of products."""
    d = word_dim(I, n)
    if i < d:
        return frozenset()
    if i == d:
        return frozenset([(I, I)])
    if not I or i <= 2 * I[0]:
        return frozenset([((i,) + I,)])
    s, tail = I[0], I[1:]
    acc: set = set()
    for k in range((i + 1) // 2, i - s):
        if binom_mod2(k - s - 1, 2 * k - i):
            inner = _q_word(k, tail, n)
            for p in _q_terms(i + s - k, inner, n):
                _toggle(acc, p)
    return frozenset(acc)


@lru_cache(maxsize=None)
def _q_product(i: int, p: Product, n: int) -> frozenset:
    if not p:
        # Q^i on the unit: only Q^0 survives
        return frozenset([()]) if i == 0 else frozenset()
    if len(p) == 1:
        return _q_word(i, p[0], n)
    first, rest = p[0], p[1:]
    lo = word_dim(first, n)
    hi = i - product_dim(rest, n)
    acc: set = set()
    for a in range(lo, hi + 1):
        left = _q_word(a, first, n)
        if not left:
            continue
        right = _q_product(i - a, rest, n)
        if not right:
            continue
        for t in _mul_termsets(left, right):
            _toggle(acc, t)
    return frozenset(acc)


def _q_terms(i: int, terms: Iterable[Product], n: int) -> frozenset:
    acc: set = set()
    for p in terms:
        for t in _q_product(i, p, n):
            _toggle(acc, t)
    return frozenset(acc)


def apply_Q(i: int, e: Element) -> Element:
    """Q^i e in normal form."""
    return Element(e.n, _q_terms(i, e.terms, e.n))


def apply_lower_Q(j: int, e: Element) -> Element:
    """Q_j e for homogeneous e."""
    if not e:
        return e
    return apply_Q(j + e.dim, e)


def adem_normalize(raw, n: int | None = None) -> Element:
    """Normal form of a formal sum of products of (possibly inadmissible) words.

    ``raw`` is an :class:`Element` (returned unchanged, it is already normal) or
    an iterable of products, each an iterable of upper-index sequences.
    """
    if isinstance(raw, Element):
        return Element(raw.n, raw.terms)
    if n is None:
        raise ValueError("base dimension n required for raw input")
    acc: set = set()
    for prod in raw:
        current = frozenset([()])
        for w in prod:
            built = frozenset([((),)])
            for i in reversed(tuple(w)):
                built = _q_terms(i, built, n)
                if not built:
                    break
            current = _mul_termsets(current, built)
            if not current:
                break
        for t in current:
            _toggle(acc, t)
    return Element(n, acc)


def format_word(I: Sequence[int], n: int) -> str:
    ops = "".join(f"Q^{{{i}}}" if i >= 10 else f"Q^{i}" for i in I)
    return f"{ops}x_{n}"


def format_product(p: Product, n: int) -> str:
    if not p:
        return "1"
    parts = []
    k = 0
    while k < len(p):
        w = p[k]
        m = 1
        while k + m < len(p) and p[k + m] == w:
            m += 1
        s = format_word(w, n)
        parts.append(f"({s})^{m}" if m > 1 else s)
        k += m
    return "*".join(parts)


def format_element(e: Element) -> str:
    if not e.terms:
        return "0"
    return " + ".join(format_product(p, e.n) for p in e.sorted_terms())
