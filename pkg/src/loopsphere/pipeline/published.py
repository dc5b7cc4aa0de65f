"""Printed reference values, transcribed literally (typos included).

Everything here is data to compare against; nothing in the engine reads it
to decide a verdict.  A linear form ``(c, cj, cn)`` stands for c + cj*j + cn*n.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable


def lin(form, j: int = 0, n: int = 0) -> int:
    c, cj, cn = form
    return c + cj * j + cn * n


def show_lin(form, var_j: bool = True) -> str:
    c, cj, cn = form
    parts = []
    if c:
        parts.append(str(c))
    for coef, name in ((cj, "j"), (cn, "n")):
        if not coef:
            continue
        s = name if coef == 1 else f"{coef}{name}"
        if parts and coef > 0:
            parts.append("+" + s)
        else:
            parts.append(s)
    out = "".join(parts) or "0"
    return out.replace("+-", "-")


@dataclass(frozen=True)
class FamilyRow:
    label: str
    members: tuple  # concrete J, with the j value each uses
    js: tuple
    upper: tuple  # one linear form per upper index
    dim: tuple
    witness: int | None  # Sq^{witness}_* on Q_J x_n
    parity: str | None  # parity of n under which it is said to fire


def _fam(label, pattern, js, upper, dim, witness, parity):
    members = tuple(tuple(j if x == "j" else x for x in pattern) for j in js)
    return FamilyRow(label, members, tuple(js), tuple(upper), dim, witness, parity)


FAMILIES = (
    FamilyRow("()", ((),), (0,), (), (0, 0, 1), None, None),
    _fam("(j)", ("j",), range(1, 8), [(0, 1, 1)], (0, 1, 2), 1, "j+n even"),
    _fam("(1,j)", (1, "j"), (2, 4, 6), [(1, 1, 2), (0, 1, 1)], (1, 2, 4), 2, "even"),
    _fam("(3,j)", (3, "j"), (4, 6), [(3, 1, 2), (0, 1, 1)], (3, 2, 4), 2, "even"),
    _fam("(5,6)", (5, 6), (0,), [(11, 0, 2), (6, 0, 1)], (17, 0, 4), 2, "even"),
    _fam("(1,2,j)", (1, 2, "j"), (3, 5, 7), [(3, 2, 4), (2, 1, 2), (0, 1, 1)], (5, 4, 8), 4, "odd"),
    _fam("(1,4,j)", (1, 4, "j"), (5, 7), [(5, 2, 4), (4, 1, 2), (0, 1, 1)], (9, 4, 8), 4, "odd"),
    _fam("(1,6,7)", (1, 6, 7), (0,), [(21, 0, 4), (13, 0, 2), (7, 0, 1)], (41, 0, 8), 4, "odd"),
    _fam("(3,4,j)", (3, 4, "j"), (5, 7), [(7, 2, 4), (4, 1, 2), (0, 1, 1)], (11, 4, 8), 4, "odd"),
    _fam("(3,6,7)", (3, 6, 7), (0,), [(23, 0, 4), (13, 0, 2), (7, 0, 1)], (43, 0, 8), 4, "odd"),
    _fam("(5,6,7)", (5, 6, 7), (0,), [(25, 0, 4), (13, 0, 2), (7, 0, 1)], (45, 0, 8), 4, "odd"),
    _fam("(1,2,3,4)", (1, 2, 3, 4), (0,),
         [(25, 0, 8), (13, 0, 4), (7, 0, 2), (4, 0, 1)], (49, 0, 16), 8, "even"),
    _fam("(1,2,3,6)", (1, 2, 3, 6), (0,),
         [(33, 0, 8), (17, 0, 4), (9, 0, 2), (6, 0, 1)], (65, 0, 16), 8, "even"),
    _fam("(1,2,5,6)", (1, 2, 5, 6), (0,),
         [(37, 0, 8), (19, 0, 4), (11, 0, 2), (6, 0, 1)], (73, 0, 16), 8, "even"),
    _fam("(3,4,5,6)", (3, 4, 5, 6), (0,),
         [(41, 0, 8), (21, 0, 4), (11, 0, 2), (6, 0, 1)], (79, 0, 16), 8, "even"),
    _fam("(1,2,3,4,5)", (1, 2, 3, 4, 5), (0,),
         [(65, 0, 16), (33, 0, 8), (17, 0, 4), (9, 0, 2), (5, 0, 1)], (129, 0, 32), 16, "odd"),
    _fam("(1,2,3,4,7)", (1, 2, 3, 4, 7), (0,),
         [(81, 0, 16), (41, 0, 8), (21, 0, 4), (11, 0, 2), (7, 0, 1)], (161, 0, 32), 16, "odd"),
    _fam("(3,4,5,6,7)", (3, 4, 5, 6, 7), (0,),
         [(97, 0, 16), (49, 0, 8), (25, 0, 4), (13, 0, 2), (7, 0, 1)], (191, 0, 32), 16, "odd"),
    _fam("(1,2,3,4,5,6)", (1, 2, 3, 4, 5, 6), (0,),
         [(161, 0, 32), (81, 0, 16), (41, 0, 8), (21, 0, 4), (11, 0, 2), (6, 0, 1)],
         (301, 0, 64), 32, "even"),
    _fam("(1,2,3,4,5,6,7)", (1, 2, 3, 4, 5, 6, 7), (0,),
         [(385, 0, 64), (193, 0, 32), (97, 0, 16), (49, 0, 8), (25, 0, 4), (13, 0, 2), (7, 0, 1)],
         (769, 0, 128), 64, "odd"),
)

# every concrete sequence covered by the table
FAMILY_SEQUENCES = frozenset(J for row in FAMILIES for J in row.members)


@dataclass(frozen=True)
class DegenerateRow:
    label: str
    members: tuple
    js: tuple
    d: tuple
    pow2_cases: tuple  # ((j, n_of_t), ...); j = 0 for rows without a parameter
    mod4: bool  # the check mark in the d+1 = 2 mod 4 column
    top: tuple  # (c, cn)
    margin: tuple  # linear form in j, n
    margin_text: str = ""


def _deg(label, pattern, js, d, pow2_cases, mod4, top, margin, text=""):
    members = tuple(tuple(j if x == "j" else x for x in pattern) for j in js)
    return DegenerateRow(label, members, tuple(js), d, tuple(pow2_cases), mod4, top, margin, text)


def _t(shift: int, minus: int) -> Callable[[int], int]:
    return lambda t: 2 ** (t - shift) - minus


GAP_ROWS = (
    _deg("(1,j)", (1, "j"), (2, 4, 6), (1, 2, 4), (), True, (22, 4), (-19, 4, 4),
         "if j=6 or (j=4;n>1) or (j=2;n>3)"),
    _deg("(3,j)", (3, "j"), (4, 6), (3, 2, 4), ((6, _t(2, 4)),), False, (22, 4), (-15, 4, 4)),
    _deg("(5,6)", (5, 6), (0,), (17, 0, 4), (), True, (22, 4), (9, 0, 4)),
    _deg("(1,2,j)", (1, 2, "j"), (3, 5, 7), (5, 4, 8), (), True, (50, 8), (-39, 8, 8),
         "if j=5,7 or (j=3;n>2)"),
    _deg("(1,4,j)", (1, 4, "j"), (5, 7), (9, 4, 8), (), True, (50, 8), (-31, 8, 8)),
    _deg("(1,6,7)", (1, 6, 7), (0,), (41, 0, 8), (), True, (50, 8), (32, 0, 8)),
    _deg("(3,4,j)", (3, 4, "j"), (5, 7), (11, 4, 8), ((5, _t(3, 4)), (7, _t(3, 5))), False,
         (50, 8), (-27, 8, 8)),
    _deg("(3,6,7)", (3, 6, 7), (0,), (43, 0, 8), (), False, (50, 8), (37, 0, 8)),
    _deg("(5,6,7)", (5, 6, 7), (0,), (45, 0, 8), (), True, (50, 8), (41, 0, 8)),
    _deg("(1,2,3,4)", (1, 2, 3, 4), (0,), (49, 0, 16), (), True, (106, 16), (-7, 0, 16)),
    _deg("(1,2,3,6)", (1, 2, 3, 6), (0,), (65, 0, 16), (), True, (106, 16), (25, 0, 16)),
    _deg("(1,2,5,6)", (1, 2, 5, 6), (0,), (73, 0, 16), (), True, (106, 16), (41, 0, 16)),
    _deg("(3,4,5,6)", (3, 4, 5, 6), (0,), (79, 0, 16), ((0, _t(4, 5)),), False, (106, 16),
         (53, 0, 16)),
    _deg("(1,2,3,4,5)", (1, 2, 3, 4, 5), (0,), (129, 0, 32), (), True, (218, 32), (41, 0, 32)),
    _deg("(1,2,3,4,7)", (1, 2, 3, 4, 7), (0,), (161, 0, 32), (), True, (218, 32), (105, 0, 32)),
    _deg("(3,4,5,6,7)", (3, 4, 5, 6, 7), (0,), (191, 0, 32), ((0, _t(5, 6)),), False,
         (218, 32), (165, 0, 32)),
    _deg("(1,2,3,4,5,6)", (1, 2, 3, 4, 5, 6), (0,), (301, 0, 64), (), True, (442, 64),
         (161, 0, 64)),
    _deg("(1,2,3,4,5,6,7)", (1, 2, 3, 4, 5, 6, 7), (0,), (769, 0, 128), (), True, (890, 128),
         (549, 0, 128)),
)

# top column by length l(J), at l = 8
TOP_BY_LENGTH = {2: (22, 4), 3: (50, 8), 4: (106, 16), 5: (218, 32), 6: (442, 64), 7: (890, 128)}

# degenerate classes left over after the gap lemma, at l = 8
GAP_RESIDUALS = (((1, 4), 1), ((1, 2), 2), ((1, 2), 1), ((1, 2, 3), 2), ((1, 2, 3), 1))


@dataclass(frozen=True)
class Mod4Row:
    label: str
    members: tuple
    js: tuple
    upper: tuple
    cases: str


def _m4(label, pattern, js, upper, cases):
    members = tuple(tuple(j if x == "j" else x for x in pattern) for j in js)
    return Mod4Row(label, members, tuple(js), tuple(upper), cases)


MOD4_ZERO_ROWS = (
    _m4("(3,j)", (3, "j"), (4, 6), [(3, 2, 2), (0, 1, 1)], "(j=6;n!=2^{t-2}-4), (j=4;all n)"),
    _m4("(3,4,j)", (3, 4, "j"), (5, 7), [(7, 2, 4), (4, 1, 2), (0, 1, 1)],
        "(j=5;n!=2^{t-3}-4), (j=7;n!=2^{t-3}-5)"),
    _m4("(3,6,7)", (3, 6, 7), (0,), [(23, 0, 4), (13, 0, 2), (7, 0, 1)], "all n"),
    _m4("(3,4,5,6)", (3, 4, 5, 6), (0,), [(41, 0, 8), (21, 0, 4), (11, 0, 2), (6, 0, 1)],
        "n!=2^{t-4}-5"),
    _m4("(3,4,5,6,7)", (3, 4, 5, 6, 7), (0,),
        [(97, 0, 16), (49, 0, 8), (25, 0, 4), (13, 0, 2), (7, 0, 1)], "n!=2^{t-5}-6"),
)


@dataclass(frozen=True)
class NishidaClaim:
    """A displayed dual-Steenrod computation: Sq^r_* Q^I x_n contains ``term``."""

    ident: str
    J: tuple
    r: int
    term: Callable  # n -> upper word expected in the image
    n_filter: Callable = field(default=lambda n: True)
    exact: bool = False  # displayed as an equality with no other terms


def _word(*forms):
    return lambda n: tuple(c + cn * n for c, cn in forms)


NISHIDA_CLAIMS = (
    # single-operation cases
    NishidaClaim("j3-pow2", (3,), 2, lambda n: (n + 1,), lambda n: n % 4 == 2, True),
    # gap residuals
    NishidaClaim("res-Q7Q5x1", (1, 4), 4, lambda n: (5, 3), lambda n: n == 1),
    NishidaClaim("res-Q7Q4x2", (1, 2), 2, lambda n: (6, 3), lambda n: n == 2),
    NishidaClaim("res-Q13Q7Q4x1", (1, 2, 3), 4, lambda n: (11, 6, 3), lambda n: n == 1),
    # d+1 = 0 mod 4
    NishidaClaim("344-j5", (3, 4, 5), 2, _word((15, 4), (9, 2), (5, 1)), exact=True),
    NishidaClaim("344-j7", (3, 4, 7), 2, _word((19, 4), (11, 2), (7, 1)), exact=True),
    NishidaClaim("3456", (3, 4, 5, 6), 2, _word((39, 8), (21, 4), (11, 2), (6, 1)), exact=True),
    NishidaClaim("34567", (3, 4, 5, 6, 7), 2,
                 _word((95, 16), (49, 8), (25, 4), (13, 2), (7, 1)), exact=True),
    NishidaClaim("367-odd", (3, 6, 7), 4, _word((21, 4), (12, 2), (6, 1)), lambda n: n % 2 == 1),
    NishidaClaim("367-even", (3, 6, 7), 4, _word((21, 4), (11, 2), (7, 1)), lambda n: n % 2 == 0),
    NishidaClaim("34-odd", (3, 4), 2, _word((5, 2), (4, 1)), lambda n: n % 2 == 1, True),
)

# Kervaire-shaped rows: n as a function of t, printed first index of Q^I and of
# the Sq^2 image.  (upper_first, image_first) as functions of t.
KERVAIRE_ROWS = (
    ("(3,6)", (3, 6), _t(2, 4), None, None),
    ("(3,4,5)", (3, 4, 5), _t(3, 4), (lambda t: 2 ** (t - 2) + 1), (lambda t: 2 ** (t - 2) - 1)),
    ("(3,4,7)", (3, 4, 7), _t(3, 5), None, None),
    ("(3,4,5,6)", (3, 4, 5, 6), _t(4, 5), (lambda t: 2 ** (t - 1) + 1), (lambda t: 2 ** (t - 1) - 1)),
    ("(3,4,5,6,7)", (3, 4, 5, 6, 7), _t(5, 6), (lambda t: 2 ** (t - 1) + 1),
     (lambda t: 2 ** (t - 1) - 1)),
)

# single-operation case: the Sq^2 computation for n = 2^t - 2
def kervaire_j3(t: int) -> tuple:
    """(n, source word, printed image word) for Q^{2^t+1} x_{2^t-2}."""
    return 2 ** t - 2, (2 ** t + 1,), (2 ** t - 1,)
