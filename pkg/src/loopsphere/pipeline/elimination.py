"""Multi-pass elimination of candidate square classes (Q_J x_n)^2.

Passes, in order, stopping at the first verdict:

P0  empty J: the bottom cell survives; x_n^2 survives iff Sq^{n+1} can be a
    Hopf invariant one operation.
P1  parity: Q_J x_n must be odd dimensional.
P2  Steenrod: Q_J x_n must be A-annihilated (a witness Sq^{2^k}_* on Q_J x_n
    gives Sq^{2^{k+1}}_* on the square).
P3  gap (l(J) >= 2): margin > 2, d+1 = 2 mod 4 and d+1 not a power of two.
P4  cone (l(J) = 1): two-cell detection over the stunted projective target.
P5  external: the stem 2d - n is listed as Hurewicz-trivial.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..dl_core import Element, format_element
from ..loopspace import gap_report
from ..nishida import is_A_annihilated, sq_dual
from ..sqcone import SPHERE, ConeProblem, ConeVerdict, StuntedComplex, cone_detection_possible, replay_cone
from .candidates import Candidate, enumerate_candidates
from .facts import FactsTable, load_facts

BOTTOM = "SURVIVOR-BOTTOM-CELL"
HOPF = "SURVIVOR-HOPF"
ELIMINATED = "ELIMINATED"
EXTERNAL = "EXTERNAL"
UNRESOLVED = "UNRESOLVED"
STATUSES = (BOTTOM, HOPF, ELIMINATED, EXTERNAL, UNRESOLVED)


@dataclass
class Verdict:
    status: str
    pass_: str | None = None
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"status": self.status, "pass": self.pass_, "witness": self.witness}


@dataclass
class ReportRow:
    candidate: Candidate
    n: int
    kind: str  # "bottom" (x_n itself) or "square" ((Q_J x_n)^2)
    verdict: Verdict

    @property
    def J(self) -> tuple:
        return self.candidate.J

    @property
    def dim(self) -> int:
        d = self.candidate.dim(self.n)
        return d if self.kind == "bottom" else 2 * d

    def class_name(self) -> str:
        xi = format_element(Element.lower(self.J, self.n))
        return xi if self.kind == "bottom" else f"({xi})^2"

    def to_dict(self) -> dict:
        return {
            "J": list(self.J),
            "l": self.candidate.l,
            "n": self.n,
            "kind": self.kind,
            "extra": self.candidate.extra,
            "class": self.class_name(),
            "dim": self.dim,
            **self.verdict.to_dict(),
        }


def _terms(e: Element) -> list:
    return [[list(w) for w in p] for p in e.sorted_terms()]


def cone_problem(J: tuple, l: int, n: int) -> ConeProblem:
    """Target of the James-Hopf map for a single operation Q_j x_n."""
    (j,) = J
    base = StuntedComplex(n + 1, n + j, n + l - 1)
    return ConeProblem(base, 2 * n + j + 1)


def _p0(n: int, facts: FactsTable) -> Verdict:
    hopf = facts.hopf_dims()
    res = cone_detection_possible(ConeProblem(SPHERE, n + 1, hopf))
    witness = {"cone": res.to_dict(), "fact": facts.hopf_fact().id}
    if res.verdict is ConeVerdict.POSSIBLE:
        return Verdict(HOPF, "P0", witness)
    return Verdict(ELIMINATED, "P0", witness)


def classify(c: Candidate, n: int, facts: FactsTable) -> Verdict:
    """Verdict for the square class (Q_J x_n)^2."""
    J, l = c.J, c.l
    if not J:
        return _p0(n, facts)
    xi = Element.lower(J, n)
    d = xi.dim
    if d % 2 == 0:
        return Verdict(ELIMINATED, "P1", {"dim": d})
    ann = is_A_annihilated(xi)
    if not ann:
        r = ann.witness_degree
        return Verdict(ELIMINATED, "P2", {
            "sq": r,
            "image": format_element(ann.image),
            "image_terms": _terms(ann.image),
            "square_sq": 2 * r,
            "square_image": format_element(ann.image * ann.image),
        })
    if len(J) >= 2:
        gap = gap_report(J, l, n)
        if gap.eliminated_by_gap:
            return Verdict(ELIMINATED, "P3", gap.to_dict())
    else:
        p = cone_problem(J, l, n)
        res = cone_detection_possible(p)
        if res.verdict is ConeVerdict.IMPOSSIBLE:
            w = res.to_dict()
            w.update({"base": [p.base.s, p.base.a, p.base.b], "detect_dim": p.detect_dim})
            return Verdict(ELIMINATED, "P4", w)
    stem = 2 * d - n
    fact = facts.trivial_stem(stem)
    if fact is not None:
        return Verdict(EXTERNAL, "P5", {"fact": fact.id, "stem": stem})
    return Verdict(UNRESOLVED, None, {"stem": stem})


def run_elimination(l: int, n_range, facts: FactsTable | None = None) -> list:
    """One row per (candidate, n), plus the bottom cell x_n for each n."""
    if facts is None:
        facts = load_facts()
    cands = enumerate_candidates(l)
    rows = []
    for n in n_range:
        if n < 1:
            raise ValueError("n must be positive")
        rows.append(ReportRow(cands[0], n, "bottom", Verdict(BOTTOM, "P0", {"class": f"x_{n}"})))
        for c in cands:
            rows.append(ReportRow(c, n, "square", classify(c, n, facts)))
    return rows


def summarize(rows) -> dict:
    counts = {s: 0 for s in STATUSES}
    passes: dict = {}
    for r in rows:
        counts[r.verdict.status] += 1
        if r.verdict.status == ELIMINATED:
            passes[r.verdict.pass_] = passes.get(r.verdict.pass_, 0) + 1
    return {"status": counts, "eliminated_by_pass": dict(sorted(passes.items()))}


def report_json(rows, l: int, facts: FactsTable | None = None) -> str:
    doc = {
        "l": l,
        "facts_version": facts.version if facts else None,
        "rows": [r.to_dict() for r in rows],
        "summary": summarize(rows),
    }
    return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def replay(row: ReportRow) -> bool:
    """Re-derive an ELIMINATED verdict from its witness alone."""
    v = row.verdict
    if v.status != ELIMINATED:
        return True
    J, n, l = row.J, row.n, row.candidate.l
    if v.pass_ == "P0":
        p = ConeProblem(SPHERE, n + 1, frozenset(v.witness["cone"]["trace"]["hopf_dims"]))
        return cone_detection_possible(p).verdict is ConeVerdict.IMPOSSIBLE
    xi = Element.lower(J, n)
    if v.pass_ == "P1":
        return xi.dim % 2 == 0
    if v.pass_ == "P2":
        img = sq_dual(v.witness["sq"], xi)
        sq_img = sq_dual(v.witness["square_sq"], xi * xi)
        return bool(img) and _terms(img) == v.witness["image_terms"] and sq_img == img * img
    if v.pass_ == "P3":
        g = gap_report(J, l, n)
        return g.eliminated_by_gap and g.margin == v.witness["margin"] and g.margin > 2
    if v.pass_ == "P4":
        from ..sqcone import ConeResult

        p = cone_problem(J, l, n)
        res = ConeResult(ConeVerdict(v.witness["verdict"]), v.witness["route"], v.witness["trace"])
        return res.verdict is ConeVerdict.IMPOSSIBLE and replay_cone(p, res)
    return False
