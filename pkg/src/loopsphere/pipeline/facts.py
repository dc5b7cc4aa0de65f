"""External homotopy input, kept as data."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

KINDS = ("hurewicz-trivial-stem", "hopf-invariant-one-dims")
SUPPORTED_VERSIONS = (1,)


@dataclass(frozen=True)
class ExternalFact:
    id: str
    kind: str
    params: dict = field(hash=False)
    source: str = ""

    def to_dict(self) -> dict:
        return {"id": self.id, "kind": self.kind, "params": self.params, "source": self.source}


class FactsTable:
    def __init__(self, facts, version: int = 1):
        self.version = version
        self.facts = list(facts)
        ids = [f.id for f in self.facts]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate fact ids")

    def __iter__(self):
        return iter(self.facts)

    def get(self, fact_id: str) -> ExternalFact:
        for f in self.facts:
            if f.id == fact_id:
                return f
        raise KeyError(f"no external fact {fact_id!r}")

    def hopf_fact(self) -> ExternalFact:
        for f in self.facts:
            if f.kind == "hopf-invariant-one-dims":
                return f
        raise KeyError("facts file has no hopf-invariant-one-dims entry")

    def hopf_dims(self) -> frozenset:
        return frozenset(self.hopf_fact().params["dims"])

    def trivial_stem(self, stem: int) -> ExternalFact | None:
        for f in self.facts:
            if f.kind == "hurewicz-trivial-stem" and f.params["stem"] == stem:
                return f
        return None


def _parse(doc: dict) -> FactsTable:
    version = doc.get("version")
    if version not in SUPPORTED_VERSIONS:
        raise ValueError(f"unsupported facts version {version!r}")
    facts = []
    for raw in doc["facts"]:
        if raw["kind"] not in KINDS:
            raise ValueError(f"unknown fact kind {raw['kind']!r}")
        facts.append(ExternalFact(raw["id"], raw["kind"], dict(raw["params"]), raw.get("source", "")))
    return FactsTable(facts, version)


def load_facts(path: str | Path | None = None) -> FactsTable:
    """Read a facts file; the bundled defaults when ``path`` is None."""
    if path is None:
        text = resources.files("loopsphere.data").joinpath("facts.json").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return _parse(json.loads(text))
