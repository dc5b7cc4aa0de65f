"""Candidate enumeration, elimination passes, external facts and table output."""
from .candidates import Candidate, enumerate_candidates
from .elimination import Verdict, run_elimination
from .facts import ExternalFact, load_facts

__all__ = ["Candidate", "ExternalFact", "Verdict", "enumerate_candidates", "load_facts", "run_elimination"]
