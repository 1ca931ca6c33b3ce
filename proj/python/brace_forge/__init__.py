"""Exact checker for Hopf algebras, Hopf braces, opposite brace triples and matched pairs."""

import json

from ._brace_forge import *  # noqa: F401,F403
from ._brace_forge import AxiomReport, BraceForgeError  # noqa: F401


def report_dict(report):
    """The report as plain Python data, in report order."""
    return json.loads(report.to_json())


__all__ = [name for name in dir() if not name.startswith("_")]
