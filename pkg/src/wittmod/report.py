"""Deterministic report serialization and the exit-code policy.

Reports are plain dictionaries of JSON-safe values.  Serialization is
canonical (sorted keys, fixed indentation, no timestamps), so two runs of
the same check produce byte-identical output.

Exit codes: 0 pass, 1 fail, 2 input or window error, 3 precondition
refused.
"""

from __future__ import annotations

import json
from typing import Iterable, Optional

EXIT_BY_VERDICT = {"pass": 0, "fail": 1, "error": 2, "refused": 3}


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def exit_code_for(verdict: str) -> int:
    try:
        return EXIT_BY_VERDICT[verdict]
    except KeyError:
        raise ValueError(f"unknown verdict {verdict!r}")


def aggregate_verdict(verdicts: Iterable[str]) -> str:
    """Combine subcheck verdicts: fail dominates, then refused, then error."""
    seen = set()
    for v in verdicts:
        if v not in EXIT_BY_VERDICT:
            raise ValueError(f"unknown verdict {v!r}")
        seen.add(v)
    for v in ("fail", "refused", "error"):
        if v in seen:
            return v
    return "pass"


def emit(doc: dict, out: Optional[str] = None) -> str:
    """Serialize a report; write to ``out`` when given, else to stdout."""
    text = canonical_json(doc)
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        import sys

        sys.stdout.write(text)
    return text
