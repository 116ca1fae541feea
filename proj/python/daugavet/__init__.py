"""Daugavet equation toolkit for stochastic kernels on C(S).

Structured inputs and outputs are JSON strings using the same schemas as the
command line tool; the wrappers below go through plain dicts instead.
"""

import json as _json

from ._core import (
    InputError,
    __version__,
    brute_norm,
    defect,
    discretize_json,
    escalate_mock,
    eval_expression,
    exhaustive_scan_json,
    print_expression,
    refinement_csv,
    report_json,
    search_json,
    splitmix_stream,
    sup_norm,
    sweep,
    version,
    zero_atom_points,
)


def _as_text(kernel):
    return kernel if isinstance(kernel, str) else _json.dumps(kernel)


def report(kernel, level=0):
    """Daugavet report as a dict; `kernel` is a kernel-file dict or JSON string."""
    return _json.loads(report_json(_as_text(kernel), level))


def discretize(spec, level, exact=False):
    """Kernel-file dict holding the level-n matrix of a spec dict."""
    return _json.loads(discretize_json(_as_text(spec), level, exact))


def search(kernel_class, n, trials, seed=0, predicate="prop1-identity"):
    """Counterexample search results as a dict."""
    return _json.loads(search_json(kernel_class, n, trials, seed, predicate))


def escalate(mock, beta, bound, max_level=12, mode="atom"):
    """Escalation outcome for a named mock oracle, as a dict."""
    return _json.loads(escalate_mock(mock, beta, bound, max_level, mode))


def exhaustive_scan(entries, n):
    """Scan summary dict over all matrices with entries from `entries`."""
    return _json.loads(exhaustive_scan_json([str(e) for e in entries], n))


__all__ = [
    "InputError",
    "__version__",
    "brute_norm",
    "defect",
    "discretize",
    "discretize_json",
    "escalate",
    "escalate_mock",
    "eval_expression",
    "exhaustive_scan",
    "exhaustive_scan_json",
    "print_expression",
    "refinement_csv",
    "report",
    "report_json",
    "search",
    "search_json",
    "splitmix_stream",
    "sup_norm",
    "sweep",
    "version",
    "zero_atom_points",
]
