"""Exact local polar invariants of one-parameter polynomial germs.

The heavy lifting happens in the C++ extension ``polarcalc._core``; this
package adds a small dict-in, dict-out convenience layer.
"""

import json as _json

from ._core import JobOutcome, JobOverrides, run_job_text

__version__ = "0.1.0"
__all__ = ["JobOutcome", "JobOverrides", "run_job", "run_job_text"]


def run_job(job, **overrides):
    """Run a job given as a dict and return the report as a dict.

    Keyword arguments (``order``, ``max_pairs``, ``max_degree``,
    ``radical_bound``) override the job document, mirroring the CLI flags.
    The engine's exit code is attached under ``"exit_code"``; a non-zero
    value means the report carries an error or mismatch status rather than
    results.
    """
    opts = JobOverrides()
    for key, value in overrides.items():
        if not hasattr(opts, key):
            raise TypeError(f"unknown override {key!r}")
        setattr(opts, key, value)
    outcome = run_job_text(_json.dumps(job), opts)
    report = _json.loads(outcome.report_json)
    report["exit_code"] = outcome.exit_code
    return report
