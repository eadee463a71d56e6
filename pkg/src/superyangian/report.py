"""Report emission: canonical JSON, a CSV table, and a matplotlib
summary figure rendered next to the delimited output.
"""

from __future__ import annotations

import csv
import json
from collections import Counter
from pathlib import Path


def _sorted_dicts(reports):
    dicts = [r.to_dict() if hasattr(r, "to_dict") else dict(r)
             for r in reports]
    dicts.sort(key=lambda d: (json.dumps(d["context"], sort_keys=True),
                              d["id"]))
    return dicts


def write_json(reports, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        json.dump(_sorted_dicts(reports), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path


def write_csv(reports, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "m", "n", "p", "N", "status", "millis",
                         "witness"])
        for d in _sorted_dicts(reports):
            c = d["context"]
            writer.writerow([d["id"], c["m"], c["n"], c["p"], c["N"],
                             d["status"], d["millis"],
                             json.dumps(d.get("witness"))
                             if d.get("witness") is not None else ""])
    return path


def _suite_of(check_id: str) -> str:
    return check_id.split(":", 1)[0].split("-", 1)[0]


def write_figure(reports, path) -> Path:
    """Bar chart of pass/fail/skip counts per suite, plus total timing."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    dicts = _sorted_dicts(reports)
    by_suite: dict = {}
    for d in dicts:
        by_suite.setdefault(_suite_of(d["id"]), Counter())[d["status"]] += 1
    suites = sorted(by_suite)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4.2))
    xs = range(len(suites))
    for status, color in (("pass", "#2a9d42"), ("skip", "#c9a227"),
                          ("fail", "#c03030")):
        vals = [by_suite[s].get(status, 0) for s in suites]
        bottom = [sum(by_suite[s].get(t, 0) for t in ("pass", "skip", "fail")
                      if _order(t) < _order(status)) for s in suites]
        ax1.bar(xs, vals, bottom=bottom, label=status, color=color)
    ax1.set_xticks(list(xs))
    ax1.set_xticklabels(suites, rotation=45, ha="right", fontsize=8)
    ax1.set_ylabel("checks")
    ax1.set_title("verification results by suite")
    ax1.legend()

    timings = Counter()
    for d in dicts:
        timings[_suite_of(d["id"])] += d["millis"]
    ax2.barh(suites, [timings[s] for s in suites], color="#4a6fa5")
    ax2.set_xlabel("total millis")
    ax2.set_title("runtime by suite")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _order(status: str) -> int:
    return {"pass": 0, "skip": 1, "fail": 2}[status]


def emit(reports, output) -> dict:
    """Write the JSON report plus CSV and PNG siblings; returns the
    paths and the aggregate status counts."""
    output = Path(output)
    paths = {
        "json": str(write_json(reports, output)),
        "csv": str(write_csv(reports, output.with_suffix(".csv"))),
        "figure": str(write_figure(reports, output.with_suffix(".png"))),
    }
    counts = Counter(d["status"] for d in _sorted_dicts(reports))
    return {"paths": paths, "counts": dict(counts)}
