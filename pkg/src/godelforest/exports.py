"""Serialization: classes, subforests (JSON and DOT), and analysis reports.

JSON layouts are documented in the README.  DOT output emits one digraph per
tree so figures of individual trees can be rendered directly.
"""

from __future__ import annotations

from .axioms import AnalysisReport
from .forest import AssignmentClass, Subforest, class_key
from .formulas import format_formula


def class_to_json(c: AssignmentClass) -> dict:
    return {
        "zero": list(c.zero),
        "mid": [list(b) for b in c.mid],
        "one": list(c.one),
    }


def class_from_json(obj: object, n: int) -> AssignmentClass:
    """Read a class from {"zero": [...], "mid": [[...], ...], "one": [...]}."""
    if not isinstance(obj, dict):
        raise ValueError("class JSON must be an object")
    missing = [key for key in ("zero", "mid", "one") if key not in obj]
    if missing:
        raise ValueError(f"class JSON is missing keys: {', '.join(missing)}")
    zero, mid, one = obj["zero"], obj["mid"], obj["one"]
    if not (isinstance(zero, list) and isinstance(mid, list) and isinstance(one, list)):
        raise ValueError("'zero', 'mid', 'one' must be lists")
    if not all(isinstance(b, list) for b in mid):
        raise ValueError("'mid' must be a list of lists")
    return AssignmentClass(n, tuple(zero), tuple(tuple(b) for b in mid), tuple(one))


def subforest_to_json(sub: Subforest) -> dict:
    """Nodes in canonical order with parent links by node id."""
    members = sub.sorted_members
    ids = {c: i for i, c in enumerate(members)}
    nodes = []
    for c in members:
        parent = c.parent()
        entry = class_to_json(c)
        entry["id"] = ids[c]
        entry["label"] = c.chain_string()
        entry["parent"] = ids[parent] if parent is not None else None
        nodes.append(entry)
    return {"n": sub.forest.n, "count": len(members), "nodes": nodes}


def subforest_to_dot(sub: Subforest) -> str:
    """One digraph per tree; nodes are labeled with their chain strings."""
    members = sub.sorted_members
    ids = {c: i for i, c in enumerate(members)}
    by_root: dict[AssignmentClass, list[AssignmentClass]] = {}
    for c in members:
        by_root.setdefault(c.root(), []).append(c)
    lines: list[str] = []
    for t, root in enumerate(sorted(by_root, key=class_key)):
        lines.append(f"digraph tree_{t} {{")
        lines.append("  node [shape=box];")
        tree_nodes = by_root[root]
        for c in tree_nodes:
            lines.append(f'  n{ids[c]} [label="{c.chain_string()}"];')
        for c in tree_nodes:
            parent = c.parent()
            if parent is not None and parent in ids:
                lines.append(f"  n{ids[parent]} -> n{ids[c]};")
        lines.append("}")
    return "\n".join(lines) + "\n"


def report_to_json(report: AnalysisReport) -> dict:
    def triple(checks: tuple[bool, bool, bool]) -> dict:
        return {"direct": checks[0], "forest": checks[1], "proof": checks[2]}

    leaves = [
        dict(class_to_json(c), label=c.chain_string())
        for c in report.realized_leaves
    ]
    return {
        "n": report.n,
        "exact_ruspini": report.is_exact_ruspini,
        "weak_ruspini": report.is_weak_ruspini,
        "two_overlapping": report.is_2_overlapping,
        "axiom": format_formula(report.axiom),
        "realized_leaves": leaves,
        "checks": {
            "weak_ruspini": triple(report.ruspini_checks),
            "two_overlapping": triple(report.overlap_checks),
            "combined": triple(report.combined_checks),
        },
    }


def format_report(report: AnalysisReport) -> str:
    def yesno(flag: bool) -> str:
        return "yes" if flag else "no"

    def triple(name: str, checks: tuple[bool, bool, bool]) -> str:
        return (
            f"  {name}: direct={yesno(checks[0])}"
            f" forest={yesno(checks[1])} proof={yesno(checks[2])}"
        )

    lines = [
        f"n: {report.n}",
        f"exact Ruspini: {yesno(report.is_exact_ruspini)}",
        f"weak Ruspini: {yesno(report.is_weak_ruspini)}",
        f"2-overlapping: {yesno(report.is_2_overlapping)}",
        f"axiom: {format_formula(report.axiom)}",
        f"realized leaves ({len(report.realized_leaves)}):",
    ]
    lines.extend(f"  {c.chain_string()}" for c in report.realized_leaves)
    lines.append("checks (each triple must agree):")
    lines.append(triple("weak Ruspini", report.ruspini_checks))
    lines.append(triple("2-overlapping", report.overlap_checks))
    lines.append(triple("combined", report.combined_checks))
    return "\n".join(lines) + "\n"
