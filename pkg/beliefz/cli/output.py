from typing import List, Sequence

from beliefz.enums import OutputFormat
from beliefz.hyperreal.number import Hyperreal
from beliefz.revision.iterated import IteratedReport
from beliefz.revision.scripts import ScriptStep
from beliefz.scenario.compare import TableDiff
from beliefz.scenario.run import OddsTable


def render_value(value: Hyperreal, fmt: OutputFormat = OutputFormat.TSV) -> str:
    """
    TSV output uses the hyperreal grammar, pretty output writes the small parameter as ``g``.
    """
    if fmt is OutputFormat.PRETTY:
        return value.format(symbol="g")
    return str(value)


def odds_table_tsv(table: OddsTable) -> List[str]:
    lines = ["stage\thypothesis\todds\tevidence"]
    for result in table.stages:
        evidence = render_value(result.evidence)
        for label, odds in zip(table.hypotheses, result.odds):
            lines.append(f"{result.stage}\t{label}\t{render_value(odds)}\t{evidence}")
    return lines


def odds_table_pretty(table: OddsTable) -> List[str]:
    rows = [["Time t"] + [str(result.stage) for result in table.stages]]
    for label in table.hypotheses:
        rows.append(
            [f"Odds for {label}"]
            + [render_value(result.odds_for(label), OutputFormat.PRETTY) for result in table.stages]
        )
    rows.append(
        ["Prob. Evidence"]
        + [render_value(result.evidence, OutputFormat.PRETTY) for result in table.stages]
    )
    rows.append(["Most probable"] + [result.argmax for result in table.stages])
    widths = [max(len(row[column]) for row in rows) for column in range(len(rows[0]))]
    mode = "symbolic" if table.symbolic else f"gamma={table.gamma}"
    lines = [f"{table.family.value} ({mode})"]
    for row in rows:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    return lines


def odds_table_lines(table: OddsTable, fmt: OutputFormat) -> List[str]:
    if fmt is OutputFormat.PRETTY:
        return odds_table_pretty(table)
    return odds_table_tsv(table)


def table_diff_lines(diff: TableDiff) -> List[str]:
    lines = [f"{diff.family.value}\t{'match' if diff.ok else 'mismatch'}"]
    lines.extend(f"diff\t{mismatch}" for mismatch in diff.mismatches)
    lines.extend(f"note\t{note}" for note in diff.notes)
    return lines


def script_lines(steps: Sequence[ScriptStep]) -> List[str]:
    lines = []
    for step in steps:
        evidence = "-" if step.evidence is None else step.evidence.describe()
        lines.append(f"step {step.index}\tupgrade {evidence}")
        for rank, block in enumerate(step.order.blocks()):
            lines.append(f"  rank {rank}\t{block.describe()}")
        lines.append(f"  belief\t{step.belief.describe()}")
    return lines


def iterated_lines(report: IteratedReport) -> List[str]:
    lines = [report.report.to_line()]
    for step in report.steps:
        first, second = step.witness
        lines.append(
            f"pair {step.index}\t{first.describe()} -> {second.describe()}\t"
            f"{'fired' if step.fired else 'not fired'}\t{step.status.value}"
        )
    for index, belief in enumerate(report.beliefs):
        lines.append(f"belief {index}\t{'undefined' if belief is None else belief.describe()}")
    return lines
