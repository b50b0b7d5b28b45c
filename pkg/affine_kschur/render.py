"""
Output formats for expansion reports: text, json, latex
"""

import json
from typing import List

from .cores import core_of, render_colored_latex
from .kschur import ExpansionReport, ExpansionTerm


def _header(report: ExpansionReport) -> str:
    if report.j is not None:
        return f"s^{report.datum.family}_{{z_Lambda{report.j}}}"
    gamma = ",".join(str(c) for c in report.gamma)
    return f"s^{report.datum.family}_{{z_({gamma})}}"


def _coeff_prefix(report: ExpansionReport, term: ExpansionTerm) -> str:
    c = report.value.coefficient(term.element)
    return "" if c == 1 else f"{c}*"


def render_text(report: ExpansionReport) -> str:
    rank = report.datum.rank
    body = " + ".join(
        f"{_coeff_prefix(report, t)}u({t.word.format(rank)})" for t in report.terms
    )
    return f"{_header(report)} = {body}\n"


def render_json(report: ExpansionReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def _latex_term(report: ExpansionReport, term: ExpansionTerm) -> str:
    rank = report.datum.rank
    if term.factored is None:
        return f"{{\\bf u}}({{{term.word.format(rank)}}})"
    head, marked = term.factored
    tail = f"\\bf {marked.format(rank)}" if len(marked) else ""
    return f"{{\\bf u}}({{{head.format(rank)}{tail}}})"


def render_latex(report: ExpansionReport) -> str:
    """
    Equation in the nilCoxeter basis; type C reports also get one colored
    shifted diagram per term (cells outside the term's core in red).
    """
    lines: List[str] = []
    family, j = report.datum.family, report.j
    if any(t.core is not None for t in report.terms):
        R = report.R or core_of(report.z)
        diagrams = [
            render_colored_latex(t.core, R, report.tau, report.datum.rank)
            for t in report.terms
        ]
        lines.append("\\[" + " \\hspace{.1in}\n".join(diagrams) + "\\]")
    subscript = f"z_{{\\Lambda_{j}^\\vee}}" if j is not None else "z_\\gamma"
    equation = " + ".join(_latex_term(report, t) for t in report.terms)
    lines.append(f"$$\\mathfrak{{s}}^{{{family}}}_{{{subscript}}} = {equation}$$")
    return "\n".join(lines) + "\n"


RENDERERS = {
    "text": render_text,
    "json": render_json,
    "latex": render_latex,
}
