from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from ..config import OracleConfig
from ..errors import BudgetExceeded, LemmaViolation
from ..regex.serializer import serialize
from .alignment import Alignment, optimal_alignment, scs_length
from .decomposition import DecompositionWitness, decomposition_cost
from .language import LanguageCost, language_expression_cost

logger = logging.getLogger(__name__)


@dataclass
class CostReport:
    """
    The three exact costs of a string set with their witnesses. A cost is
    None when its search ran out of budget.
    """

    strings: tuple[str, ...]
    c_align: int | None
    c_decomp: int | None
    c_lang_expr: int | None
    alignment: Alignment | None = None
    decomposition: DecompositionWitness | None = None
    expression: LanguageCost | None = None
    search_budget_exhausted: bool = False

    def exact_costs(self) -> dict[str, int]:
        costs = {"c_align": self.c_align, "c_decomp": self.c_decomp, "c_lang_expr": self.c_lang_expr}
        return {name: value for name, value in costs.items() if value is not None}

    def as_dict(self) -> dict:
        """
        Renders the report as plain data for JSON output.
        """
        data = {
            "strings": list(self.strings),
            "c_align": self.c_align,
            "c_decomp": self.c_decomp,
            "c_lang_expr": self.c_lang_expr if self.c_lang_expr is not None else "unknown",
            "search_budget_exhausted": self.search_budget_exhausted,
        }
        if self.alignment is not None:
            data["alignment"] = {
                "supersequence": self.alignment.supersequence(),
                "tuples": [list(column) for column in self.alignment.tuples],
            }
        if self.decomposition is not None:
            data["decomposition"] = {
                "pieces": list(self.decomposition.pieces),
                "maps": [list(indices) for indices in self.decomposition.maps],
            }
        if self.expression is not None and self.expression.witness is not None:
            data["expression"] = serialize(self.expression.witness)
        return data


def verify_cost_equalities(strings: Iterable[str], config: OracleConfig | None = None) -> CostReport:
    """
    Computes the alignment, decomposition and language expression costs
    independently and checks that every exactly computed pair agrees. For
    two strings the alignment cost must also equal the shortest common
    supersequence length.

    :param strings: a small string set
    :param config: the search budgets
    :return: the report with all witnesses
    :raises LemmaViolation: if two exact costs differ
    """
    config = config or OracleConfig()
    strings = tuple(dict.fromkeys(strings))
    exhausted = False
    alignment = decomposition = None
    c_align = c_decomp = None
    try:
        alignment, c_align = optimal_alignment(strings, config.alignment_budget)
    except BudgetExceeded as e:
        logger.warning(f"Alignment cost unknown: {e}")
        exhausted = True
    try:
        decomposition, c_decomp = decomposition_cost(strings, config.decomposition_budget)
    except BudgetExceeded as e:
        logger.warning(f"Decomposition cost unknown: {e}")
        exhausted = True
    expression = language_expression_cost(strings, config.expression_budget)
    exhausted = exhausted or not expression.exact
    report = CostReport(
        strings, c_align, c_decomp, expression.cost, alignment, decomposition, expression, exhausted
    )
    exact = report.exact_costs()
    if len(set(exact.values())) > 1:
        raise LemmaViolation(f"Costs of {list(strings)} disagree: {exact}")
    if c_align is not None and len(strings) == 2 and c_align != scs_length(*strings):
        raise LemmaViolation(f"Alignment cost {c_align} of {list(strings)} differs from the supersequence length")
    return report
