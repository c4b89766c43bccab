from __future__ import annotations

from ..config import ClassCost
from ..regex.nodes import CharClass, Literal, RegexAst


def expression_cost(ast: RegexAst, class_cost: ClassCost = ClassCost.UNIT) -> int:
    """
    Counts the alphabet symbols written in a regex. Operators, groups and
    quantifiers are free; a literal costs its length and epsilon nothing.

    :param ast: the regex
    :param class_cost: charge a class one symbol, or one per member
    :return: the expression cost
    """
    if isinstance(ast, Literal):
        return len(ast.text)
    if isinstance(ast, CharClass):
        return 1 if class_cost == ClassCost.UNIT else len(ast.chars)
    return sum(expression_cost(child, class_cost) for child in ast.children_of())
