from __future__ import annotations

from dataclasses import dataclass

from .nodes import RegexAst, TopLevelOperator, Union, walk


@dataclass(frozen=True)
class AstStats:
    """
    Structural measurements of one syntax tree.

    :param depth: nesting levels, an atomic node counting as 1
    :param node_count: every node of the tree
    :param union_count: the Union nodes of the tree
    :param top_level_operator: the category of the root
    """

    depth: int
    node_count: int
    union_count: int
    top_level_operator: TopLevelOperator


def ast_depth(ast: RegexAst) -> int:
    children = ast.children_of()
    if not children:
        return 1
    return 1 + max(ast_depth(child) for child in children)


def ast_stats(ast: RegexAst) -> AstStats:
    """
    Measures a syntax tree.

    :param ast: the tree
    :return: its depth, size, union count and root category
    """
    nodes = list(walk(ast))
    return AstStats(
        depth=ast_depth(ast),
        node_count=len(nodes),
        union_count=sum(isinstance(node, Union) for node in nodes),
        top_level_operator=TopLevelOperator.of(ast),
    )
