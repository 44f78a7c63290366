"""Exhaustive generation and counting of convex permutominoes."""
from .counting import convex_count
from .eco import EcoOp, apply_op, applicable_ops, children
from .generator import GenNode, generate_all, is_active, psi, psi_inv, root, tree_edges
from .geometry import (
    Permutomino,
    boundary_word,
    class_of,
    corner_points,
    from_boundary_word,
    from_columns,
    permutations,
    render_ascii,
)

__all__ = [
    "EcoOp", "GenNode", "Permutomino", "applicable_ops", "apply_op", "boundary_word",
    "children", "class_of", "convex_count", "corner_points", "from_boundary_word",
    "from_columns", "generate_all", "is_active", "permutations", "psi", "psi_inv",
    "render_ascii", "root", "tree_edges",
]
