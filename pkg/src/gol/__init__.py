"""Computational toolkit for left orders on locally free and dyadic abelian groups.

Words and atoms live in ``gol.words``; the rewriting engine in ``gol.rewriting``;
named groups in ``gol.groups``; orders, signings and HNN towers in their own modules.
"""
from .errors import (BoundaryPinchError, BudgetExceeded, DomainError, GolError, ParseError,
                     WindowError)
from .groups import GroupElement, MarkedGroup, make_group
from .words import Atom, Letter, Window, Word, format_word, free_reduce, parse_word

__all__ = [
    "Atom", "BoundaryPinchError", "BudgetExceeded", "DomainError", "GolError", "GroupElement",
    "Letter", "MarkedGroup", "ParseError", "Window", "Word", "WindowError", "format_word",
    "free_reduce", "make_group", "parse_word",
]
