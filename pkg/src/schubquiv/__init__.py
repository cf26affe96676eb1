"""Quiver representations on a grid and the Schubert varieties they model."""

from .errors import SchubQuivError
from .kernel import BACKEND
from .perm import Permutation, from_one_line, format_one_line
from .words import ReducedWord, parse_word

__all__ = ["SchubQuivError", "BACKEND", "Permutation", "from_one_line", "format_one_line",
           "ReducedWord", "parse_word"]
__version__ = "0.1.0"
