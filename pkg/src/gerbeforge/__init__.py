"""Desk-scale computational toolkit for graded-algebra extensions, gerbes on
action groupoids, Clifford theory, and pointed fusion category duality."""

__version__ = "0.1.0"
