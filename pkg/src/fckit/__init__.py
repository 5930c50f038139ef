"""Fully commutative elements of Coxeter groups: automata, generating functions, growth."""

__version__ = "0.1.0"
