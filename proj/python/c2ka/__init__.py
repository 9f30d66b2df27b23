"""Implicit interaction and exploitability analysis for C2KA system specifications."""

from ._c2ka import (
    Analyzer,
    EdgeMismatch,
    Error,
    SyntaxError,
    SystemModel,
    def_ref,
    load_model,
    load_model_file,
    normalize_term,
)

__all__ = [
    "Analyzer",
    "EdgeMismatch",
    "Error",
    "SyntaxError",
    "SystemModel",
    "def_ref",
    "load_model",
    "load_model_file",
    "normalize_term",
]
