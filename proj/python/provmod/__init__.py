"""Provability models for GL, ILM and GLP."""

import json

from ._core import (
    EnvelopeError,
    ModelError,
    ParseError,
    SchemaError,
    canonical,
    classical_entails,
    gl_consequence,
    is_purely_modal,
    phrase_cnf,
    pre_interpolant,
    representatives,
)
from . import _core


def decide(logic, formula, bound=3):
    """Verdict dict with "status" and, for non-theorems, "countermodel" and "world"."""
    return json.loads(_core._decide(logic, formula, bound))


def countermodel(logic, formula, bound=3):
    """Finitary countermodel document, designated world, height and soundness failures."""
    return json.loads(_core._countermodel(logic, formula, bound))


def evaluate(document, world, formula):
    if not isinstance(document, str):
        document = json.dumps(document)
    return _core._eval(document, world, formula)


def interpret(theory, formula):
    if not isinstance(theory, str):
        theory = json.dumps(theory)
    return json.loads(_core._interpret(theory, formula))


__all__ = [
    "EnvelopeError",
    "ModelError",
    "ParseError",
    "SchemaError",
    "canonical",
    "classical_entails",
    "countermodel",
    "decide",
    "evaluate",
    "gl_consequence",
    "interpret",
    "is_purely_modal",
    "phrase_cnf",
    "pre_interpolant",
    "representatives",
]
