"""Codes over finite alphabets and group codes."""

import json as _json

from . import _groupcodes as _core
from ._groupcodes import Code, GroupCodesError, is_cyclic, certificates, is_decomposable, join, selftest

__all__ = [
    "Code",
    "GroupCodesError",
    "aut_group",
    "certificates",
    "classify",
    "cyclic_report",
    "decompose",
    "interleave",
    "is_cyclic",
    "is_decomposable",
    "isomorphism",
    "join",
    "load",
    "parameters",
    "selftest",
]


def load(source):
    """Code from a dict, a JSON string, or a path to a JSON file."""
    if isinstance(source, dict):
        return Code.from_json(_json.dumps(source))
    text = str(source)
    if text.lstrip().startswith("{"):
        return Code.from_json(text)
    return Code.from_file(text)


def parameters(code):
    return _json.loads(_core.parameters(code))


def classify(code):
    return _json.loads(_core.classify(code))


def decompose(code, max_partition_bits=24):
    return _json.loads(_core.decompose(code, max_partition_bits))


def aut_group(code):
    return _json.loads(_core.aut_group(code))


def isomorphism(a, b):
    """Witness isometry (pull convention) as a dict, or None."""
    w = _core.isomorphism(a, b)
    return None if w is None else _json.loads(w)


def cyclic_report(code):
    return _json.loads(_core.cyclic_report(code))


def interleave(code, copies):
    """(interleaved code, 1-based sigma); sigma acts by y[sigma(t)] = x[t]."""
    return _core.interleave(code, copies)
