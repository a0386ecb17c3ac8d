"""Exact Hankel determinants of Catalan convolution powers and checkers for
their conjectured closed forms."""

import json
from fractions import Fraction

from . import _core

__all__ = [
    "seq_prefix",
    "conv_power_oracle",
    "det_sequence",
    "bareiss_det",
    "cofactor_det",
    "bernoulli",
    "product_formula_pm",
    "checker_ids",
    "run_checker",
    "extract_gf",
]


def _matrix(rows):
    return [[str(int(v)) for v in row] for row in rows]


def seq_prefix(family, k, count):
    return [int(v) for v in _core.seq_prefix(family, k, count)]


def conv_power_oracle(k, count):
    return [int(v) for v in _core.conv_power_oracle(k, count)]


def det_sequence(family, k, m, count, jobs=0):
    return [int(v) for v in _core.det_sequence(family, k, m, count, jobs)]


def bareiss_det(rows):
    return int(_core.bareiss_det(_matrix(rows)))


def cofactor_det(rows):
    return int(_core.cofactor_det(_matrix(rows)))


def bernoulli(idx):
    return Fraction(_core.bernoulli(idx))


def product_formula_pm(m, n):
    return Fraction(_core.product_formula_pm(m, n))


def checker_ids():
    return list(_core.checker_ids())


def run_checker(checker_id, params=None, budget="default"):
    """Runs one checker and returns its report as a dict."""
    text = json.dumps(params) if params is not None else ""
    return json.loads(_core.run_checker(checker_id, text, budget))


def extract_gf(parity, k, m):
    out = json.loads(_core.extract_gf(parity, k, m))
    out["numerator"] = [Fraction(c) for c in out["numerator"]]
    return out
