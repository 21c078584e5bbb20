"""Exact LDU factorization of integer matrices.

Thin wrapper over the C++ core. Matrices are plain lists of lists; entries
may be ints or decimal strings. Exact rationals come back as
``fractions.Fraction``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import ParseError, SingularMatrixError

__all__ = [
    "factorize",
    "verify",
    "rank",
    "det",
    "inv",
    "solve",
    "gen",
    "ParseError",
    "SingularMatrixError",
]


def _to_str_matrix(a):
    return [[str(x) for x in row] for row in a]


def factorize(a, alpha=1):
    """Factorize ``a`` and return the bundle as a dict.

    L, U, M, W come back as integer matrices, D and Dhat as pivot lists with
    Fraction weights (1-based positions), alpha_r and pivot dets as ints.
    """
    bundle = json.loads(_core.factorize_json(_to_str_matrix(a), str(alpha)))
    bundle["alpha"] = int(bundle["alpha"])
    bundle["alpha_r"] = int(bundle["alpha_r"])
    for key in ("L", "U", "M", "W"):
        bundle[key]["entries"] = [
            [int(x) for x in row] for row in bundle[key]["entries"]
        ]
    for key in ("D", "Dhat"):
        for p in bundle[key]["pivots"]:
            p["w"] = Fraction(p["w"])
    for p in bundle["pivots"]:
        p["det"] = int(p["det"])
    return bundle


def verify(a, bundle, deep=False):
    """Run every factorization check; returns (name, passed, detail) triples."""
    return _core.verify_json(_to_str_matrix(a), json.dumps(_stringify(bundle)), deep)


def _stringify(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, list):
        return [_stringify(v) for v in value]
    if isinstance(value, dict):
        keep = {"rows", "cols", "n", "row", "col", "original_shape"}
        return {
            k: (v if k in keep else _stringify(v)) for k, v in value.items()
        }
    return value


def rank(a):
    return _core.rank(_to_str_matrix(a))


def det(a):
    return int(_core.det(_to_str_matrix(a)))


def inv(a):
    return [[Fraction(x) for x in row] for row in _core.inv(_to_str_matrix(a))]


def solve(a, b):
    return [Fraction(x) for x in _core.solve(_to_str_matrix(a), [str(x) for x in b])]


def gen(n, rank=None, seed=0, bound=9):
    target = n if rank is None else rank
    return [[int(x) for x in row] for row in _core.gen(n, target, seed, bound)]
