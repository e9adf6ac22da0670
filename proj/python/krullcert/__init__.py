"""Python front end for the krullcert core.

Documents are plain dicts in the same JSON format the command line tool reads
and writes; polynomials in the direct helpers are strings such as "x^2*y - 3".
"""

import json

from . import _core
from ._core import (
    Error,
    InvalidInput,
    ParseError,
    RingMismatch,
    ShapeError,
    UnsupportedClass,
    groebner_basis,
    ideal_membership,
    minimal_primes,
    radical_membership,
)

FORMAT_VERSION = 1

__all__ = [
    "Error", "InvalidInput", "ParseError", "RingMismatch", "ShapeError", "UnsupportedClass",
    "ring", "presentation", "ideal", "decide", "verify", "dimension",
    "witness_from_dependence", "witness_from_sequence", "descent",
    "groebner_basis", "ideal_membership", "radical_membership", "minimal_primes",
]


def _document(kind, payload):
    return {"version": FORMAT_VERSION, "kind": kind, **payload}


def _call(fn, *docs):
    return json.loads(fn(*(None if d is None else json.dumps(d) for d in docs)))


def ring(variables, relations=(), p=None):
    r = {"field": "Q" if p is None else "Fp", "vars": list(variables), "relations": list(relations)}
    if p is not None:
        r["p"] = p
    return r


def presentation(variables, J, U, relations=(), p=None):
    """Presentation document; J and U are lists of generator lists, one per level."""
    return _document("presentation", {"ring": ring(variables, relations, p),
                                      "J": [list(g) for g in J], "U": [list(g) for g in U]})


def ideal(variables, generators, relations=(), p=None):
    return _document("ideal", {"ring": ring(variables, relations, p), "generators": list(generators)})


def decide(pres):
    return _call(_core.decide, pres)


def verify(document, pres=None):
    return _core.verify(json.dumps(document), None if pres is None else json.dumps(pres))


def dimension(ideal_doc):
    return _call(_core.dimension, ideal_doc)


def witness_from_dependence(variables, sequence, relation, relations=(), p=None):
    """relation is a polynomial in y1..yl vanishing on the sequence."""
    doc = _document("dependence", {"ring": ring(variables, relations, p),
                                   "sequence": list(sequence), "relation": relation})
    return _call(_core.witness_from_dependence, doc)


def witness_from_sequence(variables, sequence, p=None):
    doc = _document("sequence", {"ring": ring(variables, (), p), "sequence": list(sequence)})
    return _call(_core.witness_from_sequence, doc)


def descent(extension):
    return _call(_core.descent, extension)
