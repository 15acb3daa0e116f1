"""Python front end for the blowup library.

Documents are exchanged as canonical JSON; the helpers below accept and
return plain dicts.
"""

import json
from fractions import Fraction

from . import _blowup
from ._blowup import Error, InvalidInput, ParseError, run

__all__ = [
    "Error",
    "InvalidInput",
    "ParseError",
    "decompose",
    "generate",
    "planar_partition",
    "run",
    "tree_separator",
    "treewidth",
    "validate",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc, sort_keys=True)


def generate(kind, *sizes, seed=1):
    rc, out, err = run(["generate", kind, *map(str, sizes), "--seed", str(seed)])
    if rc != 0:
        raise ParseError(err.strip())
    return json.loads(out)


def decompose(doc, d=0):
    return json.loads(_blowup.decompose(_text(doc), d))


def validate(graph, certificate):
    valid, violations = _blowup.validate(_text(graph), _text(certificate))
    return valid, [{"rule": r, "witness": w} for r, w in violations]


def planar_partition(embedding, root=0):
    return json.loads(_blowup.planar_partition(_text(embedding), root))


def treewidth(n, edges, limit=15):
    return _blowup.treewidth(n, [tuple(e) for e in edges], limit)


def tree_separator(n, edges, weights, q):
    pairs = []
    for w in weights:
        f = Fraction(w)
        pairs.append((f.numerator, f.denominator))
    return _blowup.tree_separator(n, [tuple(e) for e in edges], pairs, q)
