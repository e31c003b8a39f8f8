"""Exact witnesses for separability, Maschke and Frobenius criteria.

Thin convenience layer over the native module: every function speaks JSON
strings on the native side; here they are decoded to plain dicts/lists.
"""

import json as _json

try:
    from ._hopfwit import *  # installed package layout
    from . import _hopfwit as _native
except ImportError:  # in-tree build: the module sits next to the package
    from _hopfwit import *  # noqa: F401,F403
    import _hopfwit as _native

__all__ = [
    "check",
    "solve",
    "verify",
    "transport",
    "deform_theta",
    "deform_fieldext",
    "catalog",
    "catalog_entries",
    "group_algebra",
    "sweedler_h4",
    "dual_of",
    "yetter_drinfeld_entwining",
    "relative_hopf_entwining",
    "cyclic_group_table",
]


def _dumps(value):
    return value if isinstance(value, str) else _json.dumps(value)


def cyclic_group_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def check(level, structure):
    return _json.loads(_native.check(level, _dumps(structure)))


def solve(kind, structure):
    out = _native.solve(kind, _dumps(structure))
    return None if out is None else _json.loads(out)


def verify(kind, structure, witness):
    return _json.loads(_native.verify(kind, _dumps(structure), _dumps(witness)))


def transport(direction, structure, witness):
    return _json.loads(_native.transport(direction, _dumps(structure), _dumps(witness)))


def deform_theta(theta_witness, map_description):
    return _json.loads(_native.deform_theta(_dumps(theta_witness), _dumps(map_description)))


def deform_fieldext(fieldext, map_description):
    return _json.loads(_native.deform_fieldext(_dumps(fieldext), _dumps(map_description)))


def catalog(filter="", seed=0xC0FFEE):
    return _json.loads(_native.catalog(filter, seed))


def catalog_entries():
    return list(_native.catalog_entries())


def group_algebra(table, field):
    return _json.loads(_native.group_algebra(table, _dumps(field)))


def sweedler_h4(field):
    return _json.loads(_native.sweedler_h4(_dumps(field)))


def dual_of(presentation):
    return _json.loads(_native.dual_of(_dumps(presentation)))


def yetter_drinfeld_entwining(hopf):
    return _json.loads(_native.yetter_drinfeld_entwining(_dumps(hopf)))


def relative_hopf_entwining(relhopf_input):
    return _json.loads(_native.relative_hopf_entwining(_dumps(relhopf_input)))
