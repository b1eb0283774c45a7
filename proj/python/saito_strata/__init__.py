"""Python front end for the saito-strata core.

Every call returns the same JSON document the command line prints, decoded
into plain dicts and lists. Bad input raises ValueError.
"""

import json
from pathlib import Path

from . import _saito_strata as _core

_here = Path(__file__).resolve().parent
# wheels carry the golden tables next to the module
if (_here / "data" / "golden").is_dir():
    _core.set_data_dir(str(_here / "data"))

__all__ = ["predict", "det", "classical", "tables", "verify", "default_threads", "schema_path"]


def _csv(v):
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    return ",".join(str(x) for x in v)


def _roots(v):
    if v is None or isinstance(v, str):
        return v or ""
    return ";".join(_csv(r) for r in v)


def predict(group, simple=None, roots=None, raw_coords=False, dump_roots=False):
    return json.loads(_core.predict(group, _csv(simple), _roots(roots), raw_coords, dump_roots))


def det(group, simple=None, roots=None, raw_coords=False, backend="symbolic", invariants=None, show_basis=False):
    return json.loads(_core.det(group, _csv(simple), _roots(roots), raw_coords, backend, _csv(invariants), show_basis))


def classical(type, mult, m=0, at=None, points=3, seed=1, tol=1e-8):
    return json.loads(_core.classical(type, _csv(mult), m, _roots(at), points, seed, tol))


def tables(which="all"):
    return json.loads(_core.tables(_csv(which)))


def verify(group, threads=0, gamma_trials=3, seed=7, symbolic=True):
    return json.loads(_core.verify(group, threads, gamma_trials, seed, symbolic))


def default_threads():
    return _core.default_threads()


def schema_path():
    return _here / "saito-strata.schema.json"
