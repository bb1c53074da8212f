"""JSON document format used by the command line.

Layout (version "1")::

    {
      "version": "1",
      "spaces":    {"K": {"signature": [1, -1]}},
      "families":  {"F": {"space": "K", "vectors": [[[re, im], [re, im]], ...]}},
      "operators": {"S0": {"space": "K", "matrix": [[[re, im], ...], ...]}},
      "specs":     {"a": {"kind": "norms", "values": [1.0, 1.0, 1.0]}}
    }

Complex numbers are ``[re, im]`` pairs. Floats are written with Python's
shortest round-trip representation, so parse(emit(doc)) is bit-exact.
Every section except "version" is optional.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .construction import NormSpec, SpectrumSpec
from .errors import FrameError
from .frames import VectorFamily
from .space import PontryaginSpace

VERSION = "1"
_SECTIONS = ("spaces", "families", "operators", "specs")


class DocumentError(FrameError, ValueError):
    """Malformed document; ``path`` names the offending location."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


@dataclass
class Document:
    spaces: dict = field(default_factory=dict)
    families: dict = field(default_factory=dict)
    operators: dict = field(default_factory=dict)  # name -> (space name, matrix)
    specs: dict = field(default_factory=dict)
    family_space: dict = field(default_factory=dict)  # family name -> space name

    def add_family(self, name, F, space_hint="K"):
        self.family_space[name] = self.add_space(F.space, space_hint)
        self.families[name] = F

    def space_name(self, space):
        for name, sp in self.spaces.items():
            if sp == space:
                return name
        return None

    def add_space(self, space, preferred):
        existing = self.space_name(space)
        if existing is not None:
            return existing
        name, i = preferred, 1
        while name in self.spaces:
            i += 1
            name = f"{preferred}{i}"
        self.spaces[name] = space
        return name


def _complex(value, path):
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        raise DocumentError(path, "expected [re, im] pair of numbers")
    if not all(math.isfinite(v) for v in value):
        raise DocumentError(path, "complex entries must be finite")
    return complex(float(value[0]), float(value[1]))


def _vector(value, path):
    if not isinstance(value, list):
        raise DocumentError(path, "expected a list of [re, im] pairs")
    return [_complex(v, f"{path}[{i}]") for i, v in enumerate(value)]


def _mapping(obj, key, path):
    value = obj.get(key, {})
    if not isinstance(value, dict):
        raise DocumentError(f"{path}{key}", "expected an object")
    return value


def _record(section, name, value, keys):
    path = f"{section}.{name}"
    if not isinstance(value, dict):
        raise DocumentError(path, "expected an object")
    for key in keys:
        if key not in value:
            raise DocumentError(f"{path}.{key}", "missing")
    return path


def parse(obj):
    """Build a Document from decoded JSON, validating every entry."""
    if not isinstance(obj, dict):
        raise DocumentError("", "top level must be a JSON object")
    if obj.get("version") != VERSION:
        raise DocumentError("version", f'expected "{VERSION}"')
    unknown = set(obj) - {"version", *_SECTIONS}
    if unknown:
        raise DocumentError(sorted(unknown)[0], "unknown top-level key")
    doc = Document()

    for name, rec in _mapping(obj, "spaces", "").items():
        path = _record("spaces", name, rec, ("signature",))
        sig = rec["signature"]
        if not isinstance(sig, list) or any(s not in (1, -1) or isinstance(s, bool) for s in sig):
            raise DocumentError(f"{path}.signature", "expected a list of +1/-1")
        doc.spaces[name] = PontryaginSpace(tuple(sig))

    for name, rec in _mapping(obj, "families", "").items():
        path = _record("families", name, rec, ("space", "vectors"))
        space = doc.spaces.get(rec["space"])
        if space is None:
            raise DocumentError(f"{path}.space", f"undeclared space {rec['space']!r}")
        vecs = rec["vectors"]
        if not isinstance(vecs, list) or not vecs:
            raise DocumentError(f"{path}.vectors", "expected a non-empty list of vectors")
        cols = []
        for i, v in enumerate(vecs):
            col = _vector(v, f"{path}.vectors[{i}]")
            if len(col) != space.dim:
                raise DocumentError(
                    f"{path}.vectors[{i}]", f"length {len(col)} does not match space dim {space.dim}"
                )
            cols.append(col)
        X = np.array(cols, dtype=complex).T.reshape(space.dim, len(cols))
        doc.families[name] = VectorFamily(space, X)
        doc.family_space[name] = rec["space"]

    for name, rec in _mapping(obj, "operators", "").items():
        path = _record("operators", name, rec, ("space", "matrix"))
        space = doc.spaces.get(rec["space"])
        if space is None:
            raise DocumentError(f"{path}.space", f"undeclared space {rec['space']!r}")
        rows = rec["matrix"]
        if not isinstance(rows, list) or len(rows) != space.dim:
            raise DocumentError(f"{path}.matrix", f"expected {space.dim} rows")
        M = []
        for i, r in enumerate(rows):
            row = _vector(r, f"{path}.matrix[{i}]")
            if len(row) != space.dim:
                raise DocumentError(f"{path}.matrix[{i}]", f"expected {space.dim} entries")
            M.append(row)
        doc.operators[name] = (rec["space"], np.array(M, dtype=complex).reshape(space.dim, space.dim))

    for name, rec in _mapping(obj, "specs", "").items():
        path = _record("specs", name, rec, ("kind", "values"))
        values = rec["values"]
        if not isinstance(values, list) or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in values
        ):
            raise DocumentError(f"{path}.values", "expected a list of numbers")
        cls = {"spectrum": SpectrumSpec, "norms": NormSpec}.get(rec["kind"])
        if cls is None:
            raise DocumentError(f"{path}.kind", 'expected "spectrum" or "norms"')
        try:
            doc.specs[name] = cls(np.array(values, dtype=float))
        except FrameError as exc:
            raise DocumentError(f"{path}.values", str(exc)) from None
    return doc


def loads(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("", f"invalid JSON ({exc})") from None
    return parse(obj)


def _pair(z):
    z = complex(z)
    return [float(z.real), float(z.imag)]


def encode_matrix(M):
    return [[_pair(z) for z in row] for row in np.asarray(M)]


def encode_vectors(X):
    """Columns of ``X`` as a list of vectors."""
    return [[_pair(z) for z in col] for col in np.asarray(X).T]


def to_json(doc):
    out = {"version": VERSION}
    if doc.spaces:
        out["spaces"] = {n: {"signature": list(s.signature)} for n, s in doc.spaces.items()}
    if doc.families:
        out["families"] = {
            n: {
                "space": doc.family_space.get(n) or doc.space_name(F.space),
                "vectors": encode_vectors(F.synthesis),
            }
            for n, F in doc.families.items()
        }
    if doc.operators:
        out["operators"] = {
            n: {"space": sp, "matrix": encode_matrix(M)} for n, (sp, M) in doc.operators.items()
        }
    if doc.specs:
        out["specs"] = {}
        for n, spec in doc.specs.items():
            if isinstance(spec, SpectrumSpec):
                out["specs"][n] = {"kind": "spectrum", "values": [float(v) for v in spec.eigenvalues]}
            else:
                out["specs"][n] = {"kind": "norms", "values": [float(v) for v in spec.norms]}
    return out


def dumps(doc_or_obj, indent=2):
    obj = to_json(doc_or_obj) if isinstance(doc_or_obj, Document) else doc_or_obj
    return json.dumps(obj, indent=indent, allow_nan=False) + "\n"


def documents_equal(a, b):
    """Bit-exact equality of two documents."""
    if a.spaces != b.spaces or set(a.families) != set(b.families):
        return False
    if set(a.operators) != set(b.operators) or set(a.specs) != set(b.specs):
        return False
    for n in a.families:
        Fa, Fb = a.families[n], b.families[n]
        if Fa.space != Fb.space or Fa.synthesis.shape != Fb.synthesis.shape:
            return False
        if Fa.synthesis.tobytes() != Fb.synthesis.tobytes():
            return False
    for n in a.operators:
        (sa, Ma), (sb, Mb) = a.operators[n], b.operators[n]
        if sa != sb or Ma.shape != Mb.shape or Ma.tobytes() != Mb.tobytes():
            return False
    for n in a.specs:
        sa, sb = a.specs[n], b.specs[n]
        if type(sa) is not type(sb):
            return False
        va = sa.eigenvalues if isinstance(sa, SpectrumSpec) else sa.norms
        vb = sb.eigenvalues if isinstance(sb, SpectrumSpec) else sb.norms
        if va.tobytes() != vb.tobytes():
            return False
    return True
