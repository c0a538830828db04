"""JSON documents for fans and divisors.

Fan: ``{"dim": n, "rays": [[...], ...], "max_cones": [[...], ...], "name"?: str}``.
Divisor: ``{"coeffs": [...]}``.  Indices are 0-based; only integers are accepted.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DocumentError
from .fan import Fan, build_fan


@dataclass(frozen=True)
class FanDocument:
    dim: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[tuple[int, ...], ...]
    name: str | None = None

    def to_fan(self) -> Fan:
        return build_fan(self.dim, self.rays, self.max_cones, self.name)

    @classmethod
    def from_fan(cls, fan: Fan) -> FanDocument:
        return cls(fan.dim, tuple(fan.rays), tuple(fan.max_cones), fan.name)


@dataclass(frozen=True)
class DivisorDocument:
    coeffs: tuple[int, ...]


def _no_duplicates(pairs):
    d = {}
    for k, v in pairs:
        if k in d:
            raise DocumentError(f"duplicate key {k!r}")
        d[k] = v
    return d


def _reject_constant(name):
    raise DocumentError(f"non-finite number {name} not allowed")


def _load(text: str, what: str) -> dict:
    try:
        obj = json.loads(text, object_pairs_hook=_no_duplicates, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{what}: malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(obj, dict):
        raise DocumentError(f"{what}: top level must be an object")
    return obj


def _int(x, path: str) -> int:
    if type(x) is not int:
        raise DocumentError(f"field {path}: expected an integer, got {json.dumps(x)}")
    return x


def _int_list(x, path: str, length: int | None = None) -> tuple[int, ...]:
    if not isinstance(x, list):
        raise DocumentError(f"field {path}: expected a list")
    if length is not None and len(x) != length:
        raise DocumentError(f"field {path}: expected {length} entries, got {len(x)}")
    return tuple(_int(v, f"{path}[{i}]") for i, v in enumerate(x))


def parse_fan(text: str) -> FanDocument:
    obj = _load(text, "fan")
    unknown = sorted(set(obj) - {"dim", "rays", "max_cones", "name"})
    if unknown:
        raise DocumentError(f"fan: unknown key(s) {unknown}")
    for key in ("dim", "rays", "max_cones"):
        if key not in obj:
            raise DocumentError(f"fan: missing key {key!r}")
    dim = _int(obj["dim"], "dim")
    if dim < 1:
        raise DocumentError("field dim: must be positive")
    if not isinstance(obj["rays"], list) or not isinstance(obj["max_cones"], list):
        raise DocumentError("fan: rays and max_cones must be lists")
    rays = tuple(_int_list(r, f"rays[{i}]", dim) for i, r in enumerate(obj["rays"]))
    cones = tuple(_int_list(c, f"max_cones[{i}]") for i, c in enumerate(obj["max_cones"]))
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError("field name: expected a string")
    return FanDocument(dim, rays, cones, name)


def serialize_fan(doc: FanDocument) -> str:
    d = {"dim": doc.dim, "rays": [list(r) for r in doc.rays], "max_cones": [list(c) for c in doc.max_cones]}
    if doc.name is not None:
        d["name"] = doc.name
    return json.dumps(d, separators=(",", ":"), ensure_ascii=False) + "\n"


def parse_divisor(text: str, nrays: int | None = None) -> DivisorDocument:
    obj = _load(text, "divisor")
    if set(obj) != {"coeffs"}:
        raise DocumentError(f"divisor: expected exactly the key 'coeffs', got {sorted(obj)}")
    return DivisorDocument(_int_list(obj["coeffs"], "coeffs", nrays))


def serialize_divisor(doc: DivisorDocument) -> str:
    return json.dumps({"coeffs": list(doc.coeffs)}, separators=(",", ":")) + "\n"
