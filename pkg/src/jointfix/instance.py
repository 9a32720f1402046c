"""Reading and writing instance documents.

An instance is a UTF-8 JSON object::

    {"elements": ["a", "b"],
     "order": {"covers": [["a", "b"]]},        # or {"pairs": [...]} (full relation)
     "maps": {"f": {"a": "b", "b": "b"}},
     "meta": {...}}                              # optional

:func:`dumps_instance` writes the canonical form: keys in the order above,
the order given as its covering pairs sorted bytewise, map tables keyed in
carrier order, and ``meta`` with sorted keys.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import NamedTuple

from .errors import ParseError
from .mappings import Family, build_map
from .poset import Poset, build_poset


class Instance(NamedTuple):
    poset: Poset
    family: Family
    meta: dict


def _expect(cond: bool, message: str, where: str) -> None:
    if not cond:
        raise ParseError(message, where)


def _label_pairs(value, where: str) -> list[tuple[str, str]]:
    _expect(isinstance(value, list), "expected a list of pairs", where)
    pairs = []
    for i, pair in enumerate(value):
        at = f"{where}[{i}]"
        _expect(isinstance(pair, list) and len(pair) == 2, "expected a two-element list", at)
        _expect(all(isinstance(x, str) for x in pair), "labels must be strings", at)
        pairs.append((pair[0], pair[1]))
    return pairs


def parse_instance(text: str, source: str = "<instance>") -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{source}: line {exc.lineno} column {exc.colno}") from None
    _expect(isinstance(doc, dict), "top level must be an object", source)
    unknown = set(doc) - {"elements", "order", "maps", "meta"}
    _expect(not unknown, f"unknown fields {sorted(unknown)}", source)

    elements = doc.get("elements")
    _expect(isinstance(elements, list) and elements, "expected a non-empty list of labels", "elements")
    for i, label in enumerate(elements):
        _expect(isinstance(label, str), "labels must be strings", f"elements[{i}]")

    order = doc.get("order")
    _expect(isinstance(order, dict) and len(order) == 1 and set(order) <= {"covers", "pairs"},
            'expected {"covers": [...]} or {"pairs": [...]}', "order")
    mode, raw_pairs = next(iter(order.items()))
    pairs = _label_pairs(raw_pairs, f"order.{mode}")
    poset = build_poset(elements, pairs, mode="covers" if mode == "covers" else "full")

    maps = doc.get("maps")
    _expect(isinstance(maps, dict) and maps, "expected a non-empty object of map tables", "maps")
    members = []
    for name, table in maps.items():
        at = f"maps.{name}"
        _expect(isinstance(table, dict), "expected an object label -> label", at)
        for src, dst in table.items():
            _expect(isinstance(dst, str), "image must be a label string", f"{at}.{src}")
        members.append(build_map(poset, name, table))

    meta = doc.get("meta", {})
    _expect(isinstance(meta, dict), "expected an object", "meta")
    return Instance(poset, Family(poset, tuple(members)), meta)


def load_instance(path: str | Path) -> Instance:
    path = Path(path)
    try:
        text = path.read_bytes().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not valid UTF-8 ({exc.reason})", str(path)) from None
    return parse_instance(text, str(path))


def _bytewise(pair: tuple[str, str]) -> tuple[bytes, bytes]:
    return pair[0].encode("utf-8"), pair[1].encode("utf-8")


def _j(value) -> str:
    return json.dumps(value, ensure_ascii=False)


def dumps_instance(poset: Poset, family: Family, meta: dict | None = None) -> str:
    labels = poset.labels
    covers = sorted(((labels[a], labels[b]) for a, b in poset.cover_pairs()), key=_bytewise)
    lines = [
        "{",
        f'  "elements": {_j(list(labels))},',
        '  "order": {"covers": ' + _j([list(c) for c in covers]) + "},",
        '  "maps": {',
    ]
    for i, f in enumerate(family):
        comma = "," if i < len(family) - 1 else ""
        lines.append(f"    {_j(f.name)}: {_j(f.as_labels())}{comma}")
    lines.append("  },")
    lines.append(f'  "meta": {json.dumps(meta or {}, ensure_ascii=False, sort_keys=True)}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def instance_digest(poset: Poset, family: Family, meta: dict | None = None) -> str:
    """SHA-256 of the canonical document."""
    return hashlib.sha256(dumps_instance(poset, family, meta).encode("utf-8")).hexdigest()
