"""Instance documents: JSON files declaring universes, relations, mappings, sets.

Layout::

    {
      "universes": {"U": ["x1", "x2"], ...},
      "relations": {"R": {"universe": "U", "pairs": [["x1", "x2"]]}, ...},
      "mappings":  {"f": {"domain": "U", "codomain": "V", "map": {"x1": "y1"}}, ...},
      "sets":      {"X": {"universe": "U", "members": ["x1"]}, ...}
    }
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Union

from .mapping import FiniteMapping
from .relation import BinaryRelation, Subset, Universe, UniverseError, make_relation

LABEL = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
CATEGORIES = ("universes", "relations", "mappings", "sets")


class DocumentError(UniverseError):
    """An instance document failed to parse or to resolve."""


@dataclass
class InstanceDocument:
    universes: dict[str, Universe] = field(default_factory=dict)
    relations: dict[str, BinaryRelation] = field(default_factory=dict)
    mappings: dict[str, FiniteMapping] = field(default_factory=dict)
    sets: dict[str, Subset] = field(default_factory=dict)

    def universe_name(self, universe: Universe) -> str:
        for name, u in self.universes.items():
            if u is universe:
                return name
        raise DocumentError(f"universe {universe!r} is not declared in this document")

    def get(self, category: str, name: str):
        table = getattr(self, category)
        if name not in table:
            kind = category[:-1]
            raise DocumentError(f"unknown {kind} {name!r}")
        return table[name]

    def to_json(self) -> dict[str, Any]:
        return {
            "universes": {name: list(u.labels) for name, u in self.universes.items()},
            "relations": {
                name: {
                    "universe": self.universe_name(r.universe),
                    "pairs": [list(p) for p in r.labeled_pairs()],
                }
                for name, r in self.relations.items()
            },
            "mappings": {
                name: {
                    "domain": self.universe_name(f.domain),
                    "codomain": self.universe_name(f.codomain),
                    "map": f.assignment(),
                }
                for name, f in self.mappings.items()
            },
            "sets": {
                name: {"universe": self.universe_name(s.universe), "members": s.labels}
                for name, s in self.sets.items()
            },
        }

    def dumps(self) -> str:
        """JSON text with one line per category, stable across runs."""
        body = self.to_json()
        lines = [
            f"  {json.dumps(key)}: {json.dumps(body[key], ensure_ascii=False)}"
            for key in CATEGORIES
        ]
        return "{\n" + ",\n".join(lines) + "\n}"


def _expect(value, kind, where):
    if not isinstance(value, kind):
        want = kind.__name__ if isinstance(kind, type) else " or ".join(k.__name__ for k in kind)
        raise DocumentError(f"{where}: expected {want}, got {type(value).__name__}")
    return value


def _label(value, where) -> str:
    if not isinstance(value, str) or not LABEL.match(value):
        raise DocumentError(f"{where}: invalid label {value!r}")
    return value


def _resolve(table: dict, name, where: str, kind: str):
    if not isinstance(name, str) or name not in table:
        raise DocumentError(f"{where}: unknown {kind} {name!r}")
    return table[name]


def _member(universe: Universe, label, where: str, uname: str) -> str:
    _label(label, where)
    if label not in universe.labels:
        raise DocumentError(f"{where}: label {label!r} is not in universe {uname!r}")
    return label


def from_json(data: Any) -> InstanceDocument:
    """Build a document from already-decoded JSON, resolving every name."""
    _expect(data, dict, "document")
    unknown = sorted(set(data) - set(CATEGORIES))
    if unknown:
        raise DocumentError(f"document: unknown top-level key {unknown[0]!r}")
    doc = InstanceDocument()

    for name, labels in _expect(data.get("universes", {}), dict, "universes").items():
        where = f"universes.{name}"
        _label(name, where)
        labels = [_label(lab, f"{where}[{i}]") for i, lab in enumerate(_expect(labels, list, where))]
        try:
            doc.universes[name] = Universe(labels)
        except UniverseError as exc:
            raise DocumentError(f"{where}: {exc}") from None

    for name, decl in _expect(data.get("relations", {}), dict, "relations").items():
        where = f"relations.{name}"
        _label(name, where)
        _expect(decl, dict, where)
        uname = decl.get("universe")
        u = _resolve(doc.universes, uname, f"{where}.universe", "universe")
        pairs = []
        for i, pair in enumerate(_expect(decl.get("pairs", []), list, f"{where}.pairs")):
            pw = f"{where}.pairs[{i}]"
            if not isinstance(pair, list) or len(pair) != 2:
                raise DocumentError(f"{pw}: expected a 2-element list")
            pairs.append(tuple(_member(u, lab, pw, uname) for lab in pair))
        doc.relations[name] = make_relation(u, pairs)

    for name, decl in _expect(data.get("mappings", {}), dict, "mappings").items():
        where = f"mappings.{name}"
        _label(name, where)
        _expect(decl, dict, where)
        dname, cname = decl.get("domain"), decl.get("codomain")
        dom = _resolve(doc.universes, dname, f"{where}.domain", "universe")
        cod = _resolve(doc.universes, cname, f"{where}.codomain", "universe")
        assignment = _expect(decl.get("map", {}), dict, f"{where}.map")
        for a, b in assignment.items():
            _member(dom, a, f"{where}.map", dname)
            _member(cod, b, f"{where}.map.{a}", cname)
        try:
            doc.mappings[name] = FiniteMapping.from_assignment(dom, cod, assignment)
        except UniverseError as exc:
            raise DocumentError(f"{where}: {exc}") from None

    for name, decl in _expect(data.get("sets", {}), dict, "sets").items():
        where = f"sets.{name}"
        _label(name, where)
        _expect(decl, dict, where)
        uname = decl.get("universe")
        u = _resolve(doc.universes, uname, f"{where}.universe", "universe")
        members = [
            _member(u, lab, f"{where}.members[{i}]", uname)
            for i, lab in enumerate(_expect(decl.get("members", []), list, f"{where}.members"))
        ]
        doc.sets[name] = u.subset(members)

    return doc


def loads(text: str, source: str = "<string>") -> InstanceDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        return from_json(data)
    except DocumentError as exc:
        raise DocumentError(f"{source}: {exc}") from None


def load(path: Union[str, Path]) -> InstanceDocument:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"{path}: cannot read file ({exc.strerror})") from None
    except UnicodeDecodeError:
        raise DocumentError(f"{path}: not valid UTF-8") from None
    return loads(text, str(path))
