"""JSON file formats for groups, membership functions and fuzzy maps.

Grades travel as canonical rational strings ("1", "0", "p/q"), indexed by the
owning group's element order, so files round-trip bit-exactly through the
loader.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from .errors import FuzzautError
from .grades import format_grade, parse_grade
from .groups import FiniteGroup, builtin_group, make_group
from .maps import FuzzyMap, make_fuzzy_map
from .subsets import FuzzySubset, fuzzy_subset


class FileFormatError(FuzzautError):
    pass


def _require(obj: dict, key: str, kind: type):
    if not isinstance(obj, dict) or key not in obj:
        raise FileFormatError(f"missing key {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise FileFormatError(f"key {key!r} must be {kind.__name__}")
    return value


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def group_to_json(group: FiniteGroup) -> dict:
    return {
        "name": group.name,
        "order": group.order,
        "table": [list(row) for row in group.table],
    }


def group_from_json(obj: dict) -> FiniteGroup:
    name = _require(obj, "name", str)
    order = _require(obj, "order", int)
    table = _require(obj, "table", list)
    group = make_group(table, name=name)
    if group.order != order:
        raise FileFormatError(f"declared order {order} but the table has {group.order} rows")
    return group


def mu_to_json(mu: FuzzySubset) -> dict:
    return {
        "group": mu.group.name,
        "grades": [format_grade(g) for g in mu.grades],
    }


def mu_from_json(obj: dict, group: Optional[FiniteGroup] = None) -> FuzzySubset:
    """Load a grade vector; the group comes from the caller or a builtin token."""
    token = _require(obj, "group", str)
    grades = _require(obj, "grades", list)
    if group is None:
        group = builtin_group(token)
    elif token != group.name:
        raise FileFormatError(f"grades are for {token!r}, not {group.name!r}")
    return fuzzy_subset(group, [parse_grade(s) for s in grades])


def map_to_json(f: FuzzyMap) -> dict:
    return {
        "domain": f.domain.name,
        "codomain": f.codomain.name,
        "grades": [[format_grade(v) for v in row] for row in f.grades],
    }


def map_from_json(
    obj: dict,
    domain: Optional[FiniteGroup] = None,
    codomain: Optional[FiniteGroup] = None,
) -> FuzzyMap:
    rows = _require(obj, "grades", list)
    domain = domain or builtin_group(_require(obj, "domain", str))
    codomain = codomain or builtin_group(_require(obj, "codomain", str))
    return make_fuzzy_map(domain, codomain, [[parse_grade(v) for v in row] for row in rows])


def _read_json(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path} is not valid JSON: {exc}") from exc


def load_group(path) -> FiniteGroup:
    return group_from_json(_read_json(path))


def load_mu(path, group: Optional[FiniteGroup] = None) -> FuzzySubset:
    return mu_from_json(_read_json(path), group)


def load_map(path, domain=None, codomain=None) -> FuzzyMap:
    return map_from_json(_read_json(path), domain, codomain)


def save(path, obj: dict) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")
