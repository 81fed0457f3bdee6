"""Group-spec strings, group JSON files, and catalog directories.

Spec grammar (round-trips through ``GroupSpec.text()``):

    cyclic:<n> | dihedral:<n> | e2:<k> | quaternion:<n>
    | product:(<spec>,<spec>) | file:<path>

``dihedral:<n>`` builds the group of order 2n and ``quaternion:<n>`` the
group of order 4n.

Group file format: a JSON object ``{"name": str, "order": n,
"table": [[int; n]; n]}`` with the identity at index 0.  Optional boolean
metadata keys ("abelian", "nilpotent") are passed through to the catalog
entry.  Catalog directories are laid out as ``<order>/<name>.json``.
"""

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import GroupValidationError, SpecParseError
from .groups import (DEFAULT_CONSTRUCTION_CAP, Group, direct_product,
                     make_cyclic, make_dihedral, make_elementary_abelian_2,
                     make_generalized_quaternion)

_KINDS = ("cyclic", "dihedral", "e2", "quaternion", "product", "file")


@dataclass(frozen=True)
class GroupSpec:
    """A parseable descriptor of a group constructor."""

    kind: str
    param: int | None = None
    parts: tuple["GroupSpec", "GroupSpec"] | None = None
    path: str | None = None

    def text(self) -> str:
        if self.kind == "product":
            return f"product:({self.parts[0].text()},{self.parts[1].text()})"
        if self.kind == "file":
            return f"file:{self.path}"
        return f"{self.kind}:{self.param}"

    def build(self, *, max_order: int = DEFAULT_CONSTRUCTION_CAP) -> Group:
        if self.kind == "cyclic":
            return make_cyclic(self.param, max_order=max_order)
        if self.kind == "dihedral":
            return make_dihedral(self.param, max_order=max_order)
        if self.kind == "e2":
            return make_elementary_abelian_2(self.param, max_order=max_order)
        if self.kind == "quaternion":
            return make_generalized_quaternion(self.param, max_order=max_order)
        if self.kind == "product":
            left = self.parts[0].build(max_order=max_order)
            right = self.parts[1].build(max_order=max_order)
            return direct_product(left, right, max_order=max_order)
        if self.kind == "file":
            return load_group_file(Path(self.path))
        raise ValueError(f"unknown spec kind {self.kind!r}")

    def __str__(self) -> str:
        return self.text()


def parse_spec(text: str) -> GroupSpec:
    """Parse a spec string; raises SpecParseError with the failing position."""
    spec, pos = _parse_spec_at(text, 0)
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise SpecParseError(f"unexpected trailing text {text[pos:]!r}", pos)
    return spec


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_spec_at(text: str, pos: int) -> tuple[GroupSpec, int]:
    pos = _skip_ws(text, pos)
    start = pos
    while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
        pos += 1
    kind = text[start:pos]
    if kind not in _KINDS:
        raise SpecParseError(
            f"expected one of {'/'.join(_KINDS)}, got {kind!r}", start)
    if pos >= len(text) or text[pos] != ":":
        raise SpecParseError(f"expected ':' after {kind!r}", pos)
    pos += 1
    if kind == "file":
        end = pos
        depth = 0
        while end < len(text) and not (depth == 0 and text[end] in ",)"):
            if text[end] == "(":
                depth += 1
            elif text[end] == ")":
                depth -= 1
            end += 1
        path = text[pos:end].strip()
        if not path:
            raise SpecParseError("empty file path", pos)
        return GroupSpec(kind="file", path=path), end
    if kind == "product":
        if pos >= len(text) or text[pos] != "(":
            raise SpecParseError("expected '(' after 'product:'", pos)
        left, pos = _parse_spec_at(text, pos + 1)
        pos = _skip_ws(text, pos)
        if pos >= len(text) or text[pos] != ",":
            raise SpecParseError("expected ',' between product factors", pos)
        right, pos = _parse_spec_at(text, pos + 1)
        pos = _skip_ws(text, pos)
        if pos >= len(text) or text[pos] != ")":
            raise SpecParseError("expected ')' closing product", pos)
        return GroupSpec(kind="product", parts=(left, right)), pos + 1
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise SpecParseError(f"expected an integer parameter for {kind!r}", start)
    return GroupSpec(kind=kind, param=int(text[start:pos])), pos


# -- group JSON files --------------------------------------------------------

def group_to_json_dict(g: Group, **metadata) -> dict:
    out = {"name": g.name, "order": g.order,
           "table": [list(row) for row in g.table]}
    for key, value in sorted(metadata.items()):
        out[key] = value
    return out


def group_from_json_dict(data: dict) -> Group:
    if not isinstance(data, dict):
        raise GroupValidationError("group file must contain a JSON object")
    for key in ("name", "order", "table"):
        if key not in data:
            raise GroupValidationError(f"group file is missing key {key!r}")
    table = data["table"]
    if len(table) != data["order"]:
        raise GroupValidationError(
            f"declared order {data['order']} but table has {len(table)} rows")
    return Group(str(data["name"]), table)


def load_group_file(path: Path) -> Group:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return group_from_json_dict(data)


@dataclass(frozen=True)
class CatalogEntry:
    """One validated group from a catalog directory or builtin family."""

    spec: GroupSpec
    source: str  # "builtin" or the file path
    order: int
    name: str
    group: Group = field(repr=False)
    flags: dict = field(default_factory=dict, repr=False)


def load_catalog(directory: Path | str,
                 problems: list[str] | None = None) -> list[CatalogEntry]:
    """Load and validate every group JSON file under a catalog directory.

    Invalid files are recorded in ``problems`` (when given) and skipped;
    an unreadable directory raises OSError.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise OSError(f"catalog directory not found: {directory}")
    entries = []
    for path in sorted(directory.rglob("*.json")):
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
            group = group_from_json_dict(data)
        except (json.JSONDecodeError, GroupValidationError, ValueError) as exc:
            if problems is not None:
                problems.append(f"{path}: {exc}")
            continue
        flags = {k: v for k, v in data.items()
                 if k not in ("name", "order", "table")}
        entries.append(CatalogEntry(
            spec=GroupSpec(kind="file", path=str(path)),
            source=str(path), order=group.order, name=group.name,
            group=group, flags=flags))
    entries.sort(key=lambda e: (e.order, e.name))
    return entries


def default_catalog_dir() -> Path | None:
    """The packaged small-group catalog, if it was shipped with this install."""
    root = resources.files("lmpfs") / "data" / "smallgroups"
    try:
        path = Path(str(root))
    except TypeError:
        return None
    return path if path.is_dir() else None


def builtin_specs(max_order: int = 31) -> list[GroupSpec]:
    """Constructible family members of order at most ``max_order``.

    Covers cyclic, dihedral, elementary abelian 2-groups, generalized
    quaternion groups, and the direct product dihedral-8 x cyclic-2.
    """
    specs = []
    k = 1
    while 2 ** k <= max_order:
        specs.append(GroupSpec(kind="e2", param=k))
        k += 1
    for n in range(3, max_order + 1):
        specs.append(GroupSpec(kind="cyclic", param=n))
    for n in range(2, max_order // 2 + 1):
        specs.append(GroupSpec(kind="dihedral", param=n))
    for n in range(2, max_order // 4 + 1):
        specs.append(GroupSpec(kind="quaternion", param=n))
    if max_order >= 16:
        specs.append(GroupSpec(
            kind="product",
            parts=(GroupSpec(kind="dihedral", param=4),
                   GroupSpec(kind="cyclic", param=2))))
    return specs
