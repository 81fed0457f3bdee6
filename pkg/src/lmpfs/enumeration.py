"""Exhaustive enumeration of locally maximal product-free sets.

The kernel (compiled or pure, selected in ``lmpfs._kernel``) walks every
product-free subset once and emits exactly the locally maximal ones.  This
module wraps it with capacity checks, optional worker partitioning, orbit
classification under the automorphism group, and filled-group verdicts.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import _kernel
from .catalog import GroupSpec
from .errors import CapacityError
from .groups import Automorphism, Group, automorphisms
from .pfs import fills
from .sets import ElementSet

DEFAULT_ENUMERATION_CAP = 64
KERNEL_IMPLEMENTATION = _kernel.IMPLEMENTATION


def enumeration_cap(explicit: int | None = None) -> int:
    """Effective enumeration cap: explicit value, else LMPFS_MAX_ORDER, else 64."""
    if explicit is not None:
        return explicit
    env = os.environ.get("LMPFS_MAX_ORDER")
    if env:
        return int(env)
    return DEFAULT_ENUMERATION_CAP


def _check_enumerable(g: Group, max_order: int | None) -> None:
    cap = enumeration_cap(max_order)
    if g.order > cap:
        raise CapacityError(
            f"enumeration capped at order {cap}, got {g.order} "
            f"(set LMPFS_MAX_ORDER or pass max_order to raise the cap)")
    if g.order > 64:
        raise CapacityError("enumeration kernel is limited to order 64")


def _flat_table(g: Group) -> list[int]:
    return [v for row in g.table for v in row]


def _enumerate_partition(args: tuple[int, list[int], int, int]) -> list[int]:
    n, flat, size_filter, first = args
    return _kernel.enumerate_masks(n, flat, size_filter, first)


def _raw_masks(g: Group, size_filter: int, workers: int) -> list[int]:
    """Kernel masks in DFS order (single worker) or partition order."""
    flat = _flat_table(g)
    if workers <= 1:
        return _kernel.enumerate_masks(g.order, flat, size_filter)
    tasks = [(g.order, flat, size_filter, first)
             for first in range(1, g.order)]
    masks: list[int] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for chunk in pool.map(_enumerate_partition, tasks):
            masks.extend(chunk)
    return masks


def enumerate_lmpfs(g: Group, size: int | None = None, *, workers: int = 1,
                    max_order: int | None = None) -> list[ElementSet]:
    """All locally maximal product-free sets, sorted by bitmask.

    ``size`` filters by cardinality.  ``workers`` > 1 partitions the search
    by least element across processes; output is identical for any worker
    count.
    """
    _check_enumerable(g, max_order)
    if size is not None and size < 1:
        raise ValueError(f"size filter must be positive, got {size}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    masks = _raw_masks(g, size or 0, workers)
    masks.sort()
    return [ElementSet(m, g.order) for m in masks]


@dataclass(frozen=True)
class Orbit:
    """One automorphism orbit of enumerated sets."""

    canonical: ElementSet
    size: int
    orbit_length: int
    fills: bool

    def as_json_dict(self) -> dict:
        return {"canonical": list(self.canonical), "size": self.size,
                "orbit_length": self.orbit_length, "fills": self.fills}


@dataclass(frozen=True)
class ClassificationReport:
    """Orbits of locally maximal product-free sets under Aut(G)."""

    group_name: str
    group_order: int
    orbits: list[Orbit]
    counts_by_size: dict[int, tuple[int, int]]  # size -> (sets, orbits)
    min_size: int | None
    max_size: int | None

    @property
    def total(self) -> int:
        return sum(o.orbit_length for o in self.orbits)

    def as_json_dict(self) -> dict:
        return {
            "group": self.group_name,
            "order": self.group_order,
            "orbits": [o.as_json_dict() for o in self.orbits],
            "counts_by_size": {str(size): {"sets": sets, "orbits": orbs}
                               for size, (sets, orbs)
                               in sorted(self.counts_by_size.items())},
            "min_size": self.min_size,
            "max_size": self.max_size,
            "total": self.total,
        }


def _canonical_key(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _apply_perm(perm: tuple[int, ...], mask: int) -> int:
    bits = 0
    while mask:
        low = mask & -mask
        bits |= 1 << perm[low.bit_length() - 1]
        mask ^= low
    return bits


def classify_up_to_aut(g: Group, sets: list[ElementSet], *,
                       auts: list[Automorphism] | None = None
                       ) -> ClassificationReport:
    """Partition sets into Aut(G)-orbits.

    The canonical representative of each orbit is the lexicographically
    least sorted index tuple.  The input must be closed under the
    automorphism action (enumeration output always is).
    """
    if auts is None:
        auts = automorphisms(g)
    perms = [a.perm for a in auts]
    input_masks = {s.bits for s in sets}
    if len(input_masks) != len(sets):
        raise ValueError("duplicate sets passed to classification")
    seen: set[int] = set()
    orbits = []
    for s in sorted(sets, key=lambda e: _canonical_key(e.bits)):
        if s.bits in seen:
            continue
        orbit_masks = {_apply_perm(p, s.bits) for p in perms}
        if not orbit_masks <= input_masks:
            raise RuntimeError(
                "internal error: input is not closed under the automorphism "
                "action")
        seen |= orbit_masks
        canonical = ElementSet(min(orbit_masks, key=_canonical_key), g.order)
        orbits.append(Orbit(canonical=canonical, size=len(canonical),
                            orbit_length=len(orbit_masks),
                            fills=fills(g, canonical)))
    orbits.sort(key=lambda o: (o.size, _canonical_key(o.canonical.bits)))
    counts: dict[int, tuple[int, int]] = {}
    for o in orbits:
        sets_count, orbit_count = counts.get(o.size, (0, 0))
        counts[o.size] = (sets_count + o.orbit_length, orbit_count + 1)
    total = sum(o.orbit_length for o in orbits)
    if total != len(sets):
        raise RuntimeError("internal error: orbit lengths do not add up")
    sizes = sorted(counts)
    return ClassificationReport(
        group_name=g.name, group_order=g.order, orbits=orbits,
        counts_by_size=counts,
        min_size=sizes[0] if sizes else None,
        max_size=sizes[-1] if sizes else None)


def canonical_form(g: Group, s: ElementSet, *,
                   auts: list[Automorphism] | None = None) -> ElementSet:
    """Lexicographically least sorted index tuple in the Aut(G)-orbit of s."""
    if auts is None:
        auts = automorphisms(g)
    best = min((_apply_perm(a.perm, s.bits) for a in auts),
               key=_canonical_key)
    return ElementSet(best, g.order)


@dataclass(frozen=True)
class FilledVerdict:
    """Whether every locally maximal product-free set fills the group.

    ``witness`` is the first non-filling set in the kernel's deterministic
    search order, when one exists.
    """

    group_name: str
    group_order: int
    filled: bool
    witness: ElementSet | None
    lmpfs_count: int

    def as_json_dict(self) -> dict:
        return {"group": self.group_name, "order": self.group_order,
                "filled": self.filled,
                "witness": None if self.witness is None else list(self.witness),
                "lmpfs_count": self.lmpfs_count}


def is_filled(g: Group, *, max_order: int | None = None) -> FilledVerdict:
    """Decide the filled property by enumerating all sets and checking each."""
    _check_enumerable(g, max_order)
    masks = _kernel.enumerate_masks(g.order, _flat_table(g))
    witness = None
    for mask in masks:
        s = ElementSet(mask, g.order)
        if not fills(g, s):
            witness = s
            break
    return FilledVerdict(group_name=g.name, group_order=g.order,
                         filled=witness is None, witness=witness,
                         lmpfs_count=len(masks))


def min_lmpfs_size(g: Group, *, max_order: int | None = None) -> int:
    """Smallest cardinality among all locally maximal product-free sets."""
    _check_enumerable(g, max_order)
    masks = _kernel.enumerate_masks(g.order, _flat_table(g))
    if not masks:
        raise ValueError(f"{g.name} has no locally maximal product-free sets")
    return min(m.bit_count() for m in masks)


@dataclass(frozen=True)
class ScanEntry:
    """Per-spec outcome of a filled scan; either a verdict or an error."""

    spec: GroupSpec
    name: str | None
    order: int | None
    verdict: FilledVerdict | None
    error: str | None = None

    def as_json_dict(self) -> dict:
        return {"spec": self.spec.text(), "name": self.name,
                "order": self.order,
                "verdict": None if self.verdict is None
                else self.verdict.as_json_dict(),
                "error": self.error}


def scan_filled(specs: list[GroupSpec], max_order: int = 31,
                *, enumeration_max_order: int | None = None) -> list[ScanEntry]:
    """Filled verdicts for a list of specs, in input order.

    Groups above ``max_order`` are dropped; specs that fail to build are
    recorded as per-entry errors and the scan continues.
    """
    entries = []
    for spec in specs:
        try:
            group = spec.build()
        except Exception as exc:
            entries.append(ScanEntry(spec=spec, name=None, order=None,
                                     verdict=None, error=str(exc)))
            continue
        if group.order > max_order:
            continue
        try:
            verdict = is_filled(group, max_order=enumeration_max_order)
        except CapacityError as exc:
            entries.append(ScanEntry(spec=spec, name=group.name,
                                     order=group.order, verdict=None,
                                     error=str(exc)))
            continue
        entries.append(ScanEntry(spec=spec, name=group.name,
                                 order=group.order, verdict=verdict))
    return entries


def filled_summary(entries: list[ScanEntry]) -> dict[int, list[str]]:
    """Names of filled groups keyed by order, from scan output."""
    summary: dict[int, list[str]] = {}
    for entry in entries:
        if entry.verdict is not None and entry.verdict.filled:
            summary.setdefault(entry.order, []).append(entry.name)
    return {order: sorted(names) for order, names in sorted(summary.items())}
