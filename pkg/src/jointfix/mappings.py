"""Endomaps of a finite poset, families of them, and their composition closure."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field

from .errors import (
    ClosureBudgetExceeded,
    EmptySubset,
    JointfixError,
    MissingAssignment,
    PosetMismatch,
    UnknownLabel,
)
from .poset import Poset, bits, iter_chains

DEFAULT_CLOSURE_BUDGET = 10_000
LITERAL_CONTINUITY_LIMIT = 12


@dataclass(frozen=True)
class MapTable:
    """A total map of a poset's carrier into itself, stored by positions.

    Equality is extensional: two maps are equal when their tables agree;
    the name is metadata.
    """

    poset: Poset = field(compare=False, repr=False)
    table: tuple[int, ...]
    name: str = field(default="f", compare=False)

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __len__(self) -> int:
        return len(self.table)

    def as_labels(self) -> dict[str, str]:
        labels = self.poset.labels
        return {labels[x]: labels[y] for x, y in enumerate(self.table)}

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(x for x, y in enumerate(self.table) if x == y)


def build_map(p: Poset, name: str, assignments: Mapping[str, str]) -> MapTable:
    """Build a :class:`MapTable` from a label-to-label table."""
    for src, dst in assignments.items():
        p.index(src)
        p.index(dst)
    table = []
    for label in p.labels:
        if label not in assignments:
            raise MissingAssignment(name, label)
        table.append(p.index(assignments[label]))
    return MapTable(p, tuple(table), name)


def map_from_function(p: Poset, name: str, fn) -> MapTable:
    """Tabulate ``fn`` (position -> position) over the carrier."""
    return MapTable(p, tuple(p.index(fn(x)) for x in range(len(p))), name)


def identity_map(p: Poset, name: str = "id") -> MapTable:
    return MapTable(p, tuple(range(len(p))), name)


def compose(f: MapTable, g: MapTable) -> MapTable:
    """The map ``x -> f(g(x))``, named ``"f·g"``."""
    if f.poset is not g.poset and f.poset != g.poset:
        raise PosetMismatch(f.name, g.name)
    ft = f.table
    return MapTable(f.poset, tuple(ft[y] for y in g.table), f"{f.name}·{g.name}")


def isotonicity_witness(f: MapTable) -> tuple[int, int] | None:
    """First pair ``x <= y`` (in carrier order) with ``f(x) </= f(y)``."""
    p = f.poset
    t = f.table
    for x in range(len(p)):
        for y in bits(p.up_mask(x)):
            if not p.up_mask(t[x]) >> t[y] & 1:
                return x, y
    return None


def is_isotone(f: MapTable) -> bool:
    return isotonicity_witness(f) is None


def chain_continuity_violation(f: MapTable, chains: Iterable[int] | None = None) -> int | None:
    """First non-empty chain ``C`` (as a bitmask) with ``f(sup C) != sup f[C]``.

    Checks every chain of the poset unless ``chains`` is given.
    """
    p = f.poset
    t = f.table
    for c in iter_chains(p) if chains is None else chains:
        members = p.elements(c)
        top = p.sup_subset(members)
        image_sup = p.sup_subset({t[w] for w in members})
        if top is None or image_sup is None or t[top] != image_sup:
            return c
    return None


def is_chain_continuous(f: MapTable, literal: bool | None = None) -> bool:
    """Whether ``f`` preserves suprema of non-empty chains.

    On finite posets this is equivalent to isotonicity.  The literal
    all-chains check runs by default for carriers of at most 12 elements.
    """
    if literal is None:
        literal = len(f.poset) <= LITERAL_CONTINUITY_LIMIT
    if not literal:
        return is_isotone(f)
    return chain_continuity_violation(f) is None


@dataclass(frozen=True)
class Family:
    """A non-empty, finite, named collection of maps over one poset."""

    poset: Poset = field(repr=False)
    members: tuple[MapTable, ...]

    def __post_init__(self):
        if not self.members:
            raise EmptySubset("family")
        seen = set()
        for f in self.members:
            if f.poset is not self.poset and f.poset != self.poset:
                raise PosetMismatch(self.members[0].name, f.name)
            if len(f.table) != len(self.poset):
                raise PosetMismatch(self.members[0].name, f.name)
            if f.name in seen:
                raise JointfixError(f"duplicate map name {f.name!r} in family")
            seen.add(f.name)

    @classmethod
    def of(cls, *maps: MapTable) -> Family:
        if not maps:
            raise EmptySubset("family")
        return cls(maps[0].poset, tuple(maps))

    def __iter__(self) -> Iterator[MapTable]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(f.name for f in self.members)

    def by_name(self, name: str) -> MapTable:
        for f in self.members:
            if f.name == name:
                return f
        raise UnknownLabel(name)

    def subfamily(self, names: Sequence[str]) -> Family:
        return Family(self.poset, tuple(self.by_name(n) for n in names))

    def permuted(self, order: Sequence[int]) -> Family:
        return Family(self.poset, tuple(self.members[i] for i in order))


@dataclass(frozen=True)
class CommutativityCheck:
    holds: bool
    pair: tuple[str, str] | None = None
    element: int | None = None

    def __bool__(self) -> bool:
        return self.holds


def is_commutative_family(family: Family) -> CommutativityCheck:
    """Check ``fg = gf`` for every pair; the result is falsy on failure.

    On failure the first violating pair (declaration order) and the first
    element where the two composites differ are recorded.
    """
    members = family.members
    for i, f in enumerate(members):
        for g in members[i + 1:]:
            for x in range(len(family.poset)):
                if f.table[g.table[x]] != g.table[f.table[x]]:
                    return CommutativityCheck(False, (f.name, g.name), x)
    return CommutativityCheck(True)


@dataclass(frozen=True)
class ClosureSet:
    """All distinct maps obtained as finite compositions of a family.

    ``words[i]`` is the shortest (then lexicographically smallest) sequence of
    generator names whose composition gives ``maps[i]``.
    """

    family: Family = field(repr=False)
    maps: tuple[MapTable, ...]
    words: tuple[tuple[str, ...], ...]

    def __len__(self) -> int:
        return len(self.maps)

    def __iter__(self) -> Iterator[MapTable]:
        return iter(self.maps)

    def tables(self) -> set[tuple[int, ...]]:
        return {m.table for m in self.maps}

    def as_family(self) -> Family:
        return Family(self.family.poset, self.maps)


def iteration_closure(family: Family, max_size: int = DEFAULT_CLOSURE_BUDGET) -> ClosureSet:
    """Close ``family`` under composition, breadth-first by word length."""
    if max_size < len(family):
        raise ValueError("max_size must be at least the family size")
    p = family.poset
    gens = family.members

    found: dict[tuple[int, ...], tuple[str, ...]] = {}
    frontier: dict[tuple[int, ...], tuple[str, ...]] = {}
    for g in gens:
        word = (g.name,)
        if g.table not in frontier or word < frontier[g.table]:
            frontier[g.table] = word
    found.update(frontier)
    if len(found) > max_size:
        raise ClosureBudgetExceeded(max_size)

    while frontier:
        level: dict[tuple[int, ...], tuple[str, ...]] = {}
        for table, word in frontier.items():
            for g in gens:
                gt = g.table
                new = tuple(gt[y] for y in table)
                if new in found:
                    continue
                candidate = (g.name,) + word
                if new not in level or candidate < level[new]:
                    level[new] = candidate
        found.update(level)
        if len(found) > max_size:
            raise ClosureBudgetExceeded(max_size)
        frontier = level

    ordered = sorted(found.items(), key=lambda item: (len(item[1]), item[1]))
    maps = tuple(MapTable(p, table, "·".join(word)) for table, word in ordered)
    return ClosureSet(family, maps, tuple(word for _, word in ordered))
