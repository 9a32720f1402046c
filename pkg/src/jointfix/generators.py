"""Standard posets and lattices, and random families with known properties."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations

from .errors import BadSpec, NotALattice
from .mappings import Family, MapTable, compose
from .poset import Poset, bits, build_poset
from .rng import ALGORITHM, SplitMix64

KINDS = (
    "chain",
    "antichain-plus-bottom",
    "powerset",
    "divisor",
    "product",
    "diamond-M3",
    "pentagon-N5",
    "random",
)
STRATEGIES = ("powers", "join-translations")
MAX_CARRIER = 64
DEFAULT_DENSITY = 0.3


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    ``n`` is the main size parameter (chain length, atom count, powerset
    base size, the integer whose divisors are taken, random carrier size);
    ``m`` is the second factor of ``product`` (``chain(n) x chain(m)``).
    """

    kind: str
    n: int = 0
    m: int = 0
    rng_seed: int = 0
    density: float = DEFAULT_DENSITY

    def as_dict(self) -> dict:
        return asdict(self)


def _carrier_size(spec: GenSpec) -> int:
    k, n, m = spec.kind, spec.n, spec.m
    if k == "chain":
        return n
    if k == "antichain-plus-bottom":
        return n + 1
    if k == "powerset":
        return 1 << n if 0 <= n < 7 else MAX_CARRIER + 1
    if k == "divisor":
        return len(_divisors(n)) if 1 <= n <= 10**9 else MAX_CARRIER + 1
    if k == "product":
        return n * m
    if k in ("diamond-M3", "pentagon-N5"):
        return 5
    if k == "random":
        return n
    raise BadSpec(f"unknown poset kind {k!r}; expected one of {', '.join(KINDS)}")


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _subset_label(mask: int) -> str:
    return "{" + ",".join(str(i + 1) for i in bits(mask)) + "}"


def random_poset(n: int, rng_seed: int, density: float = DEFAULT_DENSITY) -> Poset:
    """Random DAG on ``n - 1`` points, transitively closed, below an adjoined bottom.

    Labels are ``"0"`` (the bottom) through ``str(n - 1)``; edge ``i -> j``
    for ``1 <= i < j`` is kept with probability ``density``.
    """
    if n < 1:
        raise BadSpec("random poset needs n >= 1")
    rng = SplitMix64(rng_seed)
    labels = [str(i) for i in range(n)]
    covers = [("0", str(i)) for i in range(1, n)]
    for i in range(1, n):
        for j in range(i + 1, n):
            if rng.random() < density:
                covers.append((str(i), str(j)))
    return build_poset(labels, covers)


def make_standard_poset(spec: GenSpec) -> Poset:
    size = _carrier_size(spec)
    if not 1 <= size <= MAX_CARRIER:
        raise BadSpec(f"{spec.kind} with n={spec.n}, m={spec.m} has {size} elements; "
                      f"allowed range is 1..{MAX_CARRIER}")
    k, n, m = spec.kind, spec.n, spec.m
    if k == "chain":
        labels = [str(i) for i in range(n)]
        return build_poset(labels, zip(labels, labels[1:]))
    if k == "antichain-plus-bottom":
        labels = ["bot"] + [f"a{i}" for i in range(1, n + 1)]
        return build_poset(labels, [("bot", a) for a in labels[1:]])
    if k == "powerset":
        masks = range(1 << n)
        labels = [_subset_label(s) for s in masks]
        covers = [(_subset_label(s), _subset_label(s | 1 << i))
                  for s in masks for i in range(n) if not s >> i & 1]
        return build_poset(labels, covers)
    if k == "divisor":
        divs = _divisors(n)
        pairs = [(str(a), str(b)) for a in divs for b in divs if b % a == 0]
        return build_poset([str(d) for d in divs], pairs, mode="full")
    if k == "product":
        labels = [f"({i},{j})" for i in range(n) for j in range(m)]
        covers = [(f"({i},{j})", f"({i + 1},{j})") for i in range(n - 1) for j in range(m)]
        covers += [(f"({i},{j})", f"({i},{j + 1})") for i in range(n) for j in range(m - 1)]
        return build_poset(labels, covers)
    if k == "diamond-M3":
        return build_poset(["0", "a", "b", "c", "1"],
                           [("0", "a"), ("0", "b"), ("0", "c"),
                            ("a", "1"), ("b", "1"), ("c", "1")])
    if k == "pentagon-N5":
        return build_poset(["0", "a", "b", "c", "1"],
                           [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
    return random_poset(n, spec.rng_seed, spec.density)


# -- maps -----------------------------------------------------------------------

def random_isotone_map(p: Poset, rng: SplitMix64, name: str = "f", max_restarts: int = 1000) -> MapTable:
    """Draw an isotone map by assigning images along a linear extension.

    Each image is drawn uniformly from the common upper bounds of the images
    already given to the element's lower covers (in a lattice: the up-set of
    their join).  When those images have no common upper bound the draw
    restarts; after ``max_restarts`` a constant map is returned.
    """
    order = p.linear_extension()
    covers: dict[int, list[int]] = {x: [] for x in order}
    for a, b in p.cover_pairs():
        covers[b].append(a)
    full = (1 << len(p)) - 1
    for _ in range(max_restarts):
        table = [0] * len(p)
        for x in order:
            allowed = full
            for y in covers[x]:
                allowed &= p.up_mask(table[y])
            if not allowed:
                break
            table[x] = p.elements(allowed)[rng.below(allowed.bit_count())]
        else:
            return MapTable(p, tuple(table), name)
    c = rng.below(len(p))
    return MapTable(p, (c,) * len(p), name)


def power_family(f: MapTable, count: int) -> Family:
    """``{f, f^2, ..., f^count}`` with repeated tables dropped."""
    if count < 1:
        raise BadSpec("count must be at least 1")
    members = [f]
    seen = {f.table}
    g = f
    for k in range(2, count + 1):
        g = compose(f, g)
        if g.table not in seen:
            seen.add(g.table)
            members.append(MapTable(f.poset, g.table, f"{f.name}^{k}"))
    return Family(f.poset, tuple(members))


def _require_joins(p: Poset) -> None:
    for a, b in combinations(range(len(p)), 2):
        if p.join(a, b) is None:
            raise NotALattice(p.labels[a], p.labels[b])


def join_translation_family(p: Poset, subset) -> Family:
    """``{x -> x v a : a in subset}``; fixed points form the up-set of ``sup subset``."""
    elements = []
    for a in subset:
        a = p.index(a)
        if a not in elements:
            elements.append(a)
    if not elements:
        raise BadSpec("join translations need a non-empty subset")
    _require_joins(p)
    members = tuple(
        MapTable(p, tuple(p.join(x, a) for x in range(len(p))), f"join_{p.labels[a]}")
        for a in elements
    )
    return Family(p, members)


def random_commuting_family(p: Poset, strategy: str, count: int, rng_seed: int) -> Family:
    """A commutative family of isotone maps, reproducible from ``rng_seed``."""
    if count < 1:
        raise BadSpec("count must be at least 1")
    rng = SplitMix64(rng_seed)
    if strategy == "powers":
        return power_family(random_isotone_map(p, rng, "f"), count)
    if strategy == "join-translations":
        _require_joins(p)
        return join_translation_family(p, [rng.below(len(p)) for _ in range(count)])
    raise BadSpec(f"unknown strategy {strategy!r}; expected one of {', '.join(STRATEGIES)}")


def make_instance(spec: GenSpec, strategy: str = "powers", count: int = 2) -> tuple[Poset, Family, dict]:
    """Poset, family and provenance metadata for one generated instance.

    The poset of ``random`` kind uses ``rng_seed`` directly; the family is
    drawn from the first output of a generator seeded with ``rng_seed``.
    """
    p = make_standard_poset(spec)
    family_seed = SplitMix64(spec.rng_seed).next_u64()
    family = random_commuting_family(p, strategy, count, family_seed)
    meta = {
        "generator": {**spec.as_dict(), "strategy": strategy, "count": count},
        "rng": ALGORITHM,
    }
    return p, family, meta
