"""Joint fixed points of commutative isotone families on finite posets.

For a finite poset with a bottom element and a commutative family ``F`` of
isotone maps, every joint fixed point is the supremum of the orbit
``{phi(x) : phi a finite composition of members of F}`` of some seed ``x``
in the extensivity domain ``{x : x <= f(x) for all f in F}``, and every such
supremum is a joint fixed point.  The orbit of the bottom element yields the
least joint fixed point.  For a single map this reduces to Kleene iteration.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    CycleDetected,
    NoSupremum,
    PreconditionViolated,
    SweepBudgetExceeded,
)
from .mappings import Family, MapTable, is_commutative_family, isotonicity_witness
from .poset import Poset


class Method(str, Enum):
    EQ1_CLOSURE = "eq1-closure"
    EQ2_BOTTOM = "eq2-bottom"
    EQ3_KLEENE = "eq3-kleene"
    EQ4_SEEDS = "eq4-seeds"
    ROUND_ROBIN = "round-robin"
    BRUTE_FORCE = "brute-force"


@dataclass(frozen=True)
class OrbitResult:
    seed: int
    orbit: tuple[int, ...] | None
    supremum: int
    applications: int


@dataclass
class FixReport:
    fix_set: tuple[int, ...]
    least: int | None
    method: Method
    per_seed: list[OrbitResult] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    trace: tuple[int, ...] | None = None

    @property
    def fixpoint(self) -> int | None:
        """The single computed fixed point of a Kleene run."""
        return self.least


# -- preconditions ------------------------------------------------------------

def check_chain_complete(p: Poset) -> None:
    if not p.is_chain_complete():
        raise PreconditionViolated("not-chain-complete", {"reason": "no least element"})


def check_isotone(f: MapTable) -> None:
    w = isotonicity_witness(f)
    if w is not None:
        x, y = w
        labels = f.poset.labels
        raise PreconditionViolated("not-isotone", {
            "map": f.name,
            "pair": [labels[x], labels[y]],
            "images": [labels[f.table[x]], labels[f.table[y]]],
        })


def check_commutative(family: Family) -> None:
    result = is_commutative_family(family)
    if not result:
        raise PreconditionViolated("not-commutative", {
            "pair": list(result.pair),
            "element": family.poset.labels[result.element],
        })


def check_preconditions(family: Family) -> None:
    """Raise :class:`PreconditionViolated` unless the theorem's hypotheses hold."""
    check_chain_complete(family.poset)
    for f in family:
        check_isotone(f)
    check_commutative(family)


# -- orbits -------------------------------------------------------------------

def extensivity_domain(family: Family) -> tuple[int, ...]:
    """All ``x`` with ``x <= f(x)`` for every member ``f``."""
    p = family.poset
    return tuple(
        x for x in range(len(p))
        if all(p.up_mask(x) >> f.table[x] & 1 for f in family)
    )


def orbit(family: Family, x: int | str) -> OrbitResult:
    """Images of ``x`` under every finite composition of the family.

    Computed as reachability from ``{f(x)}`` under the generators, which
    visits the same set as applying every member of the composition closure.
    ``x`` itself belongs to the orbit only if some composition fixes it.
    """
    p = family.poset
    x = p.index(x)
    tables = [f.table for f in family]
    seen: set[int] = set()
    queue: deque[int] = deque()
    applications = 0
    for t in tables:
        applications += 1
        y = t[x]
        if y not in seen:
            seen.add(y)
            queue.append(y)
    while queue:
        y = queue.popleft()
        for t in tables:
            applications += 1
            z = t[y]
            if z not in seen:
                seen.add(z)
                queue.append(z)
    members = tuple(sorted(seen))
    top = p.sup_subset(members)
    if top is None:
        raise NoSupremum(p.labels[x], p.label_list(members))
    return OrbitResult(x, members, top, applications)


def _least_of_set(p: Poset, elements: tuple[int, ...]) -> int | None:
    return p.least_of(elements) if elements else None


def joint_fixed_points(
    family: Family,
    *,
    strategy: str = "closure",
    unsafe: bool = False,
) -> FixReport:
    """Every joint fixed point, as the orbit suprema of the extensive seeds.

    ``strategy="round-robin"`` replaces each orbit supremum by
    :func:`round_robin_solve`.  With ``unsafe=True`` the hypotheses are not
    checked and the result is best-effort.
    """
    if strategy not in ("closure", "round-robin"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if not unsafe:
        check_preconditions(family)
    p = family.poset
    seeds = extensivity_domain(family)
    per_seed = []
    for x in seeds:
        if strategy == "closure":
            per_seed.append(orbit(family, x))
        else:
            top, sweeps = _round_robin(family, x)
            per_seed.append(OrbitResult(x, None, top, sweeps * len(family)))
    fix_set = tuple(sorted({r.supremum for r in per_seed}))

    least = None
    if p.bottom is not None:
        least = next(r.supremum for r in per_seed if r.seed == p.bottom)
        if unsafe and _least_of_set(p, fix_set) != least:
            least = None
    method = Method.EQ1_CLOSURE if strategy == "closure" else Method.ROUND_ROBIN
    stats = {
        "seeds": len(seeds),
        "applications": sum(r.applications for r in per_seed),
        "distinct_fixed_points": len(fix_set),
    }
    return FixReport(fix_set, least, method, per_seed, stats)


def least_joint_fixed_point(family: Family, *, unsafe: bool = False) -> int:
    """Supremum of the orbit of the bottom element."""
    if not unsafe:
        check_preconditions(family)
    p = family.poset
    if p.bottom is None:
        raise PreconditionViolated("not-chain-complete", {"reason": "no least element"})
    return orbit(family, p.bottom).supremum


# -- single maps ----------------------------------------------------------------

def kleene_iterate(f: MapTable, start: int | str | None = None, *, unsafe: bool = False) -> FixReport:
    """Iterate ``x, f(x), f(f(x)), ...`` from ``start`` (default: bottom) until stable."""
    p = f.poset
    if start is None:
        check_chain_complete(p)
        x = p.bottom
    else:
        x = p.index(start)
    if not unsafe:
        check_isotone(f)
        if not p.leq(x, f.table[x]):
            raise PreconditionViolated("start-not-extensive", {
                "start": p.labels[x], "image": p.labels[f.table[x]],
            })
    trace = [x]
    position = {x: 0}
    while True:
        y = f.table[x]
        if y == x:
            break
        if y in position:
            raise CycleDetected(p.label_list(trace[position[y]:]))
        position[y] = len(trace)
        trace.append(y)
        x = y
    steps = len(trace) - 1
    return FixReport(
        fix_set=(x,),
        least=x,
        method=Method.EQ3_KLEENE,
        per_seed=[OrbitResult(trace[0], tuple(sorted(trace)), x, steps + 1)],
        stats={"steps": steps},
        trace=tuple(trace),
    )


def fixed_points_single(f: MapTable, *, unsafe: bool = False) -> FixReport:
    """All fixed points of one map, as Kleene limits from every ``x <= f(x)``."""
    p = f.poset
    if not unsafe:
        check_chain_complete(p)
        check_isotone(f)
    per_seed = []
    for x in range(len(p)):
        if p.leq(x, f.table[x]):
            run = kleene_iterate(f, x, unsafe=True)
            per_seed.append(run.per_seed[0])
    fix_set = tuple(sorted({r.supremum for r in per_seed}))
    return FixReport(
        fix_set=fix_set,
        least=_least_of_set(p, fix_set),
        method=Method.EQ4_SEEDS,
        per_seed=per_seed,
        stats={"seeds": len(per_seed), "applications": sum(r.applications for r in per_seed)},
    )


# -- chaotic iteration --------------------------------------------------------------

def _round_robin(family: Family, x: int) -> tuple[int, int]:
    budget = len(family.poset) * len(family) + 1
    tables = [f.table for f in family]
    for sweep in range(1, budget + 1):
        changed = False
        for t in tables:
            y = t[x]
            if y != x:
                x = y
                changed = True
        if not changed:
            return x, sweep
    raise SweepBudgetExceeded(budget)


def round_robin_solve(family: Family, x: int | str, *, unsafe: bool = False) -> int:
    """Apply the members in declaration order, sweep after sweep, until nothing changes."""
    p = family.poset
    x = p.index(x)
    if not unsafe:
        check_preconditions(family)
        if x not in extensivity_domain(family):
            raise PreconditionViolated("seed-not-extensive", {"seed": p.labels[x]})
    return _round_robin(family, x)[0]
