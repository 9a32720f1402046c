"""Independent checks of the fixed-point engine on concrete instances.

:func:`brute_force_fixed_points` scans the carrier with table lookups only;
it never touches suprema, orbits or closures, so it can arbitrate the
engine's answers.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from . import engine
from .errors import ClosureBudgetExceeded, CycleDetected, NoSupremum
from .generators import random_isotone_map, random_poset
from .mappings import Family, is_commutative_family, is_isotone, iteration_closure
from .poset import Poset
from .rng import SplitMix64

CLAIMS = (
    "tarski-i",
    "markowsky-ii",
    "approx-iii-eq1",
    "approx-iii-eq2",
    "kleene-eq3",
    "seeds-eq4",
    "ext-equality-eq5",
    "orbit-directed",
)

# Hypotheses as stated (commutative family) versus the per-map reading that
# drops commutativity; structure claims are reported under both.
AS_STATED = "as-stated"
WITHOUT_COMMUTATIVITY = "without-commutativity"


@dataclass(frozen=True)
class Verdict:
    claim: str
    holds: bool
    preconds_met: bool
    witness: str | None = None
    note: str | None = None
    reading: str = AS_STATED

    def as_dict(self) -> dict:
        return asdict(self)


def brute_force_fixed_points(family: Family) -> tuple[int, ...]:
    """``{x : f(x) = x for every f}`` by direct scan."""
    return tuple(
        x for x in range(len(family.poset))
        if all(f.table[x] == x for f in family)
    )


def _vacuous(claim: str, reason: str, reading: str = AS_STATED) -> Verdict:
    return Verdict(claim, True, False, None, f"vacuous: {reason}", reading)


def _labels(p: Poset, xs) -> str:
    return "{" + ", ".join(p.labels[x] for x in xs) + "}"


# -- structure claims -----------------------------------------------------------

def _structure_failure(p: Poset, fix: tuple[int, ...], lattice: bool) -> str | None:
    if not fix:
        return "joint fixed point set is empty"
    sub = p.induced_subposet(fix)
    if sub.bottom is None:
        return f"induced order on {_labels(p, fix)} has no least element"
    if lattice and not sub.is_complete_lattice():
        return f"induced order on {_labels(p, fix)} is not a complete lattice"
    if not sub.is_chain_complete():
        return f"induced order on {_labels(p, fix)} is not chain-complete"
    return None


def verify_structure(family: Family) -> list[Verdict]:
    """Check the complete-lattice and chain-complete structure of the fix set.

    Each claim is reported twice: once under the hypotheses as stated
    (isotone and commutative) and once with commutativity dropped.
    """
    p = family.poset
    fix = brute_force_fixed_points(family)
    isotone = all(is_isotone(f) for f in family)
    commutative = bool(is_commutative_family(family))

    verdicts = []
    for claim, base_ok, base_reason, lattice in (
        ("tarski-i", p.is_complete_lattice(), "poset is not a complete lattice", True),
        ("markowsky-ii", p.is_chain_complete(), "poset is not chain-complete", False),
    ):
        for reading, need_comm in ((AS_STATED, True), (WITHOUT_COMMUTATIVITY, False)):
            if not base_ok:
                verdicts.append(_vacuous(claim, base_reason, reading))
            elif not isotone:
                verdicts.append(_vacuous(claim, "family is not isotone", reading))
            elif need_comm and not commutative:
                verdicts.append(_vacuous(claim, "family is not commutative", reading))
            else:
                failure = _structure_failure(p, fix, lattice)
                verdicts.append(Verdict(claim, failure is None, True, failure, None, reading))
    return verdicts


# -- approximation claims -------------------------------------------------------

def _eq1_rhs(family: Family) -> tuple[set[int], list[str]]:
    """Orbit suprema over the extensivity domain, plus seeds lacking one."""
    p = family.poset
    sups, undefined = set(), []
    for x in engine.extensivity_domain(family):
        try:
            sups.add(engine.orbit(family, x).supremum)
        except NoSupremum:
            undefined.append(p.labels[x])
    return sups, undefined


def _compare_sets(p: Poset, computed: set[int], expected: set[int]) -> str | None:
    if computed == expected:
        return None
    extra = sorted(computed - expected)
    missing = sorted(expected - computed)
    parts = []
    if extra:
        parts.append(f"not fixed: {_labels(p, extra)}")
    if missing:
        parts.append(f"missed: {_labels(p, missing)}")
    return "; ".join(parts)


def verify_approximation(family: Family) -> list[Verdict]:
    """Compare the orbit-supremum description of the fix set with brute force.

    When the hypotheses fail the equalities are still evaluated where they
    make sense, with ``preconds_met=False``, so that counterexamples to the
    weakened statements surface as ``holds=False`` verdicts.
    """
    p = family.poset
    brute = set(brute_force_fixed_points(family))
    met = True
    reasons = []
    if not p.is_chain_complete():
        met = False
        reasons.append("poset is not chain-complete")
    if not all(is_isotone(f) for f in family):
        met = False
        reasons.append("family is not isotone")
    if not is_commutative_family(family):
        met = False
        reasons.append("family is not commutative")
    note = None if met else "hypotheses unmet: " + ", ".join(reasons)

    verdicts = []

    # Fixed set as orbit suprema.
    rhs, undefined = _eq1_rhs(family)
    failure = _compare_sets(p, rhs, brute)
    if undefined:
        failure = (failure + "; " if failure else "") + f"no orbit supremum for {undefined}"
    verdicts.append(Verdict("approx-iii-eq1", failure is None, met, failure, note))

    # Least fixed point from the bottom orbit.
    if p.bottom is None:
        verdicts.append(_vacuous("approx-iii-eq2", "no least element"))
    else:
        least_brute = p.least_of(brute) if brute else None
        try:
            least = engine.orbit(family, p.bottom).supremum
        except NoSupremum:
            least = None
        if least is not None and least == least_brute:
            failure = None
        elif least_brute is None:
            failure = "brute-force fix set has no least element"
        elif least is None:
            failure = "orbit of bottom has no supremum"
        else:
            failure = f"bottom orbit gives {p.labels[least]}, least fixed point is {p.labels[least_brute]}"
        verdicts.append(Verdict("approx-iii-eq2", failure is None, met, failure, note))

    # Extensivity domain is unchanged by closing the family under composition.
    try:
        closure = iteration_closure(family)
    except ClosureBudgetExceeded as exc:
        verdicts.append(Verdict("ext-equality-eq5", True, False, None, f"skipped: {exc}"))
    else:
        ext = set(engine.extensivity_domain(family))
        ext_closed = set(engine.extensivity_domain(closure.as_family()))
        failure = _compare_sets(p, ext_closed, ext)
        verdicts.append(Verdict("ext-equality-eq5", failure is None, met, failure, note))

    # Orbits of extensive seeds are directed.
    failure = None
    for x in engine.extensivity_domain(family):
        try:
            members = engine.orbit(family, x).orbit
        except NoSupremum as exc:
            members = tuple(p.index(label) for label in exc.orbit)
        if not p.is_directed(members):
            failure = f"orbit of {p.labels[x]} = {_labels(p, members)} is not directed"
            break
    verdicts.append(Verdict("orbit-directed", failure is None, met, failure, note))

    if len(family) == 1:
        verdicts.extend(_verify_single(family, brute, met, note))
    return verdicts


def _verify_single(family: Family, brute: set[int], met: bool, note: str | None) -> list[Verdict]:
    p = family.poset
    f = family.members[0]
    out = []
    if p.bottom is None:
        out.append(_vacuous("kleene-eq3", "no least element"))
    else:
        least_brute = p.least_of(brute) if brute else None
        try:
            got = engine.kleene_iterate(f, p.bottom, unsafe=True).fixpoint
            failure = None if got == least_brute else (
                f"Kleene limit {p.labels[got]} is not the least fixed point"
            )
        except CycleDetected as exc:
            failure = str(exc)
        out.append(Verdict("kleene-eq3", failure is None, met, failure, note))
    try:
        seeds = set(engine.fixed_points_single(f, unsafe=True).fix_set)
        failure = _compare_sets(p, seeds, brute)
    except CycleDetected as exc:
        failure = str(exc)
    out.append(Verdict("seeds-eq4", failure is None, met, failure, note))
    return out


def verify_all(family: Family) -> list[Verdict]:
    return verify_structure(family) + verify_approximation(family)


def failed(verdicts: list[Verdict]) -> list[Verdict]:
    """Verdicts that assert a claim under its hypotheses and find it false."""
    return [v for v in verdicts if v.preconds_met and not v.holds and v.reading == AS_STATED]


# -- counterexample search --------------------------------------------------------

def search_eq1_counterexample(rng_seed: int, *, max_size: int = 6, attempts: int = 10_000):
    """Randomly look for an isotone, non-commutative family whose orbit
    suprema differ from its joint fixed points.

    Returns ``(family, verdict)`` for the first hit, or ``None``.
    """
    rng = SplitMix64(rng_seed)
    for _ in range(attempts):
        n = 2 + rng.below(max_size - 1)
        p = random_poset(n, rng.next_u64())
        k = 2 + rng.below(2)
        maps = [random_isotone_map(p, rng, name=f"f{i}") for i in range(k)]
        family = Family(p, tuple(maps))
        if is_commutative_family(family):
            continue
        verdict = next(v for v in verify_approximation(family) if v.claim == "approx-iii-eq1")
        if not verdict.holds:
            return family, verdict
    return None
