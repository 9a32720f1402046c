"""Finite partially ordered sets.

A :class:`Poset` stores its order as one bitmask per element: bit ``j`` of
``up[i]`` is set iff ``i <= j``.  Elements are addressed either by their
string label or by their integer position in the carrier (declaration
order).  Every set-valued result is a tuple of positions sorted ascending.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .errors import (
    AntisymmetryViolation,
    DuplicateLabel,
    EmptySubset,
    NotReflexive,
    NotTransitive,
    UnknownElement,
    UnknownLabel,
)


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """An immutable finite poset.

    Build instances with :func:`build_poset`; the constructor trusts its
    input and only derives the down-sets and the extremal elements.
    """

    __slots__ = ("labels", "_index", "_up", "_down", "_full", "bottom", "top")

    def __init__(self, labels: Sequence[str], up: Sequence[int]):
        self.labels: tuple[str, ...] = tuple(labels)
        self._index = {label: i for i, label in enumerate(self.labels)}
        self._up: tuple[int, ...] = tuple(up)
        n = len(self.labels)
        down = [0] * n
        for i, mask in enumerate(self._up):
            for j in bits(mask):
                down[j] |= 1 << i
        self._down: tuple[int, ...] = tuple(down)
        self._full = (1 << n) - 1
        self.bottom: int | None = self._least(self._full)
        self.top: int | None = self._greatest(self._full)

    # -- basics -------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self._up == other._up

    def __hash__(self) -> int:
        return hash((self.labels, self._up))

    def __repr__(self) -> str:
        return f"Poset({list(self.labels)!r}, covers={self.cover_pairs()!r})"

    def index(self, x: int | str) -> int:
        """Resolve a label or a position to a carrier position."""
        if isinstance(x, str):
            try:
                return self._index[x]
            except KeyError:
                raise UnknownLabel(x) from None
        if isinstance(x, int) and not isinstance(x, bool) and 0 <= x < len(self.labels):
            return x
        raise UnknownElement(x)

    def label(self, x: int | str) -> str:
        return self.labels[self.index(x)]

    def label_list(self, elements: Iterable[int]) -> list[str]:
        return [self.labels[i] for i in elements]

    def mask(self, subset: Iterable[int | str]) -> int:
        m = 0
        for x in subset:
            m |= 1 << self.index(x)
        return m

    def elements(self, mask: int) -> tuple[int, ...]:
        return tuple(bits(mask))

    def up_mask(self, x: int) -> int:
        return self._up[x]

    def down_mask(self, x: int) -> int:
        return self._down[x]

    def up_set(self, x: int | str) -> tuple[int, ...]:
        return self.elements(self._up[self.index(x)])

    def down_set(self, x: int | str) -> tuple[int, ...]:
        return self.elements(self._down[self.index(x)])

    # -- order queries ------------------------------------------------------

    def leq(self, a: int | str, b: int | str) -> bool:
        return bool(self._up[self.index(a)] >> self.index(b) & 1)

    def lt(self, a: int | str, b: int | str) -> bool:
        a, b = self.index(a), self.index(b)
        return a != b and bool(self._up[a] >> b & 1)

    def comparable(self, a: int | str, b: int | str) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def upper_bounds(self, subset: Iterable[int | str]) -> int:
        """Mask of all common upper bounds of ``subset`` (everything for the empty set)."""
        ub = self._full
        for x in subset:
            ub &= self._up[self.index(x)]
        return ub

    def lower_bounds(self, subset: Iterable[int | str]) -> int:
        lb = self._full
        for x in subset:
            lb &= self._down[self.index(x)]
        return lb

    def _least(self, mask: int) -> int | None:
        for u in bits(mask):
            if mask & ~self._up[u] == 0:
                return u
        return None

    def _greatest(self, mask: int) -> int | None:
        for u in bits(mask):
            if mask & ~self._down[u] == 0:
                return u
        return None

    def least_of(self, subset: Iterable[int | str]) -> int | None:
        """Least element of ``subset`` itself (its minimum), if any."""
        return self._least(self.mask(subset))

    def greatest_of(self, subset: Iterable[int | str]) -> int | None:
        return self._greatest(self.mask(subset))

    def sup_subset(self, subset: Iterable[int | str]) -> int | None:
        """Least upper bound of ``subset`` in the whole carrier, or ``None``.

        The empty subset has the bottom element as its supremum.
        """
        return self._least(self.upper_bounds(subset))

    def inf_subset(self, subset: Iterable[int | str]) -> int | None:
        return self._greatest(self.lower_bounds(subset))

    def join(self, a: int | str, b: int | str) -> int | None:
        return self.sup_subset((a, b))

    def meet(self, a: int | str, b: int | str) -> int | None:
        return self.inf_subset((a, b))

    def is_chain(self, subset: Iterable[int | str]) -> bool:
        members = [self.index(x) for x in subset]
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                if not (self._up[x] >> y & 1 or self._up[y] >> x & 1):
                    return False
        return True

    def is_directed(self, subset: Iterable[int | str]) -> bool:
        """Non-empty, and every pair has an upper bound inside the subset.

        On finite sets the pairwise condition extends to every finite subset
        by induction.
        """
        members = [self.index(x) for x in subset]
        if not members:
            return False
        inside = self.mask(members)
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                if self._up[x] & self._up[y] & inside == 0:
                    return False
        return True

    # -- global properties --------------------------------------------------

    def is_chain_complete(self) -> bool:
        # A non-empty finite chain has its maximum as supremum, so only the
        # empty chain can fail: that needs a bottom element.
        return self.bottom is not None

    def is_complete_lattice(self) -> bool:
        if self.bottom is None or self.top is None:
            return False
        n = len(self.labels)
        for a in range(n):
            for b in range(a + 1, n):
                if self._least(self._up[a] & self._up[b]) is None:
                    return False
                if self._greatest(self._down[a] & self._down[b]) is None:
                    return False
        return True

    def is_lattice(self) -> bool:
        """Every pair has a join and a meet (no bounds required)."""
        n = len(self.labels)
        for a in range(n):
            for b in range(a + 1, n):
                if self._least(self._up[a] & self._up[b]) is None:
                    return False
                if self._greatest(self._down[a] & self._down[b]) is None:
                    return False
        return True

    def induced_subposet(self, subset: Iterable[int | str]) -> Poset:
        """The subposet on ``subset`` with the restricted order.

        The carrier keeps the parent's relative order.
        """
        members = sorted({self.index(x) for x in subset})
        if not members:
            raise EmptySubset()
        pos = {x: k for k, x in enumerate(members)}
        up = []
        for x in members:
            m = 0
            for y in bits(self._up[x]):
                if y in pos:
                    m |= 1 << pos[y]
            up.append(m)
        return Poset([self.labels[x] for x in members], up)

    # -- derived structure --------------------------------------------------

    def linear_extension(self) -> tuple[int, ...]:
        """Carrier positions sorted so that ``x < y`` puts ``x`` first."""
        return tuple(sorted(range(len(self.labels)), key=lambda x: (self._down[x].bit_count(), x)))

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Covering relation (transitive reduction) as position pairs."""
        covers = []
        for x in range(len(self.labels)):
            strict = self._up[x] & ~(1 << x)
            for y in bits(strict):
                between = strict & self._down[y] & ~(1 << y)
                if between == 0:
                    covers.append((x, y))
        return covers

    def lower_covers(self, x: int) -> tuple[int, ...]:
        return tuple(a for a, b in self.cover_pairs() if b == x)

    def relation_pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(len(self.labels)) for y in bits(self._up[x])]


def build_poset(
    labels: Sequence[str],
    pairs: Iterable[tuple[str, str]],
    mode: str = "covers",
) -> Poset:
    """Validate ``labels``/``pairs`` and build a :class:`Poset`.

    With ``mode="covers"`` the order is the reflexive-transitive closure of
    ``pairs``.  With ``mode="full"`` ``pairs`` must already be the complete
    relation, reflexive pairs included.
    """
    if mode not in ("covers", "full"):
        raise ValueError(f"mode must be 'covers' or 'full', not {mode!r}")
    labels = list(labels)
    if not labels:
        raise EmptySubset("label list")
    index: dict[str, int] = {}
    for label in labels:
        if label in index:
            raise DuplicateLabel(label)
        index[label] = len(index)

    n = len(labels)
    up = [0] * n
    for a, b in pairs:
        for x in (a, b):
            if x not in index:
                raise UnknownLabel(x)
        up[index[a]] |= 1 << index[b]

    if mode == "full":
        for i in range(n):
            if not up[i] >> i & 1:
                raise NotReflexive(labels[i])
        for i in range(n):
            for j in bits(up[i]):
                missing = up[j] & ~up[i]
                if missing:
                    k = (missing & -missing).bit_length() - 1
                    raise NotTransitive(labels[i], labels[j], labels[k])
    else:
        for i in range(n):
            up[i] |= 1 << i
        # Warshall closure on bitmask rows.
        for k in range(n):
            bit = 1 << k
            for i in range(n):
                if up[i] & bit:
                    up[i] |= up[k]

    for i in range(n):
        for j in bits(up[i]):
            if j > i and up[j] >> i & 1:
                raise AntisymmetryViolation(labels[i], labels[j])
    return Poset(labels, up)


# -- exhaustive oracles (small carriers only) ---------------------------------

def iter_chains(p: Poset) -> Iterator[int]:
    """Yield every non-empty chain of ``p`` as a bitmask, each exactly once.

    A chain is grown only by strictly larger elements, so every chain is
    produced once, starting from its minimum.
    """
    stack = []
    for x in range(len(p)):
        stack.append((1 << x, p.up_mask(x) & ~(1 << x)))
        while stack:
            chain, above = stack.pop()
            yield chain
            for y in bits(above):
                stack.append((chain | 1 << y, above & p.up_mask(y) & ~(1 << y)))


def chain_complete_by_enumeration(p: Poset) -> bool:
    """Literal definition: every chain, the empty one included, has a supremum."""
    if p.sup_subset(()) is None:
        return False
    return all(p.sup_subset(p.elements(c)) is not None for c in iter_chains(p))


def complete_lattice_by_enumeration(p: Poset) -> bool:
    """Literal definition: every subset has a supremum and an infimum."""
    for m in range(1 << len(p)):
        members = p.elements(m)
        if p.sup_subset(members) is None or p.inf_subset(members) is None:
            return False
    return True
