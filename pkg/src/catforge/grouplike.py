"""Grouplike structure: a group extended by an ordered chain of idempotents.

A grouplike monoid of shape (group, k) is built by adjoining k fresh
idempotents e_1..e_k, each a two-sided identity for everything added before
it.  The chain order condition is

    e_i * e_j == e_i  and  e_j * e_i == e_i   iff   i <= j,

with the group identity e_0 sitting below the whole chain, and the monoid
identity at the top (e_k when k >= 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAGroup
from .monoids import Monoid, MulTable, is_group, validate_monoid


@dataclass(frozen=True)
class GrouplikeStructure:
    """Partition of a monoid into group part and ordered idempotent chain.

    ``chain`` lists e_1..e_k bottom-up; empty when the monoid is a group.
    """

    monoid: Monoid
    group_elements: tuple[int, ...]
    group_identity: int
    chain: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.chain)

    @property
    def group_order(self) -> int:
        return len(self.group_elements)

    def full_chain(self) -> tuple[int, ...]:
        """All idempotents bottom-up, group identity first."""
        return (self.group_identity,) + self.chain

    def chain_element(self, i: int) -> int:
        """Element playing e_i: the group identity for i = 0, else chain[i-1]."""
        return self.group_identity if i == 0 else self.chain[i - 1]

    def level_elements(self, i: int) -> tuple[int, ...]:
        """Elements of the sub-monoid at chain level i (group plus e_1..e_i)."""
        return self.group_elements + self.chain[:i]

    def group_monoid(self) -> Monoid:
        """The group part as a standalone monoid on its own index space."""
        index = {g: i for i, g in enumerate(self.group_elements)}
        rows = tuple(
            tuple(index[self.monoid.mul(a, b)] for b in self.group_elements)
            for a in self.group_elements
        )
        return Monoid(MulTable(rows), index[self.group_identity])

    def to_json_dict(self) -> dict:
        data = self.monoid.to_json_dict()
        data.update(
            {
                "group": list(self.group_elements),
                "group_identity": self.group_identity,
                "chain": list(self.chain),
            }
        )
        return data


def build_grouplike(g: Monoid, k: int):
    """Extend a group by k successive fresh two-sided identities.

    Returns (monoid, structure); the new elements take indices n..n+k-1 in
    adjunction order, so the monoid identity is the last index when k >= 1.
    """
    ok, _ = is_group(g)
    if not ok:
        raise NotAGroup()
    if k < 0:
        raise ValueError("chain length must be nonnegative")
    n = g.n
    total = n + k
    rows = [[0] * total for _ in range(total)]
    for a in range(total):
        for b in range(total):
            if a < n and b < n:
                rows[a][b] = g.mul(a, b)
            elif a < n:
                rows[a][b] = a  # fresh idempotent acts as identity on old part
            elif b < n:
                rows[a][b] = b
            else:
                rows[a][b] = min(a, b)  # lower chain element absorbs
    identity = total - 1 if k >= 1 else g.identity
    monoid = validate_monoid(MulTable(tuple(tuple(r) for r in rows)), identity)
    structure = GrouplikeStructure(
        monoid=monoid,
        group_elements=tuple(range(n)),
        group_identity=g.identity,
        chain=tuple(range(n, total)),
    )
    return monoid, structure


def idempotents(m: Monoid) -> list[int]:
    return [x for x in m.elements() if m.mul(x, x) == x]


def verify_ord(chain_elements, table: MulTable):
    """Check the chain order biconditional on an ordered idempotent list.

    Positions are 1-based in the returned witness, matching the chain
    indexing e_1..e_k.  Returns (True, None) or (False, (i, j)).
    """
    k = len(chain_elements)
    for i in range(k):
        for j in range(k):
            ei, ej = chain_elements[i], chain_elements[j]
            absorbs = table.mul(ei, ej) == ei and table.mul(ej, ei) == ei
            if absorbs != (i <= j):
                return False, (i + 1, j + 1)
    return True, None


def _chain_sorted(m: Monoid, elems):
    """Sort idempotents by absorption (bottom first); None if not a chain."""
    for e in elems:
        for f in elems:
            ef, fe = m.mul(e, f), m.mul(f, e)
            if ef != fe or ef not in (e, f):
                return None
    # the bottom element absorbs everything, so it has the largest count
    return sorted(elems, key=lambda e: -sum(1 for f in elems if m.mul(e, f) == e))


def detect_grouplike(m: Monoid) -> GrouplikeStructure | None:
    """Decompose a monoid as group + idempotent chain, or return None.

    The group part is recovered as the elements invertible relative to the
    minimal idempotent; it is maximal by construction since anything outside
    it must be a chain idempotent.
    """
    idem = idempotents(m)
    ordered = _chain_sorted(m, idem)
    if ordered is None:
        return None
    bottom = ordered[0]
    group = [
        x
        for x in m.elements()
        if m.mul(bottom, x) == x == m.mul(x, bottom)
        and any(m.mul(x, y) == bottom == m.mul(y, x) for y in m.elements())
    ]
    group_set = set(group)
    if bottom not in group_set:
        return None
    for a in group:
        for b in group:
            if m.mul(a, b) not in group_set:
                return None
    sub = {g: i for i, g in enumerate(group)}
    rows = tuple(tuple(sub[m.mul(a, b)] for b in group) for a in group)
    try:
        sub_monoid = validate_monoid(MulTable(rows), sub[bottom])
    except Exception:
        return None
    ok, _ = is_group(sub_monoid)
    if not ok:
        return None
    rest = [x for x in m.elements() if x not in group_set]
    if set(rest) != set(ordered[1:]):
        return None
    chain = [e for e in ordered if e in set(rest)]
    # each chain element must be a two-sided identity for everything below it
    below = list(group)
    for e in chain:
        for x in below:
            if m.mul(e, x) != x or m.mul(x, e) != x:
                return None
        below.append(e)
    expected_identity = chain[-1] if chain else bottom
    if m.identity != expected_identity:
        return None
    ok, _ = verify_ord(chain, m.table)
    if not ok:
        return None
    return GrouplikeStructure(
        monoid=m,
        group_elements=tuple(group),
        group_identity=bottom,
        chain=tuple(chain),
    )
