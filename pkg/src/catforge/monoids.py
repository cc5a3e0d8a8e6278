"""Multiplication tables, monoid validation, canonical forms and enumeration.

Elements are always 0-based integer indices into a square table.  Canonical
forms relabel the identity to index 0 and minimise the flattened table
lexicographically over all remaining relabelings, so two monoids are
isomorphic exactly when their keys are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from . import _kernels
from .errors import NotAGroup, NotAssociative, NotIdentity, OrderTooLarge

ENUMERATION_MAX_ORDER = 5


@dataclass(frozen=True)
class MulTable:
    """Square composition table; entries[i][j] is the product i*j."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise ValueError("table is not square")
            for v in row:
                if not 0 <= v < n:
                    raise ValueError(f"entry {v} out of range for order {n}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def mul(self, a: int, b: int) -> int:
        return self.entries[a][b]

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.entries for v in row)


@dataclass(frozen=True)
class Monoid:
    """Validated associative table with a two-sided identity."""

    table: MulTable
    identity: int

    @property
    def n(self) -> int:
        return self.table.n

    def mul(self, a: int, b: int) -> int:
        return self.table.entries[a][b]

    def elements(self) -> range:
        return range(self.n)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "identity": self.identity,
            "table": [list(row) for row in self.table.entries],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "Monoid":
        table = MulTable(tuple(tuple(row) for row in data["table"]))
        if table.n != data["n"]:
            raise ValueError("declared order does not match table size")
        return validate_monoid(table, data["identity"])


@dataclass(frozen=True, order=True)
class IsoClassKey:
    """Relabel-invariant key: identity at 0, flattened table lex-minimal."""

    canonical: tuple[int, ...]

    @property
    def n(self) -> int:
        return int(round(len(self.canonical) ** 0.5))


def validate_monoid(table: MulTable, identity: int) -> Monoid:
    """Check associativity and the two-sided identity, or raise with a witness."""
    n = table.n
    if not 0 <= identity < n:
        raise NotIdentity(identity, None)
    for x in range(n):
        if table.mul(identity, x) != x or table.mul(x, identity) != x:
            raise NotIdentity(identity, x)
    witness = _kernels.assoc_violation(table.flat(), n)
    if witness is not None:
        raise NotAssociative(witness)
    return Monoid(table, identity)


def monoid_from_rows(rows, identity) -> Monoid:
    return validate_monoid(MulTable(tuple(tuple(r) for r in rows)), identity)


def _relabel(flat, n, perm):
    """Apply a relabeling: new[p(i)][p(j)] = p(old[i][j])."""
    out = [0] * (n * n)
    for i in range(n):
        pi = perm[i] * n
        base = i * n
        for j in range(n):
            out[pi + perm[j]] = perm[flat[base + j]]
    return tuple(out)


def canonical_form(m: Monoid) -> IsoClassKey:
    """Lexicographically minimal relabeling with the identity sent to 0."""
    n = m.n
    flat = m.table.flat()
    others = [i for i in range(n) if i != m.identity]
    best = None
    for images in permutations(range(1, n)):
        perm = [0] * n
        perm[m.identity] = 0
        for src, dst in zip(others, images):
            perm[src] = dst
        cand = _relabel(flat, n, perm)
        if best is None or cand < best:
            best = cand
    return IsoClassKey(best)


def permute_monoid(m: Monoid, perm) -> Monoid:
    """Relabel elements by ``perm`` (a sequence mapping old to new indices)."""
    flat = _relabel(m.table.flat(), m.n, list(perm))
    rows = tuple(tuple(flat[i * m.n : (i + 1) * m.n]) for i in range(m.n))
    return Monoid(MulTable(rows), perm[m.identity])


def enumerate_monoids(n: int, budget: int = _kernels.DEFAULT_BUDGET) -> list[Monoid]:
    """One representative per isomorphism class, sorted by canonical key.

    The representative is itself the canonical table (identity at index 0).
    """
    if n > ENUMERATION_MAX_ORDER:
        raise OrderTooLarge(n, ENUMERATION_MAX_ORDER)
    if n < 1:
        raise ValueError("order must be positive")
    keys = set()
    for flat in _kernels.enumerate_monoid_tables(n, budget):
        rows = tuple(tuple(flat[i * n : (i + 1) * n]) for i in range(n))
        keys.add(canonical_form(Monoid(MulTable(rows), 0)))
    out = []
    for key in sorted(keys):
        rows = tuple(tuple(key.canonical[i * n : (i + 1) * n]) for i in range(n))
        out.append(Monoid(MulTable(rows), 0))
    return out


def is_group(m: Monoid):
    """(True, inverse tuple) when every element has a two-sided inverse."""
    e = m.identity
    inverses = []
    for x in m.elements():
        inv = None
        for y in m.elements():
            if m.mul(x, y) == e and m.mul(y, x) == e:
                inv = y
                break
        if inv is None:
            return False, None
        inverses.append(inv)
    return True, tuple(inverses)


def center(g: Monoid) -> frozenset:
    """Elements commuting with everything; only defined for groups."""
    ok, _ = is_group(g)
    if not ok:
        raise NotAGroup()
    return frozenset(
        z for z in g.elements() if all(g.mul(z, x) == g.mul(x, z) for x in g.elements())
    )


def cyclic_group(n: int) -> Monoid:
    rows = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return Monoid(MulTable(rows), 0)


def trivial_monoid() -> Monoid:
    return Monoid(MulTable(((0,),)), 0)
