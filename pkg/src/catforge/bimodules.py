"""Bimodules: carriers with commuting left/right monoid actions.

Enumeration, orbit analysis under the group parts, and the single-generator
("unigen") analysis that drives the closed-form category construction: at
chain level i the fixed set L_i must be freely generated on both sides by one
element, and solving g*x = x*h for that generator induces a group
isomorphism between the two sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from . import _kernels
from .errors import (
    CommutationViolation,
    LeftActionViolation,
    NotGrouplike,
    NotUnigen,
    RightActionViolation,
)
from .grouplike import GrouplikeStructure, detect_grouplike
from .monoids import Monoid


@dataclass(frozen=True)
class Bimodule:
    """Left action of A and right action of B on a small carrier.

    left_action is |A| x l (row = acting element); right_action is l x |B|.
    """

    left_monoid: Monoid
    right_monoid: Monoid
    carrier_size: int
    left_action: tuple[tuple[int, ...], ...]
    right_action: tuple[tuple[int, ...], ...]

    def left(self, a: int, x: int) -> int:
        return self.left_action[a][x]

    def right(self, x: int, b: int) -> int:
        return self.right_action[x][b]

    def carrier(self) -> range:
        return range(self.carrier_size)

    def left_flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.left_action for v in row)

    def right_flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.right_action for v in row)

    def tables(self):
        return (self.left_action, self.right_action)

    def to_json_dict(self) -> dict:
        return {
            "A": self.left_monoid.to_json_dict(),
            "B": self.right_monoid.to_json_dict(),
            "l": self.carrier_size,
            "left": [list(r) for r in self.left_action],
            "right": [list(r) for r in self.right_action],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "Bimodule":
        b = Bimodule(
            left_monoid=Monoid.from_json_dict(data["A"]),
            right_monoid=Monoid.from_json_dict(data["B"]),
            carrier_size=data["l"],
            left_action=tuple(tuple(r) for r in data["left"]),
            right_action=tuple(tuple(r) for r in data["right"]),
        )
        validate_bimodule(b)
        return b


def validate_bimodule(b: Bimodule) -> None:
    """Exhaustively check unitality, both action laws, and commutation."""
    a_m, b_m, size = b.left_monoid, b.right_monoid, b.carrier_size
    if len(b.left_action) != a_m.n or any(len(r) != size for r in b.left_action):
        raise LeftActionViolation("shape", None)
    if len(b.right_action) != size or any(len(r) != b_m.n for r in b.right_action):
        raise RightActionViolation("shape", None)
    for row in b.left_action:
        for v in row:
            if not 0 <= v < size:
                raise LeftActionViolation("range", v)
    for row in b.right_action:
        for v in row:
            if not 0 <= v < size:
                raise RightActionViolation("range", v)
    for x in b.carrier():
        if b.left(a_m.identity, x) != x:
            raise LeftActionViolation("unit", (a_m.identity, x))
        if b.right(x, b_m.identity) != x:
            raise RightActionViolation("unit", (x, b_m.identity))
    for a1 in a_m.elements():
        for a2 in a_m.elements():
            for x in b.carrier():
                if b.left(a_m.mul(a1, a2), x) != b.left(a1, b.left(a2, x)):
                    raise LeftActionViolation("assoc", (a1, a2, x))
    for x in b.carrier():
        for b1 in b_m.elements():
            for b2 in b_m.elements():
                if b.right(x, b_m.mul(b1, b2)) != b.right(b.right(x, b1), b2):
                    raise RightActionViolation("assoc", (x, b1, b2))
    for a in a_m.elements():
        for x in b.carrier():
            for bb in b_m.elements():
                if b.right(b.left(a, x), bb) != b.left(a, b.right(x, bb)):
                    raise CommutationViolation((a, x, bb))


def regular_bimodule(m: Monoid) -> Bimodule:
    """A monoid acting on itself by multiplication on both sides."""
    rows = m.table.entries
    return Bimodule(m, m, m.n, rows, rows)


def _unflatten(flat, rows, cols):
    return tuple(tuple(flat[i * cols : (i + 1) * cols]) for i in range(rows))


def canonical_bimodule_key(b: Bimodule):
    """Lex-minimal (left, right) tables over carrier relabelings.

    The monoid labelings stay fixed; only the carrier is permuted.
    """
    size = b.carrier_size
    best = None
    for perm in permutations(range(size)):
        left = tuple(
            tuple(perm[b.left_action[a][x]] for x in _inv_order(perm, size))
            for a in range(b.left_monoid.n)
        )
        right = tuple(
            tuple(perm[b.right_action[x][bb]] for bb in range(b.right_monoid.n))
            for x in _inv_order(perm, size)
        )
        cand = (left, right)
        if best is None or cand < best:
            best = cand
    return best


def _inv_order(perm, size):
    """Old indices listed so that position p holds the preimage of p."""
    inv = [0] * size
    for old, new in enumerate(perm):
        inv[new] = old
    return inv


def permute_carrier(b: Bimodule, perm) -> Bimodule:
    inv = _inv_order(perm, b.carrier_size)
    left = tuple(
        tuple(perm[b.left_action[a][x]] for x in inv) for a in range(b.left_monoid.n)
    )
    right = tuple(
        tuple(perm[b.right_action[x][bb]] for bb in range(b.right_monoid.n)) for x in inv
    )
    return Bimodule(b.left_monoid, b.right_monoid, b.carrier_size, left, right)


def _orbit_uniform_free(structure: GrouplikeStructure, act) -> bool:
    """True when the group part has one free orbit shared by every element.

    ``act(g, x)`` evaluates the action being tested (left or right).
    """
    group = structure.group_elements
    carrier = act.carrier
    orbits = {frozenset(act.apply(g, x) for g in group) for x in carrier}
    if len(orbits) != 1:
        return False
    orbit = next(iter(orbits))
    if len(orbit) != len(group):
        return False  # not free: some g1*x = g2*x collision inside the orbit
    return True


class _LeftView:
    def __init__(self, b):
        self.b = b
        self.carrier = range(b.carrier_size)

    def apply(self, g, x):
        return self.b.left(g, x)


class _RightView:
    def __init__(self, b):
        self.b = b
        self.carrier = range(b.carrier_size)

    def apply(self, g, x):
        return self.b.right(x, g)


NORMALIZATION_NONE = "none"
NORMALIZATION_ORBIT = "fix_orbit_representative"


def enumerate_bimodules_labeled(
    a_m: Monoid, b_m: Monoid, size: int, budget: int = _kernels.DEFAULT_BUDGET
) -> list[Bimodule]:
    """Every bimodule with the carrier labeled, no symmetry reduction."""
    raw = _kernels.enumerate_bimodule_tables(
        a_m.table.flat(), a_m.n, a_m.identity, b_m.table.flat(), b_m.n, b_m.identity, size, budget
    )
    return [
        Bimodule(a_m, b_m, size, _unflatten(lf, a_m.n, size), _unflatten(rf, size, b_m.n))
        for lf, rf in raw
    ]


def _satisfies_orbit_laws(b: Bimodule, sa: GrouplikeStructure, sb: GrouplikeStructure) -> bool:
    """Single free shared orbit on both sides, as forced inside a category."""
    if not _orbit_uniform_free(sa, _LeftView(b)):
        return False
    if not _orbit_uniform_free(sb, _RightView(b)):
        return False
    if b.carrier_size == 0:
        return True
    # both orbits are uniform here, so one base point decides set equality
    left_orbit = {b.left(g, 0) for g in sa.group_elements}
    right_orbit = {b.right(0, h) for h in sb.group_elements}
    return left_orbit == right_orbit


def _pinned_canonical(b: Bimodule, group_order: int):
    """Lex-minimal relabeling among those pinning the orbit to 0..|G|-1.

    Assumes the orbit laws hold, so the shared orbit is a single set of group
    size; representatives put it on the first carrier indices (for a trivial
    group this is exactly "e_0 * x = 0 for all x").
    """
    sa = detect_grouplike(b.left_monoid)
    orbit = sorted({b.left(g, x) for g in sa.group_elements for x in b.carrier()})
    rest = [x for x in b.carrier() if x not in set(orbit)]
    best = None
    for orbit_images in permutations(range(group_order)):
        for rest_images in permutations(range(group_order, b.carrier_size)):
            perm = [0] * b.carrier_size
            for src, dst in zip(orbit, orbit_images):
                perm[src] = dst
            for src, dst in zip(rest, rest_images):
                perm[src] = dst
            moved = permute_carrier(b, perm)
            cand = (moved.left_action, moved.right_action)
            if best is None or cand < best:
                best = cand
    return best


def enumerate_bimodules(
    a_m: Monoid,
    b_m: Monoid,
    size: int,
    normalization: str = NORMALIZATION_NONE,
    budget: int = _kernels.DEFAULT_BUDGET,
) -> list[Bimodule]:
    """Bimodules over (a_m, b_m), one representative per carrier relabeling.

    The monoid labelings stay fixed; only the carrier is quotiented.  With
    normalization "none" every class is kept.  With the orbit normalization
    both monoids must be grouplike and only classes satisfying the in-category
    orbit laws survive (one free group orbit, shared by the two sides); their
    representatives pin the orbit to the first carrier indices.
    """
    bims = enumerate_bimodules_labeled(a_m, b_m, size, budget)
    if normalization == NORMALIZATION_NONE:
        kept = {}
        for b in bims:
            key = canonical_bimodule_key(b)
            if key not in kept:
                left, right = key
                kept[key] = Bimodule(a_m, b_m, size, left, right)
        return [kept[k] for k in sorted(kept)]
    if normalization != NORMALIZATION_ORBIT:
        raise ValueError(f"unknown normalization {normalization!r}")
    sa = detect_grouplike(a_m)
    sb = detect_grouplike(b_m)
    if sa is None or sb is None:
        raise NotGrouplike("orbit normalization needs grouplike endomorphism monoids")
    kept = {}
    for b in bims:
        if not _satisfies_orbit_laws(b, sa, sb):
            continue
        key = _pinned_canonical(b, sa.group_order)
        if key not in kept:
            left, right = key
            kept[key] = Bimodule(a_m, b_m, size, left, right)
    return [kept[k] for k in sorted(kept)]


@dataclass(frozen=True)
class OrbitReport:
    """Group-part orbit of an action: the set it acts on and freeness."""

    orbit: tuple[int, ...]
    orbit_map: dict
    free: bool
    orbit_size: int


def group_orbit(b: Bimodule, side: str) -> OrbitReport:
    """Orbit of the group part acting on one side of the carrier.

    side "left": group of the left monoid acting by g*x; side "right": group
    of the right monoid acting by x*h.  Freeness is checked by exhaustive
    quantification over the orbit set.
    """
    if side == "left":
        structure = detect_grouplike(b.left_monoid)
        view = _LeftView(b)
    elif side == "right":
        structure = detect_grouplike(b.right_monoid)
        view = _RightView(b)
    else:
        raise ValueError("side must be 'left' or 'right'")
    if structure is None:
        raise NotGrouplike(f"{side} monoid has no grouplike structure")
    group = structure.group_elements
    orbit_map = {
        x: tuple(sorted({view.apply(g, x) for g in group})) for x in b.carrier()
    }
    orbit = tuple(sorted({u for orb in orbit_map.values() for u in orb}))
    free = True
    for u in orbit:
        seen = {}
        for g in group:
            gu = view.apply(g, u)
            if gu in seen and seen[gu] != g:
                free = False
            seen[gu] = g
    orbit_size = len(orbit_map[orbit[0]]) if orbit else 0
    return OrbitReport(orbit=orbit, orbit_map=orbit_map, free=free, orbit_size=orbit_size)


@dataclass(frozen=True)
class UnigenCertificate:
    """Witness that level-i fixed points are one-generated on both sides.

    ``iso`` maps level-i elements of the left monoid to the right monoid by
    solving g*x = x*iso(g) at the generator.
    """

    index: int
    fixed_set: tuple[int, ...]
    generator: int
    iso: tuple[tuple[int, int], ...]

    def iso_dict(self) -> dict:
        return dict(self.iso)


def _structures(b: Bimodule):
    sa = detect_grouplike(b.left_monoid)
    sb = detect_grouplike(b.right_monoid)
    if sa is None or sb is None:
        raise NotGrouplike("bimodule analysis needs grouplike monoids on both sides")
    return sa, sb


def unigen_analyze(b: Bimodule, i: int) -> list[UnigenCertificate]:
    """All certificates that the bimodule is i-unigen.

    Raises NotUnigen when the defining clauses fail; for i >= 1 a nonempty
    result is necessarily a single certificate (the generator is the unique
    unit-caliber element), which is verified rather than assumed.
    """
    sa, sb = _structures(b)
    if i > sa.k or i > sb.k:
        raise NotUnigen(i, f"chain level {i} exceeds k1={sa.k} or k2={sb.k}")
    e_i = sa.chain_element(i)
    f_i = sb.chain_element(i)
    level_a = sa.level_elements(i)
    level_b = sb.level_elements(i)
    left_fixed = tuple(sorted({b.left(e_i, x) for x in b.carrier()}))
    right_fixed = tuple(sorted({b.right(x, f_i) for x in b.carrier()}))
    if left_fixed != right_fixed:
        raise NotUnigen(i, "set-equality: e_i*L and L*f_i differ")
    fixed = left_fixed
    if len(fixed) != len(level_a) or len(fixed) != len(level_b):
        raise NotUnigen(i, "bijectivity: fixed-set size differs from level size")
    certs = []
    for x0 in fixed:
        left_images = [b.left(g, x0) for g in level_a]
        right_images = [b.right(x0, h) for h in level_b]
        if sorted(left_images) != list(fixed) or sorted(right_images) != list(fixed):
            continue
        solve_right = {img: h for h, img in zip(level_b, right_images)}
        iso = {g: solve_right[img] for g, img in zip(level_a, left_images)}
        ok = all(
            iso[sa.monoid.mul(g1, g2)] == sb.monoid.mul(iso[g1], iso[g2])
            for g1 in level_a
            for g2 in level_a
        )
        if not ok:
            raise NotUnigen(i, f"homomorphism: solved map at generator {x0} is not one")
        certs.append(
            UnigenCertificate(
                index=i,
                fixed_set=fixed,
                generator=x0,
                iso=tuple(sorted(iso.items())),
            )
        )
    if not certs:
        raise NotUnigen(i, "bijectivity: no generator works on both sides")
    if i >= 1 and len(certs) != 1:
        raise NotUnigen(i, f"uniqueness: {len(certs)} generators at level {i} >= 1")
    return certs


def inverse_iso_pairs(certs_l, certs_r):
    """Certificate pairs whose induced isomorphisms are mutually inverse."""
    out = []
    for cl in certs_l:
        iso_l = cl.iso_dict()
        for cr in certs_r:
            iso_r = cr.iso_dict()
            if all(iso_r.get(h) == g for g, h in iso_l.items()):
                out.append((cl, cr))
    return out


def strongly_unigen_check(b_l: Bimodule, b_r: Bimodule, i: int) -> bool:
    """True when generator choices with mutually inverse isomorphisms exist."""
    try:
        certs_l = unigen_analyze(b_l, i)
        certs_r = unigen_analyze(b_r, i)
    except NotUnigen:
        return False
    return bool(inverse_iso_pairs(certs_l, certs_r))
