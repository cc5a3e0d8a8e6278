"""The two counting paths and their cross-validation.

``construct`` builds a category in closed form from a strongly unigen
bimodule pair: cross products factor through the level-i core, where the
forced generator identifications turn composition into group multiplication.
``search_completions`` is the independent oracle: exhaustive backtracking
over the two cross-composition tables.  ``count_categories`` reproduces the
published counts (construction path, search cross-check), and
``verify_goal_theorem`` asserts the two paths produce identical table sets
pair by pair.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import _kernels
from .bimodules import (
    Bimodule,
    NORMALIZATION_ORBIT,
    enumerate_bimodules,
    inverse_iso_pairs,
    unigen_analyze,
)
from .categories import TwoObjectCategory, category_structures, compute_imax, validate_category
from .errors import NotUnigen, SpecViolation
from .grouplike import build_grouplike, detect_grouplike
from .monoids import Monoid, center, is_group


@dataclass(frozen=True)
class ConstructionSpec:
    """Inputs for the closed-form construction at chain level ``level``.

    generator_choice picks (x_0, y_0) when level = 0; at level >= 1 the
    generators are forced and the field must be None.
    """

    group: Monoid
    k1: int
    k2: int
    level: int
    bim_l: Bimodule
    bim_r: Bimodule
    generator_choice: tuple[int, int] | None = None


def _solve_maps(bim, structure_a, structure_b, level, generator, transposed=False):
    """Division maps at a generator of the level fixed set.

    For the left hom-set: fixed point u = g*x0 resolves to g, and u = x0*h
    resolves to h.  ``transposed`` swaps the roles for the other hom-set,
    where the left action belongs to B.
    """
    level_a = structure_a.level_elements(level)
    level_b = structure_b.level_elements(level)
    if transposed:
        by_left = {bim.left(h, generator): h for h in level_b}
        by_right = {bim.right(generator, g): g for g in level_a}
    else:
        by_left = {bim.left(g, generator): g for g in level_a}
        by_right = {bim.right(generator, h): h for h in level_b}
    return by_left, by_right


def construct(spec: ConstructionSpec) -> TwoObjectCategory:
    """Build and validate the category determined by a strongly unigen pair.

    comp_LR(x, y) = divide(e_i*x) * divide(y*e_i) in A, with both factors
    resolved through the generators of the level fixed sets; comp_RL is the
    mirror image through f_i.  The output always passes full validation and
    realizes the requested level as its top.
    """
    ok, _ = is_group(spec.group)
    if not ok:
        raise SpecViolation("construction group is not a group")
    if not 0 <= spec.level <= min(spec.k1, spec.k2):
        raise SpecViolation(f"level {spec.level} outside 0..min(k1,k2)")
    monoid_a, sa = build_grouplike(spec.group, spec.k1)
    monoid_b, sb = build_grouplike(spec.group, spec.k2)
    if spec.bim_l.left_monoid.table != monoid_a.table or spec.bim_l.right_monoid.table != monoid_b.table:
        raise SpecViolation("left bimodule monoids do not match the built grouplike monoids")
    if spec.bim_r.left_monoid.table != monoid_b.table or spec.bim_r.right_monoid.table != monoid_a.table:
        raise SpecViolation("right bimodule monoids do not match the built grouplike monoids")
    try:
        certs_l = unigen_analyze(spec.bim_l, spec.level)
        certs_r = unigen_analyze(spec.bim_r, spec.level)
    except NotUnigen as exc:
        raise SpecViolation(f"bimodule pair is not unigen at level {spec.level}: {exc}") from exc
    pairs = inverse_iso_pairs(certs_l, certs_r)
    if not pairs:
        raise SpecViolation("no generator pair induces mutually inverse isomorphisms")
    if spec.level >= 1:
        if spec.generator_choice is not None:
            raise SpecViolation("generators are forced at level >= 1")
        chosen = pairs[0]
    else:
        if spec.generator_choice is None:
            raise SpecViolation("level 0 needs an explicit generator choice")
        x0, y0 = spec.generator_choice
        matches = [p for p in pairs if p[0].generator == x0 and p[1].generator == y0]
        if not matches:
            raise SpecViolation(f"generator pair {spec.generator_choice} is not admissible")
        chosen = matches[0]
    cat = _construct_from_certs(monoid_a, sa, monoid_b, sb, spec.bim_l, spec.bim_r, spec.level, chosen)
    validate_category(cat)
    if compute_imax(cat).i_max != spec.level:
        raise SpecViolation("constructed category does not realize the requested level")
    return cat


def _construct_from_certs(monoid_a, sa, monoid_b, sb, bim_l, bim_r, level, cert_pair):
    cert_l, cert_r = cert_pair
    e_i = sa.chain_element(level)
    f_i = sb.chain_element(level)
    l_by_left, l_by_right = _solve_maps(bim_l, sa, sb, level, cert_l.generator)
    r_by_left, r_by_right = _solve_maps(bim_r, sa, sb, level, cert_r.generator, transposed=True)
    l_size, r_size = bim_l.carrier_size, bim_r.carrier_size
    comp_lr = tuple(
        tuple(
            monoid_a.mul(
                l_by_left[bim_l.left(e_i, x)],
                r_by_right[bim_r.right(y, e_i)],
            )
            for y in range(r_size)
        )
        for x in range(l_size)
    )
    comp_rl = tuple(
        tuple(
            monoid_b.mul(
                r_by_left[bim_r.left(f_i, y)],
                l_by_right[bim_l.right(x, f_i)],
            )
            for x in range(l_size)
        )
        for y in range(r_size)
    )
    return TwoObjectCategory(bim_l, bim_r, comp_lr, comp_rl)


def construct_all(monoid_a, sa, monoid_b, sb, bim_l, bim_r, level):
    """Every distinct category the construction yields at one level.

    Returns a dict mapping (comp_LR, comp_RL) to one witnessing generator
    pair; empty when the pair is not strongly unigen at the level.
    """
    try:
        certs_l = unigen_analyze(bim_l, level)
        certs_r = unigen_analyze(bim_r, level)
    except NotUnigen:
        return {}
    out = {}
    for pair in inverse_iso_pairs(certs_l, certs_r):
        cat = _construct_from_certs(monoid_a, sa, monoid_b, sb, bim_l, bim_r, level, pair)
        key = (cat.comp_lr, cat.comp_rl)
        out.setdefault(key, (pair[0].generator, pair[1].generator))
    return out


def search_completions(
    monoid_a: Monoid,
    monoid_b: Monoid,
    bim_l: Bimodule,
    bim_r: Bimodule,
    budget: int = _kernels.DEFAULT_BUDGET,
) -> list[TwoObjectCategory]:
    """All cross-composition completions, by exhaustive backtracking."""
    l_size, r_size = bim_l.carrier_size, bim_r.carrier_size
    raw = _kernels.complete_category_tables(
        monoid_a.table.flat(),
        monoid_a.n,
        monoid_b.table.flat(),
        monoid_b.n,
        bim_l.left_flat(),
        bim_l.right_flat(),
        bim_r.left_flat(),
        bim_r.right_flat(),
        l_size,
        r_size,
        budget,
    )
    out = []
    for lr_flat, rl_flat in raw:
        comp_lr = tuple(tuple(lr_flat[x * r_size : (x + 1) * r_size]) for x in range(l_size))
        comp_rl = tuple(tuple(rl_flat[y * l_size : (y + 1) * l_size]) for y in range(r_size))
        out.append(TwoObjectCategory(bim_l, bim_r, comp_lr, comp_rl))
    return out


@dataclass
class CountReport:
    """Category counts for one group and pair of chain lengths.

    ``per_pair`` maps ordered bimodule-pair indices to {level: count} over
    every feasible level.  The headline ``total`` follows the published
    convention: unordered pairs when the two monoids coincide, and the top
    level dropped when it would make the two objects isomorphic (k1 = k2 =
    level >= 1); the skipped amount is reported separately.
    """

    group_order: int
    k1: int
    k2: int
    left_count: int
    right_count: int
    per_pair: dict = field(default_factory=dict)
    by_level: dict = field(default_factory=dict)
    by_level_same: dict = field(default_factory=dict)
    by_level_diff: dict = field(default_factory=dict)
    ordered_total: int = 0
    total: int = 0
    skipped_top_level: int | None = None
    skipped_top_count: int = 0
    center_order: int = 0
    cross_validated: bool = False

    def to_json_dict(self) -> dict:
        return {
            "group_order": self.group_order,
            "k1": self.k1,
            "k2": self.k2,
            "left_bimodules": self.left_count,
            "right_bimodules": self.right_count,
            "by_i": {str(i): v for i, v in sorted(self.by_level.items())},
            "by_i_same": {str(i): v for i, v in sorted(self.by_level_same.items())},
            "by_i_diff": {str(i): v for i, v in sorted(self.by_level_diff.items())},
            "by_pair": [
                {"left": li, "right": rj, "counts": {str(i): v for i, v in sorted(cnts.items())}}
                for (li, rj), cnts in sorted(self.per_pair.items())
            ],
            "ordered_total": self.ordered_total,
            "total": self.total,
            "skipped_top_level": self.skipped_top_level,
            "skipped_top_count": self.skipped_top_count,
            "center_order": self.center_order,
            "cross_validated": self.cross_validated,
        }

    def per_pair_csv(self) -> str:
        lines = ["left,right,i,count"]
        for (li, rj), cnts in sorted(self.per_pair.items()):
            for i, v in sorted(cnts.items()):
                lines.append(f"{li},{rj},{i},{v}")
        return "\n".join(lines) + "\n"


def _pair_automorphisms(bim_l, bim_r):
    """Joint carrier relabelings preserving both action-table pairs."""
    from itertools import permutations

    from .bimodules import permute_carrier

    left_autos = [
        p
        for p in permutations(range(bim_l.carrier_size))
        if permute_carrier(bim_l, p).tables() == bim_l.tables()
    ]
    right_autos = [
        p
        for p in permutations(range(bim_r.carrier_size))
        if permute_carrier(bim_r, p).tables() == bim_r.tables()
    ]
    return left_autos, right_autos


def _quotient_tables(keys, bim_l, bim_r):
    """Identify completions differing by a bimodule-pair automorphism."""
    left_autos, right_autos = _pair_automorphisms(bim_l, bim_r)
    l, r = bim_l.carrier_size, bim_r.carrier_size
    seen = set()
    for comp_lr, comp_rl in keys:
        best = None
        for pl in left_autos:
            for pr in right_autos:
                moved_lr = tuple(
                    tuple(comp_lr[pl.index(x)][pr.index(y)] for y in range(r)) for x in range(l)
                )
                moved_rl = tuple(
                    tuple(comp_rl[pr.index(y)][pl.index(x)] for x in range(l)) for y in range(r)
                )
                cand = (moved_lr, moved_rl)
                if best is None or cand < best:
                    best = cand
        seen.add(best)
    return seen


def _pair_level_counts(monoid_a, sa, monoid_b, sb, bim_l, bim_r, levels, up_to_iso=False):
    counts = {}
    for level in levels:
        keys = construct_all(monoid_a, sa, monoid_b, sb, bim_l, bim_r, level)
        if up_to_iso:
            counts[level] = len(_quotient_tables(keys, bim_l, bim_r))
        else:
            counts[level] = len(keys)
    return counts


def _pair_task(args):
    (monoid_a, sa, monoid_b, sb, bim_l, bim_r, levels, cross_validate, budget, up_to_iso) = args
    counts = _pair_level_counts(monoid_a, sa, monoid_b, sb, bim_l, bim_r, levels, up_to_iso)
    if cross_validate:
        found = search_completions(monoid_a, monoid_b, bim_l, bim_r, budget)
        per_level = {}
        for cat in found:
            per_level.setdefault(compute_imax(cat).i_max, []).append((cat.comp_lr, cat.comp_rl))
        by_level = {
            i: len(_quotient_tables(keys, bim_l, bim_r)) if up_to_iso else len(keys)
            for i, keys in per_level.items()
        }
        if by_level != {i: v for i, v in counts.items() if v}:
            raise SpecViolation(
                f"construction/search mismatch: construction {counts}, search {by_level}"
            )
    return counts


def count_categories(
    group: Monoid,
    k1: int,
    k2: int,
    carrier_l: int,
    carrier_r: int,
    normalization: str = NORMALIZATION_ORBIT,
    cross_validate: bool = False,
    budget: int = _kernels.DEFAULT_BUDGET,
    workers: int = 1,
    up_to_iso: bool = False,
) -> CountReport:
    """Count categories over all normalized bimodule pairs, level by level.

    At level >= 1 each strongly unigen pair yields exactly one category; at
    level 0 the distinct categories per pair number the center order of the
    group.  With cross_validate, every pair is additionally sent through the
    search oracle and the per-level counts must agree exactly.  up_to_iso
    further identifies completions differing by an automorphism of the
    bimodule pair (not the published convention).
    """
    monoid_a, sa = build_grouplike(group, k1)
    monoid_b, sb = build_grouplike(group, k2)
    lefts = enumerate_bimodules(monoid_a, monoid_b, carrier_l, normalization, budget)
    rights = enumerate_bimodules(monoid_b, monoid_a, carrier_r, normalization, budget)
    levels = list(range(min(k1, k2) + 1))
    same_monoid = monoid_a.table == monoid_b.table
    report = CountReport(
        group_order=group.n,
        k1=k1,
        k2=k2,
        left_count=len(lefts),
        right_count=len(rights),
        center_order=len(center(group)),
    )
    tasks = [
        (monoid_a, sa, monoid_b, sb, bim_l, bim_r, levels, cross_validate, budget, up_to_iso)
        for bim_l in lefts
        for bim_r in rights
    ]
    keys = [(li, rj) for li in range(len(lefts)) for rj in range(len(rights))]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            counts_list = list(pool.map(_pair_task, tasks, chunksize=8))
    else:
        counts_list = [_pair_task(t) for t in tasks]
    for key, counts in zip(keys, counts_list):
        report.per_pair[key] = counts
    skip_level = min(k1, k2) if (k1 == k2 and k1 >= 1) else None
    for (li, rj), counts in report.per_pair.items():
        same_pair = same_monoid and lefts[li].tables() == rights[rj].tables()
        for level, value in counts.items():
            if not value:
                continue
            report.ordered_total += value
            if level == skip_level:
                if same_pair or (same_monoid and li < rj):
                    report.skipped_top_count += value
                elif not same_monoid:
                    report.skipped_top_count += value
                continue
            if same_monoid:
                if same_pair:
                    report.by_level_same[level] = report.by_level_same.get(level, 0) + value
                elif li < rj:
                    mirrored = report.per_pair.get((rj, li), {}).get(level, 0)
                    if mirrored != value:
                        raise SpecViolation(
                            f"asymmetric pair counts at level {level}: {(li, rj)}"
                        )
                    report.by_level_diff[level] = report.by_level_diff.get(level, 0) + value
            else:
                report.by_level[level] = report.by_level.get(level, 0) + value
    if same_monoid:
        for level in levels:
            total = report.by_level_same.get(level, 0) + report.by_level_diff.get(level, 0)
            if total:
                report.by_level[level] = total
    report.skipped_top_level = skip_level
    report.total = sum(report.by_level.values())
    report.cross_validated = cross_validate
    return report


def _goal_task(args):
    (monoid_a, sa, monoid_b, sb, bim_l, bim_r, levels, budget) = args
    constructed = {}
    for level in levels:
        for key in construct_all(monoid_a, sa, monoid_b, sb, bim_l, bim_r, level):
            constructed[key] = level
    found = {}
    for cat in search_completions(monoid_a, monoid_b, bim_l, bim_r, budget):
        found[(cat.comp_lr, cat.comp_rl)] = compute_imax(cat).i_max
    missing_from_construction = sorted(set(found) - set(constructed))
    missing_from_search = sorted(set(constructed) - set(found))
    level_mismatch = sorted(
        k for k in set(found) & set(constructed) if found[k] != constructed[k]
    )
    return missing_from_construction, missing_from_search, level_mismatch


def verify_goal_theorem(
    monoid_a: Monoid,
    monoid_b: Monoid,
    carrier_l: int,
    carrier_r: int,
    budget: int = _kernels.DEFAULT_BUDGET,
    workers: int = 1,
):
    """Check search and construction produce identical categories.

    Quantifies over every bimodule pair (one representative per carrier
    relabeling) and every feasible level.  Returns (ok, discrepancies) where
    each discrepancy records the pair indices and which side missed it.
    """
    sa = detect_grouplike(monoid_a)
    sb = detect_grouplike(monoid_b)
    if sa is None or sb is None:
        raise SpecViolation("goal-theorem verification needs grouplike monoids")
    lefts = enumerate_bimodules(monoid_a, monoid_b, carrier_l, "none", budget)
    rights = enumerate_bimodules(monoid_b, monoid_a, carrier_r, "none", budget)
    levels = list(range(min(sa.k, sb.k) + 1))
    tasks = [
        (monoid_a, sa, monoid_b, sb, bim_l, bim_r, levels, budget)
        for bim_l in lefts
        for bim_r in rights
    ]
    keys = [(li, rj) for li in range(len(lefts)) for rj in range(len(rights))]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_goal_task, tasks, chunksize=8))
    else:
        results = [_goal_task(t) for t in tasks]
    discrepancies = []
    for key, (not_constructed, not_found, level_mismatch) in zip(keys, results):
        for item in not_constructed:
            discrepancies.append({"pair": key, "side": "search-only", "tables": item})
        for item in not_found:
            discrepancies.append({"pair": key, "side": "construction-only", "tables": item})
        for item in level_mismatch:
            discrepancies.append({"pair": key, "side": "level-mismatch", "tables": item})
    return not discrepancies, discrepancies


def any_completion_exists(monoid_a, monoid_b, carrier_l, carrier_r, budget=_kernels.DEFAULT_BUDGET):
    """True when some bimodule pair of the given sizes admits a completion."""
    lefts = enumerate_bimodules(monoid_a, monoid_b, carrier_l, "none", budget)
    rights = enumerate_bimodules(monoid_b, monoid_a, carrier_r, "none", budget)
    for bim_l in lefts:
        for bim_r in rights:
            if search_completions(monoid_a, monoid_b, bim_l, bim_r, budget):
                return True
    return False


def default_budget() -> int:
    value = os.environ.get("CATFORGE_BUDGET")
    return int(value) if value else _kernels.DEFAULT_BUDGET
