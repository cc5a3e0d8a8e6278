"""Pure-Python search kernels.

Mirrors the compiled extension ``catforge._core`` function for function; the
dispatcher in ``catforge._kernels`` picks whichever is available.  Tables are
flat row-major tuples of ints; ``-1`` marks an unassigned cell during search.
Every kernel enumerates solutions in the same deterministic order (cells in a
fixed order, values ascending), so both implementations return identical
lists.
"""

from .errors import SearchBudgetExceeded

DEFAULT_BUDGET = 10**8

IMPL = "python"


def assoc_violation(table, n):
    """First (x, y, z) with (x*y)*z != x*(y*z) in lex order, or None."""
    for x in range(n):
        rowx = table[x * n : (x + 1) * n]
        for y in range(n):
            xy = rowx[y]
            for z in range(n):
                if table[xy * n + z] != table[x * n + table[y * n + z]]:
                    return (x, y, z)
    return None


def enumerate_monoid_tables(n, budget=DEFAULT_BUDGET):
    """All associative tables on {0..n-1} with 0 a two-sided identity.

    Backtracks over the (n-1)^2 free cells row-major, pruning as soon as an
    associativity instance involving the new cell is fully determined and
    fails.  Returns flat tables as tuples.
    """
    if n == 1:
        return [(0,)]
    t = [[-1] * n for _ in range(n)]
    for i in range(n):
        t[0][i] = i
        t[i][0] = i
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    m = len(cells)
    out = []
    nodes = 0
    rng = range(n)

    def consistent(a, b):
        # Check every associativity triple that uses cell (a, b) and is now
        # fully determined.  Four ways the cell can participate:
        v = t[a][b]
        ta, tb = t[a], t[b]
        for z in rng:
            bz = tb[z]
            if bz >= 0:  # triple (a, b, z)
                vz = t[v][z]
                if vz >= 0:
                    abz = ta[bz]
                    if abz >= 0 and vz != abz:
                        return False
            za = t[z][a]
            if za >= 0:  # triple (z, a, b)
                zab = t[za][b]
                if zab >= 0:
                    zv = t[z][v]
                    if zv >= 0 and zab != zv:
                        return False
        for x in rng:
            tx = t[x]
            for y in rng:
                w = tx[y]
                if w == a:  # triple (x, y, b): (x*y)*b = v
                    yb = t[y][b]
                    if yb >= 0:
                        x_yb = tx[yb]
                        if x_yb >= 0 and x_yb != v:
                            return False
                if w == b:  # triple (a, x, y): a*(x*y) = v
                    ax = ta[x]
                    if ax >= 0:
                        axy = t[ax][y]
                        if axy >= 0 and axy != v:
                            return False
        return True

    def rec(k):
        nonlocal nodes
        if k == m:
            out.append(tuple(v for row in t for v in row))
            return
        i, j = cells[k]
        ti = t[i]
        for v in rng:
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(budget)
            ti[j] = v
            if consistent(i, j):
                rec(k + 1)
        ti[j] = -1

    rec(0)
    return out


def enumerate_bimodule_tables(mul_a, n_a, id_a, mul_b, n_b, id_b, size, budget=DEFAULT_BUDGET):
    """All commuting unital action table pairs on a carrier of ``size``.

    ``left`` is n_a x size (rows = acting element), ``right`` is size x n_b.
    Identity rows/columns are forced; remaining cells fill left table first,
    row-major, then right, with a full rescan of determined action instances
    after each assignment.  Returns (left, right) flat tuple pairs.
    """
    if size == 0:
        return [((), ())]
    left = [[-1] * size for _ in range(n_a)]
    right = [[-1] * n_b for _ in range(size)]
    for x in range(size):
        left[id_a][x] = x
        right[x][id_b] = x
    cells = [("L", a, x) for a in range(n_a) if a != id_a for x in range(size)]
    cells += [("R", x, b) for x in range(size) for b in range(n_b) if b != id_b]
    m = len(cells)
    out = []
    nodes = 0
    r_a, r_b, r_s = range(n_a), range(n_b), range(size)

    def consistent():
        for a1 in r_a:
            la1 = left[a1]
            ma1 = mul_a[a1 * n_a : (a1 + 1) * n_a]
            for a2 in r_a:
                la2 = left[a2]
                lprod = left[ma1[a2]]
                for x in r_s:
                    c2 = la2[x]
                    if c2 < 0:
                        continue
                    c1 = lprod[x]
                    c3 = la1[c2]
                    if c1 >= 0 and c3 >= 0 and c1 != c3:
                        return False
        for x in r_s:
            rx = right[x]
            for b1 in r_b:
                rb = rx[b1]
                mb1 = mul_b[b1 * n_b : (b1 + 1) * n_b]
                for b2 in r_b:
                    c1 = rx[mb1[b2]]
                    if c1 < 0 or rb < 0:
                        continue
                    c3 = right[rb][b2]
                    if c3 >= 0 and c1 != c3:
                        return False
        for a in r_a:
            la = left[a]
            for x in r_s:
                lx = la[x]
                rx = right[x]
                for b in r_b:
                    if lx >= 0:
                        p = right[lx][b]
                        q = rx[b]
                        if p >= 0 and q >= 0:
                            s = la[q]
                            if s >= 0 and p != s:
                                return False
        return True

    def rec(k):
        nonlocal nodes
        if k == m:
            out.append(
                (
                    tuple(v for row in left for v in row),
                    tuple(v for row in right for v in row),
                )
            )
            return
        side, i, j = cells[k]
        row = left[i] if side == "L" else right[i]
        for v in r_s if side == "L" else range(size):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(budget)
            row[j] = v
            if consistent():
                rec(k + 1)
        row[j] = -1

    rec(0)
    return out


def _build_triggers(mul_a, n_a, mul_b, n_b, left_l, right_l, left_r, right_r, l, r):
    """Constraint instances for completion search, indexed by the two
    composition-table cells each one reads.

    Cell ids: LR cell (x, y) -> x*r + y; RL cell (y, x) -> l*r + y*l + x.
    Instance encoding: (family, i1, i2, i3).
    """
    n_cells = 2 * l * r
    triggers = [[] for _ in range(n_cells)]

    def lr(x, y):
        return x * r + y

    def rl(y, x):
        return l * r + y * l + x

    def add(inst, c1, c2):
        triggers[c1].append(inst)
        if c2 != c1:
            triggers[c2].append(inst)

    for a in range(n_a):
        for x in range(l):
            ax = left_l[a * l + x]
            for y in range(r):
                add((0, a, x, y), lr(ax, y), lr(x, y))
    for x in range(l):
        for b in range(n_b):
            xb = right_l[x * n_b + b]
            for y in range(r):
                add((1, x, b, y), lr(xb, y), lr(x, left_r[b * r + y]))
    for x in range(l):
        for y in range(r):
            for a in range(n_a):
                add((2, x, y, a), lr(x, y), lr(x, right_r[y * n_a + a]))
    for x in range(l):
        for y in range(r):
            for x2 in range(l):
                add((3, x, y, x2), lr(x, y), rl(y, x2))
    for y in range(r):
        for a in range(n_a):
            ya = right_r[y * n_a + a]
            for x in range(l):
                add((4, y, a, x), rl(ya, x), rl(y, left_l[a * l + x]))
    for b in range(n_b):
        for y in range(r):
            by = left_r[b * r + y]
            for x in range(l):
                add((5, b, y, x), rl(y, x), rl(by, x))
    for y in range(r):
        for x in range(l):
            for b in range(n_b):
                add((6, y, x, b), rl(y, x), rl(y, right_l[x * n_b + b]))
    for y in range(r):
        for x in range(l):
            for y2 in range(r):
                add((7, y, x, y2), lr(x, y2), rl(y, x))
    return triggers


def complete_category_tables(
    mul_a, n_a, mul_b, n_b, left_l, right_l, left_r, right_r, l, r, budget=DEFAULT_BUDGET
):
    """All (comp_LR, comp_RL) table pairs making the four-block structure
    associative, given the two action-table pairs.

    comp_LR is l x r with values in A; comp_RL is r x l with values in B.
    Cells fill comp_LR row-major then comp_RL row-major, values ascending;
    after each assignment only the constraint instances reading that cell are
    re-checked (all instance cell positions are value-independent, so this is
    exhaustive).
    """
    if l == 0 or r == 0:
        return [((), ())]
    lr_tab = [-1] * (l * r)
    rl_tab = [-1] * (r * l)
    triggers = _build_triggers(mul_a, n_a, mul_b, n_b, left_l, right_l, left_r, right_r, l, r)
    cells = list(range(2 * l * r))
    m = len(cells)
    out = []
    nodes = 0

    def check(inst):
        fam, i1, i2, i3 = inst
        if fam == 0:  # (a*x)*y == a*(x*y)
            c1 = lr_tab[left_l[i1 * l + i2] * r + i3]
            c2 = lr_tab[i2 * r + i3]
            if c1 < 0 or c2 < 0:
                return True
            return c1 == mul_a[i1 * n_a + c2]
        if fam == 1:  # (x*b)*y == x*(b*y)
            c1 = lr_tab[right_l[i1 * n_b + i2] * r + i3]
            c2 = lr_tab[i1 * r + left_r[i2 * r + i3]]
            return c1 < 0 or c2 < 0 or c1 == c2
        if fam == 2:  # (x*y)*a == x*(y*a)
            c1 = lr_tab[i1 * r + i2]
            c2 = lr_tab[i1 * r + right_r[i2 * n_a + i3]]
            if c1 < 0 or c2 < 0:
                return True
            return mul_a[c1 * n_a + i3] == c2
        if fam == 3:  # (x*y)*x2 == x*(y*x2)
            c1 = lr_tab[i1 * r + i2]
            c2 = rl_tab[i2 * l + i3]
            if c1 < 0 or c2 < 0:
                return True
            return left_l[c1 * l + i3] == right_l[i1 * n_b + c2]
        if fam == 4:  # (y*a)*x == y*(a*x)
            c1 = rl_tab[right_r[i1 * n_a + i2] * l + i3]
            c2 = rl_tab[i1 * l + left_l[i2 * l + i3]]
            return c1 < 0 or c2 < 0 or c1 == c2
        if fam == 5:  # b*(y*x) == (b*y)*x
            c1 = rl_tab[i2 * l + i3]
            c2 = rl_tab[left_r[i1 * r + i2] * l + i3]
            if c1 < 0 or c2 < 0:
                return True
            return mul_b[i1 * n_b + c1] == c2
        if fam == 6:  # (y*x)*b == y*(x*b)
            c1 = rl_tab[i1 * l + i2]
            c2 = rl_tab[i1 * l + right_l[i2 * n_b + i3]]
            if c1 < 0 or c2 < 0:
                return True
            return mul_b[c1 * n_b + i3] == c2
        # fam == 7: (y*x)*y2 == y*(x*y2)
        c1 = rl_tab[i1 * l + i2]
        c2 = lr_tab[i2 * r + i3]
        if c1 < 0 or c2 < 0:
            return True
        return right_r[i1 * n_a + c2] == left_r[c1 * r + i3]

    lr_size = l * r

    def rec(k):
        nonlocal nodes
        if k == m:
            out.append((tuple(lr_tab), tuple(rl_tab)))
            return
        cell = cells[k]
        in_lr = cell < lr_size
        tab = lr_tab if in_lr else rl_tab
        idx = cell if in_lr else cell - lr_size
        trig = triggers[cell]
        for v in range(n_a if in_lr else n_b):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(budget)
            tab[idx] = v
            if all(check(inst) for inst in trig):
                rec(k + 1)
        tab[idx] = -1

    rec(0)
    return out
