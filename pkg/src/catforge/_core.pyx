# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Same contracts and enumeration order as catforge._kernels_py; the dispatcher
in catforge._kernels prefers this module when it was built.
"""

from libc.stdlib cimport free, malloc

from .errors import SearchBudgetExceeded

DEFAULT_BUDGET = 10**8

IMPL = "compiled"


cdef int* _alloc(Py_ssize_t count) except NULL:
    cdef int* buf = <int*> malloc(count * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef void _fill(int* buf, object values):
    cdef Py_ssize_t i = 0
    for v in values:
        buf[i] = v
        i += 1


def assoc_violation(table, int n):
    """First (x, y, z) with (x*y)*z != x*(y*z) in lex order, or None."""
    cdef int* t = _alloc(n * n)
    cdef int x, y, z, xy
    try:
        _fill(t, table)
        for x in range(n):
            for y in range(n):
                xy = t[x * n + y]
                for z in range(n):
                    if t[xy * n + z] != t[x * n + t[y * n + z]]:
                        return (x, y, z)
        return None
    finally:
        free(t)


cdef struct MonoidSearch:
    int n
    int budget_exceeded
    long long nodes
    long long budget
    int* t  # n*n, -1 unassigned


cdef bint _monoid_consistent(MonoidSearch* s, int a, int b) noexcept:
    cdef int n = s.n
    cdef int* t = s.t
    cdef int v = t[a * n + b]
    cdef int z, x, y, w, bz, vz, abz, za, zab, zv, yb, x_yb, ax, axy
    for z in range(n):
        bz = t[b * n + z]
        if bz >= 0:
            vz = t[v * n + z]
            if vz >= 0:
                abz = t[a * n + bz]
                if abz >= 0 and vz != abz:
                    return False
        za = t[z * n + a]
        if za >= 0:
            zab = t[za * n + b]
            if zab >= 0:
                zv = t[z * n + v]
                if zv >= 0 and zab != zv:
                    return False
    for x in range(n):
        for y in range(n):
            w = t[x * n + y]
            if w == a:
                yb = t[y * n + b]
                if yb >= 0:
                    x_yb = t[x * n + yb]
                    if x_yb >= 0 and x_yb != v:
                        return False
            if w == b:
                ax = t[a * n + x]
                if ax >= 0:
                    axy = t[ax * n + y]
                    if axy >= 0 and axy != v:
                        return False
    return True


cdef int _monoid_rec(MonoidSearch* s, int k, int m, int* cells, list out) except -1:
    cdef int n = s.n
    cdef int i, j, v
    if k == m:
        out.append(tuple([s.t[p] for p in range(n * n)]))
        return 0
    i = cells[2 * k]
    j = cells[2 * k + 1]
    for v in range(n):
        s.nodes += 1
        if s.nodes > s.budget:
            s.budget_exceeded = 1
            break
        s.t[i * n + j] = v
        if _monoid_consistent(s, i, j):
            _monoid_rec(s, k + 1, m, cells, out)
        if s.budget_exceeded:
            break
    s.t[i * n + j] = -1
    return 0


def enumerate_monoid_tables(int n, long long budget=DEFAULT_BUDGET):
    """All associative tables on {0..n-1} with 0 a two-sided identity."""
    if n == 1:
        return [(0,)]
    cdef MonoidSearch s
    s.n = n
    s.nodes = 0
    s.budget = budget
    s.budget_exceeded = 0
    s.t = _alloc(n * n)
    cdef int* cells = _alloc(2 * (n - 1) * (n - 1))
    cdef int i, j, m
    out = []
    try:
        for i in range(n * n):
            s.t[i] = -1
        for i in range(n):
            s.t[i] = i
            s.t[i * n] = i
        m = 0
        for i in range(1, n):
            for j in range(1, n):
                cells[2 * m] = i
                cells[2 * m + 1] = j
                m += 1
        _monoid_rec(&s, 0, m, cells, out)
        if s.budget_exceeded:
            raise SearchBudgetExceeded(budget)
        return out
    finally:
        free(cells)
        free(s.t)


cdef struct BimodSearch:
    int n_a, n_b, size
    int budget_exceeded
    long long nodes
    long long budget
    int* mul_a
    int* mul_b
    int* left   # n_a * size
    int* right  # size * n_b


cdef bint _bimod_consistent(BimodSearch* s) noexcept:
    cdef int n_a = s.n_a, n_b = s.n_b, size = s.size
    cdef int a1, a2, x, b1, b2, a, c1, c2, c3, rb, lx, p, q
    for a1 in range(n_a):
        for a2 in range(n_a):
            for x in range(size):
                c2 = s.left[a2 * size + x]
                if c2 < 0:
                    continue
                c1 = s.left[s.mul_a[a1 * n_a + a2] * size + x]
                c3 = s.left[a1 * size + c2]
                if c1 >= 0 and c3 >= 0 and c1 != c3:
                    return False
    for x in range(size):
        for b1 in range(n_b):
            rb = s.right[x * n_b + b1]
            if rb < 0:
                continue
            for b2 in range(n_b):
                c1 = s.right[x * n_b + s.mul_b[b1 * n_b + b2]]
                if c1 < 0:
                    continue
                c3 = s.right[rb * n_b + b2]
                if c3 >= 0 and c1 != c3:
                    return False
    for a in range(n_a):
        for x in range(size):
            lx = s.left[a * size + x]
            for b1 in range(n_b):
                if lx >= 0:
                    p = s.right[lx * n_b + b1]
                    q = s.right[x * n_b + b1]
                    if p >= 0 and q >= 0:
                        c3 = s.left[a * size + q]
                        if c3 >= 0 and p != c3:
                            return False
    return True


cdef int _bimod_rec(BimodSearch* s, int k, int m, int* cells, list out) except -1:
    cdef int side, i, j, v
    cdef int size = s.size
    if k == m:
        out.append(
            (
                tuple([s.left[p] for p in range(s.n_a * size)]),
                tuple([s.right[p] for p in range(size * s.n_b)]),
            )
        )
        return 0
    side = cells[3 * k]
    i = cells[3 * k + 1]
    j = cells[3 * k + 2]
    for v in range(size):
        s.nodes += 1
        if s.nodes > s.budget:
            s.budget_exceeded = 1
            return -1
        if side == 0:
            s.left[i * size + j] = v
        else:
            s.right[i * s.n_b + j] = v
        if _bimod_consistent(s):
            _bimod_rec(s, k + 1, m, cells, out)
    if side == 0:
        s.left[i * size + j] = -1
    else:
        s.right[i * s.n_b + j] = -1
    return 0


def enumerate_bimodule_tables(mul_a, int n_a, int id_a, mul_b, int n_b, int id_b,
                              int size, long long budget=DEFAULT_BUDGET):
    """All commuting unital action table pairs on a carrier of ``size``."""
    if size == 0:
        return [((), ())]
    cdef BimodSearch s
    s.n_a = n_a
    s.n_b = n_b
    s.size = size
    s.nodes = 0
    s.budget = budget
    s.budget_exceeded = 0
    s.mul_a = _alloc(n_a * n_a)
    s.mul_b = _alloc(n_b * n_b)
    s.left = _alloc(n_a * size)
    s.right = _alloc(size * n_b)
    cdef int* cells = _alloc(3 * (n_a * size + size * n_b))
    cdef int a, x, b, m
    out = []
    try:
        _fill(s.mul_a, mul_a)
        _fill(s.mul_b, mul_b)
        for a in range(n_a * size):
            s.left[a] = -1
        for x in range(size * n_b):
            s.right[x] = -1
        for x in range(size):
            s.left[id_a * size + x] = x
            s.right[x * n_b + id_b] = x
        m = 0
        for a in range(n_a):
            if a == id_a:
                continue
            for x in range(size):
                cells[3 * m] = 0
                cells[3 * m + 1] = a
                cells[3 * m + 2] = x
                m += 1
        for x in range(size):
            for b in range(n_b):
                if b == id_b:
                    continue
                cells[3 * m] = 1
                cells[3 * m + 1] = x
                cells[3 * m + 2] = b
                m += 1
        _bimod_rec(&s, 0, m, cells, out)
        if s.budget_exceeded:
            raise SearchBudgetExceeded(budget)
        return out
    finally:
        free(cells)
        free(s.right)
        free(s.left)
        free(s.mul_b)
        free(s.mul_a)


cdef struct CompSearch:
    int n_a, n_b, l, r
    int budget_exceeded
    long long nodes
    long long budget
    int* mul_a
    int* mul_b
    int* left_l   # n_a * l
    int* right_l  # l * n_b
    int* left_r   # n_b * r
    int* right_r  # r * n_a
    int* lr_tab   # l * r
    int* rl_tab   # r * l
    # instances flattened as (family, i1, i2, i3); trigger lists per cell
    int* inst
    int* trig_start
    int* trig_items


cdef bint _comp_check(CompSearch* s, int idx) noexcept:
    cdef int fam = s.inst[4 * idx]
    cdef int i1 = s.inst[4 * idx + 1]
    cdef int i2 = s.inst[4 * idx + 2]
    cdef int i3 = s.inst[4 * idx + 3]
    cdef int c1, c2
    cdef int n_a = s.n_a, n_b = s.n_b, l = s.l, r = s.r
    if fam == 0:
        c1 = s.lr_tab[s.left_l[i1 * l + i2] * r + i3]
        c2 = s.lr_tab[i2 * r + i3]
        if c1 < 0 or c2 < 0:
            return True
        return c1 == s.mul_a[i1 * n_a + c2]
    if fam == 1:
        c1 = s.lr_tab[s.right_l[i1 * n_b + i2] * r + i3]
        c2 = s.lr_tab[i1 * r + s.left_r[i2 * r + i3]]
        return c1 < 0 or c2 < 0 or c1 == c2
    if fam == 2:
        c1 = s.lr_tab[i1 * r + i2]
        c2 = s.lr_tab[i1 * r + s.right_r[i2 * n_a + i3]]
        if c1 < 0 or c2 < 0:
            return True
        return s.mul_a[c1 * n_a + i3] == c2
    if fam == 3:
        c1 = s.lr_tab[i1 * r + i2]
        c2 = s.rl_tab[i2 * l + i3]
        if c1 < 0 or c2 < 0:
            return True
        return s.left_l[c1 * l + i3] == s.right_l[i1 * n_b + c2]
    if fam == 4:
        c1 = s.rl_tab[s.right_r[i1 * n_a + i2] * l + i3]
        c2 = s.rl_tab[i1 * l + s.left_l[i2 * l + i3]]
        return c1 < 0 or c2 < 0 or c1 == c2
    if fam == 5:
        c1 = s.rl_tab[i2 * l + i3]
        c2 = s.rl_tab[s.left_r[i1 * r + i2] * l + i3]
        if c1 < 0 or c2 < 0:
            return True
        return s.mul_b[i1 * n_b + c1] == c2
    if fam == 6:
        c1 = s.rl_tab[i1 * l + i2]
        c2 = s.rl_tab[i1 * l + s.right_l[i2 * n_b + i3]]
        if c1 < 0 or c2 < 0:
            return True
        return s.mul_b[c1 * n_b + i3] == c2
    c1 = s.rl_tab[i1 * l + i2]
    c2 = s.lr_tab[i2 * r + i3]
    if c1 < 0 or c2 < 0:
        return True
    return s.right_r[i1 * n_a + c2] == s.left_r[c1 * r + i3]


cdef int _comp_rec(CompSearch* s, int cell, int m, list out) except -1:
    cdef int l = s.l, r = s.r
    cdef int lr_size = l * r
    cdef int idx, v, p, values, ok
    if cell == m:
        out.append(
            (
                tuple([s.lr_tab[p] for p in range(lr_size)]),
                tuple([s.rl_tab[p] for p in range(r * l)]),
            )
        )
        return 0
    values = s.n_a if cell < lr_size else s.n_b
    for v in range(values):
        s.nodes += 1
        if s.nodes > s.budget:
            s.budget_exceeded = 1
            return -1
        if cell < lr_size:
            s.lr_tab[cell] = v
        else:
            s.rl_tab[cell - lr_size] = v
        ok = 1
        for p in range(s.trig_start[cell], s.trig_start[cell + 1]):
            if not _comp_check(s, s.trig_items[p]):
                ok = 0
                break
        if ok:
            _comp_rec(s, cell + 1, m, out)
    if cell < lr_size:
        s.lr_tab[cell] = -1
    else:
        s.rl_tab[cell - lr_size] = -1
    return 0


def complete_category_tables(mul_a, int n_a, mul_b, int n_b,
                             left_l, right_l, left_r, right_r,
                             int l, int r, long long budget=DEFAULT_BUDGET):
    """All (comp_LR, comp_RL) pairs making the four-block structure associative."""
    if l == 0 or r == 0:
        return [((), ())]
    from ._kernels_py import _build_triggers

    triggers = _build_triggers(mul_a, n_a, mul_b, n_b, left_l, right_l, left_r, right_r, l, r)
    cdef CompSearch s
    s.n_a = n_a
    s.n_b = n_b
    s.l = l
    s.r = r
    s.nodes = 0
    s.budget = budget
    s.budget_exceeded = 0
    cdef int n_cells = 2 * l * r
    cdef int n_inst = 0
    seen = {}
    flat_items = []
    for cell_list in triggers:
        for inst in cell_list:
            if inst not in seen:
                seen[inst] = len(seen)
    n_inst = len(seen)
    s.mul_a = _alloc(n_a * n_a)
    s.mul_b = _alloc(n_b * n_b)
    s.left_l = _alloc(n_a * l)
    s.right_l = _alloc(l * n_b)
    s.left_r = _alloc(n_b * r)
    s.right_r = _alloc(r * n_a)
    s.lr_tab = _alloc(l * r)
    s.rl_tab = _alloc(r * l)
    s.inst = _alloc(4 * max(n_inst, 1))
    s.trig_start = _alloc(n_cells + 1)
    cdef int total_items = 0
    for cell_list in triggers:
        total_items += len(cell_list)
    s.trig_items = _alloc(max(total_items, 1))
    cdef int p, q
    out = []
    try:
        _fill(s.mul_a, mul_a)
        _fill(s.mul_b, mul_b)
        _fill(s.left_l, left_l)
        _fill(s.right_l, right_l)
        _fill(s.left_r, left_r)
        _fill(s.right_r, right_r)
        for p in range(l * r):
            s.lr_tab[p] = -1
            s.rl_tab[p] = -1
        for inst, q in seen.items():
            s.inst[4 * q] = inst[0]
            s.inst[4 * q + 1] = inst[1]
            s.inst[4 * q + 2] = inst[2]
            s.inst[4 * q + 3] = inst[3]
        p = 0
        for cell in range(n_cells):
            s.trig_start[cell] = p
            for inst in triggers[cell]:
                s.trig_items[p] = seen[inst]
                p += 1
        s.trig_start[n_cells] = p
        _comp_rec(&s, 0, n_cells, out)
        if s.budget_exceeded:
            raise SearchBudgetExceeded(budget)
        return out
    finally:
        free(s.trig_items)
        free(s.trig_start)
        free(s.inst)
        free(s.rl_tab)
        free(s.lr_tab)
        free(s.right_r)
        free(s.left_r)
        free(s.right_l)
        free(s.left_l)
        free(s.mul_b)
        free(s.mul_a)
