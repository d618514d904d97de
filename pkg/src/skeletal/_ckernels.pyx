# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the integer-mode hot loops in ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef bint _can_some_fire(long long *E, int n, int k, long long m, long long c,
                         int *popcount, long full) noexcept:
    cdef long mask
    cdef int i, f
    cdef long long need
    cdef bint ok
    for mask in range(1, full + 1):
        f = popcount[mask]
        if f > k + 1:
            continue
        need = m * (n - f) + c
        ok = True
        for i in range(n):
            if (mask >> i) & 1 and E[i] < need:
                ok = False
                break
        if ok:
            return True
    return False


def skeletal_chip_naive(D, int k, long long m, long long c):
    cdef int n = len(D)
    cdef int i, j, p
    cdef long T, full
    cdef long long need, gain
    cdef bint legal
    if n > 24:
        raise ValueError("compiled subset scan limited to n <= 24")
    full = (1 << n) - 1
    cdef long long *Dc = <long long *> malloc(n * sizeof(long long))
    cdef long long *E = <long long *> malloc(n * sizeof(long long))
    cdef int *popcount = <int *> malloc((full + 1) * sizeof(int))
    try:
        for i in range(n):
            Dc[i] = D[i]
            if Dc[i] < 0:
                return False
        popcount[0] = 0
        for T in range(1, full + 1):
            popcount[T] = popcount[T >> 1] + (T & 1)
        if _can_some_fire(Dc, n, k, m, c, popcount, full):
            return False
        for T in range(1, full + 1):
            p = popcount[T]
            need = m * p
            legal = True
            for j in range(n):
                if not (T >> j) & 1 and Dc[j] < need:
                    legal = False
                    break
            if not legal:
                continue
            gain = m * (n - p) + c
            for i in range(n):
                E[i] = Dc[i] + gain if (T >> i) & 1 else Dc[i] - need
            if not _can_some_fire(E, n, k, m, c, popcount, full):
                return False
        return True
    finally:
        free(Dc)
        free(E)
        free(popcount)


cdef void _extend(int i, int n, int k, long long m, long long c, long long top,
                  int streak, long long *g, list out):
    cdef long long lo, hi, v
    if i == n:
        out.append(tuple([g[j] for j in range(n)]))
        return
    lo = m * i + c - top
    hi = c if i == 0 else g[i - 1] + m
    if i >= n - k - 1 and lo < 1:
        lo = 1
    if streak == k and hi > c:
        hi = c
    v = lo
    while v <= hi:
        g[i] = v
        _extend(i + 1, n, k, m, c, top, streak + 1 if v > c else 0, g, out)
        v += 1


def enumerate_skv(int n, long long m, long long c, int k):
    cdef list out = []
    cdef long long *g = <long long *> malloc(n * sizeof(long long))
    try:
        _extend(0, n, k, m, c, m * (n - 1) + c - 1, 0, g, out)
    finally:
        free(g)
    return out


cdef inline long long _floordiv(long long a, long long b) noexcept:
    # cdivision is off, so // already floors like Python
    return a // b


cdef int _pos(long long *g, int n) noexcept:
    cdef int count = 0
    cdef int i = n - 1
    while i >= 0 and g[i] > 0:
        count += 1
        i -= 1
    return count


cdef void _cycle_power(long long *g, int n, long long j, long long c, long long *out) noexcept:
    cdef long long e = _floordiv(j, n)
    cdef int p = <int>(j - e * n)
    cdef int i
    for i in range(p, n):
        out[i - p] = g[i] - e * c
    for i in range(p):
        out[n - p + i] = g[i] - (e + 1) * c


cdef int _map_core(long long *g, int n, int k, int kp, long long m, long long c,
                   long long *cur, long long *tmp, long long *best, long long *offset) noexcept:
    """Return 0 on success, 1 for an invalid vector, 2 if not k-skeletal."""
    cdef int i, s, t, streak
    cdef long long mx, e, d, total, best_off
    for i in range(n - 1):
        if g[i + 1] > g[i] + m:
            return 1
    if g[0] > c or _pos(g, n) <= k:
        return 2
    streak = 0
    for i in range(n):
        streak = streak + 1 if g[i] > c else 0
        if streak > k:
            return 2
    d = 0
    if _pos(g, n) < n:
        mx = -g[0]
        for i in range(1, n):
            if -g[i] > mx:
                mx = -g[i]
        e = _floordiv(mx, c) + 1
        if e < 1:
            e = 1
        i = 0
        while g[i] + e * c > c:
            i += 1
        d = i - e * n
    _cycle_power(g, n, d, c, cur)
    for i in range(n):
        best[i] = cur[i]
    total = 0
    best_off = 0
    while True:
        s = 0
        while s < n and cur[s] <= c:
            s += 1
        if s == n:
            break
        t = 0
        while s + t < n and cur[s + t] > c:
            t += 1
        for i in range(s + t, n):
            tmp[i - s - t] = cur[i]
        for i in range(s + t):
            tmp[n - s - t + i] = cur[i] - c
        for i in range(n):
            cur[i] = tmp[i]
        total += s + t
        if _pos(cur, n) > kp:
            best_off = total
            for i in range(n):
                best[i] = cur[i]
    offset[0] = best_off + d
    return 0


def map_skeletal(g, int k, int kp, long long m, long long c):
    """k-skeletal -> kp-skeletal image of ``g`` and the C-power reaching it."""
    cdef int n = len(g)
    cdef int i, err
    cdef long long off
    cdef long long *buf = <long long *> malloc(4 * n * sizeof(long long))
    try:
        for i in range(n):
            buf[i] = g[i]
        err = _map_core(buf, n, k, kp, m, c, buf + n, buf + 2 * n, buf + 3 * n, &off)
        if err == 1:
            raise ValueError("not an area vector")
        if err == 2:
            raise ValueError(f"input is not {k}-skeletal")
        return tuple([buf[3 * n + i] for i in range(n)]), off
    finally:
        free(buf)


def map_fn_skeletal(f, int k, int kp, long long m, long long c):
    """k-skeletal -> kp-skeletal image of the function table ``f``."""
    cdef int n = len(f)
    cdef int i, j, a, err, shift
    cdef long long off, x
    cdef long long *vals = <long long *> malloc(6 * n * sizeof(long long))
    cdef int *w = <int *> malloc(2 * n * sizeof(int))
    cdef long long *g = vals + n
    cdef long long *best = vals + 4 * n
    cdef long long *res = vals + 5 * n
    try:
        for i in range(n):
            vals[i] = f[i]
        # stable insertion sort of labels by value
        for i in range(n):
            a = i
            j = i - 1
            while j >= 0 and vals[w[j]] > vals[a]:
                w[j + 1] = w[j]
                j -= 1
            w[j + 1] = a
        for i in range(n):
            g[i] = m * i + c - vals[w[i]]
        err = _map_core(g, n, k, kp, m, c, vals + 2 * n, vals + 3 * n, best, &off)
        if err:
            raise ValueError(f"input is not {k}-skeletal")
        shift = <int>(off - _floordiv(off, n) * n)
        for i in range(n):
            a = w[(i + shift) % n]
            res[a] = m * i + c - best[i]
        return tuple([res[i] for i in range(n)])
    finally:
        free(vals)
        free(w)
