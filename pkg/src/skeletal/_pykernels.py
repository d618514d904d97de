"""Pure-Python hot loops.  ``_ckernels.pyx`` mirrors these signatures."""


def _can_some_fire(E, k, m, c, n, popcount, full):
    for mask in range(1, full + 1):
        f = popcount[mask]
        if f > k + 1:
            continue
        need = m * (n - f) + c
        for i in range(n):
            if mask >> i & 1 and E[i] < need:
                break
        else:
            return True
    return False


def skeletal_chip_naive(D, k, m, c):
    """Evaluate the three chip conditions by scanning all vertex subsets."""
    n = len(D)
    full = (1 << n) - 1
    popcount = [bin(x).count("1") for x in range(full + 1)]
    if any(d < 0 for d in D):
        return False
    if _can_some_fire(D, k, m, c, n, popcount, full):
        return False
    for T in range(1, full + 1):
        p = popcount[T]
        need = m * p
        if any(D[j] < need for j in range(n) if not T >> j & 1):
            continue
        gain = m * (n - p) + c
        E = [D[i] + gain if T >> i & 1 else D[i] - need for i in range(n)]
        if not _can_some_fire(E, k, m, c, n, popcount, full):
            return False
    return True


skeletal_chip_naive_generic = skeletal_chip_naive


def enumerate_skv(n, m, c, k):
    """All integer k-skeletal area vectors in lexicographic order."""
    top = m * (n - 1) + c - 1  # largest admissible x-coordinate
    out = []
    g = [0] * n
    need_pos = n - k - 1

    def extend(i, streak):
        if i == n:
            out.append(tuple(g))
            return
        lo = m * i + c - top
        hi = c if i == 0 else g[i - 1] + m
        if i >= need_pos and lo < 1:
            lo = 1
        if streak == k and hi > c:
            hi = c
        for v in range(lo, hi + 1):
            g[i] = v
            extend(i + 1, streak + 1 if v > c else 0)

    extend(0, 0)
    return out
