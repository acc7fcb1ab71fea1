"""Pure-Python reference kernel.

Hot integer routines shared by the whole package: canonical rotations,
the circular order on periodic boundary points, linking of axis endpoint
pairs, corner-set counts, and the necklace enumerator.  The compiled twin
in ``_speedups.pyx`` implements exactly the same contract; ``_kernel``
picks whichever is importable.

Words are ``bytes`` whose values encode letters as

    0 = a   1 = A (a inverse)   2 = b   3 = B (b inverse)

so ``x ^ 1`` is the inverse letter and numeric order is the canonical
letter order a < A < b < B.
"""

KERNEL_NAME = "python"

# Anticlockwise position of each letter's boundary arc, starting from the
# order origin just before the a-arc: cycle (a, B, b, A).
_RANK = (0, 3, 2, 1)


def is_canonical(w: bytes) -> bool:
    """True iff ``w`` is the least rotation of itself."""
    n = len(w)
    d = w + w
    for c in range(1, n):
        for t in range(n):
            x = d[c + t]
            y = w[t]
            if x != y:
                if x < y:
                    return False
                break
    return True


def canonical_rotation(w: bytes) -> bytes:
    """Least rotation of ``w`` under the letter order a < A < b < B."""
    n = len(w)
    d = w + w
    best = 0
    for c in range(1, n):
        for t in range(n):
            x = d[c + t]
            y = d[best + t]
            if x != y:
                if x < y:
                    best = c
                break
    return d[best:best + n]


def smallest_period(w: bytes) -> int:
    """Smallest p with w = (w[:p])^(len/p), via the KMP failure function."""
    n = len(w)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    p = n - fail[n - 1]
    return p if n % p == 0 else n


def cmp_endpoints(p: bytes, q: bytes) -> int:
    """Compare the periodic boundary points p^inf and q^inf.

    Returns -1/0/+1 for the anticlockwise order starting at the origin
    between the A-arc and the a-arc.  First letters are compared in the
    arc cycle starting at a; after a common prefix ending in letter e the
    next letters are compared in the cycle rotated to start at e inverse.
    Two periodic points agreeing on len(p)+len(q) letters are equal.
    """
    a0 = p[0]
    b0 = q[0]
    if a0 != b0:
        return -1 if _RANK[a0] < _RANK[b0] else 1
    lp = len(p)
    lq = len(q)
    prev = a0
    for j in range(1, lp + lq):
        x = p[j % lp]
        y = q[j % lq]
        if x != y:
            base = _RANK[prev ^ 1]
            rx = (_RANK[x] - base) & 3
            ry = (_RANK[y] - base) & 3
            return -1 if rx < ry else 1
        prev = x
    return 0


def linked_code(p1: bytes, m1: bytes, p2: bytes, m2: bytes) -> int:
    """Linking state of two axes given by periodic endpoint pairs.

    0: endpoints distinct, not linked.
    1: endpoints distinct and the pairs alternate around the circle.
    2: exactly one endpoint shared (anomalous for hyperbolic axes).
    3: same axis (both endpoints shared, either orientation).
    """
    c_pp = cmp_endpoints(p1, p2)
    c_pm = cmp_endpoints(p1, m2)
    c_mp = cmp_endpoints(m1, p2)
    c_mm = cmp_endpoints(m1, m2)
    if (c_pp == 0 and c_mm == 0) or (c_pm == 0 and c_mp == 0):
        return 3
    if c_pp == 0 or c_pm == 0 or c_mp == 0 or c_mm == 0:
        return 2
    c_ends = cmp_endpoints(p1, m1)
    if c_ends < 0:
        b1 = c_pp < 0 and c_mp > 0
        b2 = c_pm < 0 and c_mm > 0
    else:
        b1 = c_pp < 0 or c_mp > 0
        b2 = c_pm < 0 or c_mm > 0
    return 1 if b1 != b2 else 0


def _invert(w: bytes) -> bytes:
    return bytes(x ^ 1 for x in reversed(w))


def _block_split(w: bytes):
    """Run decomposition s1^i1 r1^j1 ... of a word starting at an a-type run.

    Returns (s, ie, r, je, s_pos, r_pos); letters are codes, *_pos are the
    start offsets of each run inside w.
    """
    n = len(w)
    s = []
    ie = []
    r = []
    je = []
    s_pos = []
    r_pos = []
    pos = 0
    while pos < n:
        s_pos.append(pos)
        x = w[pos]
        cnt = 0
        while pos < n and w[pos] == x:
            cnt += 1
            pos += 1
        s.append(x)
        ie.append(cnt)
        r_pos.append(pos)
        y = w[pos]
        cnt = 0
        while pos < n and w[pos] == y:
            cnt += 1
            pos += 1
        r.append(y)
        je.append(cnt)
    return s, ie, r, je, s_pos, r_pos


def h_counts(w: bytes):
    """Corner-class counts for a primitive word with at least one block.

    ``w`` must start at the beginning of an a-type run (canonical words
    do).  Returns (H, C1, C2, D1, D2) where the lists hold per-block
    counts; only pairs that pass both the letter/exponent side condition
    and the linking test are counted.
    """
    s, ie, r, je, s_pos, r_pos = _block_split(w)
    n = len(s)
    L = len(w)
    d = w + w
    wa = [d[s_pos[k]:s_pos[k] + L] for k in range(n)]
    wb = [d[r_pos[k]:r_pos[k] + L] for k in range(n)]
    ia = [_invert(x) for x in wa]
    ib = [_invert(x) for x in wb]
    C1 = [0] * n
    C2 = [0] * n
    D1 = [0] * n
    D2 = [0] * n
    for k in range(n):
        for l in range(k + 1, n):
            if (s[k] != s[l] or ie[k] != ie[l]) and \
                    linked_code(wa[k], ia[k], wa[l], ia[l]) == 1:
                C1[k] += 1
            if (s[k] != (s[l] ^ 1) or ie[k] != ie[l]) and \
                    linked_code(wb[k], ib[k], wa[l], ia[l]) == 1:
                C2[k] += 1
            if (r[k] != r[l] or je[k] != je[l]) and \
                    linked_code(wb[k], ib[k], wb[l], ib[l]) == 1:
                D1[k] += 1
    for l in range(n):
        if linked_code(wa[0], ia[0], wb[l], ib[l]) == 1:
            D2[0] += 1
    for k in range(1, n):
        for l in range(k, n):
            if (r[k - 1] != (r[l] ^ 1) or je[k - 1] != je[l]) and \
                    linked_code(wa[k], ia[k], wb[l], ib[l]) == 1:
                D2[k] += 1
    return sum(C1) + sum(C2) + sum(D1) + sum(D2), C1, C2, D1, D2


def closed_form(ie, je) -> int:
    """nL - 2n^2 - sum over block pairs of |i_k - i_l| + |j_k - j_l|."""
    n = len(ie)
    L = sum(ie) + sum(je)
    acc = 0
    for k in range(n):
        for l in range(k + 1, n):
            acc += abs(ie[k] - ie[l]) + abs(je[k] - je[l])
    return n * L - 2 * n * n - acc


def word_stats(w: bytes):
    """Full per-class summary of a canonical cyclically reduced word.

    Returns (root, m, n0, H0, cf0, i, simple): the canonical primitive
    root, its multiplicity, the root's block count (0 for powers of a
    single letter), the root's corner count and closed-form term, the
    self-intersection number m^2 * (H0 + cf0), and a 0/1 simplicity flag.
    """
    L = len(w)
    t0 = w[0] >> 1
    if all(x >> 1 == t0 for x in w):
        return w[:1], L, 0, 0, 0, 0, 1
    p = smallest_period(w)
    root = w[:p]
    m = L // p
    H0, _, _, _, _ = h_counts(root)
    _, ie, _, je, _, _ = _block_split(root)
    cf0 = closed_form(ie, je)
    i = m * m * (H0 + cf0)
    return root, m, len(ie), H0, cf0, i, 1 if i == 0 else 0


def necklaces(length: int, prefix: bytes = b""):
    """Yield canonical cyclically reduced words of ``length``, ascending.

    With ``prefix`` the stream is restricted to words starting with those
    letters (used to partition work); prefixes that cannot start a
    canonical reduced word yield nothing.
    """
    if length < 1 or len(prefix) > length:
        return
    if prefix:
        firsts = (prefix[0],)
    else:
        firsts = range(4)
    for first in firsts:
        buf = bytearray(length)
        if prefix:
            if any(x < first for x in prefix):
                continue
            if any(prefix[t + 1] == prefix[t] ^ 1 for t in range(len(prefix) - 1)):
                continue
            buf[:len(prefix)] = prefix
            start = len(prefix)
        else:
            buf[0] = first
            start = 1
        if start == length:
            if buf[0] != buf[-1] ^ 1 and is_canonical(bytes(buf)):
                yield bytes(buf)
            continue
        cand = [first] * (length + 1)
        depth = start
        cand[depth] = first
        while depth >= start:
            if depth == length:
                if buf[0] != buf[-1] ^ 1 and is_canonical(bytes(buf)):
                    yield bytes(buf)
                depth -= 1
                continue
            x = cand[depth]
            while x < 4 and x == buf[depth - 1] ^ 1:
                x += 1
            if x < 4:
                cand[depth] = x + 1
                buf[depth] = x
                depth += 1
                cand[depth] = first
            else:
                depth -= 1
