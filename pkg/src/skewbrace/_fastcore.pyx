# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot enumeration loops.

Mirrors _purecore.py function for function; kernels.py falls back to the
pure module when this extension is unavailable.  See _purecore.py for the
index conventions and the meaning of each scan.
"""

from libc.stdlib cimport calloc, free, malloc

BACKEND_NAME = "compiled"


cdef inline long _mul(const int[:, ::1] mulA, const int[:, ::1] autact,
                      const int[:, ::1] autcomp, long n_aut, long i, long j) noexcept:
    cdef long x1 = i // n_aut, a1 = i % n_aut
    cdef long x2 = j // n_aut, a2 = j % n_aut
    return (<long> mulA[x1, autact[a1, x2]]) * n_aut + autcomp[a1, a2]


cdef long _pow(const int[:, ::1] mulA, const int[:, ::1] autact,
               const int[:, ::1] autcomp, long n_aut, long ident,
               long h, long j) noexcept:
    cdef long acc = ident, base = h
    while j:
        if j & 1:
            acc = _mul(mulA, autact, autcomp, n_aut, acc, base)
        base = _mul(mulA, autact, autcomp, n_aut, base, base)
        j >>= 1
    return acc


cdef long _close(const int[:, ::1] mulA, const int[:, ::1] autact,
                 const int[:, ::1] autcomp, long n_aut, long ident,
                 long g1, long g2, long cap,
                 int* stamp, int sid, long* members) noexcept:
    """BFS closure of {g1, g2}; fills members, returns the size, or -1 once
    it exceeds cap.  members doubles as the queue."""
    cdef long head = 0, count = 1, v, w, x1, a1, x2, a2
    stamp[ident] = sid
    members[0] = ident
    while head < count:
        v = members[head]
        head += 1
        x1 = v // n_aut
        a1 = v % n_aut
        x2 = g1 // n_aut
        a2 = g1 % n_aut
        w = (<long> mulA[x1, autact[a1, x2]]) * n_aut + autcomp[a1, a2]
        if stamp[w] != sid:
            if count >= cap:
                return -1
            stamp[w] = sid
            members[count] = w
            count += 1
        x2 = g2 // n_aut
        a2 = g2 % n_aut
        w = (<long> mulA[x1, autact[a1, x2]]) * n_aut + autcomp[a1, a2]
        if stamp[w] != sid:
            if count >= cap:
                return -1
            stamp[w] = sid
            members[count] = w
            count += 1
    return count


cdef bint _regular(long* members, long count, long n_aut, int* xstamp, int sid) noexcept:
    cdef long i, x
    for i in range(count):
        x = members[i] // n_aut
        if xstamp[x] == sid:
            return False
        xstamp[x] = sid
    return True


cdef void _sort_members(long* members, long count) noexcept:
    cdef long i, j, key
    for i in range(1, count):
        key = members[i]
        j = i - 1
        while j >= 0 and members[j] > key:
            members[j + 1] = members[j]
            j -= 1
        members[j + 1] = key


cdef tuple _member_tuple(long* members, long count):
    _sort_members(members, count)
    cdef long i
    return tuple(members[i] for i in range(count))


def close_generator_pairs(mulA_in, autact_in, autcomp_in, n, n_aut, ident, pairs, cap):
    """Close each generator pair; each entry is the sorted index tuple, or
    None when the closure grows past cap."""
    cdef const int[:, ::1] mulA = mulA_in
    cdef const int[:, ::1] autact = autact_in
    cdef const int[:, ::1] autcomp = autcomp_in
    cdef long c_naut = n_aut, c_ident = ident, c_cap = cap
    cdef long n_hol = (<long> mulA.shape[0]) * c_naut
    cdef int* stamp = <int*> calloc(n_hol, sizeof(int))
    cdef long* members = <long*> malloc((c_cap + 1) * sizeof(long))
    if stamp == NULL or members == NULL:
        free(stamp); free(members)
        raise MemoryError()
    cdef int sid = 0
    cdef long size, h1, h2
    out = []
    try:
        for h1, h2 in pairs:
            sid += 1
            size = _close(mulA, autact, autcomp, c_naut, c_ident, h1, h2,
                          c_cap, stamp, sid, members)
            out.append(_member_tuple(members, size) if size >= 0 else None)
    finally:
        free(stamp)
        free(members)
    return out


def pair_count(m):
    return m * (m + 1) // 2


def generator_pair_scan(mulA_in, autact_in, autcomp_in, n, n_aut, ident, cands_in, start, stop):
    """Scan unordered candidate pairs (i <= j) with linear rank in
    [start, stop); return sorted deduplicated keys of every order-n subgroup
    that acts regularly (all x-components distinct)."""
    cdef const int[:, ::1] mulA = mulA_in
    cdef const int[:, ::1] autact = autact_in
    cdef const int[:, ::1] autcomp = autcomp_in
    cdef const long[::1] cands = cands_in
    cdef long c_n = n, c_naut = n_aut, c_ident = ident
    cdef long c_start = start, c_stop = stop
    cdef long m = cands.shape[0]
    cdef long n_hol = (<long> mulA.shape[0]) * c_naut
    cdef int* stamp = <int*> calloc(n_hol, sizeof(int))
    cdef int* xstamp = <int*> calloc(mulA.shape[0], sizeof(int))
    cdef long* members = <long*> malloc((c_n + 1) * sizeof(long))
    if stamp == NULL or xstamp == NULL or members == NULL:
        free(stamp); free(xstamp); free(members)
        raise MemoryError()
    cdef int sid = 0
    cdef long rank = 0, i, j, nrow, size
    found = set()
    try:
        for i in range(m):
            nrow = m - i
            if rank + nrow <= c_start:
                rank += nrow
                continue
            for j in range(i, m):
                if rank >= c_stop:
                    return sorted(found)
                if rank >= c_start:
                    sid += 1
                    size = _close(mulA, autact, autcomp, c_naut, c_ident,
                                  cands[i], cands[j], c_n, stamp, sid, members)
                    if size == c_n:
                        sid += 1
                        if _regular(members, size, c_naut, xstamp, sid):
                            found.add(_member_tuple(members, size))
                rank += 1
    finally:
        free(stamp)
        free(xstamp)
        free(members)
    return sorted(found)


def quintuple_relation_scan(mulA_in, autact_in, autcomp_in, invA_in, autinv_in,
                            n, d, e, g, n_aut, phi_e, units_in, id_spos,
                            gamma, zdelta, kappa_h):
    """Measured parameter sweep; see _purecore.quintuple_relation_scan."""
    cdef const int[:, ::1] mulA = mulA_in
    cdef const int[:, ::1] autact = autact_in
    cdef const int[:, ::1] autcomp = autcomp_in
    cdef const int[::1] invA = invA_in
    cdef const int[::1] autinv = autinv_in
    cdef const long[::1] units_arr = units_in
    cdef long c_n = n, c_d = d, c_e = e, c_g = g
    cdef long c_naut = n_aut, c_phie = phi_e, c_ids = id_spos
    cdef long c_gamma = gamma, c_zdelta = zdelta, c_kappa = kappa_h

    results = []
    if c_zdelta % c_d != 0:
        return results

    cdef long n_hol = (<long> mulA.shape[0]) * c_naut
    cdef int* stamp = <int*> calloc(n_hol, sizeof(int))
    cdef int* xstamp = <int*> calloc(mulA.shape[0], sizeof(int))
    cdef long* members = <long*> malloc((c_n + 1) * sizeof(long))
    if stamp == NULL or xstamp == NULL or members == NULL:
        free(stamp); free(xstamp); free(members)
        raise MemoryError()

    cdef long ident = c_ids  # x = 0, alpha = identity
    cdef long a_step = c_e // c_gamma
    cdef long x0 = c_gamma, y0 = c_g, swap  # gcd(gamma, g)
    while y0:
        swap = x0 % y0
        x0 = y0
        y0 = swap
    cdef long c_step = c_g // x0
    cdef long f1 = 1 % c_d
    cdef int sid = 0
    cdef long tpos, t, u, v, a_, c_, yx, ya, yh, yainv, yxinv
    cdef long xx, xa, xh, kx, t1x, t1a, size
    try:
        for tpos in range(c_phie):
            t = units_arr[tpos]
            for u in range(c_e):
                yx = u * c_d + f1
                for v in range(c_g):
                    ya = v * c_phie + tpos
                    yh = yx * c_naut + ya
                    if _pow(mulA, autact, autcomp, c_naut, ident, yh, c_zdelta) != ident:
                        continue
                    yainv = autinv[ya]
                    yxinv = autact[yainv, invA[yx]]
                    for a_ in range(0, c_e, a_step):
                        xx = a_ * c_d
                        kx = ((a_ * c_kappa) % c_e) * c_d
                        t1x = mulA[yx, autact[ya, xx]]
                        for c_ in range(0, c_g, c_step):
                            xa = c_ * c_phie + c_ids
                            t1a = autcomp[ya, xa]
                            if mulA[t1x, autact[t1a, yxinv]] != kx:
                                continue
                            if autcomp[t1a, yainv] != ((c_ * c_kappa) % c_g) * c_phie + c_ids:
                                continue
                            xh = xx * c_naut + xa
                            sid += 1
                            size = _close(mulA, autact, autcomp, c_naut, ident,
                                          xh, yh, c_n, stamp, sid, members)
                            if size != c_n:
                                continue
                            sid += 1
                            if not _regular(members, size, c_naut, xstamp, sid):
                                continue
                            results.append((((t * c_e + a_) * c_g + c_) * c_e + u) * c_g + v)
    finally:
        free(stamp)
        free(xstamp)
        free(members)
    results.sort()
    return results
