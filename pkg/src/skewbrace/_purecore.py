"""Pure-Python kernels: reference implementations of the hot loops.

Same signatures as the compiled extension built from _fastcore.pyx;
kernels.py picks whichever is importable.  All functions take the flat
integer tables of a HolTables instance (numpy arrays are accepted and
converted to lists once per call).

Holomorph index conventions: element [x, a] is x * n_aut + a; products are
    mul([x1,a1],[x2,a2]) = [mulA[x1][autact[a1][x2]], autcomp[a1][a2]]
and the identity's index is the identity automorphism index (x = 0).
"""

from math import gcd

BACKEND_NAME = "pure"


def _rows(table):
    return table.tolist() if hasattr(table, "tolist") else [list(r) for r in table]


def _vec(arr):
    return arr.tolist() if hasattr(arr, "tolist") else list(arr)


def _mul_idx(mulA, autact, autcomp, n_aut, i, j):
    x1, a1 = divmod(i, n_aut)
    x2, a2 = divmod(j, n_aut)
    return mulA[x1][autact[a1][x2]] * n_aut + autcomp[a1][a2]


def _pow_idx(mulA, autact, autcomp, n_aut, ident, h, j):
    acc = ident
    base = h
    while j:
        if j & 1:
            acc = _mul_idx(mulA, autact, autcomp, n_aut, acc, base)
        base = _mul_idx(mulA, autact, autcomp, n_aut, base, base)
        j >>= 1
    return acc


def _close(mulA, autact, autcomp, n_aut, ident, gens, cap):
    """Subgroup generated by gens as a sorted index list, or None once its
    size exceeds cap.  Right-multiplication closure from the identity
    suffices in a finite group."""
    seen = {ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for v in frontier:
            x1, a1 = divmod(v, n_aut)
            row_m = mulA[x1]
            row_a = autact[a1]
            row_c = autcomp[a1]
            for gen in gens:
                x2, a2 = divmod(gen, n_aut)
                w = row_m[row_a[x2]] * n_aut + row_c[a2]
                if w not in seen:
                    if len(seen) >= cap:
                        return None
                    seen.add(w)
                    fresh.append(w)
        frontier = fresh
    return sorted(seen)


def close_generator_pairs(mulA, autact, autcomp, n, n_aut, ident, pairs, cap):
    """Close each generator pair; each entry is the sorted index tuple, or
    None when the closure grows past cap."""
    mulA, autact, autcomp = _rows(mulA), _rows(autact), _rows(autcomp)
    out = []
    for h1, h2 in pairs:
        closed = _close(mulA, autact, autcomp, n_aut, ident, (h1, h2), cap)
        out.append(tuple(closed) if closed is not None else None)
    return out


def _unrank_pair(idx, m):
    """Inverse of the row-major ranking of pairs (i, j) with i <= j < m."""
    i = 0
    row = m
    while idx >= row:
        idx -= row
        i += 1
        row -= 1
    return i, i + idx


def pair_count(m):
    return m * (m + 1) // 2


def generator_pair_scan(mulA, autact, autcomp, n, n_aut, ident, cands, start, stop):
    """Scan unordered candidate pairs (i <= j) with linear rank in
    [start, stop); return sorted deduplicated keys of every order-n subgroup
    that acts regularly (all x-components distinct)."""
    mulA, autact, autcomp = _rows(mulA), _rows(autact), _rows(autcomp)
    cands = _vec(cands)
    m = len(cands)
    found = set()
    for idx in range(start, stop):
        i, j = _unrank_pair(idx, m)
        closed = _close(mulA, autact, autcomp, n_aut, ident, (cands[i], cands[j]), n)
        if closed is None or len(closed) != n:
            continue
        if len({v // n_aut for v in closed}) == n:
            found.add(tuple(closed))
    return sorted(found)


def quintuple_relation_scan(
    mulA, autact, autcomp, invA, autinv,
    n, d, e, g, n_aut, phi_e, units_arr, id_spos,
    gamma, zdelta, kappa_h,
):
    """Measure the parameter set directly: all (t, a, c, u, v) whose pair
    X = [sigma^a, theta^c], Y = [sigma^u tau, theta^v phi_t] satisfies
    X^gamma = Y^(zeta delta) = 1 and Y X Y^-1 = X^kappa_h and generates a
    regular subgroup of order n.

    Returns a sorted list of packed values (((t*e + a)*g + c)*e + u)*g + v.
    X^gamma = 1 is folded into the (a, c) ranges; everything else uses table
    arithmetic only (no closed-form power shortcuts), so the scan is an
    independent check of the membership-condition tables.
    """
    mulA, autact, autcomp = _rows(mulA), _rows(autact), _rows(autcomp)
    invA, autinv, units_arr = _vec(invA), _vec(autinv), _vec(units_arr)
    results = []
    if zdelta % d != 0:
        return results
    ident = id_spos  # x = 0, alpha = identity
    a_step = e // gamma  # gamma | e here
    c_step = g // gcd(gamma, g)
    f1 = 1 % d
    for tpos in range(phi_e):
        t = units_arr[tpos]
        for u in range(e):
            yx = u * d + f1
            for v in range(g):
                ya = v * phi_e + tpos
                yh = yx * n_aut + ya
                if _pow_idx(mulA, autact, autcomp, n_aut, ident, yh, zdelta) != ident:
                    continue
                yainv = autinv[ya]
                yxinv = autact[yainv][invA[yx]]
                row_ym = mulA[yx]
                row_ya = autact[ya]
                for a_ in range(0, e, a_step):
                    xx = a_ * d
                    kx = ((a_ * kappa_h) % e) * d
                    t1x = row_ym[row_ya[xx]]
                    for c_ in range(0, g, c_step):
                        xa = c_ * phi_e + id_spos
                        t1a = autcomp[ya][xa]
                        # conj = (Y X) Y^-1 must equal X^kappa_h
                        if mulA[t1x][autact[t1a][yxinv]] != kx:
                            continue
                        if autcomp[t1a][yainv] != ((c_ * kappa_h) % g) * phi_e + id_spos:
                            continue
                        xh = xx * n_aut + xa
                        closed = _close(mulA, autact, autcomp, n_aut, ident, (xh, yh), n)
                        if closed is None or len(closed) != n:
                            continue
                        if len({w // n_aut for w in closed}) != n:
                            continue
                        results.append((((t * e + a_) * g + c_) * e + u) * g + v)
    results.sort()
    return results
