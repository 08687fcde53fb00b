"""Enumeration of the regular subgroups of Hol(A) isomorphic to M.

Two independent routes:

  * quintuple: walk the allowed generator quintuples family by family
    (assembled per prime and combined by CRT), close each generator pair,
    and deduplicate by canonical element set.

  * generic: scan all unordered generator pairs drawn from the holomorph
    elements that could lie in a regular subgroup at all (identity or
    fixed-point-free, order dividing n), close each pair, keep order-n
    subgroups acting regularly, and classify their isomorphism type.

The two must return identical element sets; the verification driver and the
acceptance suite compare them wholesale.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from math import gcd, lcm

import numpy as np

from .. import config, kernels
from ..counting import pair_context
from ..errors import BoundExceeded, NotAGroup, NotRegular
from ..groups import GroupDescriptor, canonicalize
from ..holomorph import HolElement, HolTables, hol_tables
from ..numtheory import multiplicative_order
from .partition import prime_partition
from .quintuples import predicate_quintuples


@dataclass(frozen=True)
class RegularSubgroup:
    """A regular subgroup of Hol(A), canonically keyed by its sorted element
    indices.  Quintuple bookkeeping is present when the subgroup came out of
    the parametrized enumeration."""

    A: GroupDescriptor
    M: GroupDescriptor
    key: tuple[int, ...]
    family: int | None = None
    quintuples: tuple[tuple[int, int, int, int, int], ...] = ()
    generator_indices: tuple[int, int] | None = None

    @cached_property
    def element_keys(self) -> tuple[tuple[int, int, int, int], ...]:
        """(u, f, r, s) quadruples, sorted; the strategy-independent key."""
        T = hol_tables(self.A)
        return tuple(T.hol_key(i) for i in self.key)

    @property
    def elements(self) -> tuple[HolElement, ...]:
        T = hol_tables(self.A)
        return tuple(T.hol_at(i) for i in self.key)

    @property
    def generators(self) -> tuple[HolElement, HolElement] | None:
        if self.generator_indices is None:
            return None
        T = hol_tables(self.A)
        return (T.hol_at(self.generator_indices[0]), T.hol_at(self.generator_indices[1]))


def _quintuple_generator_indices(T: HolTables, q5) -> tuple[int, int]:
    """Holomorph indices of X = [sigma^a, theta^c], Y = [sigma^u tau,
    theta^v phi_t]."""
    t, a, c, u, v = q5
    x_idx = (a * T.d) * T.n_aut + (c * T.phi_e + T.id_spos)
    y_idx = (u * T.d + 1 % T.d) * T.n_aut + (v * T.phi_e + T.unit_pos[t])
    return x_idx, y_idx


def _is_regular_key(T: HolTables, key: tuple[int, ...]) -> bool:
    """Size-n subgroup acts regularly iff its x-components are pairwise
    distinct (the image of the identity under h = [x, a] is x)."""
    if len(key) != T.n:
        return False
    return len({i // T.n_aut for i in key}) == T.n


def _chunk_ranges(total: int, workers: int) -> list[tuple[int, int]]:
    workers = max(1, min(workers, total)) if total else 1
    step = (total + workers - 1) // workers
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)] or [(0, 0)]


def _pair_scan_chunk(args):
    mulA, autact, autcomp, n, n_aut, ident, cands, lo, hi = args
    return kernels.generator_pair_scan(mulA, autact, autcomp, n, n_aut, ident, cands, lo, hi)


def _close_chunk(args):
    mulA, autact, autcomp, n, n_aut, ident, pairs, cap = args
    return kernels.close_generator_pairs(mulA, autact, autcomp, n, n_aut, ident, pairs, cap)


def _run_chunks(fn, jobs, workers):
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


def _hol_perm(T: HolTables, idx: int) -> np.ndarray:
    x, a = divmod(idx, T.n_aut)
    return T.mulA[x, T.autact[a]]


def _perm_order(perm: np.ndarray) -> int:
    seen = np.zeros(len(perm), dtype=bool)
    order = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        order = lcm(order, length)
    return order


def _generic_candidates(T: HolTables) -> np.ndarray:
    """Holomorph indices that can occur in a regular subgroup of order n:
    the identity, plus fixed-point-free elements of order dividing n."""
    points = np.arange(T.n)
    cands = []
    for idx in range(T.n_hol):
        perm = _hol_perm(T, idx)
        fixed = int((perm == points).sum())
        if fixed == T.n:
            cands.append(idx)  # identity
            continue
        if fixed:
            continue
        if T.n % _perm_order(perm) == 0:
            cands.append(idx)
    return np.asarray(cands, dtype=np.int64)


_generic_cache: dict[GroupDescriptor, tuple] = {}


def all_regular_subgroups_generic(A: GroupDescriptor, *, bound: int | None = None,
                                  workers: int = 1):
    """Every regular subgroup of Hol(A) of order n, of any isomorphism type,
    as (key, descriptor, (sigma_idx, tau_idx)) triples sorted by key."""
    if bound is None:
        bound = config.GENERIC_N_BOUND
    if A.n > bound:
        raise BoundExceeded(f"generic scan bound {bound} < n = {A.n}")
    if A in _generic_cache:
        return _generic_cache[A]
    T = hol_tables(A)
    cands = _generic_candidates(T)
    total = kernels.pair_count(len(cands))
    jobs = [
        (T.mulA, T.autact, T.autcomp, T.n, T.n_aut, T.id_spos, cands, lo, hi)
        for lo, hi in _chunk_ranges(total, workers)
    ]
    keys = set()
    for part in _run_chunks(_pair_scan_chunk, jobs, workers):
        keys.update(part)
    out = []
    for key in sorted(keys):
        desc, s_idx, t_idx = _recognize_key(T, key)
        out.append((key, desc, (s_idx, t_idx)))
    result = tuple(out)
    _generic_cache[A] = result
    return result


def enumerate_regular_subgroups(
    M: GroupDescriptor,
    A: GroupDescriptor,
    strategy: str = "quintuple",
    *,
    quintuple_bound: int | None = None,
    generic_bound: int | None = None,
    workers: int = 1,
) -> tuple[RegularSubgroup, ...]:
    """All regular subgroups of Hol(A) isomorphic to M, deterministically
    ordered by canonical key.  Both strategies return identical sets."""
    if strategy == "generic":
        subs = all_regular_subgroups_generic(A, bound=generic_bound, workers=workers)
        return tuple(
            RegularSubgroup(A=A, M=M, key=key, generator_indices=gens)
            for key, desc, gens in subs
            if desc == M
        )
    if strategy != "quintuple":
        raise ValueError(f"unknown strategy {strategy!r}")

    if quintuple_bound is None:
        quintuple_bound = config.QUINTUPLE_N_BOUND
    if A.n > quintuple_bound:
        raise BoundExceeded(f"quintuple scan bound {quintuple_bound} < n = {A.n}")
    ctx = pair_context(M, A)
    if not ctx.gamma_divides_e:
        return ()
    T = hol_tables(A)
    records: dict[tuple[int, ...], dict] = {}
    for h in range(1, ctx.w + 1):
        part = prime_partition(M, A, h)
        quints = predicate_quintuples(part)
        pairs = [_quintuple_generator_indices(T, q5) for q5 in quints]
        jobs = [
            (T.mulA, T.autact, T.autcomp, T.n, T.n_aut, T.id_spos, pairs[lo:hi], T.n)
            for lo, hi in _chunk_ranges(len(pairs), workers)
        ]
        keys = [k for chunk in _run_chunks(_close_chunk, jobs, workers) for k in chunk]
        for q5, pair, key in zip(quints, pairs, keys):
            if key is None or not _is_regular_key(T, key):
                raise NotRegular(
                    f"membership conditions admitted a non-regular quintuple "
                    f"{q5} for ({M}, {A}), family {h}"
                )
            rec = records.setdefault(key, {"families": set(), "quintuples": []})
            rec["families"].add(h)
            rec["quintuples"].append((q5, pair))
    out = []
    for key in sorted(records):
        rec = records[key]
        assert len(rec["families"]) == 1, (
            f"subgroup arose in families {sorted(rec['families'])} for ({M}, {A})"
        )
        quints = sorted(rec["quintuples"])
        out.append(
            RegularSubgroup(
                A=A,
                M=M,
                key=key,
                family=next(iter(rec["families"])),
                quintuples=tuple(q for q, _ in quints),
                generator_indices=quints[0][1],
            )
        )
    return tuple(out)


def _key_orders(T: HolTables, key) -> dict[int, int]:
    mul = T.hol_mul_list
    ident = T.id_spos
    out = {}
    for idx in key:
        acc = idx
        order = 1
        while acc != ident:
            acc = mul(acc, idx)
            order += 1
        out[idx] = order
    return out


def _recognize_key(T: HolTables, key) -> tuple[GroupDescriptor, int, int]:
    """Identify the abstract isomorphism type of a subgroup given by sorted
    holomorph indices: find (sigma', tau') realizing a metacyclic
    presentation and generating everything, trying sigma' by decreasing
    element order.  Returns (descriptor, sigma_idx, tau_idx)."""
    n1 = len(key)
    if n1 == 1:
        return canonicalize(1, 1, 1), key[0], key[0]
    mul = T.hol_mul_list
    ident = T.id_spos
    orders = _key_orders(T, key)
    by_order: dict[int, list[int]] = {}
    for idx, o in orders.items():
        by_order.setdefault(o, []).append(idx)
    key_set = set(key)
    for e1 in sorted(by_order, reverse=True):
        d1 = n1 // e1
        if e1 * d1 != n1 or gcd(d1, e1) != 1 or d1 not in by_order:
            continue
        for s_idx in sorted(by_order[e1]):
            power_of = {}
            acc = ident
            for j in range(e1):
                power_of[acc] = j
                acc = mul(acc, s_idx)
            for t_idx in sorted(by_order[d1]):
                w = mul(mul(t_idx, s_idx), T.hol_inv_list(t_idx))
                k1 = power_of.get(w)
                if k1 is None:
                    continue
                if e1 == 1:
                    k1 = 1
                elif gcd(k1, e1) != 1 or multiplicative_order(k1, e1) != d1:
                    continue
                closed = _close_idx(mul, ident, s_idx, t_idx, n1)
                if closed is None or len(closed) != n1 or not closed <= key_set:
                    continue
                return canonicalize(d1, e1, k1), s_idx, t_idx
    raise NotAGroup(f"no metacyclic presentation found for a set of size {n1}")


def _close_idx(mul, ident, g1, g2, cap):
    seen = {ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for v in frontier:
            for gen in (g1, g2):
                w = mul(v, gen)
                if w not in seen:
                    if len(seen) >= cap:
                        return None
                    seen.add(w)
                    fresh.append(w)
        frontier = fresh
    return seen


def recognize_group(elements) -> GroupDescriptor:
    """Canonical descriptor of the abstract group formed by a set of
    holomorph elements.  Raises NotAGroup if the set is not closed."""
    elems = list(elements)
    if not elems:
        raise NotAGroup("empty element set")
    A = elems[0].owner
    T = hol_tables(A)
    key = tuple(sorted(T.hol_index(h) for h in elems))
    key_set = set(key)
    mul = T.hol_mul_list
    for i in key:
        for j in key:
            if mul(i, j) not in key_set:
                raise NotAGroup(f"set not closed under multiplication at ({i}, {j})")
    return _recognize_key(T, key)[0]
