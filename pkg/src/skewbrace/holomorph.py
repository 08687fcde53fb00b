"""Arithmetic in Aut(A) and Hol(A) = A x| Aut(A) for A = G(d,e,k).

Aut(A) is isomorphic to Z_g x| Z_e^x, generated by

    theta:  sigma -> sigma,   tau -> sigma^z tau
    phi_s:  sigma -> sigma^s, tau -> tau        (s a unit mod e)

and every automorphism is uniquely theta^r phi_s with r mod g, s mod e.  The
convention throughout is "phi_s acts first, theta^r second"; it pins the
semidirect relation phi_s theta = theta^s phi_s, and build_tables() verifies
the resulting composition law against pointwise application on every element.

Holomorph elements are written [x, alpha] with product
[x, alpha][y, beta] = [x alpha(y), alpha beta] and natural action
[x, alpha] . y = x alpha(y) on A.
"""

from dataclasses import dataclass
from functools import cache

import numpy as np

from .errors import OwnerMismatch, ShapeError
from .groups import (
    GroupDescriptor,
    GroupElement,
    group_inv,
    group_mul,
    identity,
    structure_params,
)
from .numtheory import geometric_sum, inverse_mod, t_sum, units


@dataclass(frozen=True)
class Automorphism:
    """theta^r phi_s acting on its owner group; r is reduced mod g and s
    mod e on construction."""

    r: int
    s: int
    owner: GroupDescriptor

    def __post_init__(self):
        object.__setattr__(self, "r", self.r % structure_params(self.owner).g)
        object.__setattr__(self, "s", self.s % self.owner.e if self.owner.e > 1 else 0)

    def __call__(self, x: GroupElement) -> GroupElement:
        return aut_apply(self, x)

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        return aut_compose(self, other)

    def inverse(self) -> "Automorphism":
        return aut_invert(self)

    def key(self) -> tuple[int, int]:
        return (self.r, self.s)


@dataclass(frozen=True)
class HolElement:
    """Pair [x, alpha] of Hol(A) in normal form."""

    x: GroupElement
    alpha: Automorphism

    def __mul__(self, other: "HolElement") -> "HolElement":
        return hol_mul(self, other)

    def inverse(self) -> "HolElement":
        return hol_inv(self)

    @property
    def owner(self) -> GroupDescriptor:
        return self.x.owner

    def key(self) -> tuple[int, int, int, int]:
        """(u, f, r, s): the canonical sort key for element sets."""
        return (self.x.u, self.x.f, self.alpha.r, self.alpha.s)

    def __lt__(self, other: "HolElement") -> bool:
        if self.owner != other.owner:
            raise OwnerMismatch(f"{self.owner} vs {other.owner}")
        return self.key() < other.key()


def identity_aut(G: GroupDescriptor) -> Automorphism:
    return Automorphism(0, 1 % G.e, G)


def hol_identity(G: GroupDescriptor) -> HolElement:
    return HolElement(identity(G), identity_aut(G))


@cache
def _z_geom(G: GroupDescriptor) -> tuple[int, ...]:
    """z * S(k, f) mod e for f in [0, d): the sigma-shift theta applies to tau^f."""
    z = structure_params(G).z
    return tuple((z * geometric_sum(G.k, f, G.e)) % G.e for f in range(G.d))


def aut_apply(alpha: Automorphism, x: GroupElement) -> GroupElement:
    """(theta^r phi_s)(sigma^u tau^f) = sigma^(s u + r z S(k,f)) tau^f."""
    if alpha.owner != x.owner:
        raise OwnerMismatch(f"{alpha.owner} vs {x.owner}")
    G = x.owner
    return GroupElement((alpha.s * x.u + alpha.r * _z_geom(G)[x.f]) % G.e, x.f, G)


def aut_compose(alpha: Automorphism, beta: Automorphism) -> Automorphism:
    """(theta^r phi_s)(theta^r' phi_s') = theta^(r + s r') phi_(s s')."""
    if alpha.owner != beta.owner:
        raise OwnerMismatch(f"{alpha.owner} vs {beta.owner}")
    G = alpha.owner
    g = structure_params(G).g
    return Automorphism((alpha.r + alpha.s * beta.r) % g, (alpha.s * beta.s) % G.e if G.e > 1 else 0, G)


def aut_invert(alpha: Automorphism) -> Automorphism:
    G = alpha.owner
    g = structure_params(G).g
    sinv = inverse_mod(alpha.s, G.e)
    return Automorphism((-sinv * alpha.r) % g, sinv if G.e > 1 else 0, G)


def hol_mul(h1: HolElement, h2: HolElement) -> HolElement:
    """[x, alpha][y, beta] = [x alpha(y), alpha beta]."""
    if h1.owner != h2.owner:
        raise OwnerMismatch(f"{h1.owner} vs {h2.owner}")
    return HolElement(group_mul(h1.x, aut_apply(h1.alpha, h2.x)),
                      aut_compose(h1.alpha, h2.alpha))


def hol_inv(h: HolElement) -> HolElement:
    ainv = aut_invert(h.alpha)
    return HolElement(aut_apply(ainv, group_inv(h.x)), ainv)


def hol_act(h: HolElement, y: GroupElement) -> GroupElement:
    """[x, alpha] . y = x alpha(y); a faithful left action on A."""
    if h.owner != y.owner:
        raise OwnerMismatch(f"{h.owner} vs {y.owner}")
    return group_mul(h.x, aut_apply(h.alpha, y))


def hol_pow(h: HolElement, j: int) -> HolElement:
    if j < 0:
        return hol_pow(hol_inv(h), -j)
    acc = hol_identity(h.owner)
    base = h
    while j:
        if j & 1:
            acc = hol_mul(acc, base)
        base = hol_mul(base, base)
        j >>= 1
    return acc


def y_power(Y: HolElement, j: int) -> HolElement:
    """Closed form for Y^j when Y = [sigma^u tau, theta^v phi_t].

    Y^j = [sigma^A(j) tau^j, theta^(v S(t,j)) phi_(t^j)] with
    A(j) = u S(tk, j) + v z k T(k, t, j)  (mod e).
    """
    G = Y.owner
    if Y.x.f != 1 % G.d:
        raise ShapeError(f"tau-exponent must be 1, got {Y.x.f}")
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")
    sp = structure_params(G)
    u, v, t = Y.x.u, Y.alpha.r, Y.alpha.s
    a_j = (u * geometric_sum((t * G.k) % G.e, j, G.e)
           + v * sp.z * G.k * t_sum(G.k, t, j, G.e)) % G.e
    return HolElement(
        GroupElement(a_j, j % G.d, G),
        Automorphism((v * geometric_sum(t, j, sp.g)) % sp.g,
                     pow(t, j, G.e) if G.e > 1 else 0, G),
    )


def conjugate_by_aut(psi: Automorphism, h: HolElement) -> HolElement:
    """[1, psi] h [1, psi]^-1 = [psi(x), psi alpha psi^-1]."""
    if psi.owner != h.owner:
        raise OwnerMismatch(f"{psi.owner} vs {h.owner}")
    return HolElement(
        aut_apply(psi, h.x),
        aut_compose(aut_compose(psi, h.alpha), aut_invert(psi)),
    )


def aut_elements(G: GroupDescriptor):
    """All g*phi(e) automorphisms, ordered by (r, s)."""
    g = structure_params(G).g
    for r in range(g):
        for s in units(G.e):
            yield Automorphism(r, s, G)


class HolTables:
    """Flat integer tables for one additive group, shared by the kernels.

    Element index: sigma^u tau^f -> u*d + f (identity is 0).
    Automorphism index: theta^r phi_s -> r*phi(e) + position of s in units(e).
    Holomorph index: [x, alpha] -> x_idx * n_aut + a_idx.
    """

    def __init__(self, G: GroupDescriptor):
        self.G = G
        sp = structure_params(G)
        self.n, self.d, self.e, self.k = G.n, G.d, G.e, G.k
        self.z, self.g = sp.z, sp.g
        self.units = units(G.e)
        self.phi_e = len(self.units)
        self.unit_pos = {s: i for i, s in enumerate(self.units)}
        self.n_aut = self.g * self.phi_e
        self.n_hol = self.n * self.n_aut
        self.id_spos = self.unit_pos[1 % G.e]

        n, d, e = self.n, self.d, self.e
        kpow = [pow(G.k, f, e) for f in range(d)]
        mul = np.empty((n, n), dtype=np.int32)
        for u1 in range(e):
            for f1 in range(d):
                row = mul[u1 * d + f1]
                kf = kpow[f1]
                for u2 in range(e):
                    base = ((u1 + kf * u2) % e) * d
                    for f2 in range(d):
                        row[u2 * d + f2] = base + (f1 + f2) % d
        self.mulA = mul

        inv = np.empty(n, dtype=np.int32)
        for u in range(e):
            for f in range(d):
                kinv = inverse_mod(kpow[f], e)
                inv[u * d + f] = ((-kinv * u) % e) * d + (-f) % d
        self.invA = inv

        zgeom = _z_geom(G)
        autact = np.empty((self.n_aut, n), dtype=np.int32)
        for r in range(self.g):
            for spos, s in enumerate(self.units):
                row = autact[r * self.phi_e + spos]
                for u in range(e):
                    for f in range(d):
                        row[u * d + f] = ((s * u + r * zgeom[f]) % e) * d + f
        self.autact = autact

        # Composition and inversion from the semidirect law; verified against
        # pointwise application below.
        autcomp = np.empty((self.n_aut, self.n_aut), dtype=np.int32)
        autinv = np.empty(self.n_aut, dtype=np.int32)
        for r1 in range(self.g):
            for s1pos, s1 in enumerate(self.units):
                i = r1 * self.phi_e + s1pos
                for r2 in range(self.g):
                    base = ((r1 + s1 * r2) % self.g) * self.phi_e
                    for s2pos, s2 in enumerate(self.units):
                        autcomp[i, r2 * self.phi_e + s2pos] = (
                            base + self.unit_pos[(s1 * s2) % e if e > 1 else 0]
                        )
                s1inv = inverse_mod(s1, e)
                autinv[i] = ((-s1inv * r1) % self.g) * self.phi_e + self.unit_pos[s1inv]
        self.autcomp = autcomp
        self.autinv = autinv

        self._check_composition_convention()

    def _check_composition_convention(self) -> None:
        """autcomp must agree with applying the two maps in sequence on every
        element; this pins the semidirect convention."""
        act, comp = self.autact, self.autcomp
        for i in range(self.n_aut):
            if not np.array_equal(act[comp[i]], act[i][act]):
                raise AssertionError(
                    f"automorphism composition convention broken at index {i} of {self.G}"
                )

    # -- index helpers ----------------------------------------------------

    def elem_index(self, x: GroupElement) -> int:
        return x.u * self.d + x.f

    def elem_at(self, idx: int) -> GroupElement:
        return GroupElement(idx // self.d, idx % self.d, self.G)

    def aut_index(self, alpha: Automorphism) -> int:
        return alpha.r * self.phi_e + self.unit_pos[alpha.s]

    def aut_at(self, idx: int) -> Automorphism:
        return Automorphism(idx // self.phi_e, self.units[idx % self.phi_e], self.G)

    def hol_index(self, h: HolElement) -> int:
        return self.elem_index(h.x) * self.n_aut + self.aut_index(h.alpha)

    def hol_at(self, idx: int) -> HolElement:
        return HolElement(self.elem_at(idx // self.n_aut), self.aut_at(idx % self.n_aut))

    def hol_key(self, idx: int) -> tuple[int, int, int, int]:
        x, a = divmod(idx, self.n_aut)
        return (x // self.d, x % self.d, a // self.phi_e, self.units[a % self.phi_e])

    @property
    def _lists(self):
        """List-of-lists copies of the tables; Python-level loops on these
        are much faster than scalar numpy indexing."""
        cached = getattr(self, "_lists_cache", None)
        if cached is None:
            cached = (
                self.mulA.tolist(),
                self.autact.tolist(),
                self.autcomp.tolist(),
                self.invA.tolist(),
                self.autinv.tolist(),
            )
            self._lists_cache = cached
        return cached

    def hol_mul_list(self, i: int, j: int) -> int:
        mulA, autact, autcomp, _, _ = self._lists
        x1, a1 = divmod(i, self.n_aut)
        x2, a2 = divmod(j, self.n_aut)
        return mulA[x1][autact[a1][x2]] * self.n_aut + autcomp[a1][a2]

    def hol_inv_list(self, i: int) -> int:
        _, autact, _, invA, autinv = self._lists
        x, a = divmod(i, self.n_aut)
        ai = autinv[a]
        return autact[ai][invA[x]] * self.n_aut + ai

    def hol_act_idx(self, i: int, y: int) -> int:
        mulA, autact, _, _, _ = self._lists
        x, a = divmod(i, self.n_aut)
        return mulA[x][autact[a][y]]

    def conj_key_by_aut(self, key: np.ndarray, psi: int) -> np.ndarray:
        """Conjugate a sorted array of holomorph indices by automorphism
        index psi (elementwise [x,a] -> [psi(x), psi a psi^-1])."""
        x, a = np.divmod(key, self.n_aut)
        newx = self.autact[psi, x]
        newa = self.autcomp[self.autcomp[psi, a], self.autinv[psi]]
        out = newx.astype(np.int64) * self.n_aut + newa
        out.sort()
        return out


@cache
def hol_tables(G: GroupDescriptor) -> HolTables:
    return HolTables(G)
