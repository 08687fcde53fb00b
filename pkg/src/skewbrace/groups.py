"""Groups of squarefree order.

Every group of squarefree order n is metacyclic:

    G(d,e,k) = < sigma, tau | sigma^e = tau^d = 1, tau sigma tau^-1 = sigma^k >

with n = d*e, gcd(d,e) = 1 and ord_e(k) = d.  Two triples give isomorphic
groups iff d, e agree and k, k' generate the same cyclic subgroup of the
units mod e.  This module provides the canonical descriptor for each
isomorphism class, exhaustive enumeration for a given order, and exact
element arithmetic in the normal form sigma^u tau^f.
"""

from dataclasses import dataclass
from functools import cache
from math import gcd

from . import config
from .errors import InvalidTriple, NotSquarefree, OwnerMismatch
from .numtheory import (
    euler_phi,
    factor_squarefree,
    inverse_mod,
    multiplicative_order,
    units,
)


@dataclass(frozen=True, order=True)
class GroupDescriptor:
    """Canonical (d, e, k) identity card of a group of squarefree order."""

    d: int
    e: int
    k: int

    @property
    def n(self) -> int:
        return self.d * self.e

    @property
    def primes_of_n(self) -> tuple[int, ...]:
        return tuple(factor_squarefree(self.n))

    @property
    def is_cyclic(self) -> bool:
        return self.d == 1

    @property
    def is_dihedral(self) -> bool:
        # Dihedral of order 2m, m odd: the order-2 action inverting sigma.
        return self.d == 2 and self.k == self.e - 1

    def __str__(self) -> str:
        return f"G({self.d},{self.e},{self.k})"


@dataclass(frozen=True)
class StructureParams:
    """The two multiplicative invariants z = gcd(k-1, e) and g = e/z.

    The same numbers are conventionally called zeta and gamma when the group
    plays the multiplicative role of a pair, so both spellings are exposed.
    """

    z: int
    g: int

    @property
    def zeta(self) -> int:
        return self.z

    @property
    def gamma(self) -> int:
        return self.g


@dataclass(frozen=True)
class GroupElement:
    """Normal form sigma^u tau^f of an element of its owner group.

    Exponents are stored as least nonnegative residues (normalised on
    construction), so equality and hashing see one representative per
    element."""

    u: int
    f: int
    owner: GroupDescriptor

    def __post_init__(self):
        object.__setattr__(self, "u", self.u % self.owner.e)
        object.__setattr__(self, "f", self.f % self.owner.d)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return group_mul(self, other)

    def inverse(self) -> "GroupElement":
        return group_inv(self)

    def __pow__(self, j: int) -> "GroupElement":
        return group_pow(self, j)

    @property
    def index(self) -> int:
        """Carrier label u*d + f; 0 is the identity."""
        return self.u * self.owner.d + self.f

    def key(self) -> tuple[int, int]:
        return (self.u, self.f)


def _validate_triple(d: int, e: int, k: int) -> None:
    if d < 1 or e < 1:
        raise InvalidTriple(f"d, e must be positive, got ({d}, {e})")
    try:
        factor_squarefree(d * e)
    except NotSquarefree as exc:
        raise InvalidTriple(f"n = {d * e} is not squarefree: {exc}") from None
    if gcd(d, e) != 1:
        raise InvalidTriple(f"gcd({d},{e}) != 1")
    if e == 1:
        if k != 1:
            raise InvalidTriple(f"k must be 1 when e = 1, got {k}")
        if d != 1:
            raise InvalidTriple(f"ord_1(k) = 1 != d = {d}")
        return
    if not 1 <= k < e:
        raise InvalidTriple(f"k must lie in [1, {e}), got {k}")
    if gcd(k, e) != 1:
        raise InvalidTriple(f"gcd({k},{e}) != 1")
    if multiplicative_order(k, e) != d:
        raise InvalidTriple(f"ord_{e}({k}) = {multiplicative_order(k, e)}, expected {d}")


def canonicalize(d: int, e: int, k: int) -> GroupDescriptor:
    """Canonical descriptor of the isomorphism class of G(d,e,k).

    The canonical k is the smallest generator of the cyclic subgroup <k> of
    the units mod e that has exact order d, so two valid triples canonicalize
    identically iff the groups are isomorphic.
    """
    _validate_triple(d, e, k)
    if e == 1 or d == 1:
        return GroupDescriptor(d=1, e=e, k=1)
    best = min(pow(k, j, e) for j in range(1, d + 1) if gcd(j, d) == 1)
    return GroupDescriptor(d=d, e=e, k=best)


@cache
def enumerate_groups(n: int, limit: int | None = None) -> tuple[GroupDescriptor, ...]:
    """All groups of squarefree order n, one canonical descriptor each.

    Deterministic order: d ascending, then e, then k.  Raises NotSquarefree
    for invalid n and BoundExceeded above the formula limit.
    """
    from .errors import BoundExceeded

    if limit is None:
        limit = config.FORMULA_N_LIMIT
    if n > limit:
        raise BoundExceeded(f"n = {n} exceeds the formula bound {limit}")
    factor_squarefree(n)  # raises NotSquarefree when appropriate
    found = []
    for d in range(1, n + 1):
        if n % d:
            continue
        e = n // d
        if gcd(d, e) != 1:
            continue
        if d == 1:
            found.append(GroupDescriptor(d=1, e=e, k=1))
            continue
        seen = set()
        for k in units(e):
            if multiplicative_order(k, e) == d:
                seen.add(canonicalize(d, e, k).k)
        found.extend(GroupDescriptor(d=d, e=e, k=k) for k in sorted(seen))
    return tuple(sorted(found, key=lambda G: (G.d, G.e, G.k)))


def structure_params(G: GroupDescriptor) -> StructureParams:
    """z = gcd(k-1, e) and g = e/z; z is exactly the part of sigma fixed
    elementwise by conjugation-by-tau."""
    z = gcd(G.k - 1, G.e) if G.e > 1 else 1
    return StructureParams(z=z, g=G.e // z)


def identity(G: GroupDescriptor) -> GroupElement:
    return GroupElement(0, 0, G)


def elements(G: GroupDescriptor):
    """All n elements in (u, f) lexicographic order (identity first)."""
    for u in range(G.e):
        for f in range(G.d):
            yield GroupElement(u, f, G)


@cache
def _k_powers(G: GroupDescriptor) -> tuple[int, ...]:
    return tuple(pow(G.k, f, G.e) for f in range(G.d))


def group_mul(x: GroupElement, y: GroupElement) -> GroupElement:
    """sigma^u1 tau^f1 * sigma^u2 tau^f2 = sigma^(u1 + k^f1 u2) tau^(f1+f2)."""
    if x.owner != y.owner:
        raise OwnerMismatch(f"{x.owner} vs {y.owner}")
    G = x.owner
    return GroupElement(
        (x.u + _k_powers(G)[x.f] * y.u) % G.e,
        (x.f + y.f) % G.d,
        G,
    )


def group_inv(x: GroupElement) -> GroupElement:
    G = x.owner
    kf = _k_powers(G)[x.f]
    return GroupElement((-inverse_mod(kf, G.e) * x.u) % G.e, (-x.f) % G.d, G)


def group_pow(x: GroupElement, j: int) -> GroupElement:
    G = x.owner
    if j < 0:
        return group_pow(group_inv(x), -j)
    acc = identity(G)
    base = x
    while j:
        if j & 1:
            acc = group_mul(acc, base)
        base = group_mul(base, base)
        j >>= 1
    return acc


def element_order(x: GroupElement) -> int:
    G = x.owner
    acc = x
    order = 1
    while acc.key() != (0, 0):
        acc = group_mul(acc, x)
        order += 1
        if order > G.n:
            raise AssertionError("order exceeded group size; broken multiplication")
    return order


def aut_group_order(G: GroupDescriptor) -> int:
    """|Aut(G(d,e,k))| = g * phi(e)."""
    return structure_params(G).g * euler_phi(G.e)
