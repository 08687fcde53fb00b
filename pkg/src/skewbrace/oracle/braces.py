"""Explicit skew braces and exhaustive axiom verification.

A skew brace here is a carrier 0..n-1 with two Cayley tables sharing the
identity 0: "add" (the additive group) and "mul" (the multiplicative group),
satisfying the compatibility law

    a * (b + c) = (a * b) + (-a) + (a * c)

for all a, b, c.  From a regular subgroup of Hol(A) the multiplication is
pulled back through the action: each carrier point x corresponds to the
unique subgroup element m_x sending the identity to x, and x * y = m_x . y.
Every axiom is checked exhaustively (all n^3 triples) with vectorised table
index arithmetic.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..errors import NotRegular
from ..groups import GroupDescriptor
from ..holomorph import hol_tables
from .subgroups import RegularSubgroup


@dataclass(frozen=True)
class BraceViolation:
    axiom: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.axiom} fails at {self.witness}"


@dataclass(frozen=True)
class SkewBrace:
    """Carrier 0..n-1 with additive and multiplicative Cayley tables."""

    n: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    @cached_property
    def _add(self) -> np.ndarray:
        return np.asarray(self.add, dtype=np.int64)

    @cached_property
    def _mul(self) -> np.ndarray:
        return np.asarray(self.mul, dtype=np.int64)

    @cached_property
    def neg(self) -> tuple[int, ...]:
        """Additive inverse of each carrier point."""
        rows, cols = np.nonzero(self._add == 0)
        out = np.empty(self.n, dtype=np.int64)
        out[rows] = cols
        return tuple(int(v) for v in out)

    @cached_property
    def lambda_table(self) -> tuple[tuple[int, ...], ...]:
        """lambda_b(a) = -b + (b * a); rows are the lambda_b permutations."""
        neg = np.asarray(self.neg, dtype=np.int64)
        lam = self._add[neg[:, None], self._mul]
        return tuple(tuple(int(v) for v in row) for row in lam)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "add_table": [list(r) for r in self.add],
            "mul_table": [list(r) for r in self.mul],
            "lambda_table": [list(r) for r in self.lambda_table],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SkewBrace":
        return cls(
            n=int(data["n"]),
            add=tuple(tuple(int(v) for v in r) for r in data["add_table"]),
            mul=tuple(tuple(int(v) for v in r) for r in data["mul_table"]),
        )


def build_skew_brace(sub: RegularSubgroup, A: GroupDescriptor) -> SkewBrace:
    """Pull the multiplication of a regular subgroup back onto A.

    Carrier point x (element index of A) corresponds to the unique subgroup
    element m_x = [x, alpha_x] with m_x . identity = x; multiplication is
    x * y = m_x . y = x + alpha_x(y).
    """
    T = hol_tables(A)
    n = T.n
    alpha_of = {}
    for idx in sub.key:
        x, a = divmod(idx, T.n_aut)
        if x in alpha_of:
            raise NotRegular(f"two subgroup elements send identity to {x}")
        alpha_of[x] = a
    if len(alpha_of) != n:
        raise NotRegular(f"subgroup of size {len(sub.key)} reaches {len(alpha_of)} points")
    mul_rows = []
    for x in range(n):
        a = alpha_of[x]
        mul_rows.append(tuple(int(v) for v in T.mulA[x, T.autact[a]]))
    add_rows = tuple(tuple(int(v) for v in row) for row in T.mulA)
    return SkewBrace(n=n, add=add_rows, mul=tuple(mul_rows))


def _group_violation(table: np.ndarray, name: str) -> BraceViolation | None:
    n = table.shape[0]
    pts = np.arange(n)
    if not (np.array_equal(table[0], pts) and np.array_equal(table[:, 0], pts)):
        return BraceViolation(f"{name}: 0 is not a two-sided identity", (0,))
    # Latin square: rows and columns are permutations.
    if not (np.array_equal(np.sort(table, axis=1), np.tile(pts, (n, 1)))
            and np.array_equal(np.sort(table, axis=0), np.tile(pts[:, None], (1, n)))):
        return BraceViolation(f"{name}: not a Latin square", ())
    assoc_l = table[table]  # [a,b,c] -> (a.b).c
    assoc_r = table[:, table]  # [a,b,c] -> a.(b.c)
    if not np.array_equal(assoc_l, assoc_r):
        w = tuple(int(v) for v in np.argwhere(assoc_l != assoc_r)[0])
        return BraceViolation(f"{name}: associativity", w)
    return None


def check_skew_brace(B: SkewBrace) -> BraceViolation | None:
    """First failing axiom with witness, or None if B is a skew brace.

    Checks: both tables are groups with identity 0; the compatibility law on
    all n^3 triples; every lambda_b is an additive automorphism; b -> lambda_b
    is multiplicative; and the identity map is a 1-cocycle, b*c = b + lambda_b(c).
    """
    add, mul = B._add, B._mul
    for table, name in ((add, "add"), (mul, "mul")):
        bad = _group_violation(table, name)
        if bad is not None:
            return bad
    neg = np.asarray(B.neg, dtype=np.int64)
    lhs = mul[:, add]  # [a,b,c] -> a*(b+c)
    rhs = add[add[mul, neg[:, None]][:, :, None], mul[:, None, :]]
    if not np.array_equal(lhs, rhs):
        w = tuple(int(v) for v in np.argwhere(lhs != rhs)[0])
        return BraceViolation("compatibility a*(b+c) = (a*b) + (-a) + (a*c)", w)
    lam = np.asarray(B.lambda_table, dtype=np.int64)
    n = B.n
    if not np.array_equal(np.sort(lam, axis=1), np.tile(np.arange(n), (n, 1))):
        return BraceViolation("lambda_b not bijective", ())
    hom_l = lam[:, add]  # [b,a1,a2] -> lambda_b(a1+a2)
    hom_r = add[lam[:, :, None], lam[:, None, :]]
    if not np.array_equal(hom_l, hom_r):
        w = tuple(int(v) for v in np.argwhere(hom_l != hom_r)[0])
        return BraceViolation("lambda_b not additive homomorphism", w)
    mult_l = lam[mul]  # [b,c,a] -> lambda_(b*c)(a)
    mult_r = lam[:, lam]  # [b,c,a] -> lambda_b(lambda_c(a))
    if not np.array_equal(mult_l, mult_r):
        w = tuple(int(v) for v in np.argwhere(mult_l != mult_r)[0])
        return BraceViolation("b -> lambda_b not multiplicative", w)
    cocycle = add[np.arange(n)[:, None], lam]
    if not np.array_equal(mul, cocycle):
        w = tuple(int(v) for v in np.argwhere(mul != cocycle)[0])
        return BraceViolation("cocycle identity b*c = b + lambda_b(c)", w)
    return None


def verify_skew_brace(B: SkewBrace) -> bool:
    return check_skew_brace(B) is None
