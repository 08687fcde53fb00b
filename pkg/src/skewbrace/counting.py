"""Closed-form skew-brace counts.

For groups M (multiplicative role, parameters delta, epsilon, kappa, zeta,
gamma) and A (additive role, parameters d, e, k, z, g) of the same squarefree
order, the number of isomorphism classes of skew braces with those two group
structures is

    b(M, A) = 2^omega(g) * w   if gamma | e,      w = phi(gcd(delta, d)),
    b(M, A) = 0                if gamma does not divide e,

where omega(g) counts the distinct primes of g.  This module evaluates that
formula, assembles full count matrices for a given order, and provides the
specialized two-prime and three-prime tables together with the cyclic and
dihedral shortcut cases.
"""

from dataclasses import dataclass
from math import gcd

from . import config
from .errors import CongruenceFails, OrderMismatch
from .groups import GroupDescriptor, enumerate_groups, structure_params
from .numtheory import euler_phi, factor_squarefree, is_prime


@dataclass(frozen=True)
class PairContext:
    """Everything the counting formula needs for an ordered pair (M, A)."""

    M: GroupDescriptor
    A: GroupDescriptor
    delta: int
    epsilon: int
    kappa: int
    zeta: int
    gamma: int
    d: int
    e: int
    k: int
    z: int
    g: int
    w: int
    gamma_divides_e: bool
    omega_g: int


def pair_context(M: GroupDescriptor, A: GroupDescriptor) -> PairContext:
    if M.n != A.n:
        raise OrderMismatch(f"|M| = {M.n} but |A| = {A.n}")
    sm = structure_params(M)
    sa = structure_params(A)
    g = sa.g
    return PairContext(
        M=M,
        A=A,
        delta=M.d,
        epsilon=M.e,
        kappa=M.k,
        zeta=sm.zeta,
        gamma=sm.gamma,
        d=A.d,
        e=A.e,
        k=A.k,
        z=sa.z,
        g=g,
        w=euler_phi(gcd(M.d, A.d)),
        gamma_divides_e=(A.e % sm.gamma == 0),
        omega_g=len(factor_squarefree(g)),
    )


def count_skew_braces(M: GroupDescriptor, A: GroupDescriptor) -> int:
    """Number of isomorphism classes of skew braces with multiplicative
    group M and additive group A (exact)."""
    ctx = pair_context(M, A)
    if not ctx.gamma_divides_e:
        return 0
    return 2**ctx.omega_g * ctx.w


@dataclass(frozen=True)
class CountMatrix:
    """b(M, A) over all ordered pairs of groups of one order.

    Rows are indexed by M, columns by A, both in enumerate_groups order.
    """

    n: int
    groups: tuple[GroupDescriptor, ...]
    entries: tuple[tuple[int, ...], ...]
    total: int

    def row_totals(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def col_totals(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.entries))


def count_matrix(n: int, limit: int | None = None) -> CountMatrix:
    if limit is None:
        limit = config.FORMULA_N_LIMIT
    factor_squarefree(n)
    groups = enumerate_groups(n, limit=limit)
    entries = tuple(
        tuple(count_skew_braces(M, A) for A in groups) for M in groups
    )
    return CountMatrix(n=n, groups=groups, entries=entries, total=sum(map(sum, entries)))


def pq_closed_form(p: int, q: int) -> CountMatrix:
    """The 2x2 count matrix for order pq, p > q primes with p = 1 mod q.

    Rows/columns are [cyclic, nonabelian]; the matrix is [[1, 2], [1, 2(q-1)]]
    with total 2q + 2.  Raises CongruenceFails when p != 1 mod q (the order
    pq then has only the cyclic group and the generic count_matrix applies).
    """
    if not (is_prime(p) and is_prime(q) and p > q):
        raise ValueError(f"need primes p > q, got ({p}, {q})")
    if p % q != 1:
        raise CongruenceFails([f"{p} != 1 (mod {q})"])
    groups = enumerate_groups(p * q)
    assert len(groups) == 2
    entries = ((1, 2), (1, 2 * (q - 1)))
    return CountMatrix(n=p * q, groups=groups, entries=entries, total=2 * q + 2)


# The six (d, g, z) factorisation shapes for n = p1 p2 p3, with their
# existence congruences and the number of isomorphism classes each one
# contributes.
_THREE_PRIME_SHAPES = (
    (lambda p1, p2, p3: (1, 1, p1 * p2 * p3), (), lambda p1, p2: 1),
    (lambda p1, p2, p3: (p1, p2, p3), ((1, 0),), lambda p1, p2: 1),
    (lambda p1, p2, p3: (p1, p3, p2), ((2, 0),), lambda p1, p2: 1),
    (lambda p1, p2, p3: (p1, p2 * p3, 1), ((1, 0), (2, 0)), lambda p1, p2: p1 - 1),
    (lambda p1, p2, p3: (p2, p3, p1), ((2, 1),), lambda p1, p2: 1),
    (lambda p1, p2, p3: (p1 * p2, p3, 1), ((2, 0), (2, 1)), lambda p1, p2: 1),
)


def _three_prime_entry(i: int, j: int, p1: int, p2: int) -> int:
    """b(M, A) for M of shape i and A of shape j (1-based), as a polynomial
    in p1, p2."""
    # Column factors: how the additive shape scales the count.
    col = {
        1: 1,
        2: 2 * (p1 - 1),
        3: 2 * (p1 - 1),
        4: 4 * (p1 - 1),
        5: 2 * (p2 - 1),
        6: None,  # depends on the row
    }
    table = {
        (1, 1): 1, (1, 2): 2, (1, 3): 2, (1, 4): 4, (1, 5): 2, (1, 6): 2,
        (2, 1): 1, (2, 2): col[2], (2, 3): col[3], (2, 4): col[4], (2, 5): 0, (2, 6): 0,
        (3, 1): 1, (3, 2): col[2], (3, 3): col[3], (3, 4): col[4], (3, 5): 2, (3, 6): 2 * (p1 - 1),
        (4, 1): 1, (4, 2): col[2], (4, 3): col[3], (4, 4): col[4], (4, 5): 0, (4, 6): 0,
        (5, 1): 1, (5, 2): 2, (5, 3): 2, (5, 4): 4, (5, 5): col[5], (5, 6): 2 * (p2 - 1),
        (6, 1): 1, (6, 2): col[2], (6, 3): col[3], (6, 4): col[4], (6, 5): col[5],
        (6, 6): 2 * (p1 - 1) * (p2 - 1),
    }
    return table[(i, j)]


@dataclass(frozen=True)
class ThreePrimeTable:
    """Symbolic 6x6 table for n = p1 p2 p3 evaluated at concrete primes,
    with the multiplicity-weighted marginals and grand total."""

    primes: tuple[int, int, int]
    matrix: tuple[tuple[int, ...], ...]  # 6x6, rows = M shape, cols = A shape
    multiplicities: tuple[int, ...]  # groups per shape (shape 4 has p1 - 1)
    row_totals: tuple[int, ...]
    col_totals: tuple[int, ...]
    total: int

    def expand(self) -> CountMatrix:
        """Concrete |groups| x |groups| matrix aligned with enumerate_groups
        order, repeating shape-4 rows/columns once per isomorphism class."""
        p1, p2, p3 = self.primes
        n = p1 * p2 * p3
        groups = enumerate_groups(n)
        shapes = []
        for G in groups:
            s = structure_params(G)
            dgz = (G.d, s.g, s.z)
            for i, (shape_of, _, _) in enumerate(_THREE_PRIME_SHAPES, start=1):
                if dgz == shape_of(p1, p2, p3):
                    shapes.append(i)
                    break
            else:
                raise AssertionError(f"descriptor {G} matches no factorisation shape")
        entries = tuple(
            tuple(self.matrix[si - 1][sj - 1] for sj in shapes) for si in shapes
        )
        return CountMatrix(n=n, groups=groups, entries=entries,
                           total=sum(map(sum, entries)))


def three_prime_closed_form(p1: int, p2: int, p3: int) -> ThreePrimeTable:
    """Counts for n = p1 p2 p3 with p1 < p2 < p3 and p_i = 1 mod p_j (i > j).

    Raises CongruenceFails listing each violated congruence; when some
    congruences fail the generic count_matrix (which simply lacks the
    corresponding groups) is the route.
    """
    ps = (p1, p2, p3)
    if not all(is_prime(p) for p in ps) or not p1 < p2 < p3:
        raise ValueError(f"need primes p1 < p2 < p3, got {ps}")
    violated = [
        f"{ps[i]} != 1 (mod {ps[j]})"
        for i in range(3)
        for j in range(i)
        if ps[i] % ps[j] != 1
    ]
    if violated:
        raise CongruenceFails(violated)
    matrix = tuple(
        tuple(_three_prime_entry(i, j, p1, p2) for j in range(1, 7))
        for i in range(1, 7)
    )
    mult = tuple(shape[2](p1, p2) for shape in _THREE_PRIME_SHAPES)
    row_totals = tuple(
        sum(matrix[i][j] * mult[j] for j in range(6)) for i in range(6)
    )
    col_totals = tuple(
        sum(matrix[i][j] * mult[i] for i in range(6)) for j in range(6)
    )
    total = 4 * p1**3 + 4 * p1**2 + 2 * p1 * p2 + p1 + 4 * p2 + 4
    return ThreePrimeTable(primes=ps, matrix=matrix, multiplicities=mult,
                           row_totals=row_totals, col_totals=col_totals, total=total)


def corollary_cases(M: GroupDescriptor, A: GroupDescriptor) -> int | None:
    """Shortcut values when M or A is cyclic or dihedral; None otherwise.

    (i) M cyclic: 2^omega(g).  (ii) A cyclic: 1.  (iii) M dihedral of order
    2m, m odd: 2^omega(g) if d <= 2 else 0.  (iv) A dihedral: 2^omega(m).
    All applicable cases agree, and agree with count_skew_braces.
    """
    if M.n != A.n:
        raise OrderMismatch(f"|M| = {M.n} but |A| = {A.n}")
    sa = structure_params(A)
    omega_g = len(factor_squarefree(sa.g))
    values = []
    if M.is_cyclic:
        values.append(2**omega_g)
    if A.is_cyclic:
        values.append(1)
    if M.is_dihedral:
        values.append(2**omega_g if A.d <= 2 else 0)
    if A.is_dihedral:
        values.append(2 ** len(factor_squarefree(A.e)))
    if not values:
        return None
    assert len(set(values)) == 1, f"inconsistent shortcut values {values} for ({M}, {A})"
    return values[0]
