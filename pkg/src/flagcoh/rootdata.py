"""Finite root systems in fundamental-weight coordinates.

Weights are plain integer tuples; coordinate ``i`` is ``<lam, alpha_i^vee>``.
Roots live in the same lattice, so no rational arithmetic is needed outside
of the (cached) inverse Cartan matrix used for root-lattice coordinates.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from typing import Iterable, NamedTuple, Sequence

import sympy

Weight = tuple  # tuple[int, ...]

FAMILIES = "ABCDEFG"
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown Cartan family {self.family!r}; expected one of {FAMILIES}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        if self.family in _MIN_RANK and self.rank < _MIN_RANK[self.family]:
            raise ValueError(
                f"type {self.family} requires rank >= {_MIN_RANK[self.family]}, got {self.rank}"
            )
        if self.family in _FIXED_RANKS and self.rank not in _FIXED_RANKS[self.family]:
            allowed = ", ".join(map(str, _FIXED_RANKS[self.family]))
            raise ValueError(f"type {self.family} requires rank in {{{allowed}}}, got {self.rank}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Cartan type {text!r} (expected e.g. 'A2', 'G2')")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def weyl_group_order(self) -> int:
        n = self.rank
        return {
            "A": factorial(n + 1),
            "B": 2**n * factorial(n),
            "C": 2**n * factorial(n),
            "D": 2 ** (n - 1) * factorial(n),
            "E": {6: 51840, 7: 2903040, 8: 696729600}.get(n, 0),
            "F": 1152,
            "G": 12,
        }[self.family]


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """Entry ``[i][j]`` is ``<alpha_j, alpha_i^vee>`` (Bourbaki numbering)."""
    n, fam = ct.rank, ct.family
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, ij=-1, ji=-1):
        a[i][j] = ij
        a[j][i] = ji

    if fam in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if fam == "B":
            # alpha_n short
            link(n - 2, n - 1, ij=-1, ji=-2)
        elif fam == "C":
            link(n - 2, n - 1, ij=-2, ji=-1)
    elif fam == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif fam == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif fam == "F":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        link(0, 1)
        link(1, 2, ij=-1, ji=-2)
        link(2, 3)
    elif fam == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, ij=-3, ji=-1)
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable Cartan datum. Use :func:`build_root_system` to construct."""

    cartan_type: CartanType
    cartan_matrix: tuple
    positive_roots: tuple  # fundamental-weight coordinates
    root_coefficients: tuple  # simple-root coordinates
    coroot_table: tuple  # coefficients of beta^vee in the simple coroots
    rho: Weight
    coxeter_number: int
    gram: tuple = field(repr=False)  # integer multiple of the W-invariant form on weights
    _inverse_cartan: tuple = field(repr=False)
    _root_index: dict = field(repr=False)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def N(self) -> int:
        return len(self.positive_roots)

    @property
    def simple_roots(self) -> tuple:
        return self.positive_roots[: self.rank]

    @property
    def highest_root(self) -> int:
        """Index of the highest root."""
        return self.N - 1

    @property
    def highest_coroot(self) -> int:
        """Index of the positive root whose coroot is highest (the highest short root)."""
        return max(range(self.N), key=lambda k: (sum(self.coroot_table[k]), -k))

    def __repr__(self):
        return f"RootSystem({self.cartan_type})"

    def pair(self, lam: Sequence[int], k: int) -> int:
        return sum(c * x for c, x in zip(self.coroot_table[k], lam))

    def pairings(self, lam: Sequence[int]) -> tuple[int, ...]:
        """``<lam, beta^vee>`` for every positive root, in root order."""
        return tuple(sum(c * x for c, x in zip(row, lam)) for row in self.coroot_table)

    def root_index(self, beta: Sequence[int]) -> int | None:
        return self._root_index.get(tuple(beta))

    def root_sign(self, beta: Sequence[int]) -> int:
        """+1 for a positive root, -1 for a negative root."""
        beta = tuple(beta)
        if beta in self._root_index:
            return 1
        if tuple(-x for x in beta) in self._root_index:
            return -1
        raise ValueError(f"{beta} is not a root of {self.cartan_type}")

    def root_coordinates(self, lam: Sequence[int]) -> tuple[Fraction, ...]:
        """Coordinates of ``lam`` in the basis of simple roots."""
        return tuple(
            sum((c * x for c, x in zip(row, lam)), Fraction(0)) for row in self._inverse_cartan
        )

    def in_root_lattice(self, lam: Sequence[int]) -> bool:
        return all(c.denominator == 1 for c in self.root_coordinates(lam))

    def leq(self, mu: Sequence[int], lam: Sequence[int]) -> bool:
        """The dominance order: ``lam - mu`` is a nonnegative integer combination of simple roots."""
        diff = tuple(a - b for a, b in zip(lam, mu))
        return all(c.denominator == 1 and c >= 0 for c in self.root_coordinates(diff))

    def height(self, lam: Sequence[int]) -> Fraction:
        return sum(self.root_coordinates(lam), Fraction(0))

    def inner(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        """Positive integer multiple of the W-invariant inner product."""
        g = self.gram
        return sum(lam[i] * g[i][j] * mu[j] for i in range(self.rank) for j in range(self.rank))

    def check_weight(self, lam: Iterable[int]) -> Weight:
        lam = tuple(lam)
        if len(lam) != self.rank:
            raise ValueError(
                f"weight {list(lam)} has {len(lam)} coordinates; type {self.cartan_type} expects {self.rank}"
            )
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in lam):
            raise TypeError(f"weight coordinates must be integers, got {list(lam)}")
        return lam


def _symmetrizer(a) -> list[Fraction]:
    """d_i with d_i a_ij = d_j a_ji, normalized to 1 on the first node."""
    n = len(a)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and a[i][j] != 0 and d[j] is None:
                d[j] = d[i] * a[i][j] / a[j][i]
                stack.append(j)
    return d


@lru_cache(maxsize=None)
def build_root_system(ct: CartanType | str) -> RootSystem:
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    a = cartan_matrix(ct)
    n = ct.rank

    def simple_root(j):
        return tuple(a[i][j] for i in range(n))

    def unit(j):
        return tuple(int(i == j) for i in range(n))

    # Closure of (root, coroot) pairs in simple (co)root coordinates under simple reflections.
    seen = {}
    frontier = [(unit(j), unit(j)) for j in range(n)]
    for b, c in frontier:
        seen[b] = c
    while frontier:
        nxt = []
        for b, c in frontier:
            for i in range(n):
                k = sum(b[j] * a[i][j] for j in range(n))  # <beta, alpha_i^vee>
                if k == 0 or b == unit(i):
                    continue
                kc = sum(c[j] * a[j][i] for j in range(n))  # <alpha_i, beta^vee>
                b2 = tuple(x - k * (i == j) for j, x in enumerate(b))
                c2 = tuple(x - kc * (i == j) for j, x in enumerate(c))
                if min(b2) >= 0 and b2 not in seen:
                    seen[b2] = c2
                    nxt.append((b2, c2))
        frontier = nxt

    # height, then simple-root coordinates descending (keeps alpha_1..alpha_n at indices 0..n-1)
    order = sorted(seen, key=lambda b: (sum(b), tuple(-x for x in b)))
    coeffs = tuple(order)
    coroots = tuple(seen[b] for b in order)
    roots = tuple(
        tuple(sum(b[j] * a[i][j] for j in range(n)) for i in range(n)) for b in coeffs
    )

    inv = sympy.Matrix(a).inv()
    inverse_cartan = tuple(
        tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(n)) for i in range(n)
    )
    d = _symmetrizer(a)
    # (lam, mu) = sum_i lam_i d_i c_i(mu), with c = A^{-1} mu
    g = [[d[i] * inverse_cartan[i][j] for j in range(n)] for i in range(n)]
    scale = lcm(*(x.denominator for row in g for x in row))
    gram = tuple(tuple(int(x * scale) for x in row) for row in g)

    rho = tuple([1] * n)
    h = sum(coeffs[-1]) + 1
    rs = RootSystem(
        cartan_type=ct,
        cartan_matrix=a,
        positive_roots=roots,
        root_coefficients=coeffs,
        coroot_table=coroots,
        rho=rho,
        coxeter_number=h,
        gram=gram,
        _inverse_cartan=inverse_cartan,
        _root_index={r: k for k, r in enumerate(roots)},
    )
    _self_check(rs)
    return rs


def _self_check(rs: RootSystem) -> None:
    n = rs.rank
    two_rho = tuple(sum(r[i] for r in rs.positive_roots) for i in range(n))
    assert two_rho == tuple(2 * x for x in rs.rho), two_rho
    assert all(rs.pair(rs.positive_roots[k], k) == 2 for k in range(rs.N))
    assert all(rs.pair(rs.rho, k) == 1 for k in range(n))
    # h - 1 = <rho, highest coroot> (the highest root's own coroot is not highest when roots differ in length)
    assert rs.coxeter_number == 1 + rs.pair(rs.rho, rs.highest_coroot)
    assert all(rs.gram[i][j] == rs.gram[j][i] for i in range(n) for j in range(n))


def pairing(rs: RootSystem, lam: Sequence[int], beta: int) -> int:
    """``<lam, beta^vee>`` for the positive root with index ``beta``."""
    if not 0 <= beta < rs.N:
        raise IndexError(f"positive root index {beta} out of range [0, {rs.N})")
    return rs.pair(rs.check_weight(lam), beta)


class ChamberFlags(NamedTuple):
    is_dominant: bool
    is_antidominant: bool
    in_Xn: bool


def is_dominant(lam: Sequence[int]) -> bool:
    return all(x >= 0 for x in lam)


def is_antidominant(lam: Sequence[int]) -> bool:
    # -lam - 2 rho dominant
    return all(-x - 2 >= 0 for x in lam)


def in_restricted(lam: Sequence[int], p: int, n: int) -> bool:
    """Membership in X_n, the p^n-restricted weights."""
    q = p**n
    return all(0 <= x < q for x in lam)


def chamber_predicates(rs: RootSystem, lam: Sequence[int], p: int, n: int) -> ChamberFlags:
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    lam = rs.check_weight(lam)
    return ChamberFlags(is_dominant(lam), is_antidominant(lam), in_restricted(lam, p, n))


def positive_root_count(ct: CartanType) -> int:
    """Classical |R+| by type; used to cross-check the closure."""
    n = ct.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
        "F": 24,
        "G": 6,
    }[ct.family]
