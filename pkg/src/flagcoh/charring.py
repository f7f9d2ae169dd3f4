"""Exact virtual characters in the group ring Z[X]."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .rootdata import RootSystem, Weight, is_dominant
from .weyl import dominant_conjugate, dominant_dot_conjugate, reflect


class VirtualCharacter:
    """Finite map weight -> nonzero integer multiplicity. Immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for wt, m in items:
            wt = tuple(wt)
            acc[wt] = acc.get(wt, 0) + m
        self._terms = {wt: m for wt, m in acc.items() if m != 0}

    @classmethod
    def _raw(cls, terms: dict) -> "VirtualCharacter":
        obj = cls.__new__(cls)
        obj._terms = {wt: m for wt, m in terms.items() if m != 0}
        return obj

    @property
    def terms(self) -> Mapping[Weight, int]:
        return MappingProxyType(self._terms)

    def __getitem__(self, wt) -> int:
        return self._terms.get(tuple(wt), 0)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def dimension(self) -> int:
        return sum(self._terms.values())

    def sorted_items(self) -> list[tuple[Weight, int]]:
        return sorted(self._terms.items())

    def __eq__(self, other):
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{list(w)}: {m}" for w, m in self.sorted_items())
        return f"VirtualCharacter({{{body}}})"

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        acc = dict(self._terms)
        for wt, m in other._terms.items():
            acc[wt] = acc.get(wt, 0) + m
        return VirtualCharacter._raw(acc)

    def __neg__(self) -> "VirtualCharacter":
        return VirtualCharacter._raw({wt: -m for wt, m in self._terms.items()})

    def __sub__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return VirtualCharacter._raw({wt: other * m for wt, m in self._terms.items()})
        if isinstance(other, VirtualCharacter):
            return tensor(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def map_weights(self, f) -> "VirtualCharacter":
        return VirtualCharacter((f(wt), m) for wt, m in self._terms.items())

    def to_json(self, type_name: str) -> dict:
        return {
            "type": type_name,
            "terms": [{"wt": list(wt), "mult": m} for wt, m in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "VirtualCharacter":
        return cls((tuple(t["wt"]), t["mult"]) for t in obj["terms"])


ZERO = VirtualCharacter()


def one(rank: int) -> VirtualCharacter:
    return VirtualCharacter({(0,) * rank: 1})


def add(a: VirtualCharacter, b: VirtualCharacter) -> VirtualCharacter:
    return a + b


def negate(a: VirtualCharacter) -> VirtualCharacter:
    return -a


def scale(k: int, a: VirtualCharacter) -> VirtualCharacter:
    return k * a


def tensor(a: VirtualCharacter, b: VirtualCharacter) -> VirtualCharacter:
    """Convolution product in Z[X]."""
    if len(a) > len(b):
        a, b = b, a
    acc: dict = {}
    for wa, ma in a.items():
        for wb, mb in b.items():
            wt = tuple(x + y for x, y in zip(wa, wb))
            acc[wt] = acc.get(wt, 0) + ma * mb
    return VirtualCharacter._raw(acc)


def translate(a: VirtualCharacter, mu: Sequence[int]) -> VirtualCharacter:
    """Multiply by e^mu."""
    return VirtualCharacter._raw(
        {tuple(x + y for x, y in zip(wt, mu)): m for wt, m in a.items()}
    )


def frobenius_twist(rs: RootSystem, a: VirtualCharacter, p: int, n: int) -> VirtualCharacter:
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    q = p**n
    return VirtualCharacter._raw({tuple(q * x for x in wt): m for wt, m in a.items()})


def weyl_orbit(rs: RootSystem, mu: Sequence[int]) -> list[Weight]:
    """Linear W-orbit of a dominant weight."""
    mu = tuple(mu)
    orbit = [mu]
    seen = {mu}
    for nu in orbit:
        for i, c in enumerate(nu):
            if c > 0:
                x = reflect(rs, i, nu)
                if x not in seen:
                    seen.add(x)
                    orbit.append(x)
    return orbit


def dominant_weights_below(rs: RootSystem, lam: Sequence[int]) -> list[Weight]:
    """All dominant mu <= lam, ordered by depth (height of lam - mu)."""
    # every dominant mu < lam is reachable through dominant weights differing by positive roots
    lam = tuple(lam)
    found = {lam}
    stack = [lam]
    while stack:
        nu = stack.pop()
        for beta in rs.positive_roots:
            mu = tuple(x - b for x, b in zip(nu, beta))
            if is_dominant(mu) and mu not in found:
                found.add(mu)
                stack.append(mu)
    return sorted(found, key=lambda mu: (-rs.height(mu), tuple(-x for x in mu)))


def dominant_multiplicities(rs: RootSystem, lam: Sequence[int]) -> dict[Weight, int]:
    """Freudenthal's recursion on the dominant weights of the irreducible of highest weight lam."""
    lam = tuple(lam)
    return dict(_dominant_multiplicities(rs, lam))


@lru_cache(maxsize=4096)
def _dominant_multiplicities(rs: RootSystem, lam: Weight) -> tuple:
    inner = rs.inner
    lam_rho = tuple(x + 1 for x in lam)
    top = inner(lam_rho, lam_rho)
    mult: dict = {}
    conj_cache: dict = {}

    def m_of(nu):
        d = conj_cache.get(nu)
        if d is None:
            d = dominant_conjugate(rs, nu)
            conj_cache[nu] = d
        return mult.get(d, 0)

    roots = rs.positive_roots
    # (nu, beta) = nu . g_beta, and it grows by (beta, beta) along a beta-string
    g_roots = [
        tuple(sum(rs.gram[i][j] * beta[j] for j in range(rs.rank)) for i in range(rs.rank))
        for beta in roots
    ]
    norms = [inner(beta, beta) for beta in roots]
    for mu in dominant_weights_below(rs, lam):
        if mu == lam:
            mult[mu] = 1
            continue
        mu_rho = tuple(x + 1 for x in mu)
        den = top - inner(mu_rho, mu_rho)
        num = 0
        for beta, g_beta, b2 in zip(roots, g_roots, norms):
            nu = tuple(x + b for x, b in zip(mu, beta))
            ip = sum(x * g for x, g in zip(nu, g_beta))
            while True:
                m = m_of(nu)
                if m == 0:
                    break
                num += m * ip
                ip += b2
                nu = tuple(x + b for x, b in zip(nu, beta))
        num *= 2
        q, r = divmod(num, den)
        assert r == 0 and q > 0, (lam, mu, num, den)
        mult[mu] = q
    return tuple(mult.items())


@lru_cache(maxsize=2048)
def _weyl_character(rs: RootSystem, lam: Weight) -> VirtualCharacter:
    terms = {}
    for mu, m in _dominant_multiplicities(rs, lam):
        for nu in weyl_orbit(rs, mu):
            terms[nu] = m
    return VirtualCharacter._raw(terms)


def weyl_character(rs: RootSystem, lam: Sequence[int]) -> VirtualCharacter:
    """Character of the characteristic-zero irreducible with highest weight lam."""
    lam = rs.check_weight(lam)
    if not is_dominant(lam):
        raise ValueError(f"weyl_character needs a dominant weight, got {list(lam)}")
    return _weyl_character(rs, lam)


def chi(rs: RootSystem, lam: Sequence[int]) -> VirtualCharacter:
    """Euler characteristic chi(lam); zero for singular lam, signed otherwise."""
    ans = dominant_dot_conjugate(rs, lam)
    if ans.singular:
        return ZERO
    base = _weyl_character(rs, ans.dominant)
    return -base if ans.degree % 2 else base


def steinberg_character(rs: RootSystem, p: int, n: int) -> VirtualCharacter:
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return weyl_character(rs, tuple((p**n - 1) * x for x in rs.rho))


def weyl_dim(rs: RootSystem, lam: Sequence[int]) -> int:
    lam = rs.check_weight(lam)
    if not is_dominant(lam):
        raise ValueError(f"weyl_dim needs a dominant weight, got {list(lam)}")
    num = den = 1
    lam_rho = tuple(x + 1 for x in lam)
    for k in range(rs.N):
        num *= rs.pair(lam_rho, k)
        den *= rs.pair(rs.rho, k)
    q, r = divmod(num, den)
    assert r == 0
    return q


def chi_combination(rs: RootSystem, entries: Iterable[tuple[Sequence[int], int]]) -> VirtualCharacter:
    """sum of coeff * chi(mu) over dominant mu."""
    acc: dict = {}
    for wt, c in entries:
        for nu, m in weyl_character(rs, wt).items():
            acc[nu] = acc.get(nu, 0) + c * m
    return VirtualCharacter._raw(acc)


def is_weyl_invariant(rs: RootSystem, a: VirtualCharacter) -> bool:
    for wt, m in a.items():
        for i in range(rs.rank):
            if a[reflect(rs, i, wt)] != m:
                return False
    return True


@dataclass(frozen=True)
class ChiBasisDecomposition:
    entries: tuple  # ((dominant weight, coefficient), ...)

    def reconstruct(self, rs: RootSystem) -> VirtualCharacter:
        return chi_combination(rs, self.entries)

    def to_json(self) -> list:
        return [{"wt": list(wt), "coeff": c} for wt, c in self.entries]

    @classmethod
    def from_json(cls, obj: list) -> "ChiBasisDecomposition":
        return cls(tuple((tuple(e["wt"]), e["coeff"]) for e in obj))

    def __len__(self):
        return len(self.entries)

    def weights(self) -> list[Weight]:
        return [wt for wt, _ in self.entries]


def chi_decompose(rs: RootSystem, a: VirtualCharacter) -> ChiBasisDecomposition:
    """Coefficients of a W-invariant character in the basis {chi(mu) : mu dominant}."""
    if not is_weyl_invariant(rs, a):
        raise ValueError("chi_decompose needs a W-invariant character")
    remaining = dict((wt, m) for wt, m in a.items() if is_dominant(wt))
    out = {}
    while remaining:
        top = max(remaining, key=lambda wt: (rs.height(wt), wt))
        c = remaining[top]
        out[top] = c
        for mu, m in _dominant_multiplicities(rs, top):
            v = remaining.get(mu, 0) - c * m
            if v:
                remaining[mu] = v
            else:
                remaining.pop(mu, None)
    return ChiBasisDecomposition(tuple(sorted(out.items())))
