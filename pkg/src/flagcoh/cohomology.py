"""Vanishing and non-vanishing criteria for H^i(G/B, L(lam)) in characteristic p."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import sympy

from .charring import VirtualCharacter, chi, frobenius_twist, steinberg_character, tensor
from .rootdata import RootSystem, Weight, is_antidominant, is_dominant
from .weyl import (
    BottAnswer,
    WeylElement,
    dominant_dot_conjugate,
    dot,
    inverse,
    longest_element,
    multiply,
    parse_word,
)

VANISHES = "vanishes"
NONVANISHING = "nonvanishing"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class PrimeContext:
    p: int
    n: int = 0

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2 or not sympy.isprime(self.p):
            raise ValueError(f"p must be a prime, got {self.p!r}")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"n must be a nonnegative integer, got {self.n!r}")

    @property
    def q(self) -> int:
        return self.p**self.n


@dataclass(frozen=True)
class Witness:
    """lam = p^n . (w . mu) + delta * xi with mu dominant, xi in X_n."""

    n: int
    delta: int
    w: WeylElement
    mu: Weight

    def to_json(self) -> dict:
        return {"n": self.n, "delta": self.delta, "w": str(self.w), "mu": list(self.mu)}

    @classmethod
    def from_json(cls, obj: dict) -> "Witness":
        return cls(obj["n"], obj["delta"], WeylElement(parse_word(obj["w"])), tuple(obj["mu"]))


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: Witness | None = None

    def to_json(self) -> dict:
        out = {"verdict": self.status}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Verdict":
        wit = obj.get("witness")
        return cls(obj["verdict"], None if wit is None else Witness.from_json(wit))


@dataclass(frozen=True)
class GenericReport:
    degree: int
    socle_weight: Weight
    head_weight: Weight

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "socle": list(self.socle_weight),
            "head": list(self.head_weight),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GenericReport":
        return cls(obj["degree"], tuple(obj["socle"]), tuple(obj["head"]))


def bott(rs: RootSystem, lam: Sequence[int]) -> BottAnswer:
    """Characteristic-zero cohomology: H^{l(w)}(lam) = H^0(lam+) and nothing else."""
    return dominant_dot_conjugate(rs, lam)


def serre_dual(rs: RootSystem, lam: Sequence[int], i: int) -> tuple[Weight, int]:
    lam = rs.check_weight(lam)
    if not 0 <= i <= rs.N:
        raise ValueError(f"degree {i} outside [0, {rs.N}]")
    return tuple(-x - 2 for x in lam), rs.N - i


def trivial_vanishing(rs: RootSystem, lam: Sequence[int], i: int, p: int) -> str:
    """Cheap sufficient conditions for H^i(lam) = 0; never claims non-vanishing."""
    PrimeContext(p)
    lam = rs.check_weight(lam)
    if i < 0:
        raise ValueError(f"degree must be >= 0, got {i}")
    if i > rs.N:
        return VANISHES
    if i > 0 and is_dominant(lam):
        return VANISHES
    if any(x == -1 for x in lam):
        return VANISHES
    if i == 0 and not is_dominant(lam):
        return VANISHES
    if i == rs.N and not is_antidominant(lam):
        return VANISHES
    return UNKNOWN


def decompose_p_adic(rs: RootSystem, lam: Sequence[int], p: int, n: int) -> tuple[Weight, Weight]:
    """lam = lam0 + p^n lam1 with lam0 in X_n."""
    q = PrimeContext(p, n).q
    lam = rs.check_weight(lam)
    pairs = [divmod(x, q) for x in lam]
    return tuple(r for _, r in pairs), tuple(d for d, _ in pairs)


def p_dot(rs: RootSystem, lam: Sequence[int], p: int, n: int) -> Weight:
    """p^n . lam = p^n (lam + rho) - rho."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    q = p**n
    return tuple(q * (x + 1) - 1 for x in lam)


def frobenius_steinberg_chi(rs: RootSystem, lam: Sequence[int], p: int, n: int) -> VirtualCharacter:
    """Char St_n * Frob^n(chi(lam)), the Euler characteristic of the right side of Frobenius-Steinberg."""
    PrimeContext(p, n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return tensor(steinberg_character(rs, p, n), frobenius_twist(rs, chi(rs, lam), p, n))


def _stable_level(lam: Sequence[int], p: int) -> int:
    # least n with p^n > 2 max|<lam + rho, alpha^vee>| + 2; one extra level is scanned after it
    bound = 2 * max(abs(x + 1) for x in lam) + 2
    n = 0
    while p**n <= bound:
        n += 1
    return n + 1


def _residue_candidates(rs: RootSystem, lam: Weight, p: int, deltas: Sequence[int]):
    """Yield (n, delta, nu) where lam + rho - delta*xi = p^n nu for the unique xi in X_n."""
    lam_rho = tuple(x + 1 for x in lam)
    for n in range(_stable_level(lam, p) + 1):
        q = p**n
        for delta in deltas:
            xi = tuple((delta * x) % q for x in lam_rho)
            nu = tuple((x - delta * e) // q for x, e in zip(lam_rho, xi))
            yield n, delta, nu


def _chamber_of(rs: RootSystem, nu: Weight) -> tuple[WeylElement, Weight] | None:
    """For regular nu return (w, mu) with nu = w(mu + rho), mu dominant."""
    ans = dominant_dot_conjugate(rs, tuple(x - 1 for x in nu))
    if ans.singular:
        return None
    return ans.witness, ans.dominant


def dpi_lower_bound(rs: RootSystem, lam: Sequence[int], i: int, p: int) -> Verdict:
    """Nonvanishing iff lam lies in the union of p^n . w . X+ +- X_n over n >= 0, l(w) = i."""
    PrimeContext(p)
    lam = rs.check_weight(lam)
    if not 0 <= i <= rs.N:
        raise ValueError(f"degree {i} outside [0, {rs.N}]")
    for n, delta, nu in _residue_candidates(rs, lam, p, (-1, 1)):
        found = _chamber_of(rs, nu)
        if found is not None and found[0].length == i:
            return Verdict(NONVANISHING, Witness(n, delta, found[0], found[1]))
    return Verdict(UNKNOWN)


def h1_witness(rs: RootSystem, lam: Sequence[int], p: int) -> Witness | None:
    PrimeContext(p)
    lam = rs.check_weight(lam)
    for n, delta, nu in _residue_candidates(rs, lam, p, (-1,)):
        found = _chamber_of(rs, nu)
        if found is not None and found[0].length == 1:
            return Witness(n, delta, found[0], found[1])
    return None


def h1_nonvanishing(rs: RootSystem, lam: Sequence[int], p: int) -> bool:
    """Exact test for H^1(lam) != 0: membership in the union of p^n . s_alpha . X+ - X_n."""
    return h1_witness(rs, lam, p) is not None


def hN1_nonvanishing(rs: RootSystem, lam: Sequence[int], p: int) -> bool:
    """H^{N-1}(lam) != 0, via Serre duality."""
    lam = rs.check_weight(lam)
    return h1_nonvanishing(rs, tuple(-x - 2 for x in lam), p)


def hN1_nonvanishing_direct(rs: RootSystem, lam: Sequence[int], p: int) -> bool:
    """Membership in the union of p^n . s_alpha . X- + X_n, tested without duality."""
    PrimeContext(p)
    lam = rs.check_weight(lam)
    for _, _, nu in _residue_candidates(rs, lam, p, (1,)):
        # need s_alpha(nu) strictly antidominant: nu regular with exactly one positive pairing
        pairs = rs.pairings(nu)
        if all(v != 0 for v in pairs) and sum(1 for v in pairs if v > 0) == 1:
            return True
    return False


def is_generic(rs: RootSystem, lam: Sequence[int], p: int, n: int) -> bool:
    lam = rs.check_weight(lam)
    if not is_dominant(lam):
        raise ValueError(f"genericity is defined for dominant weights, got {list(lam)}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _, lam1 = decompose_p_adic(rs, lam, p, n)
    lo = 6 * (rs.coxeter_number - 1)
    hi = p - lo
    return all(lo <= v <= hi for v in rs.pairings(lam1))


def twisted_weight(rs: RootSystem, lam: Sequence[int], w: WeylElement, p: int, n: int) -> Weight:
    """lam^w = (w.lam)^0 + p^n * (w^{-1} . (w.lam)^1)."""
    low, high = decompose_p_adic(rs, dot(rs, w, lam), p, n)
    back = dot(rs, inverse(rs, w), high)
    q = p**n
    return tuple(a + q * b for a, b in zip(low, back))


def generic_report(rs: RootSystem, lam: Sequence[int], w: WeylElement, p: int, n: int) -> GenericReport:
    lam = rs.check_weight(lam)
    if not is_generic(rs, lam, p, n):
        raise ValueError(f"{list(lam)} is not generic for p={p}, n={n}")
    w0w = multiply(rs, longest_element(rs), w)
    return GenericReport(w.length, twisted_weight(rs, lam, w, p, n), twisted_weight(rs, lam, w0w, p, n))
