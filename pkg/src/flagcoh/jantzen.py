"""Jantzen-type sum formulas and an independent rank-one oracle."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .charring import (
    ChiBasisDecomposition,
    VirtualCharacter,
    chi,
    chi_combination,
    frobenius_twist,
    one,
    weyl_character,
)
from .cohomology import PrimeContext, is_generic
from .rootdata import RootSystem, Weight, is_dominant
from .weyl import WeylElement, act, dominant_dot_conjugate

MAX_CONVENTION = "max"
MIN_CONVENTION = "min"


@dataclass(frozen=True)
class SumFormulaResult:
    character: VirtualCharacter
    chi_support: ChiBasisDecomposition

    @property
    def is_zero(self) -> bool:
        return self.character.is_zero

    def to_json(self, rs: RootSystem, lam: Sequence[int], p: int) -> dict:
        return {
            "lambda": list(lam),
            "p": p,
            "sum": self.character.to_json(str(rs.cartan_type)),
            "chi_support": self.chi_support.to_json(),
            "is_zero": self.is_zero,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SumFormulaResult":
        return cls(VirtualCharacter.from_json(obj["sum"]), ChiBasisDecomposition.from_json(obj["chi_support"]))


def nu_p(p: int, m: int) -> int:
    """Exponent of the largest power of p dividing m."""
    if m < 1:
        raise ValueError(f"nu_p needs a positive integer, got {m}")
    s = 0
    while m % p == 0:
        m //= p
        s += 1
    return s


def ep_cyclic(rs: RootSystem, lam: Sequence[int], m: int, p: int) -> VirtualCharacter:
    """p-adic Euler characteristic of lam tensored with Z/m: nu_p(m) chi(lam)."""
    PrimeContext(p)
    return nu_p(p, m) * chi(rs, lam)


def _accumulate(acc: dict, rs: RootSystem, mu: Weight, coeff: int) -> None:
    # chi(mu) = (-1)^l(w) chi(mu+); singular mu contributes nothing
    ans = dominant_dot_conjugate(rs, mu)
    if ans.singular:
        return
    sign = -1 if ans.degree % 2 else 1
    acc[ans.dominant] = acc.get(ans.dominant, 0) + sign * coeff


def _reflection_terms(rs: RootSystem, lam: Weight, p: int, signs: Sequence[int]) -> dict:
    """sum_beta signs[beta] sum_{0<m<<lam+rho,beta^vee>} nu_p(m) chi(lam - m beta), in the chi basis."""
    acc: dict = {}
    lam_rho = tuple(x + 1 for x in lam)
    for k, beta in enumerate(rs.positive_roots):
        top = rs.pair(lam_rho, k)
        for m in range(p, top, p):  # nu_p(m) = 0 unless p | m
            mu = tuple(x - m * b for x, b in zip(lam, beta))
            _accumulate(acc, rs, mu, signs[k] * nu_p(p, m))
    return acc


def _result(rs: RootSystem, acc: dict) -> SumFormulaResult:
    entries = tuple(sorted((wt, c) for wt, c in acc.items() if c))
    return SumFormulaResult(chi_combination(rs, entries), ChiBasisDecomposition(entries))


def jantzen_sum_weyl(rs: RootSystem, lam: Sequence[int], p: int) -> SumFormulaResult:
    """Sum of the characters of the Jantzen filtration layers Delta^j(lam), j >= 1."""
    PrimeContext(p)
    lam = rs.check_weight(lam)
    if not is_dominant(lam):
        raise ValueError(f"jantzen_sum_weyl needs a dominant weight, got {list(lam)}")
    return _result(rs, _reflection_terms(rs, lam, p, [-1] * rs.N))


def r_exponent(p: int, value: int, convention: str = MAX_CONVENTION) -> int:
    """max{r : p^r <= value} by default; the literal min{r >= 0 : p^r <= value} is always 0."""
    if value < 1:
        raise ValueError(f"r_exponent needs a positive pairing, got {value}")
    if convention == MIN_CONVENTION:
        return 0
    if convention != MAX_CONVENTION:
        raise ValueError(f"unknown r convention {convention!r}")
    r = 0
    while p ** (r + 1) <= value:
        r += 1
    return r


def generic_sum(
    rs: RootSystem,
    lam: Sequence[int],
    w: WeylElement,
    p: int,
    n: int,
    r_convention: str = MAX_CONVENTION,
) -> SumFormulaResult:
    """Filtration sum for H^{l(w)}(w . lam) at a generic weight lam."""
    lam = rs.check_weight(lam)
    if not is_generic(rs, lam, p, n):
        raise ValueError(f"{list(lam)} is not generic for p={p}, n={n}")
    lam_rho = tuple(x + 1 for x in lam)
    signs = [rs.root_sign(act(rs, w, beta)) for beta in rs.positive_roots]
    lead = sum(
        r_exponent(p, rs.pair(lam_rho, k), r_convention) for k in range(rs.N) if signs[k] > 0
    )
    acc = _reflection_terms(rs, lam, p, signs)
    if lead:
        acc[lam] = acc.get(lam, 0) + lead
    return _result(rs, acc)


def weyl_module_simple(rs: RootSystem, lam: Sequence[int], p: int) -> bool:
    return jantzen_sum_weyl(rs, lam, p).is_zero


def _check_rank_one(rs: RootSystem) -> None:
    if rs.rank != 1:
        raise ValueError(f"the SL2 oracle needs a rank-one root system, got {rs.cartan_type}")


def _as_int(lam) -> int:
    if isinstance(lam, int):
        return lam
    (v,) = lam
    return v


def sl2_simple_char(rs: RootSystem, lam: int | Sequence[int], p: int) -> VirtualCharacter:
    """Char L(lam) for SL2 as the product of Frobenius twists of its p-adic digits."""
    _check_rank_one(rs)
    PrimeContext(p)
    lam = _as_int(lam)
    if lam < 0:
        raise ValueError(f"SL2 simple modules need lam >= 0, got {lam}")
    out = one(1)
    i = 0
    while lam:
        lam, digit = divmod(lam, p)
        if digit:
            out = out * frobenius_twist(rs, weyl_character(rs, (digit,)), p, i)
        i += 1
    return out


def sl2_simple_decompose(rs: RootSystem, a: VirtualCharacter, p: int) -> list[tuple[int, int]]:
    """Coefficients of a in the basis {Char L(mu)} by leading-term subtraction, highest first."""
    _check_rank_one(rs)
    out = []
    rest = a
    while not rest.is_zero:
        top = max(wt[0] for wt in rest)
        c = rest[(top,)]
        if top < 0:
            raise ValueError("character is not W-invariant")
        out.append((top, c))
        rest = rest - c * sl2_simple_char(rs, top, p)
    return out


def sl2_weyl_decomposition(rs: RootSystem, lam: int | Sequence[int], p: int) -> list[tuple[int, int]]:
    """Composition multiplicities [Delta(lam) : L(mu)] for SL2."""
    _check_rank_one(rs)
    lam = _as_int(lam)
    if lam < 0:
        raise ValueError(f"need lam >= 0, got {lam}")
    out = sl2_simple_decompose(rs, weyl_character(rs, (lam,)), p)
    if any(c < 0 for _, c in out):
        raise ArithmeticError(f"negative composition multiplicity in {out}")
    return out
