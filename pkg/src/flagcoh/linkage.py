"""Strong linkage, linkage classes, and the weight sets used in the linkage induction."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .rootdata import RootSystem, Weight, is_dominant
from .weyl import affine_reflect, longest_element, dot, wp_normal_form


@dataclass(frozen=True)
class LinkageStep:
    """``lower = s_beta . upper + n p beta``."""

    upper: Weight
    beta: int
    n: int


@dataclass(frozen=True)
class LinkageChain:
    bottom: Weight
    top: Weight
    p: int
    steps: tuple = ()  # LinkageStep, from the top down

    def weights(self) -> list[Weight]:
        """mu_r, ..., mu_0 from the top down."""
        return [s.upper for s in self.steps] + [self.bottom]

    def verify(self, rs: RootSystem) -> bool:
        """Replay every step under the affine reflection and check the order."""
        cur = self.top
        for step in self.steps:
            if step.upper != cur:
                return False
            nxt = affine_reflect(rs, step.beta, step.n, self.p, cur)
            if not rs.leq(nxt, cur):
                return False
            cur = nxt
        return cur == self.bottom

    def to_json(self, rs: RootSystem) -> list:
        return [
            {"wt": list(s.upper), "beta": list(rs.positive_roots[s.beta]), "n": s.n}
            for s in self.steps
        ]

    @classmethod
    def from_json(cls, rs: RootSystem, obj: list, bottom, top, p) -> "LinkageChain":
        steps = tuple(
            LinkageStep(tuple(e["wt"]), rs.root_index(e["beta"]), e["n"]) for e in obj
        )
        return cls(tuple(bottom), tuple(top), p, steps)


def _check_p(p: int) -> None:
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"p must be an integer >= 2, got {p!r}")


def _predecessors(rs: RootSystem, nu: Weight, p: int, floor: Weight):
    """One-step strong-linkage predecessors nu - c beta that stay >= floor."""
    gap = rs.root_coordinates(tuple(a - b for a, b in zip(nu, floor)))
    for k, beta in enumerate(rs.positive_roots):
        coeffs = rs.root_coefficients[k]
        # c beta <= nu - floor caps c
        cap = min(gap[j] // b for j, b in enumerate(coeffs) if b)
        pairing = rs.pair(tuple(x + 1 for x in nu), k)
        c = pairing % p or p
        while c <= cap:
            n = (pairing - c) // p
            yield tuple(x - c * b for x, b in zip(nu, beta)), k, n
            c += p


def _explore(rs: RootSystem, top: Weight, p: int, floor: Weight, target: Weight | None = None):
    """Depth-first search down from top. Returns the parent map of everything reached."""
    parent = {top: None}
    stack = [top]
    while stack:
        nu = stack.pop()
        for mu, k, n in _predecessors(rs, nu, p, floor):
            if mu not in parent:
                parent[mu] = (nu, k, n)
                if mu == target:
                    return parent
                stack.append(mu)
    return parent


def _chain(parent: dict, bottom: Weight, top: Weight, p: int) -> LinkageChain:
    steps = []
    cur = bottom
    while parent[cur] is not None:
        up, k, n = parent[cur]
        steps.append(LinkageStep(up, k, n))
        cur = up
    steps.reverse()
    return LinkageChain(bottom, top, p, tuple(steps))


def strongly_linked(rs: RootSystem, mu: Sequence[int], lam: Sequence[int], p: int) -> LinkageChain | None:
    """A verifying chain when mu is strongly linked to lam, else None."""
    _check_p(p)
    mu, lam = rs.check_weight(mu), rs.check_weight(lam)
    if mu == lam:
        return LinkageChain(mu, lam, p)
    if not rs.leq(mu, lam):
        return None
    parent = _explore(rs, lam, p, floor=mu, target=mu)
    if mu not in parent:
        return None
    return _chain(parent, mu, lam, p)


def linked(rs: RootSystem, mu: Sequence[int], lam: Sequence[int], p: int) -> bool:
    """Same W_p dot-orbit."""
    return wp_normal_form(rs, mu, p) == wp_normal_form(rs, lam, p)


def sl_down_set(
    rs: RootSystem,
    lam: Sequence[int],
    p: int,
    box: tuple[Sequence[int], Sequence[int]] | None = None,
) -> list[tuple[Weight, LinkageChain]]:
    """{mu in X+ - rho : mu strongly linked to lam, mu < lam}, each with its chain.

    The search floor is w0 . lam, below which no element of X+ - rho under lam lies.
    ``box`` optionally clips the search to fundamental coordinates lo <= nu <= hi.
    """
    _check_p(p)
    lam = rs.check_weight(lam)
    if not is_dominant(tuple(x + 1 for x in lam)):
        raise ValueError(f"lam + rho must be dominant, got lam = {list(lam)}")
    floor = dot(rs, longest_element(rs), lam)
    parent = {lam: None}
    stack = [lam]
    while stack:
        nu = stack.pop()
        for mu, k, n in _predecessors(rs, nu, p, floor):
            if box is not None and not all(a <= x <= b for a, x, b in zip(box[0], mu, box[1])):
                continue
            if mu not in parent:
                parent[mu] = (nu, k, n)
                stack.append(mu)
    found = sorted(mu for mu in parent if mu != lam and is_dominant(tuple(x + 1 for x in mu)))
    return [(mu, _chain(parent, mu, lam, p)) for mu in found]


def x_alpha_set(rs: RootSystem, lam: Sequence[int], alpha: int, p: int) -> list[Weight]:
    """{s_alpha . lam + r p alpha : 0 < r p < <lam + rho, alpha^vee>}, ascending in r."""
    _check_p(p)
    lam = rs.check_weight(lam)
    if not 0 <= alpha < rs.rank:
        raise IndexError(f"simple root index {alpha} out of range")
    top = lam[alpha] + 1
    if top < 0:
        raise ValueError(f"<lam + rho, alpha^vee> = {top} is negative")
    out = []
    r = 1
    while r * p < top:
        out.append(affine_reflect(rs, alpha, r, p, lam))
        r += 1
    return out
