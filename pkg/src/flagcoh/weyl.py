"""Finite Weyl group, dot action, and the p-dilated affine Weyl group.

A Weyl element is stored as a reduced word ``(i1, ..., ik)`` of 0-based simple
reflection indices meaning ``s_i1 s_i2 ... s_ik`` (rightmost acts first).
Words are canonicalized on construction so that equal elements compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .rootdata import RootSystem, Weight

ENUMERATION_CAP = 2_073_600


@dataclass(frozen=True)
class WeylElement:
    word: tuple = ()

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self):
        return format_word(self.word)


IDENTITY = WeylElement(())


@dataclass(frozen=True)
class BottAnswer:
    """Singular, or regular with ``witness . dominant == weight`` (dot action)."""

    dominant: Weight | None = None
    witness: WeylElement | None = None

    @property
    def singular(self) -> bool:
        return self.dominant is None

    @property
    def degree(self) -> int | None:
        return None if self.witness is None else self.witness.length


SINGULAR = BottAnswer()


def format_word(word: Sequence[int]) -> str:
    """Serialize as comma-separated 1-based indices; the identity is ``""``."""
    return ",".join(str(i + 1) for i in word)


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "e"):
        return ()
    return tuple(int(t) - 1 for t in text.split(","))


def reflect(rs: RootSystem, i: int, lam: Sequence[int]) -> Weight:
    """Linear simple reflection s_i(lam) = lam - <lam, alpha_i^vee> alpha_i."""
    c = lam[i]
    if c == 0:
        return tuple(lam)
    alpha = rs.positive_roots[i]
    return tuple(x - c * a for x, a in zip(lam, alpha))


def act(rs: RootSystem, w: WeylElement | Sequence[int], lam: Sequence[int]) -> Weight:
    word = w.word if isinstance(w, WeylElement) else w
    lam = tuple(lam)
    for i in reversed(word):
        lam = reflect(rs, i, lam)
    return lam


def dot(rs: RootSystem, w: WeylElement | Sequence[int], lam: Sequence[int]) -> Weight:
    shifted = act(rs, w, tuple(x + 1 for x in lam))
    return tuple(x - 1 for x in shifted)


def _descend(rs: RootSystem, x: Sequence[int]) -> tuple[Weight, tuple[int, ...]]:
    """Make ``x`` dominant by least-index simple reflections.

    Returns ``(x_plus, word)`` with ``x == act(word, x_plus)`` and ``word`` reduced.
    """
    x = tuple(x)
    word = []
    while True:
        for i, c in enumerate(x):
            if c < 0:
                x = reflect(rs, i, x)
                word.append(i)
                break
        else:
            return x, tuple(word)


def dominant_conjugate(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """The dominant element of the linear W-orbit of ``lam``."""
    return _descend(rs, lam)[0]


def _from_regular_image(rs: RootSystem, x: Sequence[int]) -> WeylElement:
    # x = w(rho) determines w
    _, word = _descend(rs, x)
    return WeylElement(word)


def weyl_element(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    """Validate a reduced word and return its element (with canonical word)."""
    word = tuple(word)
    if any(not 0 <= i < rs.rank for i in word):
        raise ValueError(f"simple reflection index out of range in {list(word)} for rank {rs.rank}")
    w = _from_regular_image(rs, act(rs, word, rs.rho))
    if w.length != len(word):
        raise ValueError(f"word {format_word(word)} is not reduced (length {w.length})")
    return w


def reduce_word(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    """The element represented by an arbitrary (possibly non-reduced) word."""
    return _from_regular_image(rs, act(rs, tuple(word), rs.rho))


def multiply(rs: RootSystem, w: WeylElement, v: WeylElement) -> WeylElement:
    return reduce_word(rs, w.word + v.word)


def inverse(rs: RootSystem, w: WeylElement) -> WeylElement:
    return reduce_word(rs, tuple(reversed(w.word)))


def longest_element(rs: RootSystem) -> WeylElement:
    return _from_regular_image(rs, tuple(-x for x in rs.rho))


def length(rs: RootSystem, w: WeylElement | Sequence[int]) -> int:
    """Number of positive roots made negative; valid for any word."""
    word = w.word if isinstance(w, WeylElement) else tuple(w)
    x = act(rs, tuple(reversed(word)), rs.rho)  # w^{-1} rho
    return sum(1 for v in rs.pairings(x) if v < 0)


def is_singular(rs: RootSystem, lam: Sequence[int]) -> bool:
    """True when lam + rho lies on a reflection wall."""
    return any(v == 0 for v in rs.pairings(tuple(x + 1 for x in lam)))


def dominant_dot_conjugate(rs: RootSystem, lam: Sequence[int]) -> BottAnswer:
    lam = rs.check_weight(lam)
    if is_singular(rs, lam):
        return SINGULAR
    plus, word = _descend(rs, tuple(x + 1 for x in lam))
    return BottAnswer(tuple(x - 1 for x in plus), WeylElement(word))


def shifted_dominant(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """The unique element of ``W . lam`` in ``X+ - rho`` (exists for singular lam too)."""
    plus, _ = _descend(rs, tuple(x + 1 for x in lam))
    return tuple(x - 1 for x in plus)


def weyl_group(rs: RootSystem) -> Iterator[WeylElement]:
    """Enumerate W in order of length. Refuses groups larger than ENUMERATION_CAP."""
    order = rs.cartan_type.weyl_group_order
    if order > ENUMERATION_CAP:
        raise ValueError(
            f"refusing to enumerate W({rs.cartan_type}) of order {order} (cap {ENUMERATION_CAP})"
        )
    layer = [tuple(rs.rho)]
    seen = set(layer)
    while layer:
        nxt = []
        for x in layer:
            yield _from_regular_image(rs, x)
            for i, c in enumerate(x):
                if c > 0:  # s_i w is longer than w
                    y = reflect(rs, i, x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        layer = nxt


def affine_reflect(rs: RootSystem, beta: int, r: int, p: int, nu: Sequence[int]) -> Weight:
    """s_{beta,r} . nu = s_beta . nu + r p beta."""
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    root = rs.positive_roots[beta]
    c = rs.pair(tuple(x + 1 for x in nu), beta) - r * p
    return tuple(x - c * b for x, b in zip(nu, root))


def wp_normal_form(rs: RootSystem, lam: Sequence[int], p: int) -> Weight:
    """Representative of ``W_p . lam`` with ``lam + rho`` in the closed fundamental alcove."""
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    theta = rs.highest_coroot
    root = rs.positive_roots[theta]
    x = tuple(v + 1 for v in rs.check_weight(lam))
    while True:
        x = dominant_conjugate(rs, x)
        c = rs.pair(x, theta)
        if c <= p:
            return tuple(v - 1 for v in x)
        x = tuple(v - (c - p) * b for v, b in zip(x, root))
