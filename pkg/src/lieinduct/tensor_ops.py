"""Decomposition of characters, tensor products and exterior/symmetric squares.

One engine serves all four operations: build a (full) weight table, restrict
to the dominant chamber and greedily peel maximal highest weights.  Exterior
and symmetric squares use the signed half-convolution: the square of the
character plus/minus its doubled-weight table, halved.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import InternalParity, NotACharacter
from .rep_theory import (
    CharacterTable,
    ModuleDescriptor,
    freudenthal_character,
    module_descriptor,
    weyl_dim,
    _require_dominant,
)
from .root_system import DynkinType, RootSystem, Vector, build_root_system


@dataclass(frozen=True)
class DecompositionResult:
    """Multiset of irreducible summands, with exact dimension conservation."""

    summands: tuple[tuple[ModuleDescriptor, int], ...]
    source_dimension: int

    def __post_init__(self) -> None:
        total = sum(md.dimension * m for md, m in self.summands)
        if total != self.source_dimension:
            raise NotACharacter(
                f"summand dimensions total {total}, expected {self.source_dimension}"
            )

    def multiplicity(self, weight: Sequence[int]) -> int:
        w = tuple(weight)
        for md, m in self.summands:
            if md.highest_weight == w:
                return m
        return 0

    def weights(self) -> list[Vector]:
        return [md.highest_weight for md, _ in self.summands]

    def as_multiset(self) -> dict[Vector, int]:
        return {md.highest_weight: m for md, m in self.summands}

    def __str__(self) -> str:
        parts = []
        for md, m in self.summands:
            label = f"V([{','.join(str(x) for x in md.highest_weight)}])"
            parts.append(label if m == 1 else f"{m}*{label}")
        return " + ".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def _full_table(t: DynkinType, lam: Vector) -> dict[Vector, int]:
    rs = build_root_system(t)
    return freudenthal_character(rs, lam).expand(rs)


def _peel(rs: RootSystem, dominant: dict[Vector, int], source_dim: int) -> DecompositionResult:
    """Greedy highest-weight peeling on dominant-chamber entries.

    Tie-break among maximal weights: largest height of the root-coordinate
    image, then lexicographically largest coordinates.
    """
    work = {w: m for w, m in dominant.items() if m != 0}
    out: list[tuple[ModuleDescriptor, int]] = []
    while work:
        w = max(work, key=lambda v: (sum(rs.weight_to_root(v)), v))
        m = work[w]
        if m < 0:
            raise NotACharacter(f"multiplicity of {w} driven to {m} during peeling")
        out.append((module_descriptor(rs, w), m))
        for w2, m2 in freudenthal_character(rs, w).entries.items():
            nv = work.get(w2, 0) - m * m2
            if nv:
                if nv < 0:
                    raise NotACharacter(
                        f"multiplicity of {w2} driven to {nv} during peeling"
                    )
                work[w2] = nv
            else:
                work.pop(w2, None)
    return DecompositionResult(tuple(out), source_dim)


def decompose_character(rs: RootSystem, ch: CharacterTable) -> DecompositionResult:
    """Write a genuine character as a sum of irreducibles."""
    if ch.algebra != rs.type:
        raise NotACharacter(f"character over {ch.algebra}, root system is {rs.type}")
    dominant = dict(ch.entries)
    return _peel(rs, dominant, ch.total_dimension(rs))


def tensor_decompose(
    rs: RootSystem, lam: Sequence[int], mu: Sequence[int]
) -> DecompositionResult:
    lam = _require_dominant(rs, lam)
    mu = _require_dominant(rs, mu)
    if lam > mu:
        lam, mu = mu, lam  # commutativity; canonical argument order for the cache
    return _tensor_cached(rs.type, lam, mu)


@lru_cache(maxsize=None)
def _tensor_cached(t: DynkinType, lam: Vector, mu: Vector) -> DecompositionResult:
    rs = build_root_system(t)
    ta = _full_table(t, lam)
    tb = _full_table(t, mu)
    if len(ta) > len(tb):
        ta, tb = tb, ta
    conv: dict[Vector, int] = {}
    for w1, m1 in ta.items():
        for w2, m2 in tb.items():
            key = tuple(a + b for a, b in zip(w1, w2))
            conv[key] = conv.get(key, 0) + m1 * m2
    dominant = {w: m for w, m in conv.items() if all(x >= 0 for x in w)}
    dim = weyl_dim(rs, lam) * weyl_dim(rs, mu)
    return _peel(rs, dominant, dim)


def _square_tables(t: DynkinType, lam: Vector) -> tuple[dict[Vector, int], dict[Vector, int]]:
    table = _full_table(t, lam)
    conv: dict[Vector, int] = {}
    items = list(table.items())
    for i, (w1, m1) in enumerate(items):
        # diagonal once, off-diagonal pairs doubled
        key = tuple(2 * a for a in w1)
        conv[key] = conv.get(key, 0) + m1 * m1
        for w2, m2 in items[i + 1 :]:
            key = tuple(a + b for a, b in zip(w1, w2))
            conv[key] = conv.get(key, 0) + 2 * m1 * m2
    psi2 = {tuple(2 * a for a in w): m for w, m in table.items()}
    return conv, psi2


def _half_convolution(rs: RootSystem, lam: Vector, sign: int) -> dict[Vector, int]:
    # every doubled weight also occurs in the squared character (the (u, u)
    # pair), so iterating the convolution covers all keys
    conv, psi2 = _square_tables(rs.type, lam)
    out: dict[Vector, int] = {}
    for w, m in conv.items():
        if not all(x >= 0 for x in w):
            continue
        val = m + sign * psi2.get(w, 0)
        if val % 2:
            raise InternalParity(
                f"non-integral multiplicity at {w} in the half-convolution"
            )
        if val:
            out[w] = val // 2
    return out


def wedge2_decompose(rs: RootSystem, lam: Sequence[int]) -> DecompositionResult:
    """Exterior square of V(lam)."""
    lam = _require_dominant(rs, lam)
    return _wedge2_cached(rs.type, lam)


@lru_cache(maxsize=None)
def _wedge2_cached(t: DynkinType, lam: Vector) -> DecompositionResult:
    rs = build_root_system(t)
    d = weyl_dim(rs, lam)
    return _peel(rs, _half_convolution(rs, lam, -1), d * (d - 1) // 2)


def sym2_decompose(rs: RootSystem, lam: Sequence[int]) -> DecompositionResult:
    """Symmetric square of V(lam)."""
    lam = _require_dominant(rs, lam)
    return _sym2_cached(rs.type, lam)


@lru_cache(maxsize=None)
def _sym2_cached(t: DynkinType, lam: Vector) -> DecompositionResult:
    rs = build_root_system(t)
    d = weyl_dim(rs, lam)
    return _peel(rs, _half_convolution(rs, lam, +1), d * (d + 1) // 2)
