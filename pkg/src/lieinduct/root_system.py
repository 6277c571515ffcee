"""Irreducible root systems from Cartan matrices, with exact integer arithmetic.

Conventions (fixed once, validated by the highest-root round-trip tests):

* Node labels are 1-based and follow the Humphreys numbering.  Coordinate
  vectors are plain tuples, index 0 holding node 1.
* The stored Cartan matrix has entries ``C[i][j] = 2(a_i, a_j)/(a_j, a_j)``,
  i.e. row = root, column = coroot.  A root with simple-root coordinates ``k``
  then has fundamental-weight coordinates ``m_j = sum_i k_i C[i][j]``, and the
  highest weight of the level -1 graded component of a node deletion is the
  negated deleted *row* of C.
* The symmetrizer ``d`` is normalized so short simple roots have ``d_i = 1``
  (short root length squared = 2).  With the row-root convention above the
  symmetry relation reads ``C[i][j] * d[j] == C[j][i] * d[i]``, and
  ``(a_i, a_j) = C[i][j] * d[j]`` is the exact symmetric bilinear form.

No floating point is used anywhere; weight-to-root conversion is exact over
``fractions.Fraction``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidType, NonIntegral, NotARoot

Vector = tuple[int, ...]

RANK_RANGES: dict[str, tuple[int, int | None]] = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),  # C starts at 3 to avoid relabelling B2
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# Weyl group orders of the exceptional types; classical families use formulas.
_EXCEPTIONAL_WEYL_ORDER = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        rng = RANK_RANGES.get(self.family)
        if rng is None:
            raise InvalidType(f"unknown family {self.family!r}; expected one of A-G")
        lo, hi = rng
        if self.rank < lo or (hi is not None and self.rank > hi):
            hi_text = str(hi) if hi is not None else "unbounded"
            raise InvalidType(
                f"{self.family}{self.rank} out of range: {self.family} accepts "
                f"rank {lo}..{hi_text}"
            )

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_dynkin(text: str) -> DynkinType:
    """Parse a type label such as "E8" or "a12" (case-insensitive)."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
    if not m:
        raise InvalidType(f"cannot parse Dynkin type from {text!r}; expected e.g. 'E8'")
    return DynkinType(m.group(1).upper(), int(m.group(2)))


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> int:
        """Entry for 1-based node labels i, j."""
        return self.entries[i - 1][j - 1]

    def validate(self) -> None:
        n = self.rank
        c, d = self.entries, self.symmetrizer
        if min(d) != 1:
            raise InvalidType("symmetrizer must be normalized with min d_i = 1")
        for i in range(n):
            if c[i][i] != 2:
                raise InvalidType("Cartan diagonal must be 2")
            for j in range(n):
                if i == j:
                    continue
                if c[i][j] not in (0, -1, -2, -3):
                    raise InvalidType(f"off-diagonal entry {c[i][j]} out of range")
                if (c[i][j] == 0) != (c[j][i] == 0):
                    raise InvalidType("zero pattern must be symmetric")
                # C * diag(d) symmetric: C[i][j] d_j = C[j][i] d_i.
                if c[i][j] * d[j] != c[j][i] * d[i]:
                    raise InvalidType("symmetrizer does not symmetrize C")


def _chain(n: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        c[i][i + 1] = -1
        c[i + 1][i] = -1
    return c


def cartan_matrix(t: DynkinType) -> CartanMatrix:
    """Cartan matrix and symmetrizer in the Humphreys numbering."""
    l = t.rank
    c = _chain(l)
    d = [1] * l
    if t.family == "B":
        # nodes 1..l-1 long, node l short
        c[l - 2][l - 1] = -2
        c[l - 1][l - 2] = -1
        d = [2] * (l - 1) + [1]
    elif t.family == "C":
        # nodes 1..l-1 short, node l long
        c[l - 2][l - 1] = -1
        c[l - 1][l - 2] = -2
        d = [1] * (l - 1) + [2]
    elif t.family == "D":
        c[l - 2][l - 1] = 0
        c[l - 1][l - 2] = 0
        c[l - 3][l - 1] = -1
        c[l - 1][l - 3] = -1
    elif t.family == "E":
        # chain 1-3-4-...-l with node 2 attached to node 4
        c = [[2 if i == j else 0 for j in range(l)] for i in range(l)]
        edges = [(1, 3), (3, 4), (2, 4)] + [(i, i + 1) for i in range(4, l)]
        for a, b in edges:
            c[a - 1][b - 1] = -1
            c[b - 1][a - 1] = -1
    elif t.family == "F":
        # nodes 1,2 long; 3,4 short; double edge 2=>3
        c[1][2] = -2
        c[2][1] = -1
        d = [2, 2, 1, 1]
    elif t.family == "G":
        # node 1 short, node 2 long
        c = [[2, -1], [-3, 2]]
        d = [1, 3]
    cm = CartanMatrix(tuple(tuple(row) for row in c), tuple(d))
    cm.validate()
    return cm


# Highest-root coordinates per family, used as a fail-fast convention check
# at build time (A-D are rank-parameterized).
def _expected_highest_root(t: DynkinType) -> Vector:
    l = t.rank
    if t.family == "A":
        return (1,) * l
    if t.family == "B":
        return (1,) + (2,) * (l - 1)
    if t.family == "C":
        return (2,) * (l - 1) + (1,)
    if t.family == "D":
        return (1,) + (2,) * (l - 3) + (1, 1)
    table = {
        ("E", 6): (1, 2, 2, 3, 2, 1),
        ("E", 7): (2, 2, 3, 4, 3, 2, 1),
        ("E", 8): (2, 3, 4, 6, 5, 4, 3, 2),
        ("F", 4): (2, 3, 4, 2),
        ("G", 2): (3, 2),
    }
    return table[(t.family, t.rank)]


# eq=False: build_root_system returns a cached singleton per type, so identity
# hashing is both correct and cheap for the memoization caches keyed on it.
@dataclass(frozen=True, eq=False)
class RootSystem:
    type: DynkinType
    cartan: CartanMatrix
    positive_roots: tuple[Vector, ...]
    highest_root: Vector
    roots: frozenset[Vector]

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def rho(self) -> Vector:
        return (1,) * self.rank

    @property
    def num_roots(self) -> int:
        return 2 * len(self.positive_roots)

    @property
    def dimension(self) -> int:
        """dim g = |R| + rank."""
        return self.num_roots + self.rank

    # -- coordinate conversions ------------------------------------------

    def root_to_weight(self, k: Sequence[int]) -> Vector:
        """m_j = sum_i k_i C[i][j]."""
        c = self.cartan.entries
        n = self.rank
        return tuple(sum(k[i] * c[i][j] for i in range(n)) for j in range(n))

    def weight_to_root(self, m: Sequence[int | Fraction]) -> tuple[Fraction, ...]:
        """Exact inverse of root_to_weight; may be non-integral."""
        inv = _cartan_inverse(self.type)
        n = self.rank
        return tuple(
            sum((Fraction(m[j]) * inv[j][i] for j in range(n)), Fraction(0))
            for i in range(n)
        )

    # -- bilinear form ----------------------------------------------------

    def form_weight_root(self, m: Sequence[int], k: Sequence[int]) -> int:
        """(lambda, beta) for lambda in weight coords, beta in root coords."""
        d = self.cartan.symmetrizer
        return sum(k[j] * d[j] * m[j] for j in range(self.rank))

    def root_norm(self, k: Sequence[int]) -> int:
        """(beta, beta) for beta in root coordinates."""
        return self.form_weight_root(self.root_to_weight(k), k)

    def coroot_pairing(self, m: Sequence[int], alpha: Sequence[int]) -> int:
        """<lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha)."""
        num = 2 * self.form_weight_root(m, alpha)
        den = self.root_norm(alpha)
        if num % den:
            raise NonIntegral(f"coroot pairing of {m} with {alpha} is not integral")
        return num // den

    # -- reflections -------------------------------------------------------

    def reflect(self, m: Sequence[int], i: int) -> Vector:
        """Simple reflection s_i on fundamental-weight coordinates (i 1-based)."""
        row = self.cartan.entries[i - 1]
        mi = m[i - 1]
        return tuple(m[j] - mi * row[j] for j in range(self.rank))


@lru_cache(maxsize=None)
def _cartan_inverse(t: DynkinType) -> tuple[tuple[Fraction, ...], ...]:
    c = cartan_matrix(t).entries
    n = len(c)
    aug = [[Fraction(c[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = Fraction(1) / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@lru_cache(maxsize=None)
def build_root_system(t: DynkinType) -> RootSystem:
    """Generate the full root set by closing simple-root strings (p - q rule)."""
    cm = cartan_matrix(t)
    n = t.rank
    c = cm.entries
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    positive: set[Vector] = set(simple)
    frontier: list[Vector] = list(simple)
    while frontier:
        nxt: list[Vector] = []
        for beta in frontier:
            for i in range(n):
                # i-th weight coordinate of beta: <beta, alpha_i^vee>
                pairing = sum(beta[j] * c[j][i] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in positive:
                        p += 1
                    else:
                        break
                if p - pairing >= 1:
                    up = list(beta)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in positive:
                        positive.add(cand)
                        nxt.append(cand)
        frontier = nxt

    ordered = tuple(sorted(positive, key=lambda r: (sum(r), r)))
    highest = ordered[-1]
    if highest != _expected_highest_root(t):
        raise InvalidType(
            f"convention drift: generated highest root {highest} for {t} does not "
            f"match the expected coordinates {_expected_highest_root(t)}"
        )
    heights = [sum(r) for r in ordered]
    if heights.count(max(heights)) != 1:
        raise InvalidType(f"highest root of {t} is not unique")
    all_roots = frozenset(ordered) | frozenset(tuple(-x for x in r) for r in ordered)
    return RootSystem(t, cm, ordered, highest, all_roots)


def highest_root(rs: RootSystem) -> Vector:
    """The unique maximal-height root."""
    return rs.highest_root


@dataclass(frozen=True)
class RootStats:
    height: int
    support: tuple[int, ...]
    mult: Vector


def root_stats(rs: RootSystem, r: Sequence[int]) -> RootStats:
    """Height, support and per-node multiplicities of a root."""
    r = tuple(r)
    if r not in rs.roots:
        raise NotARoot(f"{r} is not a root of {rs.type}")
    support = tuple(i + 1 for i, k in enumerate(r) if k != 0)
    return RootStats(height=sum(r), support=support, mult=r)


def root_weight_convert(
    rs: RootSystem,
    v: Sequence[int],
    direction: str,
    require_integral: bool = True,
):
    """Convert between root and fundamental-weight coordinates.

    direction is "root-to-weight" or "weight-to-root".  The weight-to-root
    direction is exact over rationals; with require_integral it raises
    NonIntegral on weights outside the root lattice.
    """
    if direction in ("root-to-weight", "root->weight"):
        return rs.root_to_weight(v)
    if direction in ("weight-to-root", "weight->root"):
        k = rs.weight_to_root(v)
        if require_integral:
            if any(x.denominator != 1 for x in k):
                raise NonIntegral(
                    f"weight {tuple(v)} of {rs.type} is not in the root lattice"
                )
            return tuple(int(x) for x in k)
        return k
    raise ValueError(f"unknown direction {direction!r}")


def to_dominant(rs: RootSystem, w: Sequence[int]) -> tuple[Vector, int]:
    """Dominant Weyl-conjugate of w and the number of simple reflections used."""
    m = tuple(w)
    count = 0
    while True:
        neg = next((i for i, x in enumerate(m) if x < 0), None)
        if neg is None:
            return m, count
        m = rs.reflect(m, neg + 1)
        count += 1


def diagram_automorphisms(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    """All node permutations preserving the Cartan matrix.

    Each permutation is returned as a tuple p with p[i-1] the image of node i.
    """
    c = cartan_matrix(t).entries
    n = t.rank
    results: list[tuple[int, ...]] = []

    def extend(img: list[int], used: set[int]) -> None:
        i = len(img)
        if i == n:
            results.append(tuple(x + 1 for x in img))
            return
        for cand in range(n):
            if cand in used:
                continue
            ok = all(
                c[i][j] == c[cand][img[j]] and c[j][i] == c[img[j]][cand]
                for j in range(i)
            ) and c[i][i] == c[cand][cand]
            if ok:
                img.append(cand)
                used.add(cand)
                extend(img, used)
                img.pop()
                used.remove(cand)

    extend([], set())
    return tuple(sorted(results))


def coxeter_number(rs: RootSystem) -> int:
    """h = |R| / rank, with the height identity ht(highest root) = h - 1."""
    h, rem = divmod(rs.num_roots, rs.rank)
    assert rem == 0, "root count is not divisible by the rank"
    assert sum(rs.highest_root) == h - 1, "height of highest root must be h - 1"
    return h


def weyl_order(t: DynkinType) -> int:
    """Order of the Weyl group."""
    l = t.rank
    if t.family == "A":
        return _factorial(l + 1)
    if t.family in ("B", "C"):
        return (1 << l) * _factorial(l)
    if t.family == "D":
        return (1 << (l - 1)) * _factorial(l)
    return _EXCEPTIONAL_WEYL_ORDER[(t.family, t.rank)]


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


# ---------------------------------------------------------------------------
# Sub-diagram classification.  Shared by node deletion (residual algebras) and
# by Weyl orbit-size computations (parabolic stabilizers).
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubdiagramComponent:
    """A connected component of a node subset, identified as a Dynkin type.

    embedding[i-1] is the ambient label of this component's canonical node i;
    it is the lexicographically smallest valid graph isomorphism.
    """

    type: DynkinType
    embedding: tuple[int, ...]


def _connected_components(entries, nodes: Iterable[int]) -> list[list[int]]:
    nodes = sorted(nodes)
    remaining = set(nodes)
    comps = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            a = frontier.pop()
            for b in list(remaining - comp):
                if entries[a - 1][b - 1] != 0:
                    comp.add(b)
                    frontier.append(b)
        comps.append(sorted(comp))
        remaining -= comp
    return comps


def _identify_component(entries, symmetrizer, comp: list[int]) -> DynkinType:
    n = len(comp)
    if n == 1:
        return DynkinType("A", 1)
    mults = {}
    for a, b in itertools.combinations(comp, 2):
        cab = entries[a - 1][b - 1]
        if cab:
            mults[(a, b)] = entries[a - 1][b - 1] * entries[b - 1][a - 1]
    mx = max(mults.values())
    if mx == 3:
        if n != 2:
            raise InvalidType("triple edge only occurs in rank 2")
        return DynkinType("G", 2)
    if mx == 2:
        # path with one double edge; count nodes on the short-root side
        short = sum(1 for a in comp if symmetrizer[a - 1] == min(symmetrizer[b - 1] for b in comp))
        long_ct = n - short
        if n == 2:
            return DynkinType("B", 2)
        if short == 1:
            return DynkinType("B", n)
        if long_ct == 1:
            return DynkinType("C", n)
        if short == 2 and long_ct == 2:
            return DynkinType("F", 4)
        raise InvalidType(f"unrecognized multiply-laced diagram on {comp}")
    degrees = {a: sum(1 for b in comp if b != a and entries[a - 1][b - 1]) for a in comp}
    branch = [a for a in comp if degrees[a] == 3]
    if not branch:
        return DynkinType("A", n)
    if len(branch) > 1 or max(degrees.values()) > 3:
        raise InvalidType(f"diagram on {comp} is not of finite type")
    # arm lengths from the unique branch node
    b = branch[0]
    arms = []
    for first in (a for a in comp if entries[b - 1][a - 1] and a != b):
        length, prev, cur = 1, b, first
        while True:
            nxts = [x for x in comp if x not in (prev, cur) and entries[cur - 1][x - 1]]
            if not nxts:
                break
            prev, cur = cur, nxts[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return DynkinType("D", n)
    if arms == [1, 2, 2]:
        return DynkinType("E", 6)
    if arms == [1, 2, 3]:
        return DynkinType("E", 7)
    if arms == [1, 2, 4]:
        return DynkinType("E", 8)
    raise InvalidType(f"diagram on {comp} is not of finite type")


def subdiagram_isomorphisms(
    t: DynkinType, entries, comp: list[int]
) -> list[tuple[int, ...]]:
    """All maps canonical-node -> ambient-label realizing t on the subset comp."""
    canon = cartan_matrix(t).entries
    n = t.rank
    out: list[tuple[int, ...]] = []

    def extend(img: list[int], used: set[int]) -> None:
        i = len(img)
        if i == n:
            out.append(tuple(img))
            return
        for cand in comp:
            if cand in used:
                continue
            ok = all(
                canon[i][j] == entries[cand - 1][img[j] - 1]
                and canon[j][i] == entries[img[j] - 1][cand - 1]
                for j in range(i)
            )
            if ok:
                img.append(cand)
                used.add(cand)
                extend(img, used)
                img.pop()
                used.remove(cand)

    extend([], set())
    return sorted(out)


def classify_subdiagram(
    entries, symmetrizer, nodes: Iterable[int]
) -> tuple[SubdiagramComponent, ...]:
    """Split a node subset into components and identify each as a Dynkin type.

    Components are ordered by their smallest ambient label; each embedding is
    the lexicographically smallest isomorphism (the canonical choice when no
    explicit embedding is supplied).
    """
    comps = []
    for comp in _connected_components(entries, nodes):
        t = _identify_component(entries, symmetrizer, comp)
        isos = subdiagram_isomorphisms(t, entries, comp)
        if not isos:
            raise InvalidType(f"classification of {comp} as {t} failed")
        comps.append(SubdiagramComponent(t, isos[0]))
    return tuple(comps)
