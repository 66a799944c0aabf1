"""Root systems of the simple types A-G, built from Cartan matrices.

Conventions: simple roots are numbered as in Bourbaki (for E6 the branch node
is 2, and the chain reads 1-3-4-5-6).  ``cartan[i][j]`` is the pairing
<alpha_i^vee, alpha_j>, so the pairing of a root with coefficients ``c`` and
the coroot h_i is ``sum_j c[j] * cartan[i][j]``.  Roots are integer tuples in
the simple-root basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

Root = tuple[int, ...]

RANK_BOUNDS = {"A": 1, "B": 2, "C": 3, "D": 4, "E": 6, "F": 4, "G": 2}


class RootSystemError(ValueError):
    pass


def cartan_matrix(letter: str, rank: int) -> list[list[int]]:
    letter = letter.upper()
    if letter not in RANK_BOUNDS:
        raise RootSystemError(f"unknown type letter {letter!r}; expected one of A-G")
    if rank < RANK_BOUNDS[letter]:
        raise RootSystemError(f"type {letter} needs rank >= {RANK_BOUNDS[letter]}, got {rank}")
    if letter == "E" and rank > 8:
        raise RootSystemError(f"type E exists only for ranks 6, 7, 8, got {rank}")
    if letter == "F" and rank != 4:
        raise RootSystemError(f"type F exists only in rank 4, got {rank}")
    if letter == "G" and rank != 2:
        raise RootSystemError(f"type G exists only in rank 2, got {rank}")

    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, ij=-1, ji=-1):
        a[i][j] = ij
        a[j][i] = ji

    if letter in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if letter == "B":
            # alpha_n short
            link(n - 2, n - 1, -1, -2)
        elif letter == "C":
            # alpha_n long
            link(n - 2, n - 1, -2, -1)
    elif letter == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif letter == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, -3, -1)
    return a


def _half_lengths(cartan: Sequence[Sequence[int]]) -> list[Fraction]:
    """d_i = (alpha_i, alpha_i)/2 with d_i * a_ij symmetric, longest roots at 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise RootSystemError("Cartan matrix is not connected")
    top = max(d)
    return [x / top for x in d]


@dataclass(frozen=True)
class DiagramInvolution:
    """A permutation of the simple-root indices (0-based) of order 1 or 2."""

    permutation: tuple[int, ...]

    def __post_init__(self):
        p = self.permutation
        if sorted(p) != list(range(len(p))):
            raise RootSystemError(f"not a permutation: {p}")
        if any(p[p[i]] != i for i in range(len(p))):
            raise RootSystemError(f"permutation {p} does not have order dividing 2")

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.permutation))

    def apply(self, root: Root) -> Root:
        out = [0] * len(root)
        for i, c in enumerate(root):
            out[self.permutation[i]] = c
        return tuple(out)

    def one_based(self) -> dict[int, int]:
        return {i + 1: j + 1 for i, j in enumerate(self.permutation)}


@dataclass(frozen=True, eq=False)
class RootSystem:
    letter: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    half_lengths: tuple[Fraction, ...] = field(repr=False)

    @property
    def type_label(self) -> tuple[str, int]:
        return (self.letter, self.rank)

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        """Positive roots in order, followed by their negatives in the same order."""
        return self.positive_roots + tuple(negate(r) for r in self.positive_roots)

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.roots)

    @cached_property
    def root_index(self) -> dict[Root, int]:
        return {r: i for i, r in enumerate(self.roots)}

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @property
    def dimension(self) -> int:
        return len(self.roots) + self.rank

    def is_root(self, vec: Sequence[int]) -> bool:
        return tuple(vec) in self.root_set

    def is_positive(self, root: Root) -> bool:
        return any(c > 0 for c in root)

    def height(self, root: Root) -> int:
        return sum(root)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.positive_roots)

    def pairing(self, root: Sequence[int], coroot_vec: Sequence) -> Fraction | int:
        """alpha(H) for H = sum_i H_i h_i given in simple-coroot coordinates."""
        total = 0
        for i, hi in enumerate(coroot_vec):
            if hi:
                total += hi * sum(c * self.cartan[i][j] for j, c in enumerate(root))
        return total

    def simple_pairing(self, root: Sequence[int], i: int) -> int:
        """<root, alpha_i^vee>."""
        return sum(c * self.cartan[i][j] for j, c in enumerate(root))

    def coweight_pairing(self, root: Sequence[int], coweight_vec: Sequence) -> int:
        """alpha(H) for H given in fundamental-coweight coordinates."""
        return sum(c * w for c, w in zip(root, coweight_vec))

    def inner(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        """Symmetric form with (alpha, alpha) = 2 on long roots."""
        total = Fraction(0)
        for i, ai in enumerate(a):
            if ai:
                d = self.half_lengths[i]
                total += ai * d * sum(self.cartan[i][j] * bj for j, bj in enumerate(b))
        return total

    def coroot(self, root: Root) -> tuple[int, ...]:
        """The coroot of ``root`` in simple-coroot coordinates."""
        d_root = self.inner(root, root) / 2
        out = []
        for i, c in enumerate(root):
            x = c * self.half_lengths[i] / d_root
            if x.denominator != 1:
                raise RootSystemError(f"non-integral coroot for {root}")
            out.append(int(x))
        return tuple(out)

    def reflect(self, root: Sequence[int], i: int) -> Root:
        k = self.simple_pairing(root, i)
        out = list(root)
        out[i] -= k
        return tuple(out)

    def string_bounds(self, alpha: Root, beta: Root) -> tuple[int, int]:
        """(p, q) with beta - p*alpha, ..., beta + q*alpha the alpha-string through beta."""
        p = 0
        while self.is_root(tuple(b - (p + 1) * a for a, b in zip(alpha, beta))):
            p += 1
        q = 0
        while self.is_root(tuple(b + (q + 1) * a for a, b in zip(alpha, beta))):
            q += 1
        return p, q

    def coroot_to_coweight(self, coroot_vec: Sequence) -> list:
        """Express H in fundamental-coweight coordinates: entries alpha_j(H)."""
        return [self.pairing(s, coroot_vec) for s in self.simple_roots]


def negate(root: Sequence[int]) -> Root:
    return tuple(-c for c in root)


def _enumerate_positive(cartan: Sequence[Sequence[int]]) -> list[Root]:
    """Positive roots by alpha_i-string extension, level by level."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    level = list(simple)
    while level:
        nxt = []
        for r in level:
            for i in range(n):
                p = 0
                t = list(r)
                while True:
                    t[i] -= 1
                    if tuple(t) in found:
                        p += 1
                    else:
                        break
                pair = sum(c * cartan[i][j] for j, c in enumerate(r))
                if p - pair > 0:
                    s = list(r)
                    s[i] += 1
                    s = tuple(s)
                    if s not in found:
                        found.add(s)
                        nxt.append(s)
        level = nxt
    return sorted(found, key=lambda r: (sum(r), r))


def build_root_system(type_label: tuple[str, int] | str) -> RootSystem:
    """Root datum for a simple type, e.g. ``("E", 6)`` or ``"E6"``."""
    letter, rank = parse_type(type_label)
    cm = cartan_matrix(letter, rank)
    pos = _enumerate_positive(cm)
    return RootSystem(
        letter=letter,
        rank=rank,
        cartan=tuple(tuple(r) for r in cm),
        positive_roots=tuple(pos),
        half_lengths=tuple(_half_lengths(cm)),
    )


def parse_type(type_label) -> tuple[str, int]:
    if isinstance(type_label, str):
        s = type_label.strip()
        if len(s) < 2 or not s[1:].isdigit():
            raise RootSystemError(f"cannot parse type {type_label!r}; expected e.g. 'E6'")
        return s[0].upper(), int(s[1:])
    letter, rank = type_label
    return str(letter).upper(), int(rank)


def reflection_orbit_roots(cartan: Sequence[Sequence[int]]) -> set[Root]:
    """All roots as the orbit of the simple roots under simple reflections."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    stack = list(simple)
    while stack:
        r = stack.pop()
        for i in range(n):
            k = sum(c * cartan[i][j] for j, c in enumerate(r))
            s = list(r)
            s[i] -= k
            s = tuple(s)
            if s not in seen:
                seen.add(s)
                stack.append(s)
    return seen


def highest_root(rs: RootSystem) -> Root:
    """The positive root dominating every other positive root coefficientwise."""
    candidates = [
        r for r in rs.positive_roots
        if not any(rs.is_root(tuple(c + int(i == j) for j, c in enumerate(r))) for i in range(rs.rank))
    ]
    if len(candidates) != 1:
        raise RootSystemError(f"expected a unique highest root, found {candidates}")
    return candidates[0]


def diagram_involution(rs: RootSystem) -> DiagramInvolution:
    """The nontrivial order-2 Dynkin symmetry for A_n (n>=2), D_n and E6; identity otherwise.

    For D4 the symmetry exchanging nodes 3 and 4 is returned.
    """
    n = rs.rank
    perm = list(range(n))
    if rs.letter == "A" and n >= 2:
        perm = list(reversed(range(n)))
    elif rs.letter == "D":
        perm[n - 2], perm[n - 1] = n - 1, n - 2
    elif rs.letter == "E" and n == 6:
        perm = [5, 1, 4, 3, 2, 0]
    inv = DiagramInvolution(tuple(perm))
    for i in range(n):
        for j in range(n):
            if rs.cartan[perm[i]][perm[j]] != rs.cartan[i][j]:
                raise RootSystemError(f"permutation {perm} does not preserve the Cartan matrix")
    return inv
