"""Root systems of the finite simple types, in exact coordinates.

Roots are integer coordinate tuples in the simple-root basis; weights are
rational tuples of pairings with the simple coroots.  With these choices
regularity and dominance are sign tests and nothing is ever irrational.

Simple roots are indexed 1..rank and ordered the standard (Bourbaki) way:
chains are numbered consecutively; in type D the last two nodes are the
fork; in type E node 2 hangs off node 4 of the chain 1-3-4-5-...; in types
B/C/F/G the arrow conventions are fixed by the Cartan matrices below.
Long roots have squared length 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Root = tuple  # integer coordinates in the simple-root basis
Weight = tuple  # pairings with the simple coroots

_RANK_BOUNDS = {"A": 1, "B": 2, "C": 3, "D": 4}

POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

WEYL_ORDERS = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: 2**n * _factorial(n),
    "C": lambda n: 2**n * _factorial(n),
    "D": lambda n: 2 ** (n - 1) * _factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


@dataclass(frozen=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam in _RANK_BOUNDS:
            if n < _RANK_BOUNDS[fam]:
                raise ValueError(f"type {fam} requires rank >= {_RANK_BOUNDS[fam]}, got {n}")
        elif fam == "E":
            if n not in (6, 7, 8):
                raise ValueError(f"type E requires rank in {{6,7,8}}, got {n}")
        elif fam == "F":
            if n != 4:
                raise ValueError(f"type F requires rank 4, got {n}")
        elif fam == "G":
            if n != 2:
                raise ValueError(f"type G requires rank 2, got {n}")
        else:
            raise ValueError(f"unknown family {fam!r}")

    @classmethod
    def from_name(cls, name: str) -> "SimpleType":
        return cls(name[0].upper(), int(name[1:]))

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.name


def cartan_matrix(stype: SimpleType) -> tuple:
    """Cartan matrix with C[i][j] = <beta_j, beta_i^vee> (0-based rows i)."""
    fam, n = stype.family, stype.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        c[i - 1][j - 1] = cij
        c[j - 1][i - 1] = cji

    if fam in ("A", "B", "C", "D"):
        chain = n if fam == "A" else n - 1
        for i in range(1, chain):
            link(i, i + 1)
        if fam == "B":
            link(n - 1, n, -1, -2)  # beta_n short
        elif fam == "C":
            link(n - 1, n, -2, -1)  # beta_n long
        elif fam == "D":
            link(n - 2, n)
    elif fam == "E":
        for i, j in ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)):
            if j <= n:
                link(i, j)
        link(2, 4)
    elif fam == "F":
        link(1, 2)
        link(2, 3, -1, -2)  # beta_3 short
        link(3, 4)
    elif fam == "G":
        link(1, 2, -3, -1)  # beta_1 short
    return tuple(tuple(row) for row in c)


def _simple_root_lengths(stype: SimpleType) -> tuple:
    """Squared lengths of the simple roots, long roots normalized to 2."""
    fam, n = stype.family, stype.rank
    if fam in ("A", "D", "E"):
        return (Fraction(2),) * n
    if fam == "B":
        return (Fraction(2),) * (n - 1) + (Fraction(1),)
    if fam == "C":
        return (Fraction(1),) * (n - 1) + (Fraction(2),)
    if fam == "F":
        return (Fraction(2), Fraction(2), Fraction(1), Fraction(1))
    return (Fraction(2, 3), Fraction(2))  # G2


class RootSystem:
    """Root data of one simple type: Cartan matrix, positive roots, pairings.

    Immutable after construction; every method is a pure function of its
    arguments, so instances are safe for any number of concurrent readers.
    """

    def __init__(self, stype: SimpleType):
        self.stype = stype
        self.rank = stype.rank
        self.cartan = cartan_matrix(stype)
        self.lengths = _simple_root_lengths(stype)
        # (beta_i, beta_j) = len2(beta_i)/2 * C[i][j]; must come out symmetric
        n = self.rank
        self.bilinear = tuple(
            tuple(self.lengths[i] / 2 * self.cartan[i][j] for j in range(n))
            for i in range(n)
        )
        for i in range(n):
            for j in range(n):
                if self.bilinear[i][j] != self.bilinear[j][i]:
                    raise AssertionError("Cartan data is not symmetrizable as configured")
        self.positive_roots = self._enumerate_positive_roots()
        self._positive_set = frozenset(self.positive_roots)
        self._root_set = self._positive_set | frozenset(
            tuple(-x for x in r) for r in self.positive_roots
        )
        expected = POSITIVE_ROOT_COUNTS[stype.family](stype.rank)
        if len(self.positive_roots) != expected:
            raise AssertionError(
                f"{stype}: found {len(self.positive_roots)} positive roots, expected {expected}"
            )
        self.highest_root = max(self.positive_roots, key=lambda r: (sum(r), r))
        self.rho = (1,) * n
        self._coroot_coords = {
            r: self._coroot_in_simple_coroots(r) for r in self.positive_roots
        }

    # -- construction -----------------------------------------------------

    def _enumerate_positive_roots(self) -> tuple:
        n = self.rank
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(n):
                    s = self.reflect_root(r, i + 1)
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        positive = [r for r in seen if all(x >= 0 for x in r)]
        negative = [r for r in seen if all(x <= 0 for x in r)]
        if len(positive) + len(negative) != len(seen):
            raise AssertionError("found a root with mixed-sign coordinates")
        return tuple(sorted(positive, key=lambda r: (sum(r), r)))

    def _coroot_in_simple_coroots(self, r: Root) -> tuple:
        """Coordinates m with r^vee = sum m_i beta_i^vee."""
        len2 = self.root_length2(r)
        return tuple(Fraction(n_i) * l / len2 for n_i, l in zip(r, self.lengths))

    # -- basic queries -----------------------------------------------------

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def borel_dim(self) -> int:
        """b_g = |R+| + rank, the dimension of a Borel subalgebra."""
        return self.num_positive + self.rank

    def is_root(self, r) -> bool:
        return tuple(r) in self._root_set

    def is_positive_root(self, r) -> bool:
        return tuple(r) in self._positive_set

    def is_simple(self, r) -> bool:
        return sum(r) == 1 and all(x in (0, 1) for x in r)

    def simple_index(self, r) -> int:
        """1-based index of a simple root."""
        if not self.is_simple(r):
            raise ValueError(f"{r} is not a simple root")
        return list(r).index(1) + 1

    def root_height(self, r) -> int:
        return sum(r)

    def root_length2(self, r) -> Fraction:
        b = self.bilinear
        return sum(
            Fraction(r[i]) * r[j] * b[i][j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    # -- reflections and pairings ------------------------------------------

    def reflect_root(self, r: Root, i: int) -> Root:
        """s_{beta_i}(r) in simple-root coordinates (i is 1-based)."""
        k = i - 1
        pairing = sum(self.cartan[k][j] * r[j] for j in range(self.rank))
        out = list(r)
        out[k] -= pairing
        return tuple(out)

    def reflect(self, lam: Weight, i: int) -> Weight:
        """s_{beta_i}(lam) on coroot-pairing coordinates (i is 1-based)."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple index {i} out of range 1..{self.rank}")
        k = i - 1
        li = lam[k]
        return tuple(
            lam[j] - li * self.cartan[j][k] for j in range(self.rank)
        )

    def weight_of_root(self, r) -> Weight:
        """Coroot pairings <r, beta_i^vee> of a root (integer entries)."""
        r = tuple(r)
        if not self.is_root(r):
            raise ValueError(f"{r} is not a root of {self.stype}")
        return tuple(
            sum(self.cartan[i][j] * r[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def pairing(self, lam: Weight, r: Root):
        """<lam, r^vee> for a positive root r."""
        m = self._coroot_coords.get(tuple(r))
        if m is None:
            m = self._coroot_in_simple_coroots(tuple(r))
        return sum(l * c for l, c in zip(lam, m))

    def is_dominant(self, lam: Weight) -> bool:
        return all(x >= 0 for x in lam)

    def is_regular(self, lam: Weight) -> bool:
        return all(self.pairing(lam, r) != 0 for r in self.positive_roots)

    def zero_pairing_witness(self, lam: Weight):
        """A positive root r with <lam, r^vee> = 0, or None if lam is regular."""
        for r in self.positive_roots:
            if self.pairing(lam, r) == 0:
                return r
        return None

    def rho_shift(self, r: Root, sign: int) -> Weight:
        """The weight rho + sign*r for a root r."""
        w = self.weight_of_root(r)
        return tuple(1 + sign * x for x in w)


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct (and cache) the root system of the given simple type."""
    return RootSystem(SimpleType(family, rank))
