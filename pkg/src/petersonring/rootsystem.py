"""Cartan data for the simple root systems.

Conventions: simple roots are the unit vectors of the coordinate space, the
Cartan matrix satisfies ``alpha_i = sum_j c[i][j] * varpi_j`` (so
``c[i][j] = <alpha_i, alpha_j^vee>``, Bourbaki numbering) and the reflection
``s_i`` acts by ``lam -> lam - <lam, alpha_i^vee> alpha_i``.  Fundamental
weights are the rows of the inverse Cartan matrix.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from petersonring import linalg

FAMILIES = "ABCDEFG"
DEFAULT_MAX_RANK = 8

# known |Phi^+| used to validate the hard-coded matrices
_EXCEPTIONAL_POSITIVE = {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}


class RootSystemError(ValueError):
    """Invalid family/rank combination."""


@dataclass(frozen=True)
class RootSystemSpec:
    family: str
    rank: int

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class RootSystemData:
    family: str
    rank: int
    cartan: tuple
    inverse_cartan: tuple
    dynkin_adjacency: tuple
    positive_roots: tuple

    @property
    def name(self):
        return f"{self.family}{self.rank}"

    @property
    def indices(self):
        return range(1, self.rank + 1)

    def simple_root(self, i):
        return tuple(Fraction(int(j == i)) for j in self.indices)

    def fundamental_weight(self, i):
        """varpi_i in simple-root coordinates (row i of the inverse Cartan matrix)."""
        return tuple(self.inverse_cartan[i - 1])

    def inverse_row_sum(self, i):
        """sum_j d_ij, the t-coefficient in the equivariant lift of varpi_i."""
        return sum(self.inverse_cartan[i - 1], Fraction(0))

    def pairing(self, vec, i):
        """<vec, alpha_i^vee> for vec in simple-root coordinates."""
        return sum((vec[j] * self.cartan[j][i - 1] for j in range(self.rank)), 0)

    def reflect(self, i, vec):
        c = self.pairing(vec, i)
        out = list(vec)
        out[i - 1] = out[i - 1] - c
        return tuple(out)


def _check_spec(spec, max_rank):
    fam, n = spec.family, spec.rank
    if fam not in FAMILIES or len(fam) != 1:
        raise RootSystemError(f"unknown family {fam!r}; expected one of {FAMILIES}")
    if not isinstance(n, int) or n < 1:
        raise RootSystemError(f"rank must be a positive integer, got {n!r}")
    legal = {
        "A": n >= 1, "B": n >= 2, "C": n >= 2, "D": n >= 3,
        "E": n in (6, 7, 8), "F": n == 4, "G": n == 2,
    }[fam]
    if not legal:
        raise RootSystemError(f"{fam}{n} is not a valid simple type")
    if fam in "ABCD" and n > max_rank:
        raise RootSystemError(f"rank {n} exceeds the cap {max_rank}; raise max_rank")


def _edges(fam, n):
    """Dynkin edges (i, j) with the Cartan entries (c_ij, c_ji)."""
    simple = lambda i, j: (i, j, -1, -1)
    if fam == "A":
        return [simple(i, i + 1) for i in range(1, n)]
    if fam == "B":
        return [simple(i, i + 1) for i in range(1, n - 1)] + [(n - 1, n, -2, -1)]
    if fam == "C":
        return [simple(i, i + 1) for i in range(1, n - 1)] + [(n - 1, n, -1, -2)]
    if fam == "D":
        return [simple(i, i + 1) for i in range(1, n - 1)] + [simple(n - 2, n)]
    if fam == "E":
        return [simple(1, 3), simple(2, 4), simple(3, 4)] + [simple(i, i + 1) for i in range(4, n)]
    if fam == "F":
        return [simple(1, 2), (2, 3, -2, -1), simple(3, 4)]
    if fam == "G":
        return [(1, 2, -1, -3)]
    raise RootSystemError(fam)


def cartan_matrix(fam, n):
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, cij, cji in _edges(fam, n):
        c[i - 1][j - 1] = cij
        c[j - 1][i - 1] = cji
    return c


def _positive_roots(rank, reflect):
    simple = [tuple(int(j == i) for j in range(rank)) for i in range(rank)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for root in frontier:
            for i in range(1, rank + 1):
                image = reflect(i, root)
                if all(x >= 0 for x in image) and image not in found:
                    found.add(image)
                    nxt.append(image)
        frontier = nxt
    return tuple(sorted(found, key=lambda r: (sum(r), tuple(-x for x in r))))


def known_positive_count(fam, n):
    if fam == "A":
        return n * (n + 1) // 2
    if fam in "BC":
        return n * n
    if fam == "D":
        return n * (n - 1)
    return _EXCEPTIONAL_POSITIVE[(fam, n)]


@lru_cache(maxsize=None)
def _build(fam, n):
    c = cartan_matrix(fam, n)
    d = linalg.inverse(c)
    adj = tuple(tuple(i != j and c[i][j] != 0 for j in range(n)) for i in range(n))

    def reflect(i, vec):
        k = sum(vec[j] * c[j][i - 1] for j in range(n))
        out = list(vec)
        out[i - 1] -= k
        return tuple(out)

    roots = _positive_roots(n, reflect)
    if len(roots) != known_positive_count(fam, n):
        raise AssertionError(f"{fam}{n}: closure produced {len(roots)} positive roots")
    return RootSystemData(
        family=fam,
        rank=n,
        cartan=tuple(tuple(row) for row in c),
        inverse_cartan=tuple(tuple(row) for row in d),
        dynkin_adjacency=adj,
        positive_roots=roots,
    )


def build_root_system(spec, max_rank=DEFAULT_MAX_RANK):
    """Exact Cartan data for a simple type; raises RootSystemError on bad input."""
    if isinstance(spec, str):
        spec = parse_type(spec)
    _check_spec(spec, max_rank)
    return _build(spec.family, spec.rank)


def parse_type(text):
    """'A3' -> RootSystemSpec('A', 3)."""
    text = text.strip().upper()
    if len(text) < 2 or not text[1:].isdigit():
        raise RootSystemError(f"cannot parse root system {text!r}")
    return RootSystemSpec(text[0], int(text[1:]))


def connected_components(K, data):
    """Split K into Dynkin-connected parts, ordered by least element."""
    remaining = set(K)
    for k in remaining:
        if not 1 <= k <= data.rank:
            raise ValueError(f"index {k} outside 1..{data.rank}")
    parts = []
    while remaining:
        start = min(remaining)
        comp = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in list(remaining):
                if j not in comp and data.dynkin_adjacency[i - 1][j - 1]:
                    comp.add(j)
                    stack.append(j)
        remaining -= comp
        parts.append(frozenset(comp))
    return parts
