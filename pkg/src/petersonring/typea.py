"""Type-A cell charts of Peterson Schubert cells and their minor equations.

Flags are column spans: V_j is spanned by the first j columns of the chart
matrix.  The regular nilpotent is the Jordan block N with N e_{j+1} = e_j.
"""

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from petersonring import linalg
from petersonring.polyring import Poly
from petersonring.polyring.hilbert import qadd, qdouble, qpow, qshift
from petersonring.rootsystem import build_root_system, connected_components
from petersonring.weyl import longest_parabolic, one_line

SEED = 0x5EED
BLOCK_LETTERS = "xyzuvwrs"


class ChartError(ValueError):
    """Bad flag size or subset for a cell chart."""


@dataclass(frozen=True)
class CellChart:
    n: int
    K: frozenset
    matrix: tuple
    names: tuple
    blocks: tuple

    @property
    def dim(self):
        return len(self.names)

    @property
    def nvars(self):
        return len(self.names)

    def evaluate(self, point):
        return [[entry.evaluate(point) for entry in row] for row in self.matrix]

    def render(self):
        """Text layout of the block-diagonal chart, blank for zero entries."""
        cells = [["" if e.is_zero() else e.render(list(self.names)) for e in row]
                 for row in self.matrix]
        width = max(1, max(len(c) for row in cells for c in row))
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def type_a_data(n):
    """Root data of type A_{n-1}, the flag variety of C^n."""
    return build_root_system(f"A{n - 1}", max_rank=max(8, n - 1))


def _components(n, K):
    if n < 2:
        raise ChartError("flag size must be at least 2")
    K = frozenset(K)
    if not K <= set(range(1, n)):
        raise ChartError(f"K={sorted(K)} is not a subset of 1..{n - 1}")
    return [sorted(c) for c in connected_components(K, type_a_data(n))]


def build_cell_chart(n, K, letters=BLOCK_LETTERS):
    """Block-diagonal Hankel chart of the Peterson Schubert cell for K.

    The block for a component K_i occupies rows and columns
    K_i + {max K_i + 1}; its coordinates c_1..c_m (m = |K_i|) sit on the
    anti-diagonals above the main one, which is all 1's.
    """
    comps = _components(n, K)
    nvars = sum(len(c) for c in comps)
    names = []
    zero = Poly.zero(nvars)
    one = Poly.constant(nvars, 1)
    mat = [[one if r == c else zero for c in range(n)] for r in range(n)]
    blocks = []
    offset = 0
    for b, comp in enumerate(comps):
        m = len(comp)
        if len(letters) == 1:
            # one letter numbered straight through all blocks
            names += [f"{letters}_{offset + k}" for k in range(1, m + 1)]
        else:
            letter = letters[b % len(letters)]
            names += [f"{letter}_{k}" for k in range(1, m + 1)]
        start = comp[0] - 1
        for r in range(m + 1):
            for c in range(m + 1):
                s = r + c
                if s < m:
                    entry = Poly.var(nvars, offset + s)
                elif s == m:
                    entry = one
                else:
                    entry = zero
                mat[start + r][start + c] = entry
        blocks.append((start + 1, start + m + 1, offset, m))
        offset += m
    return CellChart(n, frozenset(K), tuple(tuple(r) for r in mat), tuple(names), tuple(blocks))


def permutation_matrix(n, K):
    """Chart at the origin, i.e. the permutation flag of w_K."""
    chart = build_cell_chart(n, K)
    return chart.evaluate([0] * chart.nvars)


def nilpotent_ok(mat):
    """N V_i in V_{i+1} for every i, on a numeric matrix."""
    n = len(mat)
    cols = linalg.transpose(mat)
    shifted = [col[1:] + [Fraction(0)] for col in cols]  # N e_{j+1} = e_j
    for i in range(1, n):
        span = cols[:i + 1]
        if linalg.rank(span + shifted[:i]) != linalg.rank(span):
            return False
    return True


def verify_peterson_membership(chart, samples=100, seed=SEED):
    """Check the Peterson condition at pseudo-random rational points."""
    rng = random.Random(seed)
    for _ in range(samples):
        point = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(chart.nvars)]
        if not nilpotent_ok(chart.evaluate(point)):
            return False
    return True


# determinants over Q[coords]

def det_cofactor(mat):
    """Laplace expansion along the first row."""
    n = len(mat)
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return mat[0][0]
    total = Poly.zero(mat[0][0].nvars)
    for c in range(n):
        if mat[0][c].is_zero():
            continue
        minor = [row[:c] + row[c + 1:] for row in mat[1:]]
        term = mat[0][c] * det_cofactor(minor)
        total = total + term if c % 2 == 0 else total - term
    return total


def det_bareiss(mat):
    """Fraction-free elimination; every division is exact over the polynomial ring."""
    m = [list(row) for row in mat]
    n = len(m)
    nvars = m[0][0].nvars
    sign = 1
    prev = Poly.constant(nvars, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if swap is None:
                return Poly.zero(nvars)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_divide(prev)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def determinant(mat):
    return det_cofactor(mat) if len(mat) <= 4 else det_bareiss(mat)


def leading_minor(chart, order):
    return determinant([list(row[:order]) for row in chart.matrix[:order]])


@dataclass
class MinorEquationSet:
    equations: dict
    flagged_empty: bool = False

    def render(self, names):
        return {j: p.render(list(names)) for j, p in self.equations.items()}


def minor_equations(chart, J):
    """Leading principal minor of order j for each j in J.

    J outside K describes a stratum that is geometrically empty; it is
    computed anyway and flagged.
    """
    J = sorted(J)
    eqs = {j: leading_minor(chart, j) for j in J}
    return MinorEquationSet(eqs, flagged_empty=not set(J) <= chart.K)


@dataclass
class Elimination:
    n: int
    a: int
    b: int
    K: frozenset
    dim: int
    substitution: dict
    pivots: list = field(default_factory=list)


def interval_elimination(n, a, b, K):
    """Solve the minors of orders a..b on the chart of K, for [a,b] <= K <= [a,n-1].

    After substituting the coordinates already forced to zero, the minor of
    order a+r is checked to be a nonzero multiple of (c_{r+1})^(r+1), which
    forces c_{r+1} = 0.
    """
    K = frozenset(K)
    if not 1 <= a <= b <= n - 1:
        raise ChartError(f"need 1 <= a <= b <= n-1, got a={a} b={b} n={n}")
    interval = frozenset(range(a, b + 1))
    if not (interval <= K <= frozenset(range(a, n))):
        raise ChartError(f"K={sorted(K)} is not between [{a},{b}] and [{a},{n - 1}]")
    chart = build_cell_chart(n, K)
    first = chart.blocks[0]
    if first[0] != a:
        raise AssertionError("leading block should start at a")
    offset = first[2]
    subst = {}
    pivots = []
    for r in range(b - a + 1):
        minor = leading_minor(chart, a + r).subs(subst)
        var = offset + r
        target = Poly.var(chart.nvars, var) ** (r + 1)
        terms = minor.terms
        if len(terms) != 1 or next(iter(terms)) != target.lm():
            raise AssertionError(
                f"order {a + r} minor is {minor.render(list(chart.names))}, "
                f"expected a multiple of {chart.names[var]}^{r + 1}")
        pivots.append((a + r, chart.names[var], minor.lc()))
        subst[var] = 0
    return Elimination(n, a, b, K, chart.dim - len(subst),
                       {chart.names[v]: 0 for v in subst}, pivots)


def paving_poincare(n, a, b):
    """Sum of q^(2 dim) over the cells of the interval paving."""
    if not 1 <= a <= b <= n - 1:
        raise ChartError(f"need 1 <= a <= b <= n-1, got a={a} b={b} n={n}")
    extra = list(range(b + 1, n))
    out = []
    for mask in range(1 << len(extra)):
        K = set(range(a, b + 1)) | {extra[i] for i in range(len(extra)) if mask >> i & 1}
        dim = interval_elimination(n, a, b, K).dim
        out = qadd(out, qshift([1], 2 * dim))
    return out


def expected_paving(n, b):
    """(1+q^2)^(n-1-b) as a coefficient list."""
    return qdouble(qpow([1, 1], n - 1 - b))


# the non-irreducible example in Pet_4

def _split_monomial_factor(p):
    content = p.monomial_content()
    if not any(content):
        return None, p
    return Poly.monomial(content), p.exact_divide(Poly.monomial(content))


def irreducible_by_degree(p):
    """Sufficient test: p has degree 1 in some variable whose coefficient is a
    nonzero constant, so p = c*v + B admits no nontrivial factorization."""
    for v in p.variables():
        if p.degree_in(v) != 1:
            continue
        coeff = {e: c for e, c in p.terms.items() if e[v] == 1}
        if len(coeff) == 1 and sum(next(iter(coeff))) == 1:
            return True
    return False


def _flag_deviation(mat, perm):
    """Distance of the flag of `mat` from the permutation flag, in graph coordinates.

    For each j the first j columns are rewritten as a basis whose rows
    perm(1..j) form the identity; the largest remaining entry measures how far
    V_j is from span(e_perm(1..j)).  None when V_j is not a graph there.
    """
    n = len(mat)
    worst = Fraction(0)
    for j in range(1, n + 1):
        rows = [perm[k] - 1 for k in range(j)]
        cols = [[mat[r][c] for c in range(j)] for r in range(n)]
        square = [cols[r] for r in rows]
        try:
            inv = linalg.inverse(square)
        except ValueError:
            return None
        basis = linalg.matmul(cols, inv)
        for r in range(n):
            if r not in rows:
                worst = max(worst, max(abs(x) for x in basis[r]))
    return worst


@dataclass
class NonIrreducibleReport:
    strata: list
    big_cell_equation: str
    factors: list
    components: list
    intersection: dict
    limits: list
    top_degree_count: int
    seed: int = SEED
    note: str = ("limits are checked at sampled growing parameters with exact "
                 "arithmetic; the q^1 Betti number is not computed")

    def to_json(self):
        return asdict(self)


def analyze_example_nonirreducible(params=(10**2, 10**4, 10**6)):
    """Component analysis of the stratum for J={1,3} in Pet_4."""
    n, J = 4, {1, 3}
    strata = []
    small = build_cell_chart(n, {1, 3}, letters="x")
    small_eqs = minor_equations(small, J)
    # both minors are linear up to sign: x_1 and -x_2 once x_1 = 0
    forced = {}
    for order, eq in small_eqs.equations.items():
        eq = eq.subs(forced)
        var = eq.variables()
        if len(var) != 1 or eq.degree() != 1:
            raise AssertionError(f"unexpected equation {eq.render(list(small.names))}")
        forced[var[0]] = 0
    strata.append({"K": [1, 3], "dim": small.dim - len(forced),
                   "equations": small_eqs.render(small.names)})

    big = build_cell_chart(n, {1, 2, 3}, letters="y")
    big_eqs = minor_equations(big, J)
    y1, y2, y3 = (Poly.var(3, i) for i in range(3))
    first = big_eqs.equations[1]
    if first != y1:
        raise AssertionError("order-1 minor should be y_1")
    cubic = big_eqs.equations[3].subs({0: 0})
    mono, rest = _split_monomial_factor(cubic)
    factors = [mono, rest]
    if not irreducible_by_degree(rest):
        raise AssertionError("cofactor failed the degree-bound irreducibility test")
    names = list(big.names)
    strata.append({"K": [1, 2, 3], "dim": 1,
                   "equations": big_eqs.render(big.names)})

    # Z_1: y_3 = 0, free y_2; Z_2: y_2 = y_3^2/2, free y_3
    def z1(s):
        return (0, Fraction(s), 0)

    def z2(s):
        s = Fraction(s)
        return (0, s * s / 2, s)

    for name, param in (("Z1", z1), ("Z2", z2)):
        for s in (1, 3, -2):
            if big_eqs.equations[3].evaluate(param(s)) != 0:
                raise AssertionError(f"{name} point does not satisfy the minors")

    # Z_1 meets Z_2 where y_3 = 0 and 2*y_2 - y_3^2 = 0
    on_z1 = rest.subs({2: 0})
    if on_z1.variables() != [1] or on_z1.degree() != 1:
        raise AssertionError("intersection is not a single point")
    inter_point = (0, 0, 0)
    origin = permutation_matrix(n, {1, 2, 3})
    intersection = {
        "point": {names[1]: 0, names[2]: 0},
        "is_w_123": big.evaluate(inter_point) == origin,
        "w": one_line(longest_parabolic({1, 2, 3}, type_a_data(n))),
    }

    perm13 = [int(c) for c in one_line(longest_parabolic({1, 3}, type_a_data(n)))]
    limits = []
    for name, param in (("Z1", z1), ("Z2", z2)):
        devs = [_flag_deviation(big.evaluate(param(s)), perm13) for s in params]
        stable = all(d is not None for d in devs) and all(
            devs[k + 1] < devs[k] for k in range(len(devs) - 1))
        limits.append({
            "component": name,
            "parameters": list(params),
            "deviations": [str(d) for d in devs],
            "limit": "w_{1,3}" if stable and devs[-1] < Fraction(1, 1000) else None,
        })
    comps = [
        {"name": "Z1", "equation": factors[0].render(names), "parameter": names[1],
         "substitution": {names[0]: "0", names[2]: "0"}},
        {"name": "Z2", "equation": factors[1].render(names), "parameter": names[2],
         "substitution": {names[0]: "0", names[1]: f"{names[2]}^2/2"}},
    ]
    # the big cell is open and dense, so its components are the top-dimensional ones
    top = len(comps) if strata[0]["dim"] < strata[1]["dim"] else len(comps) + 1
    return NonIrreducibleReport(
        strata=strata,
        big_cell_equation=cubic.render(names),
        factors=[f.render(names) for f in factors],
        components=comps,
        intersection=intersection,
        limits=limits,
        top_degree_count=top,
    )


def chart_report(chart, J=()):
    eqs = minor_equations(chart, J) if J else None
    return {
        "n": chart.n,
        "K": sorted(chart.K),
        "dim": chart.dim,
        "coordinates": list(chart.names),
        "equations": eqs.render(chart.names) if eqs else {},
    }

