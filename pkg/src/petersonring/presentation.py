"""Ordinary and equivariant presentation ideals for pairs J <= I of simple roots.

The ring R = Q[a_1..a_n] uses simple roots as variables; R[t] appends t as
the last variable.  A fundamental weight is never a variable: it is expanded
as the linear form sum_j d_ij a_j.
"""

from dataclasses import asdict, dataclass, field
from itertools import combinations

from petersonring.polyring import (
    DEFAULT_SPAIR_BUDGET, Ideal, Poly, buchberger, hilbert_series_quotient,
    is_regular_sequence, ring_names)
from petersonring.polyring.hilbert import HilbertSeries, qpow


@dataclass(frozen=True)
class PresentationSpec:
    data: object
    I: frozenset
    J: frozenset

    def __post_init__(self):
        object.__setattr__(self, "I", frozenset(self.I))
        object.__setattr__(self, "J", frozenset(self.J))
        n = self.data.rank
        if not self.I <= set(range(1, n + 1)):
            raise ValueError(f"I={sorted(self.I)} is not a subset of 1..{n}")
        if not self.J <= self.I:
            raise ValueError(f"J={sorted(self.J)} is not a subset of I={sorted(self.I)}")

    @property
    def rank(self):
        return self.data.rank

    @property
    def codim(self):
        return len(self.I) - len(self.J)

    def label(self):
        return f"{self.data.name} I={fmt_subset(self.I)} J={fmt_subset(self.J)}"


def fmt_subset(s):
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


def all_specs(data):
    """Every pair J <= I <= Delta."""
    idx = list(data.indices)
    for r in range(len(idx) + 1):
        for I in combinations(idx, r):
            for s in range(len(I) + 1):
                for J in combinations(I, s):
                    yield PresentationSpec(data, frozenset(I), frozenset(J))


def alpha(data, i, nvars):
    return Poly.var(nvars, i - 1)


def varpi(data, i, nvars):
    return Poly.linear(list(data.fundamental_weight(i)), nvars)


def t_var(data):
    return Poly.var(data.rank + 1, data.rank)


def labeled_ordinary(spec):
    data, n = spec.data, spec.rank
    out = []
    for k in sorted(spec.I - spec.J):
        out.append((f"a{k}*w{k}", alpha(data, k, n) * varpi(data, k, n)))
    for j in sorted(spec.J):
        out.append((f"a{j}", alpha(data, j, n)))
    for i in sorted(set(data.indices) - spec.I):
        out.append((f"w{i}", varpi(data, i, n)))
    return out


def theta(data, k):
    m = data.rank + 1
    t = t_var(data)
    return (alpha(data, k, m) - t) * (varpi(data, k, m) + t.scale(data.inverse_row_sum(k)))


def xi(data, j):
    return alpha(data, j, data.rank + 1) - t_var(data)


def nu(data, i):
    return varpi(data, i, data.rank + 1) + t_var(data).scale(data.inverse_row_sum(i))


def labeled_equivariant(spec):
    """(label, generator) pairs ordered theta's, xi's, nu's, each ascending."""
    data = spec.data
    out = [(f"theta{k}", theta(data, k)) for k in sorted(spec.I - spec.J)]
    out += [(f"xi{j}", xi(data, j)) for j in sorted(spec.J)]
    out += [(f"nu{i}", nu(data, i)) for i in sorted(set(data.indices) - spec.I)]
    return out


def generators_ordinary(spec):
    return Ideal([g for _, g in labeled_ordinary(spec)], spec.rank)


def generators_equivariant(spec):
    return Ideal([g for _, g in labeled_equivariant(spec)], spec.rank + 1)


def binomial_series(k):
    """(1+q)^k in the internal grading."""
    return qpow([1, 1], k)


def poincare_from_interval(spec):
    """sum over J <= K <= I of q^(2(|K|-|J|)), as a coefficient list in q."""
    free = sorted(spec.I - spec.J)
    out = [0] * (2 * len(free) + 1)
    for r in range(len(free) + 1):
        for _ in combinations(free, r):
            out[2 * r] += 1
    return out


def is_proven_family(spec):
    """Pairs whose geometric meaning is established: J empty, or type A intervals."""
    if not spec.J:
        return True
    if spec.data.family != "A":
        return False
    n = spec.rank
    a = min(spec.J)
    b = max(spec.J)
    return spec.I == frozenset(range(a, n + 1)) and spec.J == frozenset(range(a, b + 1))


@dataclass
class PresentationReport:
    type: str
    rank: int
    I: list
    J: list
    ordinary_generators: list
    equivariant_generators: list
    ordinary_series: list
    equivariant_series_numerator: list
    equivariant_series_denominator: list
    regular_sequence: bool
    betti: list
    status: str
    passed: bool
    failures: list = field(default_factory=list)

    def to_json(self):
        return asdict(self)


def verify_presentation(spec, spair_budget=DEFAULT_SPAIR_BUDGET):
    """Check the three closed forms for the pair (I, J) exactly.

    (a) F(R/L) = (1+q^2)^k, (b) F(R[t]/L~) = (1+q^2)^k/(1-q^2) and
    (c) the equivariant generators followed by t form a regular sequence,
    where k = |I| - |J|.
    """
    n, k = spec.rank, spec.codim
    names = ring_names(n)
    ordinary = generators_ordinary(spec)
    equivariant = generators_equivariant(spec)
    ord_series = hilbert_series_quotient(ordinary, n, spair_budget)
    eq_series = hilbert_series_quotient(equivariant, n + 1, spair_budget)
    with_t = equivariant.generators + [t_var(spec.data)]
    regular, cert = is_regular_sequence(with_t, n + 1, spair_budget)

    failures = []
    expected_ord = HilbertSeries(tuple(binomial_series(k)), 0)
    expected_eq = HilbertSeries(tuple(binomial_series(k)), 1)
    if ord_series != expected_ord:
        failures.append({"check": "ordinary_series", "got": ord_series.render(),
                         "expected": expected_ord.render()})
    if eq_series != expected_eq:
        failures.append({"check": "equivariant_series", "got": eq_series.render(),
                         "expected": expected_eq.render()})
    if not regular:
        failures.append({"check": "regular_sequence",
                         "quotient": cert.quotient_series.render(),
                         "predicted": cert.predicted_series.render()})
    ord_num, _ = ord_series.cohomological()
    eq_num, eq_den = eq_series.cohomological()
    return PresentationReport(
        type=spec.data.family,
        rank=n,
        I=sorted(spec.I),
        J=sorted(spec.J),
        ordinary_generators=[g.render(names[:n]) for _, g in labeled_ordinary(spec)],
        equivariant_generators=[g.render(names) for _, g in labeled_equivariant(spec)],
        ordinary_series=ord_num,
        equivariant_series_numerator=eq_num,
        equivariant_series_denominator=eq_den,
        regular_sequence=regular,
        betti=ord_num[0::2] if ord_series.is_polynomial() else [],
        status="proven" if is_proven_family(spec) else "formal",
        passed=not failures,
        failures=failures,
    )


def groebner_ordinary(spec, spair_budget=DEFAULT_SPAIR_BUDGET):
    return buchberger(generators_ordinary(spec), spair_budget)


def groebner_equivariant(spec, spair_budget=DEFAULT_SPAIR_BUDGET):
    return buchberger(generators_equivariant(spec), spair_budget)

