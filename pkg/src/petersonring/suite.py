"""The batch verification battery run by ``petersonring suite``."""

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from petersonring import gkm, typea
from petersonring.polyring.hilbert import qdouble, qpow
from petersonring.presentation import (
    PresentationSpec, all_specs, generators_ordinary, poincare_from_interval,
    verify_presentation)
from petersonring.polyring import hilbert_series_quotient
from petersonring.rootsystem import build_root_system
from petersonring.weyl import act, bruhat_leq, longest_parabolic, one_line

# simple types covered by the batch, in order of rank
TYPES = ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: list = field(default_factory=list)

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "detail": self.detail[:20]}


def types_up_to(max_rank):
    return [t for t in TYPES if int(t[1:]) <= max_rank]


def _subsets(idx):
    return [frozenset(c) for r in range(len(idx) + 1) for c in combinations(idx, r)]


def check_peterson(max_rank, budget):
    bad, rows = [], []
    for name in types_up_to(max_rank):
        data = build_root_system(name)
        spec = PresentationSpec(data, frozenset(data.indices), frozenset())
        report = verify_presentation(spec, budget)
        expected = qdouble(qpow([1, 1], data.rank))
        rows.append({"type": name, "betti": report.betti})
        if report.ordinary_series != expected:
            bad.append({"type": name, "series": report.ordinary_series})
    return CheckResult("1 peterson presentation", not bad, len(rows), bad or rows)


def check_all_pairs(max_rank, budget):
    bad, count = [], 0
    for name in types_up_to(max_rank):
        for spec in all_specs(build_root_system(name)):
            count += 1
            report = verify_presentation(spec, budget)
            if not report.passed:
                bad.append({"spec": spec.label(), "failures": report.failures})
    return CheckResult("2 equivariant series + regular sequence", not bad, count, bad)


def check_relations(max_rank, budget):
    bad, count = [], 0
    for name in types_up_to(max_rank):
        for spec in all_specs(build_root_system(name)):
            count += 1
            report = gkm.check_relations(spec)
            if not report.passed:
                bad.append(report.to_json())
    return CheckResult("3 GKM relations", not bad, count, bad)


def check_iso(max_rank, budget):
    bad, count = [], 0
    for name in types_up_to(min(max_rank, 3)):
        for spec in all_specs(build_root_system(name)):
            count += 1
            report = gkm.check_iso_degreewise(spec, 2 * spec.codim + 4, budget)
            if not report.passed:
                bad.append(report.to_json())
    return CheckResult("4 degreewise isomorphism", not bad, count, bad)


def check_billey(max_rank, budget):
    bad, count = [], 0
    for name in types_up_to(max_rank):
        data = build_root_system(name)
        for K in _subsets(list(data.indices)):
            w = longest_parabolic(K, data)
            for i in data.indices:
                count += 1
                a = gkm.restrict_schubert_simple(i, w)
                b = gkm.billey_simple(i, w)
                if a != b or a.is_zero() == (i in K):
                    bad.append({"type": name, "K": sorted(K), "i": i})
    return CheckResult("5 Billey cross-check", not bad, count, bad)


def check_bruhat(max_rank, budget, samples=200, seed=typea.SEED):
    bad, count = [], 0
    rng = random.Random(seed)
    for name in types_up_to(max_rank):
        data = build_root_system(name)
        subsets = _subsets(list(data.indices))
        pairs = [(K, I) for K in subsets for I in subsets]
        if data.rank >= 4 and len(pairs) > samples:
            pairs = rng.sample(pairs, samples)
        elems = {K: longest_parabolic(K, data) for K in subsets}
        for K, I in pairs:
            count += 1
            if bruhat_leq(elems[K], elems[I]) != (K <= I):
                bad.append({"type": name, "K": sorted(K), "I": sorted(I)})
    return CheckResult("6 Bruhat order on w_K", not bad, count, bad)


def check_pavings(max_n, budget):
    bad, count = [], 0
    for n in range(2, max_n + 1):
        data = typea.type_a_data(n)
        for a in range(1, n):
            for b in range(a, n):
                count += 1
                geo = typea.paving_poincare(n, a, b)
                spec = PresentationSpec(data, frozenset(range(a, n)), frozenset(range(a, b + 1)))
                alg, _ = hilbert_series_quotient(
                    generators_ordinary(spec), n - 1, budget).cohomological()
                expected = typea.expected_paving(n, b)
                if not geo == alg == expected == poincare_from_interval(spec):
                    bad.append({"n": n, "a": a, "b": b, "paving": geo, "algebra": alg})
    return CheckResult("7 type-A pavings", not bad, count, bad)


def check_examples(max_rank, budget):
    bad = []
    data = build_root_system("A8")
    w = longest_parabolic({1, 2, 5, 6, 7}, data)
    if one_line(w) != "321487659":
        bad.append({"w_K": one_line(w)})
    if typea.build_cell_chart(9, {1, 2, 5, 6, 7}).dim != 5:
        bad.append({"cell_dim": "not 5"})
    rep = typea.analyze_example_nonirreducible()
    if rep.big_cell_equation != "-y_3^3 + 2*y_2*y_3":
        bad.append({"equation": rep.big_cell_equation})
    if len(rep.components) != 2 or rep.top_degree_count != 2:
        bad.append({"components": len(rep.components), "q2": rep.top_degree_count})
    if not rep.intersection["is_w_123"]:
        bad.append({"intersection": rep.intersection})
    if any(lim["limit"] != "w_{1,3}" for lim in rep.limits):
        bad.append({"limits": rep.limits})
    return CheckResult("8 named examples", not bad, 6, bad)


def check_properties(max_rank, budget, max_n=7, samples=100):
    bad, count = [], 0
    for name in TYPES + ["D5", "E6", "E7", "E8"]:
        data = build_root_system(name)
        count += 1
        c = [[Fraction(x) for x in row] for row in data.cartan]
        prod = [[sum(c[i][k] * data.inverse_cartan[k][j] for k in range(data.rank))
                 for j in range(data.rank)] for i in range(data.rank)]
        if any(prod[i][j] != (i == j) for i in range(data.rank) for j in range(data.rank)):
            bad.append({"type": name, "check": "C*D"})
    for name in types_up_to(min(max_rank, 4)):
        data = build_root_system(name)
        for K in _subsets(list(data.indices)):
            count += 1
            w = longest_parabolic(K, data)
            if not (w * w).is_identity():
                bad.append({"type": name, "K": sorted(K), "check": "involution"})
            images = {act(w, data.simple_root(k)) for k in K}
            negs = {tuple(-x for x in data.simple_root(k)) for k in K}
            if images != negs:
                bad.append({"type": name, "K": sorted(K), "check": "w_K(K)=-K"})
    for n in range(2, max_n + 1):
        for K in _subsets(list(range(1, n))):
            count += 1
            chart = typea.build_cell_chart(n, K)
            if not typea.verify_peterson_membership(chart, samples):
                bad.append({"n": n, "K": sorted(K), "check": "membership"})
    return CheckResult("9 property suite", not bad, count, bad)


CHECKS = {
    "peterson": check_peterson,
    "pairs": check_all_pairs,
    "relations": check_relations,
    "iso": check_iso,
    "billey": check_billey,
    "bruhat": check_bruhat,
    "pavings": lambda max_rank, budget: check_pavings(7, budget),
    "examples": check_examples,
    "properties": check_properties,
}


def _run(item):
    key, max_rank, budget = item
    return CHECKS[key](max_rank, budget)


def run_suite(max_rank=4, jobs=1, budget=10**6):
    items = [(k, max_rank, budget) for k in CHECKS]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, items))
    else:
        results = [_run(it) for it in items]
    return sorted(results, key=lambda r: r.name)
