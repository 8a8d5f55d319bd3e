"""Buchberger's algorithm for homogeneous ideals over Q (grevlex)."""

from dataclasses import dataclass, field

from petersonring.polyring.poly import Poly

DEFAULT_SPAIR_BUDGET = 10**6


class GuardError(RuntimeError):
    """A resource guard refused to continue a computation."""


@dataclass
class Ideal:
    generators: list
    nvars: int

    def __post_init__(self):
        self.generators = [g for g in self.generators]
        for g in self.generators:
            if g.nvars != self.nvars:
                raise ValueError("generator lives in a different ring")
            if not g.is_homogeneous():
                raise ValueError(f"generator {g.render()} is not homogeneous")

    def nonzero(self):
        return [g for g in self.generators if g]


@dataclass
class GroebnerBasis:
    basis: list
    nvars: int
    spairs: int = 0
    leading: list = field(init=False)

    def __post_init__(self):
        self.leading = [g.lm() for g in self.basis]

    def normal_form(self, f):
        return normal_form(f, self.basis)

    def contains(self, f):
        return normal_form(f, self.basis).is_zero()


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(f, basis):
    """Full reduction of f modulo basis (remainder has no reducible term)."""
    leads = [(g.lm(), g.lc(), g) for g in basis if g]
    rem = dict(f.terms)
    out = {}
    nvars = f.nvars
    while rem:
        probe = Poly._raw(nvars, rem)
        exp, c = probe.leading()
        for lm, lc, g in leads:
            if _divides(lm, exp):
                shift = tuple(a - b for a, b in zip(exp, lm))
                factor = c / lc
                for e, v in g.terms.items():
                    e2 = tuple(a + b for a, b in zip(e, shift))
                    s = rem.get(e2, 0) - factor * v
                    if s:
                        rem[e2] = s
                    else:
                        del rem[e2]
                break
        else:
            out[exp] = c
            del rem[exp]
    return Poly._raw(nvars, out)


def s_polynomial(f, g):
    lf, cf = f.leading()
    lg, cg = g.leading()
    m = _lcm(lf, lg)
    a = tuple(x - y for x, y in zip(m, lf))
    b = tuple(x - y for x, y in zip(m, lg))
    return f.mul_term(a, 1 / cf) - g.mul_term(b, 1 / cg)


def buchberger(ideal, spair_budget=DEFAULT_SPAIR_BUDGET):
    """Reduced Groebner basis of a homogeneous ideal.

    Pairs are processed in order of lcm degree.  Coprime leading monomials
    and the chain criterion prune pairs.  More than ``spair_budget`` reduced
    S-pairs raises GuardError.
    """
    basis = []
    for g in ideal.nonzero():
        r = normal_form(g, basis)
        if r:
            basis.append(r.monic())
    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}
    done = set()
    count = 0
    while pairs:
        i, j = min(pairs, key=lambda p: (sum(_lcm(basis[p[0]].lm(), basis[p[1]].lm())), p[1], p[0]))
        pairs.discard((i, j))
        done.add((i, j))
        li, lj = basis[i].lm(), basis[j].lm()
        m = _lcm(li, lj)
        if all(x == 0 or y == 0 for x, y in zip(li, lj)):
            continue
        if _chain_skip(i, j, m, basis, pairs):
            continue
        count += 1
        if count > spair_budget:
            raise GuardError(f"S-pair budget {spair_budget} exhausted")
        r = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if r:
            basis.append(r.monic())
            k = len(basis) - 1
            pairs |= {(a, k) for a in range(k)}
    return GroebnerBasis(_reduce(basis), ideal.nvars, count)


def _chain_skip(i, j, m, basis, pending):
    for k, g in enumerate(basis):
        if k in (i, j):
            continue
        if not _divides(g.lm(), m):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def _reduce(basis):
    # drop elements whose leading monomial is divisible by another's
    keep = []
    for idx, g in enumerate(basis):
        lm = g.lm()
        redundant = any(
            _divides(h.lm(), lm) and (h.lm() != lm or jdx < idx)
            for jdx, h in enumerate(basis) if jdx != idx)
        if not redundant:
            keep.append(g)
    out = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        out.append(normal_form(g, others).monic())
    out.sort(key=lambda p: _sort_key(p.lm()))
    return out


def _sort_key(exp):
    return (sum(exp), tuple(-e for e in exp))
