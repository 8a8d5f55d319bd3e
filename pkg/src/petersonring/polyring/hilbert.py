"""Hilbert series of graded quotients via leading-term staircases.

Series are kept as ``numerator / (1 - q)**m`` with an integer numerator in the
internal grading (every variable has weight 1).  Reporting in cohomological
grading doubles all exponents.
"""

from dataclasses import dataclass
from math import comb
from petersonring.polyring.groebner import DEFAULT_SPAIR_BUDGET, Ideal, buchberger


# integer polynomials in q as coefficient lists (index = exponent)

def qtrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def qadd(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return qtrim(out)


def qneg(a):
    return [-x for x in a]


def qmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return qtrim(out)


def qpow(a, k):
    out = [1]
    for _ in range(k):
        out = qmul(out, a)
    return out


def qshift(a, k):
    return [0] * k + list(a) if a else []


def qdivmod_one_minus_q(a):
    """Divide by (1 - q); returns (quotient, remainder)."""
    # a(q) = (1 - q) b(q) + r; b_k = sum_{i<=k} a_i
    if not a:
        return [], 0
    b = []
    acc = 0
    for x in a[:-1]:
        acc += x
        b.append(acc)
    return qtrim(b), acc + a[-1]


def qdouble(a):
    """Substitute q -> q^2."""
    out = [0] * (2 * len(a) - 1) if a else []
    for i, x in enumerate(a):
        out[2 * i] = x
    return out


def render_q(a, var="q"):
    if not a:
        return "0"
    parts = []
    for k, c in enumerate(a):
        if not c:
            continue
        mono = "1" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        body = mono if mag == 1 and k else (str(mag) if k == 0 else f"{mag}*{mono}")
        parts.append(("-" if c < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, body in parts[1:]:
        text += f" {s} {body}"
    return text


@dataclass(frozen=True)
class HilbertSeries:
    numerator: tuple
    denominator_exponent: int

    def reduced(self):
        """Cancel common factors of (1 - q)."""
        num, m = list(self.numerator), self.denominator_exponent
        while m > 0:
            quot, rem = qdivmod_one_minus_q(num)
            if rem != 0:
                break
            num, m = quot, m - 1
        return HilbertSeries(tuple(num), m)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        # cross-multiply the denominators
        a = qmul(list(self.numerator), qpow([1, -1], other.denominator_exponent))
        b = qmul(list(other.numerator), qpow([1, -1], self.denominator_exponent))
        return a == b

    def __hash__(self):
        r = self.reduced()
        return hash((r.numerator, r.denominator_exponent))

    def coefficients(self, upto):
        """Expansion coefficients of q^0..q^upto (internal grading)."""
        m = self.denominator_exponent
        coeffs = []
        for d in range(upto + 1):
            total = 0
            for k, c in enumerate(self.numerator):
                if k > d or not c:
                    continue
                if m:
                    total += c * comb(d - k + m - 1, m - 1)
                elif k == d:
                    total += c
            coeffs.append(total)
        return coeffs

    def is_polynomial(self):
        return self.reduced().denominator_exponent == 0

    def cohomological(self):
        """(numerator, denominator) with q -> q^2, denominator as a coefficient list."""
        r = self.reduced()
        return qdouble(list(r.numerator)), qdouble(qpow([1, -1], r.denominator_exponent))

    def render(self):
        num, den = self.cohomological()
        if den == [1]:
            return render_q(num)
        return f"({render_q(num)})/({render_q(den)})"


def _minimalize(monos):
    monos = sorted(set(monos), key=sum)
    out = []
    for m in monos:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return out


def monomial_numerator(monos):
    """Numerator N with F(k[x]/(monos)) = N / (1-q)^nvars, by inclusion-exclusion.

    Uses N(I + (m)) = N(I) - q^deg(m) N(I : m).
    """
    monos = _minimalize(monos)
    if not monos:
        return [1]
    # product of pure variables: closed form prod (1 - q^deg) when pairwise coprime
    if all(sum(1 for a, b in zip(x, y) if a and b) == 0
           for i, x in enumerate(monos) for y in monos[i + 1:]):
        out = [1]
        for m in monos:
            out = qmul(out, qadd([1], qneg(qshift([1], sum(m)))))
        return out
    # pivot on the last generator
    *rest, last = monos
    colon = [tuple(max(a - b, 0) for a, b in zip(m, last)) for m in rest]
    return qadd(monomial_numerator(rest), qneg(qshift(monomial_numerator(colon), sum(last))))


def hilbert_series_of_monomials(monos, nvars):
    return HilbertSeries(tuple(monomial_numerator(list(monos))), nvars)


def hilbert_series_quotient(ideal, nvars=None, spair_budget=DEFAULT_SPAIR_BUDGET, basis=None):
    """Hilbert series of k[x_1..x_nvars]/ideal via the leading-term ideal."""
    nvars = ideal.nvars if nvars is None else nvars
    gb = basis if basis is not None else buchberger(ideal, spair_budget)
    leads = [g.lm() for g in gb.basis]
    if any(g.lm() == (0,) * gb.nvars for g in gb.basis):
        return HilbertSeries((), nvars)
    return hilbert_series_of_monomials(leads, nvars)


@dataclass
class RegularSequenceCertificate:
    is_regular: bool
    quotient_series: HilbertSeries
    predicted_series: HilbertSeries
    degrees: tuple


def is_regular_sequence(elements, nvars, spair_budget=DEFAULT_SPAIR_BUDGET):
    """Check F(R/(theta)) = F(R) prod(1 - q^deg theta_i) exactly.

    Returns (bool, certificate) with both sides of the identity.
    """
    for e in elements:
        if e.is_zero() or e.degree() < 1 or not e.is_homogeneous():
            raise ValueError("elements must be nonzero homogeneous of positive degree")
    quotient = hilbert_series_quotient(Ideal(list(elements), nvars), nvars, spair_budget)
    num = [1]
    for e in elements:
        num = qmul(num, qadd([1], qneg(qshift([1], e.degree()))))
    predicted = HilbertSeries(tuple(num), nvars)
    ok = quotient == predicted
    cert = RegularSequenceCertificate(ok, quotient, predicted, tuple(e.degree() for e in elements))
    return ok, cert


def is_zero_dimensional_at_origin(ideal, nvars=None, spair_budget=DEFAULT_SPAIR_BUDGET, basis=None):
    """True iff every variable has a pure power among the leading monomials."""
    nvars = ideal.nvars if nvars is None else nvars
    gb = basis if basis is not None else buchberger(ideal, spair_budget)
    leads = [g.lm() for g in gb.basis]
    for i in range(nvars):
        if not any(m[i] > 0 and sum(m) == m[i] for m in leads):
            return False
    return True


def standard_monomials(basis, degree, nvars=None):
    """Monomials of the given degree outside the leading-term ideal."""
    nvars = basis.nvars if nvars is None else nvars
    leads = [g.lm() for g in basis.basis]
    out = []
    for exp in _compositions(degree, nvars):
        full = exp + (0,) * (basis.nvars - nvars)
        if not any(all(a <= b for a, b in zip(lm, full)) for lm in leads):
            out.append(full)
    return out


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def staircase_count(basis, degree, nvars=None):
    """Brute-force count of standard monomials, an oracle for the series."""
    return len(standard_monomials(basis, degree, nvars))

