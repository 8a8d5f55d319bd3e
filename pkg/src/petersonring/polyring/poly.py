"""Sparse multivariate polynomials over Q.

A polynomial is a dict from exponent tuples to nonzero Fractions.  Terms are
ordered by graded reverse lexicographic order with variable 0 largest.
"""

from fractions import Fraction


def grevlex_key(exp):
    """Sort key: larger key means larger monomial in grevlex."""
    return (sum(exp), tuple(-e for e in reversed(exp)))


def _frac(c):
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly:
    __slots__ = ("nvars", "terms", "_lead")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        self._lead = None
        if terms:
            for exp, c in terms.items():
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} does not match {nvars} variables")
                c = _frac(c)
                if c:
                    self.terms[tuple(exp)] = c

    # constructors

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i, coeff=1):
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): coeff})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def linear(cls, coeffs, nvars=None):
        """sum_i coeffs[i] * x_i."""
        nvars = len(coeffs) if nvars is None else nvars
        out = {}
        for i, c in enumerate(coeffs):
            if c:
                exp = [0] * nvars
                exp[i] = 1
                out[tuple(exp)] = c
        return cls(nvars, out)

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._lead = None
        return p

    # basic queries

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.nvars, other)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def leading(self):
        """(exponent, coefficient) of the grevlex-largest term."""
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            exp = max(self.terms, key=grevlex_key)
            self._lead = (exp, self.terms[exp])
        return self._lead

    def lm(self):
        return self.leading()[0]

    def lc(self):
        return self.leading()[1]

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def degree_in(self, i):
        return max((e[i] for e in self.terms), default=-1)

    def variables(self):
        return sorted({i for e in self.terms for i, k in enumerate(e) if k})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.nvars, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _frac(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars, {e: c * v for e, v in self.terms.items()})

    def mul_term(self, exp, c):
        c = _frac(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars, {tuple(a + b for a, b in zip(e, exp)): c * v
                                      for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = Poly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self):
        return self.scale(1 / self.lc())

    # substitution

    def subs(self, values):
        """Substitute {var index: Poly or number}; other variables are kept."""
        out = Poly.zero(self.nvars)
        for exp, c in self.terms.items():
            term = Poly.monomial(tuple(0 if i in values else k for i, k in enumerate(exp)), c)
            for i, v in values.items():
                if exp[i]:
                    v = v if isinstance(v, Poly) else Poly.constant(self.nvars, v)
                    term = term * v ** exp[i]
            out = out + term
        return out

    def compose(self, images):
        """Ring map sending x_i to images[i]; all images share one ring."""
        target = images[0].nvars
        out = Poly.zero(target)
        cache = {}
        for exp, c in self.terms.items():
            term = Poly.constant(target, c)
            for i, k in enumerate(exp):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = images[i] ** k
                    term = term * cache[key]
            out = out + term
        return out

    def evaluate(self, point):
        """Value at a point given as a sequence of numbers."""
        total = Fraction(0)
        for exp, c in self.terms.items():
            v = c
            for x, k in zip(point, exp):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    def drop_last(self):
        """Set the last variable to 0 and remove its slot."""
        return Poly._raw(self.nvars - 1, {e[:-1]: c for e, c in self.terms.items() if e[-1] == 0})

    def exact_divide(self, other):
        """self / other when the division is exact; raises ArithmeticError otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm_d, lc_d = other.leading()
        rem = self
        quot = {}
        while rem:
            lm_r, lc_r = rem.leading()
            shift = tuple(a - b for a, b in zip(lm_r, lm_d))
            if any(s < 0 for s in shift):
                raise ArithmeticError("division is not exact")
            c = lc_r / lc_d
            quot[shift] = quot.get(shift, 0) + c
            rem = rem - other.mul_term(shift, c)
        return Poly(self.nvars, quot)

    def monomial_content(self):
        """Exponent of the largest monomial dividing every term."""
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    # rendering

    def render(self, names=None):
        """Canonical text: grevlex-descending terms with exact fractions."""
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        pieces = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}"
                for i, k in enumerate(exp) if k)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Poly({self.render()})"


def ring_names(rank, with_t=True):
    names = [f"a{i}" for i in range(1, rank + 1)]
    return names + ["t"] if with_t else names
