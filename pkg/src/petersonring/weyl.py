"""Weyl group elements acting on simple-root coordinates."""

from fractions import Fraction

from petersonring.rootsystem import connected_components

BRUHAT_MAX_LENGTH = 24


class BruhatGuardError(RuntimeError):
    """Subword enumeration refused: the element is longer than the guard."""


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _reflection_matrix(i, data):
    n = data.rank
    rows = [[int(r == c) for c in range(n)] for r in range(n)]
    # column j is s_i(alpha_j) = alpha_j - c_ji alpha_i
    for j in range(n):
        rows[i - 1][j] -= data.cartan[j][i - 1]
    return tuple(tuple(r) for r in rows)


class WeylElement:
    """A group element; equality and hashing use the action matrix only."""

    __slots__ = ("word", "action", "data")

    def __init__(self, word, action, data):
        self.word = tuple(word)
        self.action = action
        self.data = data

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.action == other.action

    def __hash__(self):
        return hash(self.action)

    def __mul__(self, other):
        return WeylElement(self.word + other.word, _matmul(self.action, other.action), self.data)

    def __repr__(self):
        return f"WeylElement(word={self.word})"

    def __call__(self, vec):
        return act(self, vec)

    @property
    def length(self):
        return length(self)

    def is_identity(self):
        return all(self.action[i][j] == (i == j) for i in range(len(self.action))
                   for j in range(len(self.action)))

    def has_right_descent(self, i):
        """True iff w(alpha_i) is a negative root, i.e. l(w s_i) < l(w)."""
        return any(row[i - 1] < 0 for row in self.action)


def identity(data):
    n = data.rank
    return WeylElement((), tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), data)


def simple_reflection(i, data):
    return WeylElement((i,), _reflection_matrix(i, data), data)


def from_word(word, data):
    w = identity(data)
    for i in word:
        w = w * simple_reflection(i, data)
    return w


def act(w, vec):
    """Exact matrix-vector product w(vec)."""
    return tuple(sum((Fraction(row[k]) * vec[k] for k in range(len(vec))), Fraction(0))
                 for row in w.action)


def length(w):
    """Number of positive roots sent to negative roots."""
    count = 0
    for beta in w.data.positive_roots:
        image = act(w, beta)
        if any(x < 0 for x in image):
            count += 1
    return count


def reduced(w):
    """Same element with a reduced word, found by peeling right descents."""
    data = w.data
    cur = w
    word = []
    while not cur.is_identity():
        i = next(i for i in data.indices if cur.has_right_descent(i))
        word.append(i)
        cur = WeylElement((), _matmul(cur.action, _reflection_matrix(i, data)), data)
    return WeylElement(tuple(reversed(word)), w.action, data)


def _greedy_longest(K, data):
    w = identity(data)
    order = sorted(K)
    while True:
        step = next((i for i in order if not w.has_right_descent(i)), None)
        if step is None:
            return w
        w = w * simple_reflection(step, data)


def longest_parabolic(K, data):
    """w_K, the longest element of the parabolic subgroup generated by K.

    Computed both by greedy ascent on K and as the product of the greedy
    results over the Dynkin components of K; the two must coincide.
    """
    K = frozenset(K)
    direct = _greedy_longest(K, data)
    product = identity(data)
    for comp in connected_components(K, data):
        product = product * _greedy_longest(comp, data)
    if direct != product:
        raise AssertionError(f"w_K constructions disagree for K={sorted(K)}")
    return product


def bruhat_interval(w, max_length=BRUHAT_MAX_LENGTH):
    """All v <= w, as elements reachable by reduced subwords of a reduced word of w."""
    w = reduced(w)
    if len(w.word) > max_length:
        raise BruhatGuardError(
            f"length {len(w.word)} exceeds the Bruhat guard {max_length}")
    data = w.data
    reach = {identity(data)}
    for i in w.word:
        s = simple_reflection(i, data)
        # extend only by ascents so every stored subword stays reduced
        reach |= {u * s for u in reach if not u.has_right_descent(i)}
    return reach


def bruhat_leq(v, w, max_length=BRUHAT_MAX_LENGTH):
    """Subword property: v <= w iff a reduced word of v is a subword of one of w."""
    return v in bruhat_interval(w, max_length)


def one_line(w):
    """One-line notation of a type-A element, e.g. '321487659'."""
    if w.data.family != "A":
        raise ValueError("one-line notation only exists in type A")
    perm = list(range(1, w.data.rank + 2))
    # f -> f o s_i swaps positions, so read the word left to right
    for i in reduced(w).word:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return "".join(str(x) for x in perm) if len(perm) < 10 else " ".join(map(str, perm))
