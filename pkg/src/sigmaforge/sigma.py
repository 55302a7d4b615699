"""Elementary polynomials in noncommuting variables.

The degree-k elementary polynomial on an ordered list of generators is
the sum of all strictly position-increasing k-letter words.  Both
one-sided recursions (peeling the first or the last generator) are
implemented over arbitrary ordered index lists, which is what makes the
shifted instances of the recursion available to other modules.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .ring import Monomial, Polynomial


def _as_word(indices, n: int) -> Polynomial:
    return Polynomial.word(indices, n)


def sigma_on(letters, k: int, n: int) -> Polynomial:
    """Sum of increasing-position k-subword products of ``letters``."""
    letters = tuple(letters)
    if k < 0 or k > len(letters):
        return Polynomial.zero(n)
    if k == 0:
        return Polynomial.one(n)
    terms = {}
    for combo in itertools.combinations(letters, k):
        m = Monomial.from_letters(combo)
        terms[m] = terms.get(m, Fraction(0)) + 1
    return Polynomial(terms, n)


@lru_cache(maxsize=None)
def build_sigma(n: int, k: int) -> Polynomial:
    """The k-th elementary polynomial on x1..xn; 1 for k=0, 0 outside 0..n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sigma_on(range(1, n + 1), k, n)


def sigma_via_recursion_first(letters, k: int, n: int) -> Polynomial:
    """Peel the first generator: s_k(L) = L0 * s_{k-1}(L') + s_k(L')."""
    letters = tuple(letters)
    if k < 0 or k > len(letters):
        return Polynomial.zero(n)
    if k == 0:
        return Polynomial.one(n)
    head, rest = letters[0], letters[1:]
    return (_as_word([head], n) * sigma_via_recursion_first(rest, k - 1, n)
            + sigma_via_recursion_first(rest, k, n))


def sigma_via_recursion_last(letters, k: int, n: int) -> Polynomial:
    """Peel the last generator: s_k(L) = s_{k-1}(L') * Llast + s_k(L')."""
    letters = tuple(letters)
    if k < 0 or k > len(letters):
        return Polynomial.zero(n)
    if k == 0:
        return Polynomial.one(n)
    rest, tail = letters[:-1], letters[-1]
    return (sigma_via_recursion_last(rest, k - 1, n) * _as_word([tail], n)
            + sigma_via_recursion_last(rest, k, n))


def cyclic_letters(n: int, start: int) -> tuple:
    """n-1 indices start, start+1, ..., wrapping mod n (one index left out)."""
    return tuple((start - 1 + t) % n + 1 for t in range(n - 1))


# -- commutative image ----------------------------------------------


class CommPoly:
    """Commutative polynomial: exponent-vector keys, rational coefficients."""

    __slots__ = ("terms", "arity")

    def __init__(self, terms, arity: int):
        clean = {}
        for ev, c in terms.items():
            ev = tuple(ev)
            if len(ev) != arity or any(e < 0 for e in ev):
                raise ValueError(f"bad exponent vector {ev!r}")
            c = Fraction(c)
            if c:
                clean[ev] = clean.get(ev, Fraction(0)) + c
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})
        object.__setattr__(self, "arity", arity)

    def __setattr__(self, name, value):
        raise AttributeError("CommPoly is immutable")

    @classmethod
    def zero(cls, arity: int) -> "CommPoly":
        return cls({}, arity)

    @classmethod
    def one(cls, arity: int) -> "CommPoly":
        return cls({(0,) * arity: 1}, arity)

    @classmethod
    def variable(cls, i: int, arity: int) -> "CommPoly":
        ev = [0] * arity
        ev[i - 1] = 1
        return cls({tuple(ev): 1}, arity)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if self.arity != other.arity:
            raise ValueError("arity mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CommPoly({(0,) * self.arity: other}, self.arity)
        if not isinstance(other, CommPoly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for ev, c in other.terms.items():
            terms[ev] = terms.get(ev, Fraction(0)) + c
        return CommPoly(terms, self.arity)

    __radd__ = __add__

    def __neg__(self):
        return CommPoly({ev: -c for ev, c in self.terms.items()}, self.arity)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CommPoly({(0,) * self.arity: other}, self.arity)
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return CommPoly({ev: v * c for ev, v in self.terms.items()},
                            self.arity)
        if not isinstance(other, CommPoly):
            return NotImplemented
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                ev = tuple(a + b for a, b in zip(e1, e2))
                terms[ev] = terms.get(ev, Fraction(0)) + c1 * c2
        return CommPoly(terms, self.arity)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        out = CommPoly.one(self.arity)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (isinstance(other, CommPoly) and self.arity == other.arity
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def render(self, names=None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"y{i}" for i in range(1, self.arity + 1)]

        def key(ev):
            return (sum(ev), ev)

        pieces = []
        for ev in sorted(self.terms, key=key, reverse=True):
            c = self.terms[ev]
            factors = [f"{names[i]}^{e}" if e > 1 else names[i]
                       for i, e in enumerate(ev) if e]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"CommPoly({self.render()!r})"


def abelianize(p: Polynomial) -> CommPoly:
    """Send each monomial to its exponent vector (letter multiplicities)."""
    n = p.arity
    terms = {}
    for m, c in p.terms.items():
        ev = [0] * n
        for i, e in zip(m.complexion, m.exponents):
            ev[i - 1] += e
        ev = tuple(ev)
        terms[ev] = terms.get(ev, Fraction(0)) + c
    return CommPoly(terms, n)


def elementary_symmetric(n: int, k: int) -> CommPoly:
    """Commutative elementary symmetric polynomial (reference image)."""
    if k < 0 or k > n:
        return CommPoly.zero(n)
    terms = {}
    for combo in itertools.combinations(range(n), k):
        ev = [0] * n
        for i in combo:
            ev[i] = 1
        terms[tuple(ev)] = 1
    return CommPoly(terms, n)


# -- characteristic identities ---------------------------------------


def char_poly_image(n: int, i: int) -> Polynomial:
    """Substitute x_i for the root variable in the degree-n identity.

    Returns sum_{k=0..n} (-1)^k s_k * x_i^(n-k); homogeneous of degree n.
    """
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    xi = Polynomial.variable(i, n)
    total = Polynomial.zero(n)
    for k in range(n + 1):
        total = total + build_sigma(n, k) * (xi ** (n - k)) * ((-1) ** k)
    return total


def factored_char_coefficients(n: int, rotation: int = 0) -> dict:
    """Expand the ordered product of (y - x_j) over a circular ordering.

    y is an external degree marker, never a ring element: the expansion
    is kept as a map from y-degree to ring coefficient.  Returns, for
    each k in 0..n, the y^(n-k) coefficient minus (-1)^k s_k.  For the
    identity ordering every difference is exactly zero.
    """
    order = [(rotation + t) % n + 1 for t in range(n)]
    coeffs = {0: Polynomial.one(n)}  # y-degree -> coefficient so far
    for j in order:
        xj = Polynomial.variable(j, n)
        new = {}
        for d, p in coeffs.items():
            new[d + 1] = new.get(d + 1, Polynomial.zero(n)) + p
            new[d] = new.get(d, Polynomial.zero(n)) - p * xj
        coeffs = new
    out = {}
    for k in range(n + 1):
        got = coeffs.get(n - k, Polynomial.zero(n))
        out[k] = got - build_sigma(n, k) * ((-1) ** k)
    return out


def inverse_identity_image(n: int, i: int) -> Polynomial:
    """x_i * (sum_{k=0..n-1} (-1)^k s_k x_i^(n-1-k)) - (-1)^(n+1) s_n."""
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    xi = Polynomial.variable(i, n)
    inner = Polynomial.zero(n)
    for k in range(n):
        inner = inner + build_sigma(n, k) * (xi ** (n - 1 - k)) * ((-1) ** k)
    return xi * inner - build_sigma(n, n) * ((-1) ** (n + 1))


def sigma_power_products(n: int, degree_bound: int):
    """All products s_1^a1 * ... * s_n^an of weighted degree <= bound.

    Weighted degree is sum k*ak.  Yields (exponent tuple, CommPoly image).
    """
    images = [elementary_symmetric(n, k) for k in range(n + 1)]

    def rec(k, remaining, expo):
        if k > n:
            yield tuple(expo), None
            return
        max_a = remaining // k
        for a in range(max_a + 1):
            expo.append(a)
            yield from rec(k + 1, remaining - k * a, expo)
            expo.pop()

    for expo, _ in rec(1, degree_bound, []):
        prod = CommPoly.one(n)
        for k, a in enumerate(expo, start=1):
            for _ in range(a):
                prod = prod * images[k]
        yield expo, prod


def verify_sigma_independence(n: int, degree_bound: int) -> dict:
    """Exact-rank test: the abelianized power products are independent."""
    from . import linalg

    vectors = []
    expos = []
    basis = {}
    for expo, poly in sigma_power_products(n, degree_bound):
        expos.append(expo)
        vec = {}
        for ev, c in poly.terms.items():
            col = basis.setdefault(ev, len(basis))
            assert c.denominator == 1
            vec[col] = c.numerator
        vectors.append(vec)
    space = linalg.RowSpace(vectors, len(basis))
    return {
        "count": len(vectors),
        "rank": space.rank,
        "independent": space.rank == len(vectors),
        "degree_bound": degree_bound,
    }
