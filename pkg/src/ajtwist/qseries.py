"""Balanced brackets, q-Pochhammer products and a factored value type.

The polynomial builders return LaurentPolys.  QFactors is the workhorse
for summand evaluation at integer lattice points: it keeps a value of the
shape

    sign * q^e * prod (1 - q^j) / prod (1 - q^j)      (j >= 1)

as multisets of indices instead of expanding anything.  Sums of many such
values are checked against zero with an exact one-point integer
certificate (see is_zero_sum), which is how the recurrence and ratio
checks stay both exact and fast.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .laurent import LaurentPoly, RatFunc


class NegativeIndex(ValueError):
    """A Pochhammer with negative index appeared in a numerator."""


def brace(n):
    """s^n - s^(-n)."""
    return LaurentPoly.monomial(1, s=n) - LaurentPoly.monomial(1, s=-n)


def brace_factorial(n):
    """{n}! = {n}{n-1}...{1}."""
    if n < 0:
        raise ValueError("negative brace factorial")
    out = LaurentPoly.const(1)
    for i in range(1, n + 1):
        out = out * brace(i)
    return out


def qpoch(n):
    """(q)_n = (1-q)(1-q^2)...(1-q^n)."""
    if n < 0:
        raise NegativeIndex("(q)_n with n = %d" % n)
    out = LaurentPoly.const(1)
    one = LaurentPoly.const(1)
    for i in range(1, n + 1):
        out = out * (one - LaurentPoly.monomial(1, q=i))
    return out


def inv_qpoch(n):
    """(q^-1)_n = (1-q^-1)(1-q^-2)...(1-q^-n)."""
    if n < 0:
        raise NegativeIndex("(q^-1)_n with n = %d" % n)
    out = LaurentPoly.const(1)
    one = LaurentPoly.const(1)
    for i in range(1, n + 1):
        out = out * (one - LaurentPoly.monomial(1, q=-i))
    return out


def qpoch_base(a, k):
    """(a; q)_k = (1-a)(1-aq)...(1-aq^(k-1)) for a LaurentPoly a."""
    if k < 0:
        raise NegativeIndex("(a;q)_k with k = %d" % k)
    out = LaurentPoly.const(1)
    one = LaurentPoly.const(1)
    q = LaurentPoly.var("q")
    aq = a
    for _ in range(k):
        out = out * (one - aq)
        aq = aq * q
    return out


@dataclass
class QFactors:
    """sign * q^qpow * prod num / prod den with (1-q^j) factors, j >= 1."""

    zero: bool = False
    sign: int = 1
    qpow: int = 0
    num: Counter = field(default_factory=Counter)
    den: Counter = field(default_factory=Counter)

    @classmethod
    def one(cls):
        return cls()

    @classmethod
    def make_zero(cls):
        return cls(zero=True, sign=0)

    def copy(self):
        return QFactors(self.zero, self.sign, self.qpow,
                        Counter(self.num), Counter(self.den))

    def times_qpow(self, e):
        self.qpow += e
        return self

    def times_sign(self, s):
        if s == -1:
            self.sign = -self.sign
        elif s != 1:
            raise ValueError("sign must be +1 or -1")
        return self

    def times_binom(self, j):
        """Multiply by (1 - q^j).  j may be any integer.

        (1 - q^0) = 0 sets the zero flag; (1 - q^-j) is normalized to
        -q^-j (1 - q^j).
        """
        if j == 0:
            self.zero = True
            return self
        if j < 0:
            self.sign = -self.sign
            self.qpow += j
            j = -j
        self.num[j] += 1
        return self

    def div_binom(self, j):
        if j == 0:
            raise ZeroDivisionError("division by (1 - q^0)")
        if j < 0:
            self.sign = -self.sign
            self.qpow -= j
            j = -j
        self.den[j] += 1
        return self

    def times_poch(self, n, inverted_base=False):
        """Multiply by (q)_n, or (q^-1)_n when inverted_base.

        A negative n raises NegativeIndex; the callers treat that as a
        point where the closed formula is not evaluable.
        """
        if n < 0:
            raise NegativeIndex("numerator Pochhammer with index %d" % n)
        if inverted_base:
            # (q^-1)_n = (-1)^n q^(-n(n+1)/2) (q)_n
            if n % 2:
                self.sign = -self.sign
            self.qpow -= n * (n + 1) // 2
        for j in range(1, n + 1):
            self.num[j] += 1
        return self

    def div_poch(self, n, inverted_base=False):
        """Divide by (q)_n, or (q^-1)_n when inverted_base.

        Division by a Pochhammer with negative index is the conventional
        zero (the reciprocal vanishes), so the whole value becomes 0.
        """
        if n < 0:
            self.zero = True
            return self
        if inverted_base:
            if n % 2:
                self.sign = -self.sign
            self.qpow += n * (n + 1) // 2
        for j in range(1, n + 1):
            self.den[j] += 1
        return self

    def cancel(self):
        common = self.num & self.den
        if common:
            self.num -= common
            self.den -= common
        return self

    def factor_count(self):
        return sum(self.num.values())

    def l1_bound(self):
        """Upper bound on the coefficient 1-norm of the expanded numerator."""
        if self.zero:
            return 0
        return 1 << self.factor_count()

    def to_ratfunc(self):
        if self.zero:
            return RatFunc.zero()
        top = LaurentPoly.monomial(self.sign, q=self.qpow)
        one = LaurentPoly.const(1)
        for j in sorted(self.num.elements()):
            top = top * (one - LaurentPoly.monomial(1, q=j))
        bot = LaurentPoly.const(1)
        for j in sorted(self.den.elements()):
            bot = bot * (one - LaurentPoly.monomial(1, q=j))
        return RatFunc(top, bot)

    def to_poly(self):
        return self.to_ratfunc().as_poly()

    def eval_fraction(self, t):
        """Exact value at q = t for an integer or Fraction t."""
        if self.zero:
            return Fraction(0)
        t = Fraction(t)
        val = Fraction(self.sign) * t ** self.qpow
        for j, mult in sorted(self.num.items()):
            val *= (1 - t ** j) ** mult
        for j, mult in sorted(self.den.items()):
            val /= (1 - t ** j) ** mult
        return val

    def equals(self, other):
        """Exact value equality.

        The fast path compares canceled factor multisets; when the
        multisets disagree the values can still match (indices are not
        coprime as polynomials), so fall back to expanding.
        """
        a = self.copy().cancel()
        b = other.copy().cancel()
        if a.zero or b.zero:
            return a.zero and b.zero
        if (a.sign == b.sign and a.qpow == b.qpow
                and a.num == b.num and a.den == b.den):
            return True
        return a.to_ratfunc() == b.to_ratfunc()

    def __mul__(self, other):
        if not isinstance(other, QFactors):
            return NotImplemented
        if self.zero or other.zero:
            return QFactors.make_zero()
        return QFactors(False, self.sign * other.sign,
                        self.qpow + other.qpow,
                        self.num + other.num, self.den + other.den)


def certificate_base(l1_bound):
    """Smallest power of two t with t >= 2*l1_bound + 2.

    For an integer Laurent polynomial R with coefficient 1-norm <= B,
    the balanced base-t digit expansion of t^shift * R(t) is unique once
    t >= 2B + 2, so R(t) = 0 forces R = 0.
    """
    t = 4
    need = 2 * l1_bound + 2
    while t < need:
        t <<= 1
    return t


def is_zero_sum(parts, extra_l1=None):
    """Exact zero test for sum_i poly_i(q) * qf_i.

    parts is a list of (LaurentPoly in q alone, QFactors) pairs.  Returns
    (is_zero, base): the sum, viewed over the common denominator, is the
    zero Laurent polynomial iff its value at q = base vanishes, by the
    coefficient-size bound.  extra_l1 adds slack to the bound (used when
    the caller already multiplied things in).
    """
    bound = 0
    for poly, qf in parts:
        if qf.zero or not poly:
            continue
        l1 = sum(abs(c) for c in poly.terms.values())
        bound += l1 * qf.l1_bound()
    # denominators cleared below multiply every term by at most the lcm
    # of the den multisets; bound by the product of all of them
    den_all = Counter()
    for _, qf in parts:
        if not qf.zero:
            den_all |= qf.den
    bound <<= sum(den_all.values())
    if extra_l1:
        bound *= extra_l1
    if bound == 0:
        return True, 4
    t = certificate_base(bound)
    tf = Fraction(t)
    total = Fraction(0)
    for poly, qf in parts:
        if qf.zero or not poly:
            continue
        total += poly.eval_fraction({"q": tf}) * qf.eval_fraction(tf)
    return total == 0, t
