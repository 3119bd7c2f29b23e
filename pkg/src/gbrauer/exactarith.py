"""Exact scalar arithmetic: rationals, sparse multivariate polynomials and
rational functions.

Rational numbers are ``fractions.Fraction`` (always stored in lowest terms
with positive denominator, which is exactly the canonical form we need).
They serialize as ``"p/q"`` with the denominator omitted when it is 1 --
this is what ``str(Fraction(...))`` already produces.

A polynomial is a mapping from exponent tuples to rational coefficients:

  MultiPoly.terms = {(2, 1): Fraction(1), (0, 0): Fraction(3)}   # x0^2*x1 + 3

Zero coefficients are never stored; the zero polynomial has an empty term
dict.  The term order is graded lexicographic (total degree first, then
lexicographic on exponent vectors) and is fixed once for canonical
serialization.

Rational functions are pairs of polynomials.  Univariate quotients are kept
gcd-reduced with a monic denominator; multivariate quotients are only
cross-multiplied (no multivariate gcd), with the denominator scaled so its
graded-lex leading coefficient is 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

Rational = Fraction


def rational_from_string(text: str) -> Fraction:
    """Parse an exact rational given as "p/q" or "p"."""
    return Fraction(text.strip())


def rational_to_string(value: Fraction) -> str:
    return str(Fraction(value))


class ExactArithError(Exception):
    pass


class VariableMismatch(ExactArithError):
    pass


class NotDivisible(ExactArithError):
    pass


class DivisionByZero(ExactArithError):
    pass


def _grlex_key(exponents):
    return (sum(exponents), exponents)


class MultiPoly:
    """Sparse polynomial over the rationals in a fixed ordered variable list."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        clean = {}
        if terms:
            nv = len(self.variables)
            for exp, coeff in terms.items():
                if len(exp) != nv:
                    raise VariableMismatch(
                        f"exponent {exp} has wrong length for {self.variables}"
                    )
                c = Fraction(coeff)
                if c:
                    clean[tuple(exp)] = c
        self.terms = clean

    @classmethod
    def zero(cls, variables):
        return cls(variables, {})

    @classmethod
    def const(cls, variables, value):
        value = Fraction(value)
        if not value:
            return cls.zero(variables)
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def var(cls, variables, name):
        variables = tuple(variables)
        idx = variables.index(name)
        exp = [0] * len(variables)
        exp[idx] = 1
        return cls(variables, {tuple(exp): Fraction(1)})

    def _check(self, other):
        if self.variables != other.variables:
            raise VariableMismatch(
                f"variable lists differ: {self.variables} vs {other.variables}"
            )

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.variables, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        out = MultiPoly(self.variables)
        out.terms = terms
        return out

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return MultiPoly(
                self.variables, {e: c * other for e, c in self.terms.items()}
            )
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        out = MultiPoly(self.variables)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def evaluate(self, point):
        """Exact value at a tuple of rationals (one per variable)."""
        if len(point) != len(self.variables):
            raise VariableMismatch("point length does not match variable count")
        point = [Fraction(p) for p in point]
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            v = coeff
            for p, e in zip(point, exp):
                if e:
                    v *= p**e
            total += v
        return total

    def divide_by_variable(self, name):
        """Return q with variable*q == self; every term must contain the variable."""
        idx = self.variables.index(name)
        terms = {}
        for exp, coeff in self.terms.items():
            if exp[idx] <= 0:
                raise NotDivisible(
                    f"term {exp} has no positive power of {name!r}"
                )
            new = list(exp)
            new[idx] -= 1
            terms[tuple(new)] = coeff
        out = MultiPoly(self.variables)
        out.terms = terms
        return out

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term; None if zero."""
        if not self.terms:
            return None
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def degree_in(self, name):
        idx = self.variables.index(name)
        return max((e[idx] for e in self.terms), default=0)

    def sorted_terms(self):
        """Terms in descending graded-lex order, for canonical serialization."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def serialize(self):
        """Canonical form: (exponent-vector, coefficient-string) pairs in term order."""
        return [(list(exp), str(coeff)) for exp, coeff in self.sorted_terms()]

    @classmethod
    def deserialize(cls, variables, pairs):
        return cls(variables, {tuple(exp): Fraction(c) for exp, c in pairs})

    def substitute_constant(self, name, value):
        """Replace one variable by an exact rational, dropping it from the list."""
        idx = self.variables.index(name)
        value = Fraction(value)
        new_vars = self.variables[:idx] + self.variables[idx + 1 :]
        terms = {}
        for exp, coeff in self.terms.items():
            c = coeff * value ** exp[idx]
            if not c:
                continue
            e = exp[:idx] + exp[idx + 1 :]
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MultiPoly(new_vars, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exp, coeff in self.sorted_terms():
            factors = [str(coeff)]
            for name, e in zip(self.variables, exp):
                if e == 1:
                    factors.append(str(name))
                elif e > 1:
                    factors.append(f"{name}^{e}")
            bits.append("*".join(factors))
        return " + ".join(bits)


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_eval(p: MultiPoly, point) -> Fraction:
    return p.evaluate(point)


def poly_divide_by_variable(p: MultiPoly, name) -> MultiPoly:
    return p.divide_by_variable(name)


def taylor_coefficients(p: MultiPoly, point, bounds):
    """Coefficients of p(point + u) in the shift variables u, truncated.

    Returns {beta: value} for every multi-exponent beta with beta[r] <
    bounds[r] elementwise, where value is the coefficient of u^beta, i.e.
    (d^beta p)(point) / beta!.  Bounds reflect nilpotency orders, so higher
    terms would be annihilated anyway.
    """
    nv = len(p.variables)
    if len(point) != nv or len(bounds) != nv:
        raise VariableMismatch("point/bounds length mismatch")
    point = [Fraction(v) for v in point]
    out = {}
    for exp, coeff in p.terms.items():
        ranges = [range(min(e, b - 1) + 1) for e, b in zip(exp, bounds)]
        stack = [((), coeff)]
        for r in range(nv):
            nxt = []
            e = exp[r]
            pv = point[r]
            for prefix, val in stack:
                for beta in ranges[r]:
                    c = val * comb(e, beta)
                    if e - beta:
                        c *= pv ** (e - beta)
                    if c:
                        nxt.append((prefix + (beta,), c))
            stack = nxt
        for beta, val in stack:
            s = out.get(beta, 0) + val
            if s:
                out[beta] = s
            else:
                out.pop(beta, None)
    return out


# -- univariate helpers (dense lists of Fractions, used for gcd reduction) --


def _to_dense(p: MultiPoly):
    n = p.degree_in(p.variables[0])
    dense = [Fraction(0)] * (n + 1)
    for (e,), c in p.terms.items():
        dense[e] = c
    return dense


def _from_dense(variables, dense):
    return MultiPoly(variables, {(i,): c for i, c in enumerate(dense) if c})


def _dense_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _dense_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        f = a[i + len(b) - 1] * inv
        if f:
            q[i] = f
            for j, bj in enumerate(b):
                a[i + j] -= f * bj
    return _dense_trim(q), _dense_trim(a)

def _dense_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _dense_divmod(a, b)
        a, b = b, r
    if a:
        inv = 1 / a[-1]
        a = [c * inv for c in a]
    return a


class RatFunc:
    """Quotient of two MultiPoly values over the same variable list.

    Univariate quotients are reduced to lowest terms with a monic
    denominator after every operation, so equality is structural.
    Multivariate quotients are only cross-multiplied; regularity questions
    are decided elsewhere by exact division (see the V construction).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly):
        if num.variables != den.variables:
            raise VariableMismatch("numerator/denominator variable lists differ")
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            den = MultiPoly.const(den.variables, 1)
        elif len(num.variables) == 1:
            da, db = _to_dense(num), _to_dense(den)
            g = _dense_gcd(da, db)
            if len(g) > 1:
                da, _ = _dense_divmod(da, g)
                db, _ = _dense_divmod(db, g)
            num = _from_dense(num.variables, da)
            den = _from_dense(den.variables, db)
        lead = den.leading()
        if lead is not None and lead[1] != 1:
            scale = 1 / lead[1]
            num = num * scale
            den = den * scale
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: MultiPoly):
        return cls(p, MultiPoly.const(p.variables, 1))

    @classmethod
    def const(cls, variables, value):
        return cls.from_poly(MultiPoly.const(variables, value))

    @classmethod
    def var(cls, variables, name):
        return cls.from_poly(MultiPoly.var(variables, name))

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(self.num.variables, other)
        return other

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.num.variables != other.num.variables:
            return False
        # cross-multiplied comparison covers the unreduced multivariate case
        return (self.num * other.den) == (other.num * self.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        out = object.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        return out

    def __add__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def invert(self):
        if self.num.is_zero():
            raise DivisionByZero("inverting the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.invert()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.invert()

    def __pow__(self, k):
        if k == 0:
            return RatFunc.const(self.num.variables, 1)
        if k < 0:
            return self.invert() ** (-k)
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if not d:
            raise DivisionByZero(f"pole at {point}")
        return self.num.evaluate(point) / d

    def regular_at(self, point):
        """Pole test; only meaningful in the reduced (univariate) case."""
        return bool(self.den.evaluate(point))

    def __repr__(self):
        if self.den == MultiPoly.const(self.den.variables, 1):
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def ratfunc_arith(a: RatFunc, b: RatFunc | None, op: str) -> RatFunc:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "invert":
        return a.invert()
    raise ValueError(f"unknown op {op!r}")


# -- the field Q(x) used by the generic-parameter Brauer algebra --

XVARS = ("x",)


def qx_const(value) -> RatFunc:
    return RatFunc.const(XVARS, value)


def qx_x() -> RatFunc:
    return RatFunc.var(XVARS, "x")


def qx_content(sign: int, offset) -> RatFunc:
    """The scalar sign*((x-1)/2 + offset) in Q(x)."""
    half = Fraction(1, 2)
    base = qx_x() * half + qx_const(Fraction(offset) - half)
    return base if sign > 0 else -base
