"""Exact sparse multivariate polynomials with monomial orders and grading.

Monomials are exponent tuples (one natural number per ring variable).
Coefficients are exact: Fraction by default, ints mod p when the ring is
constructed with a prime characteristic (a performance mode; everything the
rest of the package certifies runs over the rationals).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from rescur import _kernel as K

Exponents = tuple  # exponent vector, one entry per variable


class RingMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class MonomialOrder:
    name: str
    key: Callable
    heap_key: Callable
    graded: bool


GREVLEX = MonomialOrder("grevlex", K.key_grevlex, K.heap_grevlex, True)
GRLEX = MonomialOrder("grlex", K.key_grlex, K.heap_grlex, True)
LEX = MonomialOrder("lex", K.key_lex, K.heap_lex, False)

ORDERS = {o.name: o for o in (GREVLEX, GRLEX, LEX)}

_TOKEN = re.compile(r"\s*(?:(\d+/\d+|\d+)|([A-Za-z_][A-Za-z_0-9']*)|(\^|\*|\+|-)|(\S))")


def compare(m1: Exponents, m2: Exponents, order: MonomialOrder) -> int:
    """Total order on monomials: -1, 0 or 1 as m1 <, =, > m2."""
    if len(m1) != len(m2):
        raise ValueError(f"exponent length mismatch: {len(m1)} vs {len(m2)}")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


class Ring:
    """A polynomial ring: ordered variable names, monomial order, coefficients."""

    __slots__ = ("names", "order", "p", "_index")

    def __init__(self, names, order: MonomialOrder = GREVLEX, p: int = 0):
        names = tuple(names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if isinstance(order, str):
            order = ORDERS[order]
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, *a):
        raise AttributeError("Ring is immutable")

    @property
    def n(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.names == other.names
            and self.order.name == other.order.name
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.names, self.order.name, self.p))

    def __repr__(self):
        base = f"GF({self.p})" if self.p else "QQ"
        return f"Ring({base}[{', '.join(self.names)}], {self.order.name})"

    def var_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in {self!r}") from None

    def coeff(self, c):
        """Normalize a coefficient into this ring's domain."""
        if self.p:
            if isinstance(c, Fraction):
                return c.numerator * pow(c.denominator, -1, self.p) % self.p
            return int(c) % self.p
        if isinstance(c, Fraction):
            return c
        return Fraction(c)

    def coeff_div(self, a, b):
        if self.p:
            return a * pow(b, -1, self.p) % self.p
        return a / b

    def from_terms(self, terms) -> "Polynomial":
        """Build a polynomial from {exponents: coefficient}, canonicalizing."""
        clean = {}
        for e, c in dict(terms).items():
            e = tuple(e)
            if len(e) != self.n or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for {self!r}")
            c = self.coeff(c)
            if c:
                clean[e] = c
        return Polynomial(self, clean)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.coeff(c)
        return Polynomial(self, {(0,) * self.n: c} if c else {})

    def variable(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.var_index(i)
        e = [0] * self.n
        e[i] = 1
        return Polynomial(self, {tuple(e): self.coeff(1)})

    def variables(self):
        return [self.variable(i) for i in range(self.n)]

    def monomial(self, exps, c=1) -> "Polynomial":
        return self.from_terms({tuple(exps): c})

    def extended(self, new_names, position=0) -> "Ring":
        """Ring with extra variables spliced in at `position`."""
        if isinstance(new_names, str):
            new_names = (new_names,)
        names = self.names[:position] + tuple(new_names) + self.names[position:]
        return Ring(names, self.order, self.p)

    def without(self, index: int) -> "Ring":
        names = self.names[:index] + self.names[index + 1 :]
        return Ring(names, self.order, self.p)

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)


class Polynomial:
    """Immutable sparse polynomial over a Ring; no zero coefficients stored."""

    __slots__ = ("ring", "terms", "_lt")

    def __init__(self, ring: Ring, terms: dict):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_lt", None)

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- basic views -------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int:
        """Max total exponent; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(K.total_deg(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {K.total_deg(e) for e in self.terms}
        return len(degs) <= 1

    def monomials_desc(self):
        return sorted(self.terms, key=self.ring.order.key, reverse=True)

    def lead_monomial(self) -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no lead term")
        lt = self._lt
        if lt is None:
            lt = max(self.terms, key=self.ring.order.key)
            object.__setattr__(self, "_lt", lt)
        return lt

    def lead_coeff(self):
        return self.terms[self.lead_monomial()]

    def lead_term(self):
        m = self.lead_monomial()
        return m, self.terms[m]

    def coeff_of(self, exps):
        return self.terms.get(tuple(exps), self.ring.coeff(0) if not self.ring.p else 0)

    def constant_coeff(self):
        return self.terms.get((0,) * self.ring.n, Fraction(0) if not self.ring.p else 0)

    def is_constant(self) -> bool:
        return all(K.total_deg(e) == 0 for e in self.terms)

    # -- arithmetic --------------------------------------------------------
    def _check(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.ring.const(other)
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Polynomial(self.ring, K.merge_terms(self.terms, other.terms, 1, self.ring.p))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return Polynomial(self.ring, K.merge_terms(self.terms, other.terms, -1, self.ring.p))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return Polynomial(self.ring, {e: -c if not self.ring.p else (-c) % self.ring.p for e, c in self.terms.items()})

    def __mul__(self, other):
        other = self._check(other)
        return Polynomial(self.ring, K.mul_terms(self.terms, other.terms, self.ring.p))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "Polynomial":
        c = self.ring.coeff(c)
        if not c:
            return self.ring.zero
        if self.ring.p:
            return Polynomial(self.ring, {e: (v * c) % self.ring.p for e, v in self.terms.items()})
        return Polynomial(self.ring, {e: v * c for e, v in self.terms.items()})

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.coeff_div(self.ring.coeff(1), self.lead_coeff()))

    def mul_monomial(self, exps, c=1) -> "Polynomial":
        return self * self.ring.monomial(exps, c)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if not self.is_constant():
                return NotImplemented
            return self.constant_coeff() == self.ring.coeff(other) and len(self.terms) <= 1
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    # -- calculus / substitution -------------------------------------------
    def derivative(self, var: int) -> "Polynomial":
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k:
                e2 = e[:var] + (k - 1,) + e[var + 1 :]
                out[e2] = out.get(e2, 0) + c * k
        return self.ring.from_terms(out)

    def subst(self, images: Iterable["Polynomial"], target: Ring | None = None) -> "Polynomial":
        """Evaluate at `images` (one polynomial per variable, all over `target`)."""
        images = list(images)
        if len(images) != self.ring.n:
            raise ValueError("need one image per variable")
        if target is None:
            target = images[0].ring
        powers: list[dict[int, Polynomial]] = [{0: target.one} for _ in images]
        out = target.zero
        for e, c in sorted(self.terms.items()):
            term = target.const(c)
            for i, k in enumerate(e):
                if not k:
                    continue
                cache = powers[i]
                if k not in cache:
                    kk = max(j for j in cache if j <= k)
                    acc = cache[kk]
                    while kk < k:
                        acc = acc * images[i]
                        kk += 1
                        cache[kk] = acc
                term = term * cache[k]
            out = out + term
        return out

    def __repr__(self):
        return f"<{poly_to_str(self)}>"

    def __str__(self):
        return poly_to_str(self)


def arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    """Binary arithmetic by tag: 'add', 'sub' or 'mul'."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# homogenization
# ---------------------------------------------------------------------------

def homogenize(p: Polynomial, position: int = 0, target_degree: int | None = None, name: str = "z0") -> Polynomial:
    """Lift p to a homogeneous form using one extra variable.

    The new variable is inserted at `position` (default: prepended) and each
    term is padded up to `target_degree` (default: deg p).
    """
    if name in p.ring.names:
        raise ValueError(f"homogenization variable {name!r} already in ring")
    deg = p.total_degree()
    if target_degree is None:
        target_degree = max(deg, 0)
    if deg > target_degree:
        raise ValueError(f"target degree {target_degree} < deg p = {deg}")
    big = p.ring.extended(name, position)
    out = {}
    for e, c in p.terms.items():
        pad = target_degree - K.total_deg(e)
        e2 = e[:position] + (pad,) + e[position:]
        out[e2] = c
    return big.from_terms(out)


def dehomogenize(p: Polynomial, var: int | str) -> Polynomial:
    """Substitute 1 for the given variable and drop it from the ring."""
    if isinstance(var, str):
        var = p.ring.var_index(var)
    small = p.ring.without(var)
    out = {}
    for e, c in p.terms.items():
        e2 = e[:var] + e[var + 1 :]
        out[e2] = out.get(e2, 0) + c
    return small.from_terms(out)


# ---------------------------------------------------------------------------
# text form: terms joined by +/-, term = c | c*m | m, monomial = x1^2*x2
# ---------------------------------------------------------------------------

def coeff_to_str(c) -> str:
    return str(c)


def poly_to_str(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    chunks = []
    for m in p.monomials_desc():
        c = p.terms[m]
        factors = []
        for name, e in zip(p.ring.names, m):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        mono = "*".join(factors)
        neg = (not p.ring.p) and c < 0
        mag = -c if neg else c
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f"-{body}" if neg else f"+{body}")
    return "".join(chunks)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse the textual polynomial syntax; raises ValueError with position."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, ident, op, junk = m.groups()
        if junk is not None:
            raise ValueError(f"unexpected character {junk!r} at column {m.start(4) + 1}")
        tokens.append((("num", num) if num else ("name", ident) if ident else ("op", op), m.start()))
        pos = m.end()
    tokens.append((("end", ""), len(text)))

    i = 0

    def peek():
        return tokens[i][0]

    def fail(msg, at=None):
        col = (tokens[i][1] if at is None else at) + 1
        raise ValueError(f"{msg} at column {col}")

    result = ring.zero
    first = True
    while True:
        if peek()[0] == "end":
            if first:
                raise ValueError("empty polynomial text")
            break
        if not first and peek() not in (("op", "+"), ("op", "-")):
            fail("expected '+' or '-' between terms")
        sign = 1
        while peek() in (("op", "+"), ("op", "-")):
            if peek() == ("op", "-"):
                sign = -sign
            i += 1
        if peek()[0] == "end":
            fail("dangling sign")
        coeff = Fraction(1)
        exps = [0] * ring.n
        saw_factor = False
        while True:
            kind, val = peek()
            if kind == "num":
                coeff *= Fraction(val)
                i += 1
            elif kind == "name":
                if val not in ring._index:
                    fail(f"unknown variable {val!r}")
                idx = ring.var_index(val)
                i += 1
                e = 1
                if peek() == ("op", "^"):
                    i += 1
                    kind2, val2 = peek()
                    if kind2 != "num" or "/" in val2:
                        fail("exponent must be a natural number")
                    e = int(val2)
                    i += 1
                exps[idx] += e
            else:
                if not saw_factor:
                    fail("expected a term")
                break
            saw_factor = True
            if peek() == ("op", "*"):
                i += 1
                continue
            if peek()[0] in ("num", "name"):
                fail("missing operator between factors")
            break
        result = result + ring.monomial(exps, sign * coeff)
        first = False
    return result
