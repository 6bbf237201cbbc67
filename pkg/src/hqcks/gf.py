"""Arithmetic in GF(p^r) with p-ary lexicographic element indexing.

An element a_0 + a_1*alpha + ... + a_{r-1}*alpha^{r-1} has index
sum(a_i * p^i), so index 0 is zero, index 1 is one and index p is alpha.
Everything else in the package addresses field elements through this index.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

MAX_FIELD_SIZE = 1024

# Conway polynomials, ascending coefficients, for every non-prime q <= 169.
CONWAY = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
}


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p^r, raising FieldError when q is not a prime power."""
    factors = prime_factors(q) if q > 1 else []
    if len(factors) != 1:
        raise FieldError(f"{q} is not a prime power")
    p = factors[0]
    r = 0
    while q > 1:
        q //= p
        r += 1
    return p, r


def least_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    ps = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in ps):
            return g
    raise FieldError(f"no primitive root mod {p}")


# -- polynomials over GF(p), ascending coefficient lists ---------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _polymulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _polymod(prod, m, p)


def _polypowmod(a: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _polymod(a, m, p)
    while e:
        if e & 1:
            result = _polymulmod(result, base, m, p)
        base = _polymulmod(base, base, m, p)
        e >>= 1
    return result


def _monic_polys(deg: int, p: int):
    for i in range(p**deg):
        coeffs = []
        for _ in range(deg):
            coeffs.append(i % p)
            i //= p
        yield coeffs + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    r = len(modulus) - 1
    if r == 1:
        return True
    for deg in range(1, r // 2 + 1):
        for g in _monic_polys(deg, p):
            if not _polymod(modulus, g, p):
                return False
    return True


def root_order_is_maximal(modulus: Sequence[int], p: int) -> bool:
    r = len(modulus) - 1
    order = p**r - 1
    for f in prime_factors(order):
        if _polymod(_polypowmod([0, 1], order // f, modulus, p), modulus, p) == [1]:
            return False
    return _polypowmod([0, 1], order, modulus, p) == [1]


# -- elements ----------------------------------------------------------------

@dataclass(frozen=True)
class FieldElement:
    """Coefficients of alpha^0..alpha^{r-1}; compare by value."""

    coeffs: tuple[int, ...]

    def __repr__(self) -> str:
        return f"FieldElement({self.coeffs})"


@dataclass(frozen=True)
class FieldSpec:
    p: int
    r: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", self.p**self.r)

    def __repr__(self) -> str:
        return f"GF({self.q})"

    # element <-> index
    def element(self, i: int) -> FieldElement:
        return element_from_index(self, i)

    def index(self, e: FieldElement) -> int:
        return index_of(self, e)

    @cached_property
    def elements(self) -> tuple[FieldElement, ...]:
        return tuple(element_from_index(self, i) for i in range(self.q))

    # index-level tables, built from the direct polynomial arithmetic
    @cached_property
    def add_table(self) -> np.ndarray:
        idx = np.arange(self.q)
        digits = [(idx // self.p**j) % self.p for j in range(self.r)]
        table = np.zeros((self.q, self.q), dtype=np.int32)
        for j, d in enumerate(digits):
            table += ((d[:, None] + d[None, :]) % self.p) * self.p**j
        return table

    @cached_property
    def mul_table(self) -> np.ndarray:
        els = self.elements
        table = np.zeros((self.q, self.q), dtype=np.int32)
        for i in range(1, self.q):
            for j in range(i, self.q):
                v = index_of(self, mul(self, els[i], els[j]))
                table[i, j] = table[j, i] = v
        return table

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([index_of(self, neg(self, e)) for e in self.elements], dtype=np.int32)

    @cached_property
    def inv_table(self) -> np.ndarray:
        """inv_table[0] is -1; every other entry is the index of the inverse."""
        out = np.full(self.q, -1, dtype=np.int32)
        for i, e in enumerate(self.elements[1:], start=1):
            out[i] = index_of(self, inv(self, e))
        return out

    @cached_property
    def power_order(self) -> tuple[int, ...]:
        """Indices of 0, alpha^0, alpha^1, ..., alpha^{q-2}."""
        g = primitive_element(self)
        out = [0]
        x = one(self)
        for _ in range(self.q - 1):
            out.append(index_of(self, x))
            x = mul(self, x, g)
        return tuple(out)

    @cached_property
    def log_table(self) -> np.ndarray:
        """log_table[i] = e with alpha^e = element i; -1 for zero."""
        out = np.full(self.q, -1, dtype=np.int64)
        for e, i in enumerate(self.power_order[1:]):
            out[i] = e
        return out


def field_new(p: int, r: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build GF(p^r); the default modulus is the Conway polynomial."""
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if r < 1:
        raise FieldError("extension degree must be >= 1")
    if p**r > MAX_FIELD_SIZE:
        raise FieldError(f"fields larger than {MAX_FIELD_SIZE} are not supported")
    if modulus is None:
        if r == 1:
            modulus = ((-least_primitive_root(p)) % p, 1)
        elif (p, r) in CONWAY:
            modulus = CONWAY[(p, r)]
        else:
            modulus = _first_primitive(p, r)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != r + 1 or modulus[-1] != 1:
        raise FieldError(f"modulus must be monic of degree {r}")
    if not is_irreducible(modulus, p):
        raise FieldError(f"modulus {modulus} is reducible over GF({p})")
    if not root_order_is_maximal(modulus, p):
        raise FieldError(f"modulus {modulus} is irreducible but not primitive")
    return FieldSpec(p, r, modulus)


def _first_primitive(p: int, r: int) -> tuple[int, ...]:
    for m in _monic_polys(r, p):
        if m[0] and is_irreducible(m, p) and root_order_is_maximal(m, p):
            return tuple(m)
    raise FieldError(f"no primitive polynomial of degree {r} over GF({p})")


def field_of_order(q: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    p, r = prime_power(q)
    return field_new(p, r, modulus)


def element_from_index(f: FieldSpec, i: int) -> FieldElement:
    if not 0 <= i < f.q:
        raise FieldError(f"index {i} out of range for GF({f.q})")
    coeffs = []
    for _ in range(f.r):
        coeffs.append(i % f.p)
        i //= f.p
    return FieldElement(tuple(coeffs))


def index_of(f: FieldSpec, e: FieldElement) -> int:
    _check(f, e)
    return sum(c * f.p**j for j, c in enumerate(e.coeffs))


def _check(f: FieldSpec, e: FieldElement) -> None:
    if len(e.coeffs) != f.r or any(not 0 <= c < f.p for c in e.coeffs):
        raise FieldError(f"{e!r} is not an element of GF({f.q})")


def zero(f: FieldSpec) -> FieldElement:
    return FieldElement((0,) * f.r)


def one(f: FieldSpec) -> FieldElement:
    return FieldElement((1,) + (0,) * (f.r - 1))


def add(f: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    _check(f, a)
    _check(f, b)
    return FieldElement(tuple((x + y) % f.p for x, y in zip(a.coeffs, b.coeffs)))


def neg(f: FieldSpec, a: FieldElement) -> FieldElement:
    _check(f, a)
    return FieldElement(tuple(-x % f.p for x in a.coeffs))


def sub(f: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    return add(f, a, neg(f, b))


def mul(f: FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement:
    _check(f, a)
    _check(f, b)
    prod = _polymulmod(a.coeffs, b.coeffs, f.modulus, f.p)
    return FieldElement(tuple(prod + [0] * (f.r - len(prod))))


def power(f: FieldSpec, a: FieldElement, e: int) -> FieldElement:
    _check(f, a)
    if e < 0:
        return power(f, inv(f, a), -e)
    res = _polypowmod(a.coeffs, e, f.modulus, f.p) if any(a.coeffs) or e == 0 else []
    return FieldElement(tuple(res + [0] * (f.r - len(res))))


def inv(f: FieldSpec, a: FieldElement) -> FieldElement:
    _check(f, a)
    if not any(a.coeffs):
        raise ZeroDivisionError("zero has no inverse")
    return power(f, a, f.q - 2)


def primitive_element(f: FieldSpec) -> FieldElement:
    # Class of x; for r == 1 the modulus x - g makes this g itself.
    x = [0, 1] if f.r > 1 else _polymod([0, 1], f.modulus, f.p)
    return FieldElement(tuple(x + [0] * (f.r - len(x))))


def order(f: FieldSpec, a: FieldElement) -> int:
    if not any(a.coeffs):
        raise FieldError("zero has no multiplicative order")
    n, x = 1, a
    while x != one(f):
        x = mul(f, x, a)
        n += 1
    return n


# -- text notation -----------------------------------------------------------

_TERM = re.compile(r"^(\d*)\*?(a(?:\^(\d+))?)?$")


def format_element(f: FieldSpec, e: FieldElement | int, notation: str = "index") -> str:
    """Render as the lexIndex or symbolically with `a` standing for alpha."""
    if isinstance(e, int):
        e = element_from_index(f, e)
    if notation == "index":
        return str(index_of(f, e))
    if notation != "symbolic":
        raise ValueError(f"unknown notation {notation!r}")
    terms = []
    for j in range(f.r - 1, -1, -1):
        c = e.coeffs[j]
        if not c:
            continue
        mono = "" if j == 0 else ("a" if j == 1 else f"a^{j}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def parse_element(f: FieldSpec, text: str, notation: str = "auto") -> FieldElement:
    """Parse an index ("5") or a symbolic form ("a^2+a+2", "2a").

    With notation="auto" a bare integer is read as an index.
    """
    s = text.strip().replace(" ", "")
    if notation == "index" or (notation == "auto" and s.isdigit()):
        return element_from_index(f, int(s))
    coeffs = [0] * f.r
    for term in s.replace("-", "+-").split("+"):
        if not term:
            continue
        sign = 1
        if term.startswith("-"):
            sign, term = -1, term[1:]
        m = _TERM.match(term)
        if not m or not (m.group(1) or m.group(2)):
            raise FieldError(f"cannot parse field element {text!r}")
        c = int(m.group(1)) if m.group(1) else 1
        deg = 0 if not m.group(2) else int(m.group(3) or 1)
        if deg >= f.r:
            # reduce alpha^deg through the modulus
            red = power(f, primitive_element(f), deg).coeffs
            for j, v in enumerate(red):
                coeffs[j] = (coeffs[j] + sign * c * v) % f.p
        else:
            coeffs[deg] = (coeffs[deg] + sign * c) % f.p
    return FieldElement(tuple(coeffs))
