"""Finite commutative rings with identity, materialized as operation tables.

Rings are described by a small algebraic syntax (:class:`Modular`,
:class:`GaloisField`, :class:`QuotientUnivariate`,
:class:`QuotientBivariateSquare`, :class:`Product`) and turned into a
:class:`FiniteRing` by :func:`build_ring`.  Every element of a built ring is an
integer id ``0 .. order-1`` with a human readable name.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence, Union

DEFAULT_SIZE_CAP = 4096


class RingError(ValueError):
    """Base class for ring construction errors."""


class InvalidSpec(RingError):
    pass


class NonFiniteQuotient(RingError):
    pass


class ReducibleDefiningPolynomial(RingError):
    pass


# ---------------------------------------------------------------------------
# Ring expressions
# ---------------------------------------------------------------------------

Poly = tuple  # integer coefficients, constant term first


@dataclass(frozen=True)
class Modular:
    n: int


@dataclass(frozen=True)
class GaloisField:
    q: int
    modulus: Poly | None = None  # monic, constant term first; None picks the default


@dataclass(frozen=True)
class QuotientUnivariate:
    base: Union[Modular, GaloisField]
    relations: tuple[Poly, ...]


@dataclass(frozen=True)
class QuotientBivariateSquare:
    """``base[x, y] / (x, y)^2``."""

    base: Modular


@dataclass(frozen=True)
class Product:
    factors: tuple


RingSpec = Union[Modular, GaloisField, QuotientUnivariate, QuotientBivariateSquare, Product]


def spec_name(spec: RingSpec) -> str:
    """Canonical textual form of a spec, accepted back by the expression parser."""
    if isinstance(spec, Modular):
        return f"Z{spec.n}"
    if isinstance(spec, GaloisField):
        return f"F{spec.q}"
    if isinstance(spec, QuotientUnivariate):
        rels = ",".join(format_int_poly(r) for r in spec.relations)
        return f"{spec_name(spec.base)}[x]/({rels})"
    if isinstance(spec, QuotientBivariateSquare):
        return f"{spec_name(spec.base)}[x,y]/(x,y)^2"
    if isinstance(spec, Product):
        return "x".join(spec_name(f) for f in spec.factors)
    raise InvalidSpec(f"not a ring spec: {spec!r}")


def format_int_poly(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        if deg == 0:
            body = str(abs(c))
        else:
            mono = var if deg == 1 else f"{var}^{deg}"
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("-" if c < 0 else "+") + body)
    return "".join(terms) or "0"


# ---------------------------------------------------------------------------
# Materialized rings
# ---------------------------------------------------------------------------


class FiniteRing:
    """A finite commutative ring given by its addition and multiplication tables.

    Instances are immutable; derived data (units, zero-divisors, negation) is
    computed lazily and cached.
    """

    def __init__(self, names, add_table, mul_table, zero, one, spec=None):
        self.names: tuple[str, ...] = tuple(names)
        self.add_table: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in add_table)
        self.mul_table: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in mul_table)
        self.zero = zero
        self.one = one
        self.spec = spec
        n = len(self.names)
        if len(self.add_table) != n or len(self.mul_table) != n:
            raise InvalidSpec("tables do not match the element list")

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(len(self.names))

    @property
    def name(self) -> str:
        return spec_name(self.spec) if self.spec is not None else f"<ring of order {self.order}>"

    def __len__(self) -> int:
        return len(self.names)

    def __repr__(self) -> str:
        return f"FiniteRing({self.name}, order={self.order})"

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self._neg[b]]

    def element(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not an element of {self.name}") from None

    def from_int(self, k: int) -> int:
        """The image of the integer ``k`` under ``Z -> R``."""
        x = self.zero
        for _ in range(k % self.characteristic):
            x = self.add_table[x][self.one]
        return x

    @cached_property
    def _index(self) -> dict[str, int]:
        return {nm: i for i, nm in enumerate(self.names)}

    @cached_property
    def _neg(self) -> tuple[int, ...]:
        out = []
        for a in self.elements:
            row = self.add_table[a]
            out.append(row.index(self.zero))
        return tuple(out)

    @cached_property
    def characteristic(self) -> int:
        x, k = self.one, 1
        while x != self.zero:
            x = self.add_table[x][self.one]
            k += 1
        return k

    @cached_property
    def units(self) -> frozenset[int]:
        return frozenset(a for a in self.elements if self.one in self.mul_table[a])

    @cached_property
    def zero_divisor_members(self) -> frozenset[int]:
        nonzero = [b for b in self.elements if b != self.zero]
        return frozenset(
            a for a in self.elements if any(self.mul_table[a][b] == self.zero for b in nonzero)
        )


@dataclass(frozen=True)
class ZeroDivisorSet:
    """The zero-divisors of a ring, ``0`` included."""

    ring: FiniteRing
    members: frozenset

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def names(self) -> list[str]:
        return [self.ring.names[x] for x in sorted(self.members)]


def zero_divisors(ring: FiniteRing) -> ZeroDivisorSet:
    return ZeroDivisorSet(ring, ring.zero_divisor_members)


def units(ring: FiniteRing) -> frozenset[int]:
    return ring.units


def characteristic(ring: FiniteRing) -> int:
    return ring.characteristic


def two_in_zr(ring: FiniteRing) -> bool:
    return ring.add(ring.one, ring.one) in ring.zero_divisor_members


def maximal_ideal(ring: FiniteRing) -> frozenset[int] | None:
    """Return Z(R) when it is an ideal (the ring is local), else ``None``."""
    z = ring.zero_divisor_members
    for a in z:
        if any(ring.add(a, b) not in z for b in z):
            return None
        if any(ring.mul(a, r) not in z for r in ring.elements):
            return None
    return z


def is_local(ring: FiniteRing) -> bool:
    return maximal_ideal(ring) is not None


def ring_axiom_violations(ring: FiniteRing, limit: int = 10) -> list[str]:
    """Exhaustively check the commutative ring axioms; returns a list of failures."""
    add, mul, els = ring.add_table, ring.mul_table, ring.elements
    bad: list[str] = []

    def fail(msg):
        bad.append(msg)
        return len(bad) >= limit

    if ring.zero == ring.one:
        bad.append("0 == 1")
    for a in els:
        if add[a][ring.zero] != a and fail(f"{a}+0 != {a}"):
            return bad
        if mul[a][ring.one] != a and fail(f"{a}*1 != {a}"):
            return bad
        if ring.zero not in add[a] and fail(f"{a} has no additive inverse"):
            return bad
        for b in els:
            if add[a][b] != add[b][a] and fail(f"{a}+{b} not commutative"):
                return bad
            if mul[a][b] != mul[b][a] and fail(f"{a}*{b} not commutative"):
                return bad
            ab_add, ab_mul = add[a][b], mul[a][b]
            for c in els:
                if add[ab_add][c] != add[a][add[b][c]] and fail(f"+ not associative at {a},{b},{c}"):
                    return bad
                if mul[ab_mul][c] != mul[a][mul[b][c]] and fail(f"* not associative at {a},{b},{c}"):
                    return bad
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] and fail(
                    f"not distributive at {a},{b},{c}"
                ):
                    return bad
    return bad


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, k)`` with ``q == p**k`` and ``p`` prime, or ``None``."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    return (p, k) if r == 1 else None


def _poly_mod_p_divides(d: Sequence[int], f: Sequence[int], p: int) -> bool:
    """Whether monic ``d`` divides ``f`` over Z_p (coefficients constant first)."""
    r = [c % p for c in f]
    deg_d = len(d) - 1
    for top in range(len(r) - 1, deg_d - 1, -1):
        c = r[top]
        if c:
            for i, dc in enumerate(d):
                r[top - deg_d + i] = (r[top - deg_d + i] - c * dc) % p
    return not any(r[:deg_d])


def is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Trial division of a monic polynomial by every monic polynomial of degree <= deg/2."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if _poly_mod_p_divides(list(low) + [1], f, p):
                return False
    return True


def default_field_modulus(p: int, k: int) -> Poly:
    """Lexicographically least monic irreducible of degree ``k`` over Z_p.

    Coefficients are compared from the x^(k-1) term down to the constant term.
    """
    for high_first in itertools.product(range(p), repeat=k):
        f = tuple(reversed(high_first)) + (1,)
        if is_irreducible_mod_p(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _modular(n: int, spec) -> FiniteRing:
    names = [str(i) for i in range(n)]
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return FiniteRing(names, add, mul, 0, 1 % n, spec)


def _poly_name(coeff_names: Sequence[str], var: str) -> str:
    """Name a polynomial given names of its coefficients (constant first, '0' = zero)."""
    terms = []
    for deg in range(len(coeff_names) - 1, -1, -1):
        c = coeff_names[deg]
        if c == "0":
            continue
        if deg == 0:
            terms.append(c)
            continue
        mono = var if deg == 1 else f"{var}^{deg}"
        if c == "1":
            terms.append(mono)
        elif c.lstrip("-").isdigit():
            terms.append(f"{c}{mono}")
        else:
            terms.append(f"({c}){mono}")
    return "+".join(terms) or "0"


def _galois_field(spec: GaloisField) -> FiniteRing:
    pk = prime_power(spec.q)
    if pk is None:
        raise InvalidSpec(f"F{spec.q}: field order must be a prime power")
    p, k = pk
    if spec.modulus is None:
        f = default_field_modulus(p, k) if k > 1 else (0, 1)
    else:
        f = tuple(int(c) % p for c in spec.modulus)
        if len(f) != k + 1 or f[-1] != 1:
            raise InvalidSpec(f"F{spec.q}: defining polynomial must be monic of degree {k}")
        if not is_irreducible_mod_p(f, p):
            raise ReducibleDefiningPolynomial(
                f"{format_int_poly(f, 'a')} is reducible over Z{p}"
            )
    if k == 1:
        return _modular(p, spec)
    elems = list(itertools.product(range(p), repeat=k))  # constant first
    # order: by coefficient tuple read from the top degree down
    elems.sort(key=lambda c: tuple(reversed(c)))
    index = {c: i for i, c in enumerate(elems)}

    def mul(a, b):
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top]
            if c:
                for i in range(k + 1):
                    prod[top - k + i] = (prod[top - k + i] - c * f[i]) % p
        return tuple(prod[:k])

    names = [_poly_name([str(c) for c in e], "a") for e in elems]
    add = [[index[tuple((x + y) % p for x, y in zip(a, b))] for b in elems] for a in elems]
    mult = [[index[mul(a, b)] for b in elems] for a in elems]
    zero = index[(0,) * k]
    one = index[(1,) + (0,) * (k - 1)]
    return FiniteRing(names, add, mult, zero, one, spec)


class _PolyArith:
    """Polynomial arithmetic over a base FiniteRing, reduced by leading-term rewriting."""

    def __init__(self, base: FiniteRing, relations: Sequence[Sequence[int]]):
        self.base = base
        self.rules = []
        for rel in relations:
            coeffs = [base.from_int(c) for c in rel]
            while coeffs and coeffs[-1] == base.zero:
                coeffs.pop()
            if not coeffs:
                continue  # the zero relation
            lead = coeffs[-1]
            ideal = sorted({base.mul(q, lead) for q in base.elements})
            # canonical coset representative of a + lead*R and a multiplier reaching it
            reduce_map = {}
            for a in base.elements:
                best = None
                for q in base.elements:
                    rem = base.sub(a, base.mul(q, lead))
                    if best is None or rem < best[0]:
                        best = (rem, q)
                reduce_map[a] = best
            self.rules.append((len(coeffs) - 1, len(ideal), tuple(coeffs), reduce_map))
        # unit leading coefficients (largest ideal) first
        self.rules.sort(key=lambda r: (-r[1], r[0]))

    def trim(self, p):
        z = self.base.zero
        p = list(p)
        while p and p[-1] == z:
            p.pop()
        return tuple(p)

    def add(self, a, b):
        B = self.base
        n = max(len(a), len(b))
        a = list(a) + [B.zero] * (n - len(a))
        b = list(b) + [B.zero] * (n - len(b))
        return self.reduce([B.add(x, y) for x, y in zip(a, b)])

    def mul(self, a, b):
        B = self.base
        if not a or not b:
            return ()
        out = [B.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = B.add(out[i + j], B.mul(x, y))
        return self.reduce(out)

    def reduce(self, p):
        B = self.base
        p = list(p)
        for j in range(len(p) - 1, -1, -1):
            for k, _, rel, reduce_map in self.rules:
                if k > j:
                    continue
                rem, q = reduce_map[p[j]]
                if q == B.zero or rem == p[j]:
                    continue
                shift = j - k
                for i, c in enumerate(rel):
                    p[shift + i] = B.sub(p[shift + i], B.mul(q, c))
        return self.trim(p)


def _quotient_univariate(spec: QuotientUnivariate, cap: int) -> FiniteRing:
    if not isinstance(spec.base, (Modular, GaloisField)):
        raise InvalidSpec("quotient base must be Z_n or F_q")
    if not spec.relations:
        raise NonFiniteQuotient(f"{spec_name(spec)}: no relations, the quotient is infinite")
    base = build_ring(spec.base, cap)
    arith = _PolyArith(base, spec.relations)
    zero, gen = (), arith.reduce([base.zero, base.one])
    # every constant of the base (a field generator is not reachable from 1 alone) and x
    seen = []
    for p in [zero] + [arith.reduce([c]) for c in range(base.order)] + [gen]:
        if p not in seen:
            seen.append(p)
    one = arith.reduce([base.one])
    members = set(seen)
    done = 0  # seen[:done] have been combined with each other
    while done < len(seen):
        a = seen[done]
        done += 1
        for b in seen[:done]:
            for c in (arith.add(a, b), arith.mul(a, b)):
                if c not in members:
                    members.add(c)
                    seen.append(c)
                    if len(seen) > cap:
                        raise NonFiniteQuotient(f"{spec_name(spec)}: closure exceeded {cap} elements")
    width = max(len(p) for p in seen)

    def key(p):
        padded = list(p) + [base.zero] * (width - len(p))
        return tuple(reversed(padded))

    elems = sorted(seen, key=key)
    index = {p: i for i, p in enumerate(elems)}
    names = [_poly_name([base.names[c] for c in p], "x") for p in elems]
    add = [[index[arith.add(a, b)] for b in elems] for a in elems]
    mul = [[index[arith.mul(a, b)] for b in elems] for a in elems]
    ring = FiniteRing(names, add, mul, index[zero], index[one], spec)
    if ring.zero == ring.one:
        raise InvalidSpec(f"{spec_name(spec)}: relations generate the unit ideal")
    return ring


def _bivariate_square(spec: QuotientBivariateSquare, cap: int) -> FiniteRing:
    if not isinstance(spec.base, Modular):
        raise InvalidSpec("(x,y)^2 quotient is only supported over Z_n")
    base = build_ring(spec.base, cap)
    n = base.order
    if n**3 > cap:
        raise NonFiniteQuotient(f"{spec_name(spec)}: more than {cap} elements")
    # a + b*x + c*y, ordered by (c, b, a)
    elems = [(a, b, c) for c in range(n) for b in range(n) for a in range(n)]
    index = {e: i for i, e in enumerate(elems)}
    B = base

    def mul(u, v):
        a, b, c = u
        d, e, f = v
        return (B.mul(a, d), B.add(B.mul(a, e), B.mul(b, d)), B.add(B.mul(a, f), B.mul(c, d)))

    def name(e):
        a, b, c = e
        terms = []
        for coeff, mono in ((c, "y"), (b, "x")):
            if coeff:
                terms.append(mono if coeff == 1 else f"{coeff}{mono}")
        if a:
            terms.append(str(a))
        return "+".join(terms) or "0"

    names = [name(e) for e in elems]
    add = [[index[tuple(B.add(x, y) for x, y in zip(u, v))] for v in elems] for u in elems]
    mult = [[index[mul(u, v)] for v in elems] for u in elems]
    return FiniteRing(names, add, mult, index[(0, 0, 0)], index[(1, 0, 0)], spec)


def direct_product(factors: Sequence[FiniteRing], cap: int | None = None, spec=None) -> FiniteRing:
    """Componentwise product; element names are tuples of factor names."""
    if len(factors) < 2:
        raise InvalidSpec("a product needs at least two factors")
    order = math.prod(f.order for f in factors)
    if cap is not None and order > cap:
        raise InvalidSpec(f"product of order {order} exceeds the size cap {cap}")
    elems = list(itertools.product(*(f.elements for f in factors)))
    index = {e: i for i, e in enumerate(elems)}
    names = ["(" + ",".join(f.names[c] for f, c in zip(factors, e)) + ")" for e in elems]
    add = [
        [index[tuple(f.add_table[x][y] for f, x, y in zip(factors, u, v))] for v in elems]
        for u in elems
    ]
    mul = [
        [index[tuple(f.mul_table[x][y] for f, x, y in zip(factors, u, v))] for v in elems]
        for u in elems
    ]
    if spec is None and all(f.spec is not None for f in factors):
        spec = Product(tuple(f.spec for f in factors))
    zero = index[tuple(f.zero for f in factors)]
    one = index[tuple(f.one for f in factors)]
    return FiniteRing(names, add, mul, zero, one, spec)


def build_ring(spec: RingSpec, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    """Materialize a ring expression.

    Raises :class:`InvalidSpec`, :class:`NonFiniteQuotient` or
    :class:`ReducibleDefiningPolynomial`.
    """
    if isinstance(spec, Modular):
        if not isinstance(spec.n, int) or spec.n < 2:
            raise InvalidSpec(f"Z{spec.n}: modulus must be an integer >= 2")
        if spec.n > cap:
            raise InvalidSpec(f"Z{spec.n} exceeds the size cap {cap}")
        return _modular(spec.n, spec)
    if isinstance(spec, GaloisField):
        if spec.q > cap:
            raise InvalidSpec(f"F{spec.q} exceeds the size cap {cap}")
        return _galois_field(spec)
    if isinstance(spec, QuotientUnivariate):
        return _quotient_univariate(spec, cap)
    if isinstance(spec, QuotientBivariateSquare):
        return _bivariate_square(spec, cap)
    if isinstance(spec, Product):
        if len(spec.factors) < 2:
            raise InvalidSpec("a product needs at least two factors")
        return direct_product([build_ring(f, cap) for f in spec.factors], cap, spec)
    raise InvalidSpec(f"not a ring spec: {spec!r}")
