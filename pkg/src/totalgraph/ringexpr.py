"""Parser for ring expressions such as ``Z4[x]/(2x,x^2)`` or ``Z2xF4``.

Grammar (case- and whitespace-insensitive)::

    expr := atom ( "x" atom )*
    atom := "Z" INT | "F" INT
          | "Z" INT "[x]/(" poly ("," poly)* ")"
          | "F" INT "[x]/(" poly ")"
          | "Z" INT "[x,y]/(x,y)^2"
    poly := sum of terms c, c*x, c*x^k
"""

from __future__ import annotations

from .ring import (
    GaloisField,
    Modular,
    Product,
    QuotientBivariateSquare,
    QuotientUnivariate,
    RingSpec,
    prime_power,
)


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        token = text[pos : pos + 8] if pos < len(text) else "<end>"
        super().__init__(f"{message} at position {pos} (near {token!r})")


class _Parser:
    def __init__(self, text: str):
        self.original = text
        # keep a map back to original positions for error messages
        self.chars = []
        self.origin = []
        for i, ch in enumerate(text):
            if not ch.isspace():
                self.chars.append(ch.lower())
                self.origin.append(i)
        self.s = "".join(self.chars)
        self.i = 0

    def error(self, message: str, at: int | None = None):
        at = self.i if at is None else at
        pos = self.origin[at] if at < len(self.origin) else len(self.original)
        raise ParseError(message, self.original, pos)

    def peek(self, k: int = 0) -> str:
        j = self.i + k
        return self.s[j] if j < len(self.s) else ""

    def expect(self, lit: str):
        if not self.s.startswith(lit, self.i):
            self.error(f"expected {lit!r}")
        self.i += len(lit)

    def integer(self) -> int:
        start = self.i
        while self.peek().isdigit():
            self.i += 1
        if start == self.i:
            self.error("expected an integer")
        return int(self.s[start : self.i])

    def expr(self) -> RingSpec:
        if not self.s:
            self.error("empty ring expression")
        factors = [self.atom()]
        while self.peek() == "x":
            self.i += 1
            if self.peek() not in ("z", "f"):
                self.error("empty product factor")
            factors.append(self.atom())
        if self.i != len(self.s):
            self.error("unexpected input")
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def atom(self) -> RingSpec:
        start = self.i
        kind = self.peek()
        if kind not in ("z", "f"):
            self.error("expected 'Z' or 'F'")
        self.i += 1
        num_at = self.i
        n = self.integer()
        if kind == "z":
            if n < 2:
                self.error(f"Z{n}: modulus must be at least 2", num_at)
            base: RingSpec = Modular(n)
        else:
            if prime_power(n) is None:
                self.error(f"F{n}: field order is not a prime power", num_at)
            base = GaloisField(n)
        if self.peek() != "[":
            return base
        if self.s.startswith("[x,y]/(x,y)^2", self.i):
            if kind != "z":
                self.error("the (x,y)^2 quotient is only defined over Z_n", start)
            self.i += len("[x,y]/(x,y)^2")
            return QuotientBivariateSquare(base)
        self.expect("[x]/(")
        rels = [self.poly()]
        while self.peek() == ",":
            self.i += 1
            rels.append(self.poly())
        self.expect(")")
        if kind == "f" and len(rels) != 1:
            self.error("a quotient of F_q takes exactly one relation", start)
        return QuotientUnivariate(base, tuple(rels))

    def poly(self) -> tuple[int, ...]:
        coeffs: dict[int, int] = {}
        first = True
        while True:
            sign = 1
            if self.peek() and self.peek() in "+-":
                sign = -1 if self.peek() == "-" else 1
                self.i += 1
            elif not first:
                break
            term_at = self.i
            c, deg = self.term()
            if c is None:
                self.error("malformed polynomial term", term_at)
            coeffs[deg] = coeffs.get(deg, 0) + sign * c
            first = False
            if self.peek() not in ("+", "-"):
                break
        top = max(coeffs)
        out = [0] * (top + 1)
        for d, c in coeffs.items():
            out[d] = c
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return tuple(out)

    def term(self):
        c = None
        if self.peek().isdigit():
            c = self.integer()
            if self.peek() == "*":
                self.i += 1
                if self.peek() != "x":
                    return None, 0
        if self.peek() == "x":
            self.i += 1
            deg = 1
            if self.peek() == "^":
                self.i += 1
                deg = self.integer()
            return (1 if c is None else c), deg
        return c, 0


def parse_ring_expression(text: str) -> RingSpec:
    """Parse ``text`` into a ring spec; raises :class:`ParseError` with a position."""
    return _Parser(text).expr()
