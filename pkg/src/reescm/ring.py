"""Exact polynomial arithmetic over QQ or a prime field.

Variables live in a fixed enumeration per ring; the enumeration is already
sorted in strictly decreasing order, so lexicographic monomial comparison is
plain tuple comparison of dense exponent vectors.  The default enumeration
(diag-lex) puts every z above every x above every y, with

    z[i,j] < z[l,k]  iff  i > l, or i == l and j > k
    x[i,j] < x[l,k]  iff  i > l, or i == l and j < k      (y identical)

An elimination ring prepends the auxiliary variable t to the same order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
import re


# ---------------------------------------------------------------------------
# coefficient fields


class Rationals:
    """The field QQ.  Polynomial coefficients are Fractions."""

    kind = "rationals"

    def coerce(self, c):
        return Fraction(c)

    def is_zero(self, c):
        return c == 0

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return 1 / Fraction(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """GF(p) with canonical representatives in [0, p)."""

    kind = "prime-field"

    def __init__(self, p: int):
        if p < 2 or p >= 2**31 or any(p % q == 0 for q in range(2, min(p, 65536)) if q * q <= p):
            raise ValueError(f"modulus {p} is not a prime below 2^31")
        self.p = p

    def coerce(self, c):
        if isinstance(c, Fraction):
            den = c.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return c.numerator * pow(den, -1, self.p) % self.p
        return int(c) % self.p

    def is_zero(self, c):
        return c % self.p == 0

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return pow(a, -1, self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = Rationals()


# ---------------------------------------------------------------------------
# variables


@dataclass(frozen=True, order=False)
class Variable:
    """An indexed variable x/y/z[row,col], or the auxiliary Rees variable t."""

    family: str  # "x", "y", "z" or "t"
    row: int = 0
    col: int = 0

    def __str__(self):
        if self.family == "t":
            return "t"
        return f"{self.family}[{self.row},{self.col}]"


def diag_lex_variables(m: int, n: int) -> list[Variable]:
    """All 3mn variables of k[X,Y,Z], listed in decreasing diag-lex order."""
    out = []
    for i in range(1, m + 1):  # z: rows ascending, cols ascending
        for j in range(1, n + 1):
            out.append(Variable("z", i, j))
    for fam in ("x", "y"):  # x, y: rows ascending, cols descending
        for i in range(1, m + 1):
            for j in range(n, 0, -1):
                out.append(Variable(fam, i, j))
    return out


# ---------------------------------------------------------------------------
# ring and polynomials


class PolyRing:
    """A polynomial ring with a fixed variable enumeration and field.

    The enumeration is decreasing in the active term order, so monomials are
    exponent tuples compared with plain tuple comparison (lex).
    """

    def __init__(self, variables: list[Variable], field=QQ):
        self.variables = list(variables)
        self.field = field
        self.nvars = len(self.variables)
        self.index = {v: i for i, v in enumerate(self.variables)}
        if len(self.index) != self.nvars:
            raise ValueError("duplicate variables in ring")
        self._unit = (0,) * self.nvars

    # -- monomial helpers (monomials are plain exponent tuples) --

    @property
    def unit_monomial(self):
        return self._unit

    def monomial(self, *vars_and_exps) -> tuple:
        exps = [0] * self.nvars
        for item in vars_and_exps:
            if isinstance(item, Variable):
                exps[self.index[item]] += 1
            else:
                v, e = item
                exps[self.index[v]] += e
        return tuple(exps)

    def mono_mul(self, a: tuple, b: tuple) -> tuple:
        return tuple(x + y for x, y in zip(a, b))

    def mono_divides(self, a: tuple, b: tuple) -> bool:
        return all(x <= y for x, y in zip(a, b))

    def mono_div(self, a: tuple, b: tuple) -> tuple:
        return tuple(x - y for x, y in zip(a, b))

    def mono_lcm(self, a: tuple, b: tuple) -> tuple:
        return tuple(max(x, y) for x, y in zip(a, b))

    def mono_degree(self, a: tuple) -> int:
        return sum(a)

    def mono_str(self, a: tuple) -> str:
        if not any(a):
            return "1"
        parts = []
        for i, e in enumerate(a):
            if e == 1:
                parts.append(str(self.variables[i]))
            elif e > 1:
                parts.append(f"{self.variables[i]}^{e}")
        return "*".join(parts)

    def mono_support(self, a: tuple) -> frozenset:
        return frozenset(self.variables[i] for i, e in enumerate(a) if e)

    # -- polynomial constructors --

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return Polynomial(self, ((self._unit, self.field.coerce(1)),))

    def var(self, v: Variable) -> "Polynomial":
        return Polynomial(self, ((self.monomial(v), self.field.coerce(1)),))

    def term(self, coeff, mono: tuple) -> "Polynomial":
        c = self.field.coerce(coeff)
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, ((mono, c),))

    def const(self, c) -> "Polynomial":
        return self.term(c, self._unit)

    def from_terms(self, terms) -> "Polynomial":
        """Build a polynomial from unsorted (monomial, coeff) pairs."""
        acc: dict[tuple, object] = {}
        f = self.field
        for mono, c in terms:
            c = f.coerce(c)
            if mono in acc:
                acc[mono] = f.add(acc[mono], c)
            else:
                acc[mono] = c
        cleaned = tuple(
            (m, c) for m, c in sorted(acc.items(), reverse=True) if not f.is_zero(c)
        )
        return Polynomial(self, cleaned)

    def change_field(self, field) -> "PolyRing":
        return PolyRing(self.variables, field)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.variables == self.variables
            and other.field == self.field
        )

    def __hash__(self):
        return hash((tuple(self.variables), self.field))

    def __repr__(self):
        return f"PolyRing({self.nvars} vars, {self.field!r})"


class Polynomial:
    """Immutable sparse polynomial: terms sorted strictly decreasing."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    # -- queries --

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lm(self) -> tuple:
        """Leading monomial."""
        return self.terms[0][0]

    @property
    def lc(self):
        """Leading coefficient."""
        return self.terms[0][1]

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m, _ in self.terms)

    def monomials(self):
        return [m for m, _ in self.terms]

    # -- arithmetic --

    def _check(self, other: "Polynomial"):
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return self.ring.from_terms(list(self.terms) + list(other.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        f = self.ring.field
        return self.ring.from_terms(
            list(self.terms) + [(m, f.neg(c)) for m, c in other.terms]
        )

    def __neg__(self) -> "Polynomial":
        f = self.ring.field
        return Polynomial(self.ring, tuple((m, f.neg(c)) for m, c in self.terms))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        f = self.ring.field
        mul = self.ring.mono_mul
        out = []
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                out.append((mul(m1, m2), f.mul(c1, c2)))
        return self.ring.from_terms(out)

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f.coerce(c)
        if f.is_zero(c):
            return self.ring.zero()
        return Polynomial(self.ring, tuple((m, f.mul(k, c)) for m, k in self.terms))

    def mul_term(self, coeff, mono: tuple) -> "Polynomial":
        f = self.ring.field
        coeff = f.coerce(coeff)
        if f.is_zero(coeff):
            return self.ring.zero()
        mul = self.ring.mono_mul
        return Polynomial(
            self.ring, tuple((mul(m, mono), f.mul(c, coeff)) for m, c in self.terms)
        )

    def normalized(self) -> "Polynomial":
        """Canonical unit multiple: primitive with positive lead over QQ,
        monic over a prime field."""
        if not self.terms:
            return self
        f = self.ring.field
        if f is QQ or isinstance(f, Rationals):
            den = 1
            for _, c in self.terms:
                den = den * c.denominator // gcd(den, c.denominator)
            nums = [c.numerator * (den // c.denominator) for _, c in self.terms]
            g = 0
            for v in nums:
                g = gcd(g, v)
            if nums[0] < 0:
                g = -g
            return Polynomial(
                self.ring,
                tuple(
                    (m, Fraction(v // g)) for (m, _), v in zip(self.terms, nums)
                ),
            )
        linv = f.inv(self.terms[0][1])
        return Polynomial(
            self.ring, tuple((m, f.mul(c, linv)) for m, c in self.terms)
        )

    def to_field(self, target_ring: PolyRing) -> "Polynomial":
        """Map the coefficients into another field (same variables)."""
        if target_ring.variables != self.ring.variables:
            raise ValueError("variable enumerations differ")
        return target_ring.from_terms(self.terms)

    def evaluate(self, assignment: dict) -> object:
        """Evaluate at a point given as Variable -> field element."""
        f = self.ring.field
        total = f.coerce(0)
        vals = [f.coerce(assignment[v]) for v in self.ring.variables]
        for m, c in self.terms:
            acc = c
            for i, e in enumerate(m):
                for _ in range(e):
                    acc = f.mul(acc, vals[i])
            total = f.add(total, acc)
        return total

    # -- comparisons / hashing --

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash(self.terms)

    # -- printing --

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        parts = []
        for idx, (m, c) in enumerate(self.terms):
            neg = (isinstance(c, Fraction) and c < 0) or (
                not isinstance(c, Fraction) and False
            )
            mag = -c if neg else c
            ms = ring.mono_str(m)
            if ms == "1":
                body = str(mag)
            elif mag == 1:
                body = ms
            else:
                body = f"{mag}*{ms}"
            if idx == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"<poly {self} >"


# ---------------------------------------------------------------------------
# text round-trip

_VAR_RE = re.compile(r"([xyzt])(?:\[(\d+),(\d+)\])?(?:\^(\d+))?")


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse the dump format: terms joined by ' + '/' - ', factors by '*'."""
    text = text.strip()
    if text == "0":
        return ring.zero()
    text = text.replace("- ", "+ -").replace("−", "-")
    terms = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:].strip()
        coeff = Fraction(1)
        exps = [0] * ring.nvars
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                continue
            m = _VAR_RE.fullmatch(factor)
            if m and m.group(1):
                fam = m.group(1)
                if fam == "t":
                    v = Variable("t")
                else:
                    v = Variable(fam, int(m.group(2)), int(m.group(3)))
                e = int(m.group(4)) if m.group(4) else 1
                exps[ring.index[v]] += e
            else:
                coeff *= Fraction(factor)
        terms.append((tuple(exps), sign * coeff))
    return ring.from_terms(terms)


# ---------------------------------------------------------------------------
# matrices of polynomials


class VariableMatrix:
    """Rectangular grid of polynomials; rows may be empty blocks."""

    def __init__(self, rows: list[list[Polynomial]]):
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        self.rows = [list(r) for r in rows]

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def submatrix(self, rows: list[int], cols: list[int]) -> "VariableMatrix":
        for r in rows:
            if not 0 <= r < self.nrows:
                raise IndexError(f"row {r} out of range")
        for c in cols:
            if not 0 <= c < self.ncols:
                raise IndexError(f"col {c} out of range")
        return VariableMatrix([[self.rows[r][c] for c in cols] for r in rows])

    @staticmethod
    def stack(blocks: list["VariableMatrix"]) -> "VariableMatrix":
        rows = []
        for b in blocks:
            rows.extend(b.rows)
        return VariableMatrix(rows)

    def determinant(self) -> Polynomial:
        if self.nrows != self.ncols:
            raise ValueError(f"determinant of {self.nrows}x{self.ncols} matrix")
        if self.nrows == 0:
            raise ValueError("determinant of empty matrix")
        return _det(self.rows)


def _det(rows: list[list[Polynomial]]) -> Polynomial:
    n = len(rows)
    ring = rows[0][0].ring
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    # Laplace expansion along the first row, recursing on column subsets.
    total = ring.zero()
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        cof = rows[0][j] * _det(minor)
        total = total + cof if j % 2 == 0 else total - cof
    return total
