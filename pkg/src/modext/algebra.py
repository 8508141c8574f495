"""Exact arithmetic: integer polynomials, fields (Q and GF(p)), matrix rank.

All computations are exact; no floating point enters anywhere.  Rationals
are `fractions.Fraction`, prime-field residues are plain ints in [0, p).
Matrix ranks are computed by fraction-free (Bareiss) elimination over the
integers for rational input and by modular elimination for GF(p).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .errors import DivisionByZeroPolynomial, InvalidInput


# ---------------------------------------------------------------------------
# integer polynomials


class IntPolynomial:
    """Univariate polynomial with arbitrary-precision integer coefficients.

    Coefficients are stored constant term first with trailing zeros trimmed;
    the zero polynomial has an empty coefficient tuple.  Instances are
    immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise InvalidInput(f"polynomial coefficients must be ints, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    # -- queries

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise DivisionByZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x):
        """Evaluate by Horner's rule; accepts int or Fraction."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other):
        return self + IntPolynomial([-c for c in other.coeffs])

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def exact_div(self, den: "IntPolynomial"):
        """Exact quotient self/den over Z, or None when not divisible."""
        return poly_exact_div(self, den)

    # -- constructors

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def t(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots) -> "IntPolynomial":
        """Monic product of (t - a) over the given integer roots."""
        out = cls.one()
        for a in roots:
            out = out * cls((-a, 1))
        return out

    # -- serialization

    def to_json(self) -> list:
        """Coefficient array, constant term first, as decimal strings."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "IntPolynomial":
        try:
            return cls([int(c) for c in data])
        except (TypeError, ValueError) as exc:
            raise InvalidInput(f"bad polynomial JSON: {data!r}") from exc

    # -- dunder plumbing

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                term = f"{mag}t" if k == 1 else f"{mag}t^{k}"
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append((" - " if c < 0 else " + ") + term)
        return "".join(parts)


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Product of two integer polynomials."""
    return a * b


def poly_exact_div(num: IntPolynomial, den: IntPolynomial):
    """Exact quotient num/den over Z[t].

    Returns the quotient polynomial when den divides num exactly (integer
    coefficients, zero remainder) and None otherwise.  Division by the zero
    polynomial raises DivisionByZeroPolynomial.
    """
    if den.is_zero:
        raise DivisionByZeroPolynomial("polynomial division by zero")
    if num.is_zero:
        return IntPolynomial()
    if num.degree < den.degree:
        return None
    rem = list(num.coeffs)
    d = den.coeffs
    lead = d[-1]
    q = [0] * (len(rem) - len(d) + 1)
    for k in range(len(q) - 1, -1, -1):
        top = rem[k + len(d) - 1]
        if top % lead != 0:
            return None
        q[k] = top // lead
        if q[k]:
            for j, c in enumerate(d):
                rem[k + j] -= q[k] * c
    if any(rem):
        return None
    return IntPolynomial(q)


# ---------------------------------------------------------------------------
# fields


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


class Field:
    """The rationals Q or a prime field GF(p).

    Scalars are `Fraction` for Q and ints in [0, p) for GF(p); the field
    object interprets them.  Construction of GF(q) for non-prime q is
    rejected: prime-power fields are out of scope here.
    """

    __slots__ = ("kind", "p")

    RATIONAL = "rational"
    GF = "gf"

    def __init__(self, kind: str, p: int | None = None):
        if kind == Field.RATIONAL:
            if p is not None:
                raise InvalidInput("rational field takes no characteristic")
        elif kind == Field.GF:
            if not isinstance(p, int) or not _is_prime(p):
                raise InvalidInput(f"GF({p!r}): characteristic must be a prime")
        else:
            raise InvalidInput(f"unknown field kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    @classmethod
    def rational(cls) -> "Field":
        return cls(Field.RATIONAL)

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls(Field.GF, p)

    @property
    def is_rational(self) -> bool:
        return self.kind == Field.RATIONAL

    # -- scalar arithmetic

    def of(self, value):
        """Coerce an int, Fraction, or 'a/b' string to a canonical scalar."""
        if self.is_rational:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            if isinstance(value, str):
                try:
                    return Fraction(value)
                except (ValueError, ZeroDivisionError) as exc:
                    raise InvalidInput(f"bad rational scalar {value!r}") from exc
            raise InvalidInput(f"bad rational scalar {value!r}")
        if isinstance(value, str):
            try:
                value = int(value)
            except ValueError as exc:
                raise InvalidInput(f"bad GF({self.p}) scalar {value!r}") from exc
        if not isinstance(value, int):
            raise InvalidInput(f"bad GF({self.p}) scalar {value!r}")
        return value % self.p

    def zero(self):
        return Fraction(0) if self.is_rational else 0

    def one(self):
        return Fraction(1) if self.is_rational else 1

    def add(self, a, b):
        return a + b if self.is_rational else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.is_rational else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.is_rational else (a * b) % self.p

    def neg(self, a):
        return -a if self.is_rational else (-a) % self.p

    def inv(self, a):
        if self.is_rational:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a) -> bool:
        return a == 0 if self.is_rational else a % self.p == 0

    # -- serialization

    def to_json(self) -> dict:
        if self.is_rational:
            return {"kind": "rational"}
        return {"kind": "gf", "p": self.p}

    @classmethod
    def from_json(cls, data) -> "Field":
        if not isinstance(data, dict) or "kind" not in data:
            raise InvalidInput(f"bad field descriptor {data!r}")
        if data["kind"] == "rational":
            return cls.rational()
        if data["kind"] == "gf":
            return cls.gf(data.get("p"))
        raise InvalidInput(f"unknown field kind {data['kind']!r}")

    def scalar_to_json(self, a):
        if self.is_rational:
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return int(a)

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "Q" if self.is_rational else f"GF({self.p})"


# ---------------------------------------------------------------------------
# matrices and rank


class FieldMatrix:
    """Immutable dense matrix over a Field, stored row-major."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows):
        coerced = tuple(tuple(field.of(x) for x in row) for row in rows)
        widths = {len(r) for r in coerced}
        if len(widths) > 1:
            raise InvalidInput("ragged matrix rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", coerced)

    def __setattr__(self, name, value):
        raise AttributeError("FieldMatrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def rank(self) -> int:
        return matrix_rank(self)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "rows": [[self.field.scalar_to_json(x) for x in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data) -> "FieldMatrix":
        try:
            field = Field.from_json(data["field"])
            return cls(field, data["rows"])
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"bad matrix JSON: {data!r}") from exc

    def __eq__(self, other):
        return (
            isinstance(other, FieldMatrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"FieldMatrix({self.field!r}, {self.nrows}x{self.ncols})"


def integer_row_rank(rows) -> int:
    """Rank of an integer matrix (list of row lists) by Bareiss elimination.

    Fraction-free: every division is exact, so the computation stays in Z.
    The input rows are consumed.
    """
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, nrows):
            q = rows[i][col]
            row_i = rows[i]
            row_r = rows[rank]
            for j in range(col + 1, ncols):
                row_i[j] = (p * row_i[j] - q * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def gf_row_rank(rows, p: int) -> int:
    """Rank of a matrix over GF(p); rows are lists of ints, consumed."""
    rows = [[x % p for x in r] for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        row_r = rows[rank]
        for j in range(col, ncols):
            row_r[j] = row_r[j] * inv % p
        for i in range(rank + 1, nrows):
            q = rows[i][col]
            if q:
                row_i = rows[i]
                for j in range(col, ncols):
                    row_i[j] = (row_i[j] - q * row_r[j]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def _clear_row_denominators(row) -> list:
    """Scale a row of Fractions to integers (rank-preserving)."""
    lcm = 1
    for x in row:
        d = x.denominator
        g = gcd(lcm, d)
        lcm = lcm // g * d
    return [int(x * lcm) for x in row]


def matrix_rank(m: FieldMatrix) -> int:
    """Exact rank of a FieldMatrix."""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    if m.field.is_rational:
        return integer_row_rank([_clear_row_denominators(r) for r in m.rows])
    return gf_row_rank([list(r) for r in m.rows], m.field.p)


def rref(field: Field, rows):
    """Reduced row echelon form over the field.

    Returns (basis_rows, pivot_columns) where basis_rows are the nonzero
    reduced rows (a basis of the row space) and pivot_columns their pivot
    indices, both as tuples.
    """
    work = [[field.of(x) for x in row] for row in rows]
    nrows = len(work)
    ncols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, nrows):
            if not field.is_zero(work[i][col]):
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = field.inv(work[r][col])
        work[r] = [field.mul(x, inv) for x in work[r]]
        for i in range(nrows):
            if i != r and not field.is_zero(work[i][col]):
                q = work[i][col]
                work[i] = [field.sub(x, field.mul(q, y)) for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)
