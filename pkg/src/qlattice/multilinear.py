"""Multilinear (pseudo-Boolean) polynomials over 0/1 qubit variables.

Any function on the ``2**n`` computational basis states of ``n`` qubits has a
unique expansion as a rational combination of products of distinct qubit
variables. The expansion coefficients solve ``B_n c = f`` where ``B_n`` is
the 0/1 basis matrix whose rows are basis states (binary counting, ``q1``
most significant) and whose columns are monomials ordered by degree and then
lexicographically by index set.

Variables are 1-based: ``q1 .. qn``. Monomials are sorted tuples of indices;
``()`` is the constant term.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import linalg
from .errors import DimensionError, ResourceLimitError, SpecParseError
from .rational import format_rational

MAX_QUBITS = 20

Monomial = tuple


def _guard(n):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("qubit count must be an int")
    if not 1 <= n <= MAX_QUBITS:
        raise ResourceLimitError(
            f"qubit count {n} outside 1..{MAX_QUBITS}", required=n, limit=MAX_QUBITS
        )


def monomial(*indices) -> Monomial:
    """Build a monomial from 1-based variable indices; repeats collapse (q*q = q)."""
    for i in indices:
        if not isinstance(i, int) or i < 1:
            raise ValueError(f"variable index must be a positive int, got {i!r}")
    return tuple(sorted(set(indices)))


def monomial_key(m: Monomial):
    """Sort key: degree first, then lexicographic index tuple."""
    return (len(m), m)


def monomial_order(n: int) -> list[Monomial]:
    """Column order of the basis matrix: 1, q1..qn, q1q2, q1q3, ..., q1..qn."""
    _guard(n)
    return [c for k in range(n + 1) for c in combinations(range(1, n + 1), k)]


@dataclass(frozen=True)
class StateTable:
    qubit_count: int
    rows: tuple

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)


def state_bits(index: int, n: int) -> tuple:
    """Bits ``(q1, ..., qn)`` of basis state ``index``, ``q1`` most significant."""
    return tuple((index >> (n - 1 - j)) & 1 for j in range(n))


def state_table(n: int) -> StateTable:
    _guard(n)
    return StateTable(n, tuple(state_bits(r, n) for r in range(1 << n)))


@dataclass(frozen=True)
class BasisMatrix:
    qubit_count: int
    entries: tuple
    column_order: tuple

    @property
    def size(self):
        return len(self.entries)

    def as_lists(self):
        return [list(r) for r in self.entries]


def _monomial_value(m, bits):
    for i in m:
        if not bits[i - 1]:
            return 0
    return 1


def basis_matrix(n: int) -> BasisMatrix:
    _guard(n)
    cols = monomial_order(n)
    table = state_table(n)
    entries = tuple(tuple(_monomial_value(c, row) for c in cols) for row in table.rows)
    return BasisMatrix(n, entries, tuple(cols))


@lru_cache(maxsize=None)
def _inverse_columns(n):
    # Sparse rows of B_n^{-1}: coefficient j = sum_r inv[j][r] * f[r].
    inv = linalg.inverse(basis_matrix(n).entries)
    return tuple(tuple((r, v) for r, v in enumerate(row) if v) for row in inv)


def basis_inverse(n: int) -> list[list[Fraction]]:
    _guard(n)
    size = 1 << n
    out = [[Fraction(0)] * size for _ in range(size)]
    for j, row in enumerate(_inverse_columns(n)):
        for r, v in row:
            out[j][r] = v
    return out


def _check_values(n, values):
    _guard(n)
    values = [Fraction(v) for v in values]
    if len(values) != 1 << n:
        raise DimensionError(f"expected {1 << n} values for n={n}, got {len(values)}")
    return values


def solve_coefficients(n: int, values: Sequence) -> list[Fraction]:
    """Coefficients ``c`` with ``B_n c = values`` under :func:`monomial_order`.

    ``B_n^{-1}`` is computed once per ``n`` by exact Gauss-Jordan elimination
    and reused.
    """
    values = _check_values(n, values)
    # integer arithmetic over a common denominator; exact and much cheaper
    den = math.lcm(*(v.denominator for v in values))
    nums = [v.numerator * (den // v.denominator) for v in values]
    return [
        Fraction(sum(v.numerator * nums[r] for r, v in row), den)
        if all(v.denominator == 1 for _, v in row)
        else sum((v * Fraction(nums[r], den) for r, v in row), Fraction(0))
        for row in _inverse_columns(n)
    ]


class MultilinearPolynomial:
    """Exact polynomial with degree at most one in every variable.

    Immutable. ``terms`` maps a monomial (sorted index tuple) to a nonzero
    Fraction coefficient.
    """

    __slots__ = ("_n", "_terms", "_hash", "_masks")

    def __init__(self, variable_count: int, terms: Mapping | Iterable = ()):
        if variable_count < 0:
            raise ValueError("variable_count must be >= 0")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for mono, coeff in items:
            mono = monomial(*mono)
            if mono and mono[-1] > variable_count:
                raise DimensionError(
                    f"monomial {mono} uses a variable beyond q{variable_count}"
                )
            acc[mono] = acc.get(mono, 0) + Fraction(coeff)
        self._n = variable_count
        self._terms = {m: c for m, c in sorted(acc.items(), key=lambda t: monomial_key(t[0])) if c}
        self._hash = None
        self._masks = None

    def _masked_terms(self):
        # (common denominator, [(mask, scaled numerator)]); bit i-1 stands for q_i
        if self._masks is None:
            den = math.lcm(1, *(c.denominator for c in self._terms.values()))
            self._masks = (den, [(sum(1 << (i - 1) for i in m), c.numerator * (den // c.denominator))
                                 for m, c in self._terms.items()])
        return self._masks

    @classmethod
    def constant(cls, value, variable_count=0):
        return cls(variable_count, {(): value})

    @classmethod
    def variable(cls, index, variable_count=None):
        return cls(variable_count or index, {(index,): 1})

    @property
    def variable_count(self):
        return self._n

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, mono) -> Fraction:
        return self._terms.get(monomial(*mono), Fraction(0))

    def degree(self):
        return max((len(m) for m in self._terms), default=0)

    def is_zero(self):
        return not self._terms

    def with_variable_count(self, n):
        return MultilinearPolynomial(n, self._terms)

    def __call__(self, assignment):
        return evaluate(self, assignment)

    def __add__(self, other):
        return poly_add(self, _coerce(other, self._n))

    __radd__ = __add__

    def __neg__(self):
        return poly_scale(self, -1)

    def __sub__(self, other):
        return poly_add(self, poly_scale(_coerce(other, self._n), -1))

    def __rsub__(self, other):
        return poly_add(_coerce(other, self._n), poly_scale(self, -1))

    def __mul__(self, other):
        if isinstance(other, MultilinearPolynomial):
            return poly_mul(self, other)
        return poly_scale(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, MultilinearPolynomial):
            return self._n == other._n and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, tuple(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"MultilinearPolynomial({self._n}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _coerce(value, n):
    if isinstance(value, MultilinearPolynomial):
        return value
    return MultilinearPolynomial.constant(Fraction(value), n)


def poly_from_values(n: int, values: Sequence) -> MultilinearPolynomial:
    """Interpolating polynomial: evaluates to ``values[r]`` on state-table row ``r``."""
    coeffs = solve_coefficients(n, values)
    return MultilinearPolynomial(n, zip(monomial_order(n), coeffs))


def coefficient_vector(p: MultilinearPolynomial, n: int | None = None) -> list[Fraction]:
    """Coefficients of ``p`` laid out in basis-matrix column order."""
    n = p.variable_count if n is None else n
    return [p.coefficient(m) for m in monomial_order(n)]


def evaluate(p: MultilinearPolynomial, assignment: Sequence[int]) -> Fraction:
    if len(assignment) != p.variable_count:
        raise DimensionError(
            f"assignment has {len(assignment)} bits, polynomial has {p.variable_count} variables"
        )
    a = 0
    for i, bit in enumerate(assignment):
        if bit:
            a |= 1 << i
    den, terms = p._masked_terms()
    total = 0
    for mask, num in terms:
        if mask & a == mask:
            total += num
    return Fraction(total, den)


def poly_add(p: MultilinearPolynomial, q: MultilinearPolynomial) -> MultilinearPolynomial:
    n = max(p.variable_count, q.variable_count)
    return MultilinearPolynomial(n, list(p.items()) + list(q.items()))


def poly_scale(p: MultilinearPolynomial, r) -> MultilinearPolynomial:
    r = Fraction(r)
    return MultilinearPolynomial(p.variable_count, ((m, c * r) for m, c in p.items()))


def poly_mul(p: MultilinearPolynomial, q: MultilinearPolynomial) -> MultilinearPolynomial:
    n = max(p.variable_count, q.variable_count)
    acc: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            # q_i * q_i = q_i on 0/1 variables
            m = tuple(sorted(set(m1) | set(m2)))
            acc[m] = acc.get(m, 0) + c1 * c2
    return MultilinearPolynomial(n, acc)


# -- canonical text form ------------------------------------------------------


def _format_monomial(m):
    return "*".join(f"q{i}" for i in m)


def format_poly(p: MultilinearPolynomial) -> str:
    """Canonical text, e.g. ``1 - 2*q1 - q2 + 2*q1*q2 - q2*q3 + 2*q1*q2*q3``."""
    if p.is_zero():
        return "0"
    parts = []
    for mono, c in p.items():
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = _format_monomial(mono)
        else:
            body = f"{format_rational(mag)}*{_format_monomial(mono)}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


_TERM_RE = re.compile(
    r"""
    \s*(?P<sign>[+-])?\s*
    (?P<body>
        (?:\d+(?:/\d+)?|q\d+)
        (?:\s*\*?\s*(?:\d+(?:/\d+)?|q\d+))*
    )\s*
    """,
    re.VERBOSE,
)
_FACTOR_RE = re.compile(r"\d+(?:/\d+)?|q\d+")


def parse_poly(text: str, variable_count: int | None = None) -> MultilinearPolynomial:
    """Parse the canonical text form.

    Also accepts factors in any order and juxtaposed variables (``q3q1``), so
    hand-written polynomials can be read back for comparison.
    """
    text = text.strip()
    if not text:
        raise SpecParseError("empty polynomial")
    pos = 0
    terms = []
    max_var = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise SpecParseError(f"cannot parse polynomial near {text[pos:]!r}")
        if terms and m.group("sign") is None:
            raise SpecParseError(f"missing operator before {m.group('body')!r}")
        coeff = Fraction(-1 if m.group("sign") == "-" else 1)
        mono = []
        for factor in _FACTOR_RE.findall(m.group("body")):
            if factor.startswith("q"):
                idx = int(factor[1:])
                if idx < 1:
                    raise SpecParseError(f"bad variable {factor!r}")
                mono.append(idx)
                max_var = max(max_var, idx)
            else:
                coeff *= Fraction(factor)
        terms.append((tuple(mono), coeff))
        pos = m.end()
    n = max_var if variable_count is None else variable_count
    return MultilinearPolynomial(n, terms)
