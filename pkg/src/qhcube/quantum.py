"""The quantum cohomology ring Q[x_1..x_n, q_1..q_n] / <x_i*x_i - q_i>.

Classes are kept in normal form (every x-exponent is 0 or 1), so the basis
over the coefficient ring Q[q_1..q_n] consists of the square-free monomials
x_I.  Multiplication in normal form is the quantum product; reducing by
x_i^2 -> 0 instead gives the classical cup product.  The maximal Seidel
element is x_1*...*x_n and acts on the basis by complementation twisted by
q-monomials.  ``solve_structure_constants`` re-derives the whole product
table from degree constraints and associativity against the Seidel element
alone, providing an independent route to the same ring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Union

from .hypercube import SphereClass, render_subset
from .linsolve import InconsistentError, solve_unique_sparse
from .rings import PolyRing, Polynomial, RewriteSystem, Scalar


class DimensionMismatchError(ValueError):
    """Operands belong to quantum rings with different n."""


@lru_cache(maxsize=None)
def quantum_ring(n: int) -> "QuantumRing":
    return QuantumRing(n)


class QuantumRing:
    """Context object for a fixed n: variables, relations, and constructors.

    Variables are declared in the order q_1..q_n, x_1..x_n with degrees 4 and
    2; monomials therefore render with the q-part first, e.g. ``q1*x2``.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        names = [f"q{i}" for i in range(1, n + 1)] + [f"x{i}" for i in range(1, n + 1)]
        degrees = [4] * n + [2] * n
        self.poly_ring = PolyRing(names, degrees)
        self.quantum_rules = RewriteSystem(
            self.poly_ring,
            {f"x{i}": (2, self.poly_ring.var(f"q{i}")) for i in range(1, n + 1)},
        )
        self.classical_rules = RewriteSystem(
            self.poly_ring, {f"x{i}": (2, 0) for i in range(1, n + 1)}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuantumRing):
            return NotImplemented
        return self.n == other.n

    def __hash__(self) -> int:
        return hash(("QuantumRing", self.n))

    def __repr__(self) -> str:
        return f"QuantumRing(n={self.n})"

    def wrap(self, poly: Polynomial) -> "QuantumClass":
        return QuantumClass(self, poly.normal_form(self.quantum_rules))

    def zero(self) -> "QuantumClass":
        return QuantumClass(self, self.poly_ring.zero())

    def one(self) -> "QuantumClass":
        return QuantumClass(self, self.poly_ring.one())

    def const(self, value: Scalar) -> "QuantumClass":
        return QuantumClass(self, self.poly_ring.const(value))

    def x(self, i: int) -> "QuantumClass":
        self._check_index(i)
        return QuantumClass(self, self.poly_ring.var(f"x{i}"))

    def q(self, i: int) -> "QuantumClass":
        self._check_index(i)
        return QuantumClass(self, self.poly_ring.var(f"q{i}"))

    def x_set(self, members: Iterable[int]) -> "QuantumClass":
        """The basis monomial x_I."""
        members = frozenset(members)
        for i in members:
            self._check_index(i)
        exps = {f"x{i}": 1 for i in members}
        return QuantumClass(self, self.poly_ring.monomial(exps))

    def q_monomial(self, d: Union[SphereClass, Iterable[int]]) -> "QuantumClass":
        """The Novikov monomial q^d attached to the curve class sum d_i A_i."""
        coeffs = d.coeffs if isinstance(d, SphereClass) else tuple(int(v) for v in d)
        if len(coeffs) != self.n:
            raise ValueError("curve class has the wrong length")
        if any(v < 0 for v in coeffs):
            raise ValueError("only effective classes have Novikov monomials")
        exps = {f"q{i}": v for i, v in zip(range(1, self.n + 1), coeffs) if v}
        return QuantumClass(self, self.poly_ring.monomial(exps))

    def basis_subsets(self) -> list[frozenset[int]]:
        out = []
        for k in range(self.n + 1):
            for combo in itertools.combinations(range(1, self.n + 1), k):
                out.append(frozenset(combo))
        return out

    def monomial_parts(self, exps: tuple[int, ...]) -> tuple[tuple[int, ...], frozenset[int]]:
        """Split a ring exponent tuple into (q exponents, x support)."""
        q_part = exps[: self.n]
        x_part = exps[self.n :]
        return q_part, frozenset(i + 1 for i, e in enumerate(x_part) if e)

    def _check_index(self, i: int):
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range 1..{self.n}")


class QuantumClass:
    """An element of the quantum cohomology ring, in normal form.

    ``*`` is the quantum product; ``cup`` is the classical product.  Addition,
    negation and scalar multiples behave as expected.  Instances are immutable.
    """

    __slots__ = ("ring", "poly")

    def __init__(self, ring: QuantumRing, poly: Polynomial):
        self.ring = ring
        self.poly = poly

    def _other(self, value) -> "QuantumClass | None":
        if isinstance(value, QuantumClass):
            if value.ring.n != self.ring.n:
                raise DimensionMismatchError("operands have different n")
            return value
        if isinstance(value, (int, Fraction)):
            return self.ring.const(value)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return QuantumClass(self.ring, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return QuantumClass(self.ring, -self.poly)

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        """Quantum product: polynomial product reduced by x_i^2 -> q_i."""
        if isinstance(other, (int, Fraction)):
            return QuantumClass(self.ring, self.poly * other)
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self.ring.wrap(self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, QuantumClass):
            return NotImplemented
        return self.ring.n == other.ring.n and self.poly == other.poly

    def __hash__(self) -> int:
        return hash(self.poly)

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __str__(self) -> str:
        return str(self.poly)

    def __repr__(self) -> str:
        return f"QuantumClass(n={self.ring.n}, {self.poly})"

    def cup(self, other: "QuantumClass") -> "QuantumClass":
        """Classical cup product: the same product reduced by x_i^2 -> 0."""
        other = self._other(other)
        return QuantumClass(
            self.ring, (self.poly * other.poly).normal_form(self.ring.classical_rules)
        )

    def pairing(self, other: "QuantumClass") -> Fraction:
        """Integral of the cup product: the coefficient of x_1*...*x_n."""
        other = self._other(other)
        top = (0,) * self.ring.n + (1,) * self.ring.n
        return (
            (self.poly * other.poly)
            .normal_form(self.ring.classical_rules)
            .coefficient(top)
        )

    def seidel(self) -> "QuantumClass":
        """Quantum multiplication by the maximal Seidel element x_1*...*x_n."""
        return self.ring.x_set(range(1, self.ring.n + 1)) * self

    def graded_degree(self):
        return self.poly.graded_degree()

    def coefficient(self, members: Iterable[int], d: Iterable[int] | None = None) -> Fraction:
        """Coefficient of the basis monomial x_I q^d."""
        n = self.ring.n
        d = (0,) * n if d is None else tuple(int(v) for v in d)
        exps = list(d) + [0] * n
        for i in frozenset(members):
            exps[n + i - 1] = 1
        return self.poly.coefficient(tuple(exps))

    def is_q_free(self) -> bool:
        return all(
            all(e == 0 for e in mono[: self.ring.n]) for mono in self.poly.terms
        )

    def to_json_terms(self) -> list[dict]:
        """Canonical JSON form: one entry per term, in canonical order."""
        out = []
        for mono, coeff in self.poly.terms.items():
            q_part, x_support = self.ring.monomial_parts(mono)
            out.append(
                {
                    "monomial": {"x": sorted(x_support), "q": list(q_part)},
                    "coeff": str(coeff),
                }
            )
        return out


#: Shape of ``QuantumClass.to_json_terms`` output.
QUANTUM_CLASS_JSON_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "monomial": {
                "type": "object",
                "properties": {
                    "x": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                    "q": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                },
                "required": ["x", "q"],
                "additionalProperties": False,
            },
            "coeff": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
        },
        "required": ["monomial", "coeff"],
        "additionalProperties": False,
    },
}


@dataclass(frozen=True)
class GWQuery:
    """Insertion data (x_I, x_J, x_K) and an effective curve class."""

    i: frozenset[int]
    j: frozenset[int]
    k: frozenset[int]
    d: SphereClass

    def __post_init__(self):
        object.__setattr__(self, "i", frozenset(self.i))
        object.__setattr__(self, "j", frozenset(self.j))
        object.__setattr__(self, "k", frozenset(self.k))
        if not self.d.is_effective():
            raise ValueError("curve class must be effective")


def gw_coefficient(ring: QuantumRing, query: GWQuery) -> Fraction:
    """Three-point genus-zero invariant <x_I, x_J, x_K> in class sum d_i A_i.

    Extracted from the quantum product: because the intersection pairing is
    the complement permutation on the basis, the invariant is the coefficient
    of x_{K^c} q^d in x_I * x_J.  A query violating the degree selection rule
    |I|+|J|+|K| = n + 2*sum(d) is zero without further computation.
    """
    n = ring.n
    for member in itertools.chain(query.i, query.j, query.k):
        ring._check_index(member)
    if len(query.d.coeffs) != n:
        raise ValueError("curve class has the wrong length")
    if len(query.i) + len(query.j) + len(query.k) != n + 2 * sum(query.d.coeffs):
        return Fraction(0)
    product = ring.x_set(query.i) * ring.x_set(query.j)
    k_complement = frozenset(range(1, n + 1)) - query.k
    return product.coefficient(k_complement, query.d.coeffs)


def positivity_decomposition(
    a: QuantumClass, b: QuantumClass
) -> tuple[QuantumClass, QuantumClass]:
    """Split a quantum product into its classical part and its quantum tail.

    The tail carries only monomials with positive total q-exponent, and each
    tail term drops in x-degree by four times its total q-exponent.
    """
    classical = a.cup(b)
    tail = (a * b) - classical
    return classical, tail


# ---------------------------------------------------------------------------
# Structure-constant solver


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of `total` into `parts` non-negative integers."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _quantum_term_candidates(
    n: int, size_i: int
) -> Iterator[tuple[frozenset[int], tuple[int, ...]]]:
    """Basis monomials x_J q^d that can appear in a product of degree 2(size_i+1)."""
    for s in range(1, (size_i + 1) // 2 + 1):
        size_j = size_i + 1 - 2 * s
        for combo in itertools.combinations(range(1, n + 1), size_j):
            for d in _compositions(s, n):
                yield frozenset(combo), d


def solve_structure_constants(
    n: int, limit: int = 4
) -> dict[tuple[frozenset[int], int], QuantumClass]:
    """Re-derive every product x_I * x_j from first principles.

    Each product is an unknown combination of basis monomials x_J q^d
    constrained by (i) degree homogeneity, (ii) the classical part being the
    cup product, and (iii) associativity against the known action of the
    maximal Seidel element, x_S * x_J = x_{J^c} q_J.  The resulting linear
    system over Q has a unique solution, which is checked against the normal
    form product before being returned.

    Raises UnderdeterminedError or InconsistentError when the system
    misbehaves (it never does for n within the configured bound).
    """
    if n > limit:
        raise ValueError(f"n={n} exceeds the configured bound {limit}")
    ring = quantum_ring(n)
    full = frozenset(range(1, n + 1))
    subsets = ring.basis_subsets()
    ones = {i: tuple(1 if j == i else 0 for j in range(1, n + 1)) for i in range(1, n + 1)}

    def q_sum(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(x + y for x, y in zip(a, b))

    def subset_exponents(members: frozenset[int]) -> tuple[int, ...]:
        return tuple(1 if i in members else 0 for i in range(1, n + 1))

    columns: dict[tuple[frozenset[int], int, frozenset[int], tuple[int, ...]], int] = {}
    row_terms: dict[tuple[frozenset[int], int], list[tuple[frozenset[int], tuple[int, ...]]]] = {}
    for i_set in subsets:
        for j in range(1, n + 1):
            terms = list(_quantum_term_candidates(n, len(i_set)))
            row_terms[(i_set, j)] = terms
            for j_set, d in terms:
                columns[(i_set, j, j_set, d)] = len(columns)

    def classical_part(i_set: frozenset[int], j: int) -> frozenset[int] | None:
        return i_set | {j} if j not in i_set else None

    # One family of equations per (I, j): x_S * (x_I * x_j) = q_I * (x_{I^c} * x_j),
    # compared coefficient by coefficient on the basis monomials x_K q^e.
    equations: list[tuple[dict[int, Fraction], Fraction]] = []
    ncols = len(columns)
    for i_set in subsets:
        comp = full - i_set
        for j in range(1, n + 1):
            coeffs: dict[tuple[frozenset[int], tuple[int, ...]], dict[int, Fraction]] = {}
            consts: dict[tuple[frozenset[int], tuple[int, ...]], Fraction] = {}

            def put(key, col: int | None, value: Fraction):
                if col is None:
                    consts[key] = consts.get(key, Fraction(0)) + value
                else:
                    bucket = coeffs.setdefault(key, {})
                    bucket[col] = bucket.get(col, Fraction(0)) + value

            # Left side: multiply the unknown expansion of x_I * x_j by x_S.
            cls = classical_part(i_set, j)
            if cls is not None:
                put((full - cls, subset_exponents(cls)), None, Fraction(1))
            for j_set, d in row_terms[(i_set, j)]:
                col = columns[(i_set, j, j_set, d)]
                put((full - j_set, q_sum(d, subset_exponents(j_set))), col, Fraction(1))
            # Right side (subtracted): q_I times the expansion of x_{I^c} * x_j.
            cls = classical_part(comp, j)
            if cls is not None:
                put((cls, subset_exponents(i_set)), None, Fraction(-1))
            for j_set, d in row_terms[(comp, j)]:
                col = columns[(comp, j, j_set, d)]
                put((j_set, q_sum(d, subset_exponents(i_set))), col, Fraction(-1))

            for key in set(coeffs) | set(consts):
                equations.append(
                    (coeffs.get(key, {}), -consts.get(key, Fraction(0)))
                )

    solution = solve_unique_sparse(equations, ncols)

    table: dict[tuple[frozenset[int], int], QuantumClass] = {}
    for i_set in subsets:
        for j in range(1, n + 1):
            cls = classical_part(i_set, j)
            value = ring.x_set(cls) if cls is not None else ring.zero()
            for j_set, d in row_terms[(i_set, j)]:
                coeff = solution[columns[(i_set, j, j_set, d)]]
                if coeff:
                    value = value + coeff * (ring.x_set(j_set) * ring.q_monomial(d))
            expected = ring.x_set(i_set) * ring.x(j)
            if value != expected:
                raise InconsistentError(
                    f"solved product for ({render_subset(i_set)}, {j}) "
                    "disagrees with the normal-form product"
                )
            table[(i_set, j)] = value
    return table
