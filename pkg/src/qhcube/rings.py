"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial lives in a declared ring: an ordered tuple of named variables,
each carrying an integer grading degree.  Terms map exponent tuples to
nonzero ``Fraction`` coefficients and are kept in a fixed graded-lexicographic
order, so equal polynomials always have identical representations and their
text rendering is canonical.

Quotients by relations of the form v^k -> replacement (e.g. the square of a
degree-two generator collapsing to a degree-four one, or to zero) are handled
by :class:`RewriteSystem` together with :meth:`Polynomial.normal_form`.
All coefficients are exact; there is no floating point anywhere.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]
Exponents = tuple[int, ...]


class VariableMismatchError(ValueError):
    """Operands belong to different polynomial rings."""


class UnknownVariableError(ValueError):
    """A name does not belong to the ring it is used with."""


class _DegreeMarker:
    """Singleton answers of ``graded_degree`` that are not integers."""

    __slots__ = ("_label",)

    def __init__(self, label: str):
        self._label = label

    def __repr__(self) -> str:
        return self._label


#: Marker for polynomials whose terms do not share a common degree.
INHOMOGENEOUS = _DegreeMarker("inhomogeneous")

#: Degree of the zero polynomial: compatible with every homogeneous degree.
ANY_DEGREE = _DegreeMarker("any")


def degrees_match(d1, d2) -> bool:
    """True when two graded degrees are equal, treating ANY_DEGREE as a wildcard."""
    if d1 is ANY_DEGREE or d2 is ANY_DEGREE:
        return True
    return d1 == d2


class PolyRing:
    """An ordered list of graded variable names; the context for polynomials.

    Two rings compare equal when they declare the same names with the same
    degrees in the same order, so independently constructed rings interoperate.
    """

    __slots__ = ("names", "degrees", "_index")

    def __init__(self, names: Iterable[str], degrees: Iterable[int]):
        names = tuple(names)
        degrees = tuple(int(d) for d in degrees)
        if len(names) != len(degrees):
            raise ValueError("one degree per variable is required")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = names
        self.degrees = degrees
        self._index = {name: i for i, name in enumerate(names)}

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyRing):
            return NotImplemented
        return self.names == other.names and self.degrees == other.degrees

    def __hash__(self) -> int:
        return hash((self.names, self.degrees))

    def __repr__(self) -> str:
        vars_ = ", ".join(f"{n}:{d}" for n, d in zip(self.names, self.degrees))
        return f"PolyRing({vars_})"

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None

    def monomial_degree(self, exps: Exponents) -> int:
        return sum(e * d for e, d in zip(exps, self.degrees))

    # -- constructors ------------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, value: Scalar) -> "Polynomial":
        c = Fraction(value)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * len(self.names): c})

    def var(self, name: str) -> "Polynomial":
        exps = [0] * len(self.names)
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def monomial(self, exps: Mapping[str, int], coeff: Scalar = 1) -> "Polynomial":
        vec = [0] * len(self.names)
        for name, e in exps.items():
            vec[self.index(name)] = int(e)
        return self.poly({tuple(vec): coeff})

    def poly(self, terms: Mapping[Exponents, Scalar]) -> "Polynomial":
        """Build a polynomial from an exponent-tuple to coefficient mapping."""
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.names):
                raise ValueError("exponent tuple length does not match the ring")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            c = Fraction(coeff)
            if c != 0:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        return Polynomial(self, {m: c for m, c in clean.items() if c != 0})

    def coerce(self, value: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise VariableMismatchError(
                    f"polynomial in {value.ring!r} used with {self!r}"
                )
            return value
        return self.const(value)

    def render_monomial(self, exps: Exponents) -> str:
        parts = []
        for name, e in zip(self.names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples to nonzero Fractions, in descending
    (graded degree, exponent tuple) order.  Arithmetic is available through
    the usual operators; mixed operands must share the ring.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Exponents, Fraction]):
        self.ring = ring
        order = sorted(
            terms.items(),
            key=lambda kv: (ring.monomial_degree(kv[0]), kv[0]),
            reverse=True,
        )
        self.terms = dict(order)
        self._hash = None

    # -- basic protocol ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        # Constants hash like their Fraction so that __eq__'s scalar coercion
        # keeps the eq/hash contract.
        if self._hash is None:
            if not self.terms:
                self._hash = hash(Fraction(0))
            elif len(self.terms) == 1 and not any(next(iter(self.terms))):
                self._hash = hash(next(iter(self.terms.values())))
            else:
                self._hash = hash((self.ring, tuple(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    # -- arithmetic --------------------------------------------------------

    def _other(self, value) -> "Polynomial | None":
        if isinstance(value, Polynomial):
            if value.ring != self.ring:
                raise VariableMismatchError("operands live in different rings")
            return value
        if isinstance(value, (int, Fraction)):
            return self.ring.const(value)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono, Fraction(0)) + coeff
            if acc:
                out[mono] = acc
            elif mono in out:
                del out[mono]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

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
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return self.ring.zero()
            return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})
        other = self._other(other)
        if other is None:
            return NotImplemented
        out: dict[Exponents, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                acc = out.get(mono, Fraction(0)) + c1 * c2
                if acc:
                    out[mono] = acc
                elif mono in out:
                    del out[mono]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    # -- structure ---------------------------------------------------------

    def coefficient(self, exps: Union[Exponents, Mapping[str, int]]) -> Fraction:
        if isinstance(exps, Mapping):
            vec = [0] * len(self.ring.names)
            for name, e in exps.items():
                vec[self.ring.index(name)] = int(e)
            exps = tuple(vec)
        return self.terms.get(tuple(exps), Fraction(0))

    def graded_degree(self):
        """Common degree of all terms, INHOMOGENEOUS, or ANY_DEGREE for zero."""
        if not self.terms:
            return ANY_DEGREE
        degs = {self.ring.monomial_degree(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return INHOMOGENEOUS

    def is_homogeneous(self, degree: int) -> bool:
        return degrees_match(self.graded_degree(), degree)

    def substitute(self, assignment: Mapping[str, Union["Polynomial", Scalar]]) -> "Polynomial":
        """Simultaneous substitution of variables by polynomials or scalars.

        Polynomial values must all share one target ring; variables of ``self``
        left unassigned must exist (by name) in that ring.  With no polynomial
        values the target is the ring of ``self``.
        """
        for name in assignment:
            self.ring.index(name)
        target = self.ring
        for value in assignment.values():
            if isinstance(value, Polynomial):
                target = value.ring
                break
        images: dict[str, Polynomial] = {}
        for name, value in assignment.items():
            images[name] = target.coerce(value)
        result = target.zero()
        for mono, coeff in self.terms.items():
            acc = target.const(coeff)
            for name, e in zip(self.ring.names, mono):
                if e == 0:
                    continue
                factor = images.get(name)
                if factor is None:
                    factor = target.var(name)  # raises if absent from target
                acc = acc * factor**e
            result = result + acc
        return result

    def normal_form(self, system: "RewriteSystem") -> "Polynomial":
        """Reduce every monomial until no rule's power divides it.

        The rules rewrite disjoint single variables and strictly decrease the
        rewritten variable's exponent, so the reduction terminates and the
        result does not depend on rewrite order.
        """
        if system.ring != self.ring:
            raise VariableMismatchError("rewrite system belongs to a different ring")
        out: dict[Exponents, Fraction] = {}
        stack = list(self.terms.items())
        while stack:
            mono, coeff = stack.pop()
            hit = system.match(mono)
            if hit is None:
                acc = out.get(mono, Fraction(0)) + coeff
                if acc:
                    out[mono] = acc
                elif mono in out:
                    del out[mono]
                continue
            idx, power, replacement = hit
            base = list(mono)
            base[idx] -= power
            for rmono, rcoeff in replacement.terms.items():
                stack.append(
                    (tuple(b + r for b, r in zip(base, rmono)), coeff * rcoeff)
                )
        return Polynomial(self.ring, out)

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for i, (mono, coeff) in enumerate(self.terms.items()):
            body = self.ring.render_monomial(mono)
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if i == 0:
                pieces.append(f"-{text}" if coeff < 0 else text)
            else:
                pieces.append(f" - {text}" if coeff < 0 else f" + {text}")
        return "".join(pieces)


class RewriteSystem:
    """Confluent rewrites ``v^k -> replacement`` on disjoint single variables.

    Each rule's left side is a pure power with k >= 2 and its replacement has
    strictly smaller v-exponent in every monomial, which guarantees
    termination; distinct rules touch distinct variables, so the reduction is
    confluent.
    """

    __slots__ = ("ring", "rules")

    def __init__(
        self,
        ring: PolyRing,
        rules: Mapping[str, tuple[int, Union[Polynomial, Scalar]]],
    ):
        self.ring = ring
        compiled: dict[int, tuple[int, Polynomial]] = {}
        for name, (power, replacement) in rules.items():
            idx = ring.index(name)
            power = int(power)
            if power < 2:
                raise ValueError("rewrite threshold must be at least 2")
            poly = ring.coerce(replacement)
            for mono in poly.terms:
                if mono[idx] >= power:
                    raise ValueError(
                        f"replacement for {name}^{power} does not reduce {name}"
                    )
            compiled[idx] = (power, poly)
        self.rules = compiled

    def match(self, mono: Exponents):
        """First applicable rule for a monomial, as (index, power, replacement)."""
        for idx, (power, replacement) in self.rules.items():
            if mono[idx] >= power:
                return idx, power, replacement
        return None


def elementary_symmetric(ring: PolyRing, k: int, names: Iterable[str] | None = None) -> Polynomial:
    """Sum of all k-element products of distinct listed variables; sigma_0 = 1."""
    pool = ring.names if names is None else tuple(names)
    for name in pool:
        ring.index(name)
    if k < 0 or k > len(pool):
        raise ValueError(f"symmetric function index {k} out of range for {len(pool)} variables")
    terms: dict[Exponents, Fraction] = {}
    for combo in itertools.combinations(pool, k):
        vec = [0] * len(ring.names)
        for name in combo:
            vec[ring.index(name)] += 1
        terms[tuple(vec)] = terms.get(tuple(vec), Fraction(0)) + 1
    return Polynomial(ring, terms)


def monomials_of(poly: Polynomial) -> Iterator[tuple[Exponents, Fraction]]:
    """Iterate terms in the canonical order."""
    return iter(poly.terms.items())
