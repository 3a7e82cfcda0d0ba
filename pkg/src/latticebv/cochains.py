"""Graded-commutative observables on the integer lattice.

To each lattice site ``x`` we attach an even generator ``delta[x]`` of
cohomological degree 0 (a field observable) and an odd generator
``bdelta[x]`` of degree -1 (its antifield partner).  Monomials are words in
these generators; the odd generators anticommute and square to zero, so the
canonical form keeps them in strictly ascending site order and every sign in
the package is the Koszul sign of sorting into that order.

A :class:`Cochain` is a finite linear combination of monomials with
coefficients in the ring :class:`~latticebv.scalars.Scalar`.  A
:class:`LatticeFunction` is the linear-algebra view used by the lattice
Laplacian and the degree-1 pairing: a finitely supported map from sites to
scalars.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping

from .scalars import Scalar, as_scalar

Site = int

__all__ = [
    "Site",
    "Monomial",
    "Cochain",
    "LatticeFunction",
    "sort_antifields",
    "pairing",
    "support_within",
]


def sort_antifields(sites: Iterable[Site]) -> tuple[tuple[Site, ...], int]:
    """Sort odd generator sites, returning the Koszul sign of the sort.

    Returns ``(sorted_sites, sign)`` with ``sign`` in {1, -1}, or
    ``((), 0)`` when a site repeats (the square of an odd generator is 0).

    >>> sort_antifields([3, 1])
    ((1, 3), -1)
    >>> sort_antifields([2, 2])
    ((), 0)
    """
    out: list[Site] = []
    sign = 1
    for s in sites:
        pos = len(out)
        while pos > 0 and out[pos - 1] > s:
            pos -= 1
        if pos > 0 and out[pos - 1] == s:
            return (), 0
        # s jumps over len(out) - pos odd generators
        if (len(out) - pos) % 2:
            sign = -sign
        out.insert(pos, s)
    return tuple(out), sign


def _merge_antifields(
    a: tuple[Site, ...], b: tuple[Site, ...]
) -> tuple[tuple[Site, ...], int]:
    """Merge two sorted antifield tuples, counting interleaving inversions."""
    out: list[Site] = []
    sign = 1
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        elif a[i] > b[j]:
            # b[j] jumps over the len(a) - i remaining elements of a
            if (len(a) - i) % 2:
                sign = -sign
            out.append(b[j])
            j += 1
        else:
            return (), 0
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out), sign


class Monomial:
    """Canonical monomial: sorted antifield word times a field power product.

    ``fields`` is a tuple of ``(site, exponent)`` pairs sorted by site with
    positive exponents; ``antifields`` is a strictly ascending site tuple.
    The monomial denotes bdelta[s1]...bdelta[sk] * prod delta[x]^e,
    with the odd factors written first.
    """

    __slots__ = ("fields", "antifields", "_hash")

    def __init__(
        self, fields: tuple[tuple[Site, int], ...], antifields: tuple[Site, ...]
    ):
        self.fields = fields
        self.antifields = antifields
        self._hash = hash((fields, antifields))

    @classmethod
    def make(
        cls,
        fields: Mapping[Site, int] | Iterable[tuple[Site, int]] = (),
        antifields: tuple[Site, ...] = (),
    ) -> "Monomial":
        """Build from already-sorted antifields and a field exponent map."""
        items = fields.items() if isinstance(fields, Mapping) else fields
        fc = tuple(sorted((s, e) for s, e in items if e))
        if any(e < 0 for _, e in fc):
            raise ValueError("field exponents must be positive")
        return cls(fc, antifields)

    UNIT: "Monomial"

    @property
    def degree(self) -> int:
        """Cohomological degree: minus the number of odd factors."""
        return -len(self.antifields)

    @property
    def polynomial_degree(self) -> int:
        return sum(e for _, e in self.fields) + len(self.antifields)

    @property
    def is_even(self) -> bool:
        return not self.antifields

    def field_exponent(self, site: Site) -> int:
        for s, e in self.fields:
            if s == site:
                return e
        return 0

    def field_sites(self) -> tuple[Site, ...]:
        return tuple(s for s, _ in self.fields)

    def sort_key(self) -> tuple:
        return (self.antifields, self.fields)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Monomial)
            and self.fields == other.fields
            and self.antifields == other.antifields
        )

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        factors = [f"bdelta[{s}]" for s in self.antifields]
        for s, e in self.fields:
            factors.append(f"delta[{s}]" if e == 1 else f"delta[{s}]^{e}")
        return "*".join(factors) if factors else "1"

    def __repr__(self) -> str:
        return f"Monomial({self})"


Monomial.UNIT = Monomial((), ())


def _mul_monomials(a: Monomial, b: Monomial) -> tuple[Monomial | None, int]:
    """Product of monomials with its Koszul sign; None if an odd site repeats."""
    anti, sign = _merge_antifields(a.antifields, b.antifields)
    if sign == 0:
        return None, 0
    if not b.fields:
        fields = a.fields
    elif not a.fields:
        fields = b.fields
    else:
        merged = dict(a.fields)
        for s, e in b.fields:
            merged[s] = merged.get(s, 0) + e
        fields = tuple(sorted(merged.items()))
    return Monomial(fields, anti), sign


class Cochain:
    """Finite Scalar-linear combination of monomials, kept canonical."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        canonical: dict[Monomial, Scalar] = {}
        if terms:
            for m, c in terms.items():
                c = as_scalar(c)
                if not c.is_zero:
                    canonical[m] = c
        self._terms = canonical

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Cochain":
        return cls()

    @classmethod
    def scalar(cls, value: Scalar | int | Fraction) -> "Cochain":
        return cls({Monomial.UNIT: as_scalar(value)})

    @classmethod
    def one(cls) -> "Cochain":
        return cls.scalar(1)

    @classmethod
    def field(cls, site: Site, exponent: int = 1) -> "Cochain":
        """The generator delta[site] (or a pure power of it)."""
        if exponent == 0:
            return cls.one()
        return cls({Monomial.make({site: exponent}): Scalar.one()})

    @classmethod
    def antifield(cls, site: Site) -> "Cochain":
        """The odd generator bdelta[site]."""
        return cls({Monomial((), (site,)): Scalar.one()})

    @classmethod
    def monomial(
        cls,
        fields: Mapping[Site, int] | Iterable[tuple[Site, int]] = (),
        antifields: Iterable[Site] = (),
        coefficient: Scalar | int | Fraction = 1,
    ) -> "Cochain":
        """Build a one-term cochain from possibly unsorted antifield sites.

        The Koszul sign of sorting is folded into the coefficient; a
        repeated antifield site gives the zero cochain.
        """
        anti, sign = sort_antifields(antifields)
        if sign == 0:
            return cls.zero()
        coeff = as_scalar(coefficient)
        if sign < 0:
            coeff = -coeff
        return cls({Monomial.make(fields, anti): coeff})

    # -- linear structure ---------------------------------------------------

    def __add__(self, other: "Cochain") -> "Cochain":
        if not isinstance(other, Cochain):
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m)
            s = c if s is None else s + c
            if s.is_zero:
                terms.pop(m, None)
            else:
                terms[m] = s
        out = Cochain.__new__(Cochain)
        out._terms = terms
        return out

    def __neg__(self) -> "Cochain":
        out = Cochain.__new__(Cochain)
        out._terms = {m: -c for m, c in self._terms.items()}
        return out

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __mul__(self, other: "Cochain | Scalar | int | Fraction") -> "Cochain":
        if not isinstance(other, Cochain):
            factor = as_scalar(other)
            if factor.is_zero:
                return Cochain.zero()
            out = Cochain.__new__(Cochain)
            out._terms = {m: c * factor for m, c in self._terms.items()}
            return out
        terms: dict[Monomial, Scalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                prod, sign = _mul_monomials(m1, m2)
                if prod is None:
                    continue
                c = c1 * c2
                if sign < 0:
                    c = -c
                s = terms.get(prod)
                s = c if s is None else s + c
                if s.is_zero:
                    terms.pop(prod, None)
                else:
                    terms[prod] = s
        out = Cochain.__new__(Cochain)
        out._terms = terms
        return out

    def __rmul__(self, other: "Scalar | int | Fraction") -> "Cochain":
        return self * other

    def __pow__(self, n: int) -> "Cochain":
        if not isinstance(n, int) or n < 0:
            raise ValueError("cochain powers must be non-negative integers")
        result = Cochain.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset((m, c.key()) for m, c in self._terms.items()))

    # -- structure queries ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_even_degree_zero(self) -> bool:
        """True if no monomial carries an odd factor."""
        return all(m.is_even for m in self._terms)

    def terms(self) -> Iterator[tuple[Monomial, Scalar]]:
        return iter(self._terms.items())

    def coefficient(self, m: Monomial) -> Scalar:
        return self._terms.get(m, Scalar.zero())

    def degrees(self) -> set[int]:
        return {m.degree for m in self._terms}

    def homogeneous_part(self, degree: int) -> "Cochain":
        out = Cochain.__new__(Cochain)
        out._terms = {m: c for m, c in self._terms.items() if m.degree == degree}
        return out

    def max_polynomial_degree(self) -> int:
        return max((m.polynomial_degree for m in self._terms), default=0)

    def field_support(self) -> set[Site]:
        out: set[Site] = set()
        for m in self._terms:
            out.update(s for s, _ in m.fields)
        return out

    def antifield_support(self) -> set[Site]:
        out: set[Site] = set()
        for m in self._terms:
            out.update(m.antifields)
        return out

    def support(self) -> set[Site]:
        return self.field_support() | self.antifield_support()

    def key(self) -> tuple:
        """Canonical hashable key for caching."""
        return tuple(
            sorted(((m.antifields, m.fields), c.key()) for m, c in self._terms.items())
        )

    # -- derivations ---------------------------------------------------------

    def partial_field(self, site: Site) -> "Cochain":
        """Even derivative d/d delta[site]: degree 0, ordinary power rule."""
        terms: dict[Monomial, Scalar] = {}
        for m, c in self._terms.items():
            e = m.field_exponent(site)
            if not e:
                continue
            fields = tuple(
                (s, x - 1 if s == site else x)
                for s, x in m.fields
                if not (s == site and x == 1)
            )
            reduced = Monomial(fields, m.antifields)
            s = terms.get(reduced)
            add = c * e
            s = add if s is None else s + add
            if s.is_zero:
                terms.pop(reduced, None)
            else:
                terms[reduced] = s
        out = Cochain.__new__(Cochain)
        out._terms = terms
        return out

    def partial_antifield(self, site: Site) -> "Cochain":
        """Odd left derivative d/d bdelta[site]: degree +1.

        On bdelta[s1]...bdelta[sk] * F with s_i == site the result is
        (-1)^(i-1) times the word with that factor deleted; zero when the
        site is absent.
        """
        terms: dict[Monomial, Scalar] = {}
        for m, c in self._terms.items():
            try:
                i = m.antifields.index(site)
            except ValueError:
                continue
            reduced = Monomial(m.fields, m.antifields[:i] + m.antifields[i + 1 :])
            add = c if i % 2 == 0 else -c
            s = terms.get(reduced)
            s = add if s is None else s + add
            if s.is_zero:
                terms.pop(reduced, None)
            else:
                terms[reduced] = s
        out = Cochain.__new__(Cochain)
        out._terms = terms
        return out

    def map_sites(self, fn: Callable[[Site], Site]) -> "Cochain":
        """Relabel every generator site through ``fn``, re-canonicalizing.

        ``fn`` must be injective on the support.  The Koszul sign of
        re-sorting the relabeled antifield word is folded into the
        coefficients (relevant e.g. for site negation).
        """
        out = Cochain.zero()
        for m, c in self._terms.items():
            moved_fields = {fn(s): e for s, e in m.fields}
            if len(moved_fields) != len(m.fields):
                raise ValueError("site map is not injective on the support")
            moved_anti = tuple(fn(s) for s in m.antifields)
            out = out + Cochain.monomial(moved_fields, moved_anti, c)
        return out

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for m in sorted(self._terms, key=Monomial.sort_key):
            c = self._terms[m]
            body, negated = _coefficient_prefix(c)
            if m != Monomial.UNIT:
                body = f"{body}*{m}" if body else str(m)
            elif not body:
                body = "1"
            if not pieces:
                pieces.append("-" + body if negated else body)
            else:
                pieces.append(("- " if negated else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Cochain({self})"


def _coefficient_prefix(c: Scalar) -> tuple[str, bool]:
    """Render a coefficient for use in front of a monomial.

    Returns ``(text, negated)``; ``text`` may be empty for a plain 1.
    Multi-term scalars are parenthesized so the output stays parseable.
    """
    items = sorted(c.terms())
    if len(items) > 1:
        return f"({c})", False
    ((hp, ap), q) = items[0]
    negated = q < 0
    q = abs(q)
    factors: list[str] = []
    if q != 1 or (hp == 0 and ap == 0):
        factors.append(str(q))
    if hp:
        factors.append("hbar" if hp == 1 else f"hbar^{hp}")
    if ap:
        factors.append("alpha" if ap == 1 else f"alpha^{ap}")
    text = "*".join(factors)
    if text == "1":
        text = ""
    return text, negated


class LatticeFunction:
    """Finitely supported map from lattice sites to scalars.

    This is the linear-algebra view of the degree-0 and degree-(-1) lines:
    the lattice Laplacian, the pairing and the cohomology classifier all act
    on these rather than on general cochains.
    """

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[Site, Scalar | int | Fraction] | None = None):
        canonical: dict[Site, Scalar] = {}
        if values:
            for s, v in values.items():
                v = as_scalar(v)
                if not v.is_zero:
                    canonical[int(s)] = v
        self._values = canonical

    @classmethod
    def zero(cls) -> "LatticeFunction":
        return cls()

    @classmethod
    def delta(cls, site: Site, value: Scalar | int | Fraction = 1) -> "LatticeFunction":
        """The indicator of a single site (scaled)."""
        return cls({site: value})

    def __add__(self, other: "LatticeFunction") -> "LatticeFunction":
        values = dict(self._values)
        for s, v in other._values.items():
            w = values.get(s)
            w = v if w is None else w + v
            if w.is_zero:
                values.pop(s, None)
            else:
                values[s] = w
        out = LatticeFunction.__new__(LatticeFunction)
        out._values = values
        return out

    def __neg__(self) -> "LatticeFunction":
        out = LatticeFunction.__new__(LatticeFunction)
        out._values = {s: -v for s, v in self._values.items()}
        return out

    def __sub__(self, other: "LatticeFunction") -> "LatticeFunction":
        return self + (-other)

    def __mul__(self, factor: Scalar | int | Fraction) -> "LatticeFunction":
        factor = as_scalar(factor)
        if factor.is_zero:
            return LatticeFunction.zero()
        out = LatticeFunction.__new__(LatticeFunction)
        out._values = {s: v * factor for s, v in self._values.items()}
        return out

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticeFunction):
            return NotImplemented
        return self._values == other._values

    @property
    def is_zero(self) -> bool:
        return not self._values

    def get(self, site: Site) -> Scalar:
        return self._values.get(site, Scalar.zero())

    def items(self) -> Iterator[tuple[Site, Scalar]]:
        return iter(self._values.items())

    def support(self) -> set[Site]:
        return set(self._values)

    def shift(self, n: int) -> "LatticeFunction":
        """Translate: x -> f(x - n), i.e. move the support by +n."""
        out = LatticeFunction.__new__(LatticeFunction)
        out._values = {s + n: v for s, v in self._values.items()}
        return out

    def reverse(self) -> "LatticeFunction":
        """Time reversal: x -> f(-x)."""
        out = LatticeFunction.__new__(LatticeFunction)
        out._values = {-s: v for s, v in self._values.items()}
        return out

    def as_field_cochain(self) -> Cochain:
        """The degree-0 cochain sum f(x) delta[x]."""
        return Cochain({Monomial.make({s: 1}): v for s, v in self._values.items()})

    def as_antifield_cochain(self) -> Cochain:
        """The degree-(-1) cochain sum f(x) bdelta[x]."""
        return Cochain({Monomial((), (s,)): v for s, v in self._values.items()})

    def __str__(self) -> str:
        if not self._values:
            return "{}"
        body = ", ".join(f"{s}: {v}" for s, v in sorted(self._values.items()))
        return "{" + body + "}"

    def __repr__(self) -> str:
        return f"LatticeFunction({self})"


def pairing(f: LatticeFunction, g: LatticeFunction) -> Scalar:
    """The degree-1 symmetric pairing: sum over x of f(x) g(x)."""
    total = Scalar.zero()
    for s, v in f.items():
        w = g.get(s)
        if not w.is_zero:
            total = total + v * w
    return total


def support_within(c: Cochain, interval) -> bool:
    """Whether ``c`` is an observable of the given interval.

    Field sites must lie in the open interval (a, b) and antifield sites in
    the shrunken open interval (a+1, b-1); ``interval`` only needs rational
    endpoints ``a`` and ``b``.
    """
    a, b = interval.a, interval.b
    for m, _ in c.terms():
        for s, _e in m.fields:
            if not (a < s < b):
                return False
        for s in m.antifields:
            if not (a + 1 < s < b - 1):
                return False
    return True
