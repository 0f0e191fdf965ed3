"""Sparse polynomials with exact integer coefficients.

Three flavours share one implementation: ``UniPoly`` in ``t``, ``BiPoly``
in ``(x, y)`` and ``LaurentMulti`` in ``q^{+-1}, v1, ..., vn``.  Terms live
in a dict from exponent tuples to nonzero ints; values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import NonPolynomialResult

Exponent = tuple[int, ...]


class SparsePoly:
    names: tuple[str, ...] = ()

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(k) for k in e)
            if len(e) != len(self.names):
                raise ValueError(f"exponent {e} does not match variables {self.names}")
            c = int(c)
            if c:
                clean[e] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = {e: c for e, c in terms.items() if c}
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int):
        return cls({(0,) * len(cls.names): c})

    @classmethod
    def gen(cls, i: int):
        e = [0] * len(cls.names)
        e[i] = 1
        return cls({tuple(e): 1})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponent: Iterable[int]) -> int:
        return self._terms.get(tuple(exponent), 0)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self).constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return self._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return self._from_clean({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._from_clean({e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._from_clean(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = type(self).constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self).constant(other)
        if not isinstance(other, SparsePoly) or other.names != self.names:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.names, frozenset(self._terms.items())))
        return self._hash

    def evaluate(self, *values):
        """Substitute scalars (ints or Fractions) for every variable."""
        if len(values) != len(self.names):
            raise ValueError(f"expected {len(self.names)} values")
        total = 0
        for e, c in self._terms.items():
            term = c
            for v, k in zip(values, e):
                term *= Fraction(v) ** k if k < 0 else v ** k
            total += term
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def sorted_terms(self, descending: bool = True) -> list[tuple[Exponent, int]]:
        """Terms ordered by total degree, then lexicographically by exponent."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=descending)

    def _monomial(self, e: Exponent) -> str:
        parts = []
        for name, k in zip(self.names, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def text(self) -> str:
        """Canonical text: descending degree, explicit ``*``, e.g. ``2*x*y - 2``."""
        if not self._terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = self._monomial(e)
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def to_json(self) -> dict:
        terms = sorted(self._terms.items())
        return {
            "variables": list(self.names),
            "terms": [{"exponents": list(e), "coefficient": str(c)} for e, c in terms],
        }

    @classmethod
    def from_json(cls, obj: Mapping):
        return cls({tuple(t["exponents"]): int(t["coefficient"]) for t in obj["terms"]})

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"{type(self).__name__}({self.text()!r})"


class UniPoly(SparsePoly):
    """Polynomial in ``t``."""

    names = ("t",)
    __slots__ = ()

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "UniPoly":
        """Build from coefficients in increasing degree."""
        return cls({(k,): c for k, c in enumerate(coeffs)})

    @classmethod
    def t(cls) -> "UniPoly":
        return cls.gen(0)

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "UniPoly":
        p = cls.constant(1)
        for r in roots:
            p = p * cls.from_coeffs([-r, 1])
        return p

    @property
    def degree(self) -> int | None:
        return max((e[0] for e in self._terms), default=None)

    def coeffs(self) -> list[int]:
        """Coefficients in increasing degree (empty for the zero polynomial)."""
        d = self.degree
        if d is None:
            return []
        return [self._terms.get((k,), 0) for k in range(d + 1)]

    def __call__(self, value):
        """Evaluate at a scalar, or compose with another ``UniPoly``."""
        if isinstance(value, UniPoly):
            out = UniPoly()
            for k, c in reversed(list(enumerate(self.coeffs()))):
                out = out * value + c
            return out
        return self.evaluate(value)

    def shift_divide(self, k: int) -> "UniPoly":
        """Divide by ``t^k``; the division must be exact."""
        if any(e[0] < k for e in self._terms):
            raise NonPolynomialResult(f"{self.text()} is not divisible by t^{k}")
        return UniPoly._from_clean({(e[0] - k,): c for e, c in self._terms.items()})

    def valuation(self) -> int | None:
        """Largest ``k`` with ``t^k`` dividing self (None for zero)."""
        return min((e[0] for e in self._terms), default=None)


class BiPoly(SparsePoly):
    """Polynomial in ``(x, y)``."""

    names = ("x", "y")
    __slots__ = ()

    @classmethod
    def x(cls) -> "BiPoly":
        return cls.gen(0)

    @classmethod
    def y(cls) -> "BiPoly":
        return cls.gen(1)

    @property
    def total_degree(self) -> int | None:
        return max((sum(e) for e in self._terms), default=None)

    def swap(self) -> "BiPoly":
        return BiPoly._from_clean({(b, a): c for (a, b), c in self._terms.items()})

    def substitute(self, x, y) -> UniPoly:
        """Substitute ``UniPoly`` values (or ints) for ``x`` and ``y``."""
        x = x if isinstance(x, UniPoly) else UniPoly.constant(x)
        y = y if isinstance(y, UniPoly) else UniPoly.constant(y)
        xp, yp = _PowerCache(x), _PowerCache(y)
        out = UniPoly()
        for (a, b), c in self._terms.items():
            out = out + xp[a] * yp[b] * c
        return out

    def y_coeffs(self) -> list[int]:
        """Coefficients of a polynomial in ``y`` alone, increasing degree."""
        if any(a for a, _ in self._terms):
            raise ValueError("polynomial depends on x")
        d = max((b for _, b in self._terms), default=-1)
        return [self._terms.get((0, k), 0) for k in range(d + 1)]


class LaurentMulti(SparsePoly):
    """Laurent polynomial in ``q`` times a polynomial in ``v1..vn``.

    Concrete classes are created per ``n`` with :func:`laurent_ring`.
    """

    __slots__ = ()
    nvars: int = 0

    def sorted_terms(self, descending: bool = True) -> list[tuple[Exponent, int]]:
        """Terms ordered by the ``v`` monomial (degree, then lexicographic), then by ``q``."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0][1:]), t[0][1:], t[0][0]),
                      reverse=descending)


_LAURENT: dict[int, type] = {}


def laurent_ring(n: int) -> type:
    """The ``LaurentMulti`` subclass with variables ``q, v1, ..., vn``."""
    if n not in _LAURENT:
        names = ("q",) + tuple(f"v{i + 1}" for i in range(n))
        _LAURENT[n] = type(f"LaurentMulti{n}", (LaurentMulti,), {"names": names, "nvars": n, "__slots__": ()})
    return _LAURENT[n]


class _PowerCache:
    def __init__(self, base):
        self.base = base
        self.powers = [type(base).constant(1)]

    def __getitem__(self, k: int):
        while len(self.powers) <= k:
            self.powers.append(self.powers[-1] * self.base)
        return self.powers[k]


def exact_divide(num: UniPoly, den: UniPoly) -> UniPoly:
    """``num / den`` in ``Z[t]``; raises NonPolynomialResult otherwise."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    a = [Fraction(c) for c in num.coeffs()]
    b = den.coeffs()
    db = len(b) - 1
    if len(a) - 1 < db:
        if num.is_zero():
            return UniPoly()
        raise NonPolynomialResult(f"{num.text()} is not divisible by {den.text()}")
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        coef = a[k] / b[db]
        q[k - db] = coef
        if coef:
            for j in range(db + 1):
                a[k - db + j] -= coef * b[j]
    if any(a) or any(c.denominator != 1 for c in q):
        raise NonPolynomialResult(f"{num.text()} is not divisible by {den.text()} in Z[t]")
    return UniPoly.from_coeffs([int(c) for c in q])


def eval_rational(poly: SparsePoly, args: Sequence[tuple[UniPoly, UniPoly]], prefactor: UniPoly) -> UniPoly:
    """``prefactor * poly(n_1/d_1, ..., n_k/d_k)`` as an exact polynomial in ``t``.

    Each argument is a ``(numerator, denominator)`` pair of ``UniPoly``.  The
    sum is homogenized over ``prod d_i^{D_i}`` (``D_i`` the degree in the
    i-th variable), multiplied by the prefactor, and divided exactly.
    Raises NonPolynomialResult if a denominator survives.
    """
    if len(args) != len(poly.names):
        raise ValueError(f"expected {len(poly.names)} arguments")
    if any(k < 0 for e, _ in poly.items() for k in e):
        raise ValueError("eval_rational needs nonnegative exponents")
    degs = [max((e[i] for e, _ in poly.items()), default=0) for i in range(len(args))]
    nums = [_PowerCache(n) for n, _ in args]
    dens = [_PowerCache(d) for _, d in args]
    total = UniPoly()
    for e, c in poly.items():
        term = UniPoly.constant(c)
        for i, k in enumerate(e):
            term = term * nums[i][k] * dens[i][degs[i] - k]
        total = total + term
    denominator = UniPoly.constant(1)
    for i, d in enumerate(degs):
        denominator = denominator * dens[i][d]
    return exact_divide(prefactor * total, denominator)


def specialize_bi_to_uni(tutte: BiPoly, r_list: int, r_group: int) -> UniPoly:
    """``(-1)^{r_A} t^{r_Gamma - r_A} T(1 - t, 0)``."""
    t = UniPoly.t()
    value = tutte.substitute(1 - t, 0)
    return value * ((-1) ** r_list) * t ** (r_group - r_list)
