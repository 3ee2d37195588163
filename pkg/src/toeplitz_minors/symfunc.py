"""Exact polynomials in power sums ``p_k`` and ``pt_k`` (the tilde set).

Every symmetric function in two variable sets is stored through its image in
the power-sum basis, so Schur, complete and skew functions are all plain
:class:`SymPoly` values with :class:`fractions.Fraction` coefficients. In that
basis ``p_n^perp = n d/dp_n`` and the operator ``Delta`` is pure
differentiation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd, lcm
from numbers import Number, Rational
from typing import Iterable, Mapping, NamedTuple, Sequence

from .characters import character
from .exceptions import PreconditionError
from .partitions import Partition, contains, cycle_counts, partitions_of, z_value

__all__ = [
    "Monomial",
    "SymPoly",
    "SymbolSpec",
    "add",
    "mul",
    "power_sum",
    "complete_h",
    "schur",
    "skew_schur",
    "inner_product",
    "perp",
    "delta",
    "jacobi_trudi",
    "determinant",
    "evaluate",
]

Exponents = tuple[tuple[int, int], ...]


def _merge(a: Exponents, b: Exponents) -> Exponents:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for k, e in b:
        out[k] = out.get(k, 0) + e
    return tuple(sorted(out.items()))


class Monomial(NamedTuple):
    """``prod p_k**e`` times ``prod pt_k**e``; each side is sorted ``(k, e)`` pairs."""

    plain: Exponents = ()
    tilde: Exponents = ()

    @property
    def degree(self) -> int:
        return sum(k * e for k, e in self.plain) + sum(k * e for k, e in self.tilde)

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        return Monomial(_merge(self.plain, other.plain), _merge(self.tilde, other.tilde))

    def swapped(self) -> "Monomial":
        return Monomial(self.tilde, self.plain)

    def z(self) -> int:
        """``<m, m>``: product of ``k**e * e!`` over both variable sets."""
        out = 1
        for k, e in self.plain + self.tilde:
            out *= k**e * factorial(e)
        return out

    def render(self) -> str:
        factors = [f"p{k}" + (f"^{e}" if e > 1 else "") for k, e in self.plain]
        factors += [f"pt{k}" + (f"^{e}" if e > 1 else "") for k, e in self.tilde]
        return "*".join(factors)


ONE_MONO = Monomial()


def _common_denominator(terms: dict[Monomial, Fraction]) -> tuple[int, list[tuple[Monomial, int]]]:
    den = 1
    for c in terms.values():
        den = lcm(den, c.denominator)
    return den, [(m, c.numerator * (den // c.denominator)) for m, c in terms.items()]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, Rational):
        return Fraction(c)
    raise TypeError(f"SymPoly coefficients must be rational, got {type(c).__name__}")


class SymPoly:
    """Sparse polynomial over Q in the variables ``p_k`` and ``pt_k``.

    Values are immutable; zero coefficients are never stored, so two
    polynomials are equal exactly when their term maps are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = _as_fraction(c)
                if c:
                    clean[mono] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "SymPoly":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "SymPoly":
        return cls({ONE_MONO: c})

    @classmethod
    def var(cls, k: int, tilde: bool = False) -> "SymPoly":
        if k < 1:
            raise PreconditionError(f"power-sum index must be >= 1, got {k}")
        mono = Monomial((), ((k, 1),)) if tilde else Monomial(((k, 1),), ())
        return cls._raw({mono: Fraction(1)})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Largest graded degree of a term (``-1`` for the zero polynomial)."""
        return max((m.degree for m in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ring structure

    def _coerce(self, other) -> "SymPoly | None":
        if isinstance(other, SymPoly):
            return other
        if isinstance(other, Rational):
            return SymPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            v = out.get(mono, 0) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        return SymPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "SymPoly":
        return SymPoly._raw({m: -c for m, c in self._terms.items()})

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
        if isinstance(other, Rational):
            c = _as_fraction(other)
            if not c:
                return SymPoly._raw({})
            return SymPoly._raw({m: v * c for m, v in self._terms.items()})
        if not isinstance(other, SymPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return SymPoly._raw({})
        return _Scaled.of(self).times(_Scaled.of(other)).to_sympoly()

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (Fraction(1) / _as_fraction(other))
        return NotImplemented

    def __pow__(self, n: int) -> "SymPoly":
        if not isinstance(n, int) or n < 0:
            raise PreconditionError(f"SymPoly exponent must be a nonnegative int, got {n!r}")
        result = SymPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # calculus

    def derivative(self, k: int, tilde: bool = False) -> "SymPoly":
        """Partial derivative with respect to ``p_k`` (or ``pt_k``)."""
        out: dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            side = mono.tilde if tilde else mono.plain
            for idx, (j, e) in enumerate(side):
                if j != k:
                    continue
                rest = side[:idx] + (((j, e - 1),) if e > 1 else ()) + side[idx + 1:]
                new = Monomial(mono.plain, rest) if tilde else Monomial(rest, mono.tilde)
                out[new] = out.get(new, 0) + c * e
                break
        return SymPoly._raw({m: c for m, c in out.items() if c})

    def swap_tilde(self) -> "SymPoly":
        """The involution exchanging ``p_k`` and ``pt_k``."""
        return SymPoly._raw({m.swapped(): c for m, c in self._terms.items()})

    def variables(self) -> tuple[set[int], set[int]]:
        plain, tilde = set(), set()
        for mono in self._terms:
            plain.update(k for k, _ in mono.plain)
            tilde.update(k for k, _ in mono.tilde)
        return plain, tilde

    # canonical form

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms by descending degree, then descending exponent vector.

        The exponent vector lists the plain exponents of ``p_1..p_K`` followed
        by the tilde exponents of ``pt_1..pt_K``, with ``K`` the largest index
        present in the polynomial.
        """
        plain, tilde = self.variables()
        top = max(plain | tilde, default=0)

        def key(item):
            mono = item[0]
            vec = [0] * (2 * top)
            for k, e in mono.plain:
                vec[k - 1] = e
            for k, e in mono.tilde:
                vec[top + k - 1] = e
            return (-mono.degree, [-v for v in vec])

        return sorted(self._terms.items(), key=key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = mono.render()
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if i == 0:
                pieces.append(text if sign == "+" else "-" + text)
            else:
                pieces.append(f" {sign} {text}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"SymPoly({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [
            {
                "plain": {str(k): e for k, e in mono.plain},
                "tilde": {str(k): e for k, e in mono.tilde},
                "coeff": f"{c.numerator}/{c.denominator}",
            }
            for mono, c in self.sorted_terms()
        ]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, records: Iterable[Mapping]) -> "SymPoly":
        terms: dict[Monomial, Fraction] = {}
        for rec in records:
            plain = tuple(sorted((int(k), int(e)) for k, e in rec.get("plain", {}).items()))
            tilde = tuple(sorted((int(k), int(e)) for k, e in rec.get("tilde", {}).items()))
            mono = Monomial(plain, tilde)
            terms[mono] = terms.get(mono, 0) + Fraction(rec["coeff"])
        return cls(terms)


def add(f: SymPoly, g: SymPoly) -> SymPoly:
    return f + g


def mul(f: SymPoly, g: SymPoly) -> SymPoly:
    return f * g


def power_sum(alpha: Partition, tilde: bool = False) -> SymPoly:
    """The monomial ``p_alpha = prod p_{alpha_i}``."""
    exps = tuple(sorted(cycle_counts(alpha).items()))
    mono = Monomial((), exps) if tilde else Monomial(exps, ())
    return SymPoly._raw({mono: Fraction(1)})


@lru_cache(maxsize=None)
def complete_h(k: int, tilde: bool = False) -> SymPoly:
    """``h_k = sum_{alpha |- k} p_alpha / z_alpha``; zero for negative ``k``."""
    if k < 0:
        return SymPoly()
    out = SymPoly()
    for alpha in partitions_of(k):
        out = out + power_sum(alpha, tilde) * Fraction(1, z_value(alpha))
    return out


@lru_cache(maxsize=None)
def schur(lam: Partition, tilde: bool = False) -> SymPoly:
    """``s_lam = sum_{alpha} chi^lam(alpha) p_alpha / z_alpha``."""
    out = SymPoly()
    for alpha in partitions_of(lam.weight):
        chi = character(lam, alpha)
        if chi:
            out = out + power_sum(alpha, tilde) * Fraction(chi, z_value(alpha))
    return out


def inner_product(f: SymPoly, g: SymPoly) -> Fraction:
    """Hall inner product, with the two variable sets orthogonal to each other."""
    if len(g) < len(f):
        f, g = g, f
    total = Fraction(0)
    for mono, c in f.items():
        other = g.coefficient(mono)
        if other:
            total += c * other * mono.z()
    return total


def _perp_side(ops: Exponents, target: Exponents):
    """Apply ``prod (k d/dp_k)**a`` to one side of a monomial.

    Returns ``(factor, remaining exponents)`` or ``None`` if the result is 0.
    """
    if not ops:
        return 1, target
    have = dict(target)
    factor = 1
    for k, a in ops:
        e = have.get(k, 0)
        if e < a:
            return None
        factor *= k**a * (factorial(e) // factorial(e - a))
        if e == a:
            del have[k]
        else:
            have[k] = e - a
    return factor, tuple(sorted(have.items()))


def perp(f: SymPoly, g: SymPoly) -> SymPoly:
    """Apply ``f^perp`` to ``g``, where ``p_n^perp = n d/dp_n`` on each variable set."""
    out: dict[Monomial, Fraction] = {}
    for fm, fc in f.items():
        for gm, gc in g.items():
            left = _perp_side(fm.plain, gm.plain)
            if left is None:
                continue
            right = _perp_side(fm.tilde, gm.tilde)
            if right is None:
                continue
            mono = Monomial(left[1], right[1])
            out[mono] = out.get(mono, 0) + fc * gc * (left[0] * right[0])
    return SymPoly._raw({m: c for m, c in out.items() if c})


def _cross_operator(f: SymPoly) -> SymPoly:
    """``D f = sum_k k d/dp_k d/dpt_k f``."""
    out: dict[Monomial, Fraction] = {}
    for mono, c in f.items():
        tilde = dict(mono.tilde)
        for idx, (k, a) in enumerate(mono.plain):
            b = tilde.get(k)
            if not b:
                continue
            plain = mono.plain[:idx] + (((k, a - 1),) if a > 1 else ()) + mono.plain[idx + 1:]
            t = dict(tilde)
            if b == 1:
                del t[k]
            else:
                t[k] = b - 1
            new = Monomial(plain, tuple(sorted(t.items())))
            out[new] = out.get(new, 0) + c * (k * a * b)
    return SymPoly._raw({m: c for m, c in out.items() if c})


def delta(f: SymPoly) -> SymPoly:
    """``Delta f = exp(D) f = sum_n D^n f / n!`` with ``D = sum_k k d_{p_k} d_{pt_k}``.

    ``D`` lowers degree, so the series stops after finitely many terms.
    """
    total = f
    term = f
    n = 0
    while True:
        n += 1
        term = _cross_operator(term) / n
        if term.is_zero():
            return total
        total = total + term


def skew_schur(lam: Partition, nu: Partition, tilde: bool = False) -> SymPoly:
    """``s_{lam/nu} = s_nu^perp(s_lam)``."""
    if not contains(nu, lam):
        return SymPoly()
    return perp(schur(nu, tilde), schur(lam, tilde))


_FIELD = 16
_FIELD_MASK = (1 << _FIELD) - 1


@lru_cache(maxsize=1 << 16)
def _pack(m: Monomial) -> int:
    """Exponent vector as one int, 16 bits per variable; products become sums.

    ``p_k`` sits in field ``2k - 2`` and ``pt_k`` in field ``2k - 1``.
    """
    out = 0
    for k, e in m.plain:
        out |= e << (_FIELD * (2 * k - 2))
    for k, e in m.tilde:
        out |= e << (_FIELD * (2 * k - 1))
    return out


@lru_cache(maxsize=1 << 16)
def _unpack(code: int) -> Monomial:
    plain, tilde = [], []
    slot = 0
    while code:
        e = code & _FIELD_MASK
        if e:
            (tilde if slot & 1 else plain).append((slot // 2 + 1, e))
        code >>= _FIELD
        slot += 1
    return Monomial(tuple(plain), tuple(tilde))


class _Scaled:
    """``terms / den`` with integer numerators over packed monomials.

    Working form for products and determinants: keeps Fraction arithmetic and
    tuple hashing out of the inner loops.
    """

    __slots__ = ("den", "terms")

    def __init__(self, den: int, terms: dict[int, int]):
        self.den = den
        self.terms = terms

    @classmethod
    def of(cls, f: SymPoly) -> "_Scaled":
        den, items = _common_denominator(f._terms) if f._terms else (1, [])
        return cls(den, {_pack(m): c for m, c in items})

    def times(self, other: "_Scaled") -> "_Scaled":
        out: dict[int, int] = {}
        get = out.get
        right = list(other.terms.items())
        for i, c1 in self.terms.items():
            for j, c2 in right:
                k = i + j
                out[k] = get(k, 0) + c1 * c2
        return _Scaled(self.den * other.den, {m: c for m, c in out.items() if c})

    def accumulate(self, other: "_Scaled", sign: int) -> None:
        den = lcm(self.den, other.den)
        a, b = den // self.den, sign * (den // other.den)
        terms = {m: c * a for m, c in self.terms.items()} if a != 1 else self.terms
        for m, c in other.terms.items():
            v = terms.get(m, 0) + c * b
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        self.den, self.terms = den, terms

    def reduced(self) -> "_Scaled":
        g = self.den
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                return self
        return _Scaled(self.den // g, {m: c // g for m, c in self.terms.items()})

    def to_sympoly(self) -> SymPoly:
        return SymPoly._raw({_unpack(m): Fraction(c, self.den) for m, c in self.terms.items()})


def determinant(matrix: Sequence[Sequence[SymPoly]]) -> SymPoly:
    """Exact determinant by Laplace expansion along rows, memoized on column sets."""
    d = len(matrix)
    if any(len(row) != d for row in matrix):
        raise PreconditionError("determinant needs a square matrix")
    if d == 0:
        return SymPoly.constant(1)
    entries = [[_Scaled.of(f) for f in row] for row in matrix]
    unit = _Scaled(1, {0: 1})
    memo: dict[int, _Scaled] = {}

    def minor(row: int, cols: int) -> _Scaled:
        if row == d:
            return unit
        hit = memo.get(cols)
        if hit is not None:
            return hit
        total = _Scaled(1, {})
        position = 0
        for c in range(d):
            if not cols >> c & 1:
                continue
            entry = entries[row][c]
            if entry.terms:
                sub = minor(row + 1, cols & ~(1 << c))
                if sub.terms:
                    total.accumulate(entry.times(sub), -1 if position & 1 else 1)
            position += 1
        total = total.reduced()
        memo[cols] = total
        return total

    # remaining row count is implied by the column mask, so it is a valid key alone
    return minor(0, (1 << d) - 1).to_sympoly()


def jacobi_trudi(lam: Partition, d: int, tilde: bool = False) -> SymPoly:
    """``det(h_{lam_i - i + j})`` over a ``d x d`` matrix."""
    if d < lam.length:
        raise PreconditionError(f"Jacobi-Trudi size {d} is below length({lam}) = {lam.length}")
    rows = [
        [complete_h(lam.part(i) - i + j, tilde) for j in range(1, d + 1)]
        for i in range(1, d + 1)
    ]
    return determinant(rows)


def _parse_complex(value) -> complex:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError(f"complex value must be [re, im], got {value!r}")
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, Number):
        return complex(value)
    raise ValueError(f"cannot read complex value from {value!r}")


@dataclass(frozen=True)
class SymbolSpec:
    """Finitely supported coefficients of ``log sigma``.

    ``p[k-1]`` multiplies ``t**k / k`` and ``p_tilde[k-1]`` multiplies
    ``t**-k / k``.
    """

    p: tuple[complex, ...] = ()
    p_tilde: tuple[complex, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(complex(x) for x in self.p))
        object.__setattr__(self, "p_tilde", tuple(complex(x) for x in self.p_tilde))

    def value(self, k: int, tilde: bool = False) -> complex:
        seq = self.p_tilde if tilde else self.p
        return seq[k - 1] if 1 <= k <= len(seq) else 0j

    def is_hermitian(self) -> bool:
        n = max(len(self.p), len(self.p_tilde))
        return all(self.value(k, True) == self.value(k).conjugate() for k in range(1, n + 1))

    def to_json(self) -> dict:
        return {
            "p": [[z.real, z.imag] for z in self.p],
            "p_tilde": [[z.real, z.imag] for z in self.p_tilde],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymbolSpec":
        unknown = set(data) - {"p", "p_tilde"}
        if unknown:
            raise ValueError(f"unknown symbol spec keys: {sorted(unknown)}")
        return cls(
            tuple(_parse_complex(v) for v in data.get("p", [])),
            tuple(_parse_complex(v) for v in data.get("p_tilde", [])),
        )

    @classmethod
    def load(cls, path) -> "SymbolSpec":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def evaluate(f: SymPoly, spec: SymbolSpec) -> complex:
    """Specialize ``p_k -> spec.p[k]`` and ``pt_k -> spec.p_tilde[k]`` in double precision."""
    total = 0j
    for mono, c in f.items():
        term = complex(float(c))
        for k, e in mono.plain:
            term *= spec.value(k) ** e
        for k, e in mono.tilde:
            term *= spec.value(k, True) ** e
        total += term
    return total
