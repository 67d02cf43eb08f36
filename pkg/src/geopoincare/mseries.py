"""Sparse multivariate power series with exact integer coefficients,
truncated to the box ``[0, N]^s``.

Coefficients outside the box are not represented; two series compare equal
when they agree on every exponent of the box.
"""
from __future__ import annotations

from typing import Iterable, Mapping

from .eulerlib import gen_binom


class DimensionMismatch(ValueError):
    pass


class ZeroStep(ValueError):
    pass


def _in_box(e, box: int) -> bool:
    return all(0 <= x <= box for x in e)


class MultiSeries:
    __slots__ = ("s", "box", "_terms")

    def __init__(self, s: int, box: int, terms: Mapping | Iterable = ()):
        if s < 1 or box < 0:
            raise ValueError("need s >= 1 and box >= 0")
        self.s = s
        self.box = box
        acc: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != s:
                raise DimensionMismatch(f"exponent {e} has length {len(e)}, expected {s}")
            if _in_box(e, box):
                acc[e] = acc.get(e, 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c != 0}

    # -- access ---------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __getitem__(self, e) -> int:
        e = tuple(e)
        if len(e) != self.s or not _in_box(e, self.box):
            raise KeyError(f"{e} is outside the box [0,{self.box}]^{self.s}")
        return self._terms.get(e, 0)

    def items(self):
        """Nonzero terms sorted lexicographically by exponent."""
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficients_1d(self) -> list[int]:
        if self.s != 1:
            raise DimensionMismatch("coefficients_1d needs a univariate series")
        return [self._terms.get((k,), 0) for k in range(self.box + 1)]

    # -- comparison -----------------------------------------------------
    def _check(self, other: "MultiSeries"):
        if not isinstance(other, MultiSeries):
            raise TypeError(f"expected MultiSeries, got {type(other).__name__}")
        if (self.s, self.box) != (other.s, other.box):
            raise DimensionMismatch(
                f"series shapes differ: (s={self.s}, box={self.box}) vs (s={other.s}, box={other.box})"
            )

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (self.s, self.box) == (other.s, other.box) and self._terms == other._terms

    def __hash__(self):
        return hash((self.s, self.box, frozenset(self._terms.items())))

    def first_difference(self, other: "MultiSeries"):
        """Lexicographically smallest exponent where the series differ, or None."""
        self._check(other)
        keys = sorted(set(self._terms) | set(other._terms))
        for e in keys:
            a, b = self._terms.get(e, 0), other._terms.get(e, 0)
            if a != b:
                return e, a, b
        return None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = constant(self.s, self.box, other)
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return MultiSeries(self.s, self.box, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiSeries(self.s, self.box, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = constant(self.s, self.box, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiSeries(self.s, self.box, {e: other * c for e, c in self._terms.items()})
        return mul(self, other)

    __rmul__ = __mul__

    def shift(self, e) -> "MultiSeries":
        """Multiply by ``t^e`` (``e`` may have negative entries) and truncate."""
        return regular_part(
            [(tuple(a + b for a, b in zip(k, e)), c) for k, c in self._terms.items()], self.s, self.box
        )

    # -- display / serialization ---------------------------------------
    def __repr__(self):
        return f"MultiSeries(s={self.s}, box={self.box}, {self.to_text()})"

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            factors = []
            for i, x in enumerate(e):
                if x == 1:
                    factors.append(f"t{i + 1}" if self.s > 1 else "t")
                elif x > 1:
                    factors.append((f"t{i + 1}" if self.s > 1 else "t") + f"^{x}")
            if not factors:
                mono = str(c)
            elif c == 1:
                mono = "*".join(factors)
            elif c == -1:
                mono = "-" + "*".join(factors)
            else:
                mono = f"{c}*" + "*".join(factors)
            parts.append(mono)
        return " + ".join(parts).replace("+ -", "- ")

    def terms_json(self) -> list[dict]:
        return [{"exp": list(e), "coef": str(c)} for e, c in self.items()]

    @classmethod
    def from_terms_json(cls, s: int, box: int, terms: list[dict]) -> "MultiSeries":
        return cls(s, box, [(t["exp"], int(t["coef"])) for t in terms])


def constant(s: int, box: int, c: int = 1) -> MultiSeries:
    return MultiSeries(s, box, {(0,) * s: c})


def monomial(s: int, box: int, e, c: int = 1) -> MultiSeries:
    """``c * t^e``; the zero series if ``e`` leaves the box."""
    e = tuple(e)
    if len(e) != s:
        raise DimensionMismatch(f"exponent {e} has length {len(e)}, expected {s}")
    return MultiSeries(s, box, {e: c} if _in_box(e, box) else {})


def mul(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    a._check(b)
    box = a.box
    out: dict[tuple[int, ...], int] = {}
    bt = b.items()
    for ea, ca in a.items():
        for eb, cb in bt:
            e = tuple(x + y for x, y in zip(ea, eb))
            if all(x <= box for x in e):
                out[e] = out.get(e, 0) + ca * cb
    return MultiSeries(a.s, box, out)


def binom_expand(s: int, box: int, m, e: int) -> MultiSeries:
    """Truncation of ``(1 - t^m)^e`` for any integer ``e``."""
    m = tuple(m)
    if len(m) != s:
        raise DimensionMismatch(f"step {m} has length {len(m)}, expected {s}")
    if any(x < 0 for x in m):
        raise ValueError(f"step {m} must be nonnegative")
    if not any(m):
        raise ZeroStep("binom_expand needs a nonzero step")
    out = {}
    j = 0
    while all(j * x <= box for x in m):
        c = (-1) ** j * gen_binom(e, j)
        if c:
            out[tuple(j * x for x in m)] = c
        j += 1
    return MultiSeries(s, box, out)


def regular_part(terms: Iterable, s: int, box: int) -> MultiSeries:
    """Sum of monomials ``(exp, coef)``, dropping exponents with a negative entry."""
    return MultiSeries(s, box, [(e, c) for e, c in terms if all(x >= 0 for x in e)])


def product(factors: Iterable[MultiSeries], s: int, box: int) -> MultiSeries:
    acc = constant(s, box)
    for f in factors:
        acc = mul(acc, f)
    return acc
