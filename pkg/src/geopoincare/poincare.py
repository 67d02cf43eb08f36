"""Poincare-type series of the filtration ``G(k)`` on a locally free sheaf.

Two routes to the geometric series are provided:

* :func:`geom_series_def` sums the defining inclusion-exclusion over all
  ``2^s`` subsets of lines at every exponent of the box, with
  ``psi``-truncated line Euler characteristics;
* :func:`geom_series_closed` evaluates the closed form coefficient by
  coefficient after the change of variables ``w = ceil(c/r) + k D``.

The closed form can also be produced by expanding its Laurent product and
keeping the regular part (:func:`geom_series_laurent`).  For the structure
sheaf, :func:`dg_series` is the product ``prod_i (1 - t^{m^i})^{-chi(E~_i)}``
and :func:`h0_series_O` the inclusion-exclusion of ``H^0`` dimensions.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import NamedTuple, Sequence

from .eulerlib import (
    SheafSpec,
    chi_divisor_quotient,
    chi_line_quotient,
    gen_binom,
    h0_dim_quotient,
    psi,
    sym_power_chi,
)
from .mseries import MultiSeries, binom_expand, product, regular_part
from .resolution import ResolutionGraph, contacts_m, mu_of_subset

DEFAULT_COST_CAP = 10**8


class CostCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SeriesJob:
    graph: ResolutionGraph
    sheaf: SheafSpec
    box: int
    cost_cap: int = DEFAULT_COST_CAP

    def __post_init__(self):
        if self.box < 0:
            raise ValueError(f"box must be >= 0, got {self.box}")
        self.sheaf.validate(self.graph)

    @property
    def s(self) -> int:
        return self.graph.s

    def cost(self) -> int:
        s = self.graph.s
        return (self.box + 1) ** s * 2**s * s

    def check_cost(self) -> None:
        if self.cost() > self.cost_cap:
            raise CostCapExceeded(
                f"{self.cost()} primitive terms exceed the cap of {self.cost_cap} "
                f"(s={self.graph.s}, box={self.box})"
            )


def omega1_spec(g: ResolutionGraph) -> SheafSpec:
    return SheafSpec.one_forms(g)


def _box_points(s: int, box: int):
    return itertools.product(range(box + 1), repeat=s)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _subset_sign(mask: int) -> int:
    return -1 if bin(mask).count("1") % 2 else 1


def geom_coeff_at(job: SeriesJob, k: Sequence[int]) -> int:
    """Coefficient of ``t^k`` in the geometric series, straight from the
    defining subset sum."""
    g, sh = job.graph, job.sheaf
    k = tuple(k)
    if len(k) != g.s or any(x < 0 for x in k):
        raise ValueError(f"k must be a nonnegative vector of length {g.s}, got {k}")
    total = 0
    for size in range(g.s + 1):
        for I in itertools.combinations(range(1, g.s + 1), size):
            term = sh.rank * mu_of_subset(g, I)
            for i in I:
                shifted = [x + (1 if j + 1 in I and j + 1 != i else 0) for j, x in enumerate(k)]
                term += psi(chi_line_quotient(g, sh, i, shifted))
            total += (-1) ** size * term
    return -total


def geom_series_def(job: SeriesJob) -> MultiSeries:
    """Brute-force geometric series over the whole box.

    Same sum as :func:`geom_coeff_at` with the ``k``-independent parts
    hoisted: for ``i`` in ``I`` the psi argument is
    ``r + c_i - r*m_i^I + r*(k . d^i)``.
    """
    job.check_cost()
    g, sh = job.graph, job.sheaf
    s, r = g.s, sh.rank
    D = g.D
    # per subset: sign and list of (line, offset)
    subsets = []
    const = 0
    for mask in range(1 << s):
        sign = _subset_sign(mask)
        const += sign * r * mu_of_subset(g, mask)
        lines = [
            (i, r + sh.chern[i] - r * contacts_m(g, i + 1, mask)) for i in range(s) if (mask >> i) & 1
        ]
        subsets.append((sign, lines))
    out = {}
    for k in _box_points(s, job.box):
        rkd = [r * sum(a * b for a, b in zip(k, D[i])) for i in range(s)]
        total = const
        for sign, lines in subsets:
            acc = 0
            for i, off in lines:
                x = off + rkd[i]
                if x > 0:
                    acc += x
            total += sign * acc
        if total:
            out[k] = -total
    return MultiSeries(s, job.box, out)


def closed_coeff(job: SeriesJob, e: Sequence[int]) -> int:
    g, sh = job.graph, job.sheaf
    r, s = sh.rank, g.s
    w = [_ceil_div(sh.chern[i], r) + sum(a * b for a, b in zip(e, g.D[i])) for i in range(s)]
    if min(w) < 0:
        return 0
    first = r * prod(sym_power_chi(g.chi_smooth[i], w[i]) for i in range(s))
    # r * frac(-c/r) == (-c) mod r
    second = sum(
        g.zeta[i] * ((-sh.chern[i]) % r) * (-1) ** w[i] * gen_binom(1 - g.chi_smooth[i], w[i])
        for i in range(s)
        if g.zeta[i]
    )
    return first - second


def geom_series_closed(job: SeriesJob) -> MultiSeries:
    job.check_cost()
    return MultiSeries(job.s, job.box, ((e, closed_coeff(job, e)) for e in _box_points(job.s, job.box)))


def geom_series_laurent(job: SeriesJob) -> MultiSeries:
    """Closed form via its Laurent product: expand
    ``r prod (1-t^{m^i})^{-chi_i} - sum_i zeta_i ((-c_i) mod r) (1-t^{m^i})^{1-chi_i} prod_{j != i} (1-t^{m^j})^{-1}``,
    multiply by ``t^{-ceil(c/r) M}`` and keep the regular part."""
    g, sh = job.graph, job.sheaf
    s, r = g.s, sh.rank
    ceil = [_ceil_div(c, r) for c in sh.chern]
    shift = [-sum(ceil[i] * g.M[i][j] for i in range(s)) for j in range(s)]
    big = job.box + max(0, -min(shift))

    def factor(i, expo):
        return binom_expand(s, big, g.M[i], expo)

    total = r * product((factor(i, -g.chi_smooth[i]) for i in range(s)), s, big)
    for i in range(s):
        u = (-sh.chern[i]) % r
        if g.zeta[i] and u:
            term = product(
                (factor(j, 1 - g.chi_smooth[j] if j == i else -1) for j in range(s)), s, big
            )
            total = total - u * term
    moved = [(tuple(a + b for a, b in zip(e, shift)), c) for e, c in total.items()]
    return regular_part(moved, s, job.box)


def dg_series(g: ResolutionGraph, box: int) -> MultiSeries:
    return product((binom_expand(g.s, box, g.M[i], -g.chi_smooth[i]) for i in range(g.s)), g.s, box)


def chi_series(job: SeriesJob) -> MultiSeries:
    """Regular coefficients of the Euler-characteristic series,
    ``k(v) = -sum_I (-1)^|I| chi(D, G(v)/G(v+1_I))``."""
    job.check_cost()
    g, sh = job.graph, job.sheaf
    out = {}
    for v in _box_points(g.s, job.box):
        out[v] = -sum(_subset_sign(mask) * chi_divisor_quotient(g, sh, v, mask) for mask in range(1 << g.s))
    return MultiSeries(g.s, job.box, out)


def h0_series_O(g: ResolutionGraph, box: int, cost_cap: int = DEFAULT_COST_CAP) -> MultiSeries:
    SeriesJob(g, SheafSpec.structure_sheaf(g.s), box, cost_cap).check_cost()
    out = {}
    for k in _box_points(g.s, box):
        out[k] = -sum(_subset_sign(mask) * h0_dim_quotient(g, k, mask) for mask in range(1 << g.s))
    return MultiSeries(g.s, box, out)


class IdentityCheck(NamedTuple):
    lhs: int
    rhs: int
    equal: bool


def _check(lhs, rhs) -> IdentityCheck:
    return IdentityCheck(lhs, rhs, lhs == rhs)


def lemma9_check(g: ResolutionGraph, a: Sequence[int]) -> IdentityCheck:
    """Truncated subset sum against ``chi(prod_i S^{a_i} E~_i)``."""
    if len(a) != g.s or any(x < 0 for x in a):
        raise ValueError(f"a must be a nonnegative vector of length {g.s}")
    lhs = 0
    for mask in range(1 << g.s):
        term = mu_of_subset(g, mask)
        for i in range(g.s):
            if (mask >> i) & 1:
                x = a[i] + 1 - contacts_m(g, i + 1, mask)
                if x > 0:
                    term += x
        lhs += _subset_sign(mask) * term
    rhs = prod(sym_power_chi(g.chi_smooth[i], a[i]) for i in range(g.s))
    return _check(-lhs, rhs)


def _lemma10_weights(g: ResolutionGraph, a: Sequence[int]) -> list[int]:
    # weight of u_i in the left-hand side
    wts = [0] * g.s
    for mask in range(1 << g.s):
        sign = _subset_sign(mask)
        for i in range(g.s):
            if (mask >> i) & 1 and a[i] + 1 - contacts_m(g, i + 1, mask) > 0:
                wts[i] -= sign
    return wts


def lemma10_check(g: ResolutionGraph, a: Sequence[int], u: Sequence[int]) -> IdentityCheck:
    return lemma10_check_many(g, a, [u])[0]


def lemma10_check_many(g: ResolutionGraph, a: Sequence[int], us) -> list[IdentityCheck]:
    """Both sides of the signed-count identity for several ``u`` at one ``a``."""
    if len(a) != g.s or any(x < 0 for x in a):
        raise ValueError(f"a must be a nonnegative vector of length {g.s}")
    wts = _lemma10_weights(g, a)
    binoms = [
        g.zeta[i] * (-1) ** a[i] * gen_binom(1 - g.chi_smooth[i], a[i]) for i in range(g.s)
    ]
    out = []
    for u in us:
        if len(u) != g.s:
            raise ValueError(f"u must have length {g.s}")
        lhs = sum(x * y for x, y in zip(wts, u))
        rhs = sum(x * y for x, y in zip(binoms, u))
        out.append(_check(lhs, rhs))
    return out


METHODS = ("definition", "closed", "dg", "chi-series", "h0")


def compute(job: SeriesJob, method: str) -> MultiSeries:
    if method == "definition":
        return geom_series_def(job)
    if method == "closed":
        return geom_series_closed(job)
    if method == "dg":
        if not job.sheaf.is_structure_sheaf:
            raise ValueError("method 'dg' is only defined for the structure sheaf")
        job.check_cost()
        return dg_series(job.graph, job.box)
    if method == "chi-series":
        return chi_series(job)
    if method == "h0":
        if not job.sheaf.is_structure_sheaf:
            raise ValueError("method 'h0' is only defined for the structure sheaf")
        return h0_series_O(job.graph, job.box, job.cost_cap)
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
