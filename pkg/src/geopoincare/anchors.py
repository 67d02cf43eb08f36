"""Reference series with known rational generating functions.

Each anchor pairs a computed truncation with the expansion of a rational
function built independently from geometric factors.
"""
from __future__ import annotations

from dataclasses import dataclass

from .eulerlib import SheafSpec
from .mseries import MultiSeries, binom_expand, constant, monomial
from .poincare import SeriesJob, geom_series_closed, geom_series_def, omega1_spec
from .resolution import Free, Origin, build_graph

SINGLE_LINE = (Origin(),)
TWO_LINES = (Origin(), Free(1))


@dataclass(frozen=True)
class Anchor:
    label: str
    formula: str
    computed: dict  # method name -> MultiSeries
    expected: MultiSeries

    @property
    def ok(self) -> bool:
        return all(series == self.expected for series in self.computed.values())


def _geometric(s, box, m, c=1):
    return c * binom_expand(s, box, m, -1)


def reference_anchors(box: int = 10) -> list[Anchor]:
    one = build_graph(SINGLE_LINE)
    two = build_graph(TWO_LINES)

    o_job = SeriesJob(one, SheafSpec.structure_sheaf(1), box)
    w1_job = SeriesJob(one, omega1_spec(one), box)
    w2_job = SeriesJob(two, omega1_spec(two), box)

    inv_sq = binom_expand(1, box, (1,), -2)
    w1_def = geom_series_def(w1_job)
    return [
        Anchor(
            "structure sheaf, one blow-up",
            "1/(1-t)^2",
            {"definition": geom_series_def(o_job), "closed": geom_series_closed(o_job)},
            inv_sq,
        ),
        Anchor(
            "1-forms, one blow-up",
            "(1+t)/(1-t)^2",
            {"definition": w1_def, "closed": geom_series_closed(w1_job)},
            (constant(1, box) + monomial(1, box, (1,))) * inv_sq,
        ),
        Anchor(
            "1-forms, one blow-up, global sections",
            "(2-t+t^2)/(1-t)^2",
            {"definition+1": w1_def + 1},
            (constant(1, box, 2) - monomial(1, box, (1,)) + monomial(1, box, (2,))) * inv_sq,
        ),
        Anchor(
            "1-forms, two blow-ups",
            "(1+t1*t2^2)/((1-t1*t2)(1-t1*t2^2))",
            {"definition": geom_series_def(w2_job), "closed": geom_series_closed(w2_job)},
            (constant(2, box) + monomial(2, box, (1, 2)))
            * _geometric(2, box, (1, 1))
            * _geometric(2, box, (1, 2)),
        ),
    ]


def anchors_json(anchors: list[Anchor]) -> list[dict]:
    out = []
    for a in anchors:
        s, box = a.expected.s, a.expected.box
        out.append(
            {
                "label": a.label,
                "formula": a.formula,
                "s": s,
                "box": box,
                "ok": a.ok,
                "expected": a.expected.terms_json(),
                "computed": {k: v.terms_json() for k, v in sorted(a.computed.items())},
            }
        )
    return out

