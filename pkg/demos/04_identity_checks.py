# # Where the identities break
#
# For three or more lines the subset sum and the product formula stop
# agreeing.  The smallest witness is the star with two lines on the first.

from geopoincare import (
    Free,
    Origin,
    Satellite,
    SeriesJob,
    SheafSpec,
    build_graph,
    dg_series,
    geom_series_closed,
    geom_series_def,
    geom_series_laurent,
    lemma9_check,
)

star = build_graph([Origin(), Free(1), Free(1)])
job = SeriesJob(star, SheafSpec.structure_sheaf(3), 4)
d, c = geom_series_def(job), geom_series_closed(job)
print("def", d[(1, 0, 3)], "closed", c[(1, 0, 3)], "product", dg_series(star, 4)[(1, 0, 3)])

# The closed coefficients match the independent Laurent expansion, so the
# disagreement is not an arithmetic slip on that side.

print(c == geom_series_laurent(job))

# The weighted identity over a 4-chain fails at a = 0: the left side counts
# lines meeting all the others, and there are none.

chain = build_graph([Origin(), Free(1), Free(1), Free(2)])
print(lemma9_check(chain, (0, 0, 0, 0)))
print(lemma9_check(star, (0, 0, 0)))

# The same picture over every sequence, from the command line:
#   geopoincare check --suite closed-form --max-lines 4 --box 4
