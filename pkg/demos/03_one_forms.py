# # Holomorphic 1-forms after one and two blow-ups
#
# The series is computed twice: by the subset sum over divisors and by the
# product formula.  For one or two lines both agree with known rational
# functions.

from geopoincare import Free, Origin, SeriesJob, build_graph, geom_series_closed, geom_series_def, omega1_spec

g = build_graph([Origin()])
job = SeriesJob(g, omega1_spec(g), 10)
print(geom_series_def(job).coefficients_1d())     # 1, 3, 5, ... from (1+t)/(1-t)^2
print(geom_series_closed(job).coefficients_1d())

# Adding one to the constant term gives the dimensions of the global
# sections on the filtration pieces.

print((geom_series_def(job) + 1).coefficients_1d())

# Two lines.

g2 = build_graph([Origin(), Free(1)])
job2 = SeriesJob(g2, omega1_spec(g2), 5)
print(geom_series_def(job2) == geom_series_closed(job2))
print(geom_series_closed(job2).to_text())
