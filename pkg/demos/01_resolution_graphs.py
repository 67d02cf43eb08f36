# # Resolution graphs
#
# A sequence of point blow-ups is described by where each new center sits:
# the origin, a free point on one line, or the satellite point where two
# lines meet.  Replaying it gives the dual graph and the matrices D and M.

from geopoincare import Free, Origin, Satellite, build_graph, enumerate_sequences

chain = build_graph([Origin(), Free(1), Satellite((1, 2))])
print("edges", chain.edges)
print("self-intersections", chain.self_int)

# D is minus the intersection form; its inverse M has positive integer
# entries, the multiplicities of the lines.

for row in chain.D:
    print("D", row)
for row in chain.M:
    print("M", row)

# Euler characteristics of the punctured lines, 2 minus the valence.

print("chi", chain.chi_smooth)

# All sequences with up to four blow-ups, in canonical order.

counts = {}
for seq in enumerate_sequences(4):
    counts[len(seq)] = counts.get(len(seq), 0) + 1
print(counts)
