"""Independent expansions used as expected values."""
import itertools


def lattice_expansion(s, box, generators, numerator=None):
    """Coefficients of ``sum_{(e, c) in numerator} c t^e / prod_g (1 - t^g)``
    by enumerating points ``e + n_1 g_1 + ...`` inside the box."""
    numerator = numerator or {(0,) * s: 1}
    bound = box + 1
    out = {}
    for n in itertools.product(range(bound), repeat=len(generators)):
        base = [sum(nj * g[i] for nj, g in zip(n, generators)) for i in range(s)]
        if any(x > box for x in base):
            continue
        for e, c in numerator.items():
            p = tuple(b + x for b, x in zip(base, e))
            if all(x <= box for x in p):
                out[p] = out.get(p, 0) + c
    return {e: c for e, c in out.items() if c}


def global_sections_single(box):
    """dim F(k)/F(k+1) = 2 d_k - d_{k-1} + d_{k-2}, d_j = j + 1 (0 for j < 0)."""
    d = lambda j: j + 1 if j >= 0 else 0
    return [2 * d(k) - d(k - 1) + d(k - 2) for k in range(box + 1)]
