"""Random perfect complexes for property tests."""
import random

from quiverdims.complexes import ChainMap, HomComplex, PerfectComplex, cone


def random_element(a, v, u, rng, radical=False, density=0.7):
    x = {}
    for b in a.piece(v, u):
        if radical and b == a.idem.get(v) and u == v:
            continue
        if rng.random() < density:
            x[b] = rng.choice([-2, -1, 1, 1, 2, 3])
    return x


def random_two_term(a, rng, max_summands=2, radical=False, degree=None):
    """[P^0 -> P^1] placed so that the source sits in ``degree``."""
    vs = list(a.vertices)
    src = [rng.choice(vs) for _ in range(rng.randint(1, max_summands))]
    dst = [rng.choice(vs) for _ in range(rng.randint(0, max_summands))]
    d = degree if degree is not None else rng.randint(-2, 1)
    diff = [[random_element(a, v, u, rng, radical) for u in src] for v in dst]
    return PerfectComplex(a, {d: src, d + 1: dst}, {d: diff} if dst else None)


def random_chain_map(X, Y, rng):
    """A random degree-zero cocycle of Hom(X, Y), as a chain map."""
    H = HomComplex(X, Y)
    if not H.coords(0):
        return ChainMap(X, Y, {})
    Z, _ = H._data(0)
    vec = [0] * Z.nrows
    for j in range(Z.ncols):
        c = rng.choice([0, 1, -1, 2])
        if c:
            col = Z.column(j)
            vec = [p + c * q for p, q in zip(vec, col)]
    return ChainMap(X, Y, H.to_components(0, vec))


def random_complex(a, seed, radical=False):
    rng = random.Random(seed)
    X = random_two_term(a, rng, radical=radical)
    if rng.random() < 0.5:
        return X
    Y = random_two_term(a, rng, radical=radical, degree=rng.randint(-1, 1))
    return cone(random_chain_map(X, Y, rng))


# one concrete instance of every catalog family
CATALOG_SAMPLES = ["linear_A:1", "linear_A:3", "dynkin:D4", "dynkin:E6,bipartite", "b_power:2,2", "b_power:2,3",
                   "b_power:3,2", "b_grid:3,2", "kronecker", "canonical:2,2,2", "canonical:2,3,4",
                   "bar_canonical:2,2,2", "example_8_1", "example_8_2", "example_8_3", "intro_family:1",
                   "intro_family:0", "gamma_d2:4", "reoriented_b3_square", "dynkin_square:A3"]
