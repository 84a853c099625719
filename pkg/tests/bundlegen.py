"""Random Chern data for property and acceptance tests."""

import random
from fractions import Fraction

from as_kit.asclass import EigenbundleData, GBundleChernData
from as_kit.builder import build_vanishing_family
from as_kit.cohring import builtin_ring


def random_class(ring, degree, rng, spread=4):
    out = ring.zero()
    for name in ring.basis_in_degree(degree):
        out = out + ring.gen(name) * Fraction(rng.randint(-spread, spread), rng.randint(1, 3))
    return out


def random_eigen(ring, rng, max_rank=3):
    d = rng.randint(0, max_rank)
    return EigenbundleData(d, tuple(random_class(ring, 2 * j, rng) for j in range(1, d + 1)), ring)


def random_bundle(ring, rng, max_rank=3):
    h = (ring.p - 1) // 2
    return GBundleChernData(ring.p, ring, tuple(random_eigen(ring, rng, max_rank) for _ in range(h)))


def exponential_eigen(ring, c1, d):
    chern, power, fact = [], ring.one(), 1
    for j in range(1, d + 1):
        power = power * c1
        fact *= j
        chern.append(power / fact)
    return EigenbundleData(d, tuple(chern), ring)


def vanishing_bundle(ring, rng):
    """A bundle with vanishing class: a built family member for p=7, zero data otherwise."""
    p, h = ring.p, (ring.p - 1) // 2
    if p == 7:
        N = max(1, ring.top // 2)
        beta = random_class(ring, 2, rng)
        while beta.is_zero():
            beta = random_class(ring, 2, rng)
        mult = [rng.randint(N, N + 1) for _ in range(h)]
        return build_vanishing_family(ring, beta, mult, count=rng.randint(1, 3))[-1]
    return GBundleChernData(p, ring, tuple(exponential_eigen(ring, ring.zero(), rng.randint(0, 3))
                                           for _ in range(h)))


def near_miss(bundle, rng):
    """Perturb one Chern class of a vanishing bundle; the class may or may not survive."""
    ring = bundle.ring
    eigen = list(bundle.eigen)
    candidates = [i for i, ek in enumerate(eigen) if ek.rank > 0]
    if not candidates:
        eigen[0] = EigenbundleData(1, (random_class(ring, 2, rng) + ring.gen(ring.basis_in_degree(2)[0]),), ring)
        return GBundleChernData(bundle.p, ring, tuple(eigen))
    i = rng.choice(candidates)
    ek = eigen[i]
    j = rng.randint(1, min(ek.rank, max(1, ring.top // 2)))
    chern = list(ek.chern)
    bump = random_class(ring, 2 * j, rng)
    chern[j - 1] = chern[j - 1] + bump
    eigen[i] = EigenbundleData(ek.rank, tuple(chern), ring)
    return GBundleChernData(bundle.p, ring, tuple(eigen))


def sample_rings(p):
    return [builtin_ring(f"cp{N}", p) for N in range(1, 5)] + [builtin_ring("cp2#cp2bar", p)]


def rng_for(seed):
    return random.Random(seed)
