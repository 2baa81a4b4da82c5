import itertools
import random

import pytest

from tnnflag import weyl
from tnnflag.linalg import Rat, gen_x, gen_y, mat_mul, identity_mat


def rand_rat(rng: random.Random, positive: bool = False):
    """Bounded random rational (numerator/denominator in 1..10)."""
    q = Rat(rng.randint(1, 10), rng.randint(1, 10))
    if not positive and rng.random() < 0.5:
        q = -q
    return q


def rand_params(rng, k, positive=False):
    return tuple(rand_rat(rng, positive) for _ in range(k))


def random_sl(n: int, rng: random.Random):
    """Random element of SL_n(Q): a product of random Chevalley generators."""
    g = identity_mat(n)
    for _ in range(rng.randint(3, 8)):
        i = rng.randint(1, n - 1)
        gen = gen_x if rng.random() < 0.5 else gen_y
        g = mat_mul(g, gen(n, i, rand_rat(rng)))
    return g


def subword_leq(u, w):
    """Bruhat order oracle: u <= w iff u is a product of a subword of a
    reduced word of w (brute force over all subwords)."""
    word = weyl.reduced_word(w)
    n = len(w)
    for r in range(len(word) + 1):
        for positions in itertools.combinations(range(len(word)), r):
            if weyl.word_to_perm(n, [word[p] for p in positions]) == u:
                return True
    return False
