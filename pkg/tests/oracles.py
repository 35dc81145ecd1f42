"""Independent reference implementations used only by the tests.

The Cayley expander works on explicit index words and bubble-sorts them,
sharing nothing with the bitmask kernels under test.
"""
import math

import numpy as np

from hyperconic.ga import Multivector, mask_indices


def word_product(u, v, squares):
    """Product of two basis words (tuples of 1-based indices) -> (sign, sorted word)."""
    word = list(u) + list(v)
    sign = 1
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(word) - 1:
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
            elif word[i] == word[i + 1]:
                sign *= squares[word[i]]
                del word[i : i + 2]
                changed = True
                continue
            i += 1
    return sign, tuple(word)


def to_words(mv):
    return {mask_indices(m): c for m, c in mv.terms.items()}


def naive_product(kind, a, b):
    """Geometric / outer / left-contraction product by explicit expansion.

    Outer and inner are grade projections of the geometric product of each
    pair of basis blades: grade r+s for the wedge, s-r (r <= s) for the
    left contraction.
    """
    sig = a.signature
    squares = {i: sig.square(i) for i in range(1, sig.dim + 1)}
    acc = {}
    for u, cu in to_words(a).items():
        for v, cv in to_words(b).items():
            s, w = word_product(u, v, squares)
            if kind == "outer" and len(w) != len(u) + len(v):
                continue
            if kind == "inner" and (len(u) > len(v) or len(w) != len(v) - len(u)):
                continue
            acc[w] = acc.get(w, 0.0) + s * cu * cv
    return acc


def max_coef_error(mv, words, scale):
    got = to_words(mv)
    keys = set(got) | set(words)
    return max((abs(got.get(k, 0.0) - words.get(k, 0.0)) for k in keys), default=0.0) / scale


def random_sparse(rng, sig, max_terms=6):
    n = int(rng.integers(1, max_terms + 1))
    masks = rng.integers(0, 1 << sig.dim, size=n)
    return Multivector({int(m): float(c) for m, c in zip(masks, rng.normal(size=n))}, sig)


def l1(mv):
    return sum(abs(c) for c in mv.terms.values())


def conic_through(points):
    """Nullspace of the 5x6 monomial system written in plain monomials
    (x², y², xy, x, y, 1); returns the symmetric matrix up to scale."""
    P = np.asarray(points, dtype=float)
    x, y = P[:, 0], P[:, 1]
    M = np.column_stack([x * x, y * y, x * y, x, y, np.ones_like(x)])
    _, _, vt = np.linalg.svd(M)
    a, b, c, d, e, f = vt[-1]
    return np.array([[a, c / 2, d / 2], [c / 2, b, e / 2], [d / 2, e / 2, f]])


def cosine(u, v):
    return float(np.dot(u, v) / (np.linalg.norm(u) * np.linalg.norm(v)))


def sphere_inside(center, radius, x):
    """Euclidean distance oracle: +1 inside, -1 outside, 0 on."""
    d2 = float(np.sum((np.asarray(x) - np.asarray(center)) ** 2))
    return math.copysign(1.0, radius * radius - d2) if d2 != radius * radius else 0.0
