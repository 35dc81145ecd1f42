"""Pure-Python versions of the hot kernels.

Same signatures and results as the compiled ``_kernels`` module; used when
the extension is not built or when ``HYPERCONIC_PURE_PYTHON=1``.
"""
import math

GEOMETRIC = 0
OUTER = 1
LEFT_CONTRACTION = 2

SIGMOID = 0
SINE = 1

_HALF_PI = 0.5 * math.pi


def reorder_sign(a, b):
    """Sign of moving the basis vectors of blade ``b`` past those of ``a``."""
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1.0 if swaps & 1 else 1.0


def blade_product(kind, masks_a, coefs_a, masks_b, coefs_b, neg_mask, dim):
    """Multiply two sparse multivectors given as parallel mask/coef sequences.

    Returns a dict mask -> coefficient (zeros not pruned). ``dim`` is unused
    here; the compiled kernel sizes its accumulator with it.
    """
    out = {}
    for ma, ca in zip(masks_a, coefs_a):
        ma = int(ma)
        for mb, cb in zip(masks_b, coefs_b):
            mb = int(mb)
            common = ma & mb
            if kind == OUTER and common:
                continue
            if kind == LEFT_CONTRACTION and common != ma:
                continue
            s = reorder_sign(ma, mb)
            if bin(common & neg_mask).count("1") & 1:
                s = -s
            key = ma ^ mb
            out[key] = out.get(key, 0.0) + s * ca * cb
    return out


def _transfer(kind, beta, z):
    if kind == SIGMOID:
        f = math.tanh(0.5 * beta * z)
        return f, 0.5 * beta * (1.0 - f * f)
    t = beta * z
    if t > _HALF_PI:
        return 1.0, 0.0
    if t < -_HALF_PI:
        return -1.0, 0.0
    return math.sin(t), beta * math.cos(t)


def sgd_epoch(w, phi, y, order, eta, kind, beta):
    """One pass of per-sample gradient descent on (f(w.phi) - y)^2.

    ``w`` is updated in place; returns the summed loss seen during the pass.
    """
    ws = [float(v) for v in w]
    rows = phi.tolist()
    ys = y.tolist()
    n = len(ws)
    total = 0.0
    for r in order.tolist():
        row = rows[r]
        z = 0.0
        for j in range(n):
            z += ws[j] * row[j]
        f, df = _transfer(kind, beta, z)
        err = f - ys[r]
        total += err * err
        g = 2.0 * err * df * eta
        for j in range(n):
            ws[j] -= g * row[j]
    w[:] = ws
    return total
