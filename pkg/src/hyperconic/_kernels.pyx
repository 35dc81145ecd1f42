# cython: language_level=3
"""Compiled kernels: sparse blade products and the per-sample SGD pass.

Mirrors ``hyperconic._pykernels`` exactly, operation for operation.
"""
from libc.math cimport tanh, sin, cos, M_PI
from libc.stdlib cimport calloc, free

cdef enum:
    K_GEOMETRIC = 0
    K_OUTER = 1
    K_LEFT_CONTRACTION = 2
    T_SIGMOID = 0
    T_SINE = 1

GEOMETRIC = K_GEOMETRIC
OUTER = K_OUTER
LEFT_CONTRACTION = K_LEFT_CONTRACTION
SIGMOID = T_SIGMOID
SINE = T_SINE


cdef inline int _popcount(long long v) noexcept nogil:
    cdef int c = 0
    while v:
        v &= v - 1
        c += 1
    return c


cdef inline double _reorder_sign(long long a, long long b) noexcept nogil:
    cdef int swaps = 0
    a >>= 1
    while a:
        swaps += _popcount(a & b)
        a >>= 1
    return -1.0 if swaps & 1 else 1.0


def reorder_sign(long long a, long long b):
    return _reorder_sign(a, b)


def blade_product(int kind, const long long[:] masks_a, const double[:] coefs_a,
                  const long long[:] masks_b, const double[:] coefs_b,
                  long long neg_mask, int dim):
    cdef Py_ssize_t na = masks_a.shape[0]
    cdef Py_ssize_t nb = masks_b.shape[0]
    cdef Py_ssize_t size = (<Py_ssize_t>1) << dim
    cdef Py_ssize_t i, j, n_touched = 0
    cdef long long ma, mb, common, key
    cdef double s
    cdef double *acc = <double *>calloc(size, sizeof(double))
    cdef char *seen = <char *>calloc(size, sizeof(char))
    cdef long long *touched = <long long *>calloc(size, sizeof(long long))
    if acc == NULL or seen == NULL or touched == NULL:
        free(acc)
        free(seen)
        free(touched)
        raise MemoryError()
    try:
        with nogil:
            for i in range(na):
                ma = masks_a[i]
                for j in range(nb):
                    mb = masks_b[j]
                    common = ma & mb
                    if kind == K_OUTER and common != 0:
                        continue
                    if kind == K_LEFT_CONTRACTION and common != ma:
                        continue
                    s = _reorder_sign(ma, mb)
                    if _popcount(common & neg_mask) & 1:
                        s = -s
                    key = ma ^ mb
                    if not seen[key]:
                        seen[key] = 1
                        touched[n_touched] = key
                        n_touched += 1
                    acc[key] += s * coefs_a[i] * coefs_b[j]
        return {touched[i]: acc[touched[i]] for i in range(n_touched)}
    finally:
        free(acc)
        free(seen)
        free(touched)


cdef inline void _transfer(int kind, double beta, double z, double *f, double *df) noexcept nogil:
    cdef double t
    if kind == T_SIGMOID:
        f[0] = tanh(0.5 * beta * z)
        df[0] = 0.5 * beta * (1.0 - f[0] * f[0])
        return
    t = beta * z
    if t > 0.5 * M_PI:
        f[0] = 1.0
        df[0] = 0.0
    elif t < -0.5 * M_PI:
        f[0] = -1.0
        df[0] = 0.0
    else:
        f[0] = sin(t)
        df[0] = beta * cos(t)


def sgd_epoch(double[:] w, const double[:, :] phi, const double[:] y,
              const long long[:] order, double eta, int kind, double beta):
    cdef Py_ssize_t n = w.shape[0]
    cdef Py_ssize_t k, j, r
    cdef double z, f = 0.0, df = 0.0, err, g, total = 0.0
    with nogil:
        for k in range(order.shape[0]):
            r = order[k]
            z = 0.0
            for j in range(n):
                z += w[j] * phi[r, j]
            _transfer(kind, beta, z, &f, &df)
            err = f - y[r]
            total += err * err
            g = 2.0 * err * df * eta
            for j in range(n):
                w[j] -= g * phi[r, j]
    return total
