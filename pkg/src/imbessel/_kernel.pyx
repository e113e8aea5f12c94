# cython: language_level=3, boundscheck=False, cdivision=False
"""Compiled series kernel.

Mirrors imbessel._kernel_py.series_sums operation for operation so the
two backends produce bit-identical doubles (the build disables FP
contraction).  See the pure-Python module for the full contract.
"""


def series_sums(int modified, double a0, double b0, double nu, double w,
                int n_terms):
    cdef double a = a0
    cdef double b = b0
    cdef double p = a0
    cdef double q = b0
    cdef double dp = 0.0
    cdef double dq = 0.0
    cdef double t = 1.0
    cdef double m = a0 if a0 >= 0 else -a0
    cdef double ab = b0 if b0 >= 0 else -b0
    cdef double fk, denom, na, nb, ta, tb, ap, aq
    cdef int k
    if ab > m:
        m = ab
    with nogil:
        for k in range(1, n_terms + 1):
            fk = <double> k
            denom = fk * (fk * fk + nu * nu)
            if modified:
                na = (fk * a - nu * b) / denom
                nb = (nu * a + fk * b) / denom
            else:
                na = (-(fk * a - nu * b)) / denom
                nb = (-(nu * a + fk * b)) / denom
            a = na
            b = nb
            t = t * w
            ta = a * t
            tb = b * t
            p = p + ta
            q = q + tb
            dp = dp + fk * ta
            dq = dq + fk * tb
            ap = p if p >= 0 else -p
            aq = q if q >= 0 else -q
            if ap > m:
                m = ap
            if aq > m:
                m = aq
    return p, q, dp, dq, m
