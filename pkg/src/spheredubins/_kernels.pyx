# cython: boundscheck=False, wraparound=False, cdivision=True
# Compiled kernels: segment rotation matrices and the RK4 integrator.
# Mirrors _kernels_py; selection happens in _backend.

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin, sqrt, fabs

cnp.import_array()

BACKEND_NAME = "cython"


def rot_g(double phi):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((3, 3))
    cdef double c = cos(phi), s = sin(phi)
    out[0, 0] = c; out[0, 1] = -s; out[0, 2] = 0.0
    out[1, 0] = s; out[1, 1] = c; out[1, 2] = 0.0
    out[2, 0] = 0.0; out[2, 1] = 0.0; out[2, 2] = 1.0
    return out


def rot_l(double r, double phi):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((3, 3))
    cdef double c = cos(phi), s = sin(phi)
    cdef double w = sqrt(1.0 - r * r)
    out[0, 0] = 1.0 - (1.0 - c) * r * r
    out[0, 1] = -r * s
    out[0, 2] = (1.0 - c) * r * w
    out[1, 0] = r * s
    out[1, 1] = c
    out[1, 2] = -s * w
    out[2, 0] = (1.0 - c) * r * w
    out[2, 1] = s * w
    out[2, 2] = c + (1.0 - c) * r * r
    return out


def rot_r(double r, double phi):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((3, 3))
    cdef double c = cos(phi), s = sin(phi)
    cdef double w = sqrt(1.0 - r * r)
    out[0, 0] = 1.0 - (1.0 - c) * r * r
    out[0, 1] = -r * s
    out[0, 2] = -(1.0 - c) * r * w
    out[1, 0] = r * s
    out[1, 1] = c
    out[1, 2] = s * w
    out[2, 0] = -(1.0 - c) * r * w
    out[2, 1] = -s * w
    out[2, 2] = c + (1.0 - c) * r * r
    return out


cdef void _mat_mul(double a[3][3], double b[3][3], double out[3][3]) noexcept:
    cdef int i, j, k
    for i in range(3):
        for j in range(3):
            out[i][j] = 0.0
            for k in range(3):
                out[i][j] += a[i][k] * b[k][j]


cdef int _mat_inv(double a[3][3], double out[3][3]) noexcept:
    cdef double det
    out[0][0] = a[1][1] * a[2][2] - a[1][2] * a[2][1]
    out[0][1] = a[0][2] * a[2][1] - a[0][1] * a[2][2]
    out[0][2] = a[0][1] * a[1][2] - a[0][2] * a[1][1]
    out[1][0] = a[1][2] * a[2][0] - a[1][0] * a[2][2]
    out[1][1] = a[0][0] * a[2][2] - a[0][2] * a[2][0]
    out[1][2] = a[0][2] * a[1][0] - a[0][0] * a[1][2]
    out[2][0] = a[1][0] * a[2][1] - a[1][1] * a[2][0]
    out[2][1] = a[0][1] * a[2][0] - a[0][0] * a[2][1]
    out[2][2] = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    det = a[0][0] * out[0][0] + a[0][1] * out[1][0] + a[0][2] * out[2][0]
    if det == 0.0:
        return 1
    cdef int i, j
    for i in range(3):
        for j in range(3):
            out[i][j] /= det
    return 0


cdef void _project_rotation(double m[3][3]) noexcept:
    # Higham's iteration for the orthogonal polar factor; for a
    # near-rotation input a handful of steps reaches machine precision.
    cdef double inv[3][3]
    cdef double nxt[3][3]
    cdef double diff
    cdef int it, i, j
    for it in range(30):
        if _mat_inv(m, inv):
            return
        diff = 0.0
        for i in range(3):
            for j in range(3):
                nxt[i][j] = 0.5 * (m[i][j] + inv[j][i])
                diff += fabs(nxt[i][j] - m[i][j])
        for i in range(3):
            for j in range(3):
                m[i][j] = nxt[i][j]
        if diff < 1e-15:
            break


def integrate_rk4(double u_g, double arc_length, int steps):
    cdef double omega[3][3]
    cdef double rot[3][3]
    cdef double k1[3][3]
    cdef double k2[3][3]
    cdef double k3[3][3]
    cdef double k4[3][3]
    cdef double tmp[3][3]
    cdef double h = arc_length / steps
    cdef int i, a, b

    for a in range(3):
        for b in range(3):
            omega[a][b] = 0.0
            rot[a][b] = 1.0 if a == b else 0.0
    omega[0][1] = -1.0
    omega[1][0] = 1.0
    omega[1][2] = -u_g
    omega[2][1] = u_g

    for i in range(steps):
        _mat_mul(rot, omega, k1)
        for a in range(3):
            for b in range(3):
                tmp[a][b] = rot[a][b] + 0.5 * h * k1[a][b]
        _mat_mul(tmp, omega, k2)
        for a in range(3):
            for b in range(3):
                tmp[a][b] = rot[a][b] + 0.5 * h * k2[a][b]
        _mat_mul(tmp, omega, k3)
        for a in range(3):
            for b in range(3):
                tmp[a][b] = rot[a][b] + h * k3[a][b]
        _mat_mul(tmp, omega, k4)
        for a in range(3):
            for b in range(3):
                rot[a][b] += (h / 6.0) * (
                    k1[a][b] + 2.0 * (k2[a][b] + k3[a][b]) + k4[a][b]
                )
        if (i + 1) % 100 == 0:
            _project_rotation(rot)

    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((3, 3))
    for a in range(3):
        for b in range(3):
            out[a, b] = rot[a][b]
    return out


def nearest_rotation(m):
    cdef double buf[3][3]
    cdef int a, b
    for a in range(3):
        for b in range(3):
            buf[a][b] = m[a, b]
    _project_rotation(buf)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((3, 3))
    for a in range(3):
        for b in range(3):
            out[a, b] = buf[a][b]
    return out
