# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: order-2 jet evaluation of the host parametrizations,
the pointwise null-frame solve, and the equation coefficients.

Mirrors the pure-Python pipeline (same formulas, same e0 completion); the
parity test keeps both backends aligned.
"""

from libc.math cimport fabs, sqrt

from .errors import DegeneracyError, DomainError

cdef double DOMAIN_MARGIN = 1e-6


cdef struct Jet:
    double v, dx, dy, dxx, dxy, dyy


cdef inline Jet jconst(double c) noexcept nogil:
    cdef Jet j
    j.v = c; j.dx = 0.0; j.dy = 0.0; j.dxx = 0.0; j.dxy = 0.0; j.dyy = 0.0
    return j


cdef inline Jet jvar_x(double x) noexcept nogil:
    cdef Jet j = jconst(x)
    j.dx = 1.0
    return j


cdef inline Jet jvar_y(double y) noexcept nogil:
    cdef Jet j = jconst(y)
    j.dy = 1.0
    return j


cdef inline Jet jadd(Jet a, Jet b) noexcept nogil:
    cdef Jet j
    j.v = a.v + b.v; j.dx = a.dx + b.dx; j.dy = a.dy + b.dy
    j.dxx = a.dxx + b.dxx; j.dxy = a.dxy + b.dxy; j.dyy = a.dyy + b.dyy
    return j


cdef inline Jet jsub(Jet a, Jet b) noexcept nogil:
    cdef Jet j
    j.v = a.v - b.v; j.dx = a.dx - b.dx; j.dy = a.dy - b.dy
    j.dxx = a.dxx - b.dxx; j.dxy = a.dxy - b.dxy; j.dyy = a.dyy - b.dyy
    return j


cdef inline Jet jscale(Jet a, double s) noexcept nogil:
    cdef Jet j
    j.v = a.v * s; j.dx = a.dx * s; j.dy = a.dy * s
    j.dxx = a.dxx * s; j.dxy = a.dxy * s; j.dyy = a.dyy * s
    return j


cdef inline Jet jmul(Jet a, Jet b) noexcept nogil:
    cdef Jet j
    j.v = a.v * b.v
    j.dx = a.dx * b.v + a.v * b.dx
    j.dy = a.dy * b.v + a.v * b.dy
    j.dxx = a.dxx * b.v + 2.0 * a.dx * b.dx + a.v * b.dxx
    j.dxy = a.dxy * b.v + a.dx * b.dy + a.dy * b.dx + a.v * b.dxy
    j.dyy = a.dyy * b.v + 2.0 * a.dy * b.dy + a.v * b.dyy
    return j


cdef inline Jet jrecip(Jet b) noexcept nogil:
    cdef Jet j
    cdef double iv = 1.0 / b.v
    cdef double iv2 = iv * iv
    cdef double iv3 = iv2 * iv
    j.v = iv
    j.dx = -b.dx * iv2
    j.dy = -b.dy * iv2
    j.dxx = (2.0 * b.dx * b.dx - b.v * b.dxx) * iv3
    j.dxy = (2.0 * b.dx * b.dy - b.v * b.dxy) * iv3
    j.dyy = (2.0 * b.dy * b.dy - b.v * b.dyy) * iv3
    return j


cdef inline Jet jsqrt(Jet a) noexcept nogil:
    cdef Jet j
    cdef double s = sqrt(a.v)
    cdef double h = 0.5 / s
    cdef double q = 0.25 / (s * a.v)
    j.v = s
    j.dx = a.dx * h
    j.dy = a.dy * h
    j.dxx = a.dxx * h - a.dx * a.dx * q
    j.dxy = a.dxy * h - a.dx * a.dy * q
    j.dyy = a.dyy * h - a.dy * a.dy * q
    return j


cdef inline double mdot(double* u, double* v) noexcept nogil:
    return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3]


cdef int build_jets(int code, double* p, double x, double y,
                    Jet* phi, double* xi) except -1:
    """Fill phi[0..3] with component jets and xi[0..3] with the null field.

    Returns 0 on success; raises DomainError outside the chart.
    """
    cdef Jet X = jvar_x(x)
    cdef Jet Y = jvar_y(y)
    cdef Jet one = jconst(1.0)
    cdef Jet g, w, s, f, fx, fy, n1, n2, n3, iw
    cdef double k, qx, qy, cxx, cyy

    if code <= 2:
        k = p[0]
        if code == 0:
            qx = k; qy = k
        elif code == 1:
            qx = k + 0.5; qy = k + 0.5
        else:
            qx = k + 0.5; qy = k
        # g = qx/2 x^2 + qy/2 y^2 + a/6 x^3 + b/2 x y^2 + c/6 y^3
        g = jadd(jadd(jscale(jmul(X, X), 0.5 * qx), jscale(jmul(Y, Y), 0.5 * qy)),
                 jadd(jadd(jscale(jmul(jmul(X, X), X), p[1] / 6.0),
                           jscale(jmul(X, jmul(Y, Y)), 0.5 * p[2])),
                      jscale(jmul(jmul(Y, Y), Y), p[3] / 6.0)))
        w = jadd(one, g)
        if fabs(w.v) < 1e-12:
            raise DegeneracyError("immersion factor 1 + g vanishes")
        if code == 0:
            phi[0] = w; phi[1] = X; phi[2] = Y; phi[3] = g
            xi[0] = 1.0; xi[1] = 0.0; xi[2] = 0.0; xi[3] = 1.0
        elif code == 1:
            if x * x + y * y > (1.0 - DOMAIN_MARGIN) * (1.0 - DOMAIN_MARGIN):
                raise DomainError(
                    f"point (x={x!r}, y={y!r}) outside the light-cone chart")
            s = jsqrt(jsub(one, jadd(jmul(X, X), jmul(Y, Y))))
            phi[0] = w; phi[1] = jmul(w, X); phi[2] = jmul(w, Y); phi[3] = jmul(w, s)
            xi[0] = 1.0; xi[1] = x; xi[2] = y; xi[3] = s.v
        else:
            if fabs(x) > 1.0 - DOMAIN_MARGIN:
                raise DomainError(
                    f"coordinate x={x!r} outside the cylinder strip")
            s = jsqrt(jsub(one, jmul(X, X)))
            phi[0] = w; phi[1] = jmul(w, X); phi[2] = Y; phi[3] = jmul(w, s)
            xi[0] = 1.0; xi[1] = x; xi[2] = 0.0; xi[3] = s.v
        return 0

    # generic graph host: params (k, gxx, gyy, fa, fd, fb, fc,
    #                             delta, epsilon, zeta, lam, f0)
    k = p[0]
    cxx = k - p[1]
    cyy = k - p[2]
    f = jadd(jconst(p[11]),
             jadd(jadd(jscale(jmul(X, X), cxx), jscale(jmul(Y, Y), cyy)),
                  jadd(jadd(jscale(jmul(jmul(X, X), X), p[3] / 6.0),
                            jscale(jmul(jmul(X, X), Y), 0.5 * p[4])),
                       jadd(jscale(jmul(X, jmul(Y, Y)), 0.5 * p[5]),
                            jscale(jmul(jmul(Y, Y), Y), p[6] / 6.0)))))
    fx = jadd(jscale(X, 2.0 * cxx),
              jadd(jadd(jscale(jmul(X, X), 0.5 * p[3]), jscale(jmul(X, Y), p[4])),
                   jscale(jmul(Y, Y), 0.5 * p[5])))
    fy = jadd(jscale(Y, 2.0 * cyy),
              jadd(jadd(jscale(jmul(X, X), 0.5 * p[4]), jscale(jmul(X, Y), p[5])),
                   jscale(jmul(Y, Y), 0.5 * p[6])))
    g = jadd(jadd(jscale(jmul(X, X), 0.5 * p[1]), jscale(jmul(Y, Y), 0.5 * p[2])),
             jadd(jadd(jscale(jmul(jmul(X, X), X), p[7] / 6.0),
                       jscale(jmul(jmul(X, X), Y), 0.5 * p[8])),
                  jadd(jscale(jmul(X, jmul(Y, Y)), 0.5 * p[9]),
                       jscale(jmul(jmul(Y, Y), Y), p[10] / 6.0))))
    w = jsqrt(jadd(one, jadd(jmul(fx, fx), jmul(fy, fy))))
    iw = jrecip(w)
    n1 = jscale(jmul(fx, iw), -1.0)
    n2 = jscale(jmul(fy, iw), -1.0)
    n3 = iw
    phi[0] = jadd(one, g)
    phi[1] = jadd(X, jmul(g, n1))
    phi[2] = jadd(Y, jmul(g, n2))
    phi[3] = jadd(f, jmul(g, n3))
    xi[0] = 1.0; xi[1] = n1.v; xi[2] = n2.v; xi[3] = n3.v
    return 0


cdef int solve_eta_c(double* xi, double* px, double* py, double* eta) except -1:
    """Solve the frame system with the fixed e0 completion, then apply the
    null correction eta = w - (<w, w>/2) xi."""
    cdef double m[4][5]
    cdef double w[4]
    cdef int i, j, piv, r
    cdef double best, factor, ww

    for j in range(4):
        m[0][j] = -xi[0] if j == 0 else xi[j]
        m[1][j] = -px[0] if j == 0 else px[j]
        m[2][j] = -py[0] if j == 0 else py[j]
    # completion row: pairing with e0 is -w0
    m[3][0] = -1.0; m[3][1] = 0.0; m[3][2] = 0.0; m[3][3] = 0.0
    m[0][4] = 1.0; m[1][4] = 0.0; m[2][4] = 0.0; m[3][4] = 0.0

    for i in range(4):
        piv = i
        best = fabs(m[i][i])
        for r in range(i + 1, 4):
            if fabs(m[r][i]) > best:
                best = fabs(m[r][i])
                piv = r
        if best < 1e-300:
            raise DegeneracyError("frame system is rank deficient")
        if piv != i:
            for j in range(5):
                m[i][j], m[piv][j] = m[piv][j], m[i][j]
        for r in range(i + 1, 4):
            factor = m[r][i] / m[i][i]
            for j in range(i, 5):
                m[r][j] -= factor * m[i][j]
    for i in range(3, -1, -1):
        w[i] = m[i][4]
        for j in range(i + 1, 4):
            w[i] -= m[i][j] * w[j]
        w[i] /= m[i][i]
    ww = mdot(w, w)
    for i in range(4):
        eta[i] = w[i] - 0.5 * ww * xi[i]
    return 0


cdef int screen_c(int code, double* p, double x, double y,
                  double* out) except -1:
    """out = (e, f, g, E, F, G)."""
    cdef Jet phi[4]
    cdef double xi[4]
    cdef double px[4]
    cdef double py[4]
    cdef double pxx[4]
    cdef double pxy[4]
    cdef double pyy[4]
    cdef double eta[4]
    cdef int i

    build_jets(code, p, x, y, phi, xi)
    for i in range(4):
        px[i] = phi[i].dx
        py[i] = phi[i].dy
        pxx[i] = phi[i].dxx
        pxy[i] = phi[i].dxy
        pyy[i] = phi[i].dyy
    solve_eta_c(xi, px, py, eta)
    out[0] = mdot(pxx, eta)
    out[1] = mdot(pxy, eta)
    out[2] = mdot(pyy, eta)
    out[3] = mdot(px, px)
    out[4] = mdot(px, py)
    out[5] = mdot(py, py)
    if out[3] * out[5] - out[4] * out[4] <= 0.0:
        raise DegeneracyError("tangent plane is not spacelike")
    return 0


def abc_at(int code, double[::1] params, double x, double y):
    cdef double s[6]
    screen_c(code, &params[0], x, y, s)
    return (s[1] * s[5] - s[2] * s[4],
            s[0] * s[5] - s[2] * s[3],
            -(s[1] * s[3] - s[0] * s[4]))


def screen_at(int code, double[::1] params, double x, double y):
    cdef double s[6]
    screen_c(code, &params[0], x, y, s)
    return (s[0], s[1], s[2], s[3], s[4], s[5])


def eta_at(int code, double[::1] params, double x, double y):
    cdef Jet phi[4]
    cdef double xi[4]
    cdef double px[4]
    cdef double py[4]
    cdef double eta[4]
    cdef int i
    build_jets(code, &params[0], x, y, phi, xi)
    for i in range(4):
        px[i] = phi[i].dx
        py[i] = phi[i].dy
    solve_eta_c(xi, px, py, eta)
    return (eta[0], eta[1], eta[2], eta[3])


def abc_batch(int code, double[::1] params, double[::1] xs, double[::1] ys,
              double[::1] A, double[::1] B, double[::1] C):
    cdef Py_ssize_t i, n = xs.shape[0]
    cdef double s[6]
    for i in range(n):
        screen_c(code, &params[0], xs[i], ys[i], s)
        A[i] = s[1] * s[5] - s[2] * s[4]
        B[i] = s[0] * s[5] - s[2] * s[3]
        C[i] = -(s[1] * s[3] - s[0] * s[4])
    return None
