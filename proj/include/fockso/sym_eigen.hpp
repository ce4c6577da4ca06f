#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "fockso/common.hpp"

namespace fockso {

/// Implicit-shift QL iteration for a symmetric tridiagonal matrix.
///
/// d[0..n-1] holds the diagonal and is overwritten with the eigenvalues;
/// e[i] is the subdiagonal entry coupling i and i+1 (e[n-1] unused).
/// z starts as a row vector and is rotated along, so that if z = e_0 on
/// entry, z[j] is the first component of the j-th eigenvector on exit.
/// That is exactly what Golub-Welsch quadrature weights need.
inline void tridiag_eigen_first_row(std::vector<double>& d, std::vector<double>& e,
                                    std::vector<double>& z, int max_iter_per_eig = 100)
{
    const int n = static_cast<int>(d.size());
    if (n == 0) return;
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == max_iter_per_eig)
                    throw error("tridiagonal eigen iteration failed to converge within " +
                                std::to_string(max_iter_per_eig) + "*n sweeps");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

/// Cyclic Jacobi eigenvalue iteration for a dense real symmetric matrix
/// (row-major, n x n). Returns all eigenvalues in ascending order.
/// Off-diagonal mass is driven below tol * frobenius; the sweep cap is
/// 100 * n which in practice is never approached.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double tol = 1e-13)
{
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    double fro = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) fro += at(i, j) * at(i, j);
    fro = std::sqrt(fro);
    if (fro == 0.0) return std::vector<double>(n, 0.0);

    const long max_sweeps = 100L * n;
    for (long sweep = 0;; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
        if (std::sqrt(off) <= tol * fro) break;
        if (sweep >= max_sweeps)
            throw error("Jacobi eigen iteration failed to converge within 100*n sweeps");

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                double app = at(p, p), aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = aip - s * (aiq + tau * aip);
                    at(i, q) = aiq + s * (aip - tau * aiq);
                    at(p, i) = at(i, p);
                    at(q, i) = at(i, q);
                }
            }
        }
    }

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// Eigenvalues of a dense Hermitian matrix (row-major, n x n) via the real
/// symmetric embedding [[X, -Y], [Y, X]]; every eigenvalue of the Hermitian
/// matrix shows up twice in the embedding.
inline std::vector<double> hermitian_eigenvalues(const std::vector<cd>& h, int n, double tol = 1e-13)
{
    const int N = 2 * n;
    std::vector<double> a(static_cast<size_t>(N) * N, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cd v = h[static_cast<size_t>(i) * n + j];
            a[static_cast<size_t>(i) * N + j] = v.real();
            a[static_cast<size_t>(i) * N + (j + n)] = -v.imag();
            a[static_cast<size_t>(i + n) * N + j] = v.imag();
            a[static_cast<size_t>(i + n) * N + (j + n)] = v.real();
        }
    }
    std::vector<double> doubled = jacobi_eigenvalues(std::move(a), N, tol);
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return ev;
}

} // namespace fockso
