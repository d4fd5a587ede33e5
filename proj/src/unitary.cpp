#include "ymsurf/unitary.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

#include "ymsurf/errors.hpp"

namespace ymsurf {

void check_group(const GroupSpec& g) {
    if (g.n < 1) throw SemanticError("group dimension must be >= 1");
    if (g.n > kMaxN) throw SemanticError("group dimension larger than supported maximum (" +
                                         std::to_string(kMaxN) + ")");
}

Mat identity(const GroupSpec& g) { return Mat::Identity(g.n, g.n); }

Complex normalized_trace(const Mat& u) { return u.trace() / static_cast<double>(u.rows()); }

double unitarity_defect(const Mat& u) {
    Mat d = u.adjoint() * u;
    d.diagonal().array() -= Complex(1.0, 0.0);
    return d.cwiseAbs().maxCoeff();
}

Mat reunitarize(const Mat& u) {
    Eigen::JacobiSVD<Mat> svd(u, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

Mat ensure_unitary(Mat u, double tol) {
    if (unitarity_defect(u) > tol) u = reunitarize(u);
    return u;
}

LieBasis::LieBasis(const GroupSpec& g) : group_(g) {
    check_group(g);
    const int n = g.n;
    const double rn = 1.0 / std::sqrt(static_cast<double>(n));
    const double rtn = 1.0 / std::sqrt(2.0 * n);
    elems_.reserve(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        Mat x = Mat::Zero(n, n);
        x(k, k) = Complex(0.0, rn);
        elems_.push_back(x);
    }
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            Mat x = Mat::Zero(n, n);
            x(j, k) = Complex(rtn, 0.0);
            x(k, j) = Complex(-rtn, 0.0);
            elems_.push_back(x);
            Mat y = Mat::Zero(n, n);
            y(j, k) = Complex(0.0, rtn);
            y(k, j) = Complex(0.0, rtn);
            elems_.push_back(y);
        }
    }
}

Mat LieBasis::gaussian(Rng& rng) const {
    const int n = group_.n;
    Mat g = Mat::Zero(n, n);
    const double rn = 1.0 / std::sqrt(static_cast<double>(n));
    const double rtn = 1.0 / std::sqrt(2.0 * n);
    // Same span and scaling as elements(), assembled without the
    // matrix-per-basis-vector loop: diagonal first, then each pair (j,k).
    for (int k = 0; k < n; ++k) g(k, k) = Complex(0.0, rn * rng.gaussian());
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            const double a = rng.gaussian();  // real antisymmetric part
            const double b = rng.gaussian();  // imaginary symmetric part
            g(j, k) = Complex(rtn * a, rtn * b);
            g(k, j) = Complex(-rtn * a, rtn * b);
        }
    }
    return g;
}

Mat haar_sample(const GroupSpec& g, Rng& rng) {
    check_group(g);
    const int n = g.n;
    if (n == 1) {
        const double theta = 6.283185307179586476925286766559 * rng.uniform01();
        Mat u(1, 1);
        u(0, 0) = Complex(std::cos(theta), std::sin(theta));
        return u;
    }
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(rng.gaussian(), rng.gaussian());
    Eigen::HouseholderQR<Mat> qr(a);
    Mat q = qr.householderQ() * Mat::Identity(n, n);
    const Mat& r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        Complex d = r(j, j);
        const double m = std::abs(d);
        d = (m > 0.0) ? d / m : Complex(1.0, 0.0);
        q.col(j) *= d;
    }
    return q;
}

namespace {

// Taylor series for exp(A), accurate to full precision for ||A|| <~ 0.25.
Mat exp_taylor(const Mat& a) {
    const int n = static_cast<int>(a.rows());
    Mat term = Mat::Identity(n, n);
    Mat acc = term;
    for (int k = 1; k <= 14; ++k) {
        term = (term * a) / static_cast<double>(k);
        acc += term;
    }
    return acc;
}

}  // namespace

Mat exp_antihermitian(const Mat& a) {
    const int n = static_cast<int>(a.rows());
    if (n == 1) {
        Mat u(1, 1);
        const double theta = a(0, 0).imag();
        u(0, 0) = Complex(std::cos(theta), std::sin(theta));
        return u;
    }
    const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    if (norm1 <= 0.25) return exp_taylor(a);
    if (norm1 <= 1.0) {
        // One halving step keeps the Taylor path exact enough.
        Mat h = exp_taylor(a * 0.5);
        return h * h;
    }
    Eigen::MatrixXcd full = a;
    Eigen::MatrixXcd e = full.exp();  // scaling-and-squaring Pade
    return Mat(e);
}

Mat word_eval(const std::vector<SignedRef>& word, const std::vector<Mat>& vars, int n) {
    Mat u = Mat::Identity(n, n);
    for (const SignedRef& s : word) {
        const Mat& x = vars.at(static_cast<std::size_t>(s.index));
        if (s.inverse)
            u = u * x.adjoint();
        else
            u = u * x;
    }
    return ensure_unitary(std::move(u));
}

}  // namespace ymsurf
