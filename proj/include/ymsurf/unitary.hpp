#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "ymsurf/rng.hpp"

namespace ymsurf {

using Complex = std::complex<double>;

// Group elements are small dense matrices; sizes are dynamic but bounded
// so hot loops stay allocation-free.
constexpr int kMaxN = 8;
using Mat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxN, kMaxN>;

// The structure group U(n). The bi-invariant metric is fixed to
// <X,Y> = n * trace(X^* Y) on anti-Hermitian matrices; it is not a
// configuration knob because every Laplacian eigenvalue in the project
// is normalized against it.
struct GroupSpec {
    int n = 1;
};

void check_group(const GroupSpec& g);

Mat identity(const GroupSpec& g);

// Normalized trace tr = trace / n.
Complex normalized_trace(const Mat& u);

// max |(U^* U - I)_{ij}|
double unitarity_defect(const Mat& u);

// Nearest unitary (polar factor via SVD).
Mat reunitarize(const Mat& u);

// Re-unitarizes only when the defect exceeds tol; cheap no-op otherwise.
Mat ensure_unitary(Mat u, double tol = 1e-10);

// Orthonormal basis of anti-Hermitian n x n matrices for the scaled
// metric: <X_i, X_j> = n * trace(X_i^* X_j) = delta_ij.
class LieBasis {
public:
    explicit LieBasis(const GroupSpec& g);

    const GroupSpec& group() const { return group_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const Mat& operator[](int i) const { return elems_[i]; }
    const std::vector<Mat>& elements() const { return elems_; }

    // sum_a g_a X_a with g_a independent standard normals.
    Mat gaussian(Rng& rng) const;

private:
    GroupSpec group_;
    std::vector<Mat> elems_;
};

// Haar-distributed unitary: Ginibre matrix, QR, then the phase correction
// that makes the R diagonal positive so the law is exactly Haar.
Mat haar_sample(const GroupSpec& g, Rng& rng);

// exp(A) for anti-Hermitian A. Small arguments take a Taylor fast path;
// general arguments go through scaling-and-squaring with a Pade
// approximant (accurate to ~1e-13 for the norms seen here).
Mat exp_antihermitian(const Mat& a);

// A word evaluated as an ordered matrix product. Entries reference an
// external table of edge variables; negative orientation means the
// conjugate transpose of the variable.
struct SignedRef {
    int index = 0;
    bool inverse = false;
};

// Product over the sequence, leftmost factor first. Drift is repaired
// when the unitarity defect of the result exceeds 1e-10.
Mat word_eval(const std::vector<SignedRef>& word, const std::vector<Mat>& vars, int n);

}  // namespace ymsurf
