#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ymsurf/unitary.hpp"

namespace ymsurf {

// Highest weight of a U(n) irreducible representation: a non-increasing
// integer n-tuple (entries may be negative).
struct Irrep {
    std::vector<int> lambda;
};

bool irrep_valid(const Irrep& r, const GroupSpec& g);

// Eigenvalue of -Laplacian on the lambda-isotypic component for the
// scaled metric: (sum lambda_k^2 + sum (n+1-2k) lambda_k) / n.
double casimir(const Irrep& r, const GroupSpec& g);

// Dimension via the Weyl formula, exact in double for the weights used
// here.
double weyl_dim(const Irrep& r, const GroupSpec& g);

// Character chi_lambda(U): a symmetric Laurent polynomial in the
// eigenvalues, evaluated through confluent divided differences so that
// clustered eigenvalue angles (within 1e-6) are stable.
Complex character(const Irrep& r, const Mat& u);

struct HKParams {
    double tolerance = 1e-12;  // truncation budget for the character sum
    int weight_cutoff = 0;     // max |lambda_i|; 0 selects it adaptively
    double brownian_step = 1e-3;
};

// Heat-kernel density rho_t with respect to normalized Haar measure:
// rho_t(U) = sum_lambda dim * chi_lambda(U) * exp(-c2 t / 2), truncated
// so the omitted terms total less than the tolerance. Entries are fixed
// at construction; evaluation is const and shareable across threads.
class CharacterTable {
public:
    CharacterTable(const GroupSpec& g, double t, const HKParams& p);

    double t() const { return t_; }
    int max_weight() const { return max_weight_; }
    std::size_t size() const { return entries_.size(); }

    double density(const Mat& u) const;
    double density_dt(const Mat& u) const;
    // Shares the eigenvalue work between the two sums (score evaluation).
    std::pair<double, double> density_and_dt(const Mat& u) const;

private:
    struct Entry {
        std::vector<int> lambda;
        double dim = 0.0;
        double c2 = 0.0;
        double weight = 0.0;  // dim * exp(-c2 t / 2)
    };

    std::pair<double, double> accumulate(const Mat& u, bool with_dt) const;

    GroupSpec group_;
    double t_ = 0.0;
    double eps_ = 0.0;
    int max_weight_ = 0;
    std::vector<Entry> entries_;
};

double hk_density(double t, const Mat& u, const GroupSpec& g, const HKParams& p);
double hk_dt(double t, const Mat& u, const GroupSpec& g, const HKParams& p);

// Brownian motion at time t: ceil(t / step) geodesic increments
// exp(sqrt(t/m) G) with G standard Gaussian in the scaled orthonormal
// basis. The law converges to the heat kernel as the step shrinks.
Mat hk_sample(double t, const GroupSpec& g, const HKParams& p, Rng& rng);
Mat hk_sample(double t, const LieBasis& basis, const HKParams& p, Rng& rng);

// Memoizing, thread-safe pool of character tables for one group and
// tolerance; built once per area value and then shared read-only.
class HeatKernel {
public:
    HeatKernel(const GroupSpec& g, const HKParams& p) : group_(g), params_(p) {}

    const GroupSpec& group() const { return group_; }
    const HKParams& params() const { return params_; }
    const CharacterTable& table(double t) const;

private:
    GroupSpec group_;
    HKParams params_;
    mutable std::mutex mu_;
    mutable std::map<double, std::unique_ptr<CharacterTable>> tables_;
};

}  // namespace ymsurf
