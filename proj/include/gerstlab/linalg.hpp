#pragma once
#include <gerstlab/rational.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gerstlab {

using Vec = std::vector<Rational>;
using SparseVec = std::vector<std::pair<int, Rational>>;

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(std::string what) {
        ok = false;
        violations.push_back(std::move(what));
    }
};

size_t tuple_count(int dim, int arity);
size_t tuple_flat(const std::vector<int>& tuple, int dim);
std::vector<int> tuple_unflat(size_t flat, int dim, int arity);
bool tuple_next(std::vector<int>& tuple, int dim);

bool is_zero_vec(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);

// Finite ordered basis with an integer degree per element. Negative degrees allowed.
class GradedSpace {
  public:
    GradedSpace() = default;
    GradedSpace(std::vector<std::string> labels, std::vector<int> degrees);

    int dim() const { return static_cast<int>(degrees_.size()); }
    int degree(int i) const { return degrees_.at(i); }
    const std::string& label(int i) const { return labels_.at(i); }
    const std::vector<int>& degrees() const { return degrees_; }
    int index_of(const std::string& label) const;

  private:
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    std::map<std::string, int> index_;
};

// Dense exact matrix, row major.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix transpose() const;
    Matrix mul(const Matrix& o) const;
    Vec apply(const Vec& v) const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

// Homogeneous linear map between graded spaces.
struct LinearMap {
    GradedSpace domain;
    GradedSpace codomain;
    Matrix mat;  // codomain.dim x domain.dim
    int degree_shift = 0;

    LinearMap() = default;
    LinearMap(GradedSpace dom, GradedSpace cod, Matrix m, int shift = 0);
};

// Sign acquired by reordering homogeneous elements: permuting x_{0..n-1} of the
// given degrees into x_{perm[0]}, x_{perm[1]}, ... (transposition of degrees p,q
// contributes (-1)^{pq}).
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees);

struct RankKernel {
    int rank = 0;
    std::vector<Vec> kernel_basis;
};

// Rank and an exact kernel basis, by fraction-free (Bareiss) elimination on the
// denominator-cleared matrix.
RankKernel rank_kernel(const Matrix& m);
inline RankKernel rank_kernel(const LinearMap& m) { return rank_kernel(m.mat); }

int rank(const Matrix& m);

// One exact solution of m x = rhs, or nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);
std::optional<Vec> solve(const LinearMap& m, const Vec& rhs);

struct Cohomology {
    int dimension = 0;
    std::vector<Vec> representatives;
};

// Cohomology of  ->(d_in)-> V ->(d_out)->  at the middle spot. Requires
// d_out*d_in = 0 exactly; dimension re-verified through the transposed matrices.
Cohomology cohomology_at(const Matrix& d_in, const Matrix& d_out);
Cohomology cohomology_at(const LinearMap& d_in, const LinearMap& d_out);

}  // namespace gerstlab
