#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modist/quadfield.hpp"

namespace modist {

/// Dense matrix over one quadratic field.
class QMatrix {
public:
    QMatrix(QuadField field, size_t rows, size_t cols);
    static QMatrix identity(const QuadField& field, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const QuadField& field() const { return field_; }

    QElem& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const QElem& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    QMatrix mul(const QMatrix& o) const;
    QMatrix add(const QMatrix& o) const;
    QMatrix scale(const QElem& c) const;
    bool is_symmetric() const;
    bool operator==(const QMatrix& o) const;

private:
    QuadField field_;
    size_t rows_, cols_;
    std::vector<QElem> a_;
};

/// Rank by exact Gaussian elimination.
long rank_exact(QMatrix a);

/// Determinant by exact Gaussian elimination (square matrices).
QElem det_exact(QMatrix a);

enum class AmbientModel { Hyperplane, Cartesian };

/// Ambient space: H_d (sum-one hyperplane in R^{d+1}) or plain R^d.
struct Ambient {
    AmbientModel model;
    long d;

    long coord_count() const { return model == AmbientModel::Hyperplane ? d + 1 : d; }
    bool operator==(const Ambient& o) const { return model == o.model && d == o.d; }
};

/// Finite point configuration with exact coordinates in one field and a
/// positive squared-scale factor: the realized set is sqrt(sqScale) times
/// the raw one, so every squared distance is sqScale times the raw value.
class PointSet {
public:
    static PointSet make(QuadField field, Ambient ambient, std::vector<std::vector<QElem>> points,
                         QElem sq_scale);

    const QuadField& field() const { return field_; }
    const Ambient& ambient() const { return ambient_; }
    size_t n() const { return points_.size(); }
    const std::vector<QElem>& point(size_t i) const { return points_[i]; }
    const std::vector<std::vector<QElem>>& points() const { return points_; }
    const QElem& sq_scale() const { return sq_scale_; }

    /// Exact squared distance between points i and j (includes sqScale).
    QElem sqdist(size_t i, size_t j) const;

private:
    PointSet() : sq_scale_() {}

    QuadField field_ = QuadField::rationals();
    Ambient ambient_{AmbientModel::Cartesian, 0};
    std::vector<std::vector<QElem>> points_;
    QElem sq_scale_;
};

/// Symmetric squared-distance matrix with zero diagonal and nonzero
/// off-diagonal entries.
class SqDistMatrix {
public:
    explicit SqDistMatrix(QMatrix m);
    const QMatrix& matrix() const { return m_; }
    size_t n() const { return m_.rows(); }

private:
    QMatrix m_;
};

SqDistMatrix sqdist_matrix(const PointSet& x);

/// Distinct squared distances in first-occurrence (row-major) order.
std::vector<QElem> distance_set(const PointSet& x);

/// N = (-1/2) (I - J/n) M (I - J/n): the Gram matrix of a centered
/// realization; symmetric with zero row sums.
QMatrix gram_double_centered(const SqDistMatrix& m);

/// Affine dimension spanned by the set: rank of the double-centered Gram.
long embedding_dimension(const PointSet& x);

/// (n-1)x(n-1) matrix of 2<u_i, u_j> for u_i = x_i - x_base, computed from
/// squared distances only.
QMatrix gram_difference_matrix(const PointSet& x, size_t base);

}  // namespace modist
