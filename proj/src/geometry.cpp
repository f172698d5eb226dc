#include "modist/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace modist {

QMatrix::QMatrix(QuadField field, size_t rows, size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, QElem::rational(field, 0)) {}

QMatrix QMatrix::identity(const QuadField& field, size_t n) {
    QMatrix out(field, n, n);
    for (size_t i = 0; i < n; ++i) out.at(i, i) = QElem::rational(field, 1);
    return out;
}

QMatrix QMatrix::mul(const QMatrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_) throw std::invalid_argument("QMatrix::mul: shape/field mismatch");
    QMatrix out(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const QElem& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) out.at(i, j) = out.at(i, j) + aik * o.at(k, j);
        }
    return out;
}

QMatrix QMatrix::add(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        throw std::invalid_argument("QMatrix::add: shape/field mismatch");
    QMatrix out(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

QMatrix QMatrix::scale(const QElem& c) const {
    QMatrix out(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
}

bool QMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool QMatrix::operator==(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

namespace {

// Row echelon by exact elimination; returns rank and, for square inputs,
// the determinant (product of pivots with the swap sign).
std::pair<long, QElem> eliminate(QMatrix& a) {
    const size_t rows = a.rows(), cols = a.cols();
    const QuadField& field = a.field();
    long rank = 0;
    int sign = 1;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row) {
            for (size_t j = col; j < cols; ++j) std::swap(a.at(pivot, j), a.at(row, j));
            sign = -sign;
        }
        const QElem inv = a.at(row, col).inv();
        for (size_t i = row + 1; i < rows; ++i) {
            if (a.at(i, col).is_zero()) continue;
            QElem factor = a.at(i, col) * inv;
            a.at(i, col) = QElem::rational(field, 0);
            for (size_t j = col + 1; j < cols; ++j)
                a.at(i, j) = a.at(i, j) - factor * a.at(row, j);
        }
        ++rank;
        ++row;
    }
    QElem det = QElem::rational(field, sign);
    if (rows == cols) {
        if (static_cast<size_t>(rank) < rows)
            det = QElem::rational(field, 0);
        else
            for (size_t i = 0; i < rows; ++i) det = det * a.at(i, i);
    }
    return {rank, det};
}

}  // namespace

long rank_exact(QMatrix a) { return eliminate(a).first; }

QElem det_exact(QMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det_exact: matrix not square");
    return eliminate(a).second;
}

PointSet PointSet::make(QuadField field, Ambient ambient, std::vector<std::vector<QElem>> points,
                        QElem sq_scale) {
    if (ambient.d < 1) throw std::invalid_argument("PointSet: ambient dimension must be >= 1");
    if (points.empty()) throw std::invalid_argument("PointSet: no points");
    const size_t want = static_cast<size_t>(ambient.coord_count());
    const QElem one = QElem::rational(field, 1);
    for (const auto& pt : points) {
        if (pt.size() != want)
            throw std::invalid_argument("PointSet: point has " + std::to_string(pt.size()) +
                                        " coordinates, expected " + std::to_string(want));
        QElem sum = QElem::rational(field, 0);
        for (const QElem& x : pt) {
            if (x.field() != field) throw std::domain_error("PointSet: coordinate in wrong field");
            sum = sum + x;
        }
        if (ambient.model == AmbientModel::Hyperplane && sum != one)
            throw std::invalid_argument("PointSet: hyperplane point with coordinate sum " + sum.str() +
                                        " != 1");
    }
    if (sq_scale.field() != field) throw std::domain_error("PointSet: sqScale in wrong field");
    if (sq_scale.sign_real() <= 0)
        throw std::invalid_argument("PointSet: sqScale must be positive, got " + sq_scale.str());
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("PointSet: points " + std::to_string(i) + " and " +
                                            std::to_string(j) + " coincide");
    PointSet out;
    out.field_ = field;
    out.ambient_ = ambient;
    out.points_ = std::move(points);
    out.sq_scale_ = std::move(sq_scale);
    return out;
}

QElem PointSet::sqdist(size_t i, size_t j) const {
    QElem sum = QElem::rational(field_, 0);
    for (size_t k = 0; k < points_[i].size(); ++k) {
        QElem diff = points_[i][k] - points_[j][k];
        sum = sum + diff * diff;
    }
    return sq_scale_ * sum;
}

SqDistMatrix::SqDistMatrix(QMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("SqDistMatrix: not square");
    if (!m_.is_symmetric()) throw std::invalid_argument("SqDistMatrix: not symmetric");
    for (size_t i = 0; i < m_.rows(); ++i) {
        if (!m_.at(i, i).is_zero()) throw std::invalid_argument("SqDistMatrix: nonzero diagonal");
        for (size_t j = i + 1; j < m_.cols(); ++j)
            if (m_.at(i, j).is_zero())
                throw std::invalid_argument("SqDistMatrix: zero off-diagonal entry (coincident points)");
    }
}

SqDistMatrix sqdist_matrix(const PointSet& x) {
    QMatrix m(x.field(), x.n(), x.n());
    for (size_t i = 0; i < x.n(); ++i)
        for (size_t j = i + 1; j < x.n(); ++j) {
            QElem d = x.sqdist(i, j);
            m.at(i, j) = d;
            m.at(j, i) = d;
        }
    return SqDistMatrix(std::move(m));
}

std::vector<QElem> distance_set(const PointSet& x) {
    if (x.n() < 2) throw std::invalid_argument("distance_set: need at least two points");
    std::vector<QElem> out;
    for (size_t i = 0; i < x.n(); ++i)
        for (size_t j = i + 1; j < x.n(); ++j) {
            QElem d = x.sqdist(i, j);
            if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
        }
    return out;
}

QMatrix gram_double_centered(const SqDistMatrix& m) {
    const size_t n = m.n();
    const QuadField& field = m.matrix().field();
    QMatrix center = QMatrix::identity(field, n);
    const QElem inv_n = QElem::rational(field, Rational(-1, static_cast<long>(n)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) center.at(i, j) = center.at(i, j) + inv_n;
    QMatrix out = center.mul(m.matrix()).mul(center).scale(QElem::rational(field, Rational(-1, 2)));
    return out;
}

long embedding_dimension(const PointSet& x) {
    if (x.n() == 1) return 0;
    return rank_exact(gram_double_centered(sqdist_matrix(x)));
}

QMatrix gram_difference_matrix(const PointSet& x, size_t base) {
    if (x.n() < 2) throw std::invalid_argument("gram_difference_matrix: need at least two points");
    if (base >= x.n()) throw std::invalid_argument("gram_difference_matrix: base index out of range");
    std::vector<size_t> idx;
    for (size_t i = 0; i < x.n(); ++i)
        if (i != base) idx.push_back(i);
    const size_t m = idx.size();
    QMatrix out(x.field(), m, m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i; j < m; ++j) {
            // 2<u_i, u_j> = |u_i|^2 + |u_j|^2 - |u_i - u_j|^2
            QElem v = x.sqdist(idx[i], base) + x.sqdist(idx[j], base);
            if (i != j) v = v - x.sqdist(idx[i], idx[j]);
            out.at(i, j) = v;
            out.at(j, i) = v;
        }
    }
    return out;
}

}  // namespace modist
