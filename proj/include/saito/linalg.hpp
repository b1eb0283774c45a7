#pragma once

#include "saito/algebra.hpp"

#include <optional>
#include <vector>

namespace saito {

using QVec = std::vector<Scalar>;
using QMat = std::vector<QVec>;

Scalar dot(const QVec& a, const QVec& b);
QVec axpy(const Scalar& a, const QVec& x, const QVec& y);  // a*x + y
QMat identity(std::size_t n);
QMat transpose(const QMat& m);
QMat matmul(const QMat& a, const QMat& b);
QVec matvec(const QMat& a, const QVec& v);

// In-place reduced row echelon form, returns pivot columns.
std::vector<std::size_t> rref(QMat& m);
std::size_t rank(QMat m);
QMat nullspace(const QMat& m);  // basis vectors as rows
std::optional<QVec> solve(const QMat& a, const QVec& b);
std::optional<QMat> inverse(const QMat& m);
Scalar det(QMat m);

// Incremental span membership for vectors of fixed length.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t dim) : dim_(dim) {}
    // returns true if v was independent (and was added)
    bool add(const QVec& v);
    bool contains(const QVec& v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    QVec reduce(QVec v) const;
    std::size_t dim_;
    std::vector<QVec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace saito
