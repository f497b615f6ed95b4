#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <vector>

#include "kweyl/errors.hpp"
#include "kweyl/scalars.hpp"

namespace kweyl {

/// Lexicographic order on Eigen integer vectors (first coordinate most
/// significant). Used as the fixed total monomial order of the exact ring.
struct LexLess {
    bool operator()(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const {
        return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
    }
};

struct VectorXiHash {
    std::size_t operator()(const Eigen::VectorXi& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(v[i]));
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct VectorXiEq {
    bool operator()(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const { return a == b; }
};

template <class T>
using RingMatrix = std::vector<std::vector<T>>;

template <class T>
struct AdjugateResult {
    RingMatrix<T> adjugate;
    T det;
};

/// Fraction-free Gauss-Jordan (Montante/Bareiss) adjugate and determinant
/// over an integral domain. `Ops` provides zero(), one(), is_zero(a),
/// mul(a,b), sub(a,b), exact_div(a,b) and size(a) (a support measure used to
/// pick small pivots); every division performed is exact by the Sylvester
/// identity. Throws CheckError on a singular input.
template <class T, class Ops>
AdjugateResult<T> adjugate_det(const RingMatrix<T>& a, const Ops& ops) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw CheckError("adjugate_det: matrix not square");
    if (n == 0) return {RingMatrix<T>{}, ops.one()};

    RingMatrix<T> b(n, std::vector<T>(2 * n, ops.zero()));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) b[i][j] = a[i][j];
        b[i][n + i] = ops.one();
    }
    bool negate = false;
    T prev = ops.one();
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!ops.is_zero(b[i][k]) && (pivot < 0 || ops.size(b[i][k]) < ops.size(b[pivot][k]))) pivot = i;
        if (pivot < 0) throw CheckError("adjugate_det: singular matrix");
        if (pivot != k) {
            std::swap(b[pivot], b[k]);
            negate = !negate;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            for (int j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                b[i][j] = ops.exact_div(ops.sub(ops.mul(b[k][k], b[i][j]), ops.mul(b[i][k], b[k][j])), prev);
            }
            b[i][k] = ops.zero();
        }
        prev = b[k][k];
    }
    AdjugateResult<T> out;
    out.det = negate ? ops.sub(ops.zero(), prev) : prev;
    out.adjugate.assign(n, std::vector<T>(n, ops.zero()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.adjugate[i][j] = negate ? ops.sub(ops.zero(), b[i][n + j]) : b[i][n + j];
    return out;
}

/// Ring operations for big integers.
struct IntOps {
    Int zero() const { return Int(0); }
    Int one() const { return Int(1); }
    bool is_zero(const Int& a) const { return a == 0; }
    Int mul(const Int& a, const Int& b) const { return a * b; }
    Int sub(const Int& a, const Int& b) const { return a - b; }
    Int exact_div(const Int& a, const Int& b) const {
        Int q;
        if (!scalar_divides(a, b, q)) throw CheckError("exact_div: inexact integer division");
        return q;
    }
    std::size_t size(const Int& a) const { return a == 0 ? 0 : 1; }
};

inline RingMatrix<Int> to_ring_matrix(const Eigen::MatrixXi& m) {
    RingMatrix<Int> out(m.rows(), std::vector<Int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i][j] = Int(m(i, j));
    return out;
}

} // namespace kweyl
