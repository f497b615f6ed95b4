#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace kweyl {

using IMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
using IVector = Eigen::Matrix<int, Eigen::Dynamic, 1>;

/// One simple factor of a Cartan type expression, e.g. {B, 3}.
struct SimpleFactor {
    char family = 'A'; // A, B, C, D, G
    int rank = 1;
};

/// Parsed Cartan type: product of simple factors plus free torus directions.
struct CartanType {
    std::vector<SimpleFactor> factors;
    int torus = 0;
    std::string normalized; // canonical rendering, e.g. "A2xB2xT1"
};

/// Parses the type grammar: simple types `A1`..`A4`, `B2`..`B4`, `C3`, `C4`,
/// `D4`, `G2`, joined with `x`, with optional torus factors `T<k>` attached
/// with `x` or `*`. Throws ParseError on malformed input and DatumError on
/// unsupported ranks.
CartanType parse_type_string(const std::string& text);

/// Block-diagonal Cartan matrix of the semisimple part. Column j holds the
/// fundamental-weight coordinates of the simple root alpha_j.
IMatrix cartan_matrix(const CartanType& type);

/// Order of the Weyl group (product over the factors).
long long weyl_group_order(const CartanType& type);

/// Minimal positive integer symmetrizers d_i with d_i*C(i,j) == d_j*C(j,i),
/// i.e. d_i = (alpha_i, alpha_i)/2 up to overall scale per factor.
std::vector<long long> cartan_symmetrizers(const IMatrix& cartan);

/// Checks that `cartan` is a Cartan matrix of finite type: 2 on the diagonal,
/// non-positive integers elsewhere, symmetrizable with a positive definite
/// symmetrization. Throws DatumError otherwise.
void validate_cartan(const IMatrix& cartan);

} // namespace kweyl
