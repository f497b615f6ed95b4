#include "kweyl/cartan.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "kweyl/errors.hpp"
#include "kweyl/scalars.hpp"

namespace kweyl {

namespace {

bool rank_supported(char family, int rank) {
    switch (family) {
    case 'A': return rank >= 1 && rank <= 4;
    case 'B': return rank >= 2 && rank <= 4;
    case 'C': return rank == 3 || rank == 4;
    case 'D': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
    }
}

IMatrix simple_cartan(char family, int n) {
    IMatrix c = IMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) c(i, i) = 2;
    for (int i = 0; i + 1 < n; ++i) {
        c(i, i + 1) = -1;
        c(i + 1, i) = -1;
    }
    // Column j carries <alpha_j, alpha_i^vee>, so the short/long asymmetry
    // sits in the row of the short (resp. long) root's coroot.
    switch (family) {
    case 'A':
        break;
    case 'B': // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        c(n - 1, n - 2) = -2;
        break;
    case 'C': // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
        c(n - 2, n - 1) = -2;
        break;
    case 'D': // branch node at n-2 (0-based), arms n-1 and n
        c(n - 1, n - 2) = 0;
        c(n - 2, n - 1) = 0;
        c(n - 1, n - 3) = -1;
        c(n - 3, n - 1) = -1;
        break;
    case 'G': // alpha_1 long, alpha_2 short: <alpha_1, alpha_2^vee> = -3
        c(1, 0) = -3;
        break;
    default:
        throw DatumError("unsupported family");
    }
    return c;
}

long long factor_order(char family, int n) {
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    switch (family) {
    case 'A': return fact * (n + 1);
    case 'B':
    case 'C': return fact << n;
    case 'D': return fact << (n - 1);
    case 'G': return 12;
    default: return 0;
    }
}

} // namespace

CartanType parse_type_string(const std::string& text) {
    CartanType out;
    if (text.empty()) throw ParseError("empty Cartan type string");
    std::size_t pos = 0;
    bool expect_factor = true;
    while (pos < text.size()) {
        char c = text[pos];
        if (c == 'x' || c == '*') {
            if (expect_factor) throw ParseError("misplaced separator in type string '" + text + "'");
            expect_factor = true;
            ++pos;
            continue;
        }
        if (!expect_factor) throw ParseError("missing separator in type string '" + text + "'");
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError("expected a type letter at position " + std::to_string(pos) + " in '" + text + "'");
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError("missing rank after '" + std::string(1, c) + "' in '" + text + "'");
        int rank = std::stoi(text.substr(start, pos - start));
        if (c == 'T') {
            if (rank < 0) throw ParseError("negative torus rank");
            out.torus += rank;
        } else {
            if (!rank_supported(c, rank))
                throw DatumError("unsupported simple type '" + std::string(1, c) + std::to_string(rank) +
                                 "' (allowed: A1-A4, B2-B4, C3, C4, D4, G2)");
            out.factors.push_back({c, rank});
        }
        expect_factor = false;
    }
    if (expect_factor) throw ParseError("dangling separator in type string '" + text + "'");
    std::ostringstream name;
    for (std::size_t i = 0; i < out.factors.size(); ++i) {
        if (i) name << 'x';
        name << out.factors[i].family << out.factors[i].rank;
    }
    if (out.torus > 0) {
        if (!out.factors.empty()) name << 'x';
        name << 'T' << out.torus;
    }
    if (out.factors.empty() && out.torus == 0) throw ParseError("type string names no factors");
    out.normalized = name.str();
    return out;
}

IMatrix cartan_matrix(const CartanType& type) {
    int n = 0;
    for (const auto& f : type.factors) n += f.rank;
    IMatrix c = IMatrix::Zero(n, n);
    int off = 0;
    for (const auto& f : type.factors) {
        c.block(off, off, f.rank, f.rank) = simple_cartan(f.family, f.rank);
        off += f.rank;
    }
    return c;
}

long long weyl_group_order(const CartanType& type) {
    long long order = 1;
    for (const auto& f : type.factors) order *= factor_order(f.family, f.rank);
    return order;
}

std::vector<long long> cartan_symmetrizers(const IMatrix& cartan) {
    const int n = static_cast<int>(cartan.rows());
    std::vector<long long> num(n, 0), den(n, 1);
    // Propagate d_j/d_i = C(i,j)/C(j,i) along the Dynkin graph, one component
    // at a time, then clear denominators within the component.
    std::vector<int> component(n, -1);
    for (int seed = 0; seed < n; ++seed) {
        if (component[seed] >= 0) continue;
        std::vector<int> stack{seed};
        std::vector<int> members;
        component[seed] = seed;
        num[seed] = 1;
        den[seed] = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            members.push_back(i);
            for (int j = 0; j < n; ++j) {
                if (i == j || cartan(i, j) == 0) continue;
                if (component[j] >= 0) continue;
                component[j] = seed;
                num[j] = num[i] * cartan(i, j);
                den[j] = den[i] * cartan(j, i);
                if ((num[j] < 0) != (den[j] < 0)) throw DatumError("Cartan matrix is not symmetrizable");
                num[j] = std::abs(num[j]);
                den[j] = std::abs(den[j]);
                long long g = std::gcd(num[j], den[j]);
                num[j] /= g;
                den[j] /= g;
                stack.push_back(j);
            }
        }
        long long lcm = 1;
        for (int i : members) lcm = std::lcm(lcm, den[i]);
        for (int i : members) num[i] *= lcm / den[i];
    }
    std::vector<long long> d(num.begin(), num.end());
    // Consistency across all pairs, not only the spanning tree.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[i] * cartan(i, j) != d[j] * cartan(j, i))
                throw DatumError("Cartan matrix is not symmetrizable");
    return d;
}

void validate_cartan(const IMatrix& cartan) {
    const int n = static_cast<int>(cartan.rows());
    if (cartan.cols() != n) throw DatumError("Cartan matrix must be square");
    for (int i = 0; i < n; ++i) {
        if (cartan(i, i) != 2) throw DatumError("Cartan matrix diagonal must be 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan(i, j) > 0) throw DatumError("Cartan matrix off-diagonal entries must be <= 0");
            if ((cartan(i, j) == 0) != (cartan(j, i) == 0))
                throw DatumError("Cartan matrix zero pattern must be symmetric");
        }
    }
    std::vector<long long> d = cartan_symmetrizers(cartan);
    // Positive definiteness of the symmetrized matrix via leading principal
    // minors, exactly over big integers.
    std::vector<std::vector<Int>> sym(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sym[i][j] = Int(d[i]) * cartan(i, j);
    for (int k = 1; k <= n; ++k) {
        // Bareiss determinant of the leading k x k block.
        std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = sym[i][j];
        Int prev = 1;
        Int det = 1;
        bool singular = false;
        for (int p = 0; p < k && !singular; ++p) {
            if (m[p][p] == 0) {
                int r = p + 1;
                while (r < k && m[r][p] == 0) ++r;
                if (r == k) {
                    singular = true;
                    break;
                }
                std::swap(m[p], m[r]);
                det = -det;
            }
            for (int i = p + 1; i < k; ++i)
                for (int j = p + 1; j < k; ++j) m[i][j] = (m[p][p] * m[i][j] - m[i][p] * m[p][j]) / prev;
            prev = m[p][p];
        }
        det = singular ? Int(0) : det * m[k - 1][k - 1];
        if (det <= 0) throw DatumError("Cartan matrix is not of finite type (symmetrization not positive definite)");
    }
}

} // namespace kweyl
