#include "spcover/spectral.hpp"

#include <algorithm>
#include <numeric>

namespace spcover::spectral {

bool CoverNumerics::consistent() const {
    return r == simple_zeros + double_zeros && branch_with_mult == simple_zeros + 2 * double_zeros &&
           branch_with_mult == 2 * N * (g - 1) && N2 == N1 + N3 && genus_hat == 4 * n * n * (g - 1) + 1 &&
           n >= 0 && g >= 0 && N >= 0 && simple_zeros >= 0 && double_zeros >= 0 && N3 >= 0;
}

CoverNumerics cover_numerics(int n, int g) {
    if (n < 1) {
        throw std::invalid_argument("cover numerics need n >= 1");
    }
    if (g < 2) {
        throw std::invalid_argument("cover numerics need g >= 2");
    }
    CoverNumerics c;
    c.n = n;
    c.g = g;
    const std::int64_t gm1 = g - 1;
    c.N = 2LL * n * (2LL * n - 1);
    c.simple_zeros = 4LL * n * gm1;
    c.double_zeros = 4LL * n * (n - 1) * gm1;
    c.r = 4LL * n * n * gm1;
    c.branch_with_mult = 2 * c.N * gm1;
    c.genus_hat = (2LL * n) * (2LL * n) * gm1 + 1;
    c.N1 = 2LL * n;
    c.N2 = 2LL * n * n;
    c.N3 = 2LL * n * (n - 1);
    return c;
}

RiemannHurwitz riemann_hurwitz(int sheets, int g, std::span<const int> ramification_orders) {
    if (sheets < 1) {
        throw std::invalid_argument("Riemann-Hurwitz needs at least one sheet");
    }
    if (g < 2) {
        throw std::invalid_argument("Riemann-Hurwitz check needs base genus g >= 2");
    }
    std::int64_t branching = 0;
    for (int b : ramification_orders) {
        if (b < 1) {
            throw std::invalid_argument("ramification orders must be >= 1");
        }
        branching += b - 1;
    }
    RiemannHurwitz out;
    out.rhs = static_cast<std::int64_t>(sheets) * (2LL * g - 2) + branching;
    if (out.rhs % 2 == 0) {
        out.genus = out.rhs / 2 + 1;
    }
    return out;
}

std::vector<int> generic_ramification_profile(int n, int g) {
    const auto c = cover_numerics(n, g);
    return std::vector<int>(static_cast<std::size_t>(c.simple_zeros + 2 * c.double_zeros), 2);
}

bool GroupDimensions::consistent(int g) const {
    if (degree_sum != dim) {
        return false;
    }
    if (!semisimple) {
        return variable_base_dim == fixed_base_dim + 3LL * (g - 1);
    }
    return fixed_base_dim == (g - 1LL) * dim && variable_base_dim == (dim + 3) * (g - 1LL);
}

GroupType parse_group_type(const std::string& label) {
    if (label == "GL") return GroupType::GL;
    if (label == "A") return GroupType::A;
    if (label == "B") return GroupType::B;
    if (label == "C" || label == "Sp") return GroupType::C;
    if (label == "D") return GroupType::D;
    throw std::invalid_argument("unsupported group label '" + label + "'");
}

GroupDimensions dims_and_degrees(GroupType type, int rank, int g) {
    if (rank < 1) {
        throw std::invalid_argument("group rank must be >= 1");
    }
    if (g < 2) {
        throw std::invalid_argument("base genus must be >= 2");
    }
    GroupDimensions d;
    d.type = type;
    d.rank = rank;
    const std::int64_t k = rank;
    switch (type) {
    case GroupType::GL:
        d.label = "GL(" + std::to_string(rank) + ")";
        for (int j = 1; j <= rank; ++j) d.degrees.push_back(j);
        d.dim = k * k;
        d.semisimple = false;
        break;
    case GroupType::A:
        d.label = "A" + std::to_string(rank);
        for (int j = 2; j <= rank + 1; ++j) d.degrees.push_back(j);
        d.dim = k * (k + 2);
        break;
    case GroupType::B:
        d.label = "B" + std::to_string(rank);
        for (int j = 1; j <= rank; ++j) d.degrees.push_back(2 * j);
        d.dim = k * (2 * k + 1);
        break;
    case GroupType::C:
        d.label = "C" + std::to_string(rank);
        for (int j = 1; j <= rank; ++j) d.degrees.push_back(2 * j);
        d.dim = k * (2 * k + 1);
        break;
    case GroupType::D:
        if (rank < 2) {
            throw std::invalid_argument("D_k needs k >= 2");
        }
        d.label = "D" + std::to_string(rank);
        for (int j = 1; j <= rank - 1; ++j) d.degrees.push_back(2 * j);
        d.degrees.push_back(rank);
        std::sort(d.degrees.begin(), d.degrees.end());
        d.dim = k * (2 * k - 1);
        break;
    }
    for (int deg : d.degrees) {
        d.degree_sum += 2LL * deg - 1;
        // h0(K^1) = g; h0(K^d) = (2d - 1)(g - 1) for d >= 2.
        d.fixed_base_dim += deg == 1 ? g : (2LL * deg - 1) * (g - 1);
    }
    d.variable_base_dim = d.fixed_base_dim + 3LL * (g - 1);
    return d;
}

}  // namespace spcover::spectral
