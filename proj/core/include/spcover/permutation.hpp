#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace spcover::monodromy {

/// Bijection of the sheets {1, ..., size}. Stored 0-based; printed 1-based.
///
/// Products compose left to right: (a * b)(i) = b(a(i)), i.e. a acts first.
/// This is the convention under which (12) * (13)(24) = (1423).
class Permutation {
public:
    Permutation() = default;
    /// Identity on `size` points.
    explicit Permutation(int size);
    /// 0-based images; throws std::invalid_argument unless a bijection.
    static Permutation from_images(std::vector<int> images);
    /// Parses cycle notation such as "(1 3)(2 4)" or "(13)(24)" (single-digit
    /// labels only in the compact form); "()" is the identity.
    static Permutation parse(std::string_view cycles, int size);
    /// Product of disjoint or overlapping cycles given 1-based.
    static Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int size);

    [[nodiscard]] int size() const { return static_cast<int>(images_.size()); }
    /// 0-based image of the 0-based point i.
    [[nodiscard]] int operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] const std::vector<int>& images() const { return images_; }

    [[nodiscard]] Permutation inverse() const;
    [[nodiscard]] bool is_identity() const;
    /// Cycles of length >= 2 as 1-based lists, each starting at its minimum,
    /// ordered by that minimum.
    [[nodiscard]] std::vector<std::vector<int>> cycles() const;
    /// All cycle lengths including fixed points, sorted descending.
    [[nodiscard]] std::vector<int> cycle_type() const;
    [[nodiscard]] int cycle_count() const;
    [[nodiscard]] std::string to_cycle_string() const;

    /// h^{-1} * this * h in left-to-right composition, i.e. relabel by h.
    [[nodiscard]] Permutation conjugated_by(const Permutation& h) const;
    [[nodiscard]] bool commutes_with(const Permutation& other) const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

/// The pairing sigma = (1 2)(3 4)...(2n-1 2n) of conjugate sheets.
class SheetInvolution {
public:
    explicit SheetInvolution(int n);
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const Permutation& sigma() const { return sigma_; }
    /// 0-based partner of the 0-based sheet i.
    [[nodiscard]] int partner(int i) const { return sigma_[i]; }
    /// Index k of the conjugate pair {2k, 2k+1} (0-based) containing sheet i.
    [[nodiscard]] static int pair_of(int i) { return i / 2; }
    /// Generators of the centralizer of sigma (hyperoctahedral group of order 2^n n!).
    [[nodiscard]] std::vector<Permutation> centralizer_generators() const;
    /// All centralizer elements; intended for small n.
    [[nodiscard]] std::vector<Permutation> centralizer_elements() const;
    /// True iff the set of points of `cycle` (1-based) is mapped onto itself by sigma.
    [[nodiscard]] bool preserves(const std::vector<int>& cycle) const;

private:
    int n_;
    Permutation sigma_;
};

}  // namespace spcover::monodromy
