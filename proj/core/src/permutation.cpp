#include "spcover/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spcover::monodromy {

Permutation::Permutation(int size) : images_(static_cast<std::size_t>(size)) {
    if (size < 0) {
        throw std::invalid_argument("negative permutation size");
    }
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("images do not form a bijection");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles, int size) {
    Permutation result(size);
    for (const auto& cycle : cycles) {
        std::set<int> distinct(cycle.begin(), cycle.end());
        if (distinct.size() != cycle.size()) {
            throw std::invalid_argument("cycle repeats a point");
        }
        Permutation c(size);
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const int from = cycle[k];
            const int to = cycle[(k + 1) % cycle.size()];
            if (from < 1 || from > size) {
                throw std::invalid_argument("cycle point " + std::to_string(from) + " out of range");
            }
            c.images_[static_cast<std::size_t>(from - 1)] = to - 1;
        }
        result = result * c;
    }
    return result;
}

Permutation Permutation::parse(std::string_view text, int size) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_space();
    while (i < text.size()) {
        if (text[i] != '(') {
            throw std::invalid_argument("expected '(' in cycle notation: " + std::string(text));
        }
        ++i;
        const auto close = text.find(')', i);
        if (close == std::string_view::npos) {
            throw std::invalid_argument("unterminated cycle: " + std::string(text));
        }
        const std::string body(text.substr(i, close - i));
        std::vector<int> cycle;
        if (body.find_first_of(" ,") != std::string::npos) {
            std::istringstream is(body);
            std::string tok;
            while (is >> tok) {
                tok.erase(std::remove(tok.begin(), tok.end(), ','), tok.end());
                if (!tok.empty()) cycle.push_back(std::stoi(tok));
            }
        } else {
            for (char ch : body) {
                if (!std::isdigit(static_cast<unsigned char>(ch))) {
                    throw std::invalid_argument("bad character in cycle: " + std::string(text));
                }
                cycle.push_back(ch - '0');
            }
        }
        if (!cycle.empty()) {
            cycles.push_back(std::move(cycle));
        }
        i = close + 1;
        skip_space();
    }
    return from_cycles(cycles, size);
}

Permutation Permutation::inverse() const {
    Permutation p(size());
    for (int i = 0; i < size(); ++i) {
        p.images_[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    }
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i) {
        if (images_[static_cast<std::size_t>(i)] != i) return false;
    }
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 0; start < size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        for (int i = start; !seen[static_cast<std::size_t>(i)]; i = images_[static_cast<std::size_t>(i)]) {
            seen[static_cast<std::size_t>(i)] = true;
            cycle.push_back(i + 1);
        }
        if (cycle.size() >= 2) out.push_back(std::move(cycle));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 0; start < size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int len = 0;
        for (int i = start; !seen[static_cast<std::size_t>(i)]; i = images_[static_cast<std::size_t>(i)]) {
            seen[static_cast<std::size_t>(i)] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

int Permutation::cycle_count() const { return static_cast<int>(cycle_type().size()); }

std::string Permutation::to_cycle_string() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
        os << "(";
        for (std::size_t k = 0; k < c.size(); ++k) {
            os << (k ? " " : "") << c[k];
        }
        os << ")";
    }
    return os.str();
}

Permutation Permutation::conjugated_by(const Permutation& h) const { return h.inverse() * *this * h; }

bool Permutation::commutes_with(const Permutation& other) const { return *this * other == other * *this; }

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("composing permutations of different sizes");
    }
    Permutation p(a.size());
    for (int i = 0; i < a.size(); ++i) {
        p.images_[static_cast<std::size_t>(i)] = b[a[i]];
    }
    return p;
}

SheetInvolution::SheetInvolution(int n) : n_(n), sigma_(2 * n) {
    if (n < 1) {
        throw std::invalid_argument("sheet involution needs n >= 1");
    }
    std::vector<int> img(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < n; ++k) {
        img[static_cast<std::size_t>(2 * k)] = 2 * k + 1;
        img[static_cast<std::size_t>(2 * k + 1)] = 2 * k;
    }
    sigma_ = Permutation::from_images(std::move(img));
}

std::vector<Permutation> SheetInvolution::centralizer_generators() const {
    std::vector<Permutation> gens;
    gens.push_back(Permutation::from_cycles({{1, 2}}, 2 * n_));
    for (int k = 1; k < n_; ++k) {
        gens.push_back(Permutation::from_cycles({{2 * k - 1, 2 * k + 1}, {2 * k, 2 * k + 2}}, 2 * n_));
    }
    return gens;
}

std::vector<Permutation> SheetInvolution::centralizer_elements() const {
    std::vector<int> pairs(static_cast<std::size_t>(n_));
    std::iota(pairs.begin(), pairs.end(), 0);
    std::vector<Permutation> out;
    do {
        for (unsigned flips = 0; flips < (1U << static_cast<unsigned>(n_)); ++flips) {
            std::vector<int> img(static_cast<std::size_t>(2 * n_));
            for (int k = 0; k < n_; ++k) {
                const int target = pairs[static_cast<std::size_t>(k)];
                const bool flip = ((flips >> static_cast<unsigned>(k)) & 1U) != 0;
                img[static_cast<std::size_t>(2 * k)] = 2 * target + (flip ? 1 : 0);
                img[static_cast<std::size_t>(2 * k + 1)] = 2 * target + (flip ? 0 : 1);
            }
            out.push_back(Permutation::from_images(std::move(img)));
        }
    } while (std::next_permutation(pairs.begin(), pairs.end()));
    return out;
}

bool SheetInvolution::preserves(const std::vector<int>& cycle) const {
    const std::set<int> points(cycle.begin(), cycle.end());
    for (int p : cycle) {
        if (points.count(sigma_[p - 1] + 1) == 0) return false;
    }
    return true;
}

}  // namespace spcover::monodromy
