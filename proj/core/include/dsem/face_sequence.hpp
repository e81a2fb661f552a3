#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace dsem {

using Rational = boost::rational<long long>;

/// Least rotation of a cyclic sequence, optionally also over its reversals.
template <typename T>
std::vector<T> canonical_cycle(const std::vector<T>& seq, bool allow_reflection) {
    if (seq.empty()) return seq;
    const std::size_t n = seq.size();
    std::vector<T> best = seq;
    auto consider = [&](const std::vector<T>& s) {
        std::vector<T> rot(n);
        for (std::size_t start = 0; start < n; ++start) {
            for (std::size_t t = 0; t < n; ++t) rot[t] = s[(start + t) % n];
            if (rot < best) best = rot;
        }
    };
    consider(seq);
    if (allow_reflection) {
        std::vector<T> rev(seq.rbegin(), seq.rend());
        consider(rev);
    }
    return best;
}

/// Cyclic sequence of face sizes around a vertex, kept in canonical form.
class FaceSequence {
public:
    FaceSequence() = default;
    explicit FaceSequence(const std::vector<int>& sizes);

    /// Accepts "3^3.4^2", "(3^3,4^2)" or "3.3.3.4.4".
    static FaceSequence parse(const std::string& text);

    const std::vector<int>& sizes() const { return sizes_; }
    std::vector<std::pair<int, int>> runs() const;
    int degree() const { return static_cast<int>(sizes_.size()); }
    int link_length() const;
    std::string str() const;

    auto operator<=>(const FaceSequence&) const = default;

private:
    std::vector<int> sizes_;
};

Rational curvature(const FaceSequence& fs);

}  // namespace dsem
