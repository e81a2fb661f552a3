#include "dsem/face_sequence.hpp"

#include <stdexcept>

namespace dsem {

FaceSequence::FaceSequence(const std::vector<int>& sizes) {
    for (int p : sizes) {
        if (p < 3) throw std::invalid_argument("face size below 3");
    }
    sizes_ = canonical_cycle(sizes, true);
}

FaceSequence FaceSequence::parse(const std::string& text) {
    std::vector<int> sizes;
    std::string body;
    for (char ch : text) {
        if (ch == '(' || ch == ')' || ch == ' ') continue;
        body += (ch == ',') ? '.' : ch;
    }
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t end = body.find('.', pos);
        if (end == std::string::npos) end = body.size();
        std::string item = body.substr(pos, end - pos);
        std::size_t caret = item.find('^');
        int p = std::stoi(item.substr(0, caret));
        int n = caret == std::string::npos ? 1 : std::stoi(item.substr(caret + 1));
        if (n < 1) throw std::invalid_argument("bad run length in " + text);
        sizes.insert(sizes.end(), static_cast<std::size_t>(n), p);
        pos = end + 1;
    }
    if (sizes.empty()) throw std::invalid_argument("empty face-sequence");
    return FaceSequence(sizes);
}

std::vector<std::pair<int, int>> FaceSequence::runs() const {
    std::vector<std::pair<int, int>> out;
    for (int p : sizes_) {
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.emplace_back(p, 1);
        }
    }
    if (out.size() > 1 && out.front().first == out.back().first) {
        out.front().second += out.back().second;
        out.pop_back();
    }
    return out;
}

int FaceSequence::link_length() const {
    int total = 0;
    for (int p : sizes_) total += p - 2;
    return total;
}

std::string FaceSequence::str() const {
    std::string s;
    for (auto [p, n] : runs()) {
        if (!s.empty()) s += '.';
        s += std::to_string(p);
        if (n > 1) s += '^' + std::to_string(n);
    }
    return s;
}

Rational curvature(const FaceSequence& fs) {
    Rational phi(1);
    for (auto [p, n] : fs.runs()) {
        phi -= Rational(n, 2);
        phi += Rational(n, p);
    }
    return phi;
}

}  // namespace dsem
