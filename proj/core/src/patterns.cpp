#include "patterns.hpp"

#include <sstream>
#include <stdexcept>

namespace dsem::detail {

namespace {

Ref parse_ref(const std::string& tok) {
    Ref r;
    r.kind = tok.at(0);
    std::string rest = tok.substr(1);
    if (r.kind == 'X') {
        std::size_t dot = rest.find('.');
        r.row = std::stoi(rest.substr(0, dot));
        r.col = std::stoi(rest.substr(dot + 1));
    } else if (r.kind == 'L' || r.kind == 'U') {
        r.col = std::stoi(rest);
    } else {
        throw std::logic_error("bad pattern token " + tok);
    }
    return r;
}

// "x=2,2 s=0.5 | L0 L1 U1 U0, L1 L2 U2"
BandPattern band(const std::string& text) {
    BandPattern b;
    std::string body = text;
    std::size_t bar = text.find('|');
    if (bar != std::string::npos) {
        std::istringstream head(text.substr(0, bar));
        std::string item;
        while (head >> item) {
            if (item.rfind("x=", 0) == 0) {
                std::istringstream xs(item.substr(2));
                std::string n;
                while (std::getline(xs, n, ',')) b.xrows.push_back(std::stoi(n));
            } else if (item.rfind("s=", 0) == 0) {
                b.shift = std::stod(item.substr(2));
            }
        }
        body = text.substr(bar + 1);
    }
    std::istringstream faces(body);
    std::string face;
    while (std::getline(faces, face, ',')) {
        std::istringstream toks(face);
        std::string tok;
        std::vector<Ref> f;
        while (toks >> tok) f.push_back(parse_ref(tok));
        if (!f.empty()) b.faces.push_back(f);
    }
    return b;
}

int zero(int) { return 0; }
int one(int) { return 1; }
int minus_one(int) { return -1; }
int parity_sign(int j) { return j % 2 == 1 ? -1 : 1; }

const char* kSquare = "L0 L1 U1 U0";
const char* kTriangle = "L0 L1 U1, L0 U1 U0";

std::vector<Pattern> build() {
    std::vector<Pattern> p;
    p.push_back({"[3^3.4^2:4^4]_1", 1, {band(kSquare), band(kSquare), band(kTriangle)}, zero});
    p.push_back({"[3^3.4^2:4^4]_2", 1,
                 {band(kSquare), band(kSquare), band(kSquare), band(kTriangle)}, zero});
    p.push_back({"[3^6:3^3.4^2]_1", 1, {band(kSquare), band(kTriangle), band(kTriangle)}, zero});
    p.push_back({"[3^6:3^3.4^2]_2", 1,
                 {band(kSquare), band(kTriangle), band(kTriangle), band(kTriangle)}, zero});
    p.push_back({"[3^3.4^2:3^2.4.3.4]_2", 4,
                 {band("L0 L1 U0, L1 U1 U0, L1 L2 U1, L2 U2 U1, L2 L3 U3 U2, L3 L4 U4 U3"),
                  band("L0 L1 U1 U0, L1 L2 U2 U1, L2 L3 U3, L2 U3 U2, L3 L4 U4, L3 U4 U3")},
                 zero});
    p.push_back({"[3^3.4^2:3^2.4.3.4]_1", 5,
                 {band("L1 U1 U0 L0, U1 L1 L2, U3 U2 L3 L4, U1 L2 U2, L2 L3 U2, L0 U0 U-1, U3 L4 U4, L-1 L0 U-1"),
                  band("x=2 | X0.0 X0.1 U2 U1, X0.1 X0.0 L1 L2, L2 L3 X0.1, U0 U-1 L-1 L0, L0 L1 X0.0, L3 U3 X0.1, "
                       "U3 L3 L4 U4, L0 X0.0 U0, X0.1 U3 U2, X0.0 U1 U0"),
                  band("U2 U1 L1, U2 L2 U3, L2 U2 L1, U-1 L-1 U0, L-1 L0 U0, L3 L4 U4, L1 U1 U0 L0, L3 U4 U3 L2"),
                  band("x=2 | L1 L2 U2 U1, U3 U2 L2 L3, L4 X0.1 L3, L1 U1 X0.0, U0 U-1 X0.-1 X0.0, L1 X0.0 L0, "
                       "U0 X0.0 U1, L0 X0.0 X0.-1 L-1, U4 U3 X0.1, X0.1 U3 L3")},
                 zero});
    p.push_back({"[3^6:3^2.4.3.4]", 3,
                 {band("L1 L2 U1, L2 L3 U2 U1, L0 L1 U1 U0, U0 U-1 L0"),
                  band("x=1 | U0 U-1 L-1 L0, U2 U1 X0.0, L1 X0.0 L0, X0.0 L1 L2, X0.0 L2 U2, X0.0 U1 U0, L0 X0.0 U0"),
                  band("L-1 L0 U0, U0 L0 L1 U1, L1 L2 U3 U2, L1 U2 U1"),
                  band("x=1 | X0.0 U1 U0, U1 X0.0 L1, U-1 X0.0 U0, L2 U2 U1 L1, U2 L2 X0.1, L1 X0.0 L0, L0 X0.0 L-1")},
                 zero});
    p.push_back({"[3.4^2.6:3.6.3.6]_1", 2,
                 {band("x=1 | U0 U-1 X0.0, U1 U0 X0.0 L1 L2 X0.1, L0 L1 X0.0"),
                  band("L-1 L0 U0 U-1, L0 L1 U1 U0"),
                  band("x=1 | X0.1 U2 U1 X0.0 L0 L1, U0 X0.0 U1, L-1 L0 X0.0"),
                  band("U2 U1 L1 L2, U1 U0 L0 L1")},
                 zero});
    p.push_back({"[3.4^2.6:3.6.3.6]_2", 2,
                 {band("x=1 s=1 | X0.1 U1 U0 X0.0 L1 L2, X0.0 U0 U-1, L0 L1 X0.0"),
                  band("U0 U-1 L-1 L0, L0 L1 U1 U0")},
                 zero});
    p.push_back({"[3^2.6^2:3.6.3.6]", 2,
                 {band("x=1 s=1 | U0 U-1 X0.0, U1 U0 X0.0 L1 L2 X0.1, L0 L1 X0.0"),
                  band("x=1 s=-1 | L1 X0.1 U2 U1 X0.0 L0, L-1 L0 X0.0, X0.0 U1 U0")},
                 zero});
    p.push_back({"[3^6:3^2.6^2]", 3,
                 {band("x=2,2 s=0.5 | U0 X1.0 X1.1, U1 U0 X1.1, L1 L2 X0.1 X1.1 X1.0 X0.0, U2 X1.2 U3, "
                       "X1.2 U2 U1 X1.1 X0.1 X0.2, X0.2 X0.1 L3, L0 L1 X0.0, L3 X0.1 L2")},
                 zero});
    p.push_back({"[3^4.6:3^2.6^2]", 2,
                 {band("L0 L1 L2 U2 U1 U0"),
                  band("s=1 | U0 U-1 L1, U-1 L0 L1, L1 U1 U0, U1 L1 L2")},
                 one});
    p.push_back({"[3^2.4.3.4:3.4.6.4]", 4,
                 {band("x=4 | X0.1 L2 L3 X0.3, L2 X0.1 L1, U1 U0 X0.2 X0.3, U-1 U-2 X0.0 X0.2, "
                       "X0.2 U0 U-1, U2 U1 X0.3 L3 L4 X0.4, L0 L1 X0.1 X0.0, X0.1 X0.3 X0.2, "
                       "X0.2 X0.0 X0.1"),
                  band("L0 L1 U1, L-2 L-1 U-2, L-1 U-1 U-2, U-1 L-1 L0 U0, L1 L2 U2 U1, U1 U0 L0")},
                 zero});
    p.push_back({"[3^6:3^4.6]_1", 4,
                 {band("U1 L1 U2, L1 U1 L0, U2 L2 L3, L2 U2 L1, U1 U0 L0, U3 L3 U4, L3 U3 U2, U4 L3 L4"),
                  band("U3 U2 U1 L1 L2 L3, L0 L1 U1, U1 U0 L0, L3 L4 U4, U4 U3 L3"),
                  band("L2 L3 U4, U2 U1 L0, U3 L2 U4, L2 U3 U2, L0 L1 U2, U2 L1 L2, L3 L4 U5, U4 L3 U5")},
                 minus_one});
    p.push_back({"[3^6:3^4.6]_2", 3,
                 {band("x=2 s=1 | U1 U0 X0.0 L1 L2 X0.1, U1 X0.1 U2, U2 X0.2 U3, X0.2 U2 X0.1, L0 L1 X0.0, "
                       "X0.1 L2 L3, X0.-1 L0 X0.0"),
                  band("s=0.5 | L0 L1 U0, U1 U0 L1, L0 U0 U-1, L2 U2 U1, U2 L2 L3, L1 L2 U1")},
                 zero});
    p.push_back({"[3^6:3^2.4.12]", 5,
                 {band("x=2,2 s=1 | U2 U1 U0 X1.0 X0.0 L1 L2 L3 L4 X0.1 X1.1 U3, L1 X0.0 L0, L0 X0.0 X0.-1, "
                       "U5 U4 X1.2, X1.2 U4 X1.1, X1.1 X0.1 X0.2 X1.2, U3 X1.1 U4, L5 X0.1 L4"),
                  band("s=1.5 | L1 L2 U0, U2 L4 U3, L4 U2 L3, L2 U1 U0, U1 L2 L3 U2, L4 L5 U3, U-2 L0 L1 U-1, "
                       "U0 U-1 L1")},
                 zero});
    p.push_back({"[3.4.3.12:3.12^2]", 6,
                 {band("x=2 | L1 L2 X0.1, L3 L4 L5 L6 X0.2 U7 U6 U5 U4 U3 X0.1 L2, U3 U2 X0.1, X0.0 L1 X0.1 U2, "
                       "L1 X0.0 L0, U1 X0.0 U2"),
                  band("x=2 | X0.1 L5 X0.2 U4, L5 X0.1 L4, U2 U1 U0 U-1 X0.0 L0 L1 L2 L3 L4 X0.1 U3, U4 X0.2 U5, "
                       "U4 U3 X0.1, X0.2 L5 L6")},
                 parity_sign});
    p.push_back({"[3.4.6.4:4.6.12]", 6,
                 {band("x=6 s=1 | X0.7 X0.8 U5 U4, X0.2 X0.1 X0.0 X0.5 X0.4 X0.3, X0.5 L2 L3 X0.4, L2 X0.5 L1, "
                       "X0.5 X0.0 L0 L1, U2 U1 X0.3 X0.4 L3 L4 L5 L6 X0.6 X0.7 U4 U3, U6 U5 X0.8, X0.2 X0.3 U1 U0"),
                  band("s=2 | L3 U2 U1 L2, U2 L3 L4 L5 U4 U3, L1 L2 U1 U0 U-1 L0, L6 U5 U4 L5")},
                 one});
    p.push_back({"[3.4^2.6:3.4.6.4]", 5,
                 {band("x=8 s=2 | X0.1 X0.2 U0, X0.2 X0.1 X0.0 L1 L2 X0.3, X0.5 X0.6 X0.7 U3 U2 X0.4, X0.6 X0.5 L4, "
                       "X0.2 X0.3 X0.5 X0.4, U5 U4 X0.7 X0.9, U2 U1 X0.4, X0.5 X0.3 L3 L4, L1 X0.0 L0, L2 L3 X0.3, "
                       "L4 L5 X0.8 X0.6, X0.4 U1 U0 X0.2, X0.8 X0.9 X0.7 X0.6, U3 X0.7 U4"),
                  band("s=1 | L4 L5 L6 U5 U4 U3, L1 L2 U1 U0, U3 U2 L3 L4, L3 U2 U1 L2")},
                 zero});
    p.push_back({"[3^3.4^2:3.4.6.4]", 4,
                 {band("L0 L1 U1 U0, L2 U2 U1 L1, U2 L2 L3 L4 U4 U3"),
                  band("s=0.5 | U1 U0 L1, U2 U1 L2 L3, L1 U0 L0, U1 L1 L2, L3 L4 U4 U3, L3 U3 U2"),
                  band("s=0.5 | U-1 L1 L2 U0, L1 U-1 L0, U1 U0 L2, U2 U1 L3, U2 L3 L4 U3, U1 L2 L3")},
                 one});
    return p;
}

}  // namespace

const std::vector<Pattern>& all_patterns() {
    static const std::vector<Pattern> table = build();
    return table;
}

const Pattern& pattern_for(const std::string& type) {
    for (const Pattern& p : all_patterns()) {
        if (p.type == type) return p;
    }
    throw std::out_of_range("no pattern table for " + type);
}

}  // namespace dsem::detail
