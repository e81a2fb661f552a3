#include "dsem/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsem {

std::string DsemType::count_formula() const {
    std::string s = (count_num == 1 ? "" : std::to_string(count_num)) + "ij";
    if (count_den != 1) s += "/" + std::to_string(count_den);
    return s;
}

namespace {

DsemType make(const std::string& name, const std::string& a, const std::string& b, int num, int den,
              Rule rule) {
    DsemType t;
    t.name = name;
    t.fseq_a = FaceSequence::parse(a);
    t.fseq_b = FaceSequence::parse(b);
    t.count_num = num;
    t.count_den = den;
    t.min_degree = std::min(t.fseq_a.degree(), t.fseq_b.degree());
    t.rule = rule;
    return t;
}

std::vector<DsemType> build_catalog() {
    return {
        make("[3^3.4^2:4^4]_1", "3^3.4^2", "4^4", 1, 1, Rule::SquareStrips),
        make("[3^3.4^2:4^4]_2", "3^3.4^2", "4^4", 1, 1, Rule::SquareStrips),
        make("[3^6:3^3.4^2]_1", "3^6", "3^3.4^2", 1, 1, Rule::TriangleStrips),
        make("[3^6:3^3.4^2]_2", "3^6", "3^3.4^2", 1, 1, Rule::TriangleStrips),
        make("[3^3.4^2:3^2.4.3.4]_1", "3^3.4^2", "3^2.4.3.4", 6, 5, Rule::ElongatedSnub1),
        make("[3^3.4^2:3^2.4.3.4]_2", "3^3.4^2", "3^2.4.3.4", 1, 1, Rule::ElongatedSnub2),
        make("[3^6:3^2.4.3.4]", "3^6", "3^2.4.3.4", 7, 6, Rule::TriangleSnub),
        make("[3.4^2.6:3.6.3.6]_1", "3.4^2.6", "3.6.3.6", 5, 4, Rule::HexSquare),
        make("[3.4^2.6:3.6.3.6]_2", "3.4^2.6", "3.6.3.6", 5, 4, Rule::HexSquare),
        make("[3^2.6^2:3.6.3.6]", "3^2.6^2", "3.6.3.6", 3, 2, Rule::HexTriangleStrips),
        make("[3^6:3^2.6^2]", "3^6", "3^2.6^2", 7, 3, Rule::HexIslands),
        make("[3^4.6:3^2.6^2]", "3^4.6", "3^2.6^2", 1, 1, Rule::HexZigzag),
        make("[3^2.4.3.4:3.4.6.4]", "3^2.4.3.4", "3.4.6.4", 3, 2, Rule::SquareHexagonal),
        make("[3^6:3^4.6]_1", "3^6", "3^4.6", 1, 1, Rule::SnubHexagonal1),
        make("[3^6:3^4.6]_2", "3^6", "3^4.6", 4, 3, Rule::SnubHexagonal2),
        make("[3^3.4^2:3.4.6.4]", "3^3.4^2", "3.4.6.4", 1, 1, Rule::ElongatedRhombi),
        make("[3^6:3^2.4.12]", "3^6", "3^2.4.12", 7, 5, Rule::Dodecagonal),
        make("[3.4.3.12:3.12^2]", "3.4.3.12", "3.12^2", 8, 6, Rule::TruncatedHexagonal),
        make("[3.4.6.4:4.6.12]", "3.4.6.4", "4.6.12", 3, 2, Rule::TruncatedTrihexagonal),
        make("[3.4^2.6:3.4.6.4]", "3.4^2.6", "3.4.6.4", 9, 5, Rule::RhombiHexagonal),
    };
}

}  // namespace

const std::vector<DsemType>& catalog() {
    static const std::vector<DsemType> types = build_catalog();
    return types;
}

const DsemType& find_type(const std::string& name) {
    for (const DsemType& t : catalog()) {
        if (t.name == name) return t;
    }
    throw std::out_of_range("unknown DSEM type " + name);
}

DsemReport verify_dsem(const SurfaceMap& m, const DsemType& t) {
    DsemReport r;
    auto classes = classify_vertices(m);
    std::vector<FaceSequence> want{t.fseq_a, t.fseq_b};
    std::sort(want.begin(), want.end());
    std::vector<FaceSequence> got;
    for (const auto& [fs, vs] : classes) got.push_back(fs);
    r.classes_match = (got == want);
    if (!r.classes_match) {
        std::string s = "face-sequence classes:";
        for (const auto& fs : got) s += " (" + fs.str() + ")";
        r.problems.push_back(s);
    }
    bool links_ok = true;
    for (const auto& [fs, vs] : classes) {
        ClassReport c;
        c.fseq = fs;
        c.size = static_cast<int>(vs.size());
        c.link_constant = true;
        c.link_constant_oriented = true;
        std::vector<FaceSequence> ref, ref_oriented;
        for (std::size_t t2 = 0; t2 < vs.size(); ++t2) {
            std::vector<FaceSequence> seq;
            try {
                seq = link_face_sequences(m, vs[t2]);
            } catch (const MapException& e) {
                r.problems.push_back(e.what());
                c.link_constant = c.link_constant_oriented = false;
                break;
            }
            auto unoriented = canonical_cycle(seq, true);
            auto oriented = canonical_cycle(seq, false);
            if (t2 == 0) {
                ref = unoriented;
                ref_oriented = oriented;
                c.link_sequence = unoriented;
            } else {
                if (unoriented != ref) c.link_constant = false;
                if (oriented != ref_oriented) c.link_constant_oriented = false;
            }
        }
        if (!c.link_constant) {
            links_ok = false;
            r.problems.push_back("link face-sequences differ within class (" + fs.str() + ")");
        }
        r.classes.push_back(std::move(c));
    }
    r.pass = r.classes_match && links_ok;
    return r;
}

}  // namespace dsem
