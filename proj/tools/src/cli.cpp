#include "dsem_cli/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

namespace dsem::cli {

json catalog_json() {
    json out = json::array();
    for (const DsemType& t : catalog()) {
        out.push_back({{"name", t.name},
                       {"face_sequences", {t.fseq_a.str(), t.fseq_b.str()}},
                       {"vertex_count", t.count_formula()},
                       {"min_degree", t.min_degree},
                       {"column_period", column_period(t)}});
    }
    return out;
}

json map_to_json(const SurfaceMap& m, const std::vector<std::string>& labels) {
    json lab = json::object();
    for (std::size_t v = 0; v < labels.size(); ++v) lab[std::to_string(v)] = labels[v];
    return {{"n", m.vertex_count()}, {"faces", m.faces()}, {"labels", lab}};
}

SurfaceMap map_from_json(const json& j, std::vector<std::string>* labels) {
    auto faces = j.at("faces").get<std::vector<Face>>();
    SurfaceMap m = SurfaceMap::from_faces(faces);
    if (j.contains("n") && j.at("n").get<int>() != m.vertex_count()) {
        throw MapException(MapError::BadInput, "n does not match the faces");
    }
    if (labels) {
        labels->assign(m.vertex_count(), "");
        if (j.contains("labels")) {
            for (auto& [key, val] : j.at("labels").items()) {
                int v = std::stoi(key);
                if (v >= 0 && v < m.vertex_count()) (*labels)[v] = val.get<std::string>();
            }
        }
    }
    return m;
}

json layout_to_json(const Layout& l) {
    json pos = json::array();
    for (const Point& p : l.pos) pos.push_back({p.x, p.y});
    json strip = json::array();
    for (const auto& face : l.strip) {
        json f = json::array();
        for (const StripCorner& c : face) f.push_back({c.vertex, c.a, c.b, c.at.x, c.at.y});
        strip.push_back(f);
    }
    json shifts = json::array();
    for (const auto& [e, w] : l.edge_shift) shifts.push_back({e.first, e.second, w.wx, w.wy});
    return {{"i", l.i},         {"j", l.j},         {"k", l.k},         {"top_offset", l.top_offset},
            {"labels", l.labels}, {"pos", pos},     {"rows", l.rows},   {"strip", strip},
            {"edge_shift", shifts}};
}

Layout layout_from_json(const json& j) {
    Layout l;
    l.i = j.at("i").get<int>();
    l.j = j.at("j").get<int>();
    l.k = j.at("k").get<int>();
    l.top_offset = j.at("top_offset").get<int>();
    l.labels = j.at("labels").get<std::vector<std::string>>();
    for (const auto& p : j.at("pos")) l.pos.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    l.rows = j.at("rows").get<std::vector<std::vector<int>>>();
    for (const auto& f : j.at("strip")) {
        std::vector<StripCorner> face;
        for (const auto& c : f) {
            face.push_back({c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>(),
                            {c.at(3).get<double>(), c.at(4).get<double>()}});
        }
        l.strip.push_back(std::move(face));
    }
    for (const auto& s : j.at("edge_shift")) {
        l.edge_shift[{s.at(0).get<int>(), s.at(1).get<int>()}] = {s.at(2).get<int>(), s.at(3).get<int>()};
    }
    return l;
}

json cycle_to_json(const Cycle& c) {
    json out = {{"vertices", c.vertices}};
    if (c.winding) {
        out["winding"] = {c.winding->wx, c.winding->wy};
    } else {
        out["winding"] = nullptr;
    }
    return out;
}

Cycle cycle_from_json(const json& j) {
    Cycle c;
    c.vertices = j.at("vertices").get<std::vector<int>>();
    if (j.contains("winding") && !j.at("winding").is_null()) {
        c.winding = WindingPair{j.at("winding").at(0).get<int>(), j.at("winding").at(1).get<int>()};
    }
    return c;
}

namespace {

std::string num(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << v;
    return s.str();
}

struct Segment {
    Point p, q;
};

}  // namespace

std::string render_svg(const SurfaceMap& m, const Layout& l, const Cycle* cycle) {
    if (static_cast<int>(l.pos.size()) != m.vertex_count() || l.strip.size() != m.faces().size()) {
        throw MismatchedInputs("layout does not belong to this map");
    }
    for (std::size_t f = 0; f < l.strip.size(); ++f) {
        std::vector<int> vs;
        for (const auto& c : l.strip[f]) vs.push_back(c.vertex);
        if (vs != m.faces()[f]) throw MismatchedInputs("strip face " + std::to_string(f) + " differs from the map");
    }

    double minx = 0, maxx = l.i, miny = 0, maxy = l.j;
    for (const auto& face : l.strip) {
        for (const auto& c : face) {
            minx = std::min(minx, c.at.x);
            maxx = std::max(maxx, c.at.x);
            miny = std::min(miny, c.at.y);
            maxy = std::max(maxy, c.at.y);
        }
    }
    const double unit = 40, pad = 20;
    auto X = [&](double x) { return num(pad + (x - minx) * unit); };
    auto Y = [&](double y) { return num(pad + (maxy - y) * unit); };
    auto line = [&](std::ostream& os, const char* cls, const Point& p, const Point& q) {
        os << "<line class=\"" << cls << "\" x1=\"" << X(p.x) << "\" y1=\"" << Y(p.y) << "\" x2=\"" << X(q.x)
           << "\" y2=\"" << Y(q.y) << "\"/>\n";
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(2 * pad + (maxx - minx) * unit)
       << "\" height=\"" << num(2 * pad + (maxy - miny) * unit) << "\">\n";
    os << "<style>.edge{stroke:#555;stroke-width:1}.cycle{stroke:#000;stroke-width:4}"
          ".seam{fill:none;stroke:#c33;stroke-dasharray:4 3}.vertex{fill:#222}</style>\n";

    std::set<std::pair<std::pair<std::string, std::string>, std::pair<std::string, std::string>>> drawn;
    for (const auto& face : l.strip) {
        for (std::size_t t = 0; t < face.size(); ++t) {
            const Point& p = face[t].at;
            const Point& q = face[(t + 1) % face.size()].at;
            auto a = std::make_pair(X(p.x), Y(p.y));
            auto b = std::make_pair(X(q.x), Y(q.y));
            if (b < a) std::swap(a, b);
            if (!drawn.insert({a, b}).second) continue;
            line(os, "edge", p, q);
        }
    }

    os << "<polyline class=\"seam\" points=\"" << X(0) << "," << Y(0) << " " << X(l.i) << "," << Y(0) << "\"/>\n";
    os << "<polyline class=\"seam\" points=\"" << X(0) << "," << Y(l.j) << " " << X(l.i) << "," << Y(l.j) << "\"/>\n";

    std::set<std::pair<std::string, std::string>> dots;
    for (const auto& face : l.strip) {
        for (const auto& c : face) {
            auto key = std::make_pair(X(c.at.x), Y(c.at.y));
            if (!dots.insert(key).second) continue;
            os << "<circle class=\"vertex\" cx=\"" << key.first << "\" cy=\"" << key.second << "\" r=\"2.5\"><title>"
               << l.labels.at(c.vertex) << "</title></circle>\n";
        }
    }

    if (cycle) {
        const auto& vs = cycle->vertices;
        for (std::size_t t = 0; t < vs.size(); ++t) {
            int u = vs[t], v = vs[(t + 1) % vs.size()];
            bool found = false;
            for (const auto& face : l.strip) {
                for (std::size_t s = 0; s < face.size() && !found; ++s) {
                    const auto& c1 = face[s];
                    const auto& c2 = face[(s + 1) % face.size()];
                    if ((c1.vertex == u && c2.vertex == v) || (c1.vertex == v && c2.vertex == u)) {
                        line(os, "cycle", c1.at, c2.at);
                        found = true;
                    }
                }
                if (found) break;
            }
            if (!found) throw MismatchedInputs("cycle edge " + std::to_string(u) + "-" + std::to_string(v) + " is not in the strip");
        }
    }
    os << "</svg>\n";
    return os.str();
}

bool SweepRow::pass() const {
    return generated && count_ok && closed_ok && dsem_ok && euler_ok && curvature_ok && ham_constructed &&
           ham_verified && oracle_agrees && (kappa < 0 || kappa == mindeg) && rows_noncontractible &&
           cutting_noncontractible;
}

SweepRow sweep_instance(const ReprParams& p, const SweepOptions& opt) {
    SweepRow r;
    r.type = p.type;
    r.i = p.i;
    r.j = p.j;
    r.k = p.k;
    const DsemType& t = find_type(p.type);
    r.n = vertex_count(t, p.i, p.j);
    Generated g;
    try {
        g = generate(p);
        r.generated = true;
    } catch (const std::exception& e) {
        r.error = e.what();
        return r;
    }
    const SurfaceMap& m = g.map;
    r.count_ok = m.vertex_count() == r.n;
    std::map<Edge, int> on_faces;
    for (const Face& f : m.faces()) {
        for (std::size_t e = 0; e < f.size(); ++e) {
            int a = f[e], b = f[(e + 1) % f.size()];
            ++on_faces[{std::min(a, b), std::max(a, b)}];
        }
    }
    r.closed_ok = static_cast<int>(on_faces.size()) == m.edge_count() &&
                  std::all_of(on_faces.begin(), on_faces.end(), [](const auto& kv) { return kv.second == 2; });
    r.dsem_ok = verify_dsem(m, t).pass;
    r.euler_ok = euler_characteristic(m) == 0;
    r.curvature_ok = true;
    for (int v = 0; v < m.vertex_count(); ++v) r.curvature_ok = r.curvature_ok && curvature(face_sequence(m, v)).numerator() == 0;
    r.mindeg = m.min_degree();
    if (opt.connectivity) r.kappa = vertex_connectivity(m);

    r.rows_noncontractible = true;
    for (int s = 0; s < p.j; ++s) r.rows_noncontractible = r.rows_noncontractible && !row_cycle(g.layout, s).winding->is_zero();
    Cycle cut = cutting_cycle(m, g.layout);
    r.cutting_noncontractible = !cut.vertices.empty() && !cut.winding->is_zero();

    try {
        Cycle c = construct_hamiltonian(p, m, g.layout);
        r.ham_constructed = true;
        r.ham_verified = verify_hamiltonian(m, c);
        r.winding = c.winding;
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    if (m.vertex_count() <= opt.oracle_cutoff) {
        OracleResult o = brute_force_hamiltonian(m, opt.oracle_budget);
        r.oracle = to_string(o.status);
        r.oracle_agrees = o.status == OracleStatus::Found && o.cycle.verified;
    }
    return r;
}

SweepReport run_sweep(const SweepOptions& opt) {
    SweepReport rep;
    for (const DsemType& t : catalog()) {
        if (!opt.types.empty() && std::find(opt.types.begin(), opt.types.end(), t.name) == opt.types.end()) continue;
        for (const ReprParams& p : enumerate_admissible(t, opt.max_vertices)) {
            rep.rows.push_back(sweep_instance(p, opt));
            if (rep.rows.back().pass()) {
                ++rep.passed;
            } else {
                ++rep.failed;
            }
        }
    }
    return rep;
}

json to_json(const SweepRow& r) {
    json w = nullptr;
    if (r.winding) w = {r.winding->wx, r.winding->wy};
    return {{"type", r.type},
            {"i", r.i},
            {"j", r.j},
            {"k", r.k},
            {"n", r.n},
            {"generated", r.generated},
            {"count_ok", r.count_ok},
            {"closed_ok", r.closed_ok},
            {"dsem_ok", r.dsem_ok},
            {"euler_ok", r.euler_ok},
            {"curvature_ok", r.curvature_ok},
            {"kappa", r.kappa},
            {"mindeg", r.mindeg},
            {"ham_constructed", r.ham_constructed},
            {"ham_verified", r.ham_verified},
            {"oracle", r.oracle},
            {"oracle_agrees", r.oracle_agrees},
            {"winding", w},
            {"rows_noncontractible", r.rows_noncontractible},
            {"cutting_noncontractible", r.cutting_noncontractible},
            {"pass", r.pass()},
            {"error", r.error}};
}

json to_json(const SweepReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows) rows.push_back(to_json(r));
    return {{"rows", rows},
            {"summary", {{"instances", rep.rows.size()}, {"passed", rep.passed}, {"failed", rep.failed}}}};
}

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct ParamOpts {
    std::string type;
    int i = 0, j = 0, k = 0;
    void add(CLI::App* sub, bool required) {
        auto* o = sub->add_option("--type", type, "DSEM type, e.g. [3^6:3^3.4^2]_1");
        if (required) o->required();
        sub->add_option("--i", i, "row length");
        sub->add_option("--j", j, "number of rows");
        sub->add_option("--k", k, "top-to-bottom shift");
    }
    ReprParams params() const { return {type, i, j, k}; }
};

std::string sweep_line(const SweepRow& r) {
    std::ostringstream s;
    s << r.type << " i=" << r.i << " j=" << r.j << " k=" << r.k << " n=" << r.n << (r.pass() ? " ok" : " FAIL")
      << " dsem=" << r.dsem_ok << " euler=" << r.euler_ok << " curv=" << r.curvature_ok << " kappa=" << r.kappa
      << " mindeg=" << r.mindeg << " ham=" << r.ham_verified << " oracle=" << r.oracle;
    if (r.winding) s << " winding=(" << r.winding->wx << "," << r.winding->wy << ")";
    if (!r.error.empty()) s << " error=\"" << r.error << "\"";
    return s.str();
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Doubly semi-equivelar maps on the torus"};
    app.require_subcommand(1);
    bool as_json = false;

    auto* cat = app.add_subcommand("catalog", "list the 20 types");
    cat->add_flag("--json", as_json);

    ParamOpts gen_p;
    std::string gen_out, gen_layout;
    auto* gen = app.add_subcommand("gen", "generate M(i,j,k)");
    gen_p.add(gen, true);
    gen->add_option("--out", gen_out, "map.json");
    gen->add_option("--layout", gen_layout, "layout.json");
    gen->add_flag("--json", as_json);

    ParamOpts chk_p;
    std::string chk_in;
    auto* chk = app.add_subcommand("check", "verify a map against a type");
    chk_p.add(chk, true);
    chk->add_option("--in", chk_in, "map.json; generated from the parameters when absent");
    chk->add_flag("--json", as_json);

    std::string kap_in;
    auto* kap = app.add_subcommand("kappa", "vertex connectivity of a map");
    kap->add_option("--in", kap_in, "map.json")->required();
    kap->add_flag("--json", as_json);

    ParamOpts ham_p;
    bool ham_oracle = false;
    std::string ham_out;
    auto* ham = app.add_subcommand("ham", "construct and verify a Hamiltonian cycle");
    ham_p.add(ham, true);
    ham->add_flag("--oracle", ham_oracle, "also run the backtracking oracle");
    ham->add_option("--out", ham_out, "cycle.json");
    ham->add_flag("--json", as_json);

    std::string svg_map, svg_layout, svg_cycle, svg_out;
    auto* svg = app.add_subcommand("svg", "render the unrolled strip");
    svg->add_option("--map", svg_map, "map.json")->required();
    svg->add_option("--layout", svg_layout, "layout.json")->required();
    svg->add_option("--cycle", svg_cycle, "cycle.json");
    svg->add_option("--out", svg_out, "output file, stdout when absent");
    svg->add_flag("--json", as_json);

    SweepOptions sw;
    auto* swp = app.add_subcommand("sweep", "check every admissible instance up to a size");
    swp->add_option("--types", sw.types, "restrict to these types");
    swp->add_option("--max-vertices", sw.max_vertices);
    swp->add_option("--oracle-cutoff", sw.oracle_cutoff);
    swp->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*cat) {
            json c = catalog_json();
            if (as_json) {
                out << c.dump(2) << "\n";
            } else {
                for (const auto& t : c) {
                    out << t["name"].get<std::string>() << "  " << t["face_sequences"][0].get<std::string>() << " "
                        << t["face_sequences"][1].get<std::string>() << "  n=" << t["vertex_count"].get<std::string>()
                        << "  mindeg=" << t["min_degree"] << "\n";
                }
            }
            return kOk;
        }
        if (*gen) {
            Generated g = generate(gen_p.params());
            json mj = map_to_json(g.map, g.layout.labels);
            if (!gen_out.empty()) write_text(gen_out, mj.dump() + "\n");
            if (!gen_layout.empty()) write_text(gen_layout, layout_to_json(g.layout).dump() + "\n");
            if (as_json) {
                out << json{{"n", g.map.vertex_count()}, {"edges", g.map.edge_count()}, {"faces", g.map.face_count()}}.dump()
                    << "\n";
            } else {
                out << "n=" << g.map.vertex_count() << " edges=" << g.map.edge_count() << " faces=" << g.map.face_count()
                    << "\n";
            }
            return kOk;
        }
        if (*chk) {
            const DsemType& t = find_type(chk_p.type);
            SurfaceMap m = chk_in.empty() ? generate(chk_p.params()).map : map_from_json(read_json(chk_in));
            DsemReport rep = verify_dsem(m, t);
            int chi = euler_characteristic(m);
            bool curv = true;
            for (int v = 0; v < m.vertex_count(); ++v) curv = curv && curvature(face_sequence(m, v)).numerator() == 0;
            bool ok = rep.pass && chi == 0 && curv;
            if (as_json) {
                json classes = json::array();
                for (const auto& c : rep.classes) {
                    classes.push_back({{"face_sequence", c.fseq.str()}, {"size", c.size}, {"link_constant", c.link_constant}});
                }
                out << json{{"pass", ok}, {"dsem", rep.pass}, {"euler", chi}, {"curvature_zero", curv},
                            {"classes", classes}, {"problems", rep.problems}}
                           .dump(2)
                    << "\n";
            } else {
                out << (ok ? "pass" : "FAIL") << " euler=" << chi << " curvature_zero=" << curv << "\n";
                for (const auto& c : rep.classes) out << "  " << c.fseq.str() << " x" << c.size << "\n";
                for (const auto& p : rep.problems) out << "  problem: " << p << "\n";
            }
            return ok ? kOk : kVerifyFailed;
        }
        if (*kap) {
            SurfaceMap m = map_from_json(read_json(kap_in));
            int kappa = vertex_connectivity(m);
            json per = json::object();
            for (const auto& [fs, vs] : classify_vertices(m)) per[fs.str()] = {{"degree", fs.degree()}, {"count", vs.size()}};
            if (as_json) {
                out << json{{"kappa", kappa}, {"mindeg", m.min_degree()}, {"classes", per}}.dump(2) << "\n";
            } else {
                out << "kappa=" << kappa << " mindeg=" << m.min_degree() << "\n";
                for (auto& [name, v] : per.items()) out << "  " << name << " degree=" << v["degree"] << " count=" << v["count"] << "\n";
            }
            return kOk;
        }
        if (*ham) {
            ReprParams p = ham_p.params();
            Generated g = generate(p);
            Cycle c = construct_hamiltonian(p, g.map, g.layout);
            json res = {{"length", c.vertices.size()}, {"verified", c.verified}, {"cycle", cycle_to_json(c)}};
            if (ham_oracle) {
                OracleResult o = brute_force_hamiltonian(g.map, oracle_budget_from_env());
                res["oracle"] = {{"status", to_string(o.status)}, {"nodes", o.nodes}};
            }
            if (!ham_out.empty()) write_text(ham_out, cycle_to_json(c).dump() + "\n");
            if (as_json) {
                out << res.dump(2) << "\n";
            } else {
                out << "length=" << c.vertices.size() << " verified=" << c.verified << " winding=(" << c.winding->wx
                    << "," << c.winding->wy << ")";
                if (ham_oracle) out << " oracle=" << res["oracle"]["status"].get<std::string>();
                out << "\n";
            }
            bool oracle_ok = !ham_oracle || res["oracle"]["status"] == "Found";
            return c.verified && oracle_ok ? kOk : kVerifyFailed;
        }
        if (*svg) {
            SurfaceMap m = map_from_json(read_json(svg_map));
            Layout l = layout_from_json(read_json(svg_layout));
            std::optional<Cycle> c;
            if (!svg_cycle.empty()) c = cycle_from_json(read_json(svg_cycle));
            std::string doc = render_svg(m, l, c ? &*c : nullptr);
            if (!svg_out.empty()) {
                write_text(svg_out, doc);
                if (as_json) out << json{{"out", svg_out}, {"bytes", doc.size()}}.dump() << "\n";
            } else if (as_json) {
                out << json{{"svg", doc}}.dump() << "\n";
            } else {
                out << doc;
            }
            return kOk;
        }
        if (*swp) {
            sw.oracle_budget = oracle_budget_from_env();
            for (auto& name : sw.types) {
                if (name.empty() || name.front() != '[') name = "[" + name;
                if (name.find(']') == std::string::npos) name += "]";
            }
            SweepReport rep = run_sweep(sw);
            if (as_json) {
                out << to_json(rep).dump(2) << "\n";
            } else {
                for (const auto& r : rep.rows) out << sweep_line(r) << "\n";
                out << "instances=" << rep.rows.size() << " passed=" << rep.passed << " failed=" << rep.failed << "\n";
            }
            if (!rep.all_pass()) {
                for (const auto& r : rep.rows) {
                    if (!r.pass()) {
                        err << "first failure: " << sweep_line(r) << "\n";
                        break;
                    }
                }
                return kVerifyFailed;
            }
            return kOk;
        }
    } catch (const AdmissibilityError& e) {
        err << "rejected: " << to_string(e.detail().clause) << ": " << e.detail().reason << "\n";
        return kRejected;
    } catch (const MapException& e) {
        err << "invalid map: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const MismatchedInputs& e) {
        err << "mismatched inputs: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kRejected;
    } catch (const PatternFailure& e) {
        err << "defect: " << e.what() << "\n";
        return kDefect;
    } catch (const GluingError& e) {
        err << "defect: " << e.what() << "\n";
        return kDefect;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDefect;
    }
    return kOk;
}

}  // namespace dsem::cli
