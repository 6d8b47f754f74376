#include "kwalls/serialize.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace kwalls::serialize {

namespace {

json fraction(const Rational& x) { return to_fraction_string(x); }

Rational fraction_from(const json& j) { return parse_rational(j.get<std::string>()); }

ChargeKind charge_from(const json& j) {
    const auto name = j.get<std::string>();
    if (name == "naive") {
        return ChargeKind::Naive;
    }
    if (name == "twisted") {
        return ChargeKind::Twisted;
    }
    throw std::invalid_argument("unknown charge kind '" + name + "'");
}

// Decimal t for a t^2 annotation; empty when t^2 <= 0.
json t_approx(const Rational& t2, int digits) {
    if (t2 <= 0) {
        return nullptr;
    }
    return sqrt_decimal(t2, digits);
}

json header(const char* command, const SurfaceData& surf, ChargeKind kind) {
    return {{"command", command}, {"surface", surface_json(surf)}, {"charge", to_string(kind)}};
}

json flop_json(const FlopRecord& rec, int digits) {
    return {{"d", rec.d},
            {"t2", fraction(rec.t_squared)},
            {"t_approx", t_approx(rec.t_squared, digits)},
            {"ambient_dim", rec.ambient_dim},
            {"base_dim", rec.base_dim},
            {"fiber_dim", rec.fiber_dim},
            {"locus_dim", rec.locus_dim},
            {"codim", rec.codim},
            {"mukai_flop", rec.mukai_flop},
            {"divisorial", rec.divisorial}};
}

std::string vec_text(const json& v) {
    std::ostringstream os;
    os << '(' << v.at(0).get<std::int64_t>() << ',' << v.at(1).get<std::int64_t>() << ','
       << v.at(2).get<std::int64_t>() << ')';
    return os.str();
}

std::string surface_text(const json& s) {
    std::ostringstream os;
    if (s.at("kind") == "k3") {
        os << "K3 surface, genus " << s.at("genus").get<int>();
    } else {
        os << "abelian surface, polarization (1," << s.at("polarization").get<int>() << ")";
    }
    os << ", H^2 = " << s.at("h_squared").get<int>() << ", chi(O_S) = "
       << s.at("chi_structure_sheaf").get<int>();
    return os.str();
}

std::string label_text(const json& w) {
    const auto label = w.at("label").get<std::string>();
    if (label == "rank-one") {
        return "d=" + std::to_string(w.at("d").get<std::int64_t>());
    }
    if (label == "higher-rank") {
        return "rank=" + std::to_string(w.at("rank").get<std::int64_t>());
    }
    return vec_text(w.at("v")) + "|" + vec_text(w.at("w"));
}

std::string opt_text(const json& j) { return j.is_null() ? "-" : j.get<std::string>(); }

std::string bool_text(const json& j) { return j.get<bool>() ? "yes" : "no"; }

void render_walls(const json& doc, std::ostream& os) {
    os << "floor t^2 = " << doc.at("floor_t2").get<std::string>() << "\n\n";
    os << std::left << std::setw(12) << "wall" << std::setw(12) << "t^2" << "t\n";
    for (const auto& w : doc.at("walls")) {
        os << std::setw(12) << label_text(w) << std::setw(12) << w.at("t2").get<std::string>()
           << opt_text(w.at("t_approx")) << '\n';
    }
    if (!doc.at("boundary_walls").empty()) {
        os << "\non the floor:";
        for (const auto& w : doc.at("boundary_walls")) {
            os << ' ' << label_text(w) << " (" << w.at("t2").get<std::string>() << ')';
        }
        os << '\n';
    }
    os << "\nchambers:\n";
    for (const auto& c : doc.at("chambers")) {
        os << "  (" << c.at("lower").get<std::string>() << ", "
           << (c.at("upper").is_null() ? std::string("inf") : c.at("upper").get<std::string>())
           << ")  sample t^2 = " << c.at("sample_t2").get<std::string>() << '\n';
    }
}

void render_flops(const json& doc, std::ostream& os) {
    os << std::left << std::setw(4) << "d" << std::setw(10) << "t^2" << std::setw(9) << "ambient"
       << std::setw(6) << "base" << std::setw(7) << "fiber" << std::setw(7) << "locus"
       << std::setw(7) << "codim" << std::setw(7) << "mukai" << "divisor\n";
    for (const auto& f : doc.at("flops")) {
        os << std::setw(4) << f.at("d").get<std::int64_t>() << std::setw(10)
           << f.at("t2").get<std::string>() << std::setw(9) << f.at("ambient_dim").get<std::int64_t>()
           << std::setw(6) << f.at("base_dim").get<std::int64_t>() << std::setw(7)
           << f.at("fiber_dim").get<std::int64_t>() << std::setw(7)
           << f.at("locus_dim").get<std::int64_t>() << std::setw(7) << f.at("codim").get<std::int64_t>()
           << std::setw(7) << bool_text(f.at("mukai_flop")) << bool_text(f.at("divisorial")) << '\n';
    }
    os << "\nflop count = " << doc.at("flop_count").get<std::int64_t>();
    if (!doc.at("closed_form").is_null()) {
        os << " (closed form " << doc.at("closed_form").get<std::int64_t>() << ", "
           << (doc.at("closed_form_agrees").get<bool>() ? "agrees" : "differs") << ")";
    }
    os << '\n';
}

}  // namespace

json surface_json(const SurfaceData& surf) {
    json j{{"kind", to_string(surf.kind)},
           {"h_squared", surf.h_squared},
           {"chi_structure_sheaf", surf.chi_structure_sheaf}};
    j[surf.is_k3() ? "genus" : "polarization"] = surf.genus_or_polarization;
    return j;
}

SurfaceData surface_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "k3") {
        return make_surface(SurfaceKind::K3, j.at("genus").get<int>());
    }
    if (kind == "abelian") {
        return make_surface(SurfaceKind::Abelian, j.at("polarization").get<int>());
    }
    throw std::invalid_argument("unknown surface kind '" + kind + "'");
}

json vector_json(const CharVector& v) { return json::array({v.r, v.c, v.s}); }

CharVector vector_from_json(const json& j) {
    return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>(), j.at(2).get<std::int64_t>()};
}

json wall_json(const Wall& wall, int digits) {
    json j;
    std::visit(
        [&j](const auto& l) {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, RankOneLabel>) {
                j["label"] = "rank-one";
                j["d"] = l.d;
            } else if constexpr (std::is_same_v<L, HigherRankLabel>) {
                j["label"] = "higher-rank";
                j["rank"] = l.rank;
            } else {
                j["label"] = "pairwise";
                j["v"] = vector_json(l.v);
                j["w"] = vector_json(l.w);
            }
        },
        wall.label);
    j["t2"] = fraction(wall.t_squared);
    j["t_approx"] = t_approx(wall.t_squared, digits);
    j["classes"] = json::array();
    for (const auto& v : wall.colliding_classes) {
        j["classes"].push_back(vector_json(v));
    }
    return j;
}

Wall wall_from_json(const json& j) {
    Wall wall{fraction_from(j.at("t2")), RankOneLabel{0}, {}};
    const auto label = j.at("label").get<std::string>();
    if (label == "rank-one") {
        wall.label = RankOneLabel{j.at("d").get<std::int64_t>()};
    } else if (label == "higher-rank") {
        wall.label = HigherRankLabel{j.at("rank").get<std::int64_t>()};
    } else if (label == "pairwise") {
        wall.label = PairwiseLabel{vector_from_json(j.at("v")), vector_from_json(j.at("w"))};
    } else {
        throw std::invalid_argument("unknown wall label '" + label + "'");
    }
    for (const auto& v : j.at("classes")) {
        wall.colliding_classes.push_back(vector_from_json(v));
    }
    return wall;
}

json report_json(const ChamberReport& report, int digits) {
    json doc = header("walls", report.surface, report.kind);
    doc["digits"] = digits;
    doc["floor_t2"] = fraction(report.floor);
    doc["walls"] = json::array();
    for (const auto& w : report.walls) {
        doc["walls"].push_back(wall_json(w, digits));
    }
    doc["boundary_walls"] = json::array();
    for (const auto& w : report.boundary_walls) {
        doc["boundary_walls"].push_back(wall_json(w, digits));
    }
    doc["chambers"] = json::array();
    for (const auto& c : report.chambers) {
        doc["chambers"].push_back({{"lower", fraction(c.lower)},
                                   {"upper", c.upper ? fraction(*c.upper) : json(nullptr)},
                                   {"sample_t2", fraction(c.sample_t_squared)}});
    }
    return doc;
}

ChamberReport report_from_json(const json& j) {
    ChamberReport report{surface_from_json(j.at("surface")), charge_from(j.at("charge")),
                         fraction_from(j.at("floor_t2")), {}, {}, {}};
    for (const auto& w : j.at("walls")) {
        report.walls.push_back(wall_from_json(w));
    }
    for (const auto& w : j.value("boundary_walls", json::array())) {
        report.boundary_walls.push_back(wall_from_json(w));
    }
    for (const auto& c : j.at("chambers")) {
        std::optional<Rational> upper;
        if (!c.at("upper").is_null()) {
            upper = fraction_from(c.at("upper"));
        }
        report.chambers.push_back({fraction_from(c.at("lower")), upper, fraction_from(c.at("sample_t2"))});
    }
    return report;
}

json surface_info_json(const SurfaceSummary& s, int digits) {
    json doc = header("surface-info", s.surface, s.kind);
    doc["digits"] = digits;
    doc["slope_function_floor_t2"] = fraction(s.slope_function_floor);
    doc["higher_rank_floor_t2"] = fraction(s.higher_rank_floor);
    doc["floor_t2"] = fraction(s.floor);
    doc["floor_t_approx"] = t_approx(s.floor, digits);
    doc["target"] = vector_json(s.target);
    doc["moduli_dimension"] = s.moduli_dimension;
    doc["vanishing_max_length"] = s.vanishing_max_length;
    doc["very_ample"] = s.very_ample;
    doc["flop_count"] = s.flops.enumerated;
    doc["flop_count_closed_form"] = s.flops.closed_form ? json(*s.flops.closed_form) : json(nullptr);
    if (s.stable_pairs) {
        doc["stable_pairs"] = {{"projective_dim", s.stable_pairs->projective_dim},
                               {"chain_length", s.stable_pairs->chain_length}};
    } else {
        doc["stable_pairs"] = nullptr;
    }
    return doc;
}

json flops_json(const SurfaceData& surf, ChargeKind kind, const std::vector<FlopRecord>& flops,
                const FlopCount& count, int digits) {
    json doc = header("flops", surf, kind);
    doc["digits"] = digits;
    doc["flops"] = json::array();
    for (const auto& f : flops) {
        doc["flops"].push_back(flop_json(f, digits));
    }
    doc["flop_count"] = count.enumerated;
    doc["closed_form"] = count.closed_form ? json(*count.closed_form) : json(nullptr);
    doc["closed_form_agrees"] = count.closed_form ? json(count.agrees()) : json(nullptr);
    return doc;
}

json vanishing_json(const SurfaceData& surf, ChargeKind kind, const Rational& length_bound,
                    std::int64_t max_length, bool very_ample) {
    json doc = header("vanishing", surf, kind);
    doc["length_bound"] = fraction(length_bound);
    doc["max_length"] = max_length;
    doc["very_ample"] = very_ample;
    return doc;
}

json destabilizers_json(const SurfaceData& surf, const ChargeParams& params, std::int64_t rank_cap,
                        const CharVector& target, const std::vector<CharVector>& candidates,
                        int digits) {
    json doc = header("destabilizers", surf, params.kind);
    doc["digits"] = digits;
    doc["t2"] = fraction(params.t_squared);
    doc["t_approx"] = t_approx(params.t_squared, digits);
    doc["rank_cap"] = rank_cap;
    doc["target"] = vector_json(target);
    doc["candidates"] = json::array();
    for (const auto& k : candidates) {
        json entry{{"class", vector_json(k)}, {"rank", k.r}};
        // Rank-one quotients are I_Y(H) with len(Y) = H^2/2 - s.
        entry["ideal_length"] = k.r == 1 ? json(surf.h_squared / 2 - k.s) : json(nullptr);
        doc["candidates"].push_back(std::move(entry));
    }
    return doc;
}

json chi_json(const SurfaceData& surf, const CharVector& v, const CharVector& w, std::int64_t chi) {
    json doc{{"command", "chi"}, {"surface", surface_json(surf)}};
    doc["v"] = vector_json(v);
    doc["w"] = vector_json(w);
    doc["chi"] = chi;
    return doc;
}

json bounds_json(const SurfaceData& surf, ChargeKind kind, std::int64_t r, std::int64_t c,
                 const Rational& bg, std::int64_t sharp) {
    json doc = header("bounds", surf, kind);
    doc["rank"] = r;
    doc["c"] = c;
    doc["bg_bound"] = fraction(bg);
    doc["sharp_bound"] = fraction(Rational(sharp));
    return doc;
}

json oracle_json(const ChamberReport& report, std::int64_t rank_cap, std::int64_t margin,
                 const std::vector<Rational>& oracle) {
    json doc = header("oracle", report.surface, report.kind);
    doc["rank_cap"] = rank_cap;
    doc["margin"] = margin;
    doc["floor_t2"] = fraction(report.floor);
    doc["oracle_walls"] = json::array();
    std::vector<Rational> above;
    for (const auto& t2 : oracle) {
        doc["oracle_walls"].push_back(fraction(t2));
        if (t2 > report.floor) {
            above.push_back(t2);
        }
    }
    doc["report_walls"] = json::array();
    std::vector<Rational> reported;
    for (const auto& w : report.walls) {
        doc["report_walls"].push_back(fraction(w.t_squared));
        reported.push_back(w.t_squared);
    }
    doc["agrees_above_floor"] = above == reported;
    return doc;
}

std::string render_text(const json& doc) {
    std::ostringstream os;
    const auto command = doc.at("command").get<std::string>();
    os << surface_text(doc.at("surface"));
    if (doc.contains("charge")) {
        os << "; " << doc.at("charge").get<std::string>() << " charge";
    }
    os << "\n\n";

    if (command == "walls") {
        render_walls(doc, os);
    } else if (command == "flops") {
        render_flops(doc, os);
    } else if (command == "surface-info") {
        os << "target invariants      " << vec_text(doc.at("target")) << '\n'
           << "moduli dimension       " << doc.at("moduli_dimension").get<std::int64_t>() << '\n'
           << "slope-function floor   " << doc.at("slope_function_floor_t2").get<std::string>() << '\n'
           << "higher-rank floor      " << doc.at("higher_rank_floor_t2").get<std::string>() << '\n'
           << "validity floor (t^2)   " << doc.at("floor_t2").get<std::string>() << '\n'
           << "flop count             " << doc.at("flop_count").get<std::int64_t>() << '\n'
           << "vanishing max length   " << doc.at("vanishing_max_length").get<std::int64_t>() << '\n'
           << "H very ample           " << bool_text(doc.at("very_ample")) << '\n';
        if (!doc.at("stable_pairs").is_null()) {
            os << "stable pairs ambient   P^"
               << doc.at("stable_pairs").at("projective_dim").get<std::int64_t>() << ", "
               << doc.at("stable_pairs").at("chain_length").get<std::int64_t>()
               << " further flops\n";
        }
    } else if (command == "vanishing") {
        os << "vanishing holds for length d < " << doc.at("length_bound").get<std::string>() << '\n'
           << "max length             " << doc.at("max_length").get<std::int64_t>() << '\n'
           << "H very ample           " << bool_text(doc.at("very_ample")) << '\n';
    } else if (command == "destabilizers") {
        os << "t^2 = " << doc.at("t2").get<std::string>() << ", target "
           << vec_text(doc.at("target")) << ", rank cap " << doc.at("rank_cap").get<std::int64_t>()
           << "\n\n";
        if (doc.at("candidates").empty()) {
            os << "no destabilizing classes\n";
        }
        for (const auto& k : doc.at("candidates")) {
            os << "  " << vec_text(k.at("class"));
            if (!k.at("ideal_length").is_null()) {
                os << "  I_Y(H), len(Y) = " << k.at("ideal_length").get<std::int64_t>();
            }
            os << '\n';
        }
    } else if (command == "chi") {
        os << "chi(" << vec_text(doc.at("v")) << ", " << vec_text(doc.at("w"))
           << ") = " << doc.at("chi").get<std::int64_t>() << '\n';
    } else if (command == "bounds") {
        os << "rank " << doc.at("rank").get<std::int64_t>() << ", c_1 = "
           << doc.at("c").get<std::int64_t>() << "H\n"
           << "Bogomolov-Gieseker ch_2 <= " << doc.at("bg_bound").get<std::string>() << '\n'
           << "sharp integral ch_2   <= " << doc.at("sharp_bound").get<std::string>() << '\n';
    } else if (command == "oracle") {
        os << "rank cap " << doc.at("rank_cap").get<std::int64_t>() << ", margin "
           << doc.at("margin").get<std::int64_t>() << ", floor " << doc.at("floor_t2").get<std::string>()
           << "\noracle walls:";
        for (const auto& t : doc.at("oracle_walls")) {
            os << ' ' << t.get<std::string>();
        }
        os << "\nreport walls:";
        for (const auto& t : doc.at("report_walls")) {
            os << ' ' << t.get<std::string>();
        }
        os << "\nagree above floor: " << bool_text(doc.at("agrees_above_floor")) << '\n';
    } else {
        throw std::invalid_argument("no text rendering for command '" + command + "'");
    }
    return os.str();
}

std::string svg_document(const ChamberReport& report) {
    constexpr double kLeft = 40.0;
    constexpr double kWidth = 720.0;
    constexpr double kAxisY = 100.0;

    Rational axis_max = make_rational(1, 2);
    if (!report.walls.empty() && report.walls.front().t_squared >= axis_max) {
        axis_max = make_rational(floor_to_int(report.walls.front().t_squared * 4) + 1, 4);
    }
    auto x_of = [&](const Rational& t2) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(2) << kLeft + kWidth * to_double(t2 / axis_max);
        return os.str();
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"160\" "
          "viewBox=\"0 0 800 160\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"160\" fill=\"white\"/>\n";
    os << "<text x=\"400\" y=\"20\" font-family=\"sans-serif\" font-size=\"13\" "
          "text-anchor=\"middle\">"
       << to_string(report.surface.kind) << ' '
       << (report.surface.is_k3() ? "g=" : "D=") << report.surface.genus_or_polarization << ", "
       << to_string(report.kind) << " charge</text>\n";

    const Rational shade_to = std::min(std::max(Rational(0), report.floor), axis_max);
    os << "<rect x=\"" << x_of(Rational(0)) << "\" y=\"84\" width=\""
       << std::fixed << std::setprecision(2) << kWidth * to_double(shade_to / axis_max)
       << "\" height=\"32\" fill=\"#cccccc\"/>\n";
    os << "<line x1=\"" << x_of(Rational(0)) << "\" y1=\"" << kAxisY << "\" x2=\"" << x_of(axis_max)
       << "\" y2=\"" << kAxisY << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    os << "<text x=\"" << x_of(Rational(0)) << "\" y=\"132\" font-family=\"sans-serif\" "
          "font-size=\"11\" text-anchor=\"middle\">0</text>\n";
    os << "<text x=\"" << x_of(axis_max) << "\" y=\"132\" font-family=\"sans-serif\" "
          "font-size=\"11\" text-anchor=\"middle\">"
       << to_fraction_string(axis_max) << "</text>\n";
    os << "<text x=\"400\" y=\"150\" font-family=\"sans-serif\" font-size=\"11\" "
          "text-anchor=\"middle\">t^2 (floor "
       << to_fraction_string(report.floor) << ")</text>\n";

    for (std::size_t i = 0; i < report.walls.size(); ++i) {
        const Wall& wall = report.walls[i];
        const std::string x = x_of(wall.t_squared);
        const int label_y = i % 2 == 0 ? 76 : 60;
        os << "<line x1=\"" << x << "\" y1=\"88\" x2=\"" << x
           << "\" y2=\"112\" stroke=\"#b22222\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << x << "\" y=\"" << label_y
           << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
           << describe(wall.label) << " (" << to_fraction_string(wall.t_squared) << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void render_svg(const ChamberReport& report, const std::string& path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    file << svg_document(report);
    if (!file.flush()) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

}  // namespace kwalls::serialize
