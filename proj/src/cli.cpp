#include "kwalls/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kwalls/geography.hpp"
#include "kwalls/serialize.hpp"
#include "kwalls/walls.hpp"

namespace kwalls::cli {

namespace {

namespace ser = kwalls::serialize;

std::int64_t parse_component(const std::string& text, const std::string& whole) {
    try {
        const Rational value = parse_rational(text);
        if (denominator(value) != 1 || text.find('/') != std::string::npos) {
            throw std::invalid_argument("not an integer");
        }
        return floor_to_int(value);
    } catch (const std::exception&) {
        throw ParseError("malformed vector '" + whole + "': expected r,c,s integers");
    }
}

const Rational& require_t2(const Query& q) {
    if (!q.t_squared) {
        throw ParseError("command '" + q.command + "' needs --t2");
    }
    return *q.t_squared;
}

const CharVector& require_vector(const std::optional<CharVector>& v, const char* flag,
                                 const std::string& command) {
    if (!v) {
        throw ParseError("command '" + command + "' needs " + flag);
    }
    return *v;
}

ser::json build_document(const Query& q, const SurfaceData& surf, ChargeKind kind) {
    if (q.command == "surface-info") {
        ser::SurfaceSummary summary{surf,
                                    kind,
                                    slope_function_floor(surf, kind),
                                    higher_rank_floor(surf, kind),
                                    validity_floor(surf, kind),
                                    target_class(surf),
                                    moduli_dimension(target_class(surf), surf),
                                    vanishing_max_length(surf, kind),
                                    very_ample(surf, kind),
                                    flop_count(surf, kind),
                                    std::nullopt};
        if (surf.is_k3()) {
            summary.stable_pairs = stable_pairs_ambient(surf);
        }
        return ser::surface_info_json(summary, q.digits);
    }
    if (q.command == "walls") {
        return ser::report_json(chamber_decomposition(surf, kind), q.digits);
    }
    if (q.command == "flops") {
        return ser::flops_json(surf, kind, flop_sequence(surf, kind), flop_count(surf, kind), q.digits);
    }
    if (q.command == "vanishing") {
        return ser::vanishing_json(surf, kind, vanishing_length_bound(surf, kind),
                                   vanishing_max_length(surf, kind), very_ample(surf, kind));
    }
    if (q.command == "destabilizers") {
        const ChargeParams params(require_t2(q), kind);
        const CharVector target = q.v.value_or(target_class(surf));
        return ser::destabilizers_json(surf, params, q.rank_cap, target,
                                       destabilizer_candidates(target, params, surf, q.rank_cap),
                                       q.digits);
    }
    if (q.command == "chi") {
        const CharVector& v = require_vector(q.v, "--v", q.command);
        const CharVector& w = require_vector(q.w, "--w", q.command);
        return ser::chi_json(surf, v, w, euler_pairing(v, w, surf));
    }
    if (q.command == "bounds") {
        const CharVector& v = require_vector(q.v, "--v", q.command);
        return ser::bounds_json(surf, kind, v.r, v.c, bg_bound(v.r, v.c, surf),
                                sharp_bound(v.r, v.c, surf));
    }
    if (q.command == "oracle") {
        const CharVector target = q.v.value_or(target_class(surf));
        return ser::oracle_json(chamber_decomposition(surf, kind), q.rank_cap, q.margin,
                                oracle_walls(target, surf, kind, q.rank_cap, q.margin));
    }
    throw ParseError("unknown command '" + q.command + "'");
}

}  // namespace

ChargeKind Query::resolved_charge() const {
    if (charge) {
        return *charge;
    }
    return kind == SurfaceKind::K3 ? ChargeKind::Twisted : ChargeKind::Naive;
}

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names{"surface-info", "walls",  "flops", "vanishing",
                                                "destabilizers", "chi", "bounds", "oracle"};
    return names;
}

CharVector parse_vector(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        parts.push_back(part);
    }
    if (parts.size() != 3 || text.back() == ',') {
        throw ParseError("malformed vector '" + text + "': expected r,c,s integers");
    }
    return {parse_component(parts[0], text), parse_component(parts[1], text),
            parse_component(parts[2], text)};
}

Query parse_query(const std::vector<std::string>& args) {
    CLI::App app{"Wall-and-chamber structure of Bridgeland stability on K3 and abelian surfaces",
                 "kwalls"};
    app.set_config("--config", "", "flat 'flag = value' file; command-line flags take precedence");

    std::string command;
    std::string kind = "k3";
    std::optional<int> genus;
    std::optional<int> polarization;
    std::optional<std::string> charge;
    std::optional<std::string> t2;
    std::optional<std::string> v;
    std::optional<std::string> w;
    Query q;

    app.add_option("command", command, "command to run")
        ->required()
        ->check(CLI::IsMember(commands()));
    app.add_option("--kind", kind, "surface kind")->check(CLI::IsMember({"k3", "abelian"}));
    app.add_option("--genus", genus, "genus g of the K3 surface (H^2 = 2g - 2)");
    app.add_option("--polarization", polarization, "polarization D of the abelian surface (H^2 = 2D)");
    app.add_option("--charge", charge, "central charge: naive or twisted")
        ->check(CLI::IsMember({"naive", "twisted"}));
    app.add_option("--t2", t2, "t^2 as p/q");
    app.add_option("--v", v, "Chern vector r,c,s");
    app.add_option("--w", w, "Chern vector r,c,s");
    app.add_option("--rank-cap", q.rank_cap, "largest odd rank scanned")->capture_default_str();
    app.add_option("--margin", q.margin, "extra ch_2 steps scanned by the oracle")->capture_default_str();
    app.add_flag("--json", q.json, "emit a JSON document");
    app.add_option("--svg", q.svg_path, "also write the wall diagram to this SVG file");
    app.add_option("--digits", q.digits, "decimals in approximate annotations")
        ->check(CLI::Range(0, 30))
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    q.command = command;
    if (kind == "k3") {
        if (polarization || !genus) {
            throw ParseError("--kind k3 needs --genus (and no --polarization)");
        }
        q.kind = SurfaceKind::K3;
        q.parameter = *genus;
    } else {
        if (genus || !polarization) {
            throw ParseError("--kind abelian needs --polarization (and no --genus)");
        }
        q.kind = SurfaceKind::Abelian;
        q.parameter = *polarization;
    }
    if (charge) {
        q.charge = *charge == "naive" ? ChargeKind::Naive : ChargeKind::Twisted;
    }
    if (t2) {
        try {
            q.t_squared = parse_rational(*t2);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("--t2: ") + e.what());
        }
    }
    if (v) {
        q.v = parse_vector(*v);
    }
    if (w) {
        q.w = parse_vector(*w);
    }
    return q;
}

int run(const Query& query, std::ostream& out, std::ostream& err) {
    try {
        const SurfaceData surf = make_surface(query.kind, query.parameter);
        const ChargeKind kind = query.resolved_charge();
        const ser::json doc = build_document(query, surf, kind);
        if (query.svg_path) {
            ser::render_svg(chamber_decomposition(surf, kind), *query.svg_path);
        }
        if (query.json) {
            out << doc.dump(2) << '\n';
        } else {
            out << ser::render_text(doc);
        }
        return kExitOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Query query;
    try {
        query = parse_query(args);
    } catch (const CLI::CallForHelp&) {
        out << "usage: kwalls <command> --kind k3|abelian (--genus N | --polarization N) [options]\n"
               "commands:";
        for (const auto& c : commands()) {
            out << ' ' << c;
        }
        out << "\noptions: --charge naive|twisted --t2 p/q --v r,c,s --w r,c,s --rank-cap N "
               "--margin N --json --svg PATH --digits N --config PATH\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParseError;
    }
    return run(query, out, err);
}

}  // namespace kwalls::cli
