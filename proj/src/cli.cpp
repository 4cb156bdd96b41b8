#include "toric/cli.hpp"

#include "toric/interchange.hpp"
#include "toric/surface.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace toric {

namespace {

using io::Json;
using io::to_json;

struct Options {
    std::string format = "json";
    std::string input;
    long bound = 0;
    std::string cone;
    std::optional<long> d, e;
    std::string action;
};

Json read_document(const Options& opt, std::istream& in) {
    std::string text;
    if (opt.input.empty() || opt.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream file(opt.input);
        if (!file) throw ParseError("cannot open input file " + opt.input);
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    return io::parse_json(text);
}

// A monoid document either is the whole input or sits under "monoid".
io::MonoidDocument monoid_from(const Json& doc) {
    if (doc.is_object() && doc.contains("monoid")) return io::parse_monoid_document(doc["monoid"], "/monoid");
    return io::parse_monoid_document(doc);
}

Json element_list(const std::vector<GroupElement>& v) {
    Json a = Json::array();
    for (const auto& m : v) a.push_back(to_json(m));
    return a;
}

Json vector_list(const std::vector<IntVector>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

// Roots grouped by distinguished ray, in ray order.
Json roots_by_ray(const std::vector<DemazureRoot>& roots, const std::vector<DualVector>& rays) {
    Json a = Json::array();
    for (const auto& rho : rays) {
        Json list = Json::array();
        for (const auto& r : roots)
            if (r.distinguished_ray() == rho) list.push_back(to_json(r.alpha()));
        a.push_back(Json{{"ray", to_json(rho)}, {"roots", list}});
    }
    return a;
}

void note_multi_ray_roots(const std::vector<DemazureRoot>& roots, const std::string& label, Json& warnings) {
    for (const auto& r : roots) {
        if (r.satisfying_rays().size() < 2) continue;
        std::string msg = label + " root " + to_string(r.alpha().free) + " satisfies the definition for rays";
        for (const auto& rho : r.satisfying_rays()) msg += " " + to_string(rho.coords);
        warnings.push_back(msg);
    }
}

Json cmd_info(const io::MonoidDocument& doc, Json& warnings) {
    const AffineMonoid& s = *doc.monoid;
    Json units = Json::array();
    for (const auto& t : s.unit_subgroup()) units.push_back(to_json(s.group().element(IntVector(s.group().rank()), t)));
    Json r{{"group", s.group().describe()},
           {"generators", element_list(s.generators())},
           {"pointed", s.is_pointed()},
           {"full_dimensional", s.is_full_dimensional()},
           {"dual_rays", Json::array()},
           {"torsion_units", units}};
    for (const auto& rho : s.dual_rays()) r["dual_rays"].push_back(to_json(rho));
    if (s.is_pointed() && s.is_full_dimensional()) {
        r["saturation_generators"] = element_list(saturation_generators(s));
    } else {
        warnings.push_back("saturation generators need a pointed, full-dimensional monoid; omitted");
    }
    return r;
}

Json cmd_roots(const io::MonoidDocument& doc, long bound, Json& warnings) {
    const AffineMonoid& s = *doc.monoid;
    const InclusionReport rep = check_inclusion_in_saturation_roots(s, bound);
    const AffineMonoid sat = saturation(s);
    note_multi_ray_roots(rep.monoid_roots, "monoid", warnings);
    Json violations = Json::array();
    for (const auto& v : rep.violations) violations.push_back(to_json(v.alpha()));
    return Json{{"bound", bound},
                {"roots", roots_by_ray(rep.monoid_roots, s.dual_rays())},
                {"root_count", rep.monoid_roots.size()},
                {"saturation_roots", roots_by_ray(rep.saturation_roots, sat.dual_rays())},
                {"saturation_root_count", rep.saturation_roots.size()},
                {"inclusion", Json{{"holds", rep.holds()}, {"violations", violations}}}};
}

Json cmd_hilbert(const Cone& c) {
    return Json{{"cone", to_json(c)}, {"hilbert_basis", vector_list(hilbert_basis(c))}};
}

Json certificate_json(const HomogeneousDerivation& p) {
    const LndCertificate cert = is_locally_nilpotent(p);
    Json j{{"piece", to_json(p)}, {"locally_nilpotent", cert.locally_nilpotent}};
    if (cert.locally_nilpotent) {
        j["lambda"] = to_json(cert.lambda);
        j["ray"] = to_json(*cert.ray);
        j["root"] = to_json(cert.root->alpha());
        j["kernel_face"] = to_json(*kernel_face(p).defining_ray);
    } else {
        j["failed_clause"] = cert.failed_clause;
    }
    return j;
}

Json cmd_derivation(const Json& input, const io::MonoidDocument& doc, const std::string& action, Json& warnings) {
    if (!input.contains("derivation")) throw ParseError("/: missing field \"derivation\"");
    const Derivation d = io::parse_derivation(input["derivation"], doc.monoid, "/derivation");
    const AbelianGroup& group = doc.monoid->group();
    auto operand = [&]() {
        if (!input.contains("operand")) throw ParseError("/: missing field \"operand\" for " + action);
        return io::parse_polynomial(input["operand"], group, "/operand");
    };

    Json r{{"action", action}, {"pieces", to_json(d)}};
    if (action == "apply") {
        r["result"] = to_json(apply(d, operand()));
    } else if (action == "exp") {
        if (d.pieces().size() != 1) {
            throw DomainError(ErrorKind::NotLocallyNilpotent, "exp needs a single homogeneous piece");
        }
        r["result"] = to_json(exp_action(d.pieces().front(), operand()));
    } else if (action == "decompose") {
        Json images = Json::array();
        for (const auto& [g, img] : images_on_generators(d)) {
            images.push_back(Json{{"generator", to_json(g)}, {"image", to_json(img)}});
        }
        r["images"] = images;
    } else {
        Json certs = Json::array();
        for (const auto& p : d.pieces()) certs.push_back(certificate_json(p));
        r["certificates"] = certs;
        if (d.pieces().size() > 1) {
            try {
                Json vertices = Json::array();
                for (const auto& p : extract_lnd_pieces(d)) vertices.push_back(to_json(p));
                r["vertex_pieces"] = vertices;
            } catch (const DomainError& e) {
                if (e.kind() != ErrorKind::TotalNotNilpotent) throw;
                r["vertex_pieces"] = nullptr;
                warnings.push_back(std::string("total derivation failed the nilpotency spot check: ") + e.what());
            }
        }
    }
    return r;
}

Json cmd_surface(const Cone& sigma, long bound) {
    const RootEqualityReport rep = verify_root_equality(sigma, bound);
    const AutGeneratorsReport aut = aut_generators_report(sigma, bound);
    std::vector<DualVector> rays;
    for (const auto& rho : sigma.rays()) rays.push_back(DualVector{rho});
    const AffineMonoid s(AbelianGroup::free_group(2), rep.deletion_generators);

    Json lost = Json::array();
    for (const auto& r : rep.lost_roots) lost.push_back(to_json(r.alpha()));
    Json factor{{"present", rep.line_factor.present}, {"box_search_found", rep.line_factor.box_search_found}};
    if (rep.line_factor.witness) {
        factor["witness"] = to_json(*rep.line_factor.witness);
        factor["ray"] = to_json(*rep.line_factor.ray);
    }
    Json r{{"bound", bound},
           {"cone", to_json(sigma)},
           {"normal_form", Json{{"d", to_json(rep.normal_form.d)}, {"e", to_json(rep.normal_form.e)}}},
           {"hilbert_basis", vector_list(rep.hilbert_basis)},
           {"deletion_generators", element_list(rep.deletion_generators)},
           {"cone_roots", roots_by_ray(rep.cone_roots, rays)},
           {"monoid_roots", roots_by_ray(rep.monoid_roots, s.dual_rays())},
           {"verdict", rep.equal ? "EQUAL" : "NOT_EQUAL"},
           {"affine_line_factor", factor},
           {"lost_roots", lost}};
    if (rep.witness_root) {
        r["witness"] = Json{{"root", to_json(*rep.witness_root)}, {"generator", to_json(*rep.witness_generator)}};
    }

    Json aut_rays = Json::array();
    for (const auto& ra : aut.rays) {
        Json actions = Json::array();
        for (const auto& act : ra.actions) {
            Json com = Json::array();
            for (const auto& [h, flow] : act.comorphism) com.push_back(Json{{"generator", to_json(h)}, {"image", to_json(flow)}});
            actions.push_back(Json{{"root", to_json(act.root.alpha())}, {"comorphism", com}});
        }
        aut_rays.push_back(Json{{"ray", to_json(ra.ray)}, {"actions", actions}});
    }
    r["aut_generators"] = Json{{"torus_rank", aut.torus_rank},
                               {"coordinate_generators", element_list(aut.coordinate_generators)},
                               {"rays", aut_rays}};
    return r;
}

// Compact rendering used by the table format.
std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_object() && j.size() == 2 && j.contains("free") && j.contains("torsion")) {
        std::string s = "(";
        for (std::size_t i = 0; i < j["free"].size(); ++i) s += (i ? "," : "") + scalar_text(j["free"][i]);
        if (!j["torsion"].empty()) {
            s += " |";
            for (const auto& t : j["torsion"]) s += " " + scalar_text(t);
        }
        return s + ")";
    }
    if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
        std::string s = "(";
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + scalar_text(j[i]);
        return s + ")";
    }
    return j.dump();
}

bool is_compact(const Json& j) {
    if (j.is_primitive()) return true;
    if (j.is_object()) return j.size() == 2 && j.contains("free") && j.contains("torsion");
    return std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

void render_table(const Json& j, std::ostream& out, const std::string& indent) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (is_compact(v)) {
                out << indent << k << ": " << scalar_text(v) << "\n";
            } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_compact)) {
                out << indent << k << ":";
                if (v.empty()) out << " (none)";
                for (const auto& x : v) out << " " << scalar_text(x);
                out << "\n";
            } else {
                out << indent << k << ":\n";
                render_table(v, out, indent + "  ");
            }
        }
    } else if (j.is_array()) {
        for (const auto& x : j) {
            if (is_compact(x)) {
                out << indent << "- " << scalar_text(x) << "\n";
            } else {
                out << indent << "-\n";
                render_table(x, out, indent + "  ");
            }
        }
    } else {
        out << indent << scalar_text(j) << "\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Demazure roots of affine monoids and toric surfaces", "toric-roots"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--input", opt.input, "Read the input document from PATH instead of stdin");

    auto* info = app.add_subcommand("info", "Dual rays, units, pointedness, saturation generators");
    auto* roots = app.add_subcommand("roots", "Roots of S and of its saturation within a box");
    roots->add_option("--bound", opt.bound, "Box half-width")->required()->check(CLI::PositiveNumber);
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of a pointed cone");
    hilbert->add_option("--cone", opt.cone, "Rays, e.g. \"1,0;1,2\"");
    auto* derivation = app.add_subcommand("derivation", "Apply, exponentiate, decompose or classify a derivation");
    derivation->add_option("action", opt.action, "apply | exp | decompose | lnd-check")
        ->required()
        ->check(CLI::IsMember({"apply", "exp", "decompose", "lnd-check"}));
    auto* surface = app.add_subcommand("surface", "Deletion monoid and root-set comparison for a toric surface");
    auto* dopt = surface->add_option("--d", opt.d, "Normal form parameter d");
    auto* eopt = surface->add_option("--e", opt.e, "Normal form parameter e");
    dopt->needs(eopt);
    eopt->needs(dopt);
    surface->add_option("--cone", opt.cone, "Rays, e.g. \"0,1;2,-1\"")->excludes(dopt)->excludes(eopt);
    surface->add_option("--bound", opt.bound, "Box half-width")->required()->check(CLI::PositiveNumber);

    std::vector<std::string> argv_store{"toric-roots"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        Json report = Json::object();
        Json warnings = Json::array();
        Json arguments = Json::object();
        Json input;
        Json results;

        if (info->parsed()) {
            report["command"] = "info";
            auto doc = monoid_from(read_document(opt, in));
            input = to_json(doc);
            results = cmd_info(doc, warnings);
        } else if (roots->parsed()) {
            report["command"] = "roots";
            arguments["bound"] = opt.bound;
            auto doc = monoid_from(read_document(opt, in));
            input = to_json(doc);
            results = cmd_roots(doc, opt.bound, warnings);
        } else if (hilbert->parsed()) {
            report["command"] = "hilbert";
            Cone c = opt.cone.empty() ? [&] {
                Json doc = read_document(opt, in);
                return io::parse_cone(doc.is_object() && doc.contains("cone") ? doc["cone"] : doc, "/cone");
            }()
                                      : io::parse_cone_text(opt.cone);
            input = Json{{"cone", to_json(c)}};
            results = cmd_hilbert(c);
        } else if (derivation->parsed()) {
            report["command"] = "derivation";
            arguments["action"] = opt.action;
            Json doc = read_document(opt, in);
            auto monoid = monoid_from(doc);
            input = Json{{"monoid", to_json(monoid)}};
            if (doc.contains("derivation")) input["derivation"] = doc["derivation"];
            if (doc.contains("operand")) input["operand"] = doc["operand"];
            results = cmd_derivation(doc, monoid, opt.action, warnings);
        } else {
            report["command"] = "surface";
            arguments["bound"] = opt.bound;
            std::optional<Cone> sigma;
            if (opt.d) {
                arguments["d"] = *opt.d;
                arguments["e"] = *opt.e;
                sigma = normal_form_cone(Integer(*opt.d), Integer(*opt.e));
            } else if (!opt.cone.empty()) {
                sigma = io::parse_cone_text(opt.cone);
            } else {
                Json doc = read_document(opt, in);
                sigma = io::parse_cone(doc.is_object() && doc.contains("cone") ? doc["cone"] : doc, "/cone");
            }
            input = Json{{"cone", to_json(*sigma)}};
            results = cmd_surface(*sigma, opt.bound);
        }

        report["arguments"] = arguments;
        report["input"] = input;
        report["input_digest"] = io::digest(Json{{"arguments", arguments}, {"input", input}});
        report["results"] = results;
        report["warnings"] = warnings;

        if (opt.format == "json") {
            out << report.dump(2) << "\n";
        } else {
            render_table(report, out, "");
        }
        return 0;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "refused: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace toric
