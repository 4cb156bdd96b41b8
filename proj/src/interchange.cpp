#include "toric/interchange.hpp"

#include <cstdio>
#include <limits>
#include <sstream>

namespace toric::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

const Json& array_at(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
}

std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }
std::string at(const std::string& where, const char* key) { return where + "/" + key; }

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
}

Integer parse_integer(const Json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
        return Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0) fail(where, "not a decimal integer");
        return x;
    }
    fail(where, "expected an integer");
}

Rational parse_rational(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(parse_integer(j, where));
    if (!j.is_string()) fail(where, "expected a rational \"p/q\"");
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    Integer num, den(1);
    if (num.set_str(s.substr(0, slash), 10) != 0) fail(where, "bad numerator in \"" + s + "\"");
    if (slash != std::string::npos && (den.set_str(s.substr(slash + 1), 10) != 0 || den == 0)) {
        fail(where, "bad denominator in \"" + s + "\"");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

IntVector parse_int_vector(const Json& j, const std::string& where, std::optional<std::size_t> length) {
    array_at(j, where);
    if (length && j.size() != *length) {
        fail(where, "expected " + std::to_string(*length) + " entries, got " + std::to_string(j.size()));
    }
    IntVector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_integer(j[i], at(where, i)));
    return v;
}

RatVector parse_rat_vector(const Json& j, const std::string& where, std::size_t length) {
    array_at(j, where);
    if (j.size() != length) fail(where, "expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
    RatVector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_rational(j[i], at(where, i)));
    return v;
}

Json to_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
    return Json(x.get_str());
}

Json to_json(const Rational& q) { return Json(to_string(q)); }

Json to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const RatVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const GroupElement& m) { return Json{{"free", to_json(m.free)}, {"torsion", to_json(m.torsion)}}; }

Json to_json(const DualVector& u) { return to_json(u.coords); }

Json to_json(const AlgebraElement& f) {
    Json a = Json::array();
    for (const auto& [m, c] : f.terms()) a.push_back(Json{{"exponent", to_json(m)}, {"coefficient", to_json(c)}});
    return a;
}

Json to_json(const FlowPolynomial& p) {
    Json a = Json::array();
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        if (p.coefficients()[i].is_zero()) continue;
        a.push_back(Json{{"power", i}, {"coefficient", to_json(p.coefficients()[i])}});
    }
    return a;
}

Json to_json(const HomogeneousDerivation& d) {
    return Json{{"degree", to_json(d.degree())}, {"character", to_json(d.character())}};
}

Json to_json(const Derivation& d) {
    Json a = Json::array();
    for (const auto& p : d.pieces()) a.push_back(to_json(p));
    return a;
}

Json to_json(const Cone& c) {
    Json rays = Json::array();
    for (const auto& r : c.rays()) rays.push_back(to_json(r));
    return Json{{"rank", c.rank()}, {"rays", rays}};
}

GroupElement parse_element(const Json& j, const AbelianGroup& group, const std::string& where) {
    if (j.is_array()) {
        if (group.has_torsion()) fail(where, "elements of a group with torsion need {\"free\", \"torsion\"}");
        return group.element(parse_int_vector(j, where, group.rank()));
    }
    IntVector free = parse_int_vector(field(j, "free", where), at(where, "free"), group.rank());
    IntVector torsion(group.torsion_count());
    if (j.contains("torsion")) torsion = parse_int_vector(j["torsion"], at(where, "torsion"), group.torsion_count());
    else if (group.has_torsion()) fail(where, "missing field \"torsion\"");
    return group.element(std::move(free), std::move(torsion));
}

MonoidDocument parse_monoid_document(const Json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected a monoid document");
    MonoidDocument doc;
    if (j.contains("name")) {
        if (!j["name"].is_string()) fail(at(where, "name"), "expected a string");
        doc.name = j["name"].get<std::string>();
    }
    const Json& gens = array_at(field(j, "generators", where), at(where, "generators"));
    const std::string gw = at(where, "generators");

    try {
        if (j.contains("presentation")) {
            const Json& p = j["presentation"];
            const std::string pw = at(where, "presentation");
            Integer n = parse_integer(field(p, "n", pw), at(pw, "n"));
            if (n < 1 || n > 64) fail(at(pw, "n"), "expected 1 <= n <= 64");
            const std::size_t dim = n.get_ui();
            std::vector<IntVector> relations;
            if (p.contains("relations")) {
                const Json& rel = array_at(p["relations"], at(pw, "relations"));
                for (std::size_t i = 0; i < rel.size(); ++i)
                    relations.push_back(parse_int_vector(rel[i], at(at(pw, "relations"), i), dim));
            }
            Presentation pres(dim, relations);
            std::vector<GroupElement> elements;
            for (std::size_t i = 0; i < gens.size(); ++i)
                elements.push_back(pres.to_canonical(parse_int_vector(gens[i], at(gw, i), dim)));
            doc.monoid = std::make_shared<const AffineMonoid>(pres.group(), std::move(elements));
            return doc;
        }

        const Json& g = field(j, "group", where);
        const std::string grw = at(where, "group");
        Integer rank = parse_integer(field(g, "rank", grw), at(grw, "rank"));
        if (rank < 0 || rank > 64) fail(at(grw, "rank"), "expected 0 <= rank <= 64");
        IntVector torsion;
        if (g.contains("torsion")) torsion = parse_int_vector(g["torsion"], at(grw, "torsion"));
        AbelianGroup group(rank.get_ui(), torsion);
        std::vector<GroupElement> elements;
        for (std::size_t i = 0; i < gens.size(); ++i) elements.push_back(parse_element(gens[i], group, at(gw, i)));
        doc.monoid = std::make_shared<const AffineMonoid>(group, std::move(elements));
    } catch (const DomainError& e) {
        // Invalid groups and empty or zero generator lists are document errors.
        if (e.kind() == ErrorKind::InvalidGroup || e.kind() == ErrorKind::EmptyGenerators ||
            e.kind() == ErrorKind::ZeroGenerator || e.kind() == ErrorKind::LengthMismatch) {
            fail(where, e.what());
        }
        throw;
    }
    return doc;
}

Json to_json(const MonoidDocument& doc) {
    Json j = Json::object();
    if (doc.name) j["name"] = *doc.name;
    const AbelianGroup& g = doc.monoid->group();
    j["group"] = Json{{"rank", g.rank()}, {"torsion", to_json(g.torsion_orders())}};
    Json gens = Json::array();
    for (const auto& m : doc.monoid->generators()) gens.push_back(to_json(m));
    j["generators"] = gens;
    return j;
}

Cone parse_cone(const Json& j, const std::string& where) {
    const Json* rays = &j;
    std::optional<std::size_t> rank;
    std::string rw = where;
    if (j.is_object()) {
        rays = &field(j, "rays", where);
        rw = at(where, "rays");
        if (j.contains("rank")) {
            Integer r = parse_integer(j["rank"], at(where, "rank"));
            if (r < 1 || r > 64) fail(at(where, "rank"), "expected 1 <= rank <= 64");
            rank = r.get_ui();
        }
    }
    array_at(*rays, rw);
    if (rays->empty() && !rank) fail(rw, "an empty ray list needs an explicit rank");
    if (!rank) rank = array_at((*rays)[0], at(rw, std::size_t{0})).size();
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < rays->size(); ++i) gens.push_back(parse_int_vector((*rays)[i], at(rw, i), *rank));
    return Cone(*rank, gens);
}

Cone parse_cone_text(const std::string& text) {
    std::vector<IntVector> rays;
    std::stringstream all(text);
    std::string ray;
    std::size_t rank = 0;
    while (std::getline(all, ray, ';')) {
        IntVector v;
        std::stringstream entries(ray);
        std::string entry;
        while (std::getline(entries, entry, ',')) {
            Integer x;
            const auto b = entry.find_first_not_of(" \t");
            const auto e = entry.find_last_not_of(" \t");
            if (b == std::string::npos || x.set_str(entry.substr(b, e - b + 1), 10) != 0) {
                throw ParseError("--cone: bad entry \"" + entry + "\" in ray " + std::to_string(rays.size()));
            }
            v.push_back(x);
        }
        if (rays.empty()) rank = v.size();
        if (v.size() != rank || rank == 0) {
            throw ParseError("--cone: ray " + std::to_string(rays.size()) + " has " + std::to_string(v.size()) +
                             " entries, expected " + std::to_string(rank));
        }
        rays.push_back(std::move(v));
    }
    if (rays.empty()) throw ParseError("--cone: no rays given");
    return Cone(rank, rays);
}

AlgebraElement parse_polynomial(const Json& j, const AbelianGroup& group, const std::string& where) {
    array_at(j, where);
    AlgebraElement f;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string tw = at(where, i);
        GroupElement m = parse_element(field(j[i], "exponent", tw), group, at(tw, "exponent"));
        Rational c = j[i].contains("coefficient") ? parse_rational(j[i]["coefficient"], at(tw, "coefficient")) : Rational(1);
        f.add_term(m, c);
    }
    return f;
}

Derivation parse_derivation(const Json& j, const std::shared_ptr<const AffineMonoid>& s, const std::string& where) {
    const AbelianGroup& group = s->group();
    if (!j.is_object()) fail(where, "expected a derivation object");

    if (j.contains("root")) {
        const Json& r = j["root"];
        const std::string rw = at(where, "root");
        GroupElement alpha = parse_element(field(r, "alpha", rw), group, at(rw, "alpha"));
        Rational lambda = j.contains("lambda") ? parse_rational(j["lambda"], at(where, "lambda")) : Rational(1);
        if (lambda == 0) fail(at(where, "lambda"), "lambda must be nonzero");
        RootTester test(*s);
        auto root = test(alpha);
        if (!root) throw DomainError(ErrorKind::NotARoot, to_string(alpha.free) + " is not a root of S");
        DualVector ray = root->distinguished_ray();
        if (r.contains("ray")) {
            ray = DualVector{parse_int_vector(r["ray"], at(rw, "ray"), group.rank())};
            const auto& ok = root->satisfying_rays();
            if (std::find(ok.begin(), ok.end(), ray) == ok.end()) {
                throw DomainError(ErrorKind::NotARoot, to_string(alpha.free) + " is not a root for ray " + to_string(ray.coords));
            }
        }
        RatVector gamma = to_rational(ray.coords);
        for (auto& x : gamma) x *= lambda;
        return Derivation(HomogeneousDerivation(s, alpha, gamma));
    }

    if (j.contains("pieces")) {
        const std::string pw = at(where, "pieces");
        const Json& pieces = array_at(j["pieces"], pw);
        std::vector<HomogeneousDerivation> out;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            const std::string iw = at(pw, i);
            GroupElement degree = parse_element(field(pieces[i], "degree", iw), group, at(iw, "degree"));
            RatVector gamma = parse_rat_vector(field(pieces[i], "character", iw), at(iw, "character"), group.rank());
            out.emplace_back(s, degree, gamma);
        }
        return Derivation(out);
    }

    if (j.contains("images")) {
        const std::string iw = at(where, "images");
        const Json& images = array_at(j["images"], iw);
        GeneratorImages map;
        for (std::size_t i = 0; i < images.size(); ++i) {
            const std::string ew = at(iw, i);
            GroupElement g = parse_element(field(images[i], "generator", ew), group, at(ew, "generator"));
            if (!std::binary_search(s->generators().begin(), s->generators().end(), g)) {
                fail(at(ew, "generator"), to_string(g.free) + " is not a listed generator");
            }
            if (map.count(g)) fail(at(ew, "generator"), "generator given twice");
            map[g] = parse_polynomial(field(images[i], "image", ew), group, at(ew, "image"));
        }
        return decompose(s, map);
    }

    fail(where, "expected one of \"root\", \"pieces\", \"images\"");
}

std::string digest(const Json& j) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : j.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace toric::io
