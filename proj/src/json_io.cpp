#include "toriclog/json_io.hpp"

#include <cstdio>
#include <stdexcept>
#include <utility>

#include "toriclog/parser.hpp"

namespace toriclog {

namespace {

const char* kind_name(SyzygyKind k) {
    return k == SyzygyKind::Plain ? "plain" : "extended";
}

SyzygyKind kind_from_name(const std::string& s) {
    if (s == "plain") return SyzygyKind::Plain;
    if (s == "extended") return SyzygyKind::Extended;
    throw document_error("unknown syzygy kind '" + s + "'");
}

const char* surplus_name(Effectivity e) {
    switch (e) {
        case Effectivity::Effective: return "effective";
        case Effectivity::NotEffective: return "not_effective";
        default: return "skipped";
    }
}

Effectivity surplus_from_name(const std::string& s) {
    if (s == "effective") return Effectivity::Effective;
    if (s == "not_effective") return Effectivity::NotEffective;
    if (s == "skipped") return Effectivity::Skipped;
    throw document_error("unknown effectivity verdict '" + s + "'");
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw document_error("matrix must be an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j.at(i).is_array() || j.at(i).size() != cols)
            throw document_error("matrix rows must have equal length");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = integer_from_json(j.at(i).at(c));
    }
    return m;
}

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw document_error(std::string("missing field '") + key + "'");
    return *it;
}

Polynomial poly_from_json(const Json& j, const std::vector<std::string>& names) {
    if (!j.is_string()) throw document_error("polynomial fields must be strings");
    return parse_polynomial(j.get<std::string>(), names);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json integer_to_json(const Integer& v) {
    static const Integer safe("9007199254740992");  // 2^53
    if (v < safe && v > -safe) return Json(v.get_si());
    return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw document_error("bad integer literal '" + j.get<std::string>() + "'");
        }
    }
    throw document_error("expected an integer value");
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
    std::size_t slash = s.find('/');
    try {
        Integer num(slash == std::string::npos ? s : s.substr(0, slash));
        Integer den = slash == std::string::npos ? Integer(1) : Integer(s.substr(slash + 1));
        if (den == 0) throw document_error("zero denominator in '" + s + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw document_error("bad rational literal '" + s + "'");
    }
}

Json class_to_json(const ClassElement& c) {
    Json free = Json::array(), torsion = Json::array();
    for (const Integer& v : c.free) free.push_back(integer_to_json(v));
    for (const Integer& v : c.torsion) torsion.push_back(integer_to_json(v));
    return Json{{"free", std::move(free)}, {"torsion", std::move(torsion)}};
}

ClassElement class_from_json(const Json& j) {
    ClassElement c;
    for (const Json& v : field(j, "free")) c.free.push_back(integer_from_json(v));
    for (const Json& v : field(j, "torsion")) c.torsion.push_back(integer_from_json(v));
    return c;
}

VarietyDocument parse_variety_document(const Json& j) {
    VarietyDocument doc;
    if (!field(j, "name").is_string()) throw document_error("'name' must be a string");
    doc.name = j["name"].get<std::string>();
    Integer dim = integer_from_json(field(j, "dim"));
    if (dim < 0) throw document_error("'dim' must be a count");
    doc.fan.dim = dim.get_ui();

    for (const Json& v : field(j, "variables")) {
        if (!v.is_string()) throw document_error("'variables' must list names");
        doc.variables.push_back(v.get<std::string>());
    }
    for (const Json& ray : field(j, "rays")) {
        if (!ray.is_array() || ray.size() != doc.fan.dim)
            throw document_error("each ray needs exactly 'dim' coordinates");
        std::vector<Integer> v;
        for (const Json& e : ray) v.push_back(integer_from_json(e));
        doc.fan.rays.push_back(std::move(v));
    }
    if (doc.variables.size() != doc.fan.rays.size())
        throw document_error("variable and ray counts differ");

    for (const Json& cone : field(j, "max_cones")) {
        if (!cone.is_array()) throw document_error("'max_cones' must list index arrays");
        std::vector<std::size_t> c;
        for (const Json& e : cone) {
            Integer idx = integer_from_json(e);
            if (idx < 1 || idx > Integer(doc.fan.rays.size()))
                throw document_error("cone indices are 1-based ray positions");
            c.push_back(idx.get_ui() - 1);
        }
        doc.fan.max_cones.push_back(std::move(c));
    }

    if (!field(j, "complete").is_boolean() || !field(j, "projective").is_boolean())
        throw document_error("'complete' and 'projective' must be explicit booleans");
    doc.complete = j["complete"].get<bool>();
    doc.projective = j["projective"].get<bool>();
    return doc;
}

Json syzygy_to_json(const SyzygyVector& v, const std::vector<std::string>& names) {
    Json body = Json::array();
    for (const Polynomial& p : v.body) body.push_back(to_string(p, names));
    return Json{{"body", std::move(body)},
                {"kappa", class_to_json(v.degree)},
                {"kind", kind_name(v.kind)}};
}

SyzygyVector syzygy_from_json(const Json& j, const std::vector<std::string>& names) {
    SyzygyVector v;
    for (const Json& p : field(j, "body")) v.body.push_back(poly_from_json(p, names));
    v.degree = class_from_json(field(j, "kappa"));
    if (!field(j, "kind").is_string()) throw document_error("'kind' must be a string");
    v.kind = kind_from_name(j["kind"].get<std::string>());
    return v;
}

Json certificate_to_json(const SaitoCertificate& c, const std::vector<std::string>& names) {
    Json columns = Json::array();
    for (const SyzygyVector& v : c.columns) columns.push_back(syzygy_to_json(v, names));
    Json exponents = Json::array();
    for (const ClassElement& e : c.exponents) exponents.push_back(class_to_json(e));
    Json j{{"divisor", to_string(c.divisor, names)},
           {"divisor_class", class_to_json(c.divisor_class)},
           {"columns", std::move(columns)},
           {"euler_columns", c.euler_columns},
           {"determinant", to_string(c.determinant, names)},
           {"factor", c.factor ? Json(rational_to_string(*c.factor)) : Json(nullptr)},
           {"free", c.free},
           {"exponents", std::move(exponents)},
           {"surplus", surplus_name(c.surplus)},
           {"surplus_class", class_to_json(c.surplus_class)},
           {"summand_vanishing", c.summand_vanishing},
           {"splitting", c.splitting ? Json(*c.splitting) : Json(nullptr)},
           {"notes", c.notes}};
    return j;
}

SaitoCertificate certificate_from_json(const Json& j, const std::vector<std::string>& names) {
    SaitoCertificate c;
    c.divisor = poly_from_json(field(j, "divisor"), names);
    c.divisor_class = class_from_json(field(j, "divisor_class"));
    for (const Json& v : field(j, "columns")) c.columns.push_back(syzygy_from_json(v, names));
    for (const Json& v : field(j, "euler_columns"))
        c.euler_columns.push_back(v.get<std::size_t>());
    c.determinant = poly_from_json(field(j, "determinant"), names);
    if (!field(j, "factor").is_null())
        c.factor = rational_from_string(j["factor"].get<std::string>());
    c.free = field(j, "free").get<bool>();
    for (const Json& v : field(j, "exponents")) c.exponents.push_back(class_from_json(v));
    c.surplus = surplus_from_name(field(j, "surplus").get<std::string>());
    c.surplus_class = class_from_json(field(j, "surplus_class"));
    for (const Json& v : field(j, "summand_vanishing"))
        c.summand_vanishing.push_back(v.get<bool>());
    if (!field(j, "splitting").is_null()) c.splitting = j["splitting"].get<std::string>();
    for (const Json& v : field(j, "notes")) c.notes.push_back(v.get<std::string>());
    return c;
}

Json foliation_to_json(const FoliationReport& r, const std::vector<std::string>& names) {
    Json degrees = Json::array();
    for (const ClassElement& d : r.profile.degrees) degrees.push_back(class_to_json(d));
    Json witness = Json(nullptr);
    if (!r.coprime)
        witness = Json{{"first", r.coprime_detail.first},
                       {"second", r.coprime_detail.second},
                       {"common_factor", to_string(r.coprime_detail.common_factor, names)}};
    return Json{{"q", r.q},
                {"k", r.k},
                {"n", r.n},
                {"rank_window", r.rank_window},
                {"dimension_bound", r.dimension_bound},
                {"coprime", r.coprime},
                {"coprime_witness", std::move(witness)},
                {"independent", r.independent ? Json(*r.independent) : Json(nullptr)},
                {"cayley_bacharach", r.cayley_bacharach},
                {"cayley_failure", r.cayley_failure},
                {"codimension", r.codimension},
                {"image_rank", r.image_rank},
                {"kernel_rank", r.kernel_rank},
                {"minor_gcd_trivial",
                 r.minor_gcd_trivial ? Json(*r.minor_gcd_trivial) : Json(nullptr)},
                {"applies", r.applies},
                {"reasons", r.reasons},
                {"notes", r.notes},
                {"profile",
                 Json{{"degrees", std::move(degrees)},
                      {"free_parts", matrix_to_json(r.profile.free_parts)},
                      {"rank", r.profile.rank},
                      {"span_basis", matrix_to_json(r.profile.span_basis)},
                      {"coordinates", matrix_to_json(r.profile.coordinates)}}}};
}

FoliationReport foliation_from_json(const Json& j, const std::vector<std::string>& names) {
    FoliationReport r;
    r.q = field(j, "q").get<std::size_t>();
    r.k = field(j, "k").get<std::size_t>();
    r.n = field(j, "n").get<std::size_t>();
    r.rank_window = field(j, "rank_window").get<bool>();
    r.dimension_bound = field(j, "dimension_bound").get<bool>();
    r.coprime = field(j, "coprime").get<bool>();
    if (!field(j, "coprime_witness").is_null()) {
        const Json& w = j["coprime_witness"];
        r.coprime_detail.coprime = false;
        r.coprime_detail.first = field(w, "first").get<std::size_t>();
        r.coprime_detail.second = field(w, "second").get<std::size_t>();
        r.coprime_detail.common_factor = poly_from_json(field(w, "common_factor"), names);
    }
    if (!field(j, "independent").is_null()) r.independent = j["independent"].get<bool>();
    r.cayley_bacharach = field(j, "cayley_bacharach").get<bool>();
    for (const Json& v : field(j, "cayley_failure"))
        r.cayley_failure.push_back(v.get<std::size_t>());
    r.codimension = field(j, "codimension").get<std::size_t>();
    r.image_rank = field(j, "image_rank").get<std::size_t>();
    r.kernel_rank = field(j, "kernel_rank").get<std::size_t>();
    if (!field(j, "minor_gcd_trivial").is_null())
        r.minor_gcd_trivial = j["minor_gcd_trivial"].get<bool>();
    r.applies = field(j, "applies").get<bool>();
    for (const Json& v : field(j, "reasons")) r.reasons.push_back(v.get<std::string>());
    for (const Json& v : field(j, "notes")) r.notes.push_back(v.get<std::string>());

    const Json& p = field(j, "profile");
    for (const Json& v : field(p, "degrees")) r.profile.degrees.push_back(class_from_json(v));
    r.profile.free_parts = matrix_from_json(field(p, "free_parts"));
    r.profile.rank = field(p, "rank").get<std::size_t>();
    r.profile.span_basis = matrix_from_json(field(p, "span_basis"));
    r.profile.coordinates = matrix_from_json(field(p, "coordinates"));
    return r;
}

Json basis_block(const ToricData& td) {
    Json degrees = Json::array();
    for (std::size_t i = 0; i < td.ray_count(); ++i)
        degrees.push_back(class_to_json(td.degree(i)));
    Json moduli = Json::array();
    for (const Integer& d : td.class_map().moduli()) moduli.push_back(integer_to_json(d));
    return Json{{"group", td.class_group().to_string()},
                {"variable_degrees", std::move(degrees)},
                {"free_functionals", matrix_to_json(td.class_map().free_rows())},
                {"torsion_functionals", matrix_to_json(td.class_map().torsion_rows())},
                {"torsion_moduli", std::move(moduli)}};
}

Json report_envelope(const std::string& command, const std::string& input_text,
                     const VarietyDocument& doc, const ToricData& td) {
    return Json{{"command", command},
                {"input_hash", hash_hex(fnv1a64(input_text))},
                {"variety", doc.name},
                {"class_group", td.class_group().to_string()},
                {"basis", basis_block(td)}};
}

}  // namespace toriclog
