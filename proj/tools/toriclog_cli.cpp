/*
 * Batch front end. Reads a variety document plus polynomial and syzygy inputs,
 * dispatches the library operations and reports as text or JSON. Exit status:
 * 0 for a positive verdict (valid input, Free, Applies), 1 for a negative one,
 * 2 for input errors, with the machine-readable code on stderr.
 */
#include <CLI11.hpp>

#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "toriclog/foliation.hpp"
#include "toriclog/json_io.hpp"
#include "toriclog/parser.hpp"
#include "toriclog/saito.hpp"

namespace {

using namespace toriclog;

struct Options {
    std::string variety_path;
    std::string format = "text";
    std::string out_path;
    std::vector<std::string> fs;
    std::string kappa_text;
    std::string syzygy_path;
    std::string cert_path;
    std::string weight_text;
    long max_box = 3;
    std::size_t combination_limit = 10000;
    std::size_t s = 0;
    bool extended = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw document_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw document_error(what + ": " + e.what());
    }
}

struct Loaded {
    std::string text;
    VarietyDocument doc;
    ToricData td;
};

Loaded load_variety(const std::string& path) {
    Loaded l;
    l.text = read_file(path);
    l.doc = parse_variety_document(parse_json_text(l.text, path));
    l.td = build_variety(l.doc.fan, l.doc.complete, l.doc.projective);
    return l;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

Integer parse_integer_text(const std::string& tok, const std::string& what) {
    try {
        return Integer(tok);
    } catch (const std::invalid_argument&) {
        throw document_error(what + ": bad integer '" + tok + "'");
    }
}

// "f1,f2" or "f1,f2;t1,t2" in the reported basis; omitted residues mean zero
ClassElement parse_class_option(const std::string& text, const ToricData& td) {
    std::string free_part = text, torsion_part;
    if (auto semi = text.find(';'); semi != std::string::npos) {
        free_part = text.substr(0, semi);
        torsion_part = text.substr(semi + 1);
    }
    ClassElement c;
    for (const auto& tok : split_list(free_part))
        c.free.push_back(parse_integer_text(tok, "--kappa"));
    for (const auto& tok : split_list(torsion_part))
        c.torsion.push_back(parse_integer_text(tok, "--kappa"));
    const auto& moduli = td.class_map().moduli();
    if (c.free.size() != td.picard_rank())
        throw document_error("--kappa needs " + std::to_string(td.picard_rank()) +
                             " free coordinates, got " + std::to_string(c.free.size()));
    if (c.torsion.empty()) c.torsion.assign(moduli.size(), Integer(0));
    if (c.torsion.size() != moduli.size())
        throw document_error("--kappa needs " + std::to_string(moduli.size()) +
                             " torsion residues, got " + std::to_string(c.torsion.size()));
    for (std::size_t i = 0; i < moduli.size(); ++i)
        c.torsion[i] = ((c.torsion[i] % moduli[i]) + moduli[i]) % moduli[i];
    return c;
}

std::vector<Polynomial> parse_tuple(const Loaded& l, const std::vector<std::string>& fs,
                                    const std::string& cmd) {
    std::vector<Polynomial> out;
    for (const auto& text : fs) {
        Polynomial p = parse_polynomial(text, l.doc.variables);
        if (p.is_zero()) throw zero_polynomial(cmd);
        l.td.homogeneous_degree(p);  // throws with a witness pair when not homogeneous
        out.push_back(std::move(p));
    }
    return out;
}

std::string row_text(const IntMatrix& m, std::size_t i) {
    std::string out = "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j) out += ", ";
        out += m.at(i, j).get_str();
    }
    return out + "]";
}

std::string variety_text(const VarietyDocument& doc, const ToricData& td) {
    std::ostringstream out;
    out << "variety: " << doc.name << "\n";
    out << "dimension " << td.dim() << ", " << td.ray_count() << " rays, "
        << td.fan().max_cones.size() << " maximal cones\n";
    out << "complete: " << (td.complete() ? "yes" : "no")
        << ", projective: " << (td.projective() ? "yes" : "no") << "\n";
    out << "class group: " << td.class_group().to_string() << "\n";
    out << "variable degrees:\n";
    for (std::size_t i = 0; i < td.ray_count(); ++i)
        out << "  " << doc.variables[i] << ": " << td.degree(i).to_string() << "\n";
    const CokernelMap& cm = td.class_map();
    if (cm.free_rows().rows() > 0) {
        out << "free functionals (rows act on ray divisor coefficients):\n";
        for (std::size_t i = 0; i < cm.free_rows().rows(); ++i)
            out << "  " << row_text(cm.free_rows(), i) << "\n";
    }
    for (std::size_t i = 0; i < cm.moduli().size(); ++i)
        out << "torsion functional mod " << cm.moduli()[i].get_str() << ": "
            << row_text(cm.torsion_rows(), i) << "\n";
    out << "anticanonical class: " << td.anticanonical().to_string() << "\n";
    return out.str();
}

std::string certificate_text(const SaitoCertificate& c, const std::vector<std::string>& names) {
    std::ostringstream out;
    out << "divisor: " << to_string(c.divisor, names) << "  class "
        << c.divisor_class.to_string() << "\n";
    out << "columns: " << c.columns.size() << " syzygy";
    if (!c.euler_columns.empty()) {
        out << " + " << c.euler_columns.size() << " scaling (functional";
        for (auto j : c.euler_columns) out << " " << j;
        out << ")";
    }
    out << "\n";
    for (std::size_t t = 0; t < c.columns.size(); ++t) {
        out << "  column " << t << " kappa " << c.columns[t].degree.to_string() << ": (";
        for (std::size_t i = 0; i < c.columns[t].body.size(); ++i) {
            if (i) out << ", ";
            out << to_string(c.columns[t].body[i], names);
        }
        out << ")\n";
    }
    out << "determinant: " << to_string(c.determinant, names) << "\n";
    if (c.factor) out << "factor: " << rational_to_string(*c.factor) << "\n";
    out << "exponents:";
    for (const auto& e : c.exponents) out << " " << e.to_string();
    out << "\n";
    if (c.surplus != Effectivity::Skipped)
        out << "surplus class " << c.surplus_class.to_string() << ": "
            << (c.surplus == Effectivity::Effective ? "effective" : "not effective") << "\n";
    if (!c.summand_vanishing.empty()) {
        out << "summand vanishing:";
        for (bool b : c.summand_vanishing) out << " " << (b ? "yes" : "no");
        out << "\n";
    }
    if (c.splitting) out << "splitting: " << *c.splitting << "\n";
    for (const auto& n : c.notes) out << "note: " << n << "\n";
    out << "verdict: " << (c.free ? "Free" : "NotCertified") << "\n";
    return out.str();
}

std::string foliation_text(const FoliationReport& r, const std::vector<std::string>& names) {
    std::ostringstream out;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "tuple size k = " << r.k << ", degree rank q = " << r.q << ", dimension n = " << r.n
        << "\n";
    out << "codimension: " << r.codimension << "\n";
    out << "rank window k - n < q < k: " << yn(r.rank_window) << "\n";
    out << "dimension bound k < n: " << yn(r.dimension_bound) << "\n";
    out << "pairwise coprime: " << yn(r.coprime) << "\n";
    if (!r.coprime)
        out << "  entries " << r.coprime_detail.first << " and " << r.coprime_detail.second
            << " share " << to_string(r.coprime_detail.common_factor, names) << "\n";
    out << "algebraically independent: " << (r.independent ? yn(*r.independent) : "skipped")
        << "\n";
    out << "subset rank condition: " << yn(r.cayley_bacharach) << "\n";
    if (!r.cayley_failure.empty()) {
        out << "  failing subset:";
        for (auto i : r.cayley_failure) out << " " << i;
        out << "\n";
    }
    out << "image rank: " << r.image_rank << ", kernel rank: " << r.kernel_rank << "\n";
    if (r.minor_gcd_trivial)
        out << "maximal minor gcd trivial: " << yn(*r.minor_gcd_trivial) << "\n";
    for (const auto& n : r.notes) out << "note: " << n << "\n";
    out << "verdict: " << (r.applies ? "Applies" : "DoesNotApply");
    if (!r.reasons.empty()) {
        out << " (";
        for (std::size_t i = 0; i < r.reasons.size(); ++i) {
            if (i) out << ", ";
            out << r.reasons[i];
        }
        out << ")";
    }
    out << "\n";
    return out.str();
}

void emit(const Options& o, const Json& payload, const std::string& text) {
    if (o.format == "json")
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) throw document_error("cannot write '" + o.out_path + "'");
        f << payload.dump(2) << "\n";
    }
}

int run_variety_check(const Options& o) {
    Loaded l = load_variety(o.variety_path);
    Json payload = report_envelope("variety-check", l.text, l.doc, l.td);
    payload["dim"] = l.td.dim();
    Json rays = Json::array();
    for (const auto& ray : l.doc.fan.rays) {
        Json row = Json::array();
        for (const Integer& v : ray) row.push_back(integer_to_json(v));
        rays.push_back(std::move(row));
    }
    payload["rays"] = std::move(rays);
    payload["anticanonical"] = class_to_json(l.td.anticanonical());
    payload["complete"] = l.doc.complete;
    payload["projective"] = l.doc.projective;
    emit(o, payload, variety_text(l.doc, l.td));
    return 0;
}

int run_hzero(const Options& o) {
    Loaded l = load_variety(o.variety_path);
    ClassElement kappa = parse_class_option(o.kappa_text, l.td);
    std::vector<Exponent> basis = l.td.monomial_basis(kappa);
    Json monomials = Json::array();
    std::ostringstream text;
    text << "class: " << kappa.to_string() << "\n";
    text << "dimension: " << basis.size() << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::string m = monomial_string(basis[i], l.doc.variables);
        if (m.empty()) m = "1";
        monomials.push_back(m);
        text << (i ? ", " : "monomials: ") << m;
    }
    if (!basis.empty()) text << "\n";
    Json payload = report_envelope("hzero", l.text, l.doc, l.td);
    payload["kappa"] = class_to_json(kappa);
    payload["dimension"] = basis.size();
    payload["monomials"] = std::move(monomials);
    emit(o, payload, text.str());
    return 0;
}

int run_syzygies(const Options& o) {
    Loaded l = load_variety(o.variety_path);
    std::vector<Polynomial> f = parse_tuple(l, o.fs, "syzygies");
    ClassElement kappa = parse_class_option(o.kappa_text, l.td);
    if (o.extended && f.size() != 1)
        throw document_error("--extended applies to a single divisor, got " +
                             std::to_string(f.size()));
    SyzygySpace sp = o.extended ? extended_syzygy_basis(l.td, f[0], kappa)
                                : syzygy_basis(l.td, f, kappa);
    Json basis = Json::array();
    std::ostringstream text;
    text << "kind: " << (o.extended ? "extended" : "plain") << "\n";
    text << "class: " << kappa.to_string() << "\n";
    text << "dimension: " << sp.basis.size() << "\n";
    for (const SyzygyVector& v : sp.basis) {
        basis.push_back(syzygy_to_json(v, l.doc.variables));
        text << "  (";
        for (std::size_t i = 0; i < v.body.size(); ++i) {
            if (i) text << ", ";
            text << to_string(v.body[i], l.doc.variables);
        }
        text << ")\n";
    }
    Json payload = report_envelope("syzygies", l.text, l.doc, l.td);
    payload["kappa"] = class_to_json(kappa);
    payload["kind"] = o.extended ? "extended" : "plain";
    payload["dimension"] = sp.basis.size();
    payload["basis"] = std::move(basis);
    emit(o, payload, text.str());
    return 0;
}

int run_euler_check(const Options& o) {
    Loaded l = load_variety(o.variety_path);
    std::vector<Polynomial> f = parse_tuple(l, o.fs, "euler-check");
    bool all = true;
    Json checks = Json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < l.td.picard_rank(); ++j) {
            bool ok = euler_relation_check(l.td, f[i], j);
            all = all && ok;
            checks.push_back(Json{{"entry", i}, {"functional", j}, {"holds", ok}});
            text << to_string(f[i], l.doc.variables) << "  functional " << j << ": "
                 << (ok ? "holds" : "fails") << "\n";
        }
    }
    text << (all ? "all relations hold" : "violations found") << "\n";
    Json payload = report_envelope("euler-check", l.text, l.doc, l.td);
    payload["checks"] = std::move(checks);
    payload["all_hold"] = all;
    emit(o, payload, text.str());
    return all ? 0 : 1;
}

int finish_certificate(const Options& o, const Loaded& l, const char* command,
                       const SaitoCertificate& cert) {
    Json payload = report_envelope(command, l.text, l.doc, l.td);
    payload["certificate"] = certificate_to_json(cert, l.doc.variables);
    payload["verdict"] = cert.free ? "Free" : "NotCertified";
    emit(o, payload, certificate_text(cert, l.doc.variables));
    return cert.free ? 0 : 1;
}

int run_saito_verify(const Options& o) {
    Loaded l = load_variety(o.variety_path);
    if (o.fs.size() != 1)
        throw document_error("saito-verify takes exactly one --f, got " +
                             std::to_string(o.fs.size()));
    Polynomial f = parse_tuple(l, o.fs, "saito-verify")[0];
    Json sj = parse_json_text(read_file(o.syzygy_path), o.syzygy_path);
    Json arr;
    std::vector<std::size_t> euler;
    bool have_euler = false;
    if (sj.is_array()) {
        arr = sj;
    } else {
        if (!sj.contains("syzygies"))
            throw document_error("syzygy document needs a 'syzygies' array");
        arr = sj["syzygies"];
        if (sj.contains("euler_columns")) {
            have_euler = true;
            for (const Json& v : sj["euler_columns"]) {
                Integer idx = integer_from_json(v);
                if (idx < 0) throw document_error("functional indices are 0-based counts");
                euler.push_back(idx.get_ui());
            }
        }
    }
    std::vector<SyzygyVector> nu;
    for (const Json& e : arr) nu.push_back(syzygy_from_json(e, l.doc.variables));
    SaitoCertificate cert =
        have_euler ? saito_verify(l.td, f, nu, euler) : saito_verify(l.td, f, nu);
    return finish_certificate(o, l, "saito-verify", cert);
}

int run_saito_search(const Options& o) {
    Loaded l = load_variety(o.variety_path);
    if (o.fs.size() != 1)
        throw document_error("saito-search takes exactly one --f, got " +
                             std::to_string(o.fs.size()));
    Polynomial f = parse_tuple(l, o.fs, "saito-search")[0];
    SearchOptions so;
    so.box = o.max_box;
    so.combination_limit = o.combination_limit;
    std::optional<SaitoCertificate> cert = saito_search(l.td, f, so);
    if (!cert) {
        Json payload = report_envelope("saito-search", l.text, l.doc, l.td);
        payload["found"] = false;
        payload["verdict"] = "NotCertified";
        emit(o, payload, "no certificate found within the search bounds\n");
        return 1;
    }
    Json payload = report_envelope("saito-search", l.text, l.doc, l.td);
    payload["found"] = true;
    payload["certificate"] = certificate_to_json(*cert, l.doc.variables);
    payload["verdict"] = cert->free ? "Free" : "NotCertified";
    emit(o, payload, certificate_text(*cert, l.doc.variables));
    return cert->free ? 0 : 1;
}

int run_braid(const Options& o) {
    Loaded l = load_variety(o.variety_path);
    auto [divisor, cert] = braid_certificate(l.td);
    (void)divisor;  // also carried inside the certificate
    return finish_certificate(o, l, "braid", cert);
}

int run_invariant(const Options& o) {
    Loaded l = load_variety(o.variety_path);
    return finish_certificate(o, l, "invariant", invariant_divisor_certificate(l.td, o.s));
}

std::string fresh_name(const std::vector<std::string>& names) {
    auto taken = [&](const std::string& c) {
        for (const auto& n : names)
            if (n == c) return true;
        return false;
    };
    for (const char* c : {"w", "t", "u", "v"})
        if (!taken(c)) return c;
    for (std::size_t i = 0;; ++i)
        if (std::string c = "w" + std::to_string(i); !taken(c)) return c;
}

int run_cone_extend(const Options& o) {
    Loaded l = load_variety(o.variety_path);
    Integer weight = parse_integer_text(o.weight_text, "--weight");
    SaitoCertificate base;
    if (!o.cert_path.empty()) {
        Json cj = parse_json_text(read_file(o.cert_path), o.cert_path);
        if (cj.contains("certificate")) cj = cj["certificate"];
        base = certificate_from_json(cj, l.doc.variables);
    } else if (o.s > 0) {
        base = invariant_divisor_certificate(l.td, o.s);
    } else {
        throw document_error("cone-extend needs --certificate or --s");
    }
    auto [big, cert] = cone_extension(l.td, base, weight);
    std::vector<std::string> names = l.doc.variables;
    names.push_back(fresh_name(names));

    Json payload = report_envelope("cone-extend", l.text, l.doc, l.td);
    payload["weight"] = integer_to_json(weight);
    Json weights = Json::array();
    for (std::size_t i = 0; i < big.ray_count(); ++i)
        weights.push_back(integer_to_json(big.degree(i).free.at(0)));
    payload["extended"] = Json{{"variables", names},
                               {"dim", big.dim()},
                               {"class_group", big.class_group().to_string()},
                               {"weights", std::move(weights)}};
    payload["certificate"] = certificate_to_json(cert, names);
    payload["verdict"] = cert.free ? "Free" : "NotCertified";

    std::ostringstream text;
    text << "extended to dimension " << big.dim() << ": new variable " << names.back()
         << " of weight " << weight.get_str() << "\n";
    text << certificate_text(cert, names);
    emit(o, payload, text.str());
    return cert.free ? 0 : 1;
}

int run_foliation(const Options& o) {
    Loaded l = load_variety(o.variety_path);
    std::vector<Polynomial> f = parse_tuple(l, o.fs, "foliation");
    FoliationReport rep = foliation_check(l.td, f);
    Json payload = report_envelope("foliation", l.text, l.doc, l.td);
    payload["report"] = foliation_to_json(rep, l.doc.variables);
    payload["verdict"] = rep.applies ? "Applies" : "DoesNotApply";
    std::string text = foliation_text(rep, l.doc.variables);
    if (!o.kappa_text.empty()) {
        ClassElement kappa = parse_class_option(o.kappa_text, l.td);
        SyzygySpace sp = tangent_sections(l.td, f, kappa);
        Json basis = Json::array();
        for (const SyzygyVector& v : sp.basis)
            basis.push_back(syzygy_to_json(v, l.doc.variables));
        payload["tangent_sections"] = Json{{"kappa", class_to_json(kappa)},
                                           {"dimension", sp.basis.size()},
                                           {"basis", std::move(basis)}};
        text += "tangent sections at " + kappa.to_string() + ": dimension " +
                std::to_string(sp.basis.size()) + "\n";
    }
    emit(o, payload, text);
    return rep.applies ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact freeness certificates and distribution checks on toric varieties"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sc) {
        sc->add_option("variety", o.variety_path, "variety document (JSON)")->required();
        sc->add_option("--format", o.format, "stdout format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sc->add_option("--out", o.out_path, "also write the JSON report to this file");
    };
    auto add_kappa = [&](CLI::App* sc, bool required) {
        auto* opt = sc->add_option("--kappa", o.kappa_text,
                                   "class in the reported basis: 'f1,f2' or 'f1,f2;t1,t2'");
        if (required) opt->required();
    };
    auto add_tuple = [&](CLI::App* sc) {
        sc->add_option("--f", o.fs, "polynomial (repeatable)")->required();
    };

    CLI::App* vc = app.add_subcommand(
        "variety-check", "validate a variety document and print the degree basis");
    add_common(vc);

    CLI::App* hz =
        app.add_subcommand("hzero", "dimension and monomial basis of a graded piece");
    add_common(hz);
    add_kappa(hz, true);

    CLI::App* sy = app.add_subcommand("syzygies", "graded syzygy basis of a gradient tuple");
    add_common(sy);
    add_tuple(sy);
    add_kappa(sy, true);
    sy->add_flag("--extended", o.extended, "relations modulo the divisor (single --f)");

    CLI::App* ec =
        app.add_subcommand("euler-check", "check the Euler relations for each functional");
    add_common(ec);
    add_tuple(ec);

    CLI::App* sv =
        app.add_subcommand("saito-verify", "verify a syzygy column certificate for a divisor");
    add_common(sv);
    add_tuple(sv);
    sv->add_option("--syzygies", o.syzygy_path, "syzygy document (JSON)")->required();

    CLI::App* ss =
        app.add_subcommand("saito-search", "search for a certificate over a degree box");
    add_common(ss);
    add_tuple(ss);
    ss->add_option("--max-box", o.max_box, "free coordinate range for candidate degrees");
    ss->add_option("--combination-limit", o.combination_limit,
                   "determinant evaluations allowed");

    CLI::App* br = app.add_subcommand(
        "braid", "certificate for the product of differences over repeated classes");
    add_common(br);

    CLI::App* iv = app.add_subcommand(
        "invariant", "certificate for the product of the first s variables");
    add_common(iv);
    iv->add_option("--s", o.s, "number of leading variables")->required();

    CLI::App* ce = app.add_subcommand(
        "cone-extend", "extend a weighted projective certificate by one more weight");
    add_common(ce);
    ce->add_option("--weight", o.weight_text, "weight of the appended variable")->required();
    ce->add_option("--certificate", o.cert_path, "certificate JSON (as written by --out)");
    ce->add_option("--s", o.s, "or: build the invariant divisor certificate on the base");

    CLI::App* fo =
        app.add_subcommand("foliation", "distribution hypothesis report for a tuple");
    add_common(fo);
    add_tuple(fo);
    add_kappa(fo, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (vc->parsed()) return run_variety_check(o);
        if (hz->parsed()) return run_hzero(o);
        if (sy->parsed()) return run_syzygies(o);
        if (ec->parsed()) return run_euler_check(o);
        if (sv->parsed()) return run_saito_verify(o);
        if (ss->parsed()) return run_saito_search(o);
        if (br->parsed()) return run_braid(o);
        if (iv->parsed()) return run_invariant(o);
        if (ce->parsed()) return run_cone_extend(o);
        if (fo->parsed()) return run_foliation(o);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error [Internal]: " << e.what() << "\n";
        return 2;
    }
}
