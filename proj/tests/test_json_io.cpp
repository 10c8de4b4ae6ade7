#include "toriclog/json_io.hpp"

#include <doctest.h>

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "toriclog/parser.hpp"

using namespace toriclog;

namespace {

Json p2_document() {
    return Json{{"name", "p2"},
                {"dim", 2},
                {"variables", {"x", "y", "z"}},
                {"rays", {{1, 0}, {0, 1}, {-1, -1}}},
                {"max_cones", {{1, 2}, {2, 3}, {3, 1}}},
                {"complete", true},
                {"projective", true}};
}

}  // namespace

TEST_CASE("integers cross the safe float range as strings") {
    CHECK(integer_to_json(Integer(7)).is_number());
    CHECK(integer_to_json(Integer(-7)).is_number());
    CHECK(integer_to_json(Integer("9007199254740991")).is_number());
    CHECK(integer_to_json(Integer("9007199254740992")).is_string());
    CHECK(integer_to_json(Integer("-9007199254740992")).is_string());

    for (const char* s : {"0", "-12", "9007199254740991", "9007199254740992",
                          "-123456789012345678901234567890"}) {
        Integer v(s);
        CHECK(integer_from_json(integer_to_json(v)) == v);
    }
    CHECK(integer_from_json(Json(42)) == 42);
    CHECK(integer_from_json(Json("42")) == 42);
}

TEST_CASE("rationals print as quotient strings") {
    CHECK(rational_to_string(Rational(3, 2)) == "3/2");
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK(rational_to_string(Rational(-7, 3)) == "-7/3");
    CHECK(rational_from_string("3/2") == Rational(3, 2));
    CHECK(rational_from_string("-8") == Rational(-8));
    CHECK(rational_from_string("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(rational_from_string("x"), Error);
    CHECK_THROWS_AS(rational_from_string("1/0"), Error);
}

TEST_CASE("input hashing is the 64 bit fnv1a function") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
    CHECK(hash_hex(fnv1a64("foobar")) == "85944171f73967e8");
    CHECK(hash_hex(0) == "0000000000000000");
}

TEST_CASE("class elements round trip") {
    ClassElement c{{Integer(2), Integer(-1)}, {Integer(1)}};
    Json j = class_to_json(c);
    CHECK(class_from_json(j) == c);
    CHECK(j["free"].size() == 2);
    CHECK(j["torsion"].size() == 1);

    ClassElement big{{Integer("123456789012345678901")}, {}};
    CHECK(class_from_json(class_to_json(big)) == big);
}

TEST_CASE("variety documents parse with one based cones") {
    VarietyDocument doc = parse_variety_document(p2_document());
    CHECK(doc.name == "p2");
    CHECK(doc.variables == std::vector<std::string>{"x", "y", "z"});
    CHECK(doc.fan.dim == 2);
    CHECK(doc.fan.rays.size() == 3);
    CHECK(doc.fan.max_cones == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}, {2, 0}});
    CHECK(doc.complete);
    CHECK(doc.projective);

    ToricData td = build_variety(doc.fan, doc.complete, doc.projective);
    CHECK(td.class_group().to_string() == "Z");
}

TEST_CASE("variety documents reject malformed input") {
    Json missing = p2_document();
    missing.erase("projective");
    CHECK_THROWS_AS(parse_variety_document(missing), Error);

    Json mismatch = p2_document();
    mismatch["variables"] = {"x", "y"};
    CHECK_THROWS_AS(parse_variety_document(mismatch), Error);

    Json zero_index = p2_document();
    zero_index["max_cones"] = {{0, 1}};
    CHECK_THROWS_AS(parse_variety_document(zero_index), Error);

    Json out_of_range = p2_document();
    out_of_range["max_cones"] = {{1, 4}};
    CHECK_THROWS_AS(parse_variety_document(out_of_range), Error);

    Json short_ray = p2_document();
    short_ray["rays"] = {{1, 0}, {0, 1}, {-1}};
    CHECK_THROWS_AS(parse_variety_document(short_ray), Error);

    try {
        parse_variety_document(missing);
    } catch (const Error& e) {
        CHECK(e.code() == "DocumentError");
    }
}

TEST_CASE("syzygy vectors round trip") {
    ToricData td = build_variety(fixtures::p2(), true, true);
    std::vector<std::string> names = {"x", "y", "z"};
    Polynomial b = parse_polynomial("(x - y)*(y - z)*(x - z)", names);
    ClassElement minus_h = td.class_map().negate(td.degree(0));
    SyzygyVector v = syzygy_basis(td, {b}, minus_h).basis.at(0);

    Json j = syzygy_to_json(v, names);
    SyzygyVector back = syzygy_from_json(j, names);
    CHECK(back.body == v.body);
    CHECK(back.degree == v.degree);
    CHECK(back.kind == v.kind);
    CHECK(syzygy_to_json(back, names) == j);

    v.kind = SyzygyKind::Extended;
    Json je = syzygy_to_json(v, names);
    CHECK(je["kind"] == "extended");
    CHECK(syzygy_from_json(je, names).kind == SyzygyKind::Extended);
}

TEST_CASE("certificates round trip through their reports") {
    ToricData td = build_variety(fixtures::p2(), true, true);
    std::vector<std::string> names = {"x", "y", "z"};
    auto [b, cert] = braid_certificate(td);

    Json j = certificate_to_json(cert, names);
    CHECK(j["free"] == true);
    CHECK(j["factor"].is_string());
    CHECK(j["exponents"].size() == 3);
    CHECK(j["euler_columns"].size() == 1);

    SaitoCertificate back = certificate_from_json(j, names);
    CHECK(certificate_to_json(back, names) == j);
    CHECK(back.free);
    CHECK(back.determinant == cert.determinant);
    CHECK(back.factor == cert.factor);
    CHECK(back.divisor == b);

    // a certificate without a factor keeps the null
    SaitoCertificate none = cert;
    none.free = false;
    none.factor.reset();
    none.splitting.reset();
    Json jn = certificate_to_json(none, names);
    CHECK(jn["factor"].is_null());
    CHECK(certificate_to_json(certificate_from_json(jn, names), names) == jn);
}

TEST_CASE("distribution reports round trip") {
    ToricData td = build_variety(fixtures::p1p1(), true, true);
    std::vector<std::string> names = {"x0", "x1", "y0", "y1"};
    std::vector<Polynomial> f = {parse_polynomial("x0*y0", names),
                                 parse_polynomial("x1*y1", names)};
    FoliationReport r = foliation_check(td, f);

    Json j = foliation_to_json(r, names);
    CHECK(j["applies"] == true);
    CHECK(j["q"] == 1);
    CHECK(j["codimension"] == 1);
    FoliationReport back = foliation_from_json(j, names);
    CHECK(foliation_to_json(back, names) == j);
    CHECK(back.applies);
    CHECK(back.kernel_rank == 1);

    // failing verdicts keep their witnesses
    ToricData p3p4 = build_variety(fixtures::product_projective({3, 4}), true, true);
    std::vector<std::string> n9;
    for (int i = 0; i < 4; ++i) n9.push_back("x" + std::to_string(i));
    for (int i = 0; i < 5; ++i) n9.push_back("y" + std::to_string(i));
    FoliationReport r4 = foliation_check(
        p3p4, {parse_polynomial("x0*y0", n9), parse_polynomial("x1*x2*y1*y2", n9),
               parse_polynomial("x3*y3*y4", n9)});
    Json j4 = foliation_to_json(r4, n9);
    CHECK(j4["applies"] == false);
    CHECK(j4["reasons"] == Json::array({"cayley_bacharach"}));
    CHECK(foliation_to_json(foliation_from_json(j4, n9), n9) == j4);
}

TEST_CASE("report envelopes embed the hash and the basis") {
    VarietyDocument doc = parse_variety_document(p2_document());
    ToricData td = build_variety(doc.fan, doc.complete, doc.projective);
    Json env = report_envelope("variety-check", "{\"name\":\"p2\"}", doc, td);
    CHECK(env["command"] == "variety-check");
    CHECK(env["input_hash"] == "e46a128bc2de8c5c");
    CHECK(env["variety"] == "p2");
    CHECK(env["class_group"] == "Z");
    CHECK(env["basis"]["variable_degrees"].size() == 3);
    CHECK(env["basis"]["free_functionals"].size() == 1);
    ClassElement d0 = class_from_json(env["basis"]["variable_degrees"][0]);
    CHECK(d0 == td.degree(0));
}
