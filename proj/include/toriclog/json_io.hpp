/*
 * Structured interchange for variety documents, syzygy lists, certificates and
 * reports. Integers ride as JSON numbers only inside the 53 bit safe range,
 * beyond that as decimal strings; rationals are "p/q" strings. Every report
 * embeds the input hash so downstream runs can tie results to their inputs.
 */
#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "toriclog/foliation.hpp"
#include "toriclog/saito.hpp"

namespace toriclog {

using Json = nlohmann::json;

std::uint64_t fnv1a64(std::string_view data);
std::string hash_hex(std::uint64_t h);

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

Json class_to_json(const ClassElement& c);
ClassElement class_from_json(const Json& j);

struct VarietyDocument {
    std::string name;
    std::vector<std::string> variables;
    Fan fan;
    bool complete = false;
    bool projective = false;
};

// cones come in 1-based, flags are mandatory
VarietyDocument parse_variety_document(const Json& j);

Json syzygy_to_json(const SyzygyVector& v, const std::vector<std::string>& names);
SyzygyVector syzygy_from_json(const Json& j, const std::vector<std::string>& names);

Json certificate_to_json(const SaitoCertificate& c, const std::vector<std::string>& names);
SaitoCertificate certificate_from_json(const Json& j, const std::vector<std::string>& names);

Json foliation_to_json(const FoliationReport& r, const std::vector<std::string>& names);
FoliationReport foliation_from_json(const Json& j, const std::vector<std::string>& names);

// group structure, per-variable degrees and the functional rows fixing the
// reported coordinates
Json basis_block(const ToricData& td);

Json report_envelope(const std::string& command, const std::string& input_text,
                     const VarietyDocument& doc, const ToricData& td);

}  // namespace toriclog
