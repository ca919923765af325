// SPDX-License-Identifier: Apache-2.0
#include "polyharm/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "polyharm/errors.hpp"

namespace polyharm {

namespace {

AnalyticSeries parse_series(const Json& arr, const char* field) {
    if (!arr.is_array())
        throw SpecParseError(std::string("map spec: '") + field +
                             "' must be an array of [re, im] pairs");
    std::vector<Complex> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
            !item[1].is_number())
            throw SpecParseError(std::string("map spec: '") + field +
                                 "' entries must be [re, im] number pairs");
        coeffs.emplace_back(item[0].get<double>(), item[1].get<double>());
    }
    return AnalyticSeries(std::move(coeffs));
}

Json series_to_json(const AnalyticSeries& s) {
    Json arr = Json::array();
    for (const Complex& c : s.coeffs) arr.push_back({c.real(), c.imag()});
    return arr;
}

}  // namespace

PolyharmonicMap parse_map_spec(const Json& j) {
    if (!j.is_object()) throw SpecParseError("map spec: root must be an object");
    if (!j.contains("p") || !j["p"].is_number_integer())
        throw SpecParseError("map spec: missing integer field 'p'");
    const int p = j["p"].get<int>();
    if (p < 1) throw SpecParseError("map spec: 'p' must be >= 1");
    if (!j.contains("components") || !j["components"].is_array())
        throw SpecParseError("map spec: missing array field 'components'");
    const auto& comps = j["components"];
    if (static_cast<int>(comps.size()) != p)
        throw SpecParseError("map spec: 'components' length must equal 'p'");
    std::vector<HarmonicMap> components;
    components.reserve(comps.size());
    for (const auto& c : comps) {
        if (!c.is_object() || !c.contains("h") || !c.contains("g"))
            throw SpecParseError("map spec: each component needs 'h' and 'g'");
        components.push_back(
            HarmonicMap{parse_series(c["h"], "h"), parse_series(c["g"], "g")});
    }
    return PolyharmonicMap(std::move(components));
}

PolyharmonicMap parse_map_spec_string(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecParseError(std::string("map spec: ") + e.what());
    }
    return parse_map_spec(j);
}

PolyharmonicMap load_map_spec(const std::string& path) {
    return parse_map_spec_string(read_file(path));
}

Json map_spec_to_json(const PolyharmonicMap& f) {
    Json j;
    j["p"] = f.order();
    Json comps = Json::array();
    for (const HarmonicMap& c : f.components) {
        Json cj;
        cj["h"] = series_to_json(c.h);
        cj["g"] = series_to_json(c.g);
        comps.push_back(cj);
    }
    j["components"] = comps;
    return j;
}

Json to_json(const GridSpec& g) {
    Json j;
    j["radial"] = g.radial_count;
    j["angular"] = g.angular_count;
    j["max_radius"] = g.max_radius;
    return j;
}

Json to_json(const Witness& w) {
    Json j;
    j["z"] = {w.z.real(), w.z.imag()};
    j["value"] = w.value;
    return j;
}

Json to_json(const Verdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    Json ws = Json::array();
    for (const Witness& w : v.witnesses) ws.push_back(to_json(w));
    j["witnesses"] = ws;
    j["grid"] = to_json(v.grid);
    j["notes"] = v.notes;
    return j;
}

Json to_json(const RadoReport& r) {
    Json j;
    j["radii"] = r.radii;
    j["max_modulus"] = r.max_modulus;
    j["bounded"] = r.bounded;
    j["notes"] = r.notes;
    return j;
}

Json to_json(const JumpReport& r) {
    Json j;
    j["theta0"] = r.theta0;
    j["c_estimate"] = r.c_estimate;
    j["r_sequence"] = r.r_sequence;
    j["values"] = r.values;
    j["verdict"] = to_string(r.verdict);
    return j;
}

Json to_json(const SmallOReport& r) {
    Json j;
    j["holds"] = r.holds;
    j["trace"] = r.trace;
    return j;
}

Json to_json(const DivergenceReport& r) {
    Json j;
    j["cutoffs"] = r.cutoffs;
    j["partial_integrals"] = r.partial_integrals;
    j["slope"] = r.slope;
    j["residual"] = r.residual;
    j["verdict"] = to_string(r.verdict);
    j["phi_exceeds_one"] = r.phi_exceeds_one;
    Json flags = Json::array();
    for (const Witness& w : r.flags) flags.push_back(to_json(w));
    j["flags"] = flags;
    return j;
}

Json to_json(const KhReport& r) {
    Json j;
    j["sum_value"] = r.sum_value;
    j["normalized"] = r.normalized;
    j["passes"] = r.passes;
    return j;
}

Json to_json(const CtcCertificate& c) {
    Json j;
    j["kh"] = to_json(c.kh);
    j["local_univalence"] = to_json(c.local_univalence);
    j["slice"] = to_json(c.slice);
    j["sup_dilatation"] = c.sup_dilatation;
    j["conclusion"] = to_string(c.conclusion);
    return j;
}

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace polyharm
