// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

#include "polyharm/boundary.hpp"
#include "polyharm/classes.hpp"
#include "polyharm/types.hpp"
#include "polyharm/univalence.hpp"
#include "polyharm/verdict.hpp"

namespace polyharm {

using Json = nlohmann::ordered_json;

/// Map-spec schema, the single ingestion point for all CLI commands:
///   {"p": int, "components": [{"h": [[re,im],...], "g": [[re,im],...]}]}
/// Coefficient index equals array index. Throws SpecParseError on schema
/// violations.
PolyharmonicMap parse_map_spec(const Json& j);
PolyharmonicMap parse_map_spec_string(const std::string& text);
PolyharmonicMap load_map_spec(const std::string& path);

Json map_spec_to_json(const PolyharmonicMap& f);

Json to_json(const GridSpec& g);
Json to_json(const Witness& w);
Json to_json(const Verdict& v);
Json to_json(const RadoReport& r);
Json to_json(const JumpReport& r);
Json to_json(const SmallOReport& r);
Json to_json(const DivergenceReport& r);
Json to_json(const KhReport& r);
Json to_json(const CtcCertificate& c);

/// FNV-1a 64-bit content digest, as 16 lowercase hex digits.
std::string content_digest(const std::string& bytes);

/// Reads a whole file; throws Error (I/O) when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace polyharm
