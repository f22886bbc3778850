#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cyclicgv/autocyclic.hpp"
#include "cyclicgv/bounds.hpp"
#include "cyclicgv/codeset.hpp"
#include "cyclicgv/packing.hpp"
#include "cyclicgv/verify.hpp"

namespace cyclicgv {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class CodeKind { autocyclic, packed };

std::string_view to_string(CodeKind kind);
CodeKind parse_code_kind(std::string_view text);

/// Contents of a code file:
///
///   n=<n> delta=<p>/<q> kind=<autocyclic|packed>
///   <codeword>
///   ...
///
/// one codeword per line in textual form, ascending as binary integers.
struct CodeFile {
  CodeSet code;
  DistanceThreshold delta;
  CodeKind kind = CodeKind::autocyclic;
};

std::string format_code_file(const CodeSet& code, const DistanceThreshold& delta, CodeKind kind);
CodeFile parse_code_file(std::string_view text);

CodeFile read_code_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// JSON renderings. Reals are decimal strings with 15 significant digits;
// exact rationals and big integers are strings too.

nlohmann::ordered_json to_json(const BoundReport& report);
nlohmann::ordered_json to_json(const TailEstimate& estimate);
nlohmann::ordered_json to_json(const PackingTrace& trace);
nlohmann::ordered_json to_json(const CheckResult& check);
nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json to_json(const NonlinearityWitness& witness);

}  // namespace cyclicgv
