#include "cyclicgv/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "cyclicgv/errors.hpp"

namespace cyclicgv {

using nlohmann::ordered_json;

std::string_view to_string(CodeKind kind) {
  return kind == CodeKind::autocyclic ? "autocyclic" : "packed";
}

CodeKind parse_code_kind(std::string_view text) {
  if (text == "autocyclic") return CodeKind::autocyclic;
  if (text == "packed") return CodeKind::packed;
  throw ParseError("unknown code kind '" + std::string(text) + "'");
}

std::string format_code_file(const CodeSet& code, const DistanceThreshold& delta, CodeKind kind) {
  std::string out = "n=" + std::to_string(code.length()) + " delta=" + delta.to_string() +
                    " kind=" + std::string(to_string(kind)) + "\n";
  out.reserve(out.size() + code.size() * (code.length() + 1));
  for (const auto& w : code) {
    out += w.to_string();
    out += '\n';
  }
  return out;
}

namespace {

std::string_view expect_field(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=') {
    throw ParseError("code file header: expected '" + std::string(key) + "=...', got '" +
                     std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto next = line.find(' ', pos);
    const auto end = next == std::string_view::npos ? line.size() : next;
    if (end > pos) parts.push_back(line.substr(pos, end - pos));
    pos = end + 1;
  }
  return parts;
}

}  // namespace

CodeFile parse_code_file(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  if (lines.empty()) throw ParseError("code file is empty");

  const auto header = split_spaces(lines.front());
  if (header.size() != 3) throw ParseError("code file header must be 'n=<n> delta=<p>/<q> kind=<kind>'");
  const auto n_text = expect_field(header[0], "n");
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
  if (ec != std::errc() || ptr != n_text.data() + n_text.size() || n == 0) {
    throw ParseError("code file header: invalid length '" + std::string(n_text) + "'");
  }
  const auto delta = DistanceThreshold::parse(expect_field(header[1], "delta"));
  const auto kind = parse_code_kind(expect_field(header[2], "kind"));

  std::vector<Codeword> words;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto w = Codeword::parse(lines[i]);
    if (w.length() != n) {
      throw ParseError("code file line " + std::to_string(i + 1) + ": expected " + std::to_string(n) +
                       " bits, got " + std::to_string(w.length()));
    }
    words.push_back(std::move(w));
  }
  CodeFile file{CodeSet::from_words(n, words), delta, kind};
  file.code.set_delta(delta);
  return file;
}

CodeFile read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_code_file(ss.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

ordered_json to_json(const BoundReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["delta"] = r.delta.to_string();
  j["entropy"] = to_decimal(r.entropy);
  j["strict_radius"] = r.strict_radius;
  j["ball_volume"] = r.ball_volume.str();
  j["ball_entropy_bound"] = to_decimal(r.ball_entropy_bound);
  j["lemma1_bound"] = to_decimal(r.lemma1_bound);
  j["gv_rate"] = to_decimal(r.gv_rate);
  j["lemma1_rate_target"] = to_decimal(r.lemma1_rate_target);
  return j;
}

ordered_json to_json(const TailEstimate& e) {
  ordered_json j;
  j["n"] = e.n;
  j["delta"] = e.delta.to_string();
  j["trials"] = e.trials;
  j["failures"] = e.failures;
  j["point_estimate"] = to_decimal(e.point_estimate());
  j["point_estimate_exact"] = std::to_string(e.failures) + "/" + std::to_string(e.trials);
  j["confidence_level"] = to_decimal(1 - Real(e.alpha));
  j["confidence_radius"] = to_decimal(e.confidence_radius());
  j["seed"] = e.seed;
  j["generator"] = e.generator;
  return j;
}

ordered_json to_json(const PackingTrace& trace) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < trace.selected.size(); ++i) {
    arr.push_back({{"representative", trace.selected[i].to_string()}, {"removed", trace.removed_counts[i]}});
  }
  return arr;
}

ordered_json to_json(const CheckResult& c) {
  ordered_json j;
  j["check"] = c.name;
  j["pass"] = c.pass;
  if (c.partial) j["partial"] = true;
  if (c.witness) {
    ordered_json w;
    w["first"] = c.witness->first.to_string();
    if (c.witness->second) w["second"] = c.witness->second->to_string();
    if (c.witness->shift) w["shift"] = *c.witness->shift;
    if (c.witness->distance) w["distance"] = c.witness->distance->to_string();
    j["witness"] = std::move(w);
  }
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["subject"] = r.subject;
  j["all_pass"] = r.all_pass();
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  return j;
}

ordered_json to_json(const NonlinearityWitness& w) {
  ordered_json j;
  j["n"] = w.x.length();
  j["delta"] = w.delta.to_string();
  j["x"] = w.x.to_string();
  j["y"] = w.y.to_string();
  j["sum"] = w.sum.to_string();
  j["x_auto_cyclic_distance"] = w.x_auto_distance.to_string();
  j["y_auto_cyclic_distance"] = w.y_auto_distance.to_string();
  j["sum_auto_cyclic_distance"] = w.sum_auto_distance.to_string();
  j["x_in_code"] = w.x_in_code;
  j["y_in_code"] = w.y_in_code;
  j["sum_in_code"] = w.sum_in_code;
  j["search"] = w.exhaustive ? "exhaustive" : "sampled";
  j["candidates_examined"] = w.candidates_examined;
  return j;
}

}  // namespace cyclicgv
