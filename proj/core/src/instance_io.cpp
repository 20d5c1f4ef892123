#include "spatialvote/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spatialvote/errors.hpp"

namespace spatialvote {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_document(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Rat rat_from_json(const ordered_json& v, const char* where) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_string()) {
    auto r = Rat::parse(v.get<std::string>());
    if (!r) throw ParseError(std::string(where) + ": bad rational token \"" +
                             v.get<std::string>() + "\"");
    return *r;
  }
  throw ParseError(std::string(where) +
                   ": coordinates must be integers or \"num/den\" strings");
}

std::vector<RatPoint> points_from_json(const ordered_json& v, const char* where) {
  if (!v.is_array()) throw ParseError(std::string(where) + " must be an array of points");
  std::vector<RatPoint> out;
  for (const auto& row : v) {
    if (!row.is_array()) throw ParseError(std::string(where) + " entries must be arrays");
    RatPoint p;
    for (const auto& c : row) p.push_back(rat_from_json(c, where));
    out.push_back(std::move(p));
  }
  return out;
}

int int_field(const ordered_json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const auto& v = doc.at(key);
  if (!v.is_number_integer())
    throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

// Integers that fit a JSON number stay numbers; everything else becomes an
// exact string. Both forms reload bit-identically.
ordered_json rat_to_json(const Rat& r) {
  if (r.is_integer() && r.num().fits_slong_p()) return ordered_json(r.num().get_si());
  return ordered_json(r.str());
}

ordered_json instance_body(const ElectionInstance& inst) {
  ordered_json doc;
  doc["d"] = inst.d;
  doc["p"] = inst.p;
  auto points = [](const std::vector<RatPoint>& pts) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : pts) {
      ordered_json row = ordered_json::array();
      for (const auto& c : p) row.push_back(rat_to_json(c));
      arr.push_back(std::move(row));
    }
    return arr;
  };
  doc["voters"] = points(inst.voters);
  doc["candidates"] = points(inst.candidates);
  return doc;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failure on " + path);
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  out.close();
  if (!out) throw IoError("write failure on " + path);
}

ElectionInstance parse_instance_json(const std::string& text) {
  ordered_json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("instance file must be a JSON object");
  ElectionInstance inst;
  inst.d = int_field(doc, "d");
  inst.p = int_field(doc, "p");
  if (!doc.contains("voters") || !doc.contains("candidates"))
    throw ParseError("instance file needs \"voters\" and \"candidates\"");
  inst.voters = points_from_json(doc.at("voters"), "voters");
  inst.candidates = points_from_json(doc.at("candidates"), "candidates");
  validate_instance(inst);
  return inst;
}

ElectionInstance load_instance(const std::string& path) {
  return parse_instance_json(read_text_file(path));
}

std::string instance_to_json(const ElectionInstance& inst) {
  return instance_body(inst).dump(2) + "\n";
}

void save_instance(const ElectionInstance& inst, const std::string& path) {
  write_text_file(path, instance_to_json(inst));
}

ScoringMatrix parse_scoring_json(const std::string& text) {
  ordered_json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("q"))
    throw ParseError("scoring file must be {\"q\": [[int, ...], ...]}");
  const auto& q = doc.at("q");
  if (!q.is_array()) throw ParseError("\"q\" must be an array of rows");
  ScoringMatrix m;
  for (const auto& row : q) {
    if (!row.is_array()) throw ParseError("scoring rows must be arrays");
    std::vector<long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("scoring entries must be integers");
      r.push_back(v.get<long>());
    }
    m.rows.push_back(std::move(r));
  }
  return m;
}

ScoringMatrix load_scoring(const std::string& path) {
  return parse_scoring_json(read_text_file(path));
}

FlsInput parse_fls_json(const std::string& text) {
  ordered_json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("A") || !doc.contains("k"))
    throw ParseError("reduction file must be {\"A\": [[...], ...], \"k\": int}");
  FlsInput in;
  in.k = int_field(doc, "k");
  const auto& a = doc.at("A");
  if (!a.is_array()) throw ParseError("\"A\" must be an array of rows");
  for (const auto& row : a) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("matrix entries must be integers");
      r.push_back(v.get<int>());
    }
    in.rows.push_back(std::move(r));
  }
  return in;
}

FlsInput load_fls(const std::string& path) {
  return parse_fls_json(read_text_file(path));
}

std::string fls_instance_to_json(const ElectionInstance& inst, int k) {
  ordered_json doc = instance_body(inst);
  doc["k"] = k;
  return doc.dump(2) + "\n";
}

}  // namespace spatialvote
