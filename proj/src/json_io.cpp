#include "bellmoment/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "bellmoment/errors.hpp"

namespace bellmoment::json {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw FormatError(path + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field '") + key + "'");
  return *it;
}

const json& array_field(const json& j, const char* key, const std::string& path) {
  const auto& a = field(j, key, path);
  if (!a.is_array()) bad(path + "." + key, "expected an array");
  return a;
}

std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::uint64_t as_count(const json& j, const std::string& path) {
  auto v = as_int(j, path);
  if (v < 0) bad(path, "expected a nonnegative integer");
  return static_cast<std::uint64_t>(v);
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

Rational as_rational(const json& j, const std::string& path) {
  try {
    return Scalar::parse_rational(as_string(j, path));
  } catch (const FormatError& e) {
    bad(path, e.what());
  }
}

std::vector<Scalar> scalar_list(const json& a, const std::string& path) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(decode_scalar(a[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json encode_point(const GroupElement& x) { return json(x.coords()); }

GroupElement decode_point(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of integers");
  std::vector<std::int64_t> c;
  for (std::size_t i = 0; i < j.size(); ++i) {
    c.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return GroupElement(std::move(c));
}

json encode_index(const MultiIndex& a) {
  return json(std::vector<std::uint32_t>(a.entries().begin(), a.entries().end()));
}

MultiIndex decode_index(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) bad(path, "expected a nonempty array of integers");
  std::vector<std::uint32_t> e;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto v = as_count(j[i], path + "[" + std::to_string(i) + "]");
    if (v > UINT32_MAX) bad(path, "multi-index entry too large");
    e.push_back(static_cast<std::uint32_t>(v));
  }
  return MultiIndex(std::move(e));
}

}  // namespace

// ------------------------------------------------------------------ encode

json encode(const Scalar& z) {
  return {{"re", Scalar::rational_to_string(z.re())},
          {"im", Scalar::rational_to_string(z.im())}};
}

json encode(const Exponential& m) {
  json bases = json::array();
  for (const auto& c : m.bases()) bases.push_back(encode(c));
  return {{"bases", bases}};
}

json encode(const AdditiveFn& a) {
  json vals = json::array();
  for (const auto& v : a.gen_values()) vals.push_back(encode(v));
  return {{"gen_values", vals}};
}

json encode(const TabulatedFn& t) {
  json values = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    values.push_back({{"x", encode_point(t.point(i))}, {"v", encode(t.value(i))}});
  }
  return {{"d", t.dim()}, {"radius", t.radius()}, {"values", values}};
}

json encode(const FinMeasure& mu) {
  json atoms = json::array();
  for (const auto& [g, w] : mu.atoms()) {
    atoms.push_back({{"g", encode_point(g)}, {"w", encode(w)}});
  }
  return {{"atoms", atoms}};
}

json encode(const MomentSpec& spec) {
  json a = json::array();
  for (const auto& [mu, fn] : spec.additive) {
    a.push_back({{"mu", encode_index(mu)}, {"fn", encode(fn)}});
  }
  return {{"r", spec.rank},
          {"N", spec.order},
          {"d", spec.dim},
          {"m", encode(spec.exponential)},
          {"a", a}};
}

json encode(const TabulatedSequence& seq) {
  json members = json::array();
  for (const auto& [alpha, t] : seq.members) {
    members.push_back({{"alpha", encode_index(alpha)}, {"table", encode(t)}});
  }
  return {{"r", seq.rank}, {"N", seq.order}, {"members", members}};
}

std::string status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::pass: return "pass";
    case VerifyStatus::zero: return "zero";
    case VerifyStatus::fail: return "fail";
  }
  return "fail";
}

json encode(const VerifyReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    json pts = json::array();
    for (const auto& p : f.points) pts.push_back(encode_point(p));
    failures.push_back({{"alpha", encode_index(f.alpha)},
                        {"points", pts},
                        {"lhs", encode(f.lhs)},
                        {"rhs", encode(f.rhs)}});
  }
  const char* gen = report.generator == GeneratorValue::one    ? "one"
                    : report.generator == GeneratorValue::zero ? "zero"
                                                               : "other";
  return {{"status", status_name(report.status)},
          {"generator_at_zero", gen},
          {"checked", report.checked},
          {"exhaustive", report.exhaustive},
          {"failure_count", report.failure_count},
          {"failures", failures}};
}

// ------------------------------------------------------------------ decode

Scalar decode_scalar(const json& j, const std::string& path) {
  Rational re = as_rational(field(j, "re", path), path + ".re");
  Rational im = j.contains("im") ? as_rational(j["im"], path + ".im") : Rational(0);
  return Scalar(re, im);
}

Exponential decode_exponential(const json& j, const std::string& path) {
  auto bases = scalar_list(array_field(j, "bases", path), path + ".bases");
  if (bases.empty()) bad(path + ".bases", "expected at least one base");
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i].is_zero()) {
      bad(path + ".bases[" + std::to_string(i) + "]", "exponential base must be nonzero");
    }
  }
  return Exponential(std::move(bases));
}

AdditiveFn decode_additive(const json& j, const std::string& path) {
  auto vals = scalar_list(array_field(j, "gen_values", path), path + ".gen_values");
  if (vals.empty()) bad(path + ".gen_values", "expected at least one value");
  return AdditiveFn(std::move(vals));
}

TabulatedFn decode_table(const json& j, const std::string& path) {
  auto d = as_count(field(j, "d", path), path + ".d");
  auto radius = as_count(field(j, "radius", path), path + ".radius");
  if (d == 0) bad(path + ".d", "dimension must be positive");
  if (radius > 1000) bad(path + ".radius", "radius too large");
  TabulatedFn t(d, static_cast<std::int64_t>(radius));
  const auto& values = array_field(j, "values", path);
  std::set<GroupElement> seen;
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::string p = path + ".values[" + std::to_string(i) + "]";
    auto x = decode_point(field(values[i], "x", p), p + ".x");
    if (!t.contains(x)) bad(p + ".x", "point " + x.to_string() + " outside the box");
    if (!seen.insert(x).second) bad(p + ".x", "duplicate point " + x.to_string());
    t.set(x, decode_scalar(field(values[i], "v", p), p + ".v"));
  }
  if (seen.size() != t.size()) {
    bad(path + ".values", "table has holes: " + std::to_string(seen.size()) +
                              " of " + std::to_string(t.size()) + " box points given");
  }
  return t;
}

FinMeasure decode_measure(const json& j, std::size_t dim, const std::string& path) {
  FinMeasure mu(dim);
  const auto& atoms = array_field(j, "atoms", path);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    std::string p = path + ".atoms[" + std::to_string(i) + "]";
    auto g = decode_point(field(atoms[i], "g", p), p + ".g");
    if (g.dim() != dim) bad(p + ".g", "wrong dimension");
    mu.add_atom(g, decode_scalar(field(atoms[i], "w", p), p + ".w"));
  }
  return mu;
}

MomentSpec decode_spec(const json& j, const std::string& path) {
  MomentSpec spec;
  spec.rank = as_count(field(j, "r", path), path + ".r");
  spec.order = static_cast<std::uint32_t>(as_count(field(j, "N", path), path + ".N"));
  spec.dim = as_count(field(j, "d", path), path + ".d");
  spec.exponential = decode_exponential(field(j, "m", path), path + ".m");
  const auto& a = array_field(j, "a", path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::string p = path + ".a[" + std::to_string(i) + "]";
    auto mu = decode_index(field(a[i], "mu", p), p + ".mu");
    auto fn = decode_additive(field(a[i], "fn", p), p + ".fn");
    if (!spec.additive.emplace(std::move(mu), std::move(fn)).second) {
      bad(p + ".mu", "duplicate entry");
    }
  }
  try {
    spec.validate();
  } catch (const PreconditionError& e) {
    bad(path, e.what());
  }
  return spec;
}

TabulatedSequence decode_sequence(const json& j, const std::string& path) {
  TabulatedSequence seq;
  seq.rank = as_count(field(j, "r", path), path + ".r");
  seq.order = static_cast<std::uint32_t>(as_count(field(j, "N", path), path + ".N"));
  const auto& members = array_field(j, "members", path);
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::string p = path + ".members[" + std::to_string(i) + "]";
    auto alpha = decode_index(field(members[i], "alpha", p), p + ".alpha");
    auto t = decode_table(field(members[i], "table", p), p + ".table");
    if (!seq.members.emplace(std::move(alpha), std::move(t)).second) {
      bad(p + ".alpha", "duplicate member");
    }
  }
  try {
    seq.validate();
  } catch (const PreconditionError& e) {
    bad(path, e.what());
  }
  return seq;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError("malformed JSON at byte " + std::to_string(e.byte) + ": " +
                      e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace bellmoment::json
