#include "blowuplab/io.hpp"

#include <fstream>
#include <sstream>

namespace blowuplab {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a rational as \"p/q\" string or integer");
}

std::vector<RationalVector> vectors_from_json(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array");
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::string at = where + "[" + std::to_string(i + 1) + "]";
    if (!v[i].is_array()) throw InputError(at + ": expected an array");
    RationalVector row;
    for (std::size_t j = 0; j < v[i].size(); ++j) row.push_back(rational_from_json(v[i][j], at + "[" + std::to_string(j + 1) + "]"));
    out.push_back(std::move(row));
  }
  return out;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json rational_vector_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

}  // namespace

Instance instance_from_json(const json& j, const std::string& fallback_id) {
  if (!j.is_object()) throw InputError("top level: expected an object");
  if (!j.contains("k")) throw InputError("missing field \"k\"");
  if (!j.contains("forms")) throw InputError("missing field \"forms\"");
  if (!j["k"].is_number_unsigned()) throw InputError("field \"k\": expected a positive integer");
  std::size_t k = j["k"].get<std::size_t>();
  auto forms = vectors_from_json(j["forms"], "forms");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw InputError("field \"labels\": expected an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw InputError("field \"labels\": expected an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  Instance out;
  out.id = fallback_id;
  if (j.contains("id")) {
    if (!j["id"].is_string()) throw InputError("field \"id\": expected a string");
    out.id = j["id"].get<std::string>();
  }
  try {
    bool stretched = j.contains("multiplicities") || j.contains("coefficients");
    if (!stretched) {
      out.simple.emplace(k, std::move(forms), std::move(labels));
      return out;
    }
    if (!j.contains("multiplicities") || !j.contains("coefficients"))
      throw InputError("stretched input needs both \"multiplicities\" and \"coefficients\"");
    std::vector<std::size_t> mult;
    if (!j["multiplicities"].is_array()) throw InputError("field \"multiplicities\": expected an array");
    for (const auto& m : j["multiplicities"]) {
      if (!m.is_number_unsigned()) throw InputError("field \"multiplicities\": expected positive integers");
      mult.push_back(m.get<std::size_t>());
    }
    auto coeffs = vectors_from_json(j["coefficients"], "coefficients");
    StretchedArrangement b{Arrangement(k, std::move(forms), std::move(labels)), std::move(mult), std::move(coeffs)};
    b.validate();
    out.stretched.emplace(std::move(b));
    return out;
  } catch (const ArrangementError& e) {
    throw InputError(e.what());
  }
}

Instance parse_instance(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    std::string what = e.what();
    auto pos = what.find("syntax error");
    if (pos != std::string::npos) what = what.substr(pos);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON: " + what);
  }
  std::string id = source;
  if (auto slash = id.find_last_of('/'); slash != std::string::npos) id = id.substr(slash + 1);
  if (auto dot = id.rfind(".json"); dot != std::string::npos && dot + 5 == id.size()) id = id.substr(0, dot);
  try {
    return instance_from_json(j, id);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), path);
}

json to_json(const Arrangement& a) {
  json out;
  out["k"] = a.k();
  json forms = json::array();
  for (const auto& f : a.forms()) forms.push_back(rational_vector_json(f));
  out["forms"] = std::move(forms);
  if (!a.labels().empty()) out["labels"] = a.labels();
  return out;
}

json to_json(const StretchedArrangement& b) {
  json out = to_json(b.support);
  out["multiplicities"] = b.multiplicities;
  json coeffs = json::array();
  for (const auto& c : b.coefficients) coeffs.push_back(rational_vector_json(c));
  out["coefficients"] = std::move(coeffs);
  return out;
}

json to_json(const HilbertSeries& s) {
  json num = json::array();
  for (const auto& c : s.numerator) num.push_back(c.get_str());
  return json{{"numerator", num}, {"denominator_exponent", s.denom_exponent}};
}

json to_json(const BigradedSeries& s) {
  unsigned du = 0;
  unsigned dv = 0;
  for (const auto& [e, c] : s.numerator) {
    du = std::max(du, e.first + 1);
    dv = std::max(dv, e.second + 1);
  }
  json rows = json::array();
  for (unsigned a = 0; a < du; ++a) {
    json row = json::array();
    for (unsigned b = 0; b < dv; ++b) {
      auto it = s.numerator.find({a, b});
      row.push_back(it == s.numerator.end() ? std::string("0") : it->second.get_str());
    }
    rows.push_back(std::move(row));
  }
  return json{{"numerator", rows}, {"u_exponent", s.u_exponent}, {"v_exponent", s.v_exponent}};
}

}  // namespace blowuplab
