#pragma once

#include <json.hpp>
#include <sstream>
#include <string>

#include "lgspectra/cyclotomic.hpp"
#include "lgspectra/rational.hpp"
#include "lgspectra/real.hpp"

namespace lgs {

using json = nlohmann::json;  // std::map-backed: keys emit in lexicographic order

inline json to_json(const Rational& q) { return q.to_string(); }

inline json to_json(const Real& r) { return r.to_string(); }

inline json to_json(const Complex& c) { return json::array({c.re.to_string(), c.im.to_string()}); }

inline json to_json(const Cyclotomic& c) {
  json coeffs = json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(q.to_string());
  return json{{"order", c.order()}, {"coeffs", coeffs}};
}

// Machine-readable result document, schema v1: an input echo, named result
// sections, and a verdict map. JSON output is stable-key-ordered and
// newline-terminated.
class Report {
 public:
  explicit Report(const std::string& input) {
    doc_["schemaVersion"] = "1";
    doc_["input"] = input;
    doc_["sections"] = json::object();
    doc_["verdicts"] = json::object();
  }

  void section(const std::string& name, json value) {
    doc_["sections"][name] = std::move(value);
  }

  void verdict(const std::string& name, bool pass, const std::string& detail = "") {
    doc_["verdicts"][name] = json{{"status", pass ? "pass" : "fail"}, {"detail", detail}};
    all_pass_ = all_pass_ && pass;
  }

  bool all_pass() const { return all_pass_; }
  const json& doc() const { return doc_; }

  std::string to_json_string() const { return doc_.dump(2) + "\n"; }

  static json parse(const std::string& text) { return json::parse(text); }

  std::string to_text() const {
    std::ostringstream os;
    os << "input: " << doc_["input"].get<std::string>() << "\n";
    for (const auto& [name, value] : doc_["sections"].items()) {
      os << "\n" << name << "\n";
      render_value(os, value, "  ");
    }
    if (!doc_["verdicts"].empty()) {
      os << "\nverdicts\n";
      size_t width = 0;
      for (const auto& [name, v] : doc_["verdicts"].items()) width = std::max(width, name.size());
      for (const auto& [name, v] : doc_["verdicts"].items()) {
        bool pass = v["status"] == "pass";
        os << "  [" << (pass ? "PASS" : "FAIL") << "] " << name;
        std::string detail = v["detail"].get<std::string>();
        if (!detail.empty()) {
          os << std::string(width - name.size() + 2, ' ') << detail;
        }
        os << "\n";
      }
    }
    return os.str();
  }

 private:
  static bool is_matrix(const json& value) {
    return value.is_array() && !value.empty() && value[0].is_array();
  }

  static void render_value(std::ostringstream& os, const json& value,
                           const std::string& indent) {
    if (value.is_object()) {
      size_t width = 0;
      for (const auto& [k, v] : value.items()) width = std::max(width, k.size());
      for (const auto& [k, v] : value.items()) {
        if (v.is_object() || is_matrix(v)) {
          os << indent << k << ":\n";
          render_value(os, v, indent + "  ");
        } else {
          os << indent << k << std::string(width - k.size() + 1, ' ') << scalar(v) << "\n";
        }
      }
    } else if (is_matrix(value)) {
      // aligned columns
      std::vector<std::vector<std::string>> cells;
      std::vector<size_t> width;
      for (const auto& row : value) {
        cells.emplace_back();
        for (size_t j = 0; j < row.size(); ++j) {
          cells.back().push_back(scalar(row[j]));
          if (width.size() <= j) width.push_back(0);
          width[j] = std::max(width[j], cells.back().back().size());
        }
      }
      for (const auto& row : cells) {
        os << indent << "[";
        for (size_t j = 0; j < row.size(); ++j)
          os << (j ? " " : "") << std::string(width[j] - row[j].size(), ' ') << row[j];
        os << "]\n";
      }
    } else {
      os << indent << scalar(value) << "\n";
    }
  }

  static std::string scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string out = "[";
      for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar(v[i]);
      return out + "]";
    }
    return v.dump();
  }

  json doc_;
  bool all_pass_ = true;
};

}  // namespace lgs
