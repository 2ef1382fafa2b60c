#include "unicomp/json_io.h"

#include <cmath>
#include <cstdio>
#include <string>

#include "unicomp/error.h"

namespace unicomp {
namespace {

void append_float(std::string& out, double x) {
  if (!std::isfinite(x)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  out += s;
}

void dump_into(std::string& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        dump_into(out, it.value());
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        dump_into(out, v);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      append_float(out, j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

std::vector<std::vector<double>> read_square(const Json& j, const char* key,
                                             int& d) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    parse_fail(std::string("missing array field \"") + key + "\"");
  }
  const Json& rows = j.at(key);
  const int n = static_cast<int>(rows.size());
  if (d < 0) d = n;
  if (n != d) {
    parse_fail(std::string("field \"") + key + "\" has " + std::to_string(n) +
               " rows, expected " + std::to_string(d));
  }
  std::vector<std::vector<double>> out;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != d) {
      parse_fail(std::string("field \"") + key + "\" is not a square array");
    }
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) parse_fail(std::string("non-numeric entry in \"") + key + "\"");
      r.push_back(v.get<double>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

Json rows_of(const ComplexMatrix& m, bool imag) {
  Json rows = Json::array();
  for (int r = 1; r <= m.dim(); ++r) {
    Json row = Json::array();
    for (int c = 1; c <= m.dim(); ++c) {
      row.push_back(imag ? m(r, c).imag() : m(r, c).real());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  dump_into(out, j);
  return out;
}

Json to_json(const ParamMatrix& params) {
  const int d = params.dim();
  Json rows = Json::array();
  for (int m = 1; m <= d; ++m) {
    Json row = Json::array();
    for (int n = 1; n <= d; ++n) row.push_back(static_cast<double>(params(m, n)));
    rows.push_back(std::move(row));
  }
  return Json{{"group", std::string(group_tag(params.group()))}, {"d", d}, {"lambda", rows}};
}

ParamMatrix param_matrix_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("parameter record must be a JSON object");
  Group group = Group::kUnitary;
  if (j.contains("group")) {
    if (!j.at("group").is_string()) parse_fail("\"group\" must be a string");
    group = parse_group(j.at("group").get<std::string>());
  }
  int d = -1;
  if (j.contains("d")) {
    if (!j.at("d").is_number_integer()) parse_fail("\"d\" must be an integer");
    d = j.at("d").get<int>();
  }
  const auto lambda = read_square(j, "lambda", d);
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "dim must be >= 2");
  ParamMatrix params(d, group);
  for (int m = 1; m <= d; ++m)
    for (int n = 1; n <= d; ++n)
      if (params.has(m, n)) params.set(m, n, lambda[m - 1][n - 1]);
  return params;
}

Json to_json(const ComplexMatrix& m) {
  return Json{{"d", m.dim()}, {"re", rows_of(m, false)}, {"im", rows_of(m, true)}};
}

Json to_json_entries(const ComplexMatrix& m) {
  return Json{{"re", rows_of(m, false)}, {"im", rows_of(m, true)}};
}

ComplexMatrix complex_matrix_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("matrix record must be a JSON object");
  int d = -1;
  for (const char* key : {"d", "dim"}) {
    if (j.contains(key)) {
      if (!j.at(key).is_number_integer()) {
        parse_fail(std::string("\"") + key + "\" must be an integer");
      }
      d = j.at(key).get<int>();
    }
  }
  const auto re = read_square(j, "re", d);
  std::vector<std::vector<double>> im;
  if (j.contains("im")) {
    im = read_square(j, "im", d);
  } else {
    im.assign(static_cast<std::size_t>(d), std::vector<double>(static_cast<std::size_t>(d), 0.0));
  }
  if (d < 1) parse_fail("empty matrix");
  ComplexMatrix m(d);
  for (int r = 1; r <= d; ++r)
    for (int c = 1; c <= d; ++c) m(r, c) = Complex(re[r - 1][c - 1], im[r - 1][c - 1]);
  return m;
}

std::vector<WeightedUnitary> weighted_set_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("weighted set must be a JSON array");
  std::vector<WeightedUnitary> out;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("w") || !item.at("w").is_number()) {
      parse_fail("each set element needs a numeric \"w\"");
    }
    out.push_back({complex_matrix_from_json(item), item.at("w").get<double>()});
  }
  return out;
}

Json to_json(const DesignReport& report) {
  Json per_entry = Json::array();
  for (const auto& row : report.per_entry) per_entry.push_back(row);
  return Json{{"d", report.d},
              {"t", report.t},
              {"required", to_string(report.required)},
              {"required_approx", report.required_approx},
              {"per_entry", per_entry},
              {"max_abs_dev", report.max_abs_dev},
              {"tolerance", report.tolerance},
              {"pass", report.pass},
              {"necessary_only", report.necessary_only}};
}

}  // namespace unicomp
