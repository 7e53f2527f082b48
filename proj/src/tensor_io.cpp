// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0

#include "tensor_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace smwt {

namespace {

using nlohmann::json;

Dims parse_dims(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing \"") + key + "\"");
  if (!it->is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  Dims dims;
  for (const json& d : *it) {
    if (!d.is_number_integer() || d.get<long long>() < 1) {
      throw ParseError(std::string("\"") + key + "\" entries must be positive integers");
    }
    dims.push_back(d.get<std::size_t>());
  }
  return dims;
}

double parse_component(const json& v) {
  if (!v.is_number()) throw ParseError("entry components must be numbers");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError("entry components must be finite");
  return x;
}

void require_two_by_two(const PairedShape& s) {
  if (s.row_order() != 2 || s.col_order() != 2) {
    throw ShapeError("block display needs a (I1,I2|J1,J2) shape, got " + s.str());
  }
}

}  // namespace

EinsteinTensor parse_tensor_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    // out_of_range covers numeric overflow such as 1e999.
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("tensor file must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "comment") {
      if (!value.is_string()) throw ParseError("\"comment\" must be a string");
    } else if (key != "row_dims" && key != "col_dims" && key != "entries") {
      throw ParseError("unknown key \"" + key + "\"");
    }
  }
  Dims rows = parse_dims(j, "row_dims");
  Dims cols = parse_dims(j, "col_dims");

  auto it = j.find("entries");
  if (it == j.end()) throw ParseError("missing \"entries\"");
  if (!it->is_array()) throw ParseError("\"entries\" must be an array");
  std::vector<Scalar> entries;
  entries.reserve(it->size());
  for (const json& e : *it) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each entry must be [re, im]");
    entries.emplace_back(parse_component(e[0]), parse_component(e[1]));
  }
  try {
    return EinsteinTensor(PairedShape(std::move(rows), std::move(cols)), std::move(entries));
  } catch (const ShapeError& e) {
    throw ParseError(e.what());
  }
}

EinsteinTensor load_tensor(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_tensor_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, end);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string to_tensor_json(const EinsteinTensor& t) {
  auto dims = [](const Dims& d) {
    std::string s = "[";
    for (std::size_t k = 0; k < d.size(); ++k) s += (k ? ", " : "") + std::to_string(d[k]);
    return s + "]";
  };
  std::string out = "{\n  \"row_dims\": " + dims(t.shape().row_dims()) +
                    ",\n  \"col_dims\": " + dims(t.shape().col_dims()) + ",\n  \"entries\": [";
  auto e = t.entries();
  for (std::size_t k = 0; k < e.size(); ++k) {
    out += k ? ",\n    [" : "\n    [";
    out += format_double(e[k].real()) + ", " + format_double(e[k].imag()) + "]";
  }
  out += e.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

void save_tensor(const EinsteinTensor& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << to_tensor_json(t);
  if (!out.flush()) throw IoError("write failed for " + path);
}

EinsteinTensor from_block_display(const PairedShape& shape, const Matrix& display) {
  require_two_by_two(shape);
  const std::size_t i1 = shape.row_dims()[0], i2 = shape.row_dims()[1];
  const std::size_t j1 = shape.col_dims()[0], j2 = shape.col_dims()[1];
  if (display.rows() != i1 * j1 || display.cols() != i2 * j2) {
    throw ShapeError("block display of " + shape.str() + " must be " +
                     std::to_string(i1 * j1) + "x" + std::to_string(i2 * j2));
  }
  Matrix m(shape.row_size(), shape.col_size());
  for (std::size_t a = 0; a < i1; ++a)
    for (std::size_t b = 0; b < i2; ++b)
      for (std::size_t c = 0; c < j1; ++c)
        for (std::size_t d = 0; d < j2; ++d)
          m(a + i1 * b, c + j1 * d) = display(a + i1 * c, b + i2 * d);
  return EinsteinTensor(shape, std::move(m));
}

Matrix to_block_display(const EinsteinTensor& t) {
  const PairedShape& shape = t.shape();
  require_two_by_two(shape);
  const std::size_t i1 = shape.row_dims()[0], i2 = shape.row_dims()[1];
  const std::size_t j1 = shape.col_dims()[0], j2 = shape.col_dims()[1];
  Matrix display(i1 * j1, i2 * j2);
  const Matrix& m = t.unfolded();
  for (std::size_t a = 0; a < i1; ++a)
    for (std::size_t b = 0; b < i2; ++b)
      for (std::size_t c = 0; c < j1; ++c)
        for (std::size_t d = 0; d < j2; ++d)
          display(a + i1 * c, b + i2 * d) = m(a + i1 * b, c + j1 * d);
  return display;
}

void write_sweep_csv(std::ostream& out, const std::vector<BoundReport>& rows) {
  auto g17 = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  out << kSweepCsvHeader << '\n';
  for (const BoundReport& r : rows) {
    out << g17(r.eps_A) << ',' << g17(r.eps_D) << ',' << g17(r.alpha) << ',' << g17(r.norm_A)
        << ',' << g17(r.norm_A_pinv) << ',' << g17(r.bound) << ','
        << (r.measured_error ? g17(*r.measured_error) : std::string()) << '\n';
  }
}

}  // namespace smwt
