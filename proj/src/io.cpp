#include "framekit/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "framekit/error.hpp"

namespace framekit::io {

namespace {

std::size_t require_size(const Json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_unsigned()) {
    throw ParseError(std::string("field '") + field + "' must be a nonnegative integer");
  }
  return j.at(field).get<std::size_t>();
}

double require_number(const Json& j, const char* field) {
  if (!j.is_number()) throw ParseError(std::string("field '") + field + "' must hold numbers");
  return j.get<double>();
}

Json defect_value(double v) {
  if (std::isinf(v)) return "inf";
  if (std::isnan(v)) return "nan";
  return v;
}

template <typename F>
auto rethrow_as_parse_error(F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (double v : m.entries()) entries.push_back(v);
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j) {
  return rethrow_as_parse_error([&] {
    if (!j.is_object()) throw ParseError("matrix literal must be an object");
    const std::size_t rows = require_size(j, "rows");
    const std::size_t cols = require_size(j, "cols");
    const Json& e = j.at("entries");
    if (!e.is_array()) throw ParseError("'entries' must be an array");
    std::vector<double> data;
    data.reserve(e.size());
    for (const auto& v : e) data.push_back(require_number(v, "entries"));
    return Matrix(rows, cols, std::move(data));
  });
}

Json rows_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix rows_from_json(const Json& j, std::size_t rows, std::size_t cols, const char* field) {
  if (!j.is_array() || j.size() != rows) {
    throw ParseError(std::string("'") + field + "' must be an array of " + std::to_string(rows) +
                     " rows");
  }
  std::vector<double> data;
  data.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) {
      throw ParseError(std::string("each row of '") + field + "' must have " +
                       std::to_string(cols) + " entries");
    }
    for (const auto& v : row) data.push_back(require_number(v, field));
  }
  return rethrow_as_parse_error([&] { return Matrix(rows, cols, std::move(data)); });
}

Json exponent_to_json(double p) {
  if (std::isinf(p)) return "inf";
  return p;
}

double exponent_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInfinity;
    throw ParseError("exponent string must be \"inf\"");
  }
  if (!j.is_number()) throw ParseError("exponent must be a number or \"inf\"");
  const double p = j.get<double>();
  rethrow_as_parse_error([p] {
    require_exponent(p);
    return 0;
  });
  return p;
}

Json pair_to_json(const FramePair& pair) {
  return Json{{"space_dim", pair.space_dim()},
              {"seq_dim", pair.seq_dim()},
              {"p", exponent_to_json(pair.p())},
              {"q", exponent_to_json(pair.q())},
              {"functionals", rows_to_json(pair.functionals())},
              {"vectors", rows_to_json(pair.vectors())}};
}

FramePair pair_from_json(const Json& j) {
  return rethrow_as_parse_error([&] {
    if (!j.is_object()) throw ParseError("frame pair must be a JSON object");
    const std::size_t d = require_size(j, "space_dim");
    const std::size_t n = require_size(j, "seq_dim");
    const double p = exponent_from_json(j.at("p"));
    const double q = j.contains("q") ? exponent_from_json(j.at("q")) : p;
    Matrix f = rows_from_json(j.at("functionals"), n, d, "functionals");
    Matrix t = rows_from_json(j.at("vectors"), d, n, "vectors");
    return FramePair(std::move(f), std::move(t), p, q);
  });
}

Json hilbert_frame_to_json(const HilbertFrame& frame) {
  return Json{{"vectors", rows_to_json(frame.vectors)}};
}

HilbertFrame hilbert_frame_from_json(const Json& j) {
  return rethrow_as_parse_error([&] {
    if (!j.is_object() || !j.contains("vectors") || !j.at("vectors").is_array()) {
      throw ParseError("Hilbert frame must be an object with a 'vectors' array");
    }
    const Json& v = j.at("vectors");
    const std::size_t d = v.size();
    if (d == 0 || !v.front().is_array()) throw ParseError("'vectors' must be a nonempty row array");
    return HilbertFrame{rows_from_json(v, d, v.front().size(), "vectors")};
  });
}

Json bundle_to_json(const DilationBundle& b) {
  Json omega = Json::array();
  for (std::size_t k = 0; k < b.seq_dim(); ++k) {
    const SumElement w = b.omega(k);
    omega.push_back(Json::array({Json(w.x), Json(w.y)}));
  }
  return Json{{"base", pair_to_json(b.base)},
              {"complement_basis", rows_to_json(b.complement_basis)},
              {"omega", std::move(omega)},
              {"g", rows_to_json(b.g)},
              {"s_g_omega", rows_to_json(b.s_g_omega)},
              {"p", exponent_to_json(b.base.p())}};
}

DilationBundle bundle_from_json(const Json& j) {
  return rethrow_as_parse_error([&] {
    if (!j.is_object()) throw ParseError("dilation bundle must be a JSON object");
    FramePair base = pair_from_json(j.at("base"));
    const std::size_t d = base.space_dim();
    const std::size_t n = base.seq_dim();
    if (n < d) throw ParseError("bundle base pair has seq_dim < space_dim");
    const double p = exponent_from_json(j.at("p"));
    if (!(p == base.p())) throw ParseError("bundle 'p' disagrees with the base pair");

    Matrix w = rows_from_json(j.at("complement_basis"), n, n - d, "complement_basis");
    const Json& omega = j.at("omega");
    if (!omega.is_array() || omega.size() != n) {
      throw ParseError("'omega' must list " + std::to_string(n) + " elements");
    }
    Matrix ox(d, n);
    Matrix oy(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const Json& e = omega.at(k);
      if (!e.is_array() || e.size() != 2) throw ParseError("omega element must be [x-part, y-part]");
      const Matrix x = rows_from_json(Json::array({e.at(0)}), 1, d, "omega x-part");
      const Matrix y = rows_from_json(Json::array({e.at(1)}), 1, n, "omega y-part");
      ox.set_col(k, x.entries());
      oy.set_col(k, y.entries());
    }
    Matrix g = rows_from_json(j.at("g"), n, d + n, "g");
    Matrix s = rows_from_json(j.at("s_g_omega"), n, n, "s_g_omega");
    return DilationBundle{std::move(base), std::move(w), std::move(ox), std::move(oy), std::move(g),
                          std::move(s)};
  });
}

Json report_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  Json defects = Json::object();
  for (const auto& c : report.checks()) {
    checks.push_back(Json{{"name", c.name},
                          {"defect", defect_value(c.defect)},
                          {"threshold", defect_value(c.threshold)},
                          {"pass", c.pass}});
    defects[c.name] = defect_value(c.defect);
  }
  return Json{{"overall", report.overall()}, {"checks", std::move(checks)}, {"defects", std::move(defects)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
  if (!out) throw ParseError("write failed for " + path.string());
}

}  // namespace framekit::io
