#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "framekit/dilation.hpp"
#include "framekit/hilbert.hpp"
#include "framekit/pasf.hpp"
#include "framekit/report.hpp"

namespace framekit::io {

using Json = nlohmann::ordered_json;

// Matrix literal: {"rows": r, "cols": c, "entries": [row-major]}.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// Nested row arrays. The caller supplies the shape, since an n x 0 matrix
// serializes as n empty rows.
Json rows_to_json(const Matrix& m);
Matrix rows_from_json(const Json& j, std::size_t rows, std::size_t cols, const char* field);

/// A number, or the string "inf".
Json exponent_to_json(double p);
double exponent_from_json(const Json& j);

/// {"space_dim", "seq_dim", "p", "q", "functionals" (n x d rows),
///  "vectors" (d x n rows)}
Json pair_to_json(const FramePair& pair);
FramePair pair_from_json(const Json& j);

/// {"vectors": d x n rows}
Json hilbert_frame_to_json(const HilbertFrame& frame);
HilbertFrame hilbert_frame_from_json(const Json& j);

/// {"base": pair, "complement_basis": n x (n-d) rows,
///  "omega": [[x-part], [y-part]] per element, "g": n x (d+n) rows,
///  "s_g_omega": n x n rows, "p": exponent}
Json bundle_to_json(const DilationBundle& bundle);
DilationBundle bundle_from_json(const Json& j);

/// {"overall": bool, "checks": [{name, defect, threshold, pass}, ...],
///  "defects": {name: defect, ...}}
Json report_to_json(const VerificationReport& report);

/// Two-space indented with a trailing newline. Doubles are written in the
/// shortest form that reads back to the same binary64 value.
std::string dump(const Json& j);

/// Throws ParseError on I/O failure or malformed JSON.
Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace framekit::io
