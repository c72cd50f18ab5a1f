#pragma once

#include <stdexcept>
#include <string>

#include "tangents/counter.hpp"
#include "tangents/search.hpp"

namespace tangents {

/// Input that does not match the quadruple schema; the message names the
/// offending field path.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file that cannot be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `{"triangles": [[[x,y,z] ×3] ×4]}` where each coordinate is a JSON
/// integer, a decimal string, or "p/q".
QuadrupleOfTriangles parse_quadruple_json(const std::string& text);
QuadrupleOfTriangles read_quadruple_file(const std::string& path);
std::string quadruple_to_json(const QuadrupleOfTriangles& q);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string report_to_json(const TangentReport& report);
std::string verdict_to_json(const GeneralPositionVerdict& verdict, int f_count, int i_count);
std::string stab_report_json(const QuadrupleOfTriangles& q);

std::string summary_csv(const Summary& s, const Histogram& h);
std::string summary_json(const Summary& s, const Histogram& h, const SearchConfig& cfg);

}  // namespace tangents
