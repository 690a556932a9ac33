#include "qemlab/games/csvio.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string_view>
#include <system_error>

#include "qemlab/common.hpp"

namespace qemlab::games {

namespace {

void check_field(std::string_view field) {
  require(field.find_first_of(",\"\r\n") == std::string_view::npos,
          "CSV string fields must not contain separators or line breaks");
}

}  // namespace

std::string format_double(double v) {
  require(std::isfinite(v), "CSV numeric fields must be finite");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  require(res.ec == std::errc{}, "double formatting failed");
  return std::string(buf, res.ptr);
}

std::string csv_header() {
  return "experiment,name,n,variant,q_e,q_p,j,trials,p_world1,p_world0,advantage,"
         "ci_halfwidth,bound,seed,wall_time_ms,vacuous";
}

std::string csv_line(const ResultRow& r) {
  check_field(r.experiment);
  check_field(r.name);
  check_field(r.variant);
  std::string line;
  line.reserve(160);
  line += r.experiment;
  line += ',';
  line += r.name;
  line += ',';
  line += std::to_string(r.n);
  line += ',';
  line += r.variant;
  line += ',';
  line += format_double(r.q_e);
  line += ',';
  line += format_double(r.q_p);
  line += ',';
  line += std::to_string(r.j);
  line += ',';
  line += std::to_string(r.trials);
  line += ',';
  line += format_double(r.p_world1);
  line += ',';
  line += format_double(r.p_world0);
  line += ',';
  line += format_double(r.advantage);
  line += ',';
  line += format_double(r.ci_halfwidth);
  line += ',';
  line += format_double(r.bound);
  line += ',';
  line += std::to_string(r.seed);
  line += ',';
  line += std::to_string(r.wall_time_ms);
  line += ',';
  line += r.vacuous ? "true" : "false";
  return line;
}

void write_csv(std::ostream& os, std::span<const ResultRow> rows) {
  os << csv_header() << '\n';
  for (const ResultRow& r : rows) os << csv_line(r) << '\n';
}

}  // namespace qemlab::games
