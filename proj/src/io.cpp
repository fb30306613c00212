#include "eur/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "eur/states.hpp"

namespace eur {

namespace {

using nlohmann::json;

Complex parse_complex(const json& pair, const std::string& where) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
    throw ParseError(where + ": expected a [re, im] pair");
  }
  return {pair[0].get<double>(), pair[1].get<double>()};
}

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buffer.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

DensityOperator parse_state_json(std::string_view text) {
  const json doc = parse_json(text, "state file");
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("matrix")) {
    throw ParseError("state file: expected an object with 'dims' and 'matrix'");
  }
  const json& dims_json = doc["dims"];
  if (!dims_json.is_array() || dims_json.empty()) {
    throw ParseError("state file: 'dims' must be a non-empty integer list");
  }
  std::vector<std::size_t> dims;
  for (const auto& d : dims_json) {
    if (!d.is_number_integer() || d.get<long long>() <= 0) {
      throw ParseError("state file: 'dims' entries must be positive integers");
    }
    dims.push_back(d.get<std::size_t>());
  }
  const json& rows = doc["matrix"];
  if (!rows.is_array()) throw ParseError("state file: 'matrix' must be an array of rows");
  const std::size_t n = rows.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) {
      throw ParseError("state file: matrix is not square (row " + std::to_string(r) + ")");
    }
    for (std::size_t c = 0; c < n; ++c) {
      entries.push_back(parse_complex(
          rows[r][c], "state file: matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }
  }
  return DensityOperator(CMatrix(n, std::move(entries)), std::move(dims));
}

DensityOperator read_state_file(const std::filesystem::path& path) {
  return parse_state_json(read_text(path));
}

std::string state_to_json(const DensityOperator& rho) {
  json rows = json::array();
  const auto& m = rho.matrix();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  json doc = json::object();
  doc["dims"] = rho.dims();
  doc["matrix"] = std::move(rows);
  return doc.dump() + "\n";
}

void write_state_file(const std::filesystem::path& path, const DensityOperator& rho) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << state_to_json(rho);
  if (!out) throw IoError("cannot write " + path.string());
}

std::vector<ProjectiveBasis> parse_bases_json(std::string_view text) {
  const json doc = parse_json(text, "basis file");
  if (!doc.is_object() || !doc.contains("bases") || !doc["bases"].is_array()) {
    throw ParseError("basis file: expected an object with a 'bases' array");
  }
  std::vector<ProjectiveBasis> out;
  for (const auto& entry : doc["bases"]) {
    if (!entry.is_object() || !entry.contains("label") || !entry["label"].is_string() ||
        !entry.contains("vectors") || !entry["vectors"].is_array()) {
      throw ParseError("basis file: each basis needs a string 'label' and a 'vectors' array");
    }
    const auto label = entry["label"].get<std::string>();
    std::vector<CVector> vectors;
    for (const auto& v : entry["vectors"]) {
      if (!v.is_array()) throw ParseError("basis file: vector of '" + label + "' is not an array");
      CVector vec;
      for (const auto& z : v) vec.push_back(parse_complex(z, "basis file: '" + label + "'"));
      vectors.push_back(std::move(vec));
    }
    out.emplace_back(label, std::move(vectors));
  }
  if (out.empty()) throw ParseError("basis file: no bases");
  return out;
}

std::vector<ProjectiveBasis> resolve_measurements(const std::string& text) {
  const auto pauli = pauli_bases();
  auto pauli_by_label = [&](const std::string& label) -> const ProjectiveBasis* {
    for (const auto& b : pauli) {
      if (b.label() == label) return &b;
    }
    return nullptr;
  };

  std::vector<std::string> labels;
  if (text.rfind("pauli-", 0) == 0) {
    for (char c : text.substr(6)) labels.emplace_back(1, c);
    if (labels.empty()) throw ParseError("measurement list '" + text + "' names no bases");
  } else if (std::filesystem::is_regular_file(text)) {
    return parse_bases_json(read_text(text));
  } else {
    for (const auto& token : split(text, ',')) labels.push_back(trim(token));
  }

  std::vector<ProjectiveBasis> out;
  for (const auto& label : labels) {
    const auto* basis = pauli_by_label(label);
    if (basis == nullptr) {
      throw ParseError("measurement list: unknown basis '" + label +
                       "' (expected x, y, z, a pauli-* name, or a basis file)");
    }
    out.push_back(*basis);
  }
  return out;
}

MeasurementScenario parse_partition(const std::string& text,
                                    const std::vector<ProjectiveBasis>& measurements) {
  std::map<std::string, std::size_t> by_label;
  for (std::size_t k = 0; k < measurements.size(); ++k) {
    if (!by_label.emplace(measurements[k].label(), k).second) {
      throw ParseError("partition: measurement label '" + measurements[k].label() +
                       "' is not unique");
    }
  }

  std::vector<std::size_t> for_b;
  std::vector<std::size_t> for_c;
  std::vector<bool> used(measurements.size(), false);
  bool seen_b = false;
  bool seen_c = false;
  for (const auto& raw_clause : split(text, ';')) {
    const std::string clause = trim(raw_clause);
    const auto colon = clause.find(':');
    if (colon == std::string::npos) {
      throw ParseError("partition: clause '" + clause + "' lacks a ':'");
    }
    const std::string memory = trim(clause.substr(0, colon));
    std::vector<std::size_t>* target = nullptr;
    if (memory == "B" && !seen_b) {
      target = &for_b;
      seen_b = true;
    } else if (memory == "C" && !seen_c) {
      target = &for_c;
      seen_c = true;
    } else {
      throw ParseError("partition: bad or repeated memory name '" + memory +
                       "' (expected B or C once each)");
    }
    const std::string list = clause.substr(colon + 1);
    if (trim(list).empty()) continue;
    for (const auto& raw_label : split(list, ',')) {
      const std::string label = trim(raw_label);
      const auto it = by_label.find(label);
      if (it == by_label.end()) {
        throw ParseError("partition: unknown measurement label '" + label + "'");
      }
      if (used[it->second]) {
        throw ParseError("partition: measurement label '" + label + "' used twice");
      }
      used[it->second] = true;
      target->push_back(it->second);
    }
  }
  for (std::size_t k = 0; k < measurements.size(); ++k) {
    if (!used[k]) {
      throw ParseError("partition: measurement '" + measurements[k].label() +
                       "' is not assigned to a memory");
    }
  }

  std::vector<ProjectiveBasis> ordered;
  for (std::size_t k : for_b) ordered.push_back(measurements[k]);
  for (std::size_t k : for_c) ordered.push_back(measurements[k]);
  return MeasurementScenario(std::move(ordered), for_b.size());
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  for (const auto& raw : split(text, ',')) {
    const std::string token = trim(raw);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0) {
      throw ParseError("dims: bad entry '" + token + "'");
    }
    dims.push_back(value);
  }
  if (dims.empty()) throw ParseError("dims: empty list");
  return dims;
}

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    const double fields[] = {r.param, r.U,    r.L1,   r.L2,         r.delta,
                             r.delta_prime,   r.S_AB, r.S_AC,       r.I_AB,
                             r.I_AC,          r.holevo_sum, r.slack_L1, r.slack_L2};
    bool first = true;
    for (double f : fields) {
      if (!first) out << ',';
      out << format_real(f);
      first = false;
    }
    out << '\n';
  }
}

}  // namespace eur
