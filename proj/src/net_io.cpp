#include "symnet/net_io.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace symnet {

namespace {

std::string exact(const Rational& x) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(x) << '/' << boost::multiprecision::denominator(x);
  return os.str();
}

int get_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) fail(ErrorKind::invalid_argument, std::string("net JSON: missing integer field '") + key + "'");
  return j[key].get<int>();
}

}  // namespace

nlohmann::json net_to_json(const DigitalNet& net) {
  nlohmann::json j;
  j["base"] = net.base().value();
  j["s"] = net.dim();
  j["m"] = net.m();
  j["n"] = net.n();
  auto& mats = j["matrices"] = nlohmann::json::array();
  for (const auto& c : net.matrices()) {
    auto rows = nlohmann::json::array();
    for (int r = 0; r < c.rows(); ++r) {
      const auto row = c.row(r);
      rows.push_back(std::vector<int>(row.begin(), row.end()));
    }
    mats.push_back(std::move(rows));
  }
  if (!net.has_zero_tails()) {
    auto& tails = j["tail_rows"] = nlohmann::json::array();
    for (const auto& c : net.matrices()) {
      std::vector<int> t(static_cast<std::size_t>(c.cols()), 0);
      const auto tr = c.tail_row();
      std::copy(tr.begin(), tr.end(), t.begin());
      tails.push_back(t);
    }
  }
  return j;
}

DigitalNet net_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorKind::invalid_argument, "net JSON: expected an object");
  const Base base(get_int(j, "base"));
  const int s = get_int(j, "s");
  const int m = get_int(j, "m");
  const int n = get_int(j, "n");
  if (!j.contains("matrices") || !j["matrices"].is_array() || static_cast<int>(j["matrices"].size()) != s)
    fail(ErrorKind::invalid_argument, "net JSON: 'matrices' must hold s matrices");
  const bool has_tails = j.contains("tail_rows");
  if (has_tails && (!j["tail_rows"].is_array() || static_cast<int>(j["tail_rows"].size()) != s))
    fail(ErrorKind::invalid_argument, "net JSON: 'tail_rows' must hold s rows");
  std::vector<GeneratingMatrix> mats;
  for (int idx = 0; idx < s; ++idx) {
    const auto& rows = j["matrices"][static_cast<std::size_t>(idx)];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) fail(ErrorKind::invalid_argument, "net JSON: matrix must have n rows");
    std::vector<Digit> entries;
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != m) fail(ErrorKind::invalid_argument, "net JSON: row must have m entries");
      for (const auto& v : row) {
        if (!v.is_number_integer()) fail(ErrorKind::invalid_argument, "net JSON: entries must be integers");
        const int e = v.get<int>();
        if (e < 0 || e >= base.value()) fail(ErrorKind::invalid_argument, "net JSON: entry outside Z_b");
        entries.push_back(static_cast<Digit>(e));
      }
    }
    std::vector<Digit> tail;
    if (has_tails) {
      const auto& t = j["tail_rows"][static_cast<std::size_t>(idx)];
      if (!t.is_array() || static_cast<int>(t.size()) != m) fail(ErrorKind::invalid_argument, "net JSON: tail row must have m entries");
      for (const auto& v : t) {
        const int e = v.get<int>();
        if (e < 0 || e >= base.value()) fail(ErrorKind::invalid_argument, "net JSON: entry outside Z_b");
        tail.push_back(static_cast<Digit>(e));
      }
    }
    mats.emplace_back(base, n, m, std::move(entries), std::move(tail));
  }
  return DigitalNet(base, std::move(mats));
}

void write_points_csv(std::ostream& os, std::span<const GVector> points) {
  os << "# schema=1\n";
  const std::size_t s = points.empty() ? 0 : points.front().dim();
  os << "index";
  for (std::size_t j = 1; j <= s; ++j) os << ",x" << j;
  for (std::size_t j = 1; j <= s; ++j) os << ",x" << j << "_decimal";
  os << '\n';
  os << std::setprecision(17);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto x = project(points[i]);
    os << i;
    for (const auto& v : x) os << ',' << exact(v);
    for (const auto& v : x) os << ',' << v.convert_to<double>();
    os << '\n';
  }
}

nlohmann::json points_to_json(std::span<const GVector> points) {
  auto arr = nlohmann::json::array();
  for (const auto& z : points) {
    auto p = nlohmann::json::array();
    for (const auto& v : project(z)) p.push_back(exact(v));
    arr.push_back(std::move(p));
  }
  return arr;
}

}  // namespace symnet
