#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include <nlohmann/json.hpp>

#include "bezout/backends.hpp"
#include "bezout/error.hpp"

namespace bezout {
namespace detail {
extern const char* const kCeilingTableJson;
}

namespace {

struct CeilingTable {
  std::string version;
  std::map<std::pair<int, int>, double> entries;
};

const CeilingTable& table() {
  static const CeilingTable t = [] {
    CeilingTable out;
    const auto j = nlohmann::json::parse(detail::kCeilingTableJson);
    out.version = j.value("version", "unknown");
    for (const auto& e : j.at("entries"))
      out.entries[{e.at("N").get<int>(), e.at("K").get<int>()}] = e.at("ceiling").get<double>();
    return out;
  }();
  return t;
}

}  // namespace

std::optional<double> c_ceiling(int N, int K) {
  const auto& t = table();
  const auto it = t.entries.find({N, K});
  if (it == t.entries.end()) return std::nullopt;
  return it->second;
}

std::string c_ceiling_table_version() { return table().version; }

MainBoundCertificate certify_main_bound(const Polynomial& A, const Polynomial& B, const BezoutSolution& solution,
                                        double delta, std::optional<double> ceiling) {
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "certification needs delta > 0");
  MainBoundCertificate c;
  c.delta = delta;
  c.norm_R = coeff_norm(solution.R);
  c.norm_S = coeff_norm(solution.S);
  c.norm_cap = std::max({1.0, coeff_norm(A), coeff_norm(B)});
  c.ratio_R = c.norm_R * delta * delta / c.norm_cap;
  c.ratio_S = c.norm_S * delta * delta / c.norm_cap;
  const int m = std::min(A.degree(), B.degree());
  c.crude_ratio_R = c.norm_R * std::pow(delta, m);
  c.crude_ratio_S = c.norm_S * std::pow(delta, m);
  if (ceiling) {
    c.ceiling = ceiling;
    c.ceiling_source = "caller";
  } else {
    c.ceiling = c_ceiling(A.degree(), B.degree());
    c.ceiling_source = c.ceiling ? table().version + " (empirical)" : "none: degrees outside the table";
  }
  c.passed = c.ceiling.has_value() && std::max(c.ratio_R, c.ratio_S) <= *c.ceiling;
  return c;
}

}  // namespace bezout
