// desing: tables, coefficient export, evaluation and self-checks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical tolerance not met.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "desing/bernoulli.hpp"
#include "desing/cyclotomic.hpp"
#include "desing/desing_coeffs.hpp"
#include "desing/errors.hpp"
#include "desing/numeric.hpp"
#include "desing/serialize.hpp"
#include "desing/series.hpp"
#include "desing/special_values.hpp"
#include "desing/verify.hpp"

namespace {

using namespace desing;

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTolerance = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<BigRational> parse_rationals(const std::string& text) {
  std::vector<BigRational> out;
  for (const auto& item : split(text)) out.push_back(BigRational::parse(item));
  return out;
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  for (const auto& item : split(text)) {
    std::size_t used = 0;
    const long v = std::stol(item, &used);
    if (used != item.size()) throw UsageError("not an integer: " + item);
    out.push_back(v);
  }
  return out;
}

double parse_real(const std::string& text) {
  if (text.find('/') != std::string::npos) return BigRational::parse(text).to_double();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: " + text);
  }
  if (used != text.size()) throw UsageError("not a number: " + text);
  return v;
}

// Accepts "x", "x+yi", "x-yi", "yi", "i"; real parts may be "p/q".
std::complex<double> parse_complex(const std::string& text) {
  if (text.empty()) throw UsageError("empty number");
  if (text.back() != 'i') return parse_real(text);
  const std::string body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split_at = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const std::string re = split_at == std::string::npos ? "" : body.substr(0, split_at);
  std::string im = split_at == std::string::npos ? body : body.substr(split_at);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
}

bool extended_precision() {
  const char* p = std::getenv("DESING_PRECISION");
  if (p == nullptr) return false;
  const std::string v(p);
  if (v == "extended" || v == "long") return true;
  if (v == "double" || v.empty()) return false;
  throw UsageError("DESING_PRECISION must be 'double' or 'extended'");
}

// CLI11 would read "-1,1" as a flag; bind such values to their option.
std::vector<std::string> join_negative_values(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool takes_value = args[i] == "--s" || args[i] == "--gamma" || args[i] == "--max" ||
                             args[i] == "--r" || args[i] == "--kmax" || args[i] == "--a" || args[i] == "--c";
    if (takes_value && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        (std::isdigit(static_cast<unsigned char>(args[i + 1][1])) || args[i + 1][1] == '.')) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

int cmd_bernoulli(long max, const std::string& format) {
  require(max >= 0, "--max must be >= 0");
  const auto table = BernoulliCache::global().table(static_cast<std::size_t>(max));
  if (format == "json") {
    std::cout << Json(table).dump() << "\n";
  } else {
    for (const auto& b : table) std::cout << b.to_string() << "\n";
  }
  return 0;
}

int cmd_twisted(long c, long a, long max, const std::string& format) {
  require(c >= 2, "--c must be >= 2");
  require(max >= 0, "--max must be >= 0");
  const RootOfUnity xi(c, a);
  require(!xi.trivial(), "--a must not be a multiple of --c (xi = 1)");
  const auto table = twisted_bernoulli_table(static_cast<std::size_t>(max), xi);
  if (format == "json") {
    Json out = Json::array();
    for (std::size_t n = 0; n < table.size(); ++n) out.push_back({{"n", n}, {"value", table[n]}});
    std::cout << out.dump() << "\n";
  } else {
    for (std::size_t n = 0; n < table.size(); ++n) {
      std::cout << n;
      for (const auto& q : table[n].coeffs()) std::cout << "," << q.to_string();
      std::cout << "\n";
    }
  }
  return 0;
}

template <typename F>
void for_each_index(std::size_t r, int max, F&& f) {
  std::vector<int> k(r, 0);
  while (true) {
    f(k);
    std::size_t j = r;
    while (j > 0 && k[j - 1] == max) k[--j] = 0;
    if (j == 0) return;
    ++k[j - 1];
  }
}

int cmd_multi_bernoulli(long r, long c, const std::string& a_list, const std::string& gamma_list, long max) {
  require(r >= 1 && r <= 4, "--r must be in 1..4");
  require(c >= 2, "--c must be >= 2");
  require(max >= 0 && max <= 8, "--max must be in 0..8");
  const auto as = parse_longs(a_list);
  require(static_cast<long>(as.size()) == r, "--a-list needs r entries");
  std::vector<BigRational> gammas = gamma_list.empty() ? std::vector<BigRational>(static_cast<std::size_t>(r), 1)
                                                       : parse_rationals(gamma_list);
  require(static_cast<long>(gammas.size()) == r, "--gamma needs r entries");
  std::vector<RootOfUnity> xis;
  for (long a : as) {
    xis.emplace_back(c, a);
    require(!xis.back().trivial(), "every root must be nontrivial");
  }
  const auto series = build_H_r(xis, gammas, static_cast<int>(r * max));
  Json out = Json::array();
  for_each_index(static_cast<std::size_t>(r), static_cast<int>(max), [&](const std::vector<int>& n) {
    BigInt scale = 1;
    for (int e : n) scale *= factorial(e);
    const CycloElement value = series.coefficient(n, CycloElement(c)) * BigRational(scale);
    out.push_back({{"n", n}, {"value", value}});
  });
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_desing_values(long r, long kmax, const std::string& gamma_list, const std::string& format) {
  require(r >= 1 && r <= 4, "--r must be in 1..4");
  require(kmax >= 0 && kmax <= 8, "--kmax must be in 0..8");
  std::vector<BigRational> gammas = gamma_list.empty() ? std::vector<BigRational>(static_cast<std::size_t>(r), 1)
                                                       : parse_rationals(gamma_list);
  require(static_cast<long>(gammas.size()) == r, "--gamma needs r entries");
  for (const auto& g : gammas) require(!g.is_zero(), "gamma entries must be nonzero");
  std::vector<ValueRow> rows;
  for_each_index(static_cast<std::size_t>(r), static_cast<int>(kmax), [&](const std::vector<int>& k) {
    rows.push_back({k, gammas, desing_value_exact(MultiIndex(k), gammas)});
  });
  if (format == "json") {
    std::cout << Json(rows).dump() << "\n";
  } else {
    for (long j = 1; j <= r; ++j) std::cout << "k_" << j << ",";
    std::cout << "value\n";
    for (const auto& row : rows) {
      for (int k : row.k) std::cout << k << ",";
      std::cout << row.value.to_string() << "\n";
    }
  }
  return 0;
}

int cmd_coeffs(long r, const std::string& format) {
  require(r >= 1 && r <= 6, "--r must be in 1..6");
  if (format == "json") {
    std::cout << Json(expand_G(static_cast<std::size_t>(r))).dump() << "\n";
  } else {
    std::cout << combination(static_cast<std::size_t>(r)).to_tex();
  }
  return 0;
}

template <typename T>
BasicEvalResult<double> eval_in(const std::vector<std::complex<double>>& s, std::complex<double> g1,
                                std::complex<double> g2, double tol) {
  using C = std::complex<T>;
  auto lift = [](std::complex<double> z) { return C(static_cast<T>(z.real()), static_cast<T>(z.imag())); };
  BasicEvalResult<T> r = s.size() == 1 ? desing1<T>(lift(s[0]), static_cast<T>(tol))
                                       : desing2<T>(lift(s[0]), lift(s[1]), lift(g1), lift(g2), static_cast<T>(tol));
  return {std::complex<double>(static_cast<double>(r.value.real()), static_cast<double>(r.value.imag())),
          static_cast<double>(r.err_estimate), r.method};
}

int cmd_eval(const std::string& s_text, const std::string& gamma_text, double tol) {
  std::vector<std::complex<double>> s;
  for (const auto& item : split(s_text)) s.push_back(parse_complex(item));
  require(s.size() == 1 || s.size() == 2, "--s takes one or two complex values");
  require(tol > 0, "--tol must be positive");
  std::complex<double> g1 = 1.0, g2 = 1.0;
  if (!gamma_text.empty()) {
    const auto g = split(gamma_text);
    require(g.size() == 2, "--gamma takes two complex values");
    g1 = parse_complex(g[0]);
    g2 = parse_complex(g[1]);
  }
  const bool extended = extended_precision();
  const EvalResult r = extended ? eval_in<long double>(s, g1, g2, tol) : eval_in<double>(s, g1, g2, tol);
  Json out = r;
  out["precision"] = extended ? "extended" : "double";
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_verify(const std::string& suite_name) {
  Suite suite;
  try {
    suite = parse_suite(suite_name);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  bool all = true;
  for (const auto& r : run_suite(suite)) {
    std::cout << format_result(r) << "\n";
    all = all && r.passed;
  }
  return all ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desingularized multiple zeta-functions: exact tables and numerics"};
  app.require_subcommand(1, 1);

  long max = 10;
  std::string format = "csv";
  auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_max");
  bern->add_option("--max", max, "largest index")->required();
  bern->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  long c = 2, a = 1, tmax = 6;
  std::string tformat = "json";
  auto* tw = app.add_subcommand("twisted-bernoulli", "twisted Bernoulli numbers at xi = exp(2 pi i a / c)");
  tw->add_option("--c", c, "order of the root of unity")->required();
  tw->add_option("--a", a, "exponent of the root")->required();
  tw->add_option("--max", tmax, "largest index");
  tw->add_option("--format", tformat)->check(CLI::IsMember({"csv", "json"}));

  long mr = 2, mc = 2, mmax = 3;
  std::string a_list, m_gamma;
  auto* mb = app.add_subcommand("multi-bernoulli", "twisted multiple Bernoulli numbers");
  mb->add_option("--r", mr)->required();
  mb->add_option("--c", mc)->required();
  mb->add_option("--a-list", a_list, "comma-separated exponents, one per root")->required();
  mb->add_option("--gamma", m_gamma, "comma-separated rationals");
  mb->add_option("--max", mmax, "largest index per coordinate");

  long dr = 2, kmax = 3;
  std::string d_gamma, dformat = "json";
  auto* dv = app.add_subcommand("desing-values", "exact values at non-positive integers");
  dv->add_option("--r", dr)->required();
  dv->add_option("--kmax", kmax)->required();
  dv->add_option("--gamma", d_gamma, "comma-separated rationals (default all 1)");
  dv->add_option("--format", dformat)->check(CLI::IsMember({"csv", "json"}));

  long cr = 2;
  std::string cformat = "json";
  auto* co = app.add_subcommand("coeffs", "coefficients of the shifted-zeta combination");
  co->add_option("--r", cr)->required();
  co->add_option("--format", cformat)->check(CLI::IsMember({"json", "tex"}));

  std::string s_text, e_gamma;
  double tol = 1e-8;
  auto* ev = app.add_subcommand("eval", "evaluate the desingularized function (one or two arguments)");
  ev->add_option("--s", s_text, "s or s1,s2 (complex: 1.5, 2-3i)")->required();
  ev->add_option("--gamma", e_gamma, "gamma1,gamma2 (default 1,1)");
  ev->add_option("--tol", tol, "largest accepted error estimate");

  std::string suite = "all";
  auto* ve = app.add_subcommand("verify", "run the self-check suites");
  ve->add_option("--suite", suite, "all | exact | numeric");

  const auto args = join_negative_values(argc, argv);
  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*bern) return cmd_bernoulli(max, format);
    if (*tw) return cmd_twisted(c, a, tmax, tformat);
    if (*mb) return cmd_multi_bernoulli(mr, mc, a_list, m_gamma, mmax);
    if (*dv) return cmd_desing_values(dr, kmax, d_gamma, dformat);
    if (*co) return cmd_coeffs(cr, cformat);
    if (*ev) return cmd_eval(s_text, e_gamma, tol);
    if (*ve) return cmd_verify(suite);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ToleranceError& e) {
    std::cerr << "tolerance not met: " << e.what() << "\n";
    return kExitTolerance;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
