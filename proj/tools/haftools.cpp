// haftools: exact hafnians of two-parameter matrices and k-edge matching
// tables for the associated arc diagrams.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "haf/hafnian.hpp"
#include "haf/matchings.hpp"
#include "haf/matrix.hpp"
#include "haf/ring.hpp"
#include "haf/twoparam.hpp"

#ifndef HAFTOOLS_FIXTURE_DIR
#define HAFTOOLS_FIXTURE_DIR "fixtures"
#endif

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitFixtureMismatch = 2;
constexpr int kExitUsage = 64;

using Clock = std::chrono::steady_clock;

struct Timing {
  bool enabled = false;
  Clock::time_point start = Clock::now();

  ~Timing() {
    if (enabled) {
      auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      std::cerr << "elapsed_ms " << ms << "\n";
    }
  }
};

std::string fixtures_dir() {
  if (const char* env = std::getenv("HAFTOOLS_FIXTURES")) return env;
  return HAFTOOLS_FIXTURE_DIR;
}

int brute_cap() {
  if (const char* env = std::getenv("HAFTOOLS_MAX_BRUTE")) return std::atoi(env);
  return 14;
}

haf::TemplateKind parse_kind_cd(const std::string& s) {
  if (s == "C" || s == "c") return haf::TemplateKind::C;
  if (s == "D" || s == "d") return haf::TemplateKind::D;
  throw CLI::ValidationError("kind must be C or D");
}

haf::MatchingTable table_by_method(haf::TemplateKind kind, int n_max,
                                   const std::string& method) {
  haf::MatchingTable table;
  table.max_order = n_max;
  table.rows.resize(n_max + 1);
  bool is_c = kind == haf::TemplateKind::C;
  if (method == "recurrence") {
    return is_c ? haf::mu_c_recurrence(n_max) : haf::mu_d_recurrence(n_max);
  }
  if (method == "series") {
    auto series = haf::gf_series(kind, n_max);
    for (int n = 0; n <= n_max; ++n) {
      table.rows[n].resize(n / 2 + 1);
      for (int k = 0; k <= n / 2; ++k) table.rows[n][k] = series.at(n, k);
    }
    return table;
  }
  for (int n = 0; n <= n_max; ++n) {
    table.rows[n].resize(n / 2 + 1);
    for (int k = 0; k <= n / 2; ++k) {
      if (method == "closed") {
        table.rows[n][k] = is_c ? haf::mu_c_closed(n, k) : haf::mu_d_closed(n, k);
      } else {  // brute
        auto t = is_c ? haf::Template::c(n) : haf::Template::d(n);
        table.rows[n][k] = haf::mu_bruteforce(t, k);
      }
    }
  }
  return table;
}

nlohmann::json table_json(const haf::MatchingTable& table, const std::string& kind,
                          const std::string& method) {
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 0; k <= table.max_order / 2; ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (int n = 0; n <= table.max_order; ++n) {
      row.push_back(table.at(n, k).get_str());
    }
    rows.push_back(row);
  }
  return {{"command", "table"},
          {"kind", kind},
          {"n_max", table.max_order},
          {"method", method},
          {"rows", rows}};
}

// Parses "sym"/"a"/"b" to the matching formal symbol, anything else as an
// exact integer constant.
haf::BiPoly parse_scalar(const std::string& s, bool prefer_a) {
  if (s == "sym") return prefer_a ? haf::BiPoly::var_a() : haf::BiPoly::var_b();
  if (s == "a") return haf::BiPoly::var_a();
  if (s == "b") return haf::BiPoly::var_b();
  return haf::BiPoly(haf::BigInt(s));
}

bool is_symbolic(const std::string& s) { return s == "sym" || s == "a" || s == "b"; }

int run_hafnian(const std::string& kind, int m, const std::string& a_str,
                const std::string& b_str) {
  bool symbolic = is_symbolic(a_str) || is_symbolic(b_str);
  haf::BiPoly a = parse_scalar(a_str, true);
  haf::BiPoly b = parse_scalar(b_str, false);
  haf::BiPoly result;
  if (kind == "C" || kind == "c") {
    result = haf::hafnian_c<haf::BiPoly>(m, a, b);
  } else if (kind == "D" || kind == "d") {
    result = haf::hafnian_d<haf::BiPoly>(m, a, b);
  } else if (kind == "J" || kind == "j") {
    // Hf of the order-2m matrix with all off-diagonal entries b.
    result = haf::ring_pow(b, m) * haf::BiPoly(haf::pairing_count(m));
  } else {
    auto t = haf::Template::load(kind);
    if (t.order() % 2 != 0) {
      std::cerr << "haftools: custom template order must be even\n";
      return kExitUsage;
    }
    if (t.order() != 2 * m) {
      std::cerr << "haftools: m=" << m << " does not match template order "
                << t.order() << "\n";
      return kExitUsage;
    }
    if (t.order() > brute_cap()) {
      std::cerr << "haftools: custom template order " << t.order()
                << " exceeds brute-force cap " << brute_cap() << "\n";
      return kExitUsage;
    }
    result = haf::hafnian_two_param_general<haf::BiPoly>(
        t, a, b, [&](int j) { return haf::mu_bruteforce(t, j); });
  }
  if (symbolic) {
    std::cout << result.to_string() << "\n";
  } else {
    std::cout << result.coeff(0, 0).get_str() << "\n";
  }
  return 0;
}

int run_sequence(haf::TemplateKind kind, int m_max, const std::string& a,
                 const std::string& b, bool check_fixture) {
  auto values = haf::sequence(kind, m_max, haf::BigInt(a), haf::BigInt(b));
  for (const auto& v : values) std::cout << v.get_str() << "\n";
  if (!check_fixture) return 0;

  std::string path = fixtures_dir() + "/" +
                     (kind == haf::TemplateKind::C ? "a265229.txt" : "a190823.txt");
  std::ifstream in(path);
  if (!in) {
    std::cerr << "haftools: cannot open fixture " << path << "\n";
    return kExitFixtureMismatch;
  }
  std::string line;
  for (size_t i = 0; i < values.size() && std::getline(in, line); ++i) {
    if (line != values[i].get_str()) {
      std::cerr << "haftools: fixture mismatch at m=" << i + 1 << ": got "
                << values[i].get_str() << ", fixture has " << line << "\n";
      return kExitFixtureMismatch;
    }
  }
  return 0;
}

// --- verify suites ---------------------------------------------------------

bool fault_injected() { return std::getenv("HAFTOOLS_FAULT") != nullptr; }

bool suite_ring() {
  haf::BigInt skew = fault_injected() ? 1 : 0;
  if (haf::binomial(4, 2) + skew != 6) return false;
  if (haf::pairing_count(3) != 15) return false;
  std::mt19937 rng(7);
  auto random_poly = [&]() {
    haf::BiPoly p;
    std::uniform_int_distribution<int> deg(0, 3), coef(-9, 9);
    for (int t = 0; t < 4; ++t) {
      p += haf::BiPoly::monomial(deg(rng), deg(rng), coef(rng));
    }
    return p;
  };
  for (int iter = 0; iter < 20; ++iter) {
    auto p = random_poly(), q = random_poly(), r = random_poly();
    if (p * (q + r) != p * q + p * r) return false;
    if (p * q != q * p) return false;
  }
  return true;
}

bool suite_pairings(int max_n) {
  for (int n = 0; n <= max_n; n += 2) {
    size_t count = 0;
    haf::enumerate_pairings(n, [&](const haf::PairPartition&) { ++count; });
    if (haf::BigInt(static_cast<long>(count)) != haf::pairing_count(n / 2)) return false;
  }
  return true;
}

bool suite_prop1(int cases) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(0, 3), scale(-2, 3);
  for (int iter = 0; iter < cases; ++iter) {
    int n = 2 * (1 + iter % 4);
    haf::SymmetricMatrix<haf::BigInt> m(n), scaled(n);
    haf::BigInt c = scale(rng);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        haf::BigInt v = entry(rng);
        m.set(i, j, v);
        scaled.set(i, j, c * v);
      }
    }
    if (haf::hafnian_bruteforce(scaled) !=
        haf::ring_pow(c, n / 2) * haf::hafnian_bruteforce(m)) {
      return false;
    }
  }
  return true;
}

bool suite_prop2(int cases, int n) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> entry(0, 3);
  for (int iter = 0; iter < cases; ++iter) {
    haf::SymmetricMatrix<haf::BigInt> a(n), b(n), sum(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        haf::BigInt av = entry(rng), bv = entry(rng);
        a.set(i, j, av);
        b.set(i, j, bv);
        sum.set(i, j, av + bv);
      }
    }
    if (haf::hafnian_sum_expansion(a, b) != haf::hafnian_bruteforce(sum)) return false;
  }
  return true;
}

bool suite_mu_agreement(int max_n) {
  auto c_rec = haf::mu_c_recurrence(max_n);
  auto d_rec = haf::mu_d_recurrence(max_n);
  auto c_gf = haf::gf_series(haf::TemplateKind::C, max_n);
  auto d_gf = haf::gf_series(haf::TemplateKind::D, max_n);
  for (int n = 0; n <= max_n; ++n) {
    auto ct = haf::Template::c(n);
    auto dt = haf::Template::d(n);
    for (int k = 0; k <= n / 2 + 1; ++k) {
      haf::BigInt c_brute = haf::mu_bruteforce(ct, k);
      if (c_brute != haf::mu_c_closed(n, k) || c_brute != c_rec.at(n, k) ||
          c_brute != c_gf.at(n, k)) {
        return false;
      }
      haf::BigInt d_brute = haf::mu_bruteforce(dt, k);
      if (d_brute != haf::mu_d_closed(n, k) || d_brute != d_rec.at(n, k) ||
          d_brute != d_gf.at(n, k)) {
        return false;
      }
    }
  }
  return true;
}

bool suite_prop3(long max) {
  for (long n = 0; n <= max; ++n) {
    for (long k = 0; k <= max; ++k) {
      if (k % 2 == 1 && n == 2 * k) continue;
      auto [lhs, rhs] = haf::prop3_equivalence(n, k);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool suite_symbolic(int max_m) {
  for (int m = 1; m <= max_m; ++m) {
    auto a = haf::BiPoly::var_a();
    auto b = haf::BiPoly::var_b();
    auto c_mat = haf::instantiate(haf::Template::c(2 * m), a, b);
    if (haf::hafnian_c<haf::BiPoly>(m, a, b) != haf::hafnian_bruteforce(c_mat)) {
      return false;
    }
    auto d_mat = haf::instantiate(haf::Template::d(2 * m), a, b);
    if (haf::hafnian_d<haf::BiPoly>(m, a, b) != haf::hafnian_bruteforce(d_mat)) {
      return false;
    }
  }
  return true;
}

bool suite_matching_bridge(int max_n) {
  for (int n = 2; n <= max_n; n += 2) {
    for (auto kind : {haf::TemplateKind::C, haf::TemplateKind::D}) {
      auto t = kind == haf::TemplateKind::C ? haf::Template::c(n) : haf::Template::d(n);
      auto m = haf::instantiate<haf::BigInt>(t, 1, 0);
      if (haf::hafnian_bruteforce(m) != haf::mu_bruteforce(t, n / 2)) return false;
    }
  }
  return true;
}

int run_verify(const std::string& level) {
  bool full = level == "full";
  bool ok = true;
  auto report = [&](const std::string& name, bool pass) {
    std::cout << (pass ? "PASS " : "FAIL ") << name << "\n";
    ok = ok && pass;
  };
  report("ring-axioms", suite_ring());
  report("pairing-enumeration", suite_pairings(full ? 12 : 8));
  report("prop1-scaling", suite_prop1(full ? 60 : 20));
  report("prop2-sum-expansion", suite_prop2(full ? 50 : 20, 6));
  report("mu-four-way", suite_mu_agreement(full ? 14 : 10));
  report("prop3-equivalence", suite_prop3(full ? 60 : 30));
  report("matching-bridge", suite_matching_bridge(full ? 12 : 8));
  if (full) report("symbolic-hafnian", suite_symbolic(5));
  return ok ? 0 : kExitVerifyFailure;
}

int run_bench(haf::TemplateKind kind, const std::vector<int>& ms) {
  std::vector<double> log_m, log_ops;
  std::cout << "m,ring_ops\n";
  for (int m : ms) {
    haf::reset_ring_ops();
    auto t0 = Clock::now();
    if (kind == haf::TemplateKind::C) {
      haf::hafnian_c<haf::BigInt>(m, 0, 1);
    } else {
      haf::hafnian_d<haf::BigInt>(m, 0, 1);
    }
    auto ms_elapsed = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    uint64_t ops = haf::ring_ops();
    std::cout << m << "," << ops << "\n";
    std::cerr << "m=" << m << " wall_ms=" << ms_elapsed << "\n";
    log_m.push_back(std::log(static_cast<double>(m)));
    log_ops.push_back(std::log(static_cast<double>(ops)));
  }
  if (ms.size() >= 2) {
    double n = static_cast<double>(ms.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < ms.size(); ++i) {
      sx += log_m[i];
      sy += log_ops[i];
      sxx += log_m[i] * log_m[i];
      sxy += log_m[i] * log_ops[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    std::cout << "slope," << slope << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hafnians of two-parameter matrices and matching tables"};
  app.require_subcommand(1);
  Timing timing;
  app.add_flag("--timing", timing.enabled, "report wall time on stderr");

  // table
  std::string table_kind, table_method = "closed", table_format = "csv";
  int table_n_max = 0;
  auto* table_cmd = app.add_subcommand("table", "k-edge matching table");
  table_cmd->add_option("kind", table_kind, "C or D")->required();
  table_cmd->add_option("n_max", table_n_max, "largest order")->required()
      ->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--method", table_method)
      ->check(CLI::IsMember({"closed", "recurrence", "series", "brute"}));
  table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

  // hafnian
  std::string haf_kind, haf_a, haf_b;
  int haf_m = 0;
  auto* haf_cmd = app.add_subcommand("hafnian", "Hf(T_2m(a,b))");
  haf_cmd->add_option("kind", haf_kind, "C, D, J, or a template file")->required();
  haf_cmd->add_option("m", haf_m, "half order")->required()->check(CLI::NonNegativeNumber);
  haf_cmd->add_option("a", haf_a, "integer or sym")->required();
  haf_cmd->add_option("b", haf_b, "integer or sym")->required();

  // sequence
  std::string seq_kind, seq_a, seq_b;
  int seq_m_max = 0;
  bool seq_check = false;
  auto* seq_cmd = app.add_subcommand("sequence", "Hf(T_2(a,b))..Hf(T_2mmax(a,b))");
  seq_cmd->add_option("kind", seq_kind, "C or D")->required();
  seq_cmd->add_option("m_max", seq_m_max)->required()->check(CLI::PositiveNumber);
  seq_cmd->add_option("a", seq_a)->required();
  seq_cmd->add_option("b", seq_b)->required();
  seq_cmd->add_flag("--check-fixture", seq_check, "compare against bundled fixture");

  // verify
  std::string verify_level = "quick";
  auto* verify_cmd = app.add_subcommand("verify", "run cross-validation suites");
  verify_cmd->add_option("level", verify_level)->check(CLI::IsMember({"quick", "full"}));

  // bench
  std::string bench_kind, bench_ms;
  auto* bench_cmd = app.add_subcommand("bench", "operation-count scaling");
  bench_cmd->add_option("kind", bench_kind, "C or D")->required();
  bench_cmd->add_option("m_list", bench_ms, "comma-separated m values")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table_cmd) {
      if (table_method == "brute" && table_n_max > brute_cap()) {
        std::cerr << "haftools: brute method capped at n_max <= " << brute_cap()
                  << " (set HAFTOOLS_MAX_BRUTE to override)\n";
        return kExitUsage;
      }
      auto kind = parse_kind_cd(table_kind);
      auto table = table_by_method(kind, table_n_max, table_method);
      if (table_format == "csv") {
        std::cout << haf::table_csv(table);
      } else {
        std::cout << table_json(table, table_kind, table_method).dump(2) << "\n";
      }
      return 0;
    }
    if (*haf_cmd) return run_hafnian(haf_kind, haf_m, haf_a, haf_b);
    if (*seq_cmd) {
      return run_sequence(parse_kind_cd(seq_kind), seq_m_max, seq_a, seq_b, seq_check);
    }
    if (*verify_cmd) return run_verify(verify_level);
    if (*bench_cmd) {
      std::vector<int> ms;
      std::stringstream ss(bench_ms);
      std::string item;
      while (std::getline(ss, item, ',')) {
        int m = std::stoi(item);
        if (m < 1) throw std::invalid_argument("bench: m values must be >= 1");
        ms.push_back(m);
      }
      return run_bench(parse_kind_cd(bench_kind), ms);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "haftools: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "haftools: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
