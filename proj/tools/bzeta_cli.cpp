// Command-line front end: evaluate the library's special functions and run
// the identity-verification suites with machine-readable output.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bzeta/barnes.hpp"
#include "bzeta/bernoulli.hpp"
#include "bzeta/bilateral.hpp"
#include "bzeta/qprod.hpp"
#include "bzeta/verify.hpp"

namespace {

using namespace bzeta;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complex literals: "a+bi", "a-bi", "a", "bi", "i", and the directed polar
// form "modulus@argument".
cdouble parse_complex(const std::string& text) {
  if (text.empty()) throw ParseError("empty complex literal");
  const auto at = text.find('@');
  if (at != std::string::npos) {
    try {
      const double mod = std::stod(text.substr(0, at));
      const double arg = std::stod(text.substr(at + 1));
      return std::polar(mod, arg);
    } catch (const std::exception&) {
      throw ParseError("bad polar literal '" + text + "'");
    }
  }
  const char* p = text.c_str();
  char* end = nullptr;
  auto read_coeff = [&](double& out) -> bool {
    // Handles bare "i", "+i", "-i".
    if (*p == 'i') {
      out = 1.0;
      end = const_cast<char*>(p);
      return true;
    }
    if ((*p == '+' || *p == '-') && p[1] == 'i') {
      out = (*p == '-') ? -1.0 : 1.0;
      end = const_cast<char*>(p + 1);
      return true;
    }
    out = std::strtod(p, &end);
    return end != p;
  };
  double first = 0.0;
  if (!read_coeff(first)) {
    throw ParseError("bad complex literal '" + text + "' at position 0");
  }
  p = end;
  if (*p == '\0') return cdouble(first, 0.0);
  if (*p == 'i') {
    if (p[1] != '\0') {
      throw ParseError("trailing characters in '" + text + "'");
    }
    return cdouble(0.0, first);
  }
  if (*p != '+' && *p != '-') {
    throw ParseError("bad complex literal '" + text + "' at position " +
                     std::to_string(p - text.c_str()));
  }
  double second = 0.0;
  if (!read_coeff(second)) {
    throw ParseError("bad complex literal '" + text + "' at position " +
                     std::to_string(p - text.c_str()));
  }
  p = end;
  if (*p != 'i' || p[1] != '\0') {
    throw ParseError("imaginary part must end in 'i' in '" + text + "'");
  }
  return cdouble(first, second);
}

// The directed variant keeps an explicit polar argument when given.
DirectedComplex parse_directed(const std::string& text) {
  const auto at = text.find('@');
  if (at != std::string::npos) {
    try {
      return DirectedComplex::from_polar(std::stod(text.substr(0, at)),
                                         std::stod(text.substr(at + 1)));
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad polar literal '" + text + "'");
    }
  }
  return DirectedComplex::from_principal(parse_complex(text));
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct Params {
  std::map<std::string, std::string> kv;

  const std::string& get(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("missing parameter '" + key + "'");
    return it->second;
  }
  bool has(const std::string& key) const { return kv.count(key) > 0; }

  cdouble complex_at(const std::string& key) const { return parse_complex(get(key)); }
  DirectedComplex directed_at(const std::string& key) const {
    return parse_directed(get(key));
  }
  long integer_at(const std::string& key) const {
    try {
      return std::stol(get(key));
    } catch (const std::exception&) {
      throw ParseError("parameter '" + key + "' must be an integer");
    }
  }
  ParameterVector vector_at(const std::string& key) const {
    std::vector<DirectedComplex> entries;
    for (const std::string& item : split_commas(get(key))) {
      entries.push_back(parse_directed(item));
    }
    return ParameterVector(std::move(entries));
  }
  ParameterVector vector_or_empty(const std::string& key) const {
    if (!has(key)) return ParameterVector{};
    return vector_at(key);
  }
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_result(const EvalResult& r) {
  std::printf("{\"value\":{\"re\":%s,\"im\":%s},\"err_estimate\":%s,"
              "\"terms_used\":%ld,\"method\":\"%s\"}\n",
              num(r.value.real()).c_str(), num(r.value.imag()).c_str(),
              num(r.err_estimate).c_str(), r.terms_used, method_name(r.method));
}

EvalResult dispatch_eval(const std::string& function, const Params& p, double tol) {
  if (function == "barnes") {
    BarnesRequest rq{p.complex_at("s"), p.directed_at("z"), p.vector_or_empty("omega")};
    return barnes_zeta(rq, tol);
  }
  if (function == "xi") {
    return xi(BilateralRequest::make(p.complex_at("s"), p.directed_at("z"),
                                     p.directed_at("omega0"),
                                     p.vector_or_empty("omega")),
              tol);
  }
  if (function == "bernoulli") {
    const long r = p.integer_at("r");
    const long n = p.integer_at("n");
    const cdouble v = multiple_bernoulli(static_cast<int>(r), static_cast<int>(n),
                                         p.complex_at("z"), p.vector_at("omega"));
    return {v, 1e-15 * std::abs(v), n + 1, Method::special_value};
  }
  if (function == "gamma_multiple") {
    const cdouble v = multiple_gamma(p.directed_at("z"), p.vector_at("omega"));
    return {v, 1e-8 * std::abs(v), 4, Method::reduction};
  }
  if (function == "eta") {
    return dedekind_eta(p.complex_at("tau"), tol);
  }
  if (function == "qpoch") {
    QData d;
    d.x = p.complex_at("x");
    for (const auto& q : split_commas(p.get("q"))) d.qs.push_back(parse_complex(q));
    return qpoch_multi(d, tol);
  }
  if (function == "qpoch_tilde") {
    QData d;
    d.x = p.complex_at("x");
    for (const auto& q : split_commas(p.get("q"))) d.qs.push_back(parse_complex(q));
    d.split = static_cast<int>(p.integer_at("l"));
    return qpoch_tilde(d, tol);
  }
  if (function == "f_plus") {
    return f_plus(p.complex_at("s"), p.complex_at("z"), p.vector_at("omega"), tol);
  }
  if (function == "f_minus") {
    return f_minus(p.complex_at("s"), p.complex_at("z"), p.vector_at("omega"), tol);
  }
  if (function == "g") {
    return g_function(p.complex_at("s"), p.complex_at("tau"), tol);
  }
  throw ParseError("unknown function '" + function + "'");
}

void print_catalog() {
  std::puts("functions:");
  std::puts("  barnes          s=<c> z=<c|m@arg> omega=<c,...>");
  std::puts("  xi              s=<c> z=<c|m@arg> omega0=<c|m@arg> [omega=<c,...>]");
  std::puts("  bernoulli       r=<int> n=<int> z=<c> omega=<c,...>");
  std::puts("  gamma_multiple  z=<c|m@arg> omega=<c,...>");
  std::puts("  eta             tau=<c>");
  std::puts("  qpoch           x=<c> q=<c,...>");
  std::puts("  qpoch_tilde     x=<c> q=<c,...> l=<int>");
  std::puts("  f_plus          s=<c> z=<c> omega=<c,...>");
  std::puts("  f_minus         s=<c> z=<c> omega=<c,...>");
  std::puts("  g               s=<c> tau=<c>");
  std::puts("suites:");
  for (const std::string& name : bzeta::suite_names()) {
    std::printf("  %s\n", name.c_str());
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Barnes and bilateral multiple zeta function toolkit"};
  app.require_subcommand(1);

  std::string function;
  std::vector<std::string> param_tokens;
  double tol = 1e-10;
  unsigned long long seed = 42;
  std::string format = "json";
  std::string suites_arg;
  bool timings = false;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a library function");
  eval->add_option("--function", function, "function name")->required();
  eval->add_option("--params", param_tokens, "key=value parameters");
  eval->add_option("--tol", tol, "relative tolerance");

  CLI::App* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("--suites", suites_arg, "comma-separated suite names");
  verify->add_option("--tol", tol, "relative tolerance");
  verify->add_option("--seed", seed, "sample seed");
  verify->add_option("--format", format, "json|csv|text");
  verify->add_flag("--timings", timings, "emit real timings (not byte-stable)");

  CLI::App* list = app.add_subcommand("list", "list functions and suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (list->parsed()) {
    print_catalog();
    return kExitOk;
  }

  if (eval->parsed()) {
    try {
      Params p;
      for (const std::string& token : param_tokens) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
          throw ParseError("parameter '" + token + "' is not key=value");
        }
        p.kv[token.substr(0, eq)] = token.substr(eq + 1);
      }
      const EvalResult r = dispatch_eval(function, p, tol);
      print_result(r);
      return kExitOk;
    } catch (const ParseError& e) {
      std::fprintf(stderr, "usage error: %s\n", e.what());
      return kExitUsage;
    } catch (const Error& e) {
      std::printf("{\"error\":\"%s\"}\n", e.what());
      return kExitDomain;
    }
  }

  // verify
  try {
    VerifyConfig cfg;
    cfg.seed = seed;
    cfg.tol = tol;
    if (!suites_arg.empty()) cfg.suites = split_commas(suites_arg);
    const auto reports = run_suite(cfg);
    if (format == "csv") {
      std::printf("%s\n", report_csv_header().c_str());
      for (const auto& r : reports) {
        std::printf("%s\n", report_csv_row(r, timings).c_str());
      }
    } else if (format == "text") {
      for (const auto& r : reports) {
        std::printf("%s\n", report_text_line(r, timings).c_str());
      }
    } else if (format == "json") {
      for (const auto& r : reports) {
        std::printf("%s\n", report_json_line(r, timings).c_str());
      }
    } else {
      std::fprintf(stderr, "usage error: unknown format '%s'\n", format.c_str());
      return kExitUsage;
    }
    for (const auto& r : reports) {
      if (!r.pass) return kExitCheckFailed;
    }
    return kExitOk;
  } catch (const RangeError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  }
}
