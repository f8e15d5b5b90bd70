// Copyright 2026 The covlll Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// covlll command-line tool. Talks to the library only through the C API.
//
// Exit codes: 0 success / covering, 1 not covering / construction failed,
// 2 usage or input error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covlll/covlll.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

struct CStringDeleter {
  void operator()(char* s) const { covlll_string_free(s); }
};
using CString = std::unique_ptr<char, CStringDeleter>;

struct MatrixDeleter {
  void operator()(covlll_matrix* m) const { covlll_matrix_free(m); }
};
using Matrix = std::unique_ptr<covlll_matrix, MatrixDeleter>;

class CliFailure : public std::runtime_error {
 public:
  CliFailure(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

void Check(covlll_status status) {
  if (status == COVLLL_OK) return;
  std::string message = std::string(covlll_status_name(status)) + ": " +
                        covlll_last_error();
  throw CliFailure(status == COVLLL_E_CONSTRUCTION_FAILED ? kExitNegative
                                                          : kExitInput,
                   message);
}

covlll_degree_mode ModeFrom(const std::string& mode) {
  return mode == "paper" ? COVLLL_DEGREE_RELAXED : COVLLL_DEGREE_EXACT;
}

void EchoConfig(const std::string& command, const json& config) {
  json echo = config;
  echo["command"] = command;
  std::cerr << "# config " << echo.dump() << '\n';
}

std::string ReadAll(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

Matrix LoadMatrix(const std::string& path) {
  covlll_matrix* raw = nullptr;
  if (path.empty() || path == "-") {
    std::string text = ReadAll(std::cin);
    Check(covlll_matrix_parse(text.c_str(), &raw));
  } else {
    Check(covlll_matrix_load(path.c_str(), &raw));
  }
  return Matrix(raw);
}

void EmitMatrix(const covlll_matrix* matrix, const std::string& path) {
  if (path.empty() || path == "-") {
    char* text = nullptr;
    Check(covlll_matrix_format(matrix, &text));
    CString owned(text);
    std::cout << owned.get();
  } else {
    Check(covlll_matrix_save(matrix, path.c_str()));
  }
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) throw CliFailure(kExitInput, "cannot write " + path);
}

// Shared parameter block; which fields a subcommand uses is up to it.
struct Options {
  int m = 0;
  int t = 0;
  int alpha = 2;
  int k = 1;
  int64_t n = 0;
  uint64_t seed = 1;
  uint64_t trials = 100000;
  uint64_t max_resamples = 0;
  uint64_t limit = 0;
  int threads = 1;
  std::string mode = "exact";
  std::string format = "text";
  std::string model = "tiled";
  std::string in;
  std::string out;
  std::string log;
  std::vector<int> target;
  bool augment = false;
  bool naive = false;
  bool trace = false;
};

int RunBound(const Options& o) {
  EchoConfig("bound", {{"m", o.m}, {"t", o.t}, {"alpha", o.alpha},
                       {"k", o.k}, {"mode", o.mode}, {"format", o.format}});
  char* raw = nullptr;
  Check(covlll_bound_report_json(o.m, o.t, o.alpha, o.k, ModeFrom(o.mode),
                                 &raw));
  CString text(raw);
  if (o.format == "json") {
    std::cout << text.get() << '\n';
    return kExitOk;
  }
  json report = json::parse(text.get());
  std::printf("model        : %s\n",
              o.k == 0 ? "i.i.d. entries"
                       : ("tiled, k = " + std::to_string(o.k)).c_str());
  std::printf("gamma        : %s/%s\n",
              report["gamma"]["num"].get<std::string>().c_str(),
              report["gamma"]["den"].get<std::string>().c_str());
  std::printf("coefficient  : %.2f  (N(m,%d,%d) <= coefficient * log2(m) * (1+o(1)))\n",
              report["coefficient"].get<double>(), o.t, o.alpha);
  if (!report["sufficient_n"].is_null()) {
    std::printf("sufficient n : %lld  (core %lld + %d constant columns)\n",
                report["sufficient_n"].get<long long>(),
                report["core_n"].get<long long>(),
                report["augmentation_columns"].get<int>());
    std::printf("e*p*(d+1)    : %.6g  (mode %s)\n",
                report["lll_product"].get<double>(), o.mode.c_str());
    std::printf("n / log2(m)  : %.4f\n",
                report["sufficient_n"].get<double>() / std::log2(o.m));
  }
  return kExitOk;
}

int RunGamma(const Options& o) {
  EchoConfig("gamma", {{"t", o.t}, {"alpha", o.alpha}, {"k", o.k},
                       {"format", o.format}});
  char* num = nullptr;
  char* den = nullptr;
  Check(covlll_gamma(o.alpha, o.t, o.k, &num, &den));
  CString n(num), d(den);
  double value = std::stod(n.get()) / std::stod(d.get());
  if (o.format == "json") {
    std::cout << json{{"alpha", o.alpha}, {"t", o.t}, {"k", o.k},
                      {"gamma", {{"num", n.get()}, {"den", d.get()}}},
                      {"value", value}}
                     .dump()
              << '\n';
  } else {
    std::printf("%s/%s = %.12g\n", n.get(), d.get(), value);
  }
  return kExitOk;
}

int RunTable(const Options& o) {
  EchoConfig("table", {{"format", o.format}});
  char* raw = nullptr;
  if (o.format == "json") {
    Check(covlll_table_json(&raw));
    CString text(raw);
    std::cout << text.get() << '\n';
  } else {
    Check(covlll_table_text(&raw));
    CString text(raw);
    std::cout << text.get();
  }
  return kExitOk;
}

int RunGenerate(const Options& o) {
  EchoConfig("generate", {{"m", o.m}, {"alpha", o.alpha}, {"k", o.k},
                          {"n", o.n}, {"model", o.model},
                          {"augment", o.augment}, {"seed", o.seed},
                          {"out", o.out}});
  covlll_matrix* raw = nullptr;
  if (o.model == "iid") {
    Check(covlll_matrix_sample_iid(o.m, o.alpha, static_cast<int>(o.n), o.seed,
                                   &raw));
  } else {
    Check(covlll_matrix_sample_tiled(o.m, o.alpha, static_cast<int>(o.n), o.k,
                                     o.augment ? 1 : 0, o.seed, &raw));
  }
  Matrix matrix(raw);
  EmitMatrix(matrix.get(), o.out);
  return kExitOk;
}

int RunVerify(const Options& o) {
  EchoConfig("verify", {{"t", o.t}, {"in", o.in}, {"naive", o.naive},
                        {"format", o.format}, {"limit", o.limit}});
  Matrix matrix = LoadMatrix(o.in);
  int covering = 0;
  Check(covlll_verify(matrix.get(), o.t, o.naive ? 1 : 0, &covering));
  if (o.format == "json") {
    char* raw = nullptr;
    Check(covlll_missing_tuples_jsonl(matrix.get(), o.t, o.limit, &raw));
    CString text(raw);
    std::cout << text.get();
  } else {
    covlll_coverage stats{};
    Check(covlll_coverage_stats(matrix.get(), o.t, &stats));
    std::printf("%s: %llu of %llu (row set, vector) pairs covered, "
                "min witnesses %llu\n",
                covering ? "covering" : "NOT covering",
                static_cast<unsigned long long>(stats.covered),
                static_cast<unsigned long long>(stats.total),
                static_cast<unsigned long long>(stats.min_witness));
  }
  return covering ? kExitOk : kExitNegative;
}

int RunConstruct(const Options& o) {
  EchoConfig("construct", {{"m", o.m}, {"t", o.t}, {"alpha", o.alpha},
                           {"k", o.k}, {"n", o.n}, {"seed", o.seed},
                           {"max_resamples", o.max_resamples},
                           {"out", o.out}, {"log", o.log}});
  covlll_matrix* raw = nullptr;
  char* log_raw = nullptr;
  covlll_status status =
      covlll_construct(o.m, o.t, o.alpha, o.k, o.n, o.seed, o.max_resamples,
                       o.trace ? 1 : 0, &raw, &log_raw);
  Matrix matrix(raw);
  CString log(log_raw);
  if (log) {
    std::string log_path = o.log;
    if (log_path.empty() && !o.out.empty() && o.out != "-") {
      log_path = o.out + ".log.json";
    }
    if (log_path.empty()) {
      std::cerr << log.get() << '\n';
    } else {
      WriteText(log_path, std::string(log.get()) + "\n");
    }
  }
  Check(status);
  EmitMatrix(matrix.get(), o.out);
  return kExitOk;
}

void PrintEstimate(const Options& o, const char* quantity, int n_core,
                   const covlll_estimate& est) {
  if (o.format == "json") {
    json out = {{"quantity", quantity}, {"t", o.t},
                {"alpha", o.alpha},     {"k", o.k},
                {"n_core", n_core},     {"trials", est.trials},
                {"hits", est.hits},     {"estimate", est.estimate},
                {"stderr", est.std_error}, {"z", est.z}};
    if (!std::isnan(est.exact)) out["exact"] = est.exact;
    std::cout << out.dump() << '\n';
    return;
  }
  char* raw = nullptr;
  Check(covlll_estimate_csv_row(quantity, o.m, o.t, o.alpha, o.k, n_core, &est,
                                &raw));
  CString row(raw);
  std::cout << covlll_estimate_csv_header() << '\n' << row.get() << '\n';
}

json MonteCarloConfig(const Options& o) {
  return {{"m", o.m},         {"t", o.t},         {"alpha", o.alpha},
          {"k", o.k},         {"n", o.n},         {"trials", o.trials},
          {"seed", o.seed},   {"threads", o.threads},
          {"target", o.target}, {"format", o.format}};
}

int RunMonteCarloGamma(const Options& o) {
  EchoConfig("montecarlo gamma", MonteCarloConfig(o));
  if (!o.target.empty() && static_cast<int>(o.target.size()) != o.t) {
    throw CliFailure(kExitInput, "--target needs exactly t letters");
  }
  covlll_estimate est{};
  Check(covlll_estimate_gamma(o.alpha, o.t, o.k, o.trials, o.seed,
                              o.target.empty() ? nullptr : o.target.data(),
                              o.threads, &est));
  PrintEstimate(o, "gamma", o.alpha * o.k, est);
  return kExitOk;
}

int RunMonteCarloLambda(const Options& o) {
  EchoConfig("montecarlo lambda", MonteCarloConfig(o));
  covlll_estimate est{};
  Check(covlll_estimate_lambda(o.t, o.alpha, o.k, static_cast<int>(o.n),
                               o.trials, o.seed, o.threads, &est));
  PrintEstimate(o, "lambda", static_cast<int>(o.n), est);
  return kExitOk;
}

int RunMonteCarloEnumerate(const Options& o) {
  EchoConfig("montecarlo enumerate", MonteCarloConfig(o));
  char* num = nullptr;
  char* den = nullptr;
  Check(covlll_enumerate_gamma(o.alpha, o.t, o.k, 0, &num, &den));
  CString n(num), d(den);
  char* gnum = nullptr;
  char* gden = nullptr;
  Check(covlll_gamma(o.alpha, o.t, o.k, &gnum, &gden));
  CString gn(gnum), gd(gden);
  bool agree = std::string(n.get()) == gn.get() && std::string(d.get()) == gd.get();
  if (o.format == "json") {
    std::cout << json{{"alpha", o.alpha}, {"t", o.t}, {"k", o.k},
                      {"enumerated", {{"num", n.get()}, {"den", d.get()}}},
                      {"formula", {{"num", gn.get()}, {"den", gd.get()}}},
                      {"agree", agree}}
                     .dump()
              << '\n';
  } else {
    std::printf("enumerated %s/%s, formula %s/%s: %s\n", n.get(), d.get(),
                gn.get(), gd.get(), agree ? "agree" : "DISAGREE");
  }
  return agree ? kExitOk : kExitNegative;
}

int RunMonteCarloMinN(const Options& o) {
  EchoConfig("montecarlo minn", MonteCarloConfig(o));
  char* raw = nullptr;
  Check(covlll_empirical_min_n_json(o.m, o.t, o.alpha, o.k, o.trials, o.seed,
                                    &raw));
  CString text(raw);
  if (o.format == "json") {
    std::cout << text.get() << '\n';
  } else {
    json s = json::parse(text.get());
    std::printf("empirical covering width over %llu trials: min %lld, median "
                "%lld, max %lld; LLL sufficient n %lld (%llu trials above)\n",
                static_cast<unsigned long long>(o.trials),
                s["min"].get<long long>(), s["median"].get<long long>(),
                s["max"].get<long long>(), s["sufficient_n"].get<long long>(),
                s["trials_above_bound"].get<unsigned long long>());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering-array bounds, construction and verification"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"text", "json"};

  auto add_params = [&](CLI::App* cmd, bool need_m) {
    auto* m = cmd->add_option("--m", o.m, "rows")->check(CLI::PositiveNumber);
    if (need_m) m->required();
    cmd->add_option("--t", o.t, "strength")->required();
    cmd->add_option("--alpha", o.alpha, "alphabet size")->required();
  };

  auto* bound = app.add_subcommand("bound", "LLL bound for N(m,t,alpha)");
  add_params(bound, false);
  bound->add_option("--k", o.k, "tile multiplicity (0 = i.i.d. model)")
      ->check(CLI::NonNegativeNumber);
  bound->add_option("--mode", o.mode, "dependency bound")
      ->check(CLI::IsMember({"exact", "paper"}));
  bound->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* gamma = app.add_subcommand("gamma", "exact gamma_k");
  gamma->add_option("--t", o.t)->required();
  gamma->add_option("--alpha", o.alpha)->required();
  gamma->add_option("--k", o.k)->required();
  gamma->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* table = app.add_subcommand("table", "coefficient table");
  table->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* generate = app.add_subcommand("generate", "sample a random matrix");
  generate->add_option("--m", o.m)->required();
  generate->add_option("--alpha", o.alpha)->required();
  generate->add_option("--n", o.n, "core width (tiled) or width (iid)")
      ->required();
  generate->add_option("--k", o.k);
  generate->add_option("--model", o.model)
      ->check(CLI::IsMember({"tiled", "iid"}));
  generate->add_flag("--augment", o.augment, "append alpha constant columns");
  generate->add_option("--seed", o.seed);
  generate->add_option("--out", o.out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check the covering property");
  verify->add_option("--t", o.t)->required();
  verify->add_option("--in", o.in, "matrix file (default stdin)");
  verify->add_flag("--naive", o.naive, "use the direct column scan");
  verify->add_option("--limit", o.limit, "max missing tuples listed (json)");
  verify->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* construct = app.add_subcommand("construct", "resample until covering");
  add_params(construct, true);
  construct->add_option("--k", o.k)->check(CLI::PositiveNumber);
  construct->add_option("--n", o.n, "total width (default: sufficient n)");
  construct->add_option("--seed", o.seed);
  construct->add_option("--max-resamples", o.max_resamples);
  construct->add_flag("--trace", o.trace, "record resampled events in the log");
  construct->add_option("--out", o.out, "matrix file (default stdout)");
  construct->add_option("--log", o.log, "JSON log file");

  auto* montecarlo = app.add_subcommand("montecarlo", "stochastic oracles");
  montecarlo->require_subcommand(1);
  auto add_mc = [&](CLI::App* cmd) {
    cmd->add_option("--t", o.t)->required();
    cmd->add_option("--alpha", o.alpha)->required();
    cmd->add_option("--k", o.k);
    cmd->add_option("--trials", o.trials);
    cmd->add_option("--seed", o.seed);
    cmd->add_option("--threads", o.threads);
    cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));
  };
  auto* mc_gamma = montecarlo->add_subcommand("gamma", "estimate gamma_k");
  add_mc(mc_gamma);
  mc_gamma->add_option("--target", o.target, "target vector (t letters)");
  auto* mc_lambda = montecarlo->add_subcommand("lambda", "estimate lambda_k");
  add_mc(mc_lambda);
  mc_lambda->add_option("--n-core", o.n)->required();
  auto* mc_enum = montecarlo->add_subcommand("enumerate", "exhaustive gamma_k");
  add_mc(mc_enum);
  auto* mc_minn = montecarlo->add_subcommand("minn", "empirical covering width");
  add_mc(mc_minn);
  mc_minn->add_option("--m", o.m)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*bound) return RunBound(o);
    if (*gamma) return RunGamma(o);
    if (*table) return RunTable(o);
    if (*generate) return RunGenerate(o);
    if (*verify) return RunVerify(o);
    if (*construct) return RunConstruct(o);
    if (*mc_gamma) return RunMonteCarloGamma(o);
    if (*mc_lambda) return RunMonteCarloLambda(o);
    if (*mc_enum) return RunMonteCarloEnumerate(o);
    if (*mc_minn) return RunMonteCarloMinN(o);
  } catch (const CliFailure& e) {
    std::cerr << "covlll: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "covlll: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
