// Copyright 2026 The smwt Authors
// SPDX-License-Identifier: Apache-2.0
//
// smwt: command-line front end over the C API.
//
// Exit codes: 0 ok, 1 verification failed, 2 input error, 3 numerical
// error, 4 update conditions failed (fallback result written),
// 5 inconsistent system (solution still written).

#include <smwt/smwt.h>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::json;

enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kInputError = 2,
  kNumericalError = 3,
  kFallback = 4,
  kInconsistent = 5,
};

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(smwt_status s) {
  switch (s) {
    case SMWT_ERR_NUMERICAL:
    case SMWT_ERR_SINGULAR:
    case SMWT_ERR_SINGULAR_CAPACITANCE:
    case SMWT_ERR_DEGENERATE:
    case SMWT_ERR_INTERNAL:
      return kNumericalError;
    default:
      return kInputError;
  }
}

void check(smwt_status s) {
  if (s != SMWT_OK) {
    throw Failure{exit_code_for(s), std::string(smwt_status_name(s)) + ": " + smwt_last_error()};
  }
}

struct TensorDeleter {
  void operator()(smwt_tensor* t) const { smwt_tensor_free(t); }
};
using Tensor = std::unique_ptr<smwt_tensor, TensorDeleter>;

struct Parts {
  smwt_split_parts p{};
  ~Parts() { smwt_split_parts_free(&p); }
};

Tensor load(const std::string& path) {
  smwt_tensor* t = nullptr;
  check(smwt_tensor_load_json(path.c_str(), &t));
  return Tensor(t);
}

void save(const Tensor& t, const std::string& path) { check(smwt_tensor_save_json(t.get(), path.c_str())); }

template <class F>
Tensor make(F&& f) {
  smwt_tensor* t = nullptr;
  check(f(&t));
  return Tensor(t);
}

double norm(const smwt_tensor* t) {
  double n = 0.0;
  check(smwt_fro_norm(t, &n));
  return n;
}

json penrose_json(const smwt_penrose_report& r) {
  return json{{"residuals", {r.residuals[0], r.residuals[1], r.residuals[2], r.residuals[3]}},
              {"passed", r.passed != 0},
              {"tol", r.tol}};
}

json condition_json(const std::string& mode, const smwt_condition_report& r, bool fallback) {
  json res = json::object();
  for (std::size_t k = 0; k < 6; ++k) res[smwt_condition_label(k)] = r.residuals[k];
  return json{{"mode", mode},
              {"applicable", r.applicable != 0},
              {"fallback", fallback},
              {"tol", r.tol},
              {"residuals", res}};
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw Failure{kInputError, "cannot write " + path};
  const std::string text = j.dump(2) + "\n";
  const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
  if (std::fclose(f) != 0 || !ok) throw Failure{kInputError, "write failed for " + path};
}

// ---- subcommands --------------------------------------------------------

struct PinvArgs {
  std::string input, output;
  double tol = 1.0;
};

int run_pinv(const PinvArgs& a) {
  Tensor t = load(a.input);
  Tensor p = make([&](smwt_tensor** o) { return smwt_pinv(t.get(), a.tol, o); });
  smwt_penrose_report r{};
  check(smwt_verify_penrose(t.get(), p.get(), 1e-10, &r));
  std::cerr << "penrose " << penrose_json(r).dump() << '\n';
  save(p, a.output);
  return kOk;
}

struct SmwArgs {
  std::string base, u, b, v, output, report;
  std::string mode = "pinv";
  double tol = 1e-8;
};

int run_smw_invertible(const SmwArgs& a, const Tensor& base, const Tensor& u, const Tensor& b,
                       const Tensor& v) {
  Tensor a_inv = make([&](smwt_tensor** o) { return smwt_inverse(base.get(), o); });
  Tensor s_inv = make([&](smwt_tensor** o) {
    return smwt_smw_invertible(a_inv.get(), u.get(), b.get(), v.get(), nullptr, o);
  });
  save(s_inv, a.output);
  return kOk;
}

int run_smw(const SmwArgs& a) {
  Tensor base = load(a.base);
  Tensor u = load(a.u);
  Tensor b = load(a.b);
  Tensor v = load(a.v);
  if (a.mode == "invertible") return run_smw_invertible(a, base, u, b, v);

  if (a.mode == "hermitian") {
    int herm = 0;
    check(smwt_is_hermitian(base.get(), a.tol, &herm));
    Tensor vh = make([&](smwt_tensor** o) { return smwt_conj_transpose(v.get(), o); });
    Tensor diff = make([&](smwt_tensor** o) { return smwt_subtract(u.get(), vh.get(), o); });
    if (!herm) throw Failure{kInputError, "hermitian mode needs a Hermitian base tensor"};
    if (norm(diff.get()) > a.tol * std::max(1.0, norm(u.get()))) {
      throw Failure{kInputError, "hermitian mode needs U equal to V^H"};
    }
  }

  Tensor a_pinv = make([&](smwt_tensor** o) { return smwt_pinv(base.get(), 1.0, o); });
  Tensor b_pinv = make([&](smwt_tensor** o) { return smwt_pinv(b.get(), 1.0, o); });
  Parts parts;
  check(smwt_decompose_update(base.get(), a_pinv.get(), u.get(), b.get(), v.get(), a.tol,
                              &parts.p));
  smwt_condition_report report{};
  check(smwt_check_conditions(&parts.p, b.get(), b_pinv.get(), a.tol, &report));

  bool usable = report.applicable != 0;
  if (a.mode == "orthogonal") usable = usable && norm(parts.p.X1) == 0.0 && norm(parts.p.X2) == 0.0;

  Tensor result;
  if (!usable) {
    Tensor s = make([&](smwt_tensor** o) {
      return smwt_apply_update(base.get(), u.get(), b.get(), v.get(), o);
    });
    result = make([&](smwt_tensor** o) { return smwt_pinv(s.get(), 1.0, o); });
  } else if (a.mode == "pinv") {
    result = make([&](smwt_tensor** o) {
      return smwt_smw_pinv(a_pinv.get(), &parts.p, b_pinv.get(), o);
    });
  } else if (a.mode == "orthogonal") {
    result = make([&](smwt_tensor** o) {
      return smwt_smw_pinv_orthogonal(a_pinv.get(), parts.p.E1, parts.p.E2, b_pinv.get(), o);
    });
  } else {
    result = make([&](smwt_tensor** o) {
      return smwt_smw_pinv_hermitian(a_pinv.get(), parts.p.X1, parts.p.Y1, parts.p.E1,
                                     b_pinv.get(), o);
    });
  }
  save(result, a.output);
  emit(condition_json(a.mode, report, !usable), a.report);
  return usable ? kOk : kFallback;
}

struct SolveArgs {
  std::string a, d, output;
  double tol = 1e-10;
};

int run_solve(const SolveArgs& s) {
  Tensor a = load(s.a);
  Tensor d = load(s.d);
  smwt_tensor* x = nullptr;
  smwt_solve_info info{};
  check(smwt_solve(a.get(), d.get(), s.tol, &x, &info));
  Tensor xt(x);
  save(xt, s.output);
  std::cout << json{{"consistent", info.consistent != 0},
                    {"consistency_residual", info.consistency_residual}}
                   .dump()
            << '\n';
  return info.consistent ? kOk : kInconsistent;
}

struct SweepArgs {
  std::string a, d, output;
  std::vector<double> eps_a;
  double eps_d = 0.01;
  double alpha_min = 1.0;
  double alpha_max = 1.0;
  std::size_t alpha_steps = 1;
};

int run_sweep(const SweepArgs& s) {
  Tensor a = load(s.a);
  Tensor d = load(s.d);
  if (s.alpha_steps == 0) throw Failure{kInputError, "--alpha-steps must be >= 1"};
  std::vector<double> alphas(s.alpha_steps);
  for (std::size_t k = 0; k < s.alpha_steps; ++k) {
    alphas[k] = s.alpha_steps == 1
                    ? s.alpha_min
                    : s.alpha_min + (s.alpha_max - s.alpha_min) * static_cast<double>(k) /
                                        static_cast<double>(s.alpha_steps - 1);
  }
  std::vector<smwt_bound_report> rows(s.eps_a.size() * alphas.size());
  check(smwt_sweep(a.get(), d.get(), s.eps_a.data(), s.eps_a.size(), s.eps_d, alphas.data(),
                   alphas.size(), rows.data(), rows.size()));
  check(smwt_write_sweep_csv(rows.data(), rows.size(), s.output.c_str()));
  return kOk;
}

struct VerifyArgs {
  std::string a, x;
  double tol = 1e-10;
};

int run_verify(const VerifyArgs& v) {
  Tensor a = load(v.a);
  Tensor x = load(v.x);
  smwt_penrose_report r{};
  check(smwt_verify_penrose(a.get(), x.get(), v.tol, &r));
  std::cout << penrose_json(r).dump() << '\n';
  return r.passed ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Einstein-product tensor inverses, low-rank updates and sensitivity bounds",
               "smwt"};
  app.set_version_flag("--version", smwt_version());
  app.require_subcommand(1);

  PinvArgs pinv_args;
  auto* pinv = app.add_subcommand("pinv", "Moore-Penrose inverse of a tensor file");
  pinv->add_option("input", pinv_args.input, "Tensor JSON")->required()->check(CLI::ExistingFile);
  pinv->add_option("--output", pinv_args.output, "Output tensor JSON")->required();
  pinv->add_option("--tol", pinv_args.tol, "Scale of the default rank cut")->capture_default_str();

  SmwArgs smw_args;
  auto* smw = app.add_subcommand("smw", "Inverse of A + U*B*V through a low-rank update identity");
  smw->add_option("base", smw_args.base, "Base tensor A")->required()->check(CLI::ExistingFile);
  smw->add_option("u", smw_args.u, "Factor U")->required()->check(CLI::ExistingFile);
  smw->add_option("b", smw_args.b, "Core B")->required()->check(CLI::ExistingFile);
  smw->add_option("v", smw_args.v, "Factor V")->required()->check(CLI::ExistingFile);
  smw->add_option("--mode", smw_args.mode, "Identity to apply")
      ->check(CLI::IsMember({"invertible", "pinv", "orthogonal", "hermitian"}))
      ->capture_default_str();
  smw->add_option("--tol", smw_args.tol, "Applicability tolerance")->capture_default_str();
  smw->add_option("--output", smw_args.output, "Output tensor JSON")->required();
  smw->add_option("--report", smw_args.report, "Condition report JSON (default: stdout)");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve A*X = D with X = pinv(A)*D");
  solve->add_option("a", solve_args.a, "Coefficient tensor")->required()->check(CLI::ExistingFile);
  solve->add_option("d", solve_args.d, "Right-hand side")->required()->check(CLI::ExistingFile);
  solve->add_option("--output", solve_args.output, "Solution tensor JSON")->required();
  solve->add_option("--tol", solve_args.tol, "Consistency tolerance")->capture_default_str();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Perturbation bound over scaled copies of A");
  sweep->add_option("a", sweep_args.a, "Coefficient tensor")->required()->check(CLI::ExistingFile);
  sweep->add_option("d", sweep_args.d, "Right-hand side")->required()->check(CLI::ExistingFile);
  sweep->add_option("--eps-a", sweep_args.eps_a, "Comma-separated eps_A values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--eps-d", sweep_args.eps_d, "eps_D")->capture_default_str();
  sweep->add_option("--alpha-min", sweep_args.alpha_min, "First scale factor")->capture_default_str();
  sweep->add_option("--alpha-max", sweep_args.alpha_max, "Last scale factor")->capture_default_str();
  sweep->add_option("--alpha-steps", sweep_args.alpha_steps, "Number of evenly spaced factors")
      ->capture_default_str();
  sweep->add_option("--output", sweep_args.output, "Output CSV")->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check the four Penrose equations for (A, X)");
  verify->add_option("a", verify_args.a, "Tensor A")->required()->check(CLI::ExistingFile);
  verify->add_option("x", verify_args.x, "Candidate pseudoinverse")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--tol", verify_args.tol, "Residual tolerance")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (pinv->parsed()) return run_pinv(pinv_args);
    if (smw->parsed()) return run_smw(smw_args);
    if (solve->parsed()) return run_solve(solve_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const Failure& f) {
    std::cerr << "smwt: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "smwt: " << e.what() << '\n';
    return kNumericalError;
  }
  return kInputError;
}
