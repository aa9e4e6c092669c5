// nullpar command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success / expected outcome, 1 input or usage error,
// 2 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "nullpar/nullpar.h"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCheckFailure = 2;

struct WalkerDeleter {
  void operator()(nullpar_walker* w) const { nullpar_walker_free(w); }
};
struct ReportDeleter {
  void operator()(nullpar_report* r) const { nullpar_report_free(r); }
};
struct ExtensionDeleter {
  void operator()(nullpar_extension* e) const { nullpar_extension_free(e); }
};
using Walker = std::unique_ptr<nullpar_walker, WalkerDeleter>;
using Report = std::unique_ptr<nullpar_report, ReportDeleter>;
using Extension = std::unique_ptr<nullpar_extension, ExtensionDeleter>;

struct Options {
  std::uint64_t seed = 1;
  int n = 4;
  int r = 1;
  int samples = 25;
  double tol = 1e-9;
  std::string out;
  std::string format = "json";
  std::string file;
};

int report_error(nullpar_status s, const std::string& context) {
  std::cerr << "error: " << context << ": " << nullpar_last_error() << " ("
            << nullpar_status_name(s) << ")\n";
  return s == NULLPAR_ERR_INVARIANT ? kCheckFailure : kInputError;
}

// Writes to --out or stdout. Returns false on I/O failure.
bool emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(o.out, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "error: cannot write '" << o.out << "'\n";
    return false;
  }
  return true;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  nullpar_string_free(s);
  return out;
}

nullpar_verify_options verify_options(const Options& o) {
  nullpar_verify_options v;
  nullpar_verify_options_default(&v);
  v.seed = o.seed;
  v.samples = o.samples;
  v.tol = o.tol;
  return v;
}

nullpar_format format_of(const Options& o) {
  return o.format == "text" ? NULLPAR_FORMAT_TEXT : NULLPAR_FORMAT_JSON;
}

int load(const std::string& path, Walker& w) {
  nullpar_walker* raw = nullptr;
  const nullpar_status s = nullpar_walker_load(path.c_str(), &raw);
  if (s != NULLPAR_OK) return report_error(s, path);
  w.reset(raw);
  return kOk;
}

// Verifies w and prints the report; returns -1 when a report could not be
// produced (error already printed), else 1 for pass and 0 for fail.
int run_verify(const nullpar_walker* w, const Options& o, bool print, int* error_code) {
  const nullpar_verify_options v = verify_options(o);
  nullpar_report* raw = nullptr;
  const nullpar_status s = nullpar_verify(w, &v, &raw);
  if (s != NULLPAR_OK) {
    *error_code = report_error(s, "verify");
    return -1;
  }
  Report rep(raw);
  if (print) {
    char* text = nullptr;
    const nullpar_status ss = nullpar_report_serialize(rep.get(), format_of(o), &text);
    if (ss != NULLPAR_OK || !emit(o, take(text))) {
      *error_code = kInputError;
      return -1;
    }
  }
  return nullpar_report_passed(rep.get());
}

int cmd_gen(const Options& o) {
  if (o.n < 2 || o.r < 0 || 2 * o.r > o.n) {
    std::cerr << "error: need n >= 2 and 0 <= r <= n/2 (got n=" << o.n << ", r=" << o.r << ")\n";
    return kInputError;
  }
  nullpar_walker* raw = nullptr;
  nullpar_status s = nullpar_walker_generate(o.n, o.r, o.seed, &raw);
  if (s != NULLPAR_OK) return report_error(s, "gen");
  Walker w(raw);
  char* text = nullptr;
  s = nullpar_walker_to_text(w.get(), &text);
  if (s != NULLPAR_OK) return report_error(s, "gen");
  return emit(o, take(text)) ? kOk : kInputError;
}

int cmd_verify(const Options& o) {
  Walker w;
  if (int rc = load(o.file, w); rc != kOk) return rc;
  int err = kOk;
  const int passed = run_verify(w.get(), o, true, &err);
  if (passed < 0) return err;
  return passed ? kOk : kCheckFailure;
}

int cmd_extend(const Options& o) {
  Walker w;
  if (!o.file.empty()) {
    if (int rc = load(o.file, w); rc != kOk) return rc;
  } else {
    if (o.n < 2 || o.r < 0 || 2 * o.r > o.n) {
      std::cerr << "error: need n >= 2 and 0 <= r <= n/2\n";
      return kInputError;
    }
    nullpar_walker* raw = nullptr;
    const nullpar_status s = nullpar_walker_generate(o.n, o.r, o.seed, &raw);
    if (s != NULLPAR_OK) return report_error(s, "extend");
    w.reset(raw);
  }
  const nullpar_verify_options v = verify_options(o);
  nullpar_extension* raw = nullptr;
  nullpar_status s = nullpar_extend(w.get(), &v, &raw);
  if (s != NULLPAR_OK) return report_error(s, "extend");
  Extension ext(raw);
  char* text = nullptr;
  s = nullpar_extension_serialize(ext.get(), format_of(o), &text);
  if (s != NULLPAR_OK) return report_error(s, "extend");
  if (!emit(o, take(text))) return kInputError;
  return nullpar_extension_passed(ext.get()) ? kOk : kCheckFailure;
}

int cmd_negctrl(const Options& o) {
  Walker w;
  if (int rc = load(o.file, w); rc != kOk) return rc;
  nullpar_walker* raw = nullptr;
  const nullpar_status s = nullpar_walker_negative_control(w.get(), &raw);
  if (s != NULLPAR_OK) return report_error(s, "negctrl");
  if (!raw) {
    std::cout << "no control available: H is empty (n = 2r), and B may depend on x1..xr\n";
    return kOk;
  }
  Walker perturbed(raw);
  int err = kOk;
  const int passed = run_verify(perturbed.get(), o, !o.out.empty(), &err);
  if (passed < 0) return err;
  if (passed) {
    std::cerr << "unexpected: perturbed instance (H[1][1] += x1) passed verification\n";
    return kCheckFailure;
  }
  std::cout << "negative control failed verification as expected (H[1][1] += x1)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Null parallel distributions in Walker coordinates: generate, verify, extend"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
    cmd->add_option("--out", o.out, "output path (default: stdout)");
  };
  auto checks = [&o](CLI::App* cmd) {
    cmd->add_option("--samples", o.samples, "sample points per check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tol", o.tol, "residual tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "write a random Walker data file");
  common(gen);
  gen->add_option("--n", o.n, "dimension")->capture_default_str();
  gen->add_option("--r", o.r, "rank of the null distribution")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "verify a Walker data file");
  common(verify);
  checks(verify);
  verify->add_option("file", o.file, "Walker data file")->required();

  auto* extend = app.add_subcommand("extend", "demonstrate the extension freedom");
  common(extend);
  checks(extend);
  extend->add_option("file", o.file, "Walker data file (default: generate from --n/--r/--seed)");
  extend->add_option("--n", o.n, "dimension when generating")->capture_default_str();
  extend->add_option("--r", o.r, "rank when generating")->capture_default_str();

  auto* negctrl = app.add_subcommand("negctrl", "check that an x1-dependent H fails verification");
  common(negctrl);
  checks(negctrl);
  negctrl->add_option("file", o.file, "Walker data file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (gen->parsed()) return cmd_gen(o);
  if (verify->parsed()) return cmd_verify(o);
  if (extend->parsed()) return cmd_extend(o);
  return cmd_negctrl(o);
}
