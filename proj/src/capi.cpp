#include "nullpar/nullpar.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "nullpar/errors.hpp"
#include "nullpar/verify.hpp"
#include "nullpar/walker.hpp"
#include "nullpar/walker_io.hpp"

struct nullpar_walker {
  nullpar::walker::WalkerData data;
};

struct nullpar_report {
  nullpar::verify::VerificationReport report;
};

struct nullpar_extension {
  nullpar::verify::ExtensionReport report;
};

namespace {

thread_local std::string last_error;
thread_local long last_offset = -1;

nullpar_status status_of(nullpar::Errc c) {
  using nullpar::Errc;
  switch (c) {
    case Errc::parse: return NULLPAR_ERR_PARSE;
    case Errc::index_range: return NULLPAR_ERR_INDEX;
    case Errc::evaluation: return NULLPAR_ERR_EVALUATION;
    case Errc::degenerate: return NULLPAR_ERR_DEGENERATE;
    case Errc::rank: return NULLPAR_ERR_RANK;
    case Errc::invariant: return NULLPAR_ERR_INVARIANT;
    case Errc::inclusion: return NULLPAR_ERR_INCLUSION;
    case Errc::range: return NULLPAR_ERR_ARGUMENT;
    case Errc::inconsistent: return NULLPAR_ERR_INCONSISTENT;
    case Errc::unsupported: return NULLPAR_ERR_UNSUPPORTED;
    case Errc::io: return NULLPAR_ERR_IO;
  }
  return NULLPAR_ERR_INTERNAL;
}

nullpar_status fail(nullpar_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
nullpar_status guard(F&& f) {
  last_error.clear();
  last_offset = -1;
  try {
    f();
    return NULLPAR_OK;
  } catch (const nullpar::ParseError& e) {
    last_offset = static_cast<long>(e.offset());
    return fail(NULLPAR_ERR_PARSE, e.what());
  } catch (const nullpar::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(NULLPAR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NULLPAR_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nullpar::verify::ReportConfig config_of(const nullpar_verify_options* opts) {
  nullpar::verify::ReportConfig c;
  if (opts) {
    if (opts->samples < 1) throw nullpar::Error(nullpar::Errc::range, "samples must be >= 1");
    if (!(opts->tol > 0.0)) throw nullpar::Error(nullpar::Errc::range, "tol must be positive");
    c.seed = opts->seed;
    c.samples = opts->samples;
    c.tol = opts->tol;
  }
  return c;
}

}  // namespace

extern "C" {

const char* nullpar_last_error(void) { return last_error.c_str(); }
long nullpar_last_error_offset(void) { return last_offset; }

const char* nullpar_status_name(nullpar_status s) {
  switch (s) {
    case NULLPAR_OK: return "ok";
    case NULLPAR_ERR_ARGUMENT: return "invalid argument";
    case NULLPAR_ERR_PARSE: return "parse error";
    case NULLPAR_ERR_INDEX: return "index out of range";
    case NULLPAR_ERR_EVALUATION: return "evaluation error";
    case NULLPAR_ERR_DEGENERATE: return "degenerate metric";
    case NULLPAR_ERR_RANK: return "rank deficient";
    case NULLPAR_ERR_INVARIANT: return "invariant violated";
    case NULLPAR_ERR_INCLUSION: return "inclusion violated";
    case NULLPAR_ERR_INCONSISTENT: return "inconsistent data";
    case NULLPAR_ERR_UNSUPPORTED: return "unsupported input";
    case NULLPAR_ERR_IO: return "i/o error";
    case NULLPAR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void nullpar_string_free(char* s) { std::free(s); }

nullpar_status nullpar_walker_generate(int n, int r, uint64_t seed, nullpar_walker** out) {
  if (!out) return fail(NULLPAR_ERR_ARGUMENT, "out is null");
  *out = nullptr;
  if (n < 2 || r < 0 || 2 * r > n) return fail(NULLPAR_ERR_ARGUMENT, "need n >= 2 and 0 <= r <= n/2");
  return guard([&] { *out = new nullpar_walker{nullpar::walker::random_walker_data(n, r, seed)}; });
}

nullpar_status nullpar_walker_parse(const char* text, size_t len, nullpar_walker** out) {
  if (!text || !out) return fail(NULLPAR_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] { *out = new nullpar_walker{nullpar::walker::parse_walker({text, len})}; });
}

nullpar_status nullpar_walker_load(const char* path, nullpar_walker** out) {
  if (!path || !out) return fail(NULLPAR_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] { *out = new nullpar_walker{nullpar::walker::load_walker(path)}; });
}

nullpar_status nullpar_walker_save(const nullpar_walker* w, const char* path) {
  if (!w || !path) return fail(NULLPAR_ERR_ARGUMENT, "null argument");
  return guard([&] { nullpar::walker::save_walker(w->data, path); });
}

nullpar_status nullpar_walker_to_text(const nullpar_walker* w, char** out) {
  if (!w || !out) return fail(NULLPAR_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] { *out = copy_string(nullpar::walker::format_walker(w->data)); });
}

nullpar_status nullpar_walker_validate(const nullpar_walker* w) {
  if (!w) return fail(NULLPAR_ERR_ARGUMENT, "null argument");
  return guard([&] { nullpar::walker::validate(w->data); });
}

nullpar_status nullpar_walker_negative_control(const nullpar_walker* w, nullpar_walker** out) {
  if (!w || !out) return fail(NULLPAR_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    auto perturbed = nullpar::walker::perturb_independence(w->data);
    if (perturbed) *out = new nullpar_walker{std::move(*perturbed)};
  });
}

int nullpar_walker_n(const nullpar_walker* w) { return w ? w->data.n : -1; }
int nullpar_walker_r(const nullpar_walker* w) { return w ? w->data.r : -1; }
void nullpar_walker_free(nullpar_walker* w) { delete w; }

void nullpar_verify_options_default(nullpar_verify_options* opts) {
  if (!opts) return;
  const nullpar::verify::ReportConfig c;
  opts->seed = c.seed;
  opts->samples = c.samples;
  opts->tol = c.tol;
}

nullpar_status nullpar_verify(const nullpar_walker* w, const nullpar_verify_options* opts,
                              nullpar_report** out) {
  if (!w || !out) return fail(NULLPAR_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    const auto config = config_of(opts);
    const auto& d = w->data;
    const nullpar::MetricField g = nullpar::walker::assemble_unchecked(d);
    const nullpar::Distribution dist = d.r > 0 ? nullpar::walker::canonical_distribution(d.n, d.r)
                                               : nullpar::Distribution::coordinate(d.n, 0);
    *out = new nullpar_report{nullpar::verify::run_full_report(g, dist, config)};
  });
}

int nullpar_report_passed(const nullpar_report* rep) { return rep && rep->report.passed() ? 1 : 0; }

size_t nullpar_report_check_count(const nullpar_report* rep) {
  return rep ? rep->report.checks.size() : 0;
}

nullpar_status nullpar_report_check(const nullpar_report* rep, size_t index, nullpar_check_info* out) {
  if (!rep || !out) return fail(NULLPAR_ERR_ARGUMENT, "null argument");
  if (index >= rep->report.checks.size()) return fail(NULLPAR_ERR_ARGUMENT, "check index out of range");
  const auto& c = rep->report.checks[index];
  out->name = c.name.c_str();
  out->max_residual = c.max_residual;
  out->tolerance = c.tolerance;
  out->points_checked = c.points_checked;
  out->passed = c.passed() ? 1 : 0;
  return NULLPAR_OK;
}

size_t nullpar_report_skipped_count(const nullpar_report* rep) {
  return rep ? rep->report.skipped.size() : 0;
}

nullpar_status nullpar_report_serialize(const nullpar_report* rep, nullpar_format format, char** out) {
  if (!rep || !out) return fail(NULLPAR_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    *out = copy_string(format == NULLPAR_FORMAT_TEXT ? nullpar::verify::to_text(rep->report)
                                                     : nullpar::verify::to_json(rep->report));
  });
}

void nullpar_report_free(nullpar_report* rep) { delete rep; }

nullpar_status nullpar_extend(const nullpar_walker* w, const nullpar_verify_options* opts,
                              nullpar_extension** out) {
  if (!w || !out) return fail(NULLPAR_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    *out = new nullpar_extension{nullpar::verify::run_extension_demo(w->data, config_of(opts))};
  });
}

int nullpar_extension_passed(const nullpar_extension* ext) {
  return ext && ext->report.passed() ? 1 : 0;
}

void nullpar_extension_counts(const nullpar_extension* ext, int* pairing_params, int* metric_params,
                              int* pairing_rank, int* metric_rank) {
  if (!ext) return;
  if (pairing_params) *pairing_params = ext->report.pairing_params;
  if (metric_params) *metric_params = ext->report.metric_params;
  if (pairing_rank) *pairing_rank = ext->report.pairing_rank;
  if (metric_rank) *metric_rank = ext->report.metric_rank;
}

nullpar_status nullpar_extension_serialize(const nullpar_extension* ext, nullpar_format format,
                                           char** out) {
  if (!ext || !out) return fail(NULLPAR_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guard([&] {
    *out = copy_string(format == NULLPAR_FORMAT_TEXT ? nullpar::verify::to_text(ext->report)
                                                     : nullpar::verify::to_json(ext->report));
  });
}

void nullpar_extension_free(nullpar_extension* ext) { delete ext; }

}  // extern "C"
