#include <sstream>

#include "json.hpp"

#include "nullpar/verify.hpp"

namespace nullpar::verify {

using json = nlohmann::ordered_json;

namespace {

const char* verdict_name(Verdict v) { return v == Verdict::pass ? "pass" : "fail"; }

json point_json(const Point& x) {
  json a = json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) a.push_back(x[i]);
  return a;
}

// Same shortest round-trip form the JSON writer uses.
std::string num(double v) { return json(v).dump(); }

}  // namespace

// Schema "nullpar.report/1":
//   schema, fingerprint, seed, n, r, samples, skipped_points,
//   conventions{...}, points[[...]], checks[{name, verdict, max_residual,
//   tolerance, points_checked, claim, detail}], skipped[{name, reason}], passed
std::string to_json(const VerificationReport& rep) {
  json j;
  j["schema"] = "nullpar.report/1";
  j["fingerprint"] = rep.fingerprint;
  j["seed"] = rep.seed;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["samples"] = rep.points.size();
  j["skipped_points"] = rep.skipped_points;
  json conv = json::object();
  for (const auto& [k, v] : conventions()) conv[k] = v;
  j["conventions"] = conv;
  json pts = json::array();
  for (const auto& x : rep.points) pts.push_back(point_json(x));
  j["points"] = pts;
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name},
                      {"verdict", verdict_name(c.verdict)},
                      {"max_residual", c.max_residual},
                      {"tolerance", c.tolerance},
                      {"points_checked", c.points_checked},
                      {"claim", c.claim},
                      {"detail", c.detail}});
  }
  j["checks"] = checks;
  json skipped = json::array();
  for (const auto& s : rep.skipped) skipped.push_back({{"name", s.name}, {"reason", s.reason}});
  j["skipped"] = skipped;
  j["passed"] = rep.passed();
  return j.dump(2) + "\n";
}

std::string to_text(const VerificationReport& rep) {
  std::ostringstream out;
  out << "nullpar verification report\n";
  out << "fingerprint: " << rep.fingerprint << "\n";
  out << "seed: " << rep.seed << "  n: " << rep.n << "  r: " << rep.r
      << "  points: " << rep.points.size() << "  skipped points: " << rep.skipped_points << "\n";
  out << "conventions:\n";
  for (const auto& [k, v] : conventions()) out << "  " << k << ": " << v << "\n";
  out << "checks:\n";
  for (const auto& c : rep.checks) {
    out << "  [" << verdict_name(c.verdict) << "] " << c.name << "  residual " << num(c.max_residual)
        << " <= " << num(c.tolerance) << "  (" << c.points_checked << " points)\n";
    out << "      " << c.claim << "\n";
    if (!c.detail.empty()) out << "      " << c.detail << "\n";
  }
  for (const auto& s : rep.skipped) out << "  [skipped] " << s.name << ": " << s.reason << "\n";
  out << "result: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string to_json(const ExtensionReport& rep) {
  json j;
  j["schema"] = "nullpar.extension/1";
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["k"] = rep.k;
  j["l"] = rep.l;
  j["m"] = rep.m;
  j["pairing_params"] = rep.pairing_params;
  j["metric_params"] = rep.metric_params;
  j["pairing_rank"] = rep.pairing_rank;
  j["metric_rank"] = rep.metric_rank;
  j["points"] = rep.points;
  j["pointwise_variants"] = rep.pointwise_variants;
  j["max_null_residual"] = rep.max_null_residual;
  j["max_complement_angle"] = rep.max_complement_angle;
  j["all_nondegenerate"] = rep.all_nondegenerate;
  j["reproduce_pairing"] = rep.reproduce_pairing;
  j["reproduce_metric"] = rep.reproduce_metric;
  j["field_variants"] = rep.field_variants;
  j["failed_field_variants"] = rep.failed_field_variants;
  j["passed"] = rep.passed();
  return j.dump(2) + "\n";
}

std::string to_text(const ExtensionReport& rep) {
  std::ostringstream out;
  out << "nullpar extension report (n=" << rep.n << ", r=" << rep.r << ")\n";
  out << "pairing extension: k=" << rep.k << " l=" << rep.l << " m=" << rep.m
      << "  free parameters klm = (n-2r)r = " << rep.pairing_params
      << "  measured rank " << rep.pairing_rank << "\n";
  out << "metric extension: free parameters r(r+1)/2 = " << rep.metric_params
      << "  measured rank " << rep.metric_rank << "\n";
  if (rep.pairing_params == 0) out << "pairing extension is unique\n";
  out << "pointwise: " << rep.pointwise_variants << " extensions at " << rep.points << " points\n";
  out << "  max |g(P,P)|: " << num(rep.max_null_residual) << "\n";
  out << "  max angle(P', P^perp): " << num(rep.max_complement_angle) << "\n";
  out << "  all nondegenerate: " << (rep.all_nondegenerate ? "yes" : "no") << "\n";
  out << "  reproduces H: " << num(rep.reproduce_pairing) << "  reproduces g: "
      << num(rep.reproduce_metric) << "\n";
  out << "field variants:\n";
  for (const auto& v : rep.field_variants) out << "  " << v << "\n";
  out << "result: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace nullpar::verify
