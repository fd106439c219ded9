#include "dkcert/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dkcert/certificates.hpp"
#include "dkcert/error.hpp"

namespace dkcert {

namespace {

std::string_view kind_label(ThresholdKind kind) {
  return kind == ThresholdKind::RatioNorm ? "E" : "W/delta";
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_num(const Json& j) {
  if (j.is_null()) return "inf";
  if (j.is_number()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", j.get<double>());
    return buf;
  }
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  return j.dump();
}

std::string fmt_complex(const Json& j) {
  const double re = j[0].is_null() ? kInf : j[0].get<double>();
  const double im = j[1].is_null() ? kInf : j[1].get<double>();
  return fmt17(re) + (std::signbit(im) ? " - " : " + ") + fmt17(std::abs(im)) + "i";
}

Json optional_to_json(const std::optional<double>& x) {
  if (!x) return nullptr;
  return real_to_json(*x);
}

Json error_report(const std::string& code, const std::string& message) {
  return Json{{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

ThresholdTable threshold_table(std::size_t n, const NormIndex& p) {
  ThresholdTable table;
  auto& rows = table.rows;
  const auto E = ThresholdKind::RatioNorm;
  const auto W = ThresholdKind::CorrectionNorm;

  rows.push_back({"radius_theorem", E, radius_theorem(n, p), false});
  rows.push_back({"radius_cor2", E, radius_cor2(n, p, false), false});
  rows.push_back({"radius_cor2_sharp", E, radius_cor2(n, p, true), false});
  rows.push_back({"radius_cor3", E, radius_cor3(n, p), false});
  rows.push_back({"radius_han", E, radius_han(n, p), false});

  if (p.is_one()) {
    rows.push_back({"radius_cor4", E, radius_cor4(), false});
    rows.push_back({"radius_zhaowang_l1", W, radius_zhaowang_l1(n), false});
    if (n >= 4) {
      rows.push_back({"c_wangzhao_l1", W, c_wangzhao_l1(n), false});
    } else {
      table.notes.push_back("c_wangzhao_l1 omitted: requires n >= 4");
    }
  } else {
    table.notes.push_back("radius_cor4 omitted: p = 1 only");
    table.notes.push_back("radius_zhaowang_l1 omitted: p = 1 only");
    table.notes.push_back("c_wangzhao_l1 omitted: p = 1 only");
  }

  if (p.is_infinite()) {
    // lambda_zheng(C, n) = phi(C, n, inf), so its threshold on C is R(n, inf).
    rows.push_back({"lambda_zheng", W, radius_theorem(n, p), false});
    rows.push_back({"radius_cor7", E, radius_cor7(n), false});
    rows.push_back({"c_wangzhao_inf", W, c_wangzhao_inf(n), false});
    rows.push_back({"radius_petkovic_herceg", W, radius_petkovic_herceg(n), true});
  } else {
    table.notes.push_back("lambda_zheng omitted: p = inf only");
    table.notes.push_back("radius_cor7 omitted: p = inf only");
    table.notes.push_back("c_wangzhao_inf omitted: p = inf only");
    table.notes.push_back("radius_petkovic_herceg omitted: p = inf only");
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const Threshold& a, const Threshold& b) { return a.value > b.value; });
  return table;
}

Json certificate_to_json(const Certificate& cert) {
  return Json{{"e0", real_to_json(cert.e0)},
              {"lambda", real_to_json(cert.lambda)},
              {"theta", real_to_json(cert.theta)},
              {"satisfied", cert.satisfied},
              {"strict", cert.strict}};
}

Json trace_to_json(const IterationTrace& trace) {
  Json records = Json::array();
  for (const auto& r : trace.records) {
    records.push_back(Json{{"k", r.k},
                           {"z", complex_list_to_json(r.z)},
                           {"e", real_to_json(r.e)},
                           {"w_norm", real_to_json(r.w_norm)},
                           {"step_norm", real_to_json(r.step_norm)},
                           {"h", real_to_json(r.h)},
                           {"lambda", real_to_json(r.lambda)},
                           {"theta", real_to_json(r.theta)},
                           {"apost_bound", optional_to_json(r.apost_bound)},
                           {"terminal", r.terminal}});
  }
  Json curve = Json::array();
  for (double b : trace.apriori_curve) curve.push_back(real_to_json(b));
  Json out{{"records", std::move(records)},
           {"apriori_curve", std::move(curve)},
           {"stop_reason", std::string(to_string(trace.reason))}};
  if (trace.error) {
    out["error"] = {{"code", std::string(to_string(*trace.error))},
                    {"message", trace.error_message}};
  }
  return out;
}

CommandResult cmd_solve(const ProblemInput& input) {
  const Polynomial poly = build_polynomial(input);
  const PointVector z0 = build_initial(input, poly);
  const SolverOptions opts = build_options(input);
  const IterationTrace trace = run_sor(poly, z0, opts);

  Json cert = certificate_to_json(trace.certificate);
  cert["radius"] = radius_theorem(poly.degree(), opts.p);

  Json result{{"converged", trace.converged},
              {"iterations", static_cast<int>(trace.records.size()) - 1},
              {"final_roots", complex_list_to_json(trace.final)}};
  CommandResult out;
  out.report = Json{{"input", to_json(input)},
                    {"certificate", std::move(cert)},
                    {"trace", trace_to_json(trace)},
                    {"result", std::move(result)}};
  out.exit_code = trace.converged ? kExitOk : kExitNotConverged;
  return out;
}

CommandResult cmd_certify(const ProblemInput& input) {
  const Polynomial poly = build_polynomial(input);
  const PointVector z0 = build_initial(input, poly);
  const std::size_t n = poly.degree();
  const NormIndex& p = input.p;

  const OperatorData data = certificate_quantity(poly, z0, p);
  const Certificate cert = make_certificate(data.e, n, p);
  const double w_over_delta = data.w_norm / data.delta;
  const ThresholdTable table = threshold_table(n, p);

  Json checks = Json::array();
  for (const auto& row : table.rows) {
    const double quantity = row.kind == ThresholdKind::RatioNorm ? data.e : w_over_delta;
    bool pass = row.strict ? quantity < row.value : quantity <= row.value;
    if (row.name == "lambda_zheng") {
      // Direct form: 0 < C < 1/2 and lambda(C) <= 1.
      pass = quantity == 0.0 ||
             (quantity < 0.5 && lambda_zheng(quantity, n) <= 1.0);
    }
    checks.push_back(Json{{"name", row.name},
                          {"quantity", std::string(kind_label(row.kind))},
                          {"value", real_to_json(quantity)},
                          {"threshold", row.value},
                          {"pass", pass}});
  }

  Json cert_json = certificate_to_json(cert);
  cert_json["phi"] = cert_json["lambda"];
  cert_json["radius"] = radius_theorem(n, p);
  cert_json["w_over_delta"] = real_to_json(w_over_delta);

  Json result{{"theorem", {{"pass", cert.satisfied}, {"strict", cert.strict}}},
              {"checks", std::move(checks)},
              {"notes", table.notes}};
  CommandResult out;
  out.report = Json{{"input", to_json(input)},
                    {"certificate", std::move(cert_json)},
                    {"trace", nullptr},
                    {"result", std::move(result)}};
  out.exit_code = cert.satisfied ? kExitOk : kExitNotConverged;
  return out;
}

CommandResult cmd_compare_sor(const ProblemInput& input) {
  const Polynomial poly = build_polynomial(input);
  const PointVector z0 = build_initial(input, poly);
  SolverOptions opts = build_options(input);

  opts.mode = StepMode::SorWangZhao;
  const IterationTrace wz = run_sor(poly, z0, opts);
  opts.mode = StepMode::SorNew;
  const IterationTrace nw = run_sor(poly, z0, opts);

  // Both parameters are evaluated at the same points: the sor_new iterates.
  Json ratios = Json::array();
  double min_ratio = kInf;
  for (const auto& rec : nw.records) {
    const OperatorData data = certificate_quantity(poly, rec.z, opts.p);
    const double hn = h_new(data);
    const double hw = h_wangzhao(data);
    if (hn < 1.0) {
      const double ratio = hn / hw;
      min_ratio = std::min(min_ratio, ratio);
      ratios.push_back(Json{{"k", rec.k}, {"h_new", hn}, {"h_wz", hw}, {"ratio", ratio}});
    }
  }

  auto summary = [](const IterationTrace& t) {
    Json h = Json::array();
    for (const auto& r : t.records) h.push_back(r.h);
    return Json{{"converged", t.converged},
                {"iterations", static_cast<int>(t.records.size()) - 1},
                {"h", std::move(h)},
                {"final_roots", complex_list_to_json(t.final)}};
  };

  Json result{{"sor_wz", summary(wz)},
              {"sor_new", summary(nw)},
              {"ratios", std::move(ratios)},
              {"min_ratio", real_to_json(min_ratio)}};
  CommandResult out;
  out.report = Json{{"input", to_json(input)},
                    {"certificate", certificate_to_json(nw.certificate)},
                    {"trace", {{"sor_wz", trace_to_json(wz)}, {"sor_new", trace_to_json(nw)}}},
                    {"result", std::move(result)}};
  out.exit_code = (wz.converged && nw.converged) ? kExitOk : kExitNotConverged;
  return out;
}

CommandResult cmd_radii(std::size_t n, const NormIndex& p) {
  const ThresholdTable table = threshold_table(n, p);
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json phi_value = nullptr;
    if (row.value < phi_domain_end(p)) phi_value = real_to_json(phi(row.value, n, p));
    rows.push_back(Json{{"name", row.name},
                        {"quantity", std::string(kind_label(row.kind))},
                        {"value", row.value},
                        {"phi", std::move(phi_value)}});
  }
  Json pj = p.is_infinite() ? Json("inf") : Json(p.p());
  CommandResult out;
  out.report = Json{{"n", n}, {"p", pj}, {"rows", std::move(rows)}, {"notes", table.notes}};
  return out;
}

CommandResult run_document(const std::string& command, const Json& doc) {
  try {
    const ProblemInput input = parse_problem(doc);
    if (command == "solve") return cmd_solve(input);
    if (command == "certify") return cmd_certify(input);
    if (command == "compare-sor") return cmd_compare_sor(input);
    return {error_report("InvalidOption", "unknown command '" + command + "'"), kExitInputError};
  } catch (const Error& err) {
    return {error_report(std::string(to_string(err.code())), err.what()), kExitInputError};
  } catch (const Json::exception& err) {
    return {error_report("ParseError", err.what()), kExitInputError};
  }
}

std::string render_text(const std::string& command, const Json& report) {
  std::ostringstream os;
  if (report.contains("error")) {
    os << "error: " << report["error"]["message"].get<std::string>() << "\n";
    return os.str();
  }

  if (command == "radii") {
    os << "n = " << report["n"] << ", p = " << fmt_num(report["p"]) << "\n";
    os << "name                      quantity  value                phi\n";
    for (const auto& row : report["rows"]) {
      char line[160];
      std::snprintf(line, sizeof line, "%-25s %-9s %-20s %s\n",
                    row["name"].get<std::string>().c_str(),
                    row["quantity"].get<std::string>().c_str(),
                    fmt17(row["value"].get<double>()).c_str(), fmt_num(row["phi"]).c_str());
      os << line;
    }
    for (const auto& note : report["notes"]) os << "note: " << note.get<std::string>() << "\n";
    return os.str();
  }

  const Json& cert = report["certificate"];
  os << "certificate: E0 = " << fmt_num(cert["e0"]) << ", lambda = " << fmt_num(cert["lambda"])
     << ", theta = " << fmt_num(cert["theta"]) << ", satisfied = " << fmt_num(cert["satisfied"])
     << ", strict = " << fmt_num(cert["strict"]);
  if (cert.contains("radius")) os << ", R(n,p) = " << fmt_num(cert["radius"]);
  os << "\n";

  const Json& result = report["result"];
  if (command == "certify") {
    os << "theorem: " << (result["theorem"]["pass"].get<bool>() ? "pass" : "fail")
       << (result["theorem"]["strict"].get<bool>() ? " (strict)" : "") << "\n";
    for (const auto& c : result["checks"]) {
      os << "  " << c["name"].get<std::string>() << " [" << c["quantity"].get<std::string>()
         << " = " << fmt_num(c["value"]) << " vs " << fmt_num(c["threshold"])
         << "]: " << (c["pass"].get<bool>() ? "pass" : "fail") << "\n";
    }
    for (const auto& note : result["notes"]) os << "note: " << note.get<std::string>() << "\n";
    return os.str();
  }

  if (command == "solve") {
    os << "k    E            step         h            a posteriori\n";
    for (const auto& r : report["trace"]["records"]) {
      char line[160];
      std::snprintf(line, sizeof line, "%-4d %-12s %-12s %-12s %s\n", r["k"].get<int>(),
                    fmt_num(r["e"]).c_str(), fmt_num(r["step_norm"]).c_str(),
                    fmt_num(r["h"]).c_str(),
                    r["apost_bound"].is_null() ? "-" : fmt_num(r["apost_bound"]).c_str());
      os << line;
    }
    const auto& curve = report["trace"]["apriori_curve"];
    if (!curve.empty()) {
      os << "a priori:";
      for (const auto& b : curve) os << " " << fmt_num(b);
      os << "\n";
    }
    os << "converged: " << fmt_num(result["converged"]) << " after " << result["iterations"]
       << " iterations\n";
    for (const auto& z : result["final_roots"]) os << "  " << fmt_complex(z) << "\n";
    return os.str();
  }

  // compare-sor
  for (const char* key : {"sor_wz", "sor_new"}) {
    const auto& run = result[key];
    os << key << ": converged = " << fmt_num(run["converged"]) << ", iterations = "
       << run["iterations"] << ", h =";
    for (const auto& h : run["h"]) os << " " << fmt_num(h);
    os << "\n";
  }
  for (const auto& r : result["ratios"]) {
    os << "  k = " << r["k"] << ": h_new / h_wz = " << fmt_num(r["h_new"]) << " / "
       << fmt_num(r["h_wz"]) << " = " << fmt_num(r["ratio"]) << "\n";
  }
  return os.str();
}

}  // namespace dkcert
