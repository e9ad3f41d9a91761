#include "bfa/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace bfa {

namespace {

using nlohmann::json;

std::string double_str(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json dyadic_json(const Dyadic& d) {
  return json{{"numerator", d.num}, {"exponent", d.exp}, {"value", d.value()}};
}

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    default:
      return "not-applicable";
  }
}

json certificate_json(const LtfCertificate& cert) {
  json j;
  j["verdict"] = cert.member ? "member" : "non-member";
  j["degree"] = cert.degree;
  j["features"] = cert.features;
  if (cert.member) {
    json weights = json::array();
    for (const BigRat& w : cert.weights) weights.push_back(rat_str(w));
    j["weights"] = weights;
  } else {
    json witness = json::array();
    for (const BigRat& y : cert.witness) witness.push_back(rat_str(y));
    j["witness"] = witness;
  }
  return j;
}

json report_json(const ClassReport& report) {
  json j;
  j["bent"] = verdict_str(report.bent);
  if (report.plateaued_order)
    j["plateaued_order"] = *report.plateaued_order;
  else
    j["plateaued_order"] = nullptr;
  j["sac"] = report.sac;
  if (report.sac_order)
    j["sac_order"] = *report.sac_order;
  else
    j["sac_order"] = nullptr;
  j["pc_degree"] = report.pc_degree;
  j["monotone"] = report.monotone;
  if (report.ltf)
    j["ltf"] = certificate_json(*report.ltf);
  else
    j["ltf"] = nullptr;
  j["chow"] = report.chow;
  return j;
}

}  // namespace

std::string analysis_json(const TruthTable& tt, bool include_spectrum) {
  json j;
  j["schema"] = 1;
  j["n"] = tt.n;
  j["tt"] = to_hex(tt);
  j["report"] = report_json(classify(tt));
  Spectrum spec = wht(tt);
  if (include_spectrum) j["spectrum"] = spec.w;
  InfluenceProfile profile = influence_profile(tt, true);
  json per_var = json::array();
  for (const Dyadic& d : profile.per_variable) per_var.push_back(dyadic_json(d));
  j["influence"] = json{{"per_variable", per_var}, {"total", dyadic_json(profile.total)}};
  j["entropy"] = fourier_entropy(spec);
  return j.dump(2);
}

std::string class_report_json(const TruthTable& tt) {
  json j;
  j["schema"] = 1;
  j["n"] = tt.n;
  j["tt"] = to_hex(tt);
  j["report"] = report_json(classify(tt));
  return j.dump(2);
}

namespace {

std::string csv_quote(const std::string& field) {
  bool needs = field.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string csv_header() {
  return "experiment,n,param,statistic,exact_num,exact_exp,value,bound,status";
}

std::string csv_line(const ExperimentRow& row) {
  std::ostringstream out;
  out << csv_quote(row.experiment) << ',' << row.n << ',' << csv_quote(row.param)
      << ',' << csv_quote(row.statistic) << ',';
  if (row.exact) out << row.exact->num;
  out << ',';
  if (row.exact) out << row.exact->exp;
  out << ',';
  if (row.value) out << double_str(*row.value);
  out << ',';
  if (row.bound) out << double_str(*row.bound);
  out << ',' << row.status;
  return out.str();
}

std::string rows_to_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << csv_header() << "\n";
  for (const ExperimentRow& row : rows) out << csv_line(row) << "\n";
  return out.str();
}

std::string row_summary(const ExperimentRow& row) {
  std::ostringstream out;
  out << '[' << row.status << "] " << row.experiment << " n=" << row.n;
  if (!row.param.empty()) out << ' ' << row.param;
  out << ' ' << row.statistic;
  if (row.exact)
    out << " = " << row.exact->str();
  else if (row.value)
    out << " = " << double_str(*row.value);
  if (row.bound) out << " (bound " << double_str(*row.bound) << ')';
  return out.str();
}

std::string census_summary(const CensusResult& r) {
  std::ostringstream out;
  out << "census n=" << r.n << ": " << r.total << " functions\n";
  auto stats_line = [&](const char* name, const ClassStats& s) {
    out << "  " << name << ": " << s.count;
    if (s.min_influence)
      out << "  I in [" << s.min_influence->str() << ", " << s.max_influence->str()
          << "]";
    out << "\n";
  };
  stats_line("bent", r.bent);
  stats_line("sac", r.sac);
  stats_line("pc>=1", r.pc1);
  stats_line("monotone", r.monotone);
  stats_line("ltf", r.ltf);
  for (const auto& [k, stats] : r.plateaued) {
    out << "  plateaued k=" << k << ": " << stats.count;
    if (stats.min_influence)
      out << "  I in [" << stats.min_influence->str() << ", "
          << stats.max_influence->str() << "]";
    out << "\n";
  }
  auto cell_line = [&](const char* name, const IntersectionCell& c) {
    out << "  " << name << ": " << c.count;
    if (!c.witnesses.empty()) {
      out << "  witnesses:";
      for (const std::string& w : c.witnesses) out << ' ' << w;
    }
    out << "\n";
  };
  cell_line("monotone ∩ bent", r.monotone_bent);
  cell_line("monotone ∩ sac", r.monotone_sac);
  cell_line("monotone ∩ pc>=1", r.monotone_pc1);
  cell_line("monotone ∩ (B∪S∪PC1)", r.monotone_union);
  cell_line("ltf ∩ bent", r.ltf_bent);
  cell_line("ltf ∩ sac", r.ltf_sac);
  cell_line("ltf ∩ pc>=1", r.ltf_pc1);
  cell_line("ltf ∩ (B∪S∪PC1)", r.ltf_union);
  out << "  prop1 (I = n/2 on the union): " << (r.prop1_holds ? "pass" : "fail")
      << "\n";
  out << "  fact2 bound on monotone: " << (r.fact2_holds ? "pass" : "fail") << "\n";
  out << "  monotone ∩ union "
      << (r.union_monotone_as_expected ? "matches" : "DOES NOT match")
      << " the expected emptiness pattern\n";
  return out.str();
}

}  // namespace bfa
