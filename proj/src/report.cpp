#include "zagreb/report.hpp"

#include <sstream>

#include <json.hpp>

namespace zagreb {
namespace {

using nlohmann::ordered_json;

ordered_json claim_json(const ClaimReport& c) {
  ordered_json out;
  out["id"] = c.id;
  out["range"] = c.range;
  out["status"] = std::string(to_string(c.status));
  out["checked"] = c.checked;
  out["violations"] = c.violations;
  auto cxs = ordered_json::array();
  for (const auto& cx : c.counterexamples) {
    ordered_json item;
    item["code"] = cx.code;
    item["tree"] = cx.tree;
    ordered_json observed = ordered_json::object();
    for (const auto& o : cx.observed) observed[o.name] = o.value;
    item["observed"] = std::move(observed);
    cxs.push_back(std::move(item));
  }
  out["counterexamples"] = std::move(cxs);
  out["notes"] = c.notes;
  return out;
}

ordered_json extremal_json(const ExtremalReport& e) {
  ordered_json out;
  out["n"] = e.n;
  out["k"] = e.k;
  out["gamma"] = e.gamma;
  out["class_count"] = e.class_count;
  out["min_pi1"] = e.min_pi1.to_decimal();
  out["min_pi1_codes"] = e.min_pi1_codes;
  out["max_pi2"] = e.max_pi2.to_decimal();
  out["max_pi2_codes"] = e.max_pi2_codes;
  out["reference"] = e.reference;
  out["bound_pi1"] = e.bound_pi1.to_decimal();
  out["bound_pi2"] = e.bound_pi2.to_decimal();
  if (e.printed_pi1) out["printed_bound_pi1"] = e.printed_pi1->to_decimal();
  if (e.printed_pi2) out["printed_bound_pi2"] = e.printed_pi2->to_decimal();
  out["expected_codes"] = e.expected_codes;
  out["bound_pi1_match"] = e.bound_pi1_match;
  out["bound_pi2_match"] = e.bound_pi2_match;
  out["achievers_pi1_match"] = e.achievers_pi1_match;
  out["achievers_pi2_match"] = e.achievers_pi2_match;
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_json(const VerificationReport& report) {
  ordered_json root;
  root["version"] = kReportVersion;
  const auto& p = report.params;
  root["params"] = {{"n_max", p.n_max},
                    {"k_min", p.k_min},
                    {"k_max", p.k_max},
                    {"caps", {{"enumeration", p.enumeration_cap}, {"oracle", p.oracle_cap}}}};
  auto claims = ordered_json::array();
  for (const auto& c : report.claims) claims.push_back(claim_json(c));
  root["claims"] = std::move(claims);
  auto cells = ordered_json::array();
  for (const auto& e : report.extremal) cells.push_back(extremal_json(e));
  root["extremal"] = std::move(cells);
  return root.dump(2) + "\n";
}

std::string render_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "kind,id,range,n,k,gamma,status,checked,violations,class_count,min_pi1,bound_pi1,max_pi2,"
         "bound_pi2,min_pi1_achievers,max_pi2_achievers,expected_achievers\n";
  for (const auto& c : report.claims) {
    out << "claim," << c.id << ',' << csv_escape(c.range) << ",,,," << to_string(c.status) << ','
        << c.checked << ',' << c.violations << ",,,,,,,,\n";
  }
  for (const auto& e : report.extremal) {
    bool match = e.bound_pi1_match && e.bound_pi2_match && e.achievers_pi1_match && e.achievers_pi2_match;
    out << "cell," << e.reference << ",," << e.n << ',' << e.k << ',' << e.gamma << ','
        << (match ? "match" : "mismatch") << ",,," << e.class_count << ',' << e.min_pi1.to_decimal()
        << ',' << e.bound_pi1.to_decimal() << ',' << e.max_pi2.to_decimal() << ','
        << e.bound_pi2.to_decimal() << ',' << e.min_pi1_codes.size() << ',' << e.max_pi2_codes.size()
        << ',' << e.expected_codes.size() << '\n';
  }
  return out.str();
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.claims) {
    out << c.id << ": " << to_string(c.status) << " (" << c.range << "; checked " << c.checked
        << ", violations " << c.violations << ")\n";
    for (const auto& note : c.notes) out << "  note: " << note << '\n';
  }
  return out.str();
}

}  // namespace zagreb
