// Serialization of sweep results. JSON key order is fixed (ordered_json and
// explicit insertion order), so byte-identical reruns are expected whenever
// timings are disabled.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fusionlab/theorems.hpp"

namespace fusionlab {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json kv_object(const std::vector<std::pair<std::string, std::string>>& kv) {
  ordered_json o = ordered_json::object();
  for (const auto& [k, v] : kv) o[k] = v;
  return o;
}

}  // namespace detail

inline ordered_json to_json(const TheoremReport& r) {
  ordered_json o;
  o["theorem_id"] = r.theorem_id;
  o["group"] = r.group;
  o["order"] = r.group_order;
  o["instantiations"] = r.instantiations;
  o["hypothesis_hits"] = r.hypothesis_hits;
  ordered_json vs = ordered_json::array();
  for (const Violation& v : r.violations) {
    ordered_json vo;
    vo["parameters"] = detail::kv_object(v.parameters);
    vo["witness"] = detail::kv_object(v.witness);
    vs.push_back(std::move(vo));
  }
  o["violations"] = std::move(vs);
  o["skipped"] = r.skipped;
  o["notes"] = detail::kv_object(r.notes);
  return o;
}

inline ordered_json to_json(const SweepReport& sr, bool timings) {
  ordered_json o;
  o["corpus_version"] = sr.corpus_version;
  ordered_json cfg;
  cfg["max_order"] = sr.config.max_order;
  cfg["max_subgroups"] = sr.config.max_subgroups;
  cfg["hierarchy_max_order"] = sr.config.hierarchy_max_order;
  cfg["lemma21_max_order"] = sr.config.lemma21_max_order;
  cfg["thm32_order4_scope"] = sr.config.thm32_strict_scope ? "global" : "fstar";
  cfg["fault_injection"] = sr.config.fault_weakly_sphi_true;
  o["config"] = std::move(cfg);
  ordered_json gs = ordered_json::array();
  for (const GroupAudit& a : sr.groups) {
    ordered_json go;
    go["name"] = a.name;
    go["order"] = a.order;
    if (timings) go["wall_clock_ms"] = a.wall_ms;
    ordered_json rs = ordered_json::array();
    for (const TheoremReport& r : a.reports) rs.push_back(to_json(r));
    go["reports"] = std::move(rs);
    go["skipped"] = a.skipped;
    gs.push_back(std::move(go));
  }
  o["groups"] = std::move(gs);
  o["verdict"] = sr.pass ? "pass" : "fail";
  return o;
}

inline std::string render_kv(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ", ";
    out += k + "=" + v;
  }
  return out;
}

// Human-readable single-theorem report; the last line is PASS or FAIL.
inline std::string render_text(const TheoremReport& r) {
  std::string out = "theorem " + r.theorem_id + " on " + r.group + " (order " +
                    std::to_string(r.group_order) + ")\n";
  out += "  instantiations: " + std::to_string(r.instantiations) + "\n";
  out += "  hypothesis hits: " + std::to_string(r.hypothesis_hits) + "\n";
  for (const std::string& s : r.skipped) out += "  skipped: " + s + "\n";
  for (const auto& [k, v] : r.notes) out += "  note " + k + ": " + v + "\n";
  for (const Violation& v : r.violations) {
    out += "  violation: " + render_kv(v.parameters);
    if (!v.witness.empty()) out += " | " + render_kv(v.witness);
    out += "\n";
  }
  out += r.violations.empty() ? "PASS\n" : "FAIL\n";
  return out;
}

inline std::string to_markdown(const SweepReport& sr) {
  std::string out = "# Theorem audit sweep\n\n";
  out += "Corpus version: " + sr.corpus_version + "\n\n";
  out += "| group | order | checks | violations | skipped |\n";
  out += "|---|---|---|---|---|\n";
  long long total_viol = 0;
  for (const GroupAudit& a : sr.groups) {
    long long viol = 0;
    long long skipped = a.skipped.size();
    for (const TheoremReport& r : a.reports) {
      viol += static_cast<long long>(r.violations.size());
      skipped += static_cast<long long>(r.skipped.size());
    }
    total_viol += viol;
    out += "| " + a.name + " | " + std::to_string(a.order) + " | " +
           std::to_string(a.reports.size()) + " | " + std::to_string(viol) + " | " +
           std::to_string(skipped) + " |\n";
  }
  out += "\n";
  if (total_viol > 0) {
    out += "## Violations\n\n";
    for (const GroupAudit& a : sr.groups)
      for (const TheoremReport& r : a.reports)
        for (const Violation& v : r.violations) {
          out += "- **" + a.name + "** " + r.theorem_id + ": " + render_kv(v.parameters);
          if (!v.witness.empty()) out += " (" + render_kv(v.witness) + ")";
          out += "\n";
        }
    out += "\n";
  }
  out += "Verdict: **" + std::string(sr.pass ? "pass" : "fail") + "**\n";
  return out;
}

}  // namespace fusionlab
