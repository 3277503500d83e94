#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "locount/counting.hpp"

namespace locount {

// Self-describing result document emitted by the count driver. Counts travel
// as decimal strings so arbitrary precision survives any consumer.
struct RunReport {
  std::string mode;  // strong | weak | biclique
  std::string embeddings;
  std::string copies;
  std::string aut;
  std::string locatability_status;  // NotDDegenerate | Locatable
  int c = 0;
  int d = 0;
  double elapsed_ordering_ms = 0;
  double elapsed_r_ms = 0;
  double elapsed_reps_ms = 0;
  double elapsed_locate_count_ms = 0;
  long long dedup_candidates = 0;
  long long dedup_unique = 0;
  int threads = 1;
};

inline RunReport make_report(const CountResult& r, Mode mode, int threads) {
  RunReport rep;
  rep.mode = mode == Mode::Strong ? "strong" : "weak";
  rep.embeddings = r.embeddings.str();
  rep.copies = r.copies.str();
  rep.aut = r.aut_total.str();
  rep.locatability_status =
      r.not_d_degenerate ? "NotDDegenerate" : "Locatable";
  rep.c = r.locatability.c;
  rep.d = r.host_d;
  rep.elapsed_ordering_ms = r.times.ordering;
  rep.elapsed_r_ms = r.times.dict_r;
  rep.elapsed_reps_ms = r.times.reps;
  rep.elapsed_locate_count_ms = r.times.locate_count;
  rep.dedup_candidates = r.stats.candidates_seen;
  rep.dedup_unique = r.stats.unique_processed;
  rep.threads = threads;
  return rep;
}

// Serialization re-parses the decimal strings and re-checks the defining
// identity embeddings = copies * aut before emitting anything.
inline nlohmann::json report_to_json(const RunReport& rep) {
  BigCount emb(rep.embeddings), cop(rep.copies), a(rep.aut);
  if (emb != cop * a)
    throw std::logic_error("report invariant violated: embeddings != copies * aut");
  nlohmann::json j;
  j["mode"] = rep.mode;
  j["embeddings"] = rep.embeddings;
  j["copies"] = rep.copies;
  j["aut"] = rep.aut;
  j["locatability"] = {{"status", rep.locatability_status}, {"c", rep.c}};
  j["d"] = rep.d;
  j["elapsed_ms"] = {{"ordering", rep.elapsed_ordering_ms},
                     {"r_dictionary", rep.elapsed_r_ms},
                     {"representations", rep.elapsed_reps_ms},
                     {"locate_count", rep.elapsed_locate_count_ms}};
  j["dedup"] = {{"candidates", rep.dedup_candidates}, {"unique", rep.dedup_unique}};
  j["threads"] = rep.threads;
  return j;
}

inline std::string report_table(const RunReport& rep) {
  std::string out;
  auto row = [&](const std::string& k, const std::string& v) {
    out += k;
    out.append(k.size() < 16 ? 16 - k.size() : 1, ' ');
    out += v;
    out += '\n';
  };
  row("mode", rep.mode);
  row("embeddings", rep.embeddings);
  row("copies", rep.copies);
  row("aut", rep.aut);
  row("locatability", rep.locatability_status + " (c=" + std::to_string(rep.c) + ")");
  row("d", std::to_string(rep.d));
  row("threads", std::to_string(rep.threads));
  row("unique S-sets", std::to_string(rep.dedup_unique) + " of " +
                           std::to_string(rep.dedup_candidates) + " candidates");
  row("locate+count ms", std::to_string(rep.elapsed_locate_count_ms));
  return out;
}

}  // namespace locount
