#pragma once

#include <string>

#include "json.hpp"

#include "braidauto/membership.hpp"
#include "braidauto/presentations.hpp"
#include "braidauto/semidirect.hpp"

namespace braidauto {

using ordered_json = nlohmann::ordered_json;

inline ordered_json endo_to_json(const Endomorphism& e) {
  ordered_json j;
  j["rank"] = e.rank;
  ordered_json images = ordered_json::object();
  for (int i = 1; i <= e.rank; ++i)
    images["x" + std::to_string(i)] = format_word(e.images[i - 1]);
  j["images"] = images;
  j["y_fixed"] = e.y_fixed;
  return j;
}

inline Endomorphism endo_from_json(const ordered_json& j) {
  if (!j.is_object()) throw input_error("endomorphism record must be an object");
  if (!j.contains("rank") || !j["rank"].is_number_integer())
    throw input_error("endomorphism record needs an integer rank");
  long long rank = j["rank"].get<long long>();
  if (rank < 1 || rank > 64) throw input_error("rank must be between 1 and 64");
  if (j.contains("y_fixed") && !j["y_fixed"].is_boolean())
    throw input_error("y_fixed must be a boolean");
  if (!j.contains("images") || !j["images"].is_object())
    throw input_error("endomorphism record needs an images object");
  Endomorphism e;
  e.rank = (int)rank;
  e.y_fixed = j.value("y_fixed", false);
  for (int i = 1; i <= e.rank; ++i) {
    std::string key = "x" + std::to_string(i);
    if (!j["images"].contains(key)) throw input_error("images record is missing " + key);
    if (!j["images"][key].is_string()) throw input_error("image of " + key + " must be a string");
    e.images.push_back(parse_word(j["images"][key].get<std::string>(), e.rank));
  }
  return e;
}

inline ordered_json auto_to_json(const Automorphism& a) {
  ordered_json j;
  j["forward"] = endo_to_json(a.forward);
  j["backward"] = endo_to_json(a.backward);
  return j;
}

// All five verdict keys are always present; absent values serialize as null.
inline ordered_json verdict_to_json(const MembershipVerdict& v) {
  ordered_json j;
  j["accepted"] = v.accepted;
  if (v.data) {
    j["permutation"] = v.data->perm;
    ordered_json conj = ordered_json::array();
    for (const Word& w : v.data->conjugators) conj.push_back(format_word(w));
    j["conjugators"] = conj;
  } else {
    j["permutation"] = nullptr;
    j["conjugators"] = nullptr;
  }
  j["residue"] = v.residue ? ordered_json(*v.residue) : ordered_json(nullptr);
  j["reason"] = v.reason ? ordered_json(*v.reason) : ordered_json(nullptr);
  return j;
}

inline ordered_json sd_to_json(const SDElement& a) {
  ordered_json j;
  j["braid"] = format_group_word(a.braid);
  j["fiber"] = format_word(a.fiber);
  return j;
}

inline ordered_json assignment_report_to_json(const AssignmentReport& r) {
  ordered_json rows = ordered_json::array();
  for (const RelationRow& row : r.rows) {
    ordered_json jr;
    jr["lhs"] = row.lhs;
    jr["rhs"] = row.rhs;
    jr["pass"] = row.pass;
    if (!row.pass) {
      ordered_json d;
      d["generator"] = row.diff_gen;
      d["lhs_image"] = row.lhs_image;
      d["rhs_image"] = row.rhs_image;
      jr["first_diff"] = d;
    }
    rows.push_back(std::move(jr));
  }
  ordered_json j;
  j["relations"] = std::move(rows);
  return j;
}

inline ordered_json kernel_report_to_json(const KernelScanReport& r) {
  ordered_json j;
  j["scanned"] = r.scanned;
  j["kernel_hits"] = r.kernel_hits;
  j["violations"] = r.violations;
  return j;
}

}  // namespace braidauto
