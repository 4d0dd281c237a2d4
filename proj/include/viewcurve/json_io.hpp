#pragma once

// JSON documents emitted by the command-line tool. The shapes are pinned by
// the schemas under schemas/.

#include <optional>
#include <string>

#include <json.hpp>

#include "viewcurve/invariants.hpp"
#include "viewcurve/verify.hpp"

namespace viewcurve {

inline constexpr int kReportVersion = 1;

namespace detail {
inline nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}
}  // namespace detail

inline nlohmann::json to_json(const Jet2& j) {
  return {{"g", j.g}, {"gx", j.gx}, {"gy", j.gy}, {"gxx", j.gxx}, {"gxy", j.gxy}, {"gyy", j.gyy}};
}

inline nlohmann::json to_json(const InvariantSample& s) {
  return {
      {"kappa_x", detail::optional_number(s.kappa_x)},
      {"kappa_y", detail::optional_number(s.kappa_y)},
      {"regular_x", std::string(to_string(s.regular_x))},
      {"regular_y", std::string(to_string(s.regular_y))},
      {"dsv_dx", s.dsv_dx},
      {"dsv_dy", s.dsv_dy},
      {"P", s.P},
      {"Q", s.Q},
      {"K", s.K},
      {"jet", to_json(s.g)},
  };
}

inline nlohmann::json to_json(const SignLawResult& r) {
  nlohmann::json j = {
      {"id", std::string(to_string(r.id))},
      {"hypotheses_met", r.hypotheses_met},
      {"lhs_sign", std::string(to_string(r.lhs))},
      {"rhs_sign", std::string(to_string(r.rhs))},
      {"verdict", std::string(to_string(r.verdict))},
  };
  if (r.k_zero_boundary) j["k_zero_boundary"] = true;
  return j;
}

inline nlohmann::json to_json(const SignLawRecord& rec) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rec) arr.push_back(to_json(r));
  return arr;
}

/// The report file. Runtime is left out so equal seeds give equal bytes.
inline nlohmann::json to_json(const VerificationReport& rep) {
  const SuiteConfig& c = rep.config;
  nlohmann::json theorems = nlohmann::json::array();
  for (const auto& t : rep.theorems) {
    theorems.push_back({
        {"id", std::string(to_string(t.id))},
        {"samples", t.samples},
        {"hypotheses_met", t.hypotheses_met},
        {"max_abs_residual", t.max_abs_residual},
        {"max_rel_residual", t.max_rel_residual},
        {"failures", t.failures},
        {"fd_max_abs_residual", t.fd_max_abs_residual},
        {"fd_max_rel_residual", t.fd_max_rel_residual},
        {"fd_failures", t.fd_failures},
        {"failure_samples", t.failure_samples},
    });
  }
  nlohmann::json laws = nlohmann::json::array();
  for (const auto& s : rep.sign_laws) {
    laws.push_back({
        {"id", std::string(to_string(s.id))},
        {"samples", s.samples},
        {"hypotheses_met", s.hypotheses_met},
        {"agree", s.agree},
        {"disagree", s.disagree},
        {"skipped", s.skipped},
        {"k_zero_boundary", s.k_zero_boundary},
        {"disagreement_samples", s.disagreement_samples},
    });
  }
  return {
      {"format", "viewcurve-verify-report"},
      {"version", kReportVersion},
      {"seed", c.seed},
      {"samples", rep.samples},
      {"domain_errors", rep.domain_errors},
      {"passed", rep.passed()},
      {"config",
       {{"surfaces", c.surfaces},
        {"theta", {c.theta.lo, c.theta.hi}},
        {"phi", {c.phi.lo, c.phi.hi}},
        {"box", {c.box_x.lo, c.box_x.hi, c.box_y.lo, c.box_y.hi}},
        {"sign_band", c.sign_band}}},
      {"tolerances",
       {{"residual", c.tol},
        {"fd_residual", c.fd_tol},
        {"fd_step", c.fd_step},
        {"fd_second_step", c.fd_second_step},
        {"eps_sign", c.eps_sign},
        {"eps_regular", c.eps_regular}}},
      {"theorems", theorems},
      {"sign_laws", laws},
      {"gauss_sign_lemma",
       {{"samples", rep.lemma.samples},
        {"clause_one_applicable", rep.lemma.clause_one_applicable},
        {"clause_two_applicable", rep.lemma.clause_two_applicable},
        {"violations", rep.lemma.violations},
        {"max_identity_residual", rep.lemma.max_identity_residual},
        {"violation_samples", rep.lemma.violation_samples}}},
  };
}

}  // namespace viewcurve
