#include "nilpair/json_io.hpp"

#include <fstream>
#include <set>

namespace nilpair {

using nlohmann::json;

json matrix_to_json(const RationalMatrix& m) {
  json doc;
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  json entries = json::object();
  for (const auto& [idx, v] : m.entries())
    entries[std::to_string(idx.first) + "," + std::to_string(idx.second)] = v.to_string();
  doc["entries"] = std::move(entries);
  return doc;
}

json algebra_to_json(const LieAlgebra& L) {
  json doc;
  doc["dim"] = L.dim();
  json brackets = json::array();
  for (const auto& [pair, coeffs] : L.sc().stored()) {
    json entry;
    entry["i"] = pair.first + 1;
    entry["j"] = pair.second + 1;
    json cc;
    for (const auto& [k, v] : coeffs) cc[std::to_string(k + 1)] = v.to_string();
    entry["coeffs"] = std::move(cc);
    brackets.push_back(std::move(entry));
  }
  doc["brackets"] = std::move(brackets);
  if (!L.label().empty()) doc["label"] = L.label();
  return doc;
}

LieAlgebra algebra_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer())
    throw std::invalid_argument("algebra file: missing integer 'dim'");
  const long long dim = doc["dim"].get<long long>();
  if (dim < 0 || dim > 64) throw std::invalid_argument("algebra file: 'dim' out of range");

  StructureConstants sc(static_cast<int>(dim));
  std::set<std::pair<int, int>> seen;
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw std::invalid_argument("algebra file: 'brackets' must be an array");
    for (const json& entry : doc["brackets"]) {
      if (!entry.contains("i") || !entry.contains("j") || !entry.contains("coeffs"))
        throw std::invalid_argument("algebra file: bracket entry needs 'i', 'j', 'coeffs'");
      const long long i = entry["i"].get<long long>();
      const long long j = entry["j"].get<long long>();
      if (i < 1 || j < 1 || i > dim || j > dim)
        throw std::invalid_argument("algebra file: bracket index out of range");
      if (i >= j) throw std::invalid_argument("algebra file: bracket entries require i < j");
      if (!seen.insert({static_cast<int>(i), static_cast<int>(j)}).second)
        throw std::invalid_argument("algebra file: duplicate bracket entry");
      SparseVec v;
      for (const auto& [key, value] : entry["coeffs"].items()) {
        long long k;
        try {
          size_t used = 0;
          k = std::stoll(key, &used);
          if (used != key.size()) throw std::invalid_argument("");
        } catch (...) {
          throw std::invalid_argument("algebra file: bad coefficient index '" + key + "'");
        }
        if (k < 1 || k > dim) throw std::invalid_argument("algebra file: coefficient index out of range");
        if (!value.is_string()) throw std::invalid_argument("algebra file: coefficients must be rational strings");
        Rational r = Rational::parse(value.get<std::string>());
        if (!r.is_zero()) v[static_cast<int>(k - 1)] = std::move(r);
      }
      if (!v.empty()) sc.set_bracket(static_cast<int>(i - 1), static_cast<int>(j - 1), std::move(v));
    }
  }
  std::string label;
  if (doc.contains("label") && doc["label"].is_string()) label = doc["label"].get<std::string>();
  return LieAlgebra(std::move(sc), std::move(label));
}

LieAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument("algebra file " + path + ": " + e.what());
  }
  return algebra_from_json(doc);
}

json classification_to_json(const classifier::ClassificationReport& report) {
  json doc;
  doc["s"] = report.sigma;
  doc["allow_trivial_k"] = report.allow_trivial;
  json solutions = json::array();
  for (const classifier::PairSolution& sol : report.solutions) {
    json n;
    n["family"] = sol.family->display;
    json params = json::object();
    if (sol.pad >= 0 && sol.family->free_n()) params["pad"] = sol.pad;
    if (sol.n) params["n"] = *sol.n;
    n["params"] = std::move(params);
    n["name"] = sol.n_display();

    json k;
    switch (sol.K.kind) {
      case classifier::KShape::Kind::Trivial: k["kind"] = "trivial"; break;
      case classifier::KShape::Kind::Abelian: k["kind"] = "abelian"; break;
      case classifier::KShape::Kind::HeisenbergFamily: k["kind"] = "heisenberg_family"; break;
      case classifier::KShape::Kind::DerivedDim: k["kind"] = "nilpotent_with_derived_dim"; break;
    }
    if (sol.K.m)
      k["m"] = *sol.K.m;
    else
      k["m"] = "free";
    k["m_min"] = sol.K.m_min;
    k["c"] = sol.K.c;
    k["note"] = sol.K.note();

    json one;
    one["N"] = std::move(n);
    one["K"] = std::move(k);
    one["L"] = sol.l_display();
    one["source_sN"] = sol.source_s_n;
    solutions.push_back(std::move(one));
  }
  doc["solutions"] = std::move(solutions);

  json errata = json::array();
  classifier::VerifyReport vr = classifier::verify_theorems(report.sigma);
  for (const classifier::DiffEntry& e : vr.entries)
    if (!e.erratum.empty()) {
      json one;
      one["pair"] = "(" + e.n_display + ", K = " + e.k_display + ")";
      one["kind"] = e.kind == classifier::DiffEntry::Kind::Missing ? "listed_but_not_derivable"
                                                                   : "derivable_but_unlisted";
      one["note"] = e.erratum;
      errata.push_back(std::move(one));
    }
  for (const std::string& note : vr.notes) {
    json one;
    one["kind"] = "note";
    one["note"] = note;
    errata.push_back(std::move(one));
  }
  doc["errata"] = std::move(errata);
  return doc;
}

json verify_to_json(const classifier::VerifyReport& report) {
  json doc;
  doc["s"] = report.sigma;
  doc["matched"] = report.matched;
  doc["annotated_errata"] = report.annotated;
  doc["unexplained"] = report.unexplained;
  json entries = json::array();
  for (const classifier::DiffEntry& e : report.entries) {
    if (e.kind == classifier::DiffEntry::Kind::Matched) continue;
    json one;
    one["status"] = e.kind == classifier::DiffEntry::Kind::Missing ? "missing" : "extra";
    one["N"] = e.n_display;
    one["K"] = e.k_display;
    if (!e.erratum.empty()) one["erratum"] = e.erratum;
    entries.push_back(std::move(one));
  }
  doc["diff"] = std::move(entries);
  doc["notes"] = report.notes;
  return doc;
}

}  // namespace nilpair
