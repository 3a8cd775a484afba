#pragma once

#include <cstdio>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "picard/errors.hpp"
#include "picard/invariants.hpp"
#include "picard/parse.hpp"
#include "picard/rational.hpp"

namespace picard {

// Flat result row for one (field, ideal) computation. Big integers and exact
// rationals are serialized as strings so nothing is rounded; `ratio` is the
// only floating-point column.
struct OutputRecord {
  long d = 0;
  long D = 0;
  std::string ideal;  // canonical factored form
  BigInt norm;
  BigInt index;
  long theta = 0;
  NeatStatus neat = NeatStatus::NotGuaranteed;
  Rational c2, tt, c1sq, chi_holo;
  double ratio = 0.0;
  ClassificationVerdict verdict = ClassificationVerdict::Undetermined;
  std::optional<std::map<long, BigInt>> dims;
  std::optional<bool> vanishing_assumed;
};

inline OutputRecord make_record(const SurfaceInvariants& inv) {
  OutputRecord r;
  r.d = inv.field.d;
  r.D = inv.field.D;
  r.ideal = canonical_string(inv.ideal);
  r.norm = inv.ideal.norm();
  r.index = inv.index;
  if (!inv.theta.fits_slong_p()) throw InternalError("theta exceeds the record range");
  r.theta = inv.theta.get_si();
  r.neat = inv.neat;
  r.c2 = inv.c2;
  r.tt = inv.tt;
  r.c1sq = inv.c1sq;
  r.chi_holo = inv.chi_holo;
  r.ratio = inv.ratio;
  r.verdict = inv.verdict;
  return r;
}

// Adds dims for k in [kmin, kmax]; requires a neat-certified level.
inline OutputRecord make_record_with_dims(const SurfaceInvariants& inv, long kmin, long kmax) {
  OutputRecord r = make_record(inv);
  std::map<long, BigInt> dims;
  for (long k = kmin; k <= kmax; ++k)
    dims[k] = cusp_form_dimension(inv.field, inv.ideal, k);
  r.dims = std::move(dims);
  if (inv.c1sq < 0) r.vanishing_assumed = true;
  return r;
}

inline nlohmann::ordered_json to_json(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["d"] = r.d;
  j["D"] = r.D;
  j["ideal"] = r.ideal;
  j["norm"] = r.norm.get_str();
  j["index"] = r.index.get_str();
  j["theta"] = r.theta;
  j["neat"] = to_string(r.neat);
  j["c2"] = to_string(r.c2);
  j["tt"] = to_string(r.tt);
  j["c1sq"] = to_string(r.c1sq);
  j["chi_holo"] = to_string(r.chi_holo);
  j["ratio"] = r.ratio;
  j["verdict"] = to_string(r.verdict);
  if (r.dims) {
    nlohmann::ordered_json d = nlohmann::ordered_json::object();
    for (const auto& [k, dim] : *r.dims) d[std::to_string(k)] = dim.get_str();
    j["dims"] = std::move(d);
  }
  if (r.vanishing_assumed) j["vanishing_assumed"] = *r.vanishing_assumed;
  return j;
}

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += "\"";
  return out;
}

// Stable column order; dim_k columns appear only when a weight range was
// requested.
inline std::string csv_header(std::optional<std::pair<long, long>> krange = std::nullopt) {
  std::string h = "d,D,ideal,norm,index,theta,neat,c2,tt,c1sq,chi_holo,ratio,verdict";
  if (krange)
    for (long k = krange->first; k <= krange->second; ++k) h += ",dim_" + std::to_string(k);
  return h;
}

inline std::string to_csv_row(const OutputRecord& r,
                              std::optional<std::pair<long, long>> krange = std::nullopt) {
  std::string row = std::to_string(r.d) + "," + std::to_string(r.D) + "," + csv_quote(r.ideal) +
                    "," + r.norm.get_str() + "," + r.index.get_str() + "," +
                    std::to_string(r.theta) + "," + to_string(r.neat) + "," + to_string(r.c2) +
                    "," + to_string(r.tt) + "," + to_string(r.c1sq) + "," + to_string(r.chi_holo) +
                    "," + format_double(r.ratio) + "," + to_string(r.verdict);
  if (krange) {
    for (long k = krange->first; k <= krange->second; ++k) {
      row += ",";
      if (r.dims && r.dims->count(k)) row += r.dims->at(k).get_str();
    }
  }
  return row;
}

}  // namespace picard
