// Command-line front end: exact invariants of congruence ball-quotient
// surfaces over imaginary quadratic fields.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "picard/picard.hpp"

namespace {

using namespace picard;

std::optional<std::pair<long, long>> parse_krange(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  auto dots = spec.find("..");
  try {
    if (dots == std::string::npos) {
      long k = std::stol(spec);
      return std::make_pair(k, k);
    }
    long a = std::stol(spec.substr(0, dots));
    long b = std::stol(spec.substr(dots + 2));
    if (b < a) throw ParseError("empty weight range " + spec);
    return std::make_pair(a, b);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad weight range \"" + spec + "\" (want A or A..B)");
  } catch (const std::out_of_range&) {
    throw ParseError("bad weight range \"" + spec + "\" (want A or A..B)");
  }
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw IoError("cannot open output file " + path);
  return file;
}

void print_field_info(std::ostream& os, long d, bool as_json) {
  QuadraticField k = make_field(d);
  BigInt h = class_number(k);
  Rational b1 = generalized_bernoulli(k, 1).value;
  Rational b3 = generalized_bernoulli(k, 3).value;
  LValue L = l_value_3(k);
  Rational c2 = euler_number_full_group(k);
  if (as_json) {
    nlohmann::ordered_json j;
    j["d"] = k.d;
    j["D"] = k.D;
    j["omega"] = k.omega_shape == OmegaShape::SqrtD ? "sqrt(-d)" : "(1+sqrt(-d))/2";
    j["mu"] = k.mu;
    j["eta"] = to_string(k.eta);
    j["delta"] = to_string(k.delta);
    j["h"] = h.get_str();
    j["B1"] = to_string(b1);
    j["B3"] = to_string(b3);
    j["L3"] = L.float_value;
    j["c2_full_group"] = to_string(c2);
    os << j.dump(2) << "\n";
    return;
  }
  os << "K = Q(sqrt(-" << k.d << "))\n"
     << "  discriminant D   = " << k.D << "\n"
     << "  omega            = " << (k.omega_shape == OmegaShape::SqrtD ? "sqrt(-d)" : "(1+sqrt(-d))/2")
     << "\n"
     << "  roots of unity   = " << k.mu << "\n"
     << "  eta              = " << to_string(k.eta) << "\n"
     << "  delta            = " << to_string(k.delta) << "\n"
     << "  class number h   = " << h.get_str() << "\n"
     << "  B_{1,chi}        = " << to_string(b1) << "\n"
     << "  B_{3,chi}        = " << to_string(b3) << "\n"
     << "  L(3,chi)         = " << format_double(L.float_value) << "\n"
     << "  c2 (full group)  = " << to_string(c2) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"invariants of congruence ball-quotient surfaces over Q(sqrt(-d))"};
  app.require_subcommand(1);

  long d = 0;
  std::string ideal_expr, krange_spec, out_path;
  bool json_out = false, csv_out = false;
  long dmax = 8, normmax = 50;
  bool composites = false;
  std::uint64_t budget = 10'000'000;

  auto* cmd_field = app.add_subcommand("field", "field constants and L-value data");
  cmd_field->add_option("d", d, "squarefree positive d")->required();
  cmd_field->add_flag("--json", json_out, "emit JSON");

  auto* cmd_factor = app.add_subcommand("factor", "prime ideal factorization of an ideal");
  cmd_factor->add_option("d", d, "squarefree positive d")->required();
  cmd_factor->add_option("ideal", ideal_expr, "ideal expression")->required();
  cmd_factor->add_flag("--json", json_out, "emit JSON");

  auto* cmd_inv = app.add_subcommand("invariants", "surface invariants for one level");
  cmd_inv->add_option("d", d, "squarefree positive d")->required();
  cmd_inv->add_option("ideal", ideal_expr, "ideal expression")->required();
  cmd_inv->add_option("--k", krange_spec, "cusp form weights A..B");
  cmd_inv->add_flag("--json", json_out, "emit JSON");
  cmd_inv->add_flag("--csv", csv_out, "emit CSV");
  cmd_inv->add_option("--out", out_path, "write to file instead of stdout");

  auto* cmd_dim = app.add_subcommand("cuspdim", "cusp form dimensions for a neat level");
  cmd_dim->add_option("d", d, "squarefree positive d")->required();
  cmd_dim->add_option("ideal", ideal_expr, "ideal expression")->required();
  cmd_dim->add_option("--k", krange_spec, "weights A..B")->required();
  cmd_dim->add_flag("--json", json_out, "emit JSON");

  auto* cmd_sweep = app.add_subcommand("sweep", "tabulate invariants over many levels");
  cmd_sweep->add_option("--dmax", dmax, "largest d (squarefree d <= dmax)")->required();
  cmd_sweep->add_option("--normmax", normmax, "largest ideal norm")->required();
  cmd_sweep->add_flag("--json", json_out, "emit JSON");
  cmd_sweep->add_flag("--csv", csv_out, "emit CSV (default)");
  cmd_sweep->add_option("--out", out_path, "write to file instead of stdout");
  cmd_sweep->add_flag("--composites", composites, "include composite ideals, not just prime powers");

  auto* cmd_verify = app.add_subcommand("verify", "run the brute-force consistency suite");
  cmd_verify->add_option("--budget", budget, "enumeration budget (matrices)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ErrorClass::Parse);
  }

  if (cmd_field->parsed()) {
    print_field_info(std::cout, d, json_out);
    return 0;
  }

  if (cmd_factor->parsed()) {
    QuadraticField field = make_field(d);
    Ideal A = parse_ideal(field, ideal_expr);
    FactoredIdeal F = factorize(A);
    if (json_out) {
      nlohmann::ordered_json j;
      j["d"] = d;
      j["ideal"] = canonical_string(F);
      j["hnf"] = hnf_string(A);
      j["norm"] = A.norm().get_str();
      j["theta"] = theta(A).get_str();
      j["rational_part"] = rational_part(A).get_str();
      j["neat"] = to_string(neat_status(A));
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << canonical_string(F) << "\n"
                << "  hnf           = " << hnf_string(A) << "\n"
                << "  norm          = " << A.norm().get_str() << "\n"
                << "  theta         = " << theta(A).get_str() << "\n"
                << "  rational part = " << rational_part(A).get_str() << "\n"
                << "  neat          = " << to_string(neat_status(A)) << "\n";
    }
    return 0;
  }

  if (cmd_inv->parsed()) {
    QuadraticField field = make_field(d);
    FactoredIdeal F = factorize(parse_ideal(field, ideal_expr));
    SurfaceInvariants inv = compute_invariants(field, F);
    auto krange = parse_krange(krange_spec);
    OutputRecord rec =
        krange ? make_record_with_dims(inv, krange->first, krange->second) : make_record(inv);
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    if (csv_out) {
      os << csv_header(krange) << "\n" << to_csv_row(rec, krange) << "\n";
    } else if (json_out) {
      os << to_json(rec).dump(2) << "\n";
    } else {
      os << "d = " << rec.d << ", D = " << rec.D << ", ideal " << rec.ideal << "\n"
         << "  norm     = " << rec.norm.get_str() << "\n"
         << "  index    = " << rec.index.get_str() << "\n"
         << "  theta    = " << rec.theta << "\n"
         << "  neat     = " << to_string(rec.neat) << "\n"
         << "  c2       = " << to_string(rec.c2) << "\n"
         << "  (T.T)    = " << to_string(rec.tt) << "\n"
         << "  c1^2     = " << to_string(rec.c1sq) << "\n"
         << "  chi(O)   = " << to_string(rec.chi_holo) << "\n"
         << "  c1^2/c2  = " << format_double(rec.ratio) << "\n"
         << "  verdict  = " << to_string(rec.verdict) << "\n";
      if (rec.dims) {
        for (const auto& [k, dim] : *rec.dims)
          os << "  dim S_" << k << " = " << dim.get_str() << "\n";
        if (rec.vanishing_assumed && *rec.vanishing_assumed)
          os << "  (vanishing assumed: c1^2 < 0)\n";
      }
    }
    return 0;
  }

  if (cmd_dim->parsed()) {
    QuadraticField field = make_field(d);
    FactoredIdeal F = factorize(parse_ideal(field, ideal_expr));
    auto krange = parse_krange(krange_spec);
    if (!krange) throw ParseError("cuspdim requires --k A..B");
    nlohmann::ordered_json j;
    for (long k = krange->first; k <= krange->second; ++k) {
      BigInt dim = cusp_form_dimension(field, F, k);
      if (json_out)
        j[std::to_string(k)] = dim.get_str();
      else
        std::cout << "dim S_" << k << " = " << dim.get_str() << "\n";
    }
    if (json_out) std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (cmd_sweep->parsed()) {
    SweepResult sw = run_sweep(dmax, normmax, composites);
    for (const auto& skip : sw.skips)
      std::cerr << "skip d=" << skip.d << " " << skip.ideal << ": " << skip.reason << "\n";
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    if (json_out) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& r : sw.rows) rows.push_back(to_json(r));
      os << rows.dump(2) << "\n";
    } else {
      os << csv_header() << "\n";
      for (const auto& r : sw.rows) os << to_csv_row(r) << "\n";
    }
    return 0;
  }

  if (cmd_verify->parsed()) {
    VerifyOptions opt;
    opt.budget.max_elements = budget;
    auto results = run_verify(opt);
    bool ok = true;
    for (const auto& r : results) {
      const char* tag = r.status == CheckStatus::Pass ? "PASS"
                        : r.status == CheckStatus::Skip ? "SKIP"
                                                        : "FAIL";
      std::cout << "[" << tag << "] " << r.name << ": " << r.detail << "\n";
      if (r.status == CheckStatus::Fail) ok = false;
    }
    return ok ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const picard::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(picard::ErrorClass::Internal);
  }
}
