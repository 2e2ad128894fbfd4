// Copyright 2026 The ptoric Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end. `run_cli` parses arguments with CLI11 and writes
// to the given streams, so every subcommand is testable in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 validation error,
// 3 hypothesis failure, 4 budget refusal.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ptoric/code.hpp"
#include "ptoric/corpus.hpp"
#include "ptoric/document.hpp"
#include "ptoric/oracle.hpp"
#include "ptoric/variety.hpp"

namespace ptoric::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kValidation = 2, kHypothesis = 3, kBudget = 4 };

inline constexpr Integer kDefaultLambdaMax = 10;

struct Options {
  std::string polytope_path;
  std::optional<std::uint32_t> q;
  std::optional<std::string> order;
  std::optional<Integer> lambda_max;
  std::string format = "csv";
  std::uint64_t budget = oracle::kDefaultBudget;
  std::uint64_t seed = oracle::kDefaultSeed;
  std::uint64_t random_iterations = 2000;
  std::string rows = "all";
  std::string cols = "all";
  std::size_t corpus = 0;
  bool inject_fault = false;
};

/// "all", or comma-separated indices and inclusive ranges "a-b".
inline std::vector<std::size_t> parse_index_list(const std::string& spec, std::size_t limit) {
  std::vector<std::size_t> out;
  if (spec == "all") {
    for (std::size_t i = 0; i < limit; ++i) out.push_back(i);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  auto number = [&](const std::string& s) -> std::size_t {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ValidationError("bad index '" + s + "' in '" + spec + "'");
    }
  };
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const auto lo = number(item.substr(0, dash)), hi = number(item.substr(dash + 1));
    if (lo > hi) throw ValidationError("empty range '" + item + "'");
    for (auto i = lo; i <= hi; ++i) out.push_back(i);
  }
  return out;
}

/// Column selection: "all", "torus", "dim:K", or an index list.
inline std::vector<std::size_t> parse_column_spec(const std::string& spec, const EvaluationMatrix& m) {
  if (spec == "torus") return torus_columns(m);
  if (spec.rfind("dim:", 0) == 0) {
    const auto k = parse_index_list(spec.substr(4), 0);
    if (k.size() != 1) throw ValidationError("bad column spec '" + spec + "'");
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.column_face_dims[c] == k.front()) out.push_back(c);
    return out;
  }
  return parse_index_list(spec, m.cols());
}

struct Context {
  PolytopeDocument doc;
  LatticePolytope polytope;
  std::uint32_t q;
  MonomialOrder order;
  Integer lambda_max;
};

inline Context load_context(const Options& o) {
  if (o.polytope_path.empty()) throw ValidationError("--polytope is required");
  auto doc = load_document(o.polytope_path);
  auto polytope = doc.polytope();
  const auto q = o.q ? o.q : doc.q;
  if (!q) throw ValidationError("field size missing: give --q or \"q\" in the document");
  Field{*q};  // validates
  const std::string order_name = o.order ? *o.order : doc.order.value_or("lex");
  const Integer lambda_max = o.lambda_max ? *o.lambda_max : doc.lambda_max.value_or(kDefaultLambdaMax);
  return Context{std::move(doc), std::move(polytope), *q, MonomialOrder::parse(order_name), lambda_max};
}

inline void print_points(std::ostream& out, const std::vector<Point>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << to_string(pts[i]);
}

inline int cmd_info(const Options& o, std::ostream& out) {
  const auto ctx = load_context(o);
  const auto& p = ctx.polytope;
  const auto faces = face_lattice(p);
  const auto hyp = check_hypotheses(p, ctx.q);
  out << "dimension: " << p.dim() << '\n' << "q: " << ctx.q << '\n' << "vertices: ";
  print_points(out, p.vertices());
  out << '\n' << "facets:\n";
  for (const auto& f : p.facets()) out << "  normal " << to_string(f.normal) << " offset " << f.offset << '\n';
  out << "face counts:";
  for (auto c : faces.f_vector()) out << ' ' << c;
  out << '\n' << "lattice points: " << lattice_points(p).size() << '\n';
  out << "simple (H1): " << (hyp.simple ? "yes" : "no") << '\n';
  out << "|det A(v)|:";
  for (auto d : hyp.vertex_determinants) out << ' ' << d;
  out << '\n' << "coprime to characteristic " << hyp.characteristic << " (H2): ";
  if (hyp.h2_ok) {
    out << "yes\n";
  } else {
    out << "no";
    for (auto v : hyp.offending_vertices)
      out << " [vertex " << to_string(p.vertices()[v]) << " |det| = " << hyp.vertex_determinants[v] << ']';
    out << '\n';
  }
  const auto pic = picard_invariants(p);
  out << "picard: free rank " << pic.free_rank << ", torsion [";
  for (std::size_t i = 0; i < pic.torsion.size(); ++i) out << (i ? "," : "") << pic.torsion[i];
  out << "]\n";
  out << "n: " << count_rational_points(faces, ctx.q) << '\n';
  if (!hyp.ok()) return kHypothesis;
  out << "k: " << dimension(p, Field(ctx.q)) << '\n';
  return kOk;
}

inline int cmd_matrix(const Options& o, std::ostream& out) {
  const auto ctx = load_context(o);
  const auto m = generator_matrix(ctx.polytope, Field(ctx.q));
  if (o.format == "csv")
    out << matrix_to_csv(m);
  else if (o.format == "json")
    out << matrix_to_json(m).dump() << '\n';
  else
    throw ValidationError("unknown format '" + o.format + "'");
  return kOk;
}

inline int cmd_dim(const Options& o, std::ostream& out) {
  const auto ctx = load_context(o);
  const Field field(ctx.q);
  const auto k = dimension(ctx.polytope, field);
  out << "n: " << count_rational_points(ctx.polytope, ctx.q) << '\n' << "k: " << k << '\n';
  return kOk;
}

inline int cmd_bound(const Options& o, std::ostream& out) {
  const auto ctx = load_context(o);
  const Field field(ctx.q);
  require_hypotheses(ctx.polytope, ctx.q);
  const auto lambda = find_surjective_dilate(ctx.polytope, field, ctx.lambda_max);
  if (!lambda) {
    out << "lambda: none (no P-surjective dilate with lambda <= " << ctx.lambda_max << ")\n";
    out << "best: none\n";
    return kOk;
  }
  out << "lambda: " << *lambda << '\n';
  const auto orders = o.order ? std::vector<MonomialOrder>{ctx.order} : stock_orders(ctx.polytope.dim());
  const auto sweep = best_bound_over_orders(ctx.polytope, surjective_candidate(ctx.polytope, *lambda), field, orders);
  for (const auto& b : sweep.per_order) {
    out << "bound[" << b.order << "]: " << b.bound << " at ";
    print_points(out, b.minimizers);
    out << '\n';
  }
  out << "best: " << sweep.best.bound << " (" << sweep.best.order << ")\n";
  return kOk;
}

struct LedgerEntry {
  std::string check;
  enum class Status { pass, fail, skip } status;
  std::string detail;
};

struct VerifyResult {
  std::vector<LedgerEntry> entries;
  bool budget_refused = false;
  [[nodiscard]] bool failed() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const LedgerEntry& e) { return e.status == LedgerEntry::Status::fail; });
  }
};

/// Runs every oracle check on one polytope.
inline VerifyResult verify_polytope(const LatticePolytope& p, std::uint32_t q, const Options& o, Integer lambda_max) {
  using S = LedgerEntry::Status;
  const Field field(q);
  require_hypotheses(p, q);
  VerifyResult res;
  auto record = [&](std::string check, bool ok, std::string detail) {
    res.entries.push_back({std::move(check), ok ? S::pass : S::fail, std::move(detail)});
  };
  const PolytopeGeometry geo(p);
  auto m = generator_matrix(geo, build_flags(geo.polytope, geo.faces), field);
  if (o.inject_fault) m.entries(0, 0) = field.add(m.entries(0, 0), field.one());

  const auto n = count_rational_points(geo.faces, q);
  record("length", m.cols() == n, "columns " + std::to_string(m.cols()) + ", rational points " + std::to_string(n));
  const auto classes = projective_classes(geo, q).size();
  const auto rank = oracle::rank_gf(m.entries, field);
  record("rank vs reduction", rank == classes,
         "rank " + std::to_string(rank) + ", #Red(P) " + std::to_string(classes));
  const auto uf = oracle::reduction_class_count_unionfind(p, q);
  record("union-find classes", uf == classes, "union-find " + std::to_string(uf) + ", #Red(P) " + std::to_string(classes));
  const auto bad = oracle::block_support_violations(m, p, geo.faces);
  record("block triangularity", bad == 0, std::to_string(bad) + " violating entries");
  if (p.dim() == 2)
    record("pick", oracle::pick_check(p), "area vs lattice point count");
  else
    res.entries.push_back({"pick", S::skip, "not a polygon"});

  std::optional<std::uint64_t> exact;
  try {
    exact = oracle::min_distance_exhaustive(m.entries, field, o.budget);
  } catch (const BudgetExceeded& e) {
    res.budget_refused = true;
    res.entries.push_back({"exhaustive distance", S::skip, e.what()});
  }
  const auto lambda = find_surjective_dilate(p, field, lambda_max);
  if (!lambda) {
    res.entries.push_back({"distance bound", S::skip, "no P-surjective dilate with lambda <= " + std::to_string(lambda_max)});
  } else {
    const auto sweep = best_bound_over_orders(p, surjective_candidate(p, *lambda), field, stock_orders(p.dim()));
    for (const auto& b : sweep.per_order) {
      if (exact)
        record("distance bound [" + b.order + "]", *exact >= b.bound,
               "d " + std::to_string(*exact) + " >= bound " + std::to_string(b.bound) + " (lambda " +
                   std::to_string(*lambda) + ")");
      else
        res.entries.push_back({"distance bound [" + b.order + "]", S::skip,
                               "bound " + std::to_string(b.bound) + ", exhaustive distance unavailable"});
    }
  }
  if (exact) {
    const auto upper = oracle::min_weight_random_upper(m.entries, field, o.random_iterations, o.seed);
    record("random upper bound", upper >= *exact,
           "sampled min weight " + std::to_string(upper) + " >= d " + std::to_string(*exact) + " (seed " +
               std::to_string(o.seed) + ")");
  }
  return res;
}

inline void print_ledger(std::ostream& out, const VerifyResult& r, const std::string& indent = "") {
  for (const auto& e : r.entries) {
    const char* tag = e.status == LedgerEntry::Status::pass ? "PASS" : e.status == LedgerEntry::Status::fail ? "FAIL" : "SKIP";
    out << indent << tag << "  " << e.check << ": " << e.detail << '\n';
  }
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  if (o.corpus == 0) {
    const auto ctx = load_context(o);
    const auto r = verify_polytope(ctx.polytope, ctx.q, o, ctx.lambda_max);
    print_ledger(out, r);
    if (r.failed()) return kVerifyFailed;
    return r.budget_refused ? kBudget : kOk;
  }
  if (!o.q) throw ValidationError("corpus verification needs --q");
  const auto lambda_max = o.lambda_max.value_or(20);
  std::size_t checked = 0, skipped = 0, failed = 0;
  const auto polys = corpus::random_polygons(o.corpus, o.seed);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!check_hypotheses(polys[i], *o.q).ok()) {
      ++skipped;
      continue;
    }
    const auto r = verify_polytope(polys[i], *o.q, o, lambda_max);
    ++checked;
    out << "instance " << i << " ";
    print_points(out, polys[i].vertices());
    out << ": " << (r.failed() ? "FAIL" : "PASS") << '\n';
    if (r.failed()) {
      ++failed;
      print_ledger(out, r, "    ");
    }
  }
  out << "checked " << checked << ", skipped (hypotheses) " << skipped << ", failed " << failed << '\n';
  return failed ? kVerifyFailed : kOk;
}

inline int cmd_subcode(const Options& o, std::ostream& out) {
  const auto ctx = load_context(o);
  const auto m = generator_matrix(ctx.polytope, Field(ctx.q));
  const auto s = subcode_matrix(m, parse_index_list(o.rows, m.rows()), parse_column_spec(o.cols, m));
  if (o.format == "csv")
    out << matrix_to_csv(s);
  else if (o.format == "json")
    out << matrix_to_json(s).dump() << '\n';
  else
    throw ValidationError("unknown format '" + o.format + "'");
  return kOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ptoric: projective toric codes of lattice polytopes"};
  app.require_subcommand(1);
  Options o;
  std::optional<std::uint32_t> q;
  std::optional<Integer> lambda_max;
  std::optional<std::string> order;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--polytope", o.polytope_path, "JSON polytope document");
    sub->add_option("--q", q, "field size (prime power <= 2^16)");
    sub->add_option("--order", order, "lex | grlex | permlex:P0,P1,... | wlex:W0,W1,...");
    sub->add_option("--lambda-max", lambda_max, "largest dilation tried when searching a P-surjective polytope");
  };
  auto* info = app.add_subcommand("info", "facets, faces, hypotheses, Picard group, length and dimension");
  auto* matrix = app.add_subcommand("matrix", "emit the generator matrix M(P)");
  auto* dim = app.add_subcommand("dim", "length and dimension");
  auto* bound = app.add_subcommand("bound", "footprint lower bound on the minimum distance");
  auto* verify = app.add_subcommand("verify", "cross-check every claim against brute-force oracles");
  auto* subcode = app.add_subcommand("subcode", "emit a submatrix of M(P)");
  for (auto* sub : {info, matrix, dim, bound, verify, subcode}) common(sub);
  for (auto* sub : {matrix, subcode})
    sub->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--budget", o.budget, "maximal number of messages for exhaustive search");
  verify->add_option("--seed", o.seed, "seed for random sampling and the random corpus");
  verify->add_option("--corpus", o.corpus, "verify this many random polygons instead of --polytope");
  verify->add_flag("--inject-fault", o.inject_fault, "corrupt one matrix entry before checking");
  subcode->add_option("--rows", o.rows, "row indices: all | i,j,a-b");
  subcode->add_option("--cols", o.cols, "column indices: all | torus | dim:K | i,j,a-b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidation;
  }
  o.q = q;
  o.lambda_max = lambda_max;
  o.order = order;

  try {
    if (*info) return cmd_info(o, out);
    if (*matrix) return cmd_matrix(o, out);
    if (*dim) return cmd_dim(o, out);
    if (*bound) return cmd_bound(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*subcode) return cmd_subcode(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const HypothesisError& e) {
    err << "hypothesis failure: " << e.what() << '\n';
    return kHypothesis;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kValidation;
}

}  // namespace ptoric::cli
