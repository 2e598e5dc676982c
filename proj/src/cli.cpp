#include "derinv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include "derinv/errors.hpp"
#include "derinv/invariants.hpp"
#include "derinv/io.hpp"
#include "derinv/lie.hpp"
#include "derinv/shalev.hpp"

namespace derinv::cli {

namespace {

using json = nlohmann::json;

struct Outcome {
  json inputs = json::object();
  json result;
  int code = kOk;
  std::optional<Table> table;  // tabular view for csv/md output
};

// Restores the default seeding policy however the command exits.
struct SeedScope {
  explicit SeedScope(std::optional<std::uint64_t> seed) { set_seed_override(seed); }
  ~SeedScope() { set_seed_override(std::nullopt); }
  SeedScope(const SeedScope&) = delete;
  SeedScope& operator=(const SeedScope&) = delete;
};

std::uint32_t require_prime(std::uint32_t p) {
  if (!is_prime_u64(p)) throw InvalidArgument(std::to_string(p) + " is not a prime");
  return p;
}

json fq_json(const FqElem& x) { return x.to_string(); }

json nilpotency_json(const NilpotencyReport& r) {
  json out{{"series_dims", r.series_dims}};
  out["class"] = r.nil_class ? json(*r.nil_class) : json("NonNilpotent");
  return out;
}

json order_json(const std::optional<std::uint64_t>& e) { return e ? json(*e) : json(nullptr); }

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

Table flatten(const json& result) {
  Table t{{"key", "value"}, {}};
  if (result.is_object()) {
    for (const auto& [k, v] : result.items()) t.rows.push_back({k, cell(v)});
  } else {
    t.rows.push_back({"result", cell(result)});
  }
  return t;
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "md") return Format::Md;
  return Format::Json;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of t^n - 1, periods over F_p, and periodic derivations of Lie algebras", "derinv"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format;
  std::optional<std::uint64_t> seed;
  unsigned cap_k = kDefaultCapK;
  bool timing = false;
  app.add_option("--format", format, "Output format (default json; md for tables)")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--seed", seed, "Override the derived PRNG seed (testing only)");
  app.add_option("--cap-k", cap_k, "Extension degree cap for splitting fields")->capture_default_str();
  app.add_flag("--timing", timing, "Add elapsed_ms to the output envelope");

  std::map<CLI::App*, std::function<Outcome()>> handlers;
  std::string default_format = "json";

  // -- invariants ------------------------------------------------------------
  unsigned n = 0;
  std::uint32_t p = 0;
  bool factor = false;
  auto* rho_cmd = app.add_subcommand("rho", "rho_n = Res(t^n - 1, (t+1)^n - 1), Phi_3 removed when 6 | n");
  rho_cmd->add_option("n", n)->required();
  rho_cmd->add_flag("--factor", factor, "Also factor the value");
  handlers[rho_cmd] = [&] {
    Outcome o;
    o.inputs = {{"n", n}, {"factor", factor}};
    const Integer r = rho(n);
    o.result = {{"n", n}, {"rho", r.get_str()}};
    if (factor) o.result["factorization"] = factorization_json(factor_int(r));
    return o;
  };

  bool parallel = false;
  auto* wendt_cmd = app.add_subcommand("wendt", "Determinant of the binomial circulant C(n)");
  wendt_cmd->add_option("n", n)->required();
  wendt_cmd->add_flag("--parallel", parallel, "Use the OpenMP elimination kernel");
  handlers[wendt_cmd] = [&] {
    Outcome o;
    o.inputs = {{"n", n}, {"parallel", parallel}};
    o.result = {{"n", n}, {"wendt", (parallel ? wendt_parallel(n) : wendt(n)).get_str()}};
    return o;
  };

  std::string poly_text;
  auto* delta_cmd = app.add_subcommand("delta", "delta(r) of an integer polynomial");
  delta_cmd->add_option("--poly", poly_text, "Polynomial in t or ascending CSV")->required();
  handlers[delta_cmd] = [&] {
    Outcome o;
    const IntPoly r = parse_poly(poly_text);
    o.inputs = {{"poly", poly_text}};
    o.result = {{"poly", to_string(r)}, {"delta", delta(r).get_str()}};
    return o;
  };

  auto* sigma_cmd = app.add_subcommand("sigma", "sigma(r) of an integer polynomial");
  sigma_cmd->add_option("--poly", poly_text, "Polynomial in t or ascending CSV")->required();
  handlers[sigma_cmd] = [&] {
    Outcome o;
    const IntPoly r = parse_poly(poly_text);
    o.inputs = {{"poly", poly_text}};
    o.result = {{"poly", to_string(r)}, {"sigma", sigma(r).get_str()}};
    return o;
  };

  auto* bound_cmd = app.add_subcommand("bound", "Torsion bound delta(r) * sigma(r)");
  bound_cmd->add_option("--poly", poly_text, "Polynomial in t or ascending CSV")->required();
  handlers[bound_cmd] = [&] {
    Outcome o;
    const IntPoly r = parse_poly(poly_text);
    o.inputs = {{"poly", poly_text}};
    const Integer d = delta(r);
    const Integer s = sigma(r);
    o.result = {{"poly", to_string(r)}, {"delta", d.get_str()}, {"sigma", s.get_str()}, {"bound", Integer(d * s).get_str()}};
    return o;
  };

  auto* thm_cmd = app.add_subcommand("thm36", "Nilpotency bound from p not dividing rho_n (p = 0: characteristic zero)");
  thm_cmd->add_option("n", n)->required();
  thm_cmd->add_option("p", p)->required();
  handlers[thm_cmd] = [&] {
    Outcome o;
    o.inputs = {{"n", n}, {"p", p}};
    const Integer r = rho(n);
    const Theorem36Verdict v = theorem36_bound(n, p, r);
    const bool divides = p != 0 && mpz_divisible_ui_p(r.get_mpz_t(), p);
    o.result = {{"n", n}, {"p", p}, {"rho", r.get_str()}, {"p_divides_rho", divides}, {"verdict", to_string(v)}};
    return o;
  };

  // -- finite fields and B_p -------------------------------------------------
  auto* period_cmd = app.add_subcommand("period", "per(f): least m with f | t^m - 1 over F_p");
  period_cmd->add_option("--poly", poly_text)->required();
  period_cmd->add_option("-p,--p", p)->required();
  handlers[period_cmd] = [&] {
    Outcome o;
    o.inputs = {{"poly", poly_text}, {"p", p}};
    const FpPoly f = parse_fp_poly(poly_text, require_prime(p));
    json factors = json::array();
    if (f.degree() >= 1) {
      for (const auto& fac : fp_factor(f)) factors.push_back({{"factor", to_string(fac.factor)}, {"multiplicity", fac.multiplicity}});
    }
    o.result = {{"poly", to_string(f)}, {"p", p}, {"period", period(f).get_str()}, {"factors", factors}};
    return o;
  };

  std::string h_text;
  auto* pp_cmd = app.add_subcommand("pp", "per(h(t^p - t)), an element of P_p");
  pp_cmd->set_help_flag("--help", "Print this help message and exit");  // frees the name h
  pp_cmd->add_option("-p,--p", p)->required();
  pp_cmd->add_option("--h", h_text)->required();
  handlers[pp_cmd] = [&] {
    Outcome o;
    o.inputs = {{"p", p}, {"h", h_text}};
    const FpPoly h = parse_fp_poly(h_text, require_prime(p));
    std::vector<std::uint32_t> u(p + 1, 0);
    u[1] = p - 1;
    u[p] = 1;
    o.result = {{"h", to_string(h)}, {"p", p}, {"composed", to_string(compose(h, FpPoly(p, u)))}, {"period", pp_element(h).get_str()}};
    return o;
  };

  auto* member_cmd = app.add_subcommand("np-member", "Is n in B_p = N_p? Exit 1 when not");
  member_cmd->add_option("n", n)->required();
  member_cmd->add_option("p", p)->required();
  handlers[member_cmd] = [&] {
    Outcome o;
    o.inputs = {{"n", n}, {"p", p}};
    const BpWitness w = bp_witness(n, p, cap_k);
    const ChainResult chain = h_np_chain(n, p);
    o.result = {{"n", n}, {"p", p}, {"member", w.progression.has_value()}, {"h_np", to_string(w.h)},
                {"chain_iterations", chain.iterations}};
    if (w.progression) {
      o.result["witness"] = {{"field", w.progression->field->to_string()},
                             {"alpha", fq_json(w.progression->alpha)},
                             {"beta", fq_json(w.progression->beta)}};
    } else {
      o.result["witness"] = nullptr;
      o.code = kFalse;
    }
    return o;
  };

  unsigned n_max = 12;
  std::vector<std::uint32_t> p_set;
  auto* scan_cmd = app.add_subcommand("np-scan", "Classify (n, p) for n <= n-max");
  scan_cmd->add_option("--n-max", n_max)->capture_default_str();
  scan_cmd->add_option("--p-set", p_set, "Comma-separated primes (default: prime divisors of rho_n)")->delimiter(',');
  handlers[scan_cmd] = [&] {
    Outcome o;
    o.inputs = {{"n_max", n_max}, {"p_set", p_set}};
    Table t{{"n", "p", "member", "h_np"}, {}};
    json rows = json::array();
    for (const auto& row : np_scan(scan_pairs(n_max, p_set))) {
      rows.push_back({{"n", row.n}, {"p", row.p}, {"member", row.member}, {"h_np", to_string(row.h)}});
      t.rows.push_back({std::to_string(row.n), std::to_string(row.p), row.member ? "true" : "false", to_string(row.h)});
    }
    o.result = {{"rows", rows}};
    o.table = std::move(t);
    return o;
  };

  std::optional<unsigned> af_n;
  std::optional<unsigned> af_k;
  auto* af_cmd = app.add_subcommand("arith-free", "Is the root set X arithmetically free? Exit 1 when not");
  af_cmd->add_option("-p,--p", p)->required();
  auto* af_n_opt = af_cmd->add_option("--n", af_n, "X = n-th roots of unity");
  auto* af_poly_opt = af_cmd->add_option("--poly", poly_text, "X = roots of this polynomial over F_p");
  af_n_opt->excludes(af_poly_opt);
  af_cmd->add_option("--k", af_k, "Extension degree (default: splitting degree)");
  handlers[af_cmd] = [&] {
    Outcome o;
    require_prime(p);
    if (!af_n && poly_text.empty()) throw InvalidArgument("arith-free needs --n or --poly");
    const FpPoly f = af_n ? FpPoly::x_pow_minus_one(p, *af_n) : parse_fp_poly(poly_text, p);
    o.inputs = {{"p", p}, {"poly", to_string(f)}};
    if (af_k) o.inputs["k"] = *af_k;
    const RootSet X = root_set(f, af_k, cap_k);
    const ArithFreeResult r = is_arith_free(X.elems, X.field);
    json elems = json::array();
    for (const auto& x : X.elems) elems.push_back(fq_json(x));
    o.result = {{"field", X.field->to_string()}, {"set", elems}, {"size", X.elems.size()}, {"free", r.free}};
    if (r.counterexample) {
      o.result["counterexample"] = {{"alpha", fq_json(r.counterexample->first)}, {"beta", fq_json(r.counterexample->second)}};
      o.code = kFalse;
    } else {
      o.result["counterexample"] = nullptr;
    }
    return o;
  };

  // -- Lie algebras ------------------------------------------------------------
  auto* lie_cmd = app.add_subcommand("lie", "Lie algebra checks and constructions");
  lie_cmd->require_subcommand(1);
  std::string file;
  std::string map_file;

  auto* check_cmd = lie_cmd->add_subcommand("check", "Validate antisymmetry and Jacobi; exit 1 on violation");
  check_cmd->add_option("file", file)->required();
  handlers[check_cmd] = [&] {
    Outcome o;
    o.inputs = {{"file", file}};
    const json j = io::read_json_file(file);
    try {
      const LieAlgebra L = io::algebra_from_json(j);
      o.result = {{"valid", true}, {"dim", L.dim()}, {"field", L.field()->to_string()}};
    } catch (const LieAxiomError& e) {
      o.result = {{"valid", false}, {"error", e.what()}, {"indices", e.indices()}};
      o.code = kFalse;
    }
    return o;
  };

  auto* class_cmd = lie_cmd->add_subcommand("class", "Lower central series and nilpotency class");
  class_cmd->add_option("file", file)->required();
  handlers[class_cmd] = [&] {
    Outcome o;
    o.inputs = {{"file", file}};
    const LieAlgebra L = io::algebra_from_json(io::read_json_file(file));
    o.result = nilpotency_json(nilpotency_class(L));
    return o;
  };

  auto* der_cmd = lie_cmd->add_subcommand("derivation", "Is the matrix a derivation? Exit 1 when not");
  der_cmd->add_option("file", file)->required();
  der_cmd->add_option("--map", map_file)->required();
  handlers[der_cmd] = [&] {
    Outcome o;
    o.inputs = {{"file", file}, {"map", map_file}};
    const LieAlgebra L = io::algebra_from_json(io::read_json_file(file));
    const LinearMap D = io::map_from_json(io::read_json_file(map_file), L.field());
    const DerivationCheck c = is_derivation(L, D);
    o.result = {{"derivation", c.ok}};
    o.result["violation"] = c.violation ? json::array({c.violation->first + 1, c.violation->second + 1}) : json(nullptr);
    o.result["order"] = order_json(map_order(D));
    json charpoly = json::array();
    for (const auto& x : characteristic_polynomial(D)) charpoly.push_back(fq_json(x));
    o.result["charpoly"] = charpoly;
    if (!c.ok) o.code = kFalse;
    return o;
  };

  bool exact_order = false;
  auto* wit_cmd = lie_cmd->add_subcommand("witness", "Non-nilpotent algebra with D^n = 1 when n is in B_p; exit 1 otherwise");
  wit_cmd->add_option("n", n)->required();
  wit_cmd->add_option("p", p)->required();
  wit_cmd->add_flag("--exact-order", exact_order, "Pad with an abelian summand so that D has order exactly n");
  handlers[wit_cmd] = [&] {
    Outcome o;
    o.inputs = {{"n", n}, {"p", p}, {"exact_order", exact_order}};
    const auto w = build_witness(n, require_prime(p), exact_order, cap_k);
    if (!w) {
      o.result = {{"n", n}, {"p", p}, {"member", false}};
      o.code = kFalse;
      return o;
    }
    const FpPoly r = FpPoly::x_pow_minus_one(p, n);
    o.result = {{"n", n},
                {"p", p},
                {"member", true},
                {"field", w->progression.field->to_string()},
                {"alpha", fq_json(w->progression.alpha)},
                {"beta", fq_json(w->progression.beta)},
                {"dim", w->algebra.dim()},
                {"derivation_ok", is_derivation(w->algebra, w->derivation).ok},
                {"nilpotency", nilpotency_json(nilpotency_class(w->algebra))},
                {"annihilated_by", to_string(r)},
                {"annihilated", poly_annihilates(r, w->derivation)},
                {"order", order_json(map_order(w->derivation))},
                {"algebra", io::algebra_to_json(w->algebra)},
                {"map", io::map_to_json(w->derivation)["matrix"]}};
    return o;
  };

  // -- tables ------------------------------------------------------------------
  std::string which;
  auto* tables_cmd = app.add_subcommand("tables", "Regenerate a reference table");
  tables_cmd->add_option("which", which)->required()->check(CLI::IsMember(table_names()));
  handlers[tables_cmd] = [&] {
    Outcome o;
    o.inputs = {{"which", which}};
    Table t = make_table(which);
    o.result = json::parse(render(t, Format::Json));
    o.table = std::move(t);
    return o;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* chosen = nullptr;
  std::string command;
  for (auto* sub : app.get_subcommands()) {
    command = sub->get_name();
    chosen = sub;
    if (sub == lie_cmd) {
      chosen = lie_cmd->get_subcommands().front();
      command += " " + chosen->get_name();
    }
  }
  if (chosen == tables_cmd) default_format = "md";
  const Format fmt = parse_format(format.empty() ? default_format : format);

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    SeedScope scope(seed);
    o = handlers.at(chosen)();
  } catch (const DeskScaleExceeded& e) {
    err << "derinv: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InternalError& e) {
    err << "derinv: internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const InvalidArgument& e) {
    err << "derinv: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "derinv: internal error: " << e.what() << '\n';
    return kInternal;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  if (fmt == Format::Json) {
    json envelope{{"command", command}, {"inputs", o.inputs}, {"result", o.result}};
    if (timing) envelope["elapsed_ms"] = elapsed.count();
    out << envelope.dump(2) << '\n';
  } else {
    out << render(o.table ? *o.table : flatten(o.result), fmt);
    if (timing) err << "elapsed_ms: " << elapsed.count() << '\n';
  }
  return o.code;
}

}  // namespace derinv::cli
