#include "mcalc/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mcalc/error.hpp"
#include "mcalc/groebner.hpp"
#include "mcalc/multiplicity.hpp"
#include "mcalc/session.hpp"
#include "mcalc/verifysuite.hpp"

namespace mcalc {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::string session_path;
  std::string module;
  std::string ideal;
  bool ideal_given = false;
  std::string seq;
  std::string seq2;
  std::string params;
  int r = -1;
  std::size_t index = 1;
  unsigned power = 1;
  std::string f;
  std::string g;
  std::uint64_t prime = 0;
  std::size_t budget = 50;
  std::uint64_t seed = 0;
  std::string scenario;
  std::string tag;
  bool all = false;
};

struct Outcome {
  json inputs = json::object();
  json result;
  json certificate = json::object();
  std::optional<Verdict> verdict;
  std::string text;
};

std::vector<std::string> strs(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::string paren(const std::vector<Polynomial>& ps) {
  std::string s = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s + ")";
}

std::string join_ints(const std::vector<long long>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

// A bare name of a session sequence resolves to it; anything else is parsed
// as a comma-separated polynomial list.
std::vector<Polynomial> sequence_arg(const Session& s, const std::string& text) {
  if (const auto* named = s.find_sequence(text)) return named->elements;
  return parse_polynomial_list(s.ring.base(), text);
}

json module_json(const FPModule& m) {
  std::vector<std::string> rels;
  for (const auto& r : m.relations()) rels.push_back(r.to_string());
  const auto l = length(m);
  return {{"rank", m.rank()}, {"relations", rels}, {"length", l ? json(*l) : json("INFINITE")}};
}

std::string report_text(const Report& r) {
  std::ostringstream o;
  o << r.claim << ": " << verdict_name(r.verdict) << "\n  left:  " << join_ints(r.left)
    << "\n  right: " << join_ints(r.right) << '\n';
  return o.str();
}

Outcome from_report(Report r) {
  Outcome o;
  o.result = {{"claim", r.claim}, {"left", r.left}, {"right", r.right}};
  o.certificate = r.certificate;
  o.verdict = r.verdict;
  o.text = report_text(r);
  return o;
}

Outcome cmd_gb(const Session& s, const Options& opt) {
  const auto gens = opt.ideal_given ? parse_polynomial_list(s.ring.base(), opt.ideal) : std::vector<Polynomial>{};
  const auto gb = buchberger(s.ring, gens);
  Outcome o;
  o.inputs = {{"ideal", strs(gens)}};
  o.result = {{"basis", strs(gb.generators())}};
  o.certificate = {{"s_pairs_reduce_to_zero", verify_groebner(gb)}};
  std::ostringstream t;
  t << "groebner basis (" << gb.generators().size() << "):\n";
  for (const auto& g : gb.generators()) t << "  " << g.to_string() << '\n';
  o.text = t.str();
  return o;
}

FPModule cut_module(const Session& s, const Options& opt, json& inputs) {
  FPModule m = s.module(opt.module);
  inputs["module"] = opt.module.empty() ? json(nullptr) : json(opt.module);
  if (opt.ideal_given) {
    const auto gens = parse_polynomial_list(s.ring.base(), opt.ideal);
    inputs["ideal"] = strs(gens);
    m = quotient_by_ideal(m, gens);
  }
  return m;
}

Outcome cmd_dim(const Session& s, const Options& opt) {
  Outcome o;
  const FPModule m = cut_module(s, opt, o.inputs);
  const int d = module_dimension(m);
  o.result = {{"dimension", d}};
  o.text = "dimension: " + std::to_string(d) + (d < 0 ? " (zero module)" : "") + "\n";
  return o;
}

Outcome cmd_length(const Session& s, const Options& opt) {
  Outcome o;
  const FPModule m = cut_module(s, opt, o.inputs);
  const auto l = length(m);
  o.result = {{"length", l ? json(*l) : json("INFINITE")}};
  if (l) {
    o.certificate = {{"supported_at_origin", supported_at_origin(m)}};
    o.text = "length: " + std::to_string(*l) + "\n";
  } else {
    o.text = "length: INFINITE\n";
  }
  return o;
}

Outcome cmd_mult(const Session& s, const Options& opt) {
  Outcome o;
  const FPModule m = s.module(opt.module);
  const auto params = sequence_arg(s, opt.params);
  const int r = opt.r >= 0 ? opt.r : module_dimension(m);
  o.inputs = {{"module", opt.module.empty() ? json(nullptr) : json(opt.module)}, {"params", strs(params)}, {"r", r}};
  const auto e = multiplicity_details(m, params, r);
  o.result = {{"multiplicity", e.value}};
  o.certificate = e.to_json();
  std::ostringstream t;
  t << "e = " << e.value << " (r = " << r << ")\n"
    << "lengths: " << join_ints(e.lengths) << "\n"
    << "differences: " << join_ints(e.differences) << "\n";
  for (const auto& w : e.warnings) t << "warning: " << w << '\n';
  o.text = t.str();
  return o;
}

Outcome cmd_koszul(const Session& s, const Options& opt) {
  Outcome o;
  const FPModule m = s.module(opt.module);
  const auto x = sequence_arg(s, opt.seq);
  o.inputs = {{"module", opt.module.empty() ? json(nullptr) : json(opt.module)}, {"seq", strs(x)}};
  const auto hs = koszul_homologies(x, m);
  json homology = json::array();
  std::ostringstream t;
  bool finite = true;
  long long alt = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    homology.push_back(module_json(hs[i]));
    const auto l = length(hs[i]);
    if (l) alt += (i % 2 ? -1 : 1) * static_cast<long long>(*l);
    finite = finite && l.has_value();
    t << "H_" << i << ": rank " << hs[i].rank() << ", length " << (l ? std::to_string(*l) : "INFINITE") << '\n';
    for (const auto& r : hs[i].relations()) t << "    " << r.to_string() << '\n';
  }
  o.result = {{"homology", homology}, {"alternating_sum", finite ? json(alt) : json("INFINITE")}};
  t << "alternating sum: " << (finite ? std::to_string(alt) : "undefined (infinite length)") << '\n';
  o.text = t.str();
  return o;
}

Outcome cmd_search(const Session& s, const Options& opt) {
  const auto res = search_parameters(s.ring, opt.prime, opt.budget, opt.seed);
  Outcome o;
  o.inputs = {{"prime", opt.prime}, {"budget", opt.budget}, {"seed", opt.seed}};
  o.result = {{"status", res.found ? "FOUND" : "EXHAUSTED"}};
  if (res.found) {
    o.result["ideal"] = strs(res.ideal);
    o.result["e"] = res.e;
  }
  o.certificate = res.to_json();
  std::ostringstream t;
  if (res.found)
    t << "FOUND I = " << paren(res.ideal) << ", e = " << res.e << " (gcd with " << opt.prime << " is 1)\n";
  else
    t << "EXHAUSTED after " << res.table.size() << " candidates\n";
  t << "dimension " << res.dimension << "; candidates examined:\n";
  for (const auto& row : res.table) {
    t << "  " << paren(row.ideal);
    if (row.rejected.empty()) t << "  e = " << row.e << '\n';
    else t << "  rejected: " << row.rejected << '\n';
  }
  o.text = t.str();
  return o;
}

Outcome cmd_scenario(const Options& opt) {
  Outcome o;
  if (!opt.scenario.empty()) {
    o = from_report(run_scenario(opt.scenario));
    o.inputs = {{"scenario", opt.scenario}};
    return o;
  }
  const auto summary = run_all(opt.tag);
  o.inputs = {{"tag", opt.tag}};
  o.result = {{"verified", summary.verified}, {"refuted", summary.refuted}, {"inconclusive", summary.inconclusive}};
  o.certificate = summary.to_json();
  o.verdict = summary.refuted ? Verdict::kRefuted : summary.inconclusive ? Verdict::kInconclusive : Verdict::kVerified;
  o.text = summary.to_table();
  return o;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mcalc: Koszul homology, Hilbert-Samuel multiplicities and their identities", "mcalc"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Print a machine-readable JSON record");

  auto with_session = [&](CLI::App* c) { c->add_option("session", opt.session_path, "Session file")->required(); };
  auto with_module = [&](CLI::App* c) { c->add_option("--module", opt.module, "Named module (default: the ring)"); };

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of (ideal) + J");
  with_session(gb);
  gb->add_option("--ideal", opt.ideal, "Comma-separated generators");

  auto* dim = app.add_subcommand("dim", "Krull dimension of M/IM");
  with_session(dim);
  with_module(dim);
  dim->add_option("--ideal", opt.ideal, "Comma-separated generators");

  auto* len = app.add_subcommand("length", "Length of M/IM");
  with_session(len);
  with_module(len);
  len->add_option("--ideal", opt.ideal, "Comma-separated generators");

  auto* mult = app.add_subcommand("mult", "Multiplicity e_I(M, r)");
  with_session(mult);
  with_module(mult);
  mult->add_option("--params", opt.params, "Generators of I, or a sequence name")->required();
  mult->add_option("--r", opt.r, "Order r (default: dim M)")->check(CLI::NonNegativeNumber);

  auto* kos = app.add_subcommand("koszul", "Koszul homology H_i(x, M)");
  with_session(kos);
  with_module(kos);
  kos->add_option("--seq", opt.seq, "Sequence x, or a sequence name")->required();

  auto* verify = app.add_subcommand("verify", "Check an identity");
  verify->require_subcommand(1);
  auto* v_serre = verify->add_subcommand("serre", "e_(x)(M, |x|) against the Koszul alternating sum");
  with_session(v_serre);
  with_module(v_serre);
  v_serre->add_option("--seq", opt.seq, "Sequence x")->required();
  auto* v_factor = verify->add_subcommand("factor", "Koszul sum over x y against the double sum");
  with_session(v_factor);
  with_module(v_factor);
  v_factor->add_option("--seq", opt.seq, "Sequence x")->required();
  v_factor->add_option("--seq2", opt.seq2, "Sequence y")->required();
  auto* v_vanish = verify->add_subcommand("vanish", "Koszul sum is 0 when x_i^k M = 0");
  with_session(v_vanish);
  with_module(v_vanish);
  v_vanish->add_option("--seq", opt.seq, "Sequence x")->required();
  v_vanish->add_option("--index", opt.index, "1-based index i")->check(CLI::PositiveNumber);
  v_vanish->add_option("--power", opt.power, "Exponent k")->check(CLI::PositiveNumber);
  auto* v_ord = verify->add_subcommand("ord", "l(B/fgB) = l(B/fB) + l(B/gB)");
  with_session(v_ord);
  v_ord->add_option("--f", opt.f, "Parameter f")->required();
  v_ord->add_option("--g", opt.g, "Parameter g")->required();
  auto* v_serre2 = verify->add_subcommand("serre2", "Three evaluations of Phi_x'(Phi_x[M])");
  with_session(v_serre2);
  with_module(v_serre2);
  v_serre2->add_option("--seq", opt.seq, "Sequence x (may be empty)")->required();
  v_serre2->add_option("--seq2", opt.seq2, "Sequence x'")->required();
  auto* v_scen = verify->add_subcommand("scenario", "Run registered scenarios");
  v_scen->add_option("id", opt.scenario, "Scenario id");
  v_scen->add_flag("--all", opt.all, "Run every scenario");
  v_scen->add_option("--tag", opt.tag, "Only scenarios with this tag");

  auto* search = app.add_subcommand("search", "Parameter ideal with multiplicity prime to p");
  with_session(search);
  search->add_option("--prime", opt.prime, "The prime p")->required()->check(CLI::PositiveNumber);
  search->add_option("--budget", opt.budget, "Number of candidates to examine");
  search->add_option("--seed", opt.seed, "Seed for the random phase");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  opt.ideal_given = !gb->get_option("--ideal")->empty() || !dim->get_option("--ideal")->empty() ||
                    !len->get_option("--ideal")->empty();
  if (*v_scen && opt.scenario.empty() && !opt.all && opt.tag.empty()) {
    err << "usage error: give a scenario id, --all or --tag\n\n" << v_scen->help();
    return 2;
  }

  std::string command;
  for (const auto* sub : app.get_subcommands()) {
    command = sub->get_name();
    for (const auto* inner : sub->get_subcommands()) command += " " + inner->get_name();
  }

  json session = nullptr;
  Outcome o;
  try {
    std::optional<Session> s;
    if (!opt.session_path.empty()) {
      s = load_session(opt.session_path);
      session = serialize_session(*s);
    }
    if (*gb) o = cmd_gb(*s, opt);
    else if (*dim) o = cmd_dim(*s, opt);
    else if (*len) o = cmd_length(*s, opt);
    else if (*mult) o = cmd_mult(*s, opt);
    else if (*kos) o = cmd_koszul(*s, opt);
    else if (*search) o = cmd_search(*s, opt);
    else if (*v_scen) o = cmd_scenario(opt);
    else {
      const FPModule m = v_ord->parsed() ? FPModule::zero(s->ring) : s->module(opt.module);
      json inputs = {{"module", opt.module.empty() ? json(nullptr) : json(opt.module)}};
      if (*v_serre) {
        const auto x = sequence_arg(*s, opt.seq);
        inputs["seq"] = strs(x);
        o = from_report(verify_serre(m, x));
      } else if (*v_factor) {
        const auto x = sequence_arg(*s, opt.seq), y = sequence_arg(*s, opt.seq2);
        inputs["seq"] = strs(x);
        inputs["seq2"] = strs(y);
        o = from_report(verify_factorization(m, x, y));
      } else if (*v_vanish) {
        const auto x = sequence_arg(*s, opt.seq);
        inputs["seq"] = strs(x);
        inputs["index"] = opt.index;
        inputs["power"] = opt.power;
        o = from_report(verify_vanish(m, x, opt.index - 1, opt.power));
      } else if (*v_serre2) {
        const auto x = sequence_arg(*s, opt.seq), x2 = sequence_arg(*s, opt.seq2);
        inputs["seq"] = strs(x);
        inputs["seq2"] = strs(x2);
        o = from_report(verify_serre2(m, x, x2));
      } else {
        const auto f = parse_polynomial(s->ring.base(), opt.f), g = parse_polynomial(s->ring.base(), opt.g);
        inputs = {{"f", f.to_string()}, {"g", g.to_string()}};
        o = from_report(ord_check(s->ring, f, g));
      }
      o.inputs = inputs;
    }
  } catch (const Error& e) {
    const std::string code(error_code_name(e.code()));
    if (opt.json) {
      json rec = {{"command", command}, {"session", session}, {"error", {{"code", code}, {"message", e.what()}}}};
      out << rec.dump(2) << '\n';
    }
    err << "error: " << code << ": " << e.what() << '\n';
    return 2;
  }

  if (opt.json) {
    json rec = {{"command", command},
                {"session", session},
                {"inputs", o.inputs},
                {"result", o.result},
                {"certificate", o.certificate},
                {"verdict", o.verdict ? json(std::string(verdict_name(*o.verdict))) : json(nullptr)}};
    out << rec.dump(2) << '\n';
  } else {
    out << o.text;
  }
  if (!o.verdict || *o.verdict == Verdict::kVerified) return 0;
  return *o.verdict == Verdict::kRefuted ? 1 : 2;
}

}  // namespace mcalc
