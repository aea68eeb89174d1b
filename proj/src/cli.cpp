#include "monopath/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "monopath/colourings.hpp"
#include "monopath/engine.hpp"
#include "monopath/generators.hpp"
#include "monopath/io.hpp"
#include "monopath/oracle.hpp"
#include "monopath/oriented.hpp"

namespace monopath::cli {

namespace {

using json = nlohmann::ordered_json;

// A failure that should be reported with a specific diagnostic kind.
struct CommandError : std::runtime_error {
  CommandError(std::string k, const std::string& msg) : std::runtime_error(msg), kind(std::move(k)) {}
  std::string kind;
};

json path_json(Colour c, const VertexPath& p, std::optional<bool> target_met = std::nullopt) {
  json j{{"kind", "path"}, {"colour", c}, {"colour_name", colour_name(c)}, {"order", p.order()},
         {"vertices", p.vertices}};
  if (target_met) j["target_met"] = *target_met;
  return j;
}

json witness_json(const ViolationWitness& w, long k0) {
  return {{"kind", "witness"}, {"A", w.A},           {"B", w.B},     {"observed", w.observed},
          {"required", w.required}, {"epsilon", w.epsilon}, {"k0", k0}};
}

json constants_json(const EngineConstants& k) {
  return {{"epsilon", k.epsilon},
          {"sigma", k.sigma},
          {"n", k.n},
          {"r", k.r},
          {"s", k.s},
          {"a", k.a},
          {"b", k.b},
          {"d", k.d},
          {"k_block", k.k_block},
          {"x_target", k.x_target},
          {"y_target", k.y_target},
          {"medium_lo", k.medium_lo},
          {"medium_hi", k.medium_hi},
          {"aux_threshold", k.aux_threshold},
          {"redred_size", k.redred_size},
          {"order_threshold", k.order_threshold},
          {"k0", k.k0},
          {"sender_guarantee", k.sender_guarantee},
          {"c_general", k.c_general},
          {"c_path", k.c_path},
          {"overridden", k.overridden},
          {"flags",
           {{"r_within_cn", k.flags.r_within},
            {"s_within_cn", k.flags.s_within},
            {"rs_within_cn2_over_log", k.flags.rs_within},
            {"hypothesis_holds", k.flags.holds()},
            {"k_block_exceeds_n", k.flags.k_block_exceeds_n},
            {"overridden_regime", k.flags.overridden_regime}}}};
}

json base_report(const std::string& command, json parameters) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"parameters", std::move(parameters)}};
}

std::string header_word(const std::string& text) {
  std::istringstream in(text);
  std::string w;
  in >> w;
  return w;
}

Tournament load_tournament(const std::string& path) {
  const std::string text = read_file(path);
  if (header_word(text) == "colouring") return parse_colouring(text).tournament();
  return parse_tournament(text);
}

EdgeColouring load_colouring(const std::string& path) { return parse_colouring(read_file(path)); }

EngineOverrides parse_overrides(const std::vector<std::string>& items) {
  EngineOverrides o;
  for (const auto& s : items) o.set(s);
  return o;
}

double sigma_or_default(double sigma, double epsilon) { return sigma > 0 ? sigma : sigma_for_epsilon(epsilon); }

void write_or_print(const std::string& text, const std::string& output, std::ostream& out, json& report) {
  if (output.empty()) {
    out << text;
    report = nullptr;
    return;
  }
  write_file(output, text);
  report["status"] = "ok";
  report["result"] = {{"kind", "file"}, {"path", output}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monochromatic directed paths in edge-coloured tournaments"};
  app.require_subcommand(1);
  app.fallthrough();
  bool timing = false;
  int threads = 1;
  app.add_flag("--timing", timing, "Add wall-clock time to the report");
  app.add_option("--threads", threads, "Accepted; all computation is sequential");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a tournament");
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  bool gen_transitive = false;
  std::string gen_output;
  gen->add_option("--n", gen_n, "Vertex count")->required();
  auto* gen_seed_opt = gen->add_option("--seed", gen_seed, "Seed (required unless --transitive)");
  gen->add_flag("--transitive", gen_transitive, "i -> j iff i < j");
  gen->add_option("--output,-o", gen_output, "Write to a file instead of stdout");

  // colour
  auto* colour = app.add_subcommand("colour", "Colour a tournament");
  std::string col_input, col_strategy, col_output;
  int col_n = 0, col_k = 2;
  std::uint64_t col_seed = 0;
  colour->add_option("--input", col_input, "Tournament file");
  colour->add_option("--strategy", col_strategy, "index | blocked | sublog | random")
      ->required()
      ->check(CLI::IsMember({"index", "blocked", "sublog", "random"}));
  colour->add_option("--n", col_n, "Vertex count (blocked)");
  colour->add_option("--k", col_k, "Number of colours (random)");
  auto* col_seed_opt = colour->add_option("--seed", col_seed, "Seed (random)");
  colour->add_option("--output,-o", col_output, "Write to a file instead of stdout");

  // extract
  auto* ext = app.add_subcommand("extract", "Find a long monochromatic path or a pseudorandomness violation");
  std::string ext_input, ext_format = "json";
  long ext_r = 0, ext_s = 0, ext_target = 0;
  double ext_eps = 0.25, ext_sigma = 0;
  std::vector<std::string> ext_over;
  ext->add_option("--input", ext_input, "Colouring file")->required();
  ext->add_option("--r", ext_r, "Blue target order");
  ext->add_option("--s", ext_s, "Red target order");
  ext->add_option("--target", ext_target, "Target order for colourings with more than two colours");
  ext->add_option("--epsilon", ext_eps, "Pseudorandomness density");
  ext->add_option("--sigma", ext_sigma, "Defaults to 2(1/2 - epsilon)^-2");
  ext->add_option("--override", ext_over, "key=value constant override");
  ext->add_option("--format", ext_format)->check(CLI::IsMember({"json"}));

  // embed
  auto* emb = app.add_subcommand("embed", "Find a monochromatic oriented path");
  std::string emb_input, emb_pattern;
  double emb_eps = 0.25, emb_sigma = 0;
  long emb_x = 0, emb_y = 0;
  std::vector<std::string> emb_over;
  emb->add_option("--input", emb_input, "Colouring file")->required();
  emb->add_option("--pattern", emb_pattern, "Segment lengths, e.g. 3,2,1")->required();
  emb->add_option("--epsilon", emb_eps);
  emb->add_option("--sigma", emb_sigma);
  auto* emb_x_opt = emb->add_option("--x", emb_x, "Subset size for nested oracle calls");
  auto* emb_y_opt = emb->add_option("--y", emb_y, "Subset size for top-level oracle calls");
  emb->add_option("--override", emb_over, "key=value constant override for the path finder");

  // check-pr
  auto* cpr = app.add_subcommand("check-pr", "Check (epsilon, k0)-pseudorandomness");
  std::string cpr_input;
  double cpr_eps = 0.25;
  int cpr_k0 = 0, cpr_trials = 0, cpr_refine = 2;
  bool cpr_exact = false;
  std::uint64_t cpr_seed = 0, cpr_budget = kDefaultExactBudget;
  cpr->add_option("--input", cpr_input, "Tournament or colouring file")->required();
  cpr->add_option("--epsilon", cpr_eps);
  cpr->add_option("--k0", cpr_k0)->required();
  cpr->add_flag("--exact", cpr_exact, "Exhaustive check");
  cpr->add_option("--trials", cpr_trials, "Sampled pairs");
  auto* cpr_seed_opt = cpr->add_option("--seed", cpr_seed);
  cpr->add_option("--refine", cpr_refine, "Greedy refinement rounds per sample");
  cpr->add_option("--budget", cpr_budget, "Pair budget for --exact");

  // oracle
  auto* orc = app.add_subcommand("oracle", "Exact small-instance computations");
  std::string orc_mode, orc_input;
  int orc_colour = -1;
  orc->add_option("mode", orc_mode, "longest-mono | m-of-t | chromatic")
      ->required()
      ->check(CLI::IsMember({"longest-mono", "m-of-t", "chromatic"}));
  orc->add_option("--input", orc_input)->required();
  orc->add_option("--colour", orc_colour, "chromatic: use this colour class instead of the whole tournament");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "Constants ledger and hypothesis flags");
  double bnd_eps = 0.25, bnd_sigma = 0;
  int bnd_n = 0;
  long bnd_r = 1, bnd_s = 1;
  std::vector<std::string> bnd_over;
  bnd->add_option("--epsilon", bnd_eps);
  bnd->add_option("--sigma", bnd_sigma);
  bnd->add_option("--n", bnd_n)->required();
  bnd->add_option("--r", bnd_r);
  bnd->add_option("--s", bnd_s);
  bnd->add_option("--override", bnd_over);

  // verify
  auto* ver = app.add_subcommand("verify", "Re-validate an emitted report against its instance");
  std::string ver_instance, ver_artifact;
  ver->add_option("--instance", ver_instance, "Colouring or tournament file")->required();
  ver->add_option("--artifact", ver_artifact, "JSON report from extract, embed or check-pr")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, err, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, err, err);
  } catch (const CLI::ParseError& e) {
    json r = base_report(args.empty() ? "" : args.front(), json::object());
    r["status"] = "error";
    r["error"] = {{"kind", "usage"}, {"message", e.what()}};
    out << r.dump(2) << "\n";
    return kExitError;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string command = app.get_subcommands().front()->get_name();
  json report = base_report(command, json::object());
  int code = kExitOk;
  try {
    if (command == "gen") {
      report["parameters"] = {{"n", gen_n}, {"transitive", gen_transitive}};
      if (!gen_transitive && !gen_seed_opt->count()) throw CommandError("usage", "gen needs --seed");
      if (!gen_transitive) report["parameters"]["seed"] = gen_seed;
      const Tournament t = gen_transitive ? transitive_tournament(gen_n) : random_tournament(gen_n, gen_seed);
      write_or_print(render_tournament(t), gen_output, out, report);
    } else if (command == "colour") {
      report["parameters"] = {{"strategy", col_strategy}};
      std::string text;
      if (col_strategy == "blocked") {
        if (col_n < 1) throw CommandError("usage", "blocked needs --n");
        report["parameters"]["n"] = col_n;
        text = render_colouring(blocked_transitive_colouring(col_n).colouring);
      } else {
        if (col_input.empty()) throw CommandError("usage", col_strategy + " needs --input");
        report["parameters"]["input"] = col_input;
        const Tournament t = load_tournament(col_input);
        if (col_strategy == "index") {
          text = render_colouring(index_colouring(t));
        } else if (col_strategy == "sublog") {
          text = render_colouring(sublog_colouring(t).colouring);
        } else {
          if (!col_seed_opt->count()) throw CommandError("usage", "random colouring needs --seed");
          report["parameters"]["seed"] = col_seed;
          report["parameters"]["k"] = col_k;
          text = render_colouring(random_colouring(t, col_k, col_seed));
        }
      }
      write_or_print(text, col_output, out, report);
    } else if (command == "extract") {
      const EdgeColouring col = load_colouring(ext_input);
      const double sigma = sigma_or_default(ext_sigma, ext_eps);
      const EngineOverrides ov = parse_overrides(ext_over);
      report["parameters"] = {{"input", ext_input}, {"epsilon", ext_eps}, {"sigma", sigma}, {"overrides", ext_over}};
      if (col.colours() == 2) {
        if (ext_r < 1 || ext_s < 1) throw CommandError("usage", "extract needs --r and --s >= 1");
        report["parameters"]["r"] = ext_r;
        report["parameters"]["s"] = ext_s;
        const EngineConstants k = derive_constants(ext_eps, sigma, col.order(), ext_r, ext_s, ov);
        const ExtractOutcome o = extract(col, ext_r, ext_s, ext_eps, sigma, ov);
        if (auto* p = std::get_if<PathResult>(&o.result)) {
          report["status"] = "ok";
          report["result"] = path_json(p->colour, p->path, p->target_met);
        } else {
          report["status"] = "violation";
          report["result"] = witness_json(std::get<ViolationWitness>(o.result), k.k0);
          code = kExitViolation;
        }
        report["constants"] = constants_json(k);
        report["trace"] = o.trace;
      } else {
        if (ext_target < 1) throw CommandError("usage", "colourings with more than two colours need --target");
        report["parameters"]["target"] = ext_target;
        const EngineConstants k = derive_constants(ext_eps, sigma, col.order(), ext_target, ext_target, ov);
        const KColourOutcome o = k_colour_extract(col, ext_target, ext_eps, sigma, ov);
        report["status"] = "ok";
        if (auto* p = std::get_if<PathResult>(&o.result)) {
          report["result"] = path_json(p->colour, p->path, p->target_met);
        } else if (auto* w = std::get_if<ViolationWitness>(&o.result)) {
          report["status"] = "violation";
          report["result"] = witness_json(*w, k.k0);
          code = kExitViolation;
        } else {
          const auto& s = std::get<ShrinkReport>(o.result);
          report["result"] = {{"kind", "shrink"}, {"chain", s.chain}, {"reason", s.reason}};
        }
        report["constants"] = constants_json(k);
        report["trace"] = o.trace;
      }
    } else if (command == "embed") {
      const EdgeColouring col = load_colouring(emb_input);
      if (col.colours() != 2) throw CommandError("domain", "embed needs a two-colouring");
      RamseyParams p;
      p.epsilon = emb_eps;
      p.sigma = sigma_or_default(emb_sigma, emb_eps);
      p.engine = parse_overrides(emb_over);
      if (emb_x_opt->count()) p.x = emb_x;
      if (emb_y_opt->count()) p.y = emb_y;
      const OrientedPathPattern pat = OrientedPathPattern::parse(emb_pattern);
      report["parameters"] = {{"input", emb_input}, {"pattern", pat.to_string()}, {"epsilon", p.epsilon},
                              {"sigma", p.sigma},   {"overrides", emb_over}};
      const RamseyOutcome o = ramsey_oriented_path(col, pat, p);
      if (auto* e = std::get_if<ColouredEmbedding>(&o.result)) {
        report["status"] = "ok";
        report["result"] = {{"kind", "embedding"},
                            {"colour", e->colour},
                            {"colour_name", colour_name(e->colour)},
                            {"pattern", e->embedding.pattern.to_string()},
                            {"map", e->embedding.map}};
      } else if (auto* w = std::get_if<ViolationWitness>(&o.result)) {
        const EngineConstants k = derive_constants(p.epsilon, p.sigma, col.order(), 1, 1, p.engine);
        report["status"] = "violation";
        report["result"] = witness_json(*w, k.k0);
        code = kExitViolation;
      } else {
        const auto& h = std::get<HypothesisReport>(o.result);
        report["status"] = "error";
        report["error"] = {{"kind", "hypothesis_failure"}, {"flag", h.flag}, {"message", h.detail}};
        code = kExitError;
      }
      report["trace"] = o.trace;
    } else if (command == "check-pr") {
      const Tournament t = load_tournament(cpr_input);
      const PseudorandomParams pp{cpr_eps, cpr_k0};
      report["parameters"] = {{"input", cpr_input}, {"epsilon", cpr_eps}, {"k0", cpr_k0}};
      PseudorandomReport pr;
      if (cpr_exact) {
        report["parameters"]["mode"] = "exact";
        pr = check_pseudorandom_exact(t, pp, cpr_budget);
      } else {
        if (cpr_trials < 1) throw CommandError("usage", "check-pr needs --exact or --trials N");
        if (!cpr_seed_opt->count()) throw CommandError("usage", "sampled check-pr needs --seed");
        report["parameters"].update({{"mode", "sampled"}, {"trials", cpr_trials}, {"seed", cpr_seed},
                                     {"refine", cpr_refine}});
        pr = check_pseudorandom_sampled(t, pp, cpr_trials, cpr_seed, cpr_refine);
      }
      if (pr.witness) {
        report["status"] = "violation";
        report["result"] = witness_json(*pr.witness, cpr_k0);
        code = kExitViolation;
      } else {
        report["status"] = "ok";
        report["result"] = {{"kind", cpr_exact ? "certified" : "no-violation-found"}};
      }
      report["work"] = {{"pairs_examined", pr.pairs_examined}};
    } else if (command == "oracle") {
      report["parameters"] = {{"mode", orc_mode}, {"input", orc_input}};
      const std::string text = read_file(orc_input);
      const bool is_col = header_word(text) == "colouring";
      if (orc_mode == "longest-mono") {
        if (!is_col) throw CommandError("usage", "longest-mono needs a colouring");
        const auto reps = longest_mono_dirpath_exact(parse_colouring(text));
        json per = json::array();
        int best = 0;
        std::uint64_t work = 0;
        for (std::size_t c = 0; c < reps.size(); ++c) {
          per.push_back(path_json(static_cast<Colour>(c), std::get<VertexPath>(reps[c].witness)));
          per.back()["value"] = reps[c].value;
          best = std::max(best, reps[c].value);
          work += reps[c].work;
        }
        report["status"] = "ok";
        report["result"] = {{"kind", "longest-mono"}, {"value", best}, {"per_colour", per}};
        report["work"] = {{"states", work}, {"method", reps.empty() ? "" : reps.front().method}};
      } else if (orc_mode == "m-of-t") {
        const Tournament t = is_col ? parse_colouring(text).tournament() : parse_tournament(text);
        const ExactReport r = m_of_T_exact(t);
        json edges = json::array();
        const auto& w = std::get<EdgeColouring>(r.witness);
        for (auto [u, v] : t.digraph().edges()) edges.push_back({u, v, w.colour(u, v)});
        report["status"] = "ok";
        report["result"] = {{"kind", "m-of-t"}, {"value", r.value}, {"extremal_colouring", edges}};
        report["work"] = {{"states", r.work}, {"method", r.method}};
      } else {
        Digraph d;
        if (orc_colour >= 0) {
          if (!is_col) throw CommandError("usage", "--colour needs a colouring");
          const EdgeColouring col = parse_colouring(text);
          if (orc_colour >= col.colours()) throw CommandError("domain", "no such colour");
          d = colour_class(col, orc_colour);
          report["parameters"]["colour"] = orc_colour;
        } else {
          d = (is_col ? parse_colouring(text).tournament() : parse_tournament(text)).digraph();
        }
        const ExactReport r = chromatic_number_exact(d);
        report["status"] = "ok";
        report["result"] = {{"kind", "chromatic"}, {"value", r.value},
                            {"colouring", std::get<std::vector<int>>(r.witness)}};
        report["work"] = {{"states", r.work}, {"method", r.method}};
      }
    } else if (command == "bounds") {
      const double sigma = sigma_or_default(bnd_sigma, bnd_eps);
      const EngineConstants k = derive_constants(bnd_eps, sigma, bnd_n, bnd_r, bnd_s, parse_overrides(bnd_over));
      report["parameters"] = {{"epsilon", bnd_eps}, {"sigma", sigma}, {"n", bnd_n},
                              {"r", bnd_r},         {"s", bnd_s},     {"overrides", bnd_over}};
      report["status"] = "ok";
      json res = constants_json(k);
      res["kind"] = "bounds";
      res["c_path_log2"] = std::log2(k.c_path);
      res["c_stated"] = kStatedC;
      res["c_note"] = "the stated c = 2^21 is read as 2^-21; c_path = eps^2/(4800 sigma) is reported alongside";
      const double lg = std::log2(static_cast<double>(bnd_n));
      res["size_ramsey"] = {{"n2_log2n", static_cast<double>(bnd_n) * bnd_n * lg},
                            {"note", "oriented size Ramsey number of the directed path on n vertices is "
                                     "at most a constant times n^2 log n"}};
      report["result"] = res;
    } else if (command == "verify") {
      report["parameters"] = {{"instance", ver_instance}, {"artifact", ver_artifact}};
      const std::string text = read_file(ver_instance);
      json art;
      try {
        art = json::parse(read_file(ver_artifact));
      } catch (const json::exception& e) {
        throw ParseError(std::string("artifact is not JSON: ") + e.what());
      }
      if (!art.contains("result") || !art["result"].contains("kind"))
        throw CommandError("invalid_artifact", "artifact has no result");
      const json& res = art["result"];
      const std::string kind = res["kind"];
      bool valid = false;
      std::string what;
      if (kind == "path") {
        const EdgeColouring col = parse_colouring(text);
        const VertexPath p{res.at("vertices").get<VertexList>()};
        valid = validate_path(col, p, res.at("colour").get<int>()) && p.order() == res.at("order").get<int>();
        what = "monochromatic path of order " + std::to_string(p.order());
      } else if (kind == "embedding") {
        const EdgeColouring col = parse_colouring(text);
        const PatternEmbedding e{OrientedPathPattern::parse(res.at("pattern").get<std::string>()),
                                 res.at("map").get<VertexList>()};
        valid = validate_embedding(col, e, res.at("colour").get<int>());
        what = "monochromatic embedding of pattern " + e.pattern.to_string();
      } else if (kind == "witness") {
        const Tournament t = header_word(text) == "colouring" ? parse_colouring(text).tournament()
                                                               : parse_tournament(text);
        ViolationWitness w{res.at("A").get<VertexList>(), res.at("B").get<VertexList>(),
                           res.at("observed").get<long>(), res.at("required").get<long>(),
                           res.at("epsilon").get<double>()};
        valid = verify_witness(t, w, res.at("k0").get<int>());
        what = "pseudorandomness violation";
      } else {
        throw CommandError("invalid_artifact", "nothing to verify in a result of kind '" + kind + "'");
      }
      if (!valid) throw CommandError("invalid_artifact", what + " does not re-validate");
      report["status"] = "ok";
      report["result"] = {{"kind", "verified"}, {"checked", what}};
    }
  } catch (const CommandError& e) {
    report["status"] = "error";
    report["error"] = {{"kind", e.kind}, {"message", e.what()}};
    code = kExitError;
  } catch (const ParseError& e) {
    report["status"] = "error";
    report["error"] = {{"kind", "malformed_input"}, {"message", e.what()}};
    code = kExitError;
  } catch (const BudgetExceeded& e) {
    report["status"] = "error";
    report["error"] = {{"kind", "budget_exceeded"}, {"message", e.what()}};
    code = kExitError;
  } catch (const PreconditionError& e) {
    report["status"] = "error";
    report["error"] = {{"kind", "domain"}, {"message", e.what()}};
    code = kExitError;
  } catch (const json::exception& e) {
    report["status"] = "error";
    report["error"] = {{"kind", "invalid_artifact"}, {"message", e.what()}};
    code = kExitError;
  } catch (const std::exception& e) {
    report["status"] = "error";
    report["error"] = {{"kind", "internal"}, {"message", e.what()}};
    code = kExitError;
  }
  if (report.is_null()) return code;  // plain text already written
  if (timing)
    report["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << report.dump(2) << "\n";
  return code;
}

}  // namespace monopath::cli
