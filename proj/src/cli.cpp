#include "sgfl/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <deque>
#include <iostream>

#include "sgfl/error.hpp"
#include "sgfl/kunz.hpp"
#include "sgfl/parse.hpp"
#include "sgfl/report.hpp"
#include "sgfl/worked_examples.hpp"

namespace sgfl {

namespace {

struct Inputs {
  std::string gens;
  std::string file;
  std::string m;
  std::string formula = "longest";
  std::string method = "minrepl";
  std::string scope = "reduced";
  std::optional<std::int64_t> bound;
  bool allow_default = false;
  bool all = false;
  std::string element;
  std::string x;
  std::string verdict;
  std::string cominimal;
  std::vector<std::string> perturb;
};

Formula parse_formula(const std::string& s) {
  if (s == "longest") return Formula::Longest;
  if (s == "shortest") return Formula::Shortest;
  throw Error(ErrorKind::Parse, "formula must be longest or shortest, got '" + s + "'");
}

std::vector<Semigroup> load_semigroups(const Inputs& in) {
  if (!in.file.empty()) return read_semigroup_file(in.file);
  if (in.gens.empty()) throw Error(ErrorKind::Parse, "one of --gens or --file is required");
  return {parse_semigroup(in.gens)};
}

Semigroup load_one(const Inputs& in) {
  if (in.gens.empty()) throw Error(ErrorKind::Parse, "--gens is required");
  return parse_semigroup(in.gens);
}

Element load_m(const Inputs& in, const Semigroup& s) {
  if (in.m.empty()) throw Error(ErrorKind::Parse, "--m is required");
  return parse_element(in.m, s.dim());
}

/// Flat rows for TSV and pretty output of verdict-like commands.
struct Row {
  std::string semigroup;
  const Verdict* v;
};

void write_tsv(std::ostream& out, const std::vector<Row>& rows) {
  out << "semigroup\tformula\tm\tmethod\tholds\texact\tchecked\tcounterexamples\n";
  for (const auto& r : rows) {
    std::string counter;
    for (const auto& c : r.v->counterexamples) counter += (counter.empty() ? "" : ";") + c.element.to_string();
    out << r.semigroup << '\t' << to_string(r.v->formula) << '\t' << r.v->m.to_string() << '\t'
        << to_string(r.v->method) << '\t' << (r.v->holds ? "true" : "false") << '\t'
        << (r.v->exact ? "true" : "false") << '\t' << r.v->checked.size() << '\t' << counter << '\n';
  }
}

void write_pretty(std::ostream& out, const std::vector<Row>& rows) {
  for (const auto& r : rows) {
    out << r.semigroup << "  " << to_string(r.v->formula) << " at m=" << r.v->m.to_string() << " ["
        << to_string(r.v->method) << "]: " << (r.v->holds ? "holds" : "fails");
    if (!r.v->counterexamples.empty()) {
      const auto& c = r.v->counterexamples.front();
      out << " at " << c.element.to_string() << " (" << c.value << " vs " << c.shifted << ")";
    }
    if (!r.v->note.empty()) out << "  (" << r.v->note << ")";
    out << '\n';
  }
}

Json header(const std::string& command, const RunConfig& config) {
  return Json{{"schema", kSchemaId}, {"command", command}, {"seed", config.seed}};
}

class Runner {
 public:
  Runner(const RunConfig& config, const Inputs& in, std::ostream& out) : config_(config), in_(in), out_(out) {
    search_.budget = config.budget;
  }

  int verdict(const std::string& command, const std::string& method) {
    Semigroup s = load_one(in_);
    Formula formula = parse_formula(in_.formula);
    Verdict v;
    if (method == "embdim3") {
      v = embdim3_check(s, formula, search_);
      if (!in_.m.empty() && load_m(in_, s) != v.m) {
        throw Error(ErrorKind::Parse, "embdim3 checks m = " + v.m.to_string() + ", got --m " + in_.m);
      }
    } else if (method == "oracle") {
      OracleOptions o;
      o.bound = in_.bound;
      o.allow_default = in_.allow_default;
      o.jobs = config_.parallelism;
      v = oracle_scan(s, load_m(in_, s), formula, o);
    } else if (method == "minrepl") {
      v = check_formula(s, load_m(in_, s), formula, search_, parse_scope(in_.scope));
    } else {
      throw Error(ErrorKind::Parse, "method must be minrepl, embdim3 or oracle, got '" + method + "'");
    }
    std::vector<Row> rows{{s.to_string(), &v}};
    if (config_.output == OutputFormat::Json) {
      Json j = header(command, config_);
      j["semigroup"] = to_json(s);
      j["verdict"] = to_json(v, in_.all);
      if (method == "minrepl") j["scope"] = to_string(parse_scope(in_.scope));
      emit(j);
    } else {
      emit_rows(rows);
    }
    return v.holds ? kExitOk : kExitVerdictFalse;
  }

  int analyze() {
    std::vector<Semigroup> all = load_semigroups(in_);
    std::deque<Verdict> store;
    std::vector<Row> rows;
    Json results = Json::array();
    bool every = true;
    for (const auto& s : all) {
      Json formulas = Json::array();
      for (Formula f : {Formula::Longest, Formula::Shortest}) {
        Json atoms = Json::array();
        for (const auto& m : candidate_atoms(s, f)) {
          MinReplReport report = min_repl(s, m, search_);
          Verdict reduced = check_formula(s, report, f, search_, CandidateScope::Reduced);
          Verdict full = check_formula(s, report, f, search_, CandidateScope::Full);
          Json entry{{"m", to_json(m)}, {"holds", full.holds}, {"reduced", to_json(reduced, in_.all)},
                     {"full", to_json(full, in_.all)}};
          bool holds = full.holds;
          std::optional<Verdict> oracle;
          if (s.is_numerical() || in_.bound || in_.allow_default) {
            OracleOptions o;
            o.bound = in_.bound;
            o.allow_default = in_.allow_default;
            o.jobs = config_.parallelism;
            oracle = oracle_scan(s, m, f, o);
            entry["oracle"] = to_json(*oracle, in_.all);
          }
          if (s.is_numerical() && s.embedding_dimension() == 3) {
            entry["embdim3"] = to_json(embdim3_check(s, f, search_), in_.all);
          }
          entry["agree"] = reduced.holds == full.holds && (!oracle || oracle->holds == full.holds);
          every = every && holds;
          atoms.push_back(entry);
          store.push_back(std::move(full));
          rows.push_back({s.to_string(), &store.back()});
        }
        formulas.push_back(Json{{"formula", to_string(f)}, {"atoms", atoms}});
      }
      results.push_back(Json{{"semigroup", to_json(s)}, {"formulas", formulas}});
    }
    if (config_.output == OutputFormat::Json) {
      Json j = header("analyze", config_);
      j["results"] = results;
      emit(j);
    } else {
      emit_rows(rows);
    }
    return every ? kExitOk : kExitVerdictFalse;
  }

  int minrepl() {
    Semigroup s = load_one(in_);
    MinReplReport report = min_repl(s, load_m(in_, s), search_);
    candidate_sets(s, report);
    require_json("minrepl");
    Json j = header("minrepl", config_);
    j["semigroup"] = to_json(s);
    j["report"] = to_json(s, report);
    emit(j);
    return kExitOk;
  }

  int lengths() {
    Semigroup s = load_one(in_);
    if (in_.element.empty()) throw Error(ErrorKind::Parse, "--element is required");
    std::optional<Element> m;
    if (!in_.m.empty()) m = load_m(in_, s);
    auto summary = length_summary(s, parse_element(in_.element, s.dim()), m, search_);
    require_json("lengths");
    Json j = header("lengths", config_);
    j["semigroup"] = to_json(s);
    j["summary"] = to_json(summary);
    emit(j);
    return kExitOk;
  }

  int kunz_point() {
    if (in_.m.empty() || in_.x.empty()) throw Error(ErrorKind::Parse, "--m and --x are required");
    std::int64_t m = 0;
    try {
      m = std::stoll(in_.m);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "--m must be an integer, got '" + in_.m + "'");
    }
    KunzContext ctx = numerical_context(m);
    KunzPoint p(ctx, parse_point(in_.x));
    require_json("kunz point");
    Json j = header("kunz point", config_);
    j["point"] = to_json(p);
    int code = kExitOk;
    if (!in_.verdict.empty()) {
      auto v = main_verdict(p, parse_formula(in_.verdict));
      j["verdict"] = to_json(v);
      if (!v.holds) code = kExitVerdictFalse;
    }
    if (!in_.cominimal.empty()) {
      KunzPoint q(ctx, parse_point(in_.cominimal));
      j["cominimal"] = Json{{"other", q.x()}, {"cominimal", cominimal(p, q)}};
    }
    emit(j);
    return code;
  }

  int worked_examples() {
    WorkedExampleOptions o;
    o.search = search_;
    o.perturb.insert(in_.perturb.begin(), in_.perturb.end());
    auto rows = run_worked_examples(o);
    int code = kExitOk;
    for (const auto& r : rows) {
      if (r.status == RowStatus::Error) code = kExitInputError;
      if (r.status == RowStatus::Fail && code == kExitOk) code = kExitVerdictFalse;
    }
    if (config_.output == OutputFormat::Json) {
      Json list = Json::array();
      std::size_t passed = 0;
      for (const auto& r : rows) {
        passed += r.status == RowStatus::Pass;
        list.push_back(Json{{"id", r.id}, {"status", to_string(r.status)}, {"expected", r.expected}, {"actual", r.actual}});
      }
      Json j = header("paper-examples", config_);
      j["passed"] = passed;
      j["total"] = rows.size();
      j["rows"] = list;
      emit(j);
    } else {
      for (const auto& r : rows) {
        out_ << to_string(r.status) << '\t' << r.id;
        if (r.status != RowStatus::Pass) out_ << "\texpected: " << r.expected << "\tactual: " << r.actual;
        out_ << '\n';
      }
    }
    return code;
  }

 private:
  static CandidateScope parse_scope(const std::string& s) {
    if (s == "reduced") return CandidateScope::Reduced;
    if (s == "full") return CandidateScope::Full;
    throw Error(ErrorKind::Parse, "scope must be reduced or full, got '" + s + "'");
  }

  void require_json(const std::string& command) {
    if (config_.output != OutputFormat::Json) {
      throw Error(ErrorKind::Parse, command + " supports only --output json");
    }
  }

  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

  void emit_rows(const std::vector<Row>& rows) {
    if (config_.output == OutputFormat::Tsv) {
      write_tsv(out_, rows);
    } else {
      write_pretty(out_, rows);
    }
  }

  RunConfig config_;
  const Inputs& in_;
  std::ostream& out_;
  SearchOptions search_;
};

std::uint64_t default_budget() {
  const char* env = std::getenv("SGFL_BUDGET");
  if (!env) return RunConfig{}.budget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*env == '\0' || *end != '\0' || v == 0) throw Error(ErrorKind::Parse, "SGFL_BUDGET must be a positive integer");
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  Inputs in;
  try {
    config.budget = default_budget();
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }

  CLI::App app{"Decide L(s+m) = L(s)+1 and l(s+m) = l(s)+1 for semigroups and atoms m", "sgfl"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "json";
  bool assert_holds = false;
  app.add_option("--output", output, "json, tsv or pretty")
      ->check(CLI::IsMember({"json", "tsv", "pretty"}))
      ->capture_default_str();
  app.add_option("--budget", config.budget, "Search node limit (env SGFL_BUDGET)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--jobs", config.parallelism, "Worker threads for oracle scans")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed echoed in reports")->capture_default_str();
  app.add_flag("--assert-holds", assert_holds, "Exit 1 when a verdict is false");

  auto gens_opt = [&](CLI::App* sub) { sub->add_option("--gens", in.gens, "10,12,21,38 or (2,0),(3,1),(0,5)"); };
  auto verdict_opts = [&](CLI::App* sub) {
    gens_opt(sub);
    sub->add_option("--m", in.m, "The atom m");
    sub->add_option("--formula", in.formula, "longest or shortest")->capture_default_str();
    sub->add_option("--bound", in.bound, "Largest t = s + m scanned by the oracle");
    sub->add_flag("--allow-default", in.allow_default, "Use the default oracle bound for affine semigroups");
    sub->add_flag("--all", in.all, "List every counterexample and checked element");
  };

  auto* analyze = app.add_subcommand("analyze", "Both formulas at every candidate atom");
  gens_opt(analyze);
  analyze->add_option("--file", in.file, "One semigroup per line");
  analyze->add_option("--bound", in.bound, "Oracle bound (needed for affine semigroups)");
  analyze->add_flag("--allow-default", in.allow_default, "Use the default oracle bound for affine semigroups");
  analyze->add_flag("--all", in.all, "List every counterexample");

  auto* minrepl = app.add_subcommand("minrepl", "Minimal replaceable factorizations and candidate sets");
  gens_opt(minrepl);
  minrepl->add_option("--m", in.m, "The atom m");

  auto* verdict = app.add_subcommand("verdict", "Decide one formula at one atom");
  verdict_opts(verdict);
  verdict->add_option("--method", in.method, "minrepl, embdim3 or oracle")->capture_default_str();
  verdict->add_option("--scope", in.scope, "reduced or full candidate set (minrepl method)")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Brute-force scan of one formula at one atom");
  verdict_opts(oracle);

  auto* lengths = app.add_subcommand("lengths", "Set of lengths of one element");
  gens_opt(lengths);
  lengths->add_option("--element", in.element, "48 or (30,10)");
  lengths->add_option("--m", in.m, "Also report whether extremal factorizations use m");

  auto* kunz = app.add_subcommand("kunz", "Kunz polytope points");
  kunz->require_subcommand(1);
  kunz->fallthrough();
  auto* point = kunz->add_subcommand("point", "Poset, infinite factorizations and verdict of a point");
  point->add_option("--m", in.m, "Modulus");
  point->add_option("--x", in.x, "Coordinates x_0,...,x_{m-1}");
  point->add_option("--verdict", in.verdict, "longest or shortest");
  point->add_option("--cominimal", in.cominimal, "Compare with another point");

  auto* examples = app.add_subcommand("paper-examples", "Regression run over the worked examples");
  examples->add_option("--perturb", in.perturb, "Corrupt the expected value of these rows")->group("");

  std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_rest.begin(), argv_rest.end());
  try {
    app.parse(argv_rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }
  config.output = output == "tsv" ? OutputFormat::Tsv : output == "pretty" ? OutputFormat::Pretty : OutputFormat::Json;

  Runner runner(config, in, out);
  int code = kExitOk;
  std::string command;
  try {
    if (analyze->parsed()) {
      command = "analyze";
      code = runner.analyze();
    } else if (minrepl->parsed()) {
      command = "minrepl";
      code = runner.minrepl();
    } else if (verdict->parsed()) {
      command = "verdict";
      code = runner.verdict("verdict", in.method);
    } else if (oracle->parsed()) {
      command = "oracle";
      code = runner.verdict("oracle", "oracle");
    } else if (lengths->parsed()) {
      command = "lengths";
      code = runner.lengths();
    } else if (point->parsed()) {
      command = "kunz point";
      code = runner.kunz_point();
    } else {
      return runner.worked_examples();
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    if (config.output == OutputFormat::Json) {
      Json j = header(command, config);
      j["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
      out << j.dump(2) << '\n';
    }
    return kExitInputError;
  }
  if (code == kExitVerdictFalse && !assert_holds) code = kExitOk;
  return code;
}

}  // namespace sgfl
