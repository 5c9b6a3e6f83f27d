#include "basecraft/cli.hpp"

#include "basecraft/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace basecraft {

namespace {

constexpr const char *kVersion = "1.0.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t max_order = kDefaultElementCap;
  std::size_t max_degree = 1'000'000;
  std::uint64_t trials = 10'000;
  std::uint64_t max_nodes = 20'000'000;
  bool no_meta = false;

  std::string gens, group, action, case_id, suite = "all", top = "C2",
                                           replay;
  unsigned c = 0;
  unsigned b_lk = 0;
  std::uint64_t samples = 10'000;
  bool exact = false, stretch = false, dump_domain = false;
};

// ---- group input ----

struct Input {
  PermGroup G; // the permutation group being studied
  std::optional<BuiltCase> built;
  std::optional<LabelledDomain> domain;
  const CaseRecord *record = nullptr;
  Json desc;
};

std::map<std::string, std::string> parse_params(const std::string &s) {
  std::map<std::string, std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      out[item] = "true";
    else
      out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

unsigned param_uint(const std::map<std::string, std::string> &p,
                    const std::string &key) {
  auto it = p.find(key);
  if (it == p.end())
    throw UsageError("action spec needs " + key + "=<n>");
  try {
    return static_cast<unsigned>(std::stoul(it->second));
  } catch (const std::exception &) {
    throw UsageError("bad value for " + key + ": " + it->second);
  }
}

bool param_flag(const std::map<std::string, std::string> &p, const std::string &key) {
  auto it = p.find(key);
  return it != p.end() && it->second != "false" && it->second != "0";
}

Input from_gens(const Options &o) {
  Input in;
  PermGroup base = ingest_generators(o.gens);
  std::string act = o.action.empty() ? "natural" : o.action;
  auto colon = act.find(':');
  std::string kind = act.substr(0, colon);
  auto params = parse_params(colon == std::string::npos ? "" : act.substr(colon + 1));
  ActionBudget budget{o.max_degree};
  if (kind == "natural") {
    in.G = base;
  } else if (kind == "pairs") {
    Action a = pair_action(base, budget);
    in.G = a.group;
    in.domain = a.domain;
  } else if (kind == "subsets") {
    Action a = subset_action(base, param_uint(params, "k"), {}, budget);
    in.G = a.group;
    in.domain = a.domain;
  } else {
    throw UsageError("unknown action for generator input: " + act);
  }
  in.desc = {{"gens", o.gens}, {"action", act}};
  return in;
}

Input from_group(const Options &o) {
  Input in;
  ClassicalGroup cg = classical_generators(MatGroupSpec::parse(o.group));
  std::string act = o.action.empty() ? "points" : o.action;
  auto colon = act.find(':');
  std::string kind = act.substr(0, colon);
  auto params = parse_params(colon == std::string::npos ? "" : act.substr(colon + 1));
  ActionBudget budget{o.max_degree};
  const unsigned n = cg.spec.n;
  auto gens = linear(cg.gens);
  bool has_form = cg.form.kind != FormKind::None;
  Action a;
  if (kind == "vectors") {
    a = vector_action(gens, *cg.field, n, budget);
  } else if (kind == "points" || kind == "iso-points" || kind == "subspaces") {
    unsigned m = kind == "subspaces" ? param_uint(params, "m") : 1;
    if (m == 0 || m >= n)
      throw UsageError("subspace dimension must lie in 1..n-1");
    auto con = SubspaceConstraint::All;
    if (kind == "iso-points" || param_flag(params, "iso"))
      con = SubspaceConstraint::TotallyIsotropic;
    else if (param_flag(params, "nondeg"))
      con = SubspaceConstraint::Nondegenerate;
    if (con != SubspaceConstraint::All && !has_form)
      throw UsageError(o.group + " preserves no form");
    a = subspace_action(gens, *cg.field, n, m, con, has_form ? &cg.form : nullptr,
                        budget);
  } else {
    throw UsageError("unknown action spec: " + act);
  }
  in.G = a.group;
  in.domain = a.domain;
  in.desc = {{"group", cg.spec.str()}, {"action", act}};
  return in;
}

Input from_case(const Options &o) {
  Input in;
  in.record = &find_case(o.case_id);
  BuiltCase b = build_case(o.case_id);
  in.G = b.action;
  in.domain = b.domain;
  in.built = std::move(b);
  in.desc = {{"case", o.case_id}};
  return in;
}

Input resolve(const Options &o) {
  int given = !o.gens.empty() + !o.group.empty() + !o.case_id.empty();
  if (given != 1)
    throw UsageError("give exactly one of --case, --gens, --group");
  if (!o.case_id.empty())
    return from_case(o);
  if (!o.gens.empty())
    return from_gens(o);
  return from_group(o);
}

PermGroup top_group(const std::string &s) {
  if (s.size() >= 2 && (s[0] == 'C' || s[0] == 'S' || s[0] == 'A')) {
    std::size_t m = 0;
    try {
      m = std::stoul(s.substr(1));
    } catch (const std::exception &) {
      m = 0;
    }
    if (m >= 1 && m <= 16) {
      if (s[0] == 'C')
        return PermGroup::cyclic(m);
      if (s[0] == 'S')
        return PermGroup::symmetric(m);
      if (m >= 3)
        return PermGroup::alternating(m);
    }
  }
  if (std::filesystem::exists(s))
    return ingest_generators(s);
  throw UsageError("top group must be Cm, Sm, Am (m <= 16) or a generator file");
}

SearchBudget search_budget(const Options &o) {
  return SearchBudget{o.max_nodes, o.trials, o.threads};
}

// ---- output ----

std::string utc_now() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

struct Emitter {
  const Options &o;
  std::ostream &out;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  Json extra_meta = Json::object();

  void emit(const std::string &cmd, Json input, Json result) {
    if (o.no_meta) {
      out << envelope(cmd, std::move(input), std::move(result)).dump(2) << '\n';
      return;
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    Json meta = {{"tool", "basecraft"},
                 {"version", kVersion},
                 {"timestamp", utc_now()},
                 {"elapsed_ms", ms},
                 {"threads", o.threads}};
    for (auto &[k, v] : extra_meta.items())
      meta[k] = v;
    out << envelope(cmd, std::move(input), std::move(result), &meta).dump(2) << '\n';
  }
};

Json with_seed(Json desc, const Options &o) {
  desc["seed"] = o.seed;
  return desc;
}

// ---- subcommands ----

int cmd_order(const Options &o, Emitter &em, std::ostream &err) {
  Input in = resolve(o);
  Json r;
  r["degree"] = in.G.degree();
  r["order"] = str(in.G.order());
  r["transitive"] = in.G.is_transitive();
  r["orbits"] = in.G.orbits().size();
  r["base_length"] = in.G.chain().base().size();
  if (in.built) {
    r["point_stabiliser_order"] = str(in.built->H.order());
    r["expected_degree"] = in.record->degree;
  }
  em.emit("order", in.desc, r);
  err << "degree " << in.G.degree() << ", order " << in.G.order() << '\n';
  return kExitOk;
}

int cmd_basesize(const Options &o, Emitter &em, std::ostream &err) {
  Input in = resolve(o);
  BaseSizeResult res = exact_base_size(in.G, search_budget(o), o.seed);
  Json r = to_json(res, in.domain ? &*in.domain : nullptr);
  int code = res.exact ? kExitOk : kExitBudget;
  if (in.record) {
    r["expected_b"] = in.record->expected_b;
    bool agrees = res.exact && res.lo == in.record->expected_b;
    r["agrees"] = agrees;
    if (res.exact && !agrees)
      code = kExitMismatch;
  }
  em.emit("basesize", with_seed(in.desc, o), r);
  if (res.exact)
    err << "b = " << res.lo << " (" << lower_kind_name(res.lo_kind) << ")\n";
  else
    err << res.lo << " <= b <= " << res.hi << " (budget exceeded)\n";
  return code;
}

int cmd_qbound(const Options &o, Emitter &em, std::ostream &err) {
  Input in = resolve(o);
  QReport q = q_bound(in.G, o.c, o.max_order, o.seed);
  Json desc = with_seed(in.desc, o);
  desc["c"] = o.c;
  em.emit("qbound", desc, to_json(q));
  err << "Q(G," << o.c << ") = " << q.total << " ~ " << q.total.get_d()
      << (q.exact ? "" : " (partial: lower bound only)")
      << (q.certifies() ? ", certifies b <= c" : "") << '\n';
  return kExitOk;
}

int cmd_prob(const Options &o, Emitter &em, std::ostream &err) {
  Input in = resolve(o);
  Json r;
  r["c"] = o.c;
  if (o.samples) {
    McEstimate m = mc_base_probability(in.G, o.c, o.samples, o.seed, o.threads);
    r["monte_carlo"] = to_json(m);
    err << "P ~ " << m.p_hat << " in [" << m.lo << ", " << m.hi << "]\n";
  }
  if (o.exact) {
    Rational p = exact_base_probability(in.G, o.c, search_budget(o), o.seed);
    r["exact"] = str(p);
    r["exact_approx"] = p.get_d();
    err << "P = " << p << '\n';
  }
  Json desc = with_seed(in.desc, o);
  desc["c"] = o.c;
  desc["samples"] = o.samples;
  em.emit("prob", desc, r);
  return kExitOk;
}

int cmd_certify(const Options &o, Emitter &em, std::ostream &err) {
  if (o.case_id.empty())
    throw UsageError("certify-norego needs --case (it uses the point stabiliser)");
  Input in = resolve(o);
  const BuiltCase &b = *in.built;
  Json desc = with_seed(in.desc, o);
  if (!o.replay.empty()) {
    std::ifstream f(o.replay);
    if (!f)
      throw UsageError("cannot open " + o.replay);
    Json doc = Json::parse(f);
    const Json &cj = doc.contains("result") ? doc["result"]["certificate"] : doc;
    bool ok = verify_no_regular_orbit(b.G, b.H, certificate_from_json(cj, b.G.degree()));
    desc["replay"] = o.replay;
    em.emit("certify-norego", desc, {{"replay_verified", ok}});
    err << (ok ? "certificate verified\n" : "certificate rejected\n");
    return ok ? kExitOk : kExitMismatch;
  }
  DoubleCosetOutcome d = no_regular_orbit_certificate(b.G, b.H, o.max_order, o.seed);
  Json r = to_json(d);
  if (d.certificate)
    r["verified"] = verify_no_regular_orbit(b.G, b.H, *d.certificate);
  em.emit("certify-norego", desc, r);
  if (d.certificate) {
    err << "no regular suborbit: certificate with " << d.certificate->reps.size()
        << " double cosets\n";
    return kExitOk;
  }
  if (d.regular_rep) {
    err << "a regular suborbit exists, so b = 2 is possible and no certificate exists\n";
    return kExitMismatch;
  }
  err << "decomposition incomplete within the element budget\n";
  return kExitBudget;
}

int cmd_prodact(const Options &o, Emitter &em, std::ostream &err) {
  Input in = resolve(o);
  PermGroup P = top_group(o.top);
  unsigned b_lk = o.b_lk;
  SearchBudget budget = search_budget(o);
  if (b_lk == 0) {
    BaseSizeResult r = exact_base_size(in.G, budget, o.seed);
    if (!r.exact)
      throw BudgetExceeded("base size of L not settled; pass --blk");
    b_lk = r.lo;
  }
  ProductVerdict v = product_verdict(in.G, P, o.c, b_lk, budget, o.seed);
  Json desc = with_seed(in.desc, o);
  desc["top"] = o.top;
  desc["c"] = o.c;
  desc["b_LK"] = b_lk;
  em.emit("prodact", desc, to_json(v));
  err << "d(P) = " << v.dP << ", reg(L," << o.c << ") = " << v.reg << ": b "
      << (v.at_most_c ? "<= " : "> ") << o.c << "; wreath bound " << v.bound << '\n';
  return kExitOk;
}

int cmd_table(const Options &o, Emitter &em, std::ostream &err) {
  auto rows = suite_cases(o.suite);
  if (rows.empty())
    throw UsageError("unknown suite " + o.suite);
  Json out = Json::array();
  Json timings = Json::object();
  bool mismatch = false, budget = false;
  std::size_t ran = 0, agreed = 0;
  for (const auto *c : rows) {
    Json row;
    row["id"] = c->id;
    row["expected_b"] = c->expected_b;
    bool run = c->status == CaseStatus::Supported ||
               (c->status == CaseStatus::Stretch && o.stretch);
    if (!run) {
      row["status"] = "skipped";
      row["reason"] = c->status == CaseStatus::Stretch ? "stretch row (use --stretch)" : c->gap;
      out.push_back(row);
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    BaseSizeResult r = exact_base_size(c->build().action, search_budget(o), o.seed);
    timings[c->id] = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    ++ran;
    row["lo"] = r.lo;
    row["hi"] = r.hi;
    row["exact"] = r.exact ? Json(r.lo) : Json(nullptr);
    if (!r.exact) {
      row["status"] = "budget";
      budget = true;
    } else if (r.lo == c->expected_b) {
      row["status"] = "match";
      ++agreed;
    } else {
      row["status"] = "mismatch";
      mismatch = true;
      err << "MISMATCH " << c->id << ": computed " << r.lo << ", expected "
          << c->expected_b << '\n';
    }
    out.push_back(row);
  }
  em.extra_meta["row_ms"] = timings;
  Json desc = {{"suite", o.suite}, {"seed", o.seed}, {"stretch", o.stretch}};
  em.emit("table", desc,
          {{"rows", out}, {"ran", ran}, {"matched", agreed}, {"skipped", rows.size() - ran}});
  err << agreed << "/" << ran << " rows match";
  if (rows.size() > ran)
    err << ", " << rows.size() - ran << " skipped";
  err << '\n';
  return mismatch ? kExitMismatch : budget ? kExitBudget : kExitOk;
}

int cmd_case(const Options &o, Emitter &em, std::ostream &out, std::ostream &err) {
  if (o.case_id.empty()) {
    Json reg = registry_json(o.suite);
    if (reg.empty())
      throw UsageError("unknown suite " + o.suite);
    em.emit("case", {{"suite", o.suite}}, {{"cases", reg}});
    err << reg.size() << " cases\n";
    return kExitOk;
  }
  const CaseRecord &c = find_case(o.case_id);
  if (o.dump_domain) {
    BuiltCase b = build_case(o.case_id);
    if (!b.domain)
      throw UsageError(o.case_id + " has no labelled domain");
    out << b.domain->dump();
    return kExitOk;
  }
  em.emit("case", {{"case", o.case_id}}, to_json(c));
  err << c.id << ": " << c.group << " on cosets of " << c.subgroup << ", b = "
      << c.expected_b << " [" << status_name(c.status) << "]\n";
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  Options o;
  CLI::App app{"Base sizes of finite permutation groups", "basecraft"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto input = [&o](CLI::App *s) {
    s->add_option("--case", o.case_id, "catalog case id, e.g. as1/S8/S4wrS2");
    s->add_option("--gens", o.gens, "generator file in cycle notation");
    s->add_option("--group", o.group, "classical group family-n-q, e.g. SU-5-2");
    s->add_option("--action", o.action,
                  "with --group: points | iso-points | vectors | "
                  "subspaces:m=K[,iso][,nondeg]; with --gens: natural | pairs | "
                  "subsets:k=K");
    s->add_option("--max-degree", o.max_degree, "largest action degree built")
        ->capture_default_str();
  };
  auto common = [&o](CLI::App *s, bool randomized) {
    auto *seed = s->add_option("--seed", o.seed, "random seed");
    if (randomized)
      seed->required();
    s->add_option("--threads", o.threads, "worker threads; results do not depend on it")
        ->capture_default_str();
    s->add_option("--max-order", o.max_order,
                  "largest group whose elements are enumerated")
        ->capture_default_str();
    s->add_option("--trials", o.trials, "random base trials per size")
        ->capture_default_str();
    s->add_option("--max-nodes", o.max_nodes, "search tree node budget")
        ->capture_default_str();
    s->add_flag("--no-meta", o.no_meta, "omit timing and version metadata");
  };

  auto *order = app.add_subcommand("order", "degree and order of a group");
  input(order);
  common(order, false);

  auto *basesize = app.add_subcommand("basesize", "exact base size with certificate");
  input(basesize);
  common(basesize, true);

  auto *qbound = app.add_subcommand("qbound", "fixed point ratio sum Q(G,c)");
  input(qbound);
  common(qbound, true);
  qbound->add_option("-c", o.c, "tuple size")->required()->check(CLI::Range(1u, 64u));

  auto *prob = app.add_subcommand("prob", "probability that a random c-tuple is a base");
  input(prob);
  common(prob, true);
  prob->add_option("-c", o.c, "tuple size")->required()->check(CLI::Range(1u, 64u));
  prob->add_option("--samples", o.samples, "Monte Carlo samples (0: none)")
      ->capture_default_str();
  prob->add_flag("--exact", o.exact, "also count base tuples exactly");

  auto *certify = app.add_subcommand(
      "certify-norego", "certify that the point stabiliser has no regular orbit");
  input(certify);
  common(certify, true);
  certify->add_option("--replay", o.replay, "verify a saved certificate report");

  auto *prodact = app.add_subcommand("prodact", "product action L wr P bounds");
  input(prodact);
  common(prodact, true);
  prodact->add_option("--top", o.top, "top group P: Cm, Sm, Am or a generator file")
      ->capture_default_str();
  prodact->add_option("-c", o.c, "candidate base size")->required()->check(
      CLI::Range(1u, 64u));
  prodact->add_option("--blk", o.b_lk, "b(L,K) when known (default: computed)");

  auto *table = app.add_subcommand("table", "regression rows against expected b");
  common(table, true);
  table->add_option("--suite", o.suite, "as1 | psl2 | as3 | prod | all")
      ->capture_default_str();
  table->add_flag("--stretch", o.stretch, "include long running rows");

  auto *cs = app.add_subcommand("case", "catalog records");
  cs->add_option("--case", o.case_id, "case id");
  cs->add_option("--suite", o.suite, "suite to list")->capture_default_str();
  cs->add_flag("--dump-domain", o.dump_domain, "print the point labels, one per line");
  cs->add_flag("--no-meta", o.no_meta, "omit timing and version metadata");

  std::vector<const char *> argv{"basecraft"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Emitter em{o, out};
  try {
    if (*order)
      return cmd_order(o, em, err);
    if (*basesize)
      return cmd_basesize(o, em, err);
    if (*qbound)
      return cmd_qbound(o, em, err);
    if (*prob)
      return cmd_prob(o, em, err);
    if (*certify)
      return cmd_certify(o, em, err);
    if (*prodact)
      return cmd_prodact(o, em, err);
    if (*table)
      return cmd_table(o, em, err);
    return cmd_case(o, em, out, err);
  } catch (const BudgetExceeded &e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

} // namespace basecraft
