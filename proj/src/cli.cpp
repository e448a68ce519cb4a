#include "hyperlaw/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include <CLI11.hpp>

#include "hyperlaw/enumeration.hpp"
#include "hyperlaw/hunt.hpp"
#include "hyperlaw/io.hpp"
#include "hyperlaw/report.hpp"

namespace hyperlaw {

namespace {

  struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  void print_json(std::ostream& out, Json const& j) { out << j.dump(2) << '\n'; }

  std::size_t default_jobs() {
    char const* env = std::getenv("HYPERLAW_JOBS");
    if (env == nullptr || *env == '\0') {
      return 1;
    }
    char*         end = nullptr;
    unsigned long v   = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0) {
      throw Usage(std::string("HYPERLAW_JOBS must be a positive integer, got '")
                  + env + "'");
    }
    return v;
  }

  TheoremId theorem_arg(std::string const& name) {
    auto id = parse_theorem(name);
    if (!id) {
      throw Usage("unknown theorem '" + name + "'");
    }
    return *id;
  }

  struct Globals {
    bool json                   = false;
    bool fail_on_counterexample = false;
  };

  int finish(Globals const& g, bool counterexample) {
    return g.fail_on_counterexample && counterexample ? 1 : 0;
  }

  // --- check -----------------------------------------------------------

  struct CheckArgs {
    std::string file;
    bool        theorems       = false;
    bool        strict_t9      = false;
    bool        membership_t14 = false;
  };

  int cmd_check(CheckArgs const& a, Globals const& g, std::ostream& out) {
    HyperTable    t = load_table(a.file);
    ReportOptions opts;
    opts.theorems                       = a.theorems;
    opts.theorem_options.strict_t9      = a.strict_t9;
    opts.theorem_options.membership_t14 = a.membership_t14;
    auto report = build_report(t, opts);
    if (g.json) {
      print_json(out, to_json(report));
    } else {
      out << to_text(report);
    }
    bool cx = false;
    if (report.theorems) {
      cx = std::any_of(report.theorems->begin(), report.theorems->end(),
                       [](auto const& v) {
                         return v.outcome == Outcome::Counterexample;
                       });
    }
    return finish(g, cx);
  }

  // --- ideals ----------------------------------------------------------

  struct IdealsArgs {
    std::string file;
    std::string kind;
    bool        all_kinds = false;
    bool        minimal   = false;
  };

  int cmd_ideals(IdealsArgs const& a, Globals const& g, std::ostream& out) {
    std::vector<IdealKind> kinds;
    if (a.all_kinds) {
      kinds.assign(kAllIdealKinds.begin(), kAllIdealKinds.end());
    } else if (!a.kind.empty()) {
      auto k = parse_ideal_kind(a.kind);
      if (!k) {
        throw Usage("unknown hyperideal kind '" + a.kind + "'");
      }
      kinds.push_back(*k);
    } else {
      throw Usage("ideals needs --kind K or --all-kinds");
    }
    HyperTable t = load_table(a.file);
    Json       doc;
    for (IdealKind k : kinds) {
      auto sets = a.minimal ? minimal_ideals(t, k) : enumerate_ideals(t, k);
      if (g.json) {
        Json list = Json::array();
        for (auto m : sets) {
          list.push_back(mask_json(t, m));
        }
        doc[std::string(ideal_kind_name(k))] = std::move(list);
      } else {
        out << ideal_kind_name(k) << " (" << sets.size() << "):";
        for (auto m : sets) {
          out << ' ' << format_mask(t, m);
        }
        out << '\n';
      }
    }
    if (g.json) {
      print_json(out, doc);
    }
    return 0;
  }

  // --- verify ----------------------------------------------------------

  struct VerifyArgs {
    std::string file;
    std::string theorem;
    bool        strict_t9      = false;
    bool        membership_t14 = false;
    bool        converse       = false;
  };

  int cmd_verify(VerifyArgs const& a, Globals const& g, std::ostream& out) {
    std::vector<TheoremId> ids;
    if (a.theorem == "all") {
      if (a.converse) {
        ids = {TheoremId::T10, TheoremId::T11};
      } else {
        ids.assign(all_theorems().begin(), all_theorems().end());
      }
    } else {
      ids.push_back(theorem_arg(a.theorem));
    }
    HyperTable     t = load_table(a.file);
    TheoremOptions opts{a.strict_t9, a.membership_t14};
    std::vector<TheoremVerdict> verdicts;
    for (TheoremId id : ids) {
      verdicts.push_back(a.converse ? check_converse(t, id)
                                    : run_theorem(t, id, opts));
    }
    bool cx = false;
    Json list = Json::array();
    for (auto const& v : verdicts) {
      cx = cx || v.outcome == Outcome::Counterexample;
      if (g.json) {
        list.push_back(verdict_json(v));
      } else {
        out << verdict_text(v) << '\n';
      }
    }
    if (g.json) {
      print_json(out, {{"verdicts", std::move(list)}});
    }
    return finish(g, cx);
  }

  // --- enumerate -------------------------------------------------------

  struct EnumerateArgs {
    std::size_t              order = 0;
    std::vector<std::string> filters;
    std::vector<std::string> laws;
    bool                     canonical  = false;
    bool                     count_only = false;
    std::size_t              jobs       = 0;
    std::size_t              sample     = 0;
    std::uint64_t            seed       = 0;
    std::uint64_t            budget     = 0;
  };

  int cmd_enumerate(EnumerateArgs const& a, Globals const& g,
                    std::ostream& out) {
    EnumerationQuery q;
    q.order = a.order;
    if (!a.laws.empty()) {
      q.laws.clear();
      for (auto const& name : a.laws) {
        if (name == "none") {
          continue;
        }
        auto law = parse_law(name);
        if (!law) {
          throw Usage("unknown law '" + name + "'");
        }
        q.laws.push_back(*law);
      }
    }
    for (auto const& name : a.filters) {
      auto f = parse_flag(name);
      if (!f) {
        throw Usage("unknown filter '" + name + "'");
      }
      q.flags.push_back(*f);
    }
    q.canonical_only = a.canonical;
    q.jobs           = a.jobs > 0 ? a.jobs : default_jobs();
    if (a.sample > 0) {
      q.mode         = EnumerationMode::Sample;
      q.sample_count = a.sample;
      q.seed         = a.seed;
      if (a.budget > 0) {
        q.sample_node_budget = a.budget;
      }
    }
    std::size_t index   = 0;
    auto        summary = enumerate(q, [&](HyperTable const& t) {
      if (a.count_only) {
        return;
      }
      if (g.json) {
        out << table_json(t).dump() << '\n';
      } else {
        out << (index ? "\n" : "") << to_compact(t);
      }
      ++index;
    });
    if (g.json) {
      Json s = {{"count", summary.emitted},
                {"lawTables", summary.law_tables},
                {"nodes", summary.nodes},
                {"failedSamples", summary.failed_samples}};
      out << (a.count_only ? s : Json{{"summary", s}}).dump() << '\n';
    } else if (a.count_only) {
      out << summary.emitted << '\n';
    }
    return 0;
  }

  // --- hunt ------------------------------------------------------------

  struct HuntArgs {
    std::string   theorem;
    std::size_t   order  = 0;
    std::uint64_t budget = 100'000;
    std::uint64_t seed   = 0;
  };

  int cmd_hunt(HuntArgs const& a, Globals const& g, std::ostream& out) {
    HuntQuery q;
    if (a.theorem == "T10-converse") {
      q.id = TheoremId::T10;
    } else if (a.theorem == "T11-converse") {
      q.id = TheoremId::T11;
    } else {
      throw Usage("hunt supports T10-converse and T11-converse");
    }
    q.order  = a.order;
    q.budget = a.budget;
    q.seed   = a.seed;
    auto r   = hunt_converse(q);
    if (g.json) {
      print_json(out, {{"theorem", a.theorem},
                       {"found", r.found.has_value()},
                       {"nodes", r.nodes},
                       {"samples", r.samples},
                       {"distinct", r.distinct},
                       {"verdict", r.found ? verdict_json(*r.found)
                                           : Json(nullptr)}});
    } else if (r.found) {
      out << "found after " << r.distinct << " distinct tables, " << r.nodes
          << " nodes\n"
          << to_compact(r.found->certificate->table)
          << verdict_text(*r.found) << '\n';
    } else {
      out << "budget exhausted: " << r.nodes << " nodes, " << r.distinct
          << " distinct tables, no counterexample\n";
    }
    return finish(g, r.found.has_value());
  }

  // --- convert -------------------------------------------------------

  struct ConvertArgs {
    std::string file;
    std::string to = "json";
  };

  int cmd_convert(ConvertArgs const& a, std::ostream& out) {
    HyperTable t = load_table(a.file);
    out << (a.to == "json" ? to_document(t) : to_compact(t));
    return 0;
  }

  // --- gen -------------------------------------------------------------

  struct GenArgs {
    std::string family;
    std::size_t n = 0;
    std::size_t k = 0;
    std::string output;
  };

  int cmd_gen(GenArgs const& a, Globals const& g, std::ostream& out) {
    HyperTable t = a.family == "coset" ? gen_coset(a.n, a.k) : gen_union(a.n, a.k);
    std::string const text = g.json ? to_document(t) : to_compact(t);
    if (a.output.empty()) {
      out << text;
      return 0;
    }
    std::ofstream file(a.output, std::ios::binary);
    if (!(file << text)) {
      throw Usage("cannot write '" + a.output + "'");
    }
    return 0;
  }

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Verification and enumeration of finite LA-semihypergroups",
               "hyperlaw"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--fail-on-counterexample", g.fail_on_counterexample,
               "Exit 1 when a counterexample is reported");

  CheckArgs check;
  auto*     c = app.add_subcommand("check", "Classify a table");
  c->add_option("file", check.file, "Table file")->required();
  c->add_flag("--theorems", check.theorems, "Include theorem verdicts");
  c->add_flag("--strict-t9", check.strict_t9);
  c->add_flag("--membership-t14", check.membership_t14);

  IdealsArgs ideals;
  auto*      i = app.add_subcommand("ideals", "List hyperideals");
  i->add_option("file", ideals.file, "Table file")->required();
  i->add_option("--kind", ideals.kind, "Hyperideal kind");
  i->add_flag("--all-kinds", ideals.all_kinds);
  i->add_flag("--minimal", ideals.minimal, "Only minimal members");

  VerifyArgs verify;
  auto*      v = app.add_subcommand("verify", "Check theorems on a table");
  v->add_option("file", verify.file, "Table file")->required();
  v->add_option("--theorem", verify.theorem, "all or T1..T25c")->required();
  v->add_flag("--strict-t9", verify.strict_t9);
  v->add_flag("--membership-t14", verify.membership_t14);
  v->add_flag("--converse", verify.converse, "Check the converse (T10, T11)");

  EnumerateArgs enumerate_args;
  auto*         e = app.add_subcommand("enumerate", "Enumerate tables");
  e->add_option("--order", enumerate_args.order)->required();
  e->add_option("--filter", enumerate_args.filters,
                "left-identity, pure-left-identity, intra-regular, "
                "not-intra-regular");
  e->add_option("--law", enumerate_args.laws,
                "Required laws (default leftInvertive; 'none' for no law)");
  e->add_flag("--canonical", enumerate_args.canonical);
  e->add_flag("--count-only", enumerate_args.count_only);
  e->add_option("--jobs", enumerate_args.jobs);
  e->add_option("--sample", enumerate_args.sample, "Number of samples");
  e->add_option("--seed", enumerate_args.seed);
  e->add_option("--budget", enumerate_args.budget, "Nodes per sample");

  HuntArgs hunt;
  auto*    h = app.add_subcommand("hunt", "Search for converse counterexamples");
  h->add_option("--theorem", hunt.theorem)->required();
  h->add_option("--order", hunt.order)->required();
  h->add_option("--budget", hunt.budget, "Total search nodes");
  h->add_option("--seed", hunt.seed);

  GenArgs gen;
  auto*   gn = app.add_subcommand("gen", "Generate a modular family table");
  gn->add_option("family", gen.family)
      ->required()
      ->check(CLI::IsMember({"coset", "union"}));
  gn->add_option("--n", gen.n)->required();
  gn->add_option("--k", gen.k)->required();
  gn->add_option("-o", gen.output, "Output file");

  ConvertArgs convert;
  auto* cv = app.add_subcommand("convert", "Rewrite a table in another format");
  cv->add_option("file", convert.file, "Table file")->required();
  cv->add_option("--to", convert.to, "json or compact")
      ->check(CLI::IsMember({"json", "compact"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& ex) {
    int const code = app.exit(ex, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c->parsed()) {
      return cmd_check(check, g, out);
    }
    if (i->parsed()) {
      return cmd_ideals(ideals, g, out);
    }
    if (v->parsed()) {
      return cmd_verify(verify, g, out);
    }
    if (e->parsed()) {
      return cmd_enumerate(enumerate_args, g, out);
    }
    if (h->parsed()) {
      return cmd_hunt(hunt, g, out);
    }
    if (cv->parsed()) {
      return cmd_convert(convert, out);
    }
    return cmd_gen(gen, g, out);
  } catch (Usage const& ex) {
    err << "error: " << ex.what() << '\n';
  } catch (Error const& ex) {
    err << "error: " << error_code_name(ex.code()) << ": " << ex.what() << '\n';
  }
  return 2;
}

}  // namespace hyperlaw
