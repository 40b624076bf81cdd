#include "convexgeo/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "convexgeo/bases.hpp"
#include "convexgeo/basis_io.hpp"
#include "convexgeo/canonical.hpp"
#include "convexgeo/generators.hpp"
#include "convexgeo/optimize.hpp"

namespace convexgeo::cli {
namespace {

struct Options {
  std::vector<std::string> files;
  std::string set;
  std::string strategy = "auto";
  std::string property = "convex-geometry";
  std::string points;
  std::string poset;
  std::string meets;
  std::string kind = "order-convex";
  std::size_t n = 2;
  std::size_t cap = kDefaultCap;
};

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::string braced(const GroundSet& ground, ElementSet s) {
  return "{" + ground.format(s) + "}";
}

class Session {
 public:
  Session(const Options& opts, std::ostream& out, std::ostream& err)
      : opts_(opts), out_(out), err_(err) {}

  ParsedBasis load(std::size_t which = 0) {
    if (opts_.files.size() <= which) throw InputError("missing basis file argument");
    ParsedBasis parsed = read_basis_file(opts_.files[which]);
    for (const auto& w : parsed.warnings) err_ << "warning: " << opts_.files[which] << ": " << w << '\n';
    return parsed;
  }

  ClosureSystem system() { return load().system(opts_.cap); }

  void print_report(const GroundSet& ground, const BasisReport& report) {
    out_ << format_report(ground, report);
  }

  void closure() {
    const ClosureSystem sys = system();
    std::vector<std::string> names;
    std::stringstream in(opts_.set);
    for (std::string tok; std::getline(in, tok, ',');) {
      const auto first = tok.find_first_not_of(' ');
      if (first == std::string::npos) continue;
      names.push_back(tok.substr(first, tok.find_last_not_of(' ') - first + 1));
    }
    out_ << sys.ground().format(sys.closure(sys.ground().set_of(names))) << '\n';
  }

  void closed_sets() {
    const ClosureSystem sys = system();
    for (ElementSet s : sys.closed_sets()) out_ << braced(sys.ground(), s) << '\n';
    out_ << "# count=" << sys.closed_sets().size() << '\n';
  }

  void verify() {
    const ClosureSystem sys = system();
    const auto& g = sys.ground();
    const std::string& p = opts_.property;
    if (p == "convex-geometry") {
      const AxiomReport r = verify_axioms(sys);
      out_ << "zero_closed: " << bool_text(r.zero_closed) << '\n'
           << "standard: " << bool_text(r.standard) << '\n'
           << "anti_exchange: " << bool_text(r.anti_exchange) << '\n'
           << "convex_geometry: " << bool_text(r.is_convex_geometry) << '\n';
      if (r.witness) {
        out_ << "witness: X=" << braced(g, r.witness->closed) << " x=" << g.name(r.witness->x)
             << " y=" << g.name(r.witness->y) << '\n';
      }
    } else if (p == "standard") {
      out_ << "standard: " << bool_text(sys.is_standard()) << '\n';
    } else if (p == "d-cycles") {
      const DCycleReport r = has_d_cycles(sys);
      out_ << "d-cycles: " << bool_text(r.has_cycle) << '\n';
      if (r.has_cycle) {
        out_ << "cycle:";
        for (std::size_t i = 0; i < r.cycle.size(); ++i) {
          out_ << (i ? " D " : " ") << g.name(r.cycle[i]);
        }
        out_ << '\n';
      }
    } else if (p == "carousel") {
      const CarouselResult r = carousel_check(sys, opts_.n);
      out_ << "carousel(n=" << opts_.n << "): " << bool_text(r.holds) << '\n';
      if (r.counterexample) {
        out_ << "witness: X=" << braced(g, r.counterexample->set)
             << " x=" << g.name(r.counterexample->x) << " y=" << g.name(r.counterexample->y)
             << '\n';
      }
    } else if (p == "cq") {
      const CqReport r = cq_check(sys.implications(), sys.size());
      out_ << "cq: " << bool_text(r.holds) << '\n';
      for (ElementSet c : r.components) out_ << "component: " << braced(g, c) << '\n';
      if (r.witness) {
        out_ << "witness: "
             << format_implication(g, sys.implications()[r.witness->implication])
             << " component " << braced(g, r.witness->component) << '\n';
      }
    } else {
      throw InputError("unknown property '" + p + "'");
    }
  }

  void analyze() {
    const ClosureSystem sys = system();
    const auto& g = sys.ground();
    const AxiomReport axioms = verify_axioms(sys);
    out_ << "# convex_geometry: " << bool_text(axioms.is_convex_geometry)
         << " standard: " << bool_text(axioms.standard) << '\n';
    const auto params = optimum_parameters(sys);
    const auto records = critical_sets(sys);
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& rec = records[i];
      out_ << "# critical " << braced(g, rec.critical) << " essential " << braced(g, rec.essential)
           << " k=" << rec.k;
      if (params[i].b) out_ << " b=" << *params[i].b;
      out_ << " generators:";
      for (ElementSet u : rec.minimal_generators) out_ << ' ' << braced(g, u);
      out_ << '\n';
    }
    out_ << "# optimum lower bound: " << optimum_lower_bound(params) << '\n';
    print_report(g, canonical_basis(sys));
  }

  void dbasis() {
    const ClosureSystem sys = system();
    const DBasisResult r = d_basis(sys);
    print_report(sys.ground(), r.basis);
    for (const auto& [b, a] : r.relation.pairs) {
      out_ << "# D: " << sys.ground().name(b) << " D " << sys.ground().name(a) << '\n';
    }
  }

  void optimize() {
    std::optional<Strategy> chosen;
    if (opts_.strategy != "auto") {
      chosen = parse_strategy(opts_.strategy);
      if (!chosen || *chosen == Strategy::k_basis) {
        throw InputError("unknown strategy '" + opts_.strategy + "'");
      }
    } else if (!opts_.poset.empty()) {
      chosen = Strategy::order_convex;
    }
    OptimizationOutcome outcome;
    GroundSet ground;
    if (chosen == Strategy::order_convex) {
      if (opts_.poset.empty()) throw InputError("order-convex strategy needs --poset");
      const Poset poset = parse_poset(read_text_file(opts_.poset));
      outcome = optimize_order_convex(poset);
      ground = poset.ground();
    } else {
      const ClosureSystem sys = system();
      ground = sys.ground();
      if (!chosen) {
        outcome = optimize_auto(sys);
      } else if (*chosen == Strategy::carousel) {
        outcome = optimize_carousel(sys);
      } else if (*chosen == Strategy::d_geometry) {
        outcome = optimize_d_geometry(sys);
      } else {
        outcome = brute_force_optimum(sys);
      }
    }
    for (const auto& w : outcome.warnings) err_ << "warning: " << w << '\n';
    out_ << "# strategy: " << to_string(outcome.strategy) << '\n';
    for (const auto& c : outcome.certificate) out_ << "# certificate: " << c << '\n';
    print_report(ground, outcome.basis);
  }

  void equiv() {
    if (opts_.files.size() != 2) throw InputError("equiv needs exactly two basis files");
    const ParsedBasis first = load(0);
    const ParsedBasis second = load(1);
    std::vector<std::string> names = first.ground.names();
    names.insert(names.end(), second.ground.names().begin(), second.ground.names().end());
    const GroundSet ground(names);
    auto remap = [&](const ParsedBasis& p) {
      Basis out;
      for (const auto& imp : p.implications) {
        Implication m;
        for (std::size_t i : imp.premise) m.premise.insert(ground.index_of(p.ground.name(i)));
        for (std::size_t i : imp.conclusion) m.conclusion.insert(ground.index_of(p.ground.name(i)));
        out.push_back(m);
      }
      return out;
    };
    out_ << (bases_equivalent(remap(first), remap(second)) ? "equivalent" : "not equivalent")
         << '\n';
  }

  void stats() {
    const ParsedBasis parsed = load();
    out_ << format_stats_line(basis_stats(parsed.implications)) << '\n';
  }

  void generate() {
    const int sources = !opts_.points.empty() + !opts_.poset.empty() + !opts_.meets.empty();
    if (sources != 1) throw InputError("generate needs exactly one of --points, --poset, --meets");
    ClosureSystem sys;
    if (!opts_.points.empty()) {
      sys = affine_2d(parse_points(read_text_file(opts_.points)), std::min(opts_.cap, kAffineCap));
    } else if (!opts_.poset.empty()) {
      const Poset poset = parse_poset(read_text_file(opts_.poset));
      if (opts_.kind == "order-convex") {
        sys = order_convex_basis(poset);
      } else if (opts_.kind == "suborder") {
        sys = suborder_basis(poset);
      } else {
        throw InputError("unknown poset kind '" + opts_.kind + "'");
      }
    } else {
      sys = subsemilattice_basis(parse_meet_table(read_text_file(opts_.meets)));
    }
    print_report(sys.ground(), basis_stats(sys.implications(), Provenance::canonical));
  }

  void basis_command(const std::string& verb) {
    const ClosureSystem sys = system();
    if (verb == "canonical") {
      print_report(sys.ground(), canonical_basis(sys));
    } else if (verb == "kbasis") {
      print_report(sys.ground(), k_basis(sys));
    } else {
      print_report(sys.ground(), sigma_foe(sys));
    }
  }

 private:
  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Implicational bases of finite closure systems and convex geometries",
               "convexgeo"};
  app.require_subcommand(1, 1);
  Options opts;

  auto add_files = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("files", opts.files, what)->check(CLI::ExistingFile);
    sub->add_option("--cap", opts.cap, "largest ground set for exponential enumerations")
        ->check(CLI::Range(std::size_t{1}, kMaxElements));
  };

  struct Verb {
    const char* name;
    const char* help;
  };
  const Verb verbs[] = {
      {"closure", "closure of the --set literal"},
      {"closed-sets", "enumerate the closed sets"},
      {"verify", "check a structural property"},
      {"canonical", "canonical (Duquenne-Guigues) basis"},
      {"analyze", "critical sets, optimum parameters and canonical basis"},
      {"kbasis", "K-basis"},
      {"dbasis", "D-basis and the D-relation"},
      {"foe", "FOE basis of a convex geometry without D-cycles"},
      {"optimize", "optimum basis"},
      {"equiv", "compare two bases"},
      {"stats", "size metrics of a basis"},
      {"generate", "build a closure system from points, a poset or a meet table"},
  };
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    add_files(sub, "basis file(s)");
    const std::string name = v.name;
    if (name == "closure") {
      sub->add_option("--set", opts.set, "comma-separated elements")->required();
    } else if (name == "verify") {
      sub->add_option("--property", opts.property, "property to check")
          ->check(CLI::IsMember({"convex-geometry", "standard", "d-cycles", "carousel", "cq"}));
      sub->add_option("--n", opts.n, "Carousel parameter")->check(CLI::PositiveNumber);
    } else if (name == "optimize") {
      sub->add_option("--strategy", opts.strategy, "auto|carousel|d-geometry|order-convex|brute")
          ->check(CLI::IsMember({"auto", "carousel", "d-geometry", "order-convex", "brute"}));
      sub->add_option("--poset", opts.poset, "poset file for order-convex")->check(CLI::ExistingFile);
    } else if (name == "generate") {
      sub->add_option("--points", opts.points, "planar points file")->check(CLI::ExistingFile);
      sub->add_option("--poset", opts.poset, "poset file")->check(CLI::ExistingFile);
      sub->add_option("--meets", opts.meets, "meet table file")->check(CLI::ExistingFile);
      sub->add_option("--kind", opts.kind, "order-convex|suborder (with --poset)")
          ->check(CLI::IsMember({"order-convex", "suborder"}));
    }
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kInputError;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Session session(opts, out, err);
  try {
    if (verb == "closure") session.closure();
    else if (verb == "closed-sets") session.closed_sets();
    else if (verb == "verify") session.verify();
    else if (verb == "analyze") session.analyze();
    else if (verb == "dbasis") session.dbasis();
    else if (verb == "optimize") session.optimize();
    else if (verb == "equiv") session.equiv();
    else if (verb == "stats") session.stats();
    else if (verb == "generate") session.generate();
    else session.basis_command(verb);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kSuccess;
}

}  // namespace convexgeo::cli
