#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symfam/bounds.hpp"
#include "symfam/covers.hpp"
#include "symfam/errors.hpp"
#include "symfam/family_io.hpp"
#include "symfam/family_ops.hpp"
#include "symfam/geometry.hpp"
#include "symfam/numeric.hpp"
#include "symfam/oracle.hpp"
#include "symfam/permutation.hpp"
#include "symfam/report.hpp"
#include "symfam/runs.hpp"
#include "symfam/set_family.hpp"

namespace {

using namespace symfam;
using Clock = std::chrono::steady_clock;

struct CliState {
  bool json = false;
  std::string command_line;
  Clock::time_point start = Clock::now();
};

int worker_count_from_env() {
  const char* raw = std::getenv("SYMFAM_THREADS");
  if (raw == nullptr) return 1;
  const long parsed = std::strtol(raw, nullptr, 10);
  if (parsed < 1) return 1;
  if (parsed > 256) return 256;
  return static_cast<int>(parsed);
}

std::uint64_t as_budget(double raw) {
  if (raw < 1.0) throw std::invalid_argument("budget must be at least 1");
  if (raw > 1e18) return static_cast<std::uint64_t>(1e18);
  return static_cast<std::uint64_t>(raw);
}

std::string join_residues(const std::vector<int>& residues) {
  std::ostringstream out;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i > 0) out << ' ';
    out << residues[i];
  }
  return out.str();
}

void emit_report(const CliState& state, CommandReport report) {
  report.command = state.command_line;
  report.runtime_seconds =
      std::chrono::duration<double>(Clock::now() - state.start).count();
  std::cout << (state.json ? render_json(report) : render_human(report));
}

// Family-producing commands write the document to --out when given and to
// standard output otherwise.
void emit_family(const CliState& state, const SetFamily& family,
                 const std::optional<GroupWitness>& witness, const std::string& out_path,
                 ReportRecord summary) {
  if (out_path.empty()) {
    std::cout << family_to_text(family, witness);
    return;
  }
  save_family_file(out_path, family, witness);
  summary.add("written", out_path, Provenance::exact);
  CommandReport report;
  report.results.push_back(std::move(summary));
  emit_report(state, report);
}

ReportRecord family_summary(const std::string& name, const SetFamily& family) {
  ReportRecord rec;
  rec.name = name;
  rec.add("n", static_cast<long>(family.ground_size()), Provenance::exact);
  if (family.uniformity()) {
    rec.add("k", static_cast<long>(*family.uniformity()), Provenance::exact);
  } else {
    rec.add("k", std::string("null"), Provenance::exact);
  }
  rec.add("size", static_cast<long>(family.size()), Provenance::exact);
  return rec;
}

ReportRecord record_from_bound(const BoundReport& bound, Provenance value_tag) {
  ReportRecord rec;
  rec.name = bound.name;
  for (const auto& [key, value] : bound.inputs) {
    rec.add("input-" + key, value, Provenance::exact);
  }
  for (const auto& [key, value] : bound.free_constants) {
    rec.add("constant-" + key, value, Provenance::exact);
  }
  rec.add("value", bound.value, value_tag);
  if (bound.exact_value.has_value()) {
    rec.add("exact-value", *bound.exact_value, Provenance::exact);
  }
  for (const auto& [key, value] : bound.components) rec.add(key, value, value_tag);
  for (const auto& [key, value] : bound.exact_components) {
    rec.add(key, value, Provenance::exact);
  }
  return rec;
}

// Largest flat-family size among the algebraic constructions that land
// exactly on ground size n with member size k; formulas only, no spaces
// are built.
std::optional<mpz_class> best_geometric_size(int n, int k) {
  std::optional<mpz_class> best;
  const auto offer = [&best](const mpz_class& candidate) {
    if (!best.has_value() || candidate > *best) best = candidate;
  };
  for (int q = 2; q <= n; ++q) {
    bool prime_power = true;
    try {
      static_cast<void>(factor_prime_power(q));
    } catch (const std::exception&) {
      prime_power = false;
    }
    if (!prime_power) continue;
    for (int r = 1;; ++r) {
      // projective: points of PG(2r, q), members are the r-flats
      mpz_class points = (int_pow(mpz_class(q), static_cast<unsigned long>(2 * r + 1)) - 1) / (q - 1);
      if (points > n) break;
      mpz_class member = (int_pow(mpz_class(q), static_cast<unsigned long>(r + 1)) - 1) / (q - 1);
      if (points == n && member == k) offer(gaussian_binomial(2 * r + 1, r + 1, q));
    }
    for (int r = 1;; ++r) {
      // dual affine: hyperplanes of AG(2r, q), members indexed by (r-1)-flats
      mpz_class points = q * (int_pow(mpz_class(q), static_cast<unsigned long>(2 * r)) - 1) / (q - 1);
      if (points > n) break;
      mpz_class member = (int_pow(mpz_class(q), static_cast<unsigned long>(r + 1)) - 1) / (q - 1);
      if (points == n && member == k) {
        offer(int_pow(mpz_class(q), static_cast<unsigned long>(r + 1)) *
              gaussian_binomial(2 * r, r - 1, q));
      }
    }
  }
  return best;
}

void add_family_commands(CLI::App& app, CliState& state) {
  CLI::App* family = app.add_subcommand("family", "verify and build set families");
  family->require_subcommand(1);

  auto* verify = family->add_subcommand("verify", "check a family file");
  auto in_path = std::make_shared<std::string>();
  verify->add_option("--in", *in_path, "family file to verify")->required();
  verify->callback([&state, in_path] {
    const FamilyDocument doc = load_family_file(*in_path);
    ReportRecord rec = family_summary("family", doc.family);
    rec.add("intersecting", is_intersecting(doc.family), Provenance::exact);
    if (doc.witness.has_value()) {
      rec.add("symmetric", verify_symmetric_witness(doc.family, *doc.witness),
              Provenance::exact);
    } else {
      rec.add("witness", std::string("absent"), Provenance::exact);
    }
    CommandReport report;
    report.results.push_back(std::move(rec));
    emit_report(state, report);
  });

  auto* build = family->add_subcommand("build", "construct a family");
  build->require_subcommand(1);

  {
    auto* translates = build->add_subcommand("translates", "all cyclic translates of a subset");
    auto n = std::make_shared<int>(0);
    auto residues = std::make_shared<std::vector<int>>();
    auto out = std::make_shared<std::string>();
    translates->add_option("n", *n, "cyclic group order")->required();
    translates->add_option("--set", *residues, "residues of the base subset")
        ->required()
        ->delimiter(',');
    translates->add_option("--out", *out, "write the family file here");
    translates->callback([&state, n, residues, out] {
      const SubsetMask base = SubsetMask::from_residues(*n, *residues);
      const SetFamily result = translates_family(base);
      GroupWitness witness;
      witness.n = *n;
      witness.generators.push_back(Permutation::rotation(*n, 1));
      ReportRecord rec = family_summary("translates", result);
      rec.add("intersecting", is_intersecting(result), Provenance::exact);
      emit_family(state, result, witness, *out, std::move(rec));
    });
  }

  {
    auto* tensor = build->add_subcommand("tensor", "tensor product of two family files");
    auto left = std::make_shared<std::string>();
    auto right = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    tensor->add_option("--in", *left, "left factor family file")->required();
    tensor->add_option("--in2", *right, "right factor family file")->required();
    tensor->add_option("--out", *out, "write the family file here");
    tensor->callback([&state, left, right, out] {
      const FamilyDocument a = load_family_file(*left);
      const FamilyDocument b = load_family_file(*right);
      const SetFamily result = tensor_product(a.family, b.family);
      std::optional<GroupWitness> witness;
      if (a.witness.has_value() && b.witness.has_value()) {
        witness = tensor_witness(*a.witness, *b.witness);
      }
      ReportRecord rec = family_summary("tensor-product", result);
      rec.add("intersecting", is_intersecting(result), Provenance::exact);
      emit_family(state, result, witness, *out, std::move(rec));
    });
  }

  {
    auto* supersets = build->add_subcommand("supersets", "all l-supersets of family members");
    auto in_file = std::make_shared<std::string>();
    auto level = std::make_shared<int>(0);
    auto out = std::make_shared<std::string>();
    auto budget = std::make_shared<double>(1e8);
    supersets->add_option("--in", *in_file, "family file to extend")->required();
    supersets->add_option("--l", *level, "target member size")->required();
    supersets->add_option("--budget", *budget, "generated-volume budget");
    supersets->add_option("--out", *out, "write the family file here");
    supersets->callback([&state, in_file, level, out, budget] {
      const FamilyDocument doc = load_family_file(*in_file);
      const SetFamily result = superset_extension(doc.family, *level, as_budget(*budget));
      ReportRecord rec = family_summary("superset-extension", result);
      rec.add("intersecting", is_intersecting(result), Provenance::exact);
      emit_family(state, result, doc.witness, *out, std::move(rec));
    });
  }
}

void add_runs_commands(CLI::App& app, CliState& state) {
  CLI::App* runs = app.add_subcommand("runs", "run-dominant family counting and bounds");
  runs->require_subcommand(1);

  {
    auto* count = runs->add_subcommand("count", "exact size of the run-dominant family");
    auto n = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    auto budget = std::make_shared<double>(1e8);
    count->add_option("n", *n, "ground set size")->required();
    count->add_option("k", *k, "member size")->required();
    count->add_option("--budget", *budget, "enumeration budget");
    count->callback([&state, n, k, budget] {
      const std::uint64_t size =
          count_run_dominant_family(*n, *k, as_budget(*budget), worker_count_from_env());
      ReportRecord rec;
      rec.name = "run-dominant-count";
      rec.add("n", static_cast<long>(*n), Provenance::exact);
      rec.add("k", static_cast<long>(*k), Provenance::exact);
      rec.add("size", mpz_class(static_cast<unsigned long>(size)), Provenance::exact);
      rec.add("nonempty-by-threshold", run_family_nonempty(*n, *k), Provenance::exact);
      CommandReport report;
      report.results.push_back(std::move(rec));
      emit_report(state, report);
    });
  }

  {
    auto* build = runs->add_subcommand("build", "materialize the run-dominant family");
    auto n = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    auto budget = std::make_shared<double>(1e8);
    auto out = std::make_shared<std::string>();
    build->add_option("n", *n, "ground set size")->required();
    build->add_option("k", *k, "member size")->required();
    build->add_option("--budget", *budget, "enumeration budget");
    build->add_option("--out", *out, "write the family file here");
    build->callback([&state, n, k, budget, out] {
      const SetFamily result = build_run_dominant_family(*n, *k, as_budget(*budget));
      GroupWitness witness;
      witness.n = *n;
      witness.generators.push_back(Permutation::rotation(*n, 1));
      ReportRecord rec = family_summary("run-dominant", result);
      rec.add("intersecting", is_intersecting(result), Provenance::exact);
      emit_family(state, result, witness, *out, std::move(rec));
    });
  }

  {
    auto* bound = runs->add_subcommand("bound", "constructive lower bound for the family size");
    auto n = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    bound->add_option("n", *n, "ground set size")->required();
    bound->add_option("k", *k, "member size")->required();
    bound->callback([&state, n, k] {
      const RunLowerBoundChain chain = run_lower_bound_chain(*n, *k);
      ReportRecord rec;
      rec.name = "run-lower-bound";
      rec.add("n", static_cast<long>(*n), Provenance::exact);
      rec.add("k", static_cast<long>(*k), Provenance::exact);
      rec.add("applicable", chain.applicable, Provenance::exact);
      if (chain.applicable) {
        rec.add("block-length", static_cast<long>(chain.l0), Provenance::exact);
        rec.add("bound", chain.bound, Provenance::certified_bound);
        rec.add("scan-threshold", chain.scan_threshold, Provenance::exact);
        rec.add("exponent-factor", chain.exponent_factor, Provenance::certified_bound);
        rec.add("exponent-times-binomial", chain.exponent_times_binomial,
                Provenance::certified_bound);
      }
      CommandReport report;
      report.results.push_back(std::move(rec));
      emit_report(state, report);
    });
  }
}

void add_geom_commands(CLI::App& app, CliState& state) {
  CLI::App* geom = app.add_subcommand("geom", "flat families over finite geometries");
  geom->require_subcommand(1);

  {
    auto* pg = geom->add_subcommand("pg-flats", "r-flat family of a projective space");
    auto r = std::make_shared<int>(0);
    auto q = std::make_shared<int>(0);
    auto out = std::make_shared<std::string>();
    pg->add_option("r", *r, "flat dimension")->required();
    pg->add_option("q", *q, "field order")->required();
    pg->add_option("--out", *out, "write the family file here");
    pg->callback([&state, r, q, out] {
      const SetFamily result = pg_flat_family(*r, *q);
      const IncidenceSpace space(SpaceKind::projective, 2 * *r, *q);
      const GroupWitness witness = geometry_symmetry_witness(space);
      ReportRecord rec = family_summary("projective-flats", result);
      rec.add("intersecting", is_intersecting(result), Provenance::exact);
      emit_family(state, result, witness, *out, std::move(rec));
    });
  }

  {
    auto* da = geom->add_subcommand("da-flats", "dual flat family of an affine space");
    auto r = std::make_shared<int>(0);
    auto q = std::make_shared<int>(0);
    auto out = std::make_shared<std::string>();
    da->add_option("r", *r, "flat dimension parameter")->required();
    da->add_option("q", *q, "field order")->required();
    da->add_option("--out", *out, "write the family file here");
    da->callback([&state, r, q, out] {
      const SetFamily result = dual_affine_family(*r, *q);
      const IncidenceSpace space(SpaceKind::dual_affine, 2 * *r, *q);
      const GroupWitness witness = geometry_symmetry_witness(space);
      ReportRecord rec = family_summary("dual-affine-flats", result);
      rec.add("intersecting", is_intersecting(result), Provenance::exact);
      emit_family(state, result, witness, *out, std::move(rec));
    });
  }

  {
    auto* singer = geom->add_subcommand("singer", "cyclic difference set of a projective plane");
    auto q = std::make_shared<int>(0);
    singer->add_option("q", *q, "field order")->required();
    singer->callback([&state, q] {
      const SubsetMask set = singer_difference_set(*q);
      ReportRecord rec;
      rec.name = "singer-difference-set";
      rec.add("n", static_cast<long>(set.ground_size()), Provenance::exact);
      rec.add("size", static_cast<long>(set.count()), Provenance::exact);
      rec.add("residues", join_residues(set.residues()), Provenance::exact);
      rec.add("difference-cover", is_difference_cover(set.residues(), set.ground_size()),
              Provenance::exact);
      CommandReport report;
      report.results.push_back(std::move(rec));
      emit_report(state, report);
    });
  }

  {
    auto* maximal = geom->add_subcommand("maximal", "test maximality of an intersecting family");
    auto in_path = std::make_shared<std::string>();
    auto budget = std::make_shared<double>(1e8);
    maximal->add_option("--family", *in_path, "family file to test")->required();
    maximal->add_option("--budget", *budget, "candidate enumeration budget");
    maximal->callback([&state, in_path, budget] {
      const FamilyDocument doc = load_family_file(*in_path);
      const bool result =
          is_maximal_intersecting(doc.family, static_cast<long>(as_budget(*budget)));
      ReportRecord rec = family_summary("family", doc.family);
      rec.add("maximal", result, Provenance::exact);
      CommandReport report;
      report.results.push_back(std::move(rec));
      emit_report(state, report);
    });
  }
}

void add_cover_commands(CLI::App& app, CliState& state) {
  CLI::App* cover = app.add_subcommand("cover", "difference covers of cyclic groups");
  cover->require_subcommand(1);

  {
    auto* min = cover->add_subcommand("min", "minimum difference cover");
    auto n = std::make_shared<int>(0);
    auto budget = std::make_shared<double>(1e9);
    min->add_option("n", *n, "cyclic group order")->required();
    min->add_option("--budget", *budget, "search node budget");
    min->callback([&state, n, budget] {
      const CoverSearchResult result = min_difference_cover(*n, as_budget(*budget));
      ReportRecord rec;
      rec.name = "minimum-difference-cover";
      const Provenance tag =
          result.exhaustive ? Provenance::exact : Provenance::non_exhaustive;
      rec.add("n", static_cast<long>(result.n), Provenance::exact);
      rec.add("h", static_cast<long>(result.size), tag);
      rec.add("witness", join_residues(result.witness), Provenance::exact);
      rec.add("exhaustive", result.exhaustive, Provenance::exact);
      rec.add("nodes", mpz_class(static_cast<unsigned long>(result.nodes)), Provenance::exact);
      CommandReport report;
      report.results.push_back(std::move(rec));
      emit_report(state, report);
    });
  }

  {
    auto* verify = cover->add_subcommand("verify", "check a claimed difference cover");
    auto n = std::make_shared<int>(0);
    auto residues = std::make_shared<std::vector<int>>();
    verify->add_option("n", *n, "cyclic group order")->required();
    verify->add_option("--set", *residues, "residues of the candidate")
        ->required()
        ->delimiter(',');
    verify->callback([&state, n, residues] {
      ReportRecord rec;
      rec.name = "difference-cover-check";
      rec.add("n", static_cast<long>(*n), Provenance::exact);
      rec.add("set", join_residues(*residues), Provenance::exact);
      rec.add("covers", is_difference_cover(*residues, *n), Provenance::exact);
      CommandReport report;
      report.results.push_back(std::move(rec));
      emit_report(state, report);
    });
  }
}

void add_sidon_commands(CLI::App& app, CliState& state) {
  CLI::App* sidon = app.add_subcommand("sidon", "Sidon subsets of cyclic groups");
  sidon->require_subcommand(1);

  {
    auto* max = sidon->add_subcommand("max", "maximum Sidon subset");
    auto n = std::make_shared<int>(0);
    auto budget = std::make_shared<double>(1e9);
    max->add_option("n", *n, "cyclic group order")->required();
    max->add_option("--budget", *budget, "search node budget");
    max->callback([&state, n, budget] {
      const SidonSearchResult result = max_sidon_set(*n, as_budget(*budget));
      ReportRecord rec;
      rec.name = "maximum-sidon-set";
      const Provenance tag =
          result.exhaustive ? Provenance::exact : Provenance::non_exhaustive;
      rec.add("n", static_cast<long>(result.n), Provenance::exact);
      rec.add("size", static_cast<long>(result.size), tag);
      rec.add("witness", join_residues(result.witness), Provenance::exact);
      rec.add("exhaustive", result.exhaustive, Provenance::exact);
      rec.add("nodes", mpz_class(static_cast<unsigned long>(result.nodes)), Provenance::exact);
      CommandReport report;
      report.results.push_back(std::move(rec));
      emit_report(state, report);
    });
  }

  {
    auto* verify = sidon->add_subcommand("verify", "check the Sidon property");
    auto n = std::make_shared<int>(0);
    auto residues = std::make_shared<std::vector<int>>();
    verify->add_option("n", *n, "cyclic group order")->required();
    verify->add_option("--set", *residues, "residues of the candidate")
        ->required()
        ->delimiter(',');
    verify->callback([&state, n, residues] {
      ReportRecord rec;
      rec.name = "sidon-check";
      rec.add("n", static_cast<long>(*n), Provenance::exact);
      rec.add("set", join_residues(*residues), Provenance::exact);
      rec.add("sidon", is_sidon_set(*residues, *n), Provenance::exact);
      CommandReport report;
      report.results.push_back(std::move(rec));
      emit_report(state, report);
    });
  }
}

void add_gbounds_command(CLI::App& app, CliState& state) {
  auto* gb = app.add_subcommand("g-bounds", "bounds on the least nonempty member size");
  auto n = std::make_shared<int>(0);
  auto budget = std::make_shared<double>(1e9);
  gb->add_option("n", *n, "ground set size")->required();
  gb->add_option("--budget", *budget, "cover search budget");
  gb->callback([&state, n, budget] {
    const GBoundsReport result = g_bounds(*n, as_budget(*budget));
    ReportRecord rec;
    rec.name = "least-nonempty-size";
    rec.add("n", static_cast<long>(result.n), Provenance::exact);
    rec.add("lower", static_cast<long>(result.lower),
            result.exact ? Provenance::exact : Provenance::certified_bound);
    rec.add("lower-source", result.lower_provenance, Provenance::exact);
    rec.add("upper", static_cast<long>(result.upper),
            result.exact ? Provenance::exact : Provenance::certified_bound);
    rec.add("upper-source", result.upper_provenance, Provenance::exact);
    rec.add("exact", result.exact, Provenance::exact);
    for (const auto& [source, value] : result.upper_candidates) {
      rec.add("candidate-" + source, static_cast<long>(value), Provenance::certified_bound);
    }
    CommandReport report;
    report.results.push_back(std::move(rec));
    emit_report(state, report);
  });
}

void add_bounds_commands(CLI::App& app, CliState& state) {
  CLI::App* bounds = app.add_subcommand("bounds", "bound formula calculators");
  bounds->require_subcommand(1);

  {
    auto* main_cmd = bounds->add_subcommand("main", "upper bound for symmetric families");
    auto n = std::make_shared<long>(0);
    auto k = std::make_shared<long>(0);
    auto c = std::make_shared<double>(0.0);
    auto trace = std::make_shared<bool>(false);
    auto c0 = std::make_shared<double>(0.0);
    auto delta = std::make_shared<double>(0.0);
    main_cmd->add_option("n", *n, "ground set size")->required();
    main_cmd->add_option("k", *k, "member size")->required();
    main_cmd->add_option("--c", *c, "leading free constant")->required();
    auto* trace_flag =
        main_cmd->add_flag("--trace", *trace, "print the sharp-threshold derivation chain");
    main_cmd->add_option("--c0", *c0, "threshold-shift constant, required with --trace")
        ->needs(trace_flag);
    main_cmd->add_option("--delta", *delta, "density to refute, required with --trace")
        ->needs(trace_flag);
    main_cmd->callback([&state, n, k, c, trace, c0, delta] {
      CommandReport report;
      report.results.push_back(
          record_from_bound(thm_main_bound(*n, *k, *c), Provenance::certified_bound));
      if (*trace) {
        if (*c0 <= 0.0 || *delta <= 0.0) {
          throw std::invalid_argument("--trace needs positive --c0 and --delta");
        }
        report.results.push_back(
            record_from_bound(thm_main_trace(*n, *k, *c0, *delta), Provenance::certified_bound));
      }
      emit_report(state, report);
    });
  }

  {
    auto* fk = bounds->add_subcommand("fk", "sharp-threshold bias shift");
    auto p = std::make_shared<double>(0.0);
    auto eps = std::make_shared<double>(0.0);
    auto n = std::make_shared<long>(0);
    auto c0 = std::make_shared<double>(0.0);
    fk->add_option("p", *p, "starting bias")->required();
    fk->add_option("eps", *eps, "measure floor")->required();
    fk->add_option("n", *n, "ground set size")->required();
    fk->add_option("--c0", *c0, "shift constant")->required();
    fk->callback([&state, p, eps, n, c0] {
      const double value = fk_threshold_q(*p, *eps, *c0, *n);
      ReportRecord rec;
      rec.name = "sharp-threshold-bias";
      rec.add("input-p", *p, Provenance::exact);
      rec.add("input-eps", *eps, Provenance::exact);
      rec.add("input-n", *n, Provenance::exact);
      rec.add("constant-c0", *c0, Provenance::exact);
      rec.add("value", value, Provenance::certified_bound);
      CommandReport report;
      report.results.push_back(std::move(rec));
      emit_report(state, report);
    });
  }

  {
    auto* regime = bounds->add_subcommand("regime", "decay-regime ratio");
    auto n = std::make_shared<long>(0);
    auto k = std::make_shared<long>(0);
    auto delta = std::make_shared<double>(1.0);
    regime->add_option("n", *n, "ground set size")->required();
    regime->add_option("k", *k, "member size")->required();
    regime->add_option("--delta", *delta, "decay constant for the companion bound");
    regime->callback([&state, n, k, delta] {
      CommandReport report;
      report.results.push_back(
          record_from_bound(regime_ratio(*n, *k, *delta), Provenance::exact));
      emit_report(state, report);
    });
  }
}

void add_oracle_commands(CLI::App& app, CliState& state) {
  CLI::App* oracle = app.add_subcommand("oracle", "exact cyclic-symmetric maxima");
  oracle->require_subcommand(1);

  {
    auto* sc = oracle->add_subcommand("s-cyclic", "largest rotation-invariant intersecting family");
    auto n = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    auto witness_path = std::make_shared<std::string>();
    auto budget = std::make_shared<double>(1e8);
    auto node_budget = std::make_shared<double>(1e8);
    sc->add_option("n", *n, "cyclic group order")->required();
    sc->add_option("k", *k, "member size")->required();
    sc->add_option("--witness", *witness_path, "write the optimal family here");
    sc->add_option("--budget", *budget, "layer enumeration budget");
    sc->add_option("--node-budget", *node_budget, "clique search node budget");
    sc->callback([&state, n, k, witness_path, budget, node_budget] {
      const OracleResult result = s_cyclic(*n, *k, static_cast<long>(as_budget(*budget)),
                                           as_budget(*node_budget));
      ReportRecord rec;
      rec.name = "s-cyclic";
      const Provenance tag =
          result.exhaustive ? Provenance::exact : Provenance::non_exhaustive;
      rec.add("n", static_cast<long>(result.n), Provenance::exact);
      rec.add("k", static_cast<long>(result.k), Provenance::exact);
      rec.add("value", result.value, tag);
      rec.add("exact_flag", result.exact_for_all_symmetric, Provenance::exact);
      rec.add("exhaustive", result.exhaustive, Provenance::exact);
      if (result.witness.has_value()) {
        rec.add("witness-size", static_cast<long>(result.witness->size()), Provenance::exact);
        if (!witness_path->empty()) {
          GroupWitness rotation;
          rotation.n = *n;
          rotation.generators.push_back(Permutation::rotation(*n, 1));
          save_family_file(*witness_path, *result.witness, rotation);
          rec.add("witness-file", *witness_path, Provenance::exact);
        }
      }
      CommandReport report;
      report.results.push_back(std::move(rec));
      emit_report(state, report);
    });
  }

  {
    auto* table = oracle->add_subcommand("table", "CSV table of s-cyclic values");
    auto nmax = std::make_shared<int>(0);
    auto budget = std::make_shared<double>(1e8);
    table->add_option("nmax", *nmax, "largest ground set size")->required();
    table->add_option("--budget", *budget, "per-cell enumeration budget");
    table->callback([nmax, budget] {
      CsvTable csv;
      csv.header = {"n", "k", "s_cyclic", "exact_flag"};
      for (int n = 1; n <= *nmax; ++n) {
        for (int k = 1; k <= n; ++k) {
          std::vector<std::string> row{std::to_string(n), std::to_string(k), "", ""};
          try {
            const OracleResult cell = s_cyclic(n, k, static_cast<long>(as_budget(*budget)),
                                               as_budget(*budget));
            row[2] = cell.value.get_str();
            row[3] = cell.exact_for_all_symmetric ? "true" : "false";
          } catch (const budget_error&) {
            row[2] = "budget-exceeded";
            row[3] = "non-exhaustive";
          }
          csv.rows.push_back(std::move(row));
        }
      }
      std::cout << render_csv(csv);
    });
  }
}

void add_compare_command(CLI::App& app) {
  auto* compare = app.add_subcommand("compare", "cross-construction comparison table");
  auto nmin = std::make_shared<int>(0);
  auto nmax = std::make_shared<int>(0);
  auto kmin = std::make_shared<int>(2);
  auto kmax = std::make_shared<int>(1 << 10);
  auto c = std::make_shared<double>(0.0);
  auto budget = std::make_shared<double>(1e8);
  compare->add_option("nmin", *nmin, "smallest ground set size")->required();
  compare->add_option("nmax", *nmax, "largest ground set size")->required();
  compare->add_option("--kmin", *kmin, "smallest member size");
  compare->add_option("--kmax", *kmax, "largest member size");
  compare->add_option("--c", *c, "free constant for the upper bound column")->required();
  compare->add_option("--budget", *budget, "per-cell enumeration budget");
  compare->callback([nmin, nmax, kmin, kmax, c, budget] {
    if (*nmin < 1 || *nmax < *nmin) throw std::invalid_argument("need 1 <= nmin <= nmax");
    CsvTable csv;
    csv.header = {"n",         "k",        "run_family", "run_tag",  "s_cyclic",
                  "cyclic_tag", "geometric", "geom_tag",  "main_bound", "bound_tag"};
    for (int n = *nmin; n <= *nmax; ++n) {
      for (int k = std::max(1, *kmin); k <= std::min(n, *kmax); ++k) {
        std::vector<std::string> row(10, "-");
        row[0] = std::to_string(n);
        row[1] = std::to_string(k);
        try {
          const std::uint64_t count =
              count_run_dominant_family(n, k, as_budget(*budget), worker_count_from_env());
          row[2] = std::to_string(count);
          row[3] = "exact";
        } catch (const budget_error&) {
          row[2] = "budget-exceeded";
          row[3] = "non-exhaustive";
        }
        try {
          const OracleResult cell =
              s_cyclic(n, k, static_cast<long>(as_budget(*budget)), as_budget(*budget));
          row[4] = cell.value.get_str();
          row[5] = cell.exhaustive ? "exact" : "non-exhaustive";
        } catch (const budget_error&) {
          row[4] = "budget-exceeded";
          row[5] = "non-exhaustive";
        }
        if (const auto geometric = best_geometric_size(n, k); geometric.has_value()) {
          row[6] = geometric->get_str();
          row[7] = "exact";
        }
        if (k >= 2 && 2 * k <= n) {
          const BoundReport bound = thm_main_bound(n, k, *c);
          row[8] = format_double(bound.value);
          row[9] = "certified-bound";
        }
        csv.rows.push_back(std::move(row));
      }
    }
    std::cout << render_csv(csv);
  });
}

}  // namespace

int main(int argc, char** argv) {
  std::ostringstream joined;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) joined << ' ';
    joined << argv[i];
  }
  CliState state;
  state.command_line = joined.str();

  CLI::App app{"workbench for symmetric intersecting set families"};
  app.require_subcommand(1);
  // Subcommands inherit fallthrough at creation, so --json may trail the
  // subcommand arguments.
  app.fallthrough();
  app.add_flag("--json", state.json, "emit reports as structured JSON");

  add_family_commands(app, state);
  add_runs_commands(app, state);
  add_geom_commands(app, state);
  add_cover_commands(app, state);
  add_sidon_commands(app, state);
  add_gbounds_command(app, state);
  add_bounds_commands(app, state);
  add_oracle_commands(app, state);
  add_compare_command(app);

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    std::cerr << err.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "invalid arguments: " << err.what() << "\n";
    return 2;
  } catch (const capacity_error& err) {
    std::cerr << "request exceeds a structural capacity: " << err.what() << "\n";
    return 2;
  } catch (const budget_error& err) {
    std::cerr << "budget exhausted: " << err.what() << "\n";
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 1;
  }
}
