// klrc: semisimplicity checks and module certificates for cyclotomic KLR
// algebras of type C.
//
// Exit codes: 0 success / semisimple / certified, 1 negative outcome
// (not semisimple, verification failure, uncertified witness), 2 error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "klrc/klrc.hpp"
#include "klrc/sweep.hpp"

namespace {

using klrc::io::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw std::invalid_argument("malformed integer '" + s + "'");
  return v;
}

/// "2,3,4" or "2-6" or a mix such as "2,4-6".
std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split(s, ',')) {
    auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(parse_int(item));
    } else {
      const int a = parse_int(item.substr(0, dash)), b = parse_int(item.substr(dash + 1));
      if (b < a) throw std::invalid_argument("empty range '" + item + "'");
      for (int v = a; v <= b; ++v) out.push_back(v);
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

void print_report(const klrc::VerificationReport& r) {
  std::cout << "relations checked: " << r.checked << "\n";
  std::cout << "violations: " << r.violations.size() << "\n";
  for (const auto& v : r.violations) std::cout << "  " << v.description << "\n";
}

template <class Field>
void print_basis(const klrc::Representation<Field>& rep) {
  std::map<std::size_t, klrc::ResidueSequence> weight_of;
  for (const auto& [i, e] : rep.idempotents)
    for (std::size_t k = 0; k < rep.dim; ++k)
      if (!Field::is_zero(e(k, k))) weight_of[k] = i;
  for (std::size_t k = 0; k < rep.dim; ++k) {
    std::cout << "  [" << k << "] ";
    if (k < rep.labels.size()) std::cout << rep.labels[k];
    if (weight_of.count(k)) std::cout << "   i = (" << klrc::to_string(weight_of[k]) << ")";
    std::cout << "\n";
  }
}

// ---------------------------------------------------------------- commands

struct CheckArgs {
  std::string ell, charge;
  int n = 0;
  bool json_out = false;
};

int cmd_check(const CheckArgs& a) {
  const auto rank = klrc::parse_rank(a.ell);
  const auto kappa = klrc::parse_multicharge(a.charge);
  if (a.n < 1) throw std::invalid_argument("n must be positive");
  const auto r = klrc::is_semisimple(kappa, a.n, rank);
  if (a.json_out) {
    std::cout << klrc::io::to_json(r, kappa, a.n, rank).dump() << "\n";
  } else {
    std::cout << "ell " << rank.to_string() << ", charge (" << kappa.to_string() << "), n " << a.n << "\n";
    std::cout << "SS1: " << (r.ss1 ? "holds" : "fails") << "\n";
    std::cout << "SS2: " << (r.ss2 ? "holds" : "fails") << "\n";
    for (const auto& w : r.witnesses) std::cout << "  " << w.describe() << "\n";
    std::cout << "verdict: " << (r.verdict ? "semisimple" : "not semisimple") << "\n";
    if (r.outside_theorem_range) std::cout << "note: n = 1 is decided directly from the presentation\n";
  }
  return r.verdict ? kOk : kNegative;
}

struct ModuleArgs {
  std::string ell, charge, shape, field = "q", out;
  bool json_out = false, allow_unverified = false, allow_nonsimple = false;
};

template <class Field>
int emit_module(const klrc::Representation<Field>& rep, const klrc::VerificationReport& report, const ModuleArgs& a, json extra) {
  if (!a.out.empty()) {
    if (!report.ok() && !a.allow_unverified)
      throw std::runtime_error("refusing to export an unverified representation (use --allow-unverified)");
    write_file(a.out, canonical(klrc::io::to_json(rep)));
  }
  if (a.json_out) {
    extra["module"] = klrc::io::to_json(rep);
    extra["violations"] = report.violations.size();
    std::cout << extra.dump() << "\n";
  } else {
    std::cout << "dimension " << rep.dim << " over " << rep.field.descriptor() << "\n";
    print_basis(rep);
    print_report(report);
    if (!a.out.empty()) std::cout << "written " << a.out << "\n";
  }
  return report.ok() ? kOk : kNegative;
}

int cmd_irreducible(const ModuleArgs& a) {
  const auto rank = klrc::parse_rank(a.ell);
  const auto kappa = klrc::parse_multicharge(a.charge);
  const auto lambda = klrc::parse_multipartition(a.shape);
  return std::visit(
      [&](const auto& field) {
        auto rep = klrc::build_irreducible(lambda, kappa, rank, field);
        auto report = klrc::verify_representation(rep);
        if (!a.json_out) std::cout << "irreducible D(" << lambda.to_string() << ") for charge (" << kappa.to_string() << "), ell " << rank.to_string() << "\n";
        return emit_module(rep, report, a, json{{"shape", lambda.to_string()}, {"charge", kappa.to_string()}});
      },
      klrc::parse_field(a.field));
}

int cmd_specht(const ModuleArgs& a) {
  const auto rank = klrc::parse_rank(a.ell);
  const auto kappa = klrc::parse_multicharge(a.charge);
  const auto lambda = klrc::parse_multipartition(a.shape);
  return std::visit(
      [&](const auto& field) {
        klrc::SpechtOptions opts;
        opts.allow_nonsimple = a.allow_nonsimple;
        auto m = klrc::build_specht(lambda, kappa, rank, field, opts);
        auto report = klrc::verify_representation(m.rep);
        auto tri = klrc::triangularity_failures(m);
        if (!a.json_out) {
          std::cout << "Specht module S(" << lambda.to_string() << ") for charge (" << kappa.to_string() << "), ell " << rank.to_string() << "\n";
          std::cout << "ambient dimension " << m.ambient_dimension << ", relation subspace " << m.relation_dimension << "\n";
          std::cout << "triangularity failures: " << tri.size() << "\n";
          for (const auto& s : tri) std::cout << "  " << s << "\n";
        }
        json extra{{"shape", lambda.to_string()},
                   {"charge", kappa.to_string()},
                   {"ambient_dimension", m.ambient_dimension},
                   {"relation_dimension", m.relation_dimension},
                   {"triangularity_failures", tri}};
        const int rc = emit_module(m.rep, report, a, extra);
        return rc == kOk && tri.empty() ? kOk : kNegative;
      },
      klrc::parse_field(a.field));
}

struct WitnessArgs {
  std::string kind = "auto", ell, charge, field = "q", out;
  int n = 0;
  bool json_out = false, allow_unverified = false;
};

int cmd_witness(const WitnessArgs& a) {
  const auto rank = klrc::parse_rank(a.ell);
  const auto kappa = klrc::parse_multicharge(a.charge);
  return std::visit(
      [&](const auto& field) {
        auto plan = klrc::route_witness(kappa, a.n, rank);
        if (!plan) throw std::invalid_argument("the algebra is semisimple for these parameters; there is no witness");
        auto cert = a.kind == "auto" ? klrc::certify_witness(*plan, kappa, a.n, rank, field)
                                     : klrc::nonsplit_witness(klrc::parse_witness_kind(a.kind), kappa, a.n, rank, field);
        const auto j = klrc::io::to_json(cert);
        if (!a.out.empty()) {
          if (!cert.module_verified && !a.allow_unverified)
            throw std::runtime_error("refusing to export an unverified witness module (use --allow-unverified)");
          write_file(a.out, canonical(j));
        }
        if (a.json_out) {
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "witness " << klrc::to_string(cert.plan.kind) << " for charge (" << kappa.to_string() << "), ell " << rank.to_string()
                    << ", n " << a.n << ", component " << cert.plan.component << "\n";
          if (cert.shape) std::cout << "Specht shape " << cert.shape->to_string() << " over charge (" << cert.plan.module_charge->to_string() << ")\n";
          if (cert.least_dominant) std::cout << "submodule spanned by v^t, t = " << cert.least_dominant->to_string() << "\n";
          if (cert.rep) {
            std::cout << "module dimension " << cert.rep->dim << "\n";
            print_basis(*cert.rep);
          }
          std::cout << "module verified: " << (cert.module_verified ? "yes" : "no") << "\n";
          std::cout << "invariant line: " << (cert.line_invariant ? "yes" : "no") << ", killed by x and psi: " << (cert.killed_by_generators ? "yes" : "no")
                    << "\n";
          std::cout << "retraction system: coefficient rank " << cert.retraction_coefficient_rank << ", augmented rank "
                    << cert.retraction_augmented_rank << (cert.no_retraction ? " (inconsistent: no retraction)" : "") << "\n";
          for (const auto& note : cert.notes) std::cout << "note: " << note << "\n";
          std::cout << (cert.certified() ? "certified non-split" : "NOT certified") << "\n";
          if (!a.out.empty()) std::cout << "written " << a.out << "\n";
        }
        return cert.certified() ? kOk : kNegative;
      },
      klrc::parse_field(a.field));
}

int cmd_verify(const std::string& path, bool json_out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json doc = json::parse(in);
  // Witness certificates embed the module under "module".
  const json& j = doc.contains("field") ? doc : doc.at("module");
  return std::visit(
      [&](const auto& field) {
        auto rep = klrc::io::representation_from_json(j, field);
        auto report = klrc::verify_representation(rep);
        if (json_out) {
          json v = json::array();
          for (const auto& x : report.violations) v.push_back(x.description);
          std::cout << json{{"checked", report.checked}, {"dimension", rep.dim}, {"ok", report.ok()}, {"violations", v}}.dump() << "\n";
        } else {
          std::cout << "module of dimension " << rep.dim << " over " << rep.field.descriptor() << ", n " << rep.n << "\n";
          print_report(report);
        }
        return report.ok() ? kOk : kNegative;
      },
      klrc::io::field_of(j));
}

struct SweepArgs {
  std::string ells = "2,3", levels = "1", ns = "2-5", fields = "q", charges, out;
  int max_infinite_charge = 3;
  unsigned threads = 1;
};

int cmd_sweep(const SweepArgs& a) {
  klrc::GridSpec g;
  for (const auto& e : split(a.ells, ',')) g.ranks.push_back(klrc::parse_rank(e));
  g.levels = parse_int_list(a.levels);
  g.ns = parse_int_list(a.ns);
  g.fields = split(a.fields, ',');
  g.max_infinite_charge = a.max_infinite_charge;
  if (!a.charges.empty()) {
    g.charges.emplace();
    for (const auto& c : split(a.charges, ';')) g.charges->push_back(klrc::parse_multicharge(c));
  }
  const auto points = klrc::grid_points(g);
  const auto records = klrc::run_sweep(points, a.threads);
  std::string text;
  bool all_ok = true;
  for (const auto& r : records) {
    text += r.dump() + "\n";
    all_ok = all_ok && r.at("ok").get<bool>();
  }
  if (a.out.empty())
    std::cout << text;
  else
    write_file(a.out, text);
  return all_ok ? kOk : kNegative;
}

struct EnumerateArgs {
  std::string what, ell, charge, shape;
  int n = 0;
  bool json_out = false;
};

/// Residues of each node, one line per row, a blank line between components.
/// Digits are concatenated when every residue is a single digit.
std::string residue_grid(const klrc::Multipartition& lambda, const klrc::Multicharge& kappa, const klrc::LieRank& rank) {
  std::vector<std::vector<std::vector<klrc::Residue>>> grid;
  bool wide = false;
  for (int t = 1; t <= lambda.level(); ++t) {
    grid.emplace_back();
    const auto& comp = lambda.component(t);
    for (int row = 1; row <= static_cast<int>(comp.size()); ++row) {
      grid.back().emplace_back();
      for (int col = 1; col <= comp[static_cast<std::size_t>(row - 1)]; ++col) {
        auto res = klrc::residue(klrc::Node{row, col, t}, kappa, rank);
        wide = wide || res >= 10;
        grid.back().back().push_back(res);
      }
    }
  }
  std::string out;
  for (std::size_t t = 0; t < grid.size(); ++t) {
    if (t) out += "\n";
    for (const auto& row : grid[t]) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c && wide) out += ' ';
        out += std::to_string(row[c]);
      }
      out += "\n";
    }
  }
  return out;
}

int cmd_enumerate(const EnumerateArgs& a) {
  const auto rank = klrc::parse_rank(a.ell);
  const auto kappa = klrc::parse_multicharge(a.charge);
  if (a.what == "grid") {
    std::cout << residue_grid(klrc::parse_multipartition(a.shape), kappa, rank);
    return kOk;
  }
  if (a.what == "tableaux") {
    const auto lambda = klrc::parse_multipartition(a.shape);
    const auto tabs = klrc::enumerate_standard(lambda);
    if (a.json_out) {
      json arr = json::array();
      for (const auto& t : tabs)
        arr.push_back({{"tableau", klrc::io::to_json(t)}, {"residues", klrc::io::to_json(klrc::residue_sequence(t, kappa, rank))}});
      std::cout << arr.dump() << "\n";
    } else {
      for (const auto& t : tabs) std::cout << t.to_string() << "    (" << klrc::to_string(klrc::residue_sequence(t, kappa, rank)) << ")\n";
    }
    return kOk;
  }
  if (a.what == "residues") {
    if (a.n < 1) throw std::invalid_argument("enumerate residues needs --n");
    const auto seqs = klrc::residue_sequences_of_level(a.n, kappa, rank);
    if (a.json_out) {
      json arr = json::array();
      for (const auto& i : seqs) arr.push_back(klrc::io::to_json(i));
      std::cout << arr.dump() << "\n";
    } else {
      for (const auto& i : seqs) std::cout << klrc::to_string(i) << "\n";
    }
    return kOk;
  }
  throw std::invalid_argument("enumerate: unknown target '" + a.what + "' (grid, tableaux, residues)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semisimplicity and explicit modules for cyclotomic KLR algebras of type C"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check-semisimple", "Decide semisimplicity by (SS1) and (SS2)");
  c->add_option("--ell", check.ell, "Rank: an integer >= 2 or inf")->required();
  c->add_option("--charge", check.charge, "Multicharge k1,k2,...")->required();
  c->add_option("--n", check.n, "Number of strands")->required();
  c->add_flag("--json", check.json_out, "Machine-readable output");

  ModuleArgs irr;
  auto* i = app.add_subcommand("irreducible", "Build and verify the irreducible D(lambda) in the semisimple case");
  ModuleArgs spe;
  auto* s = app.add_subcommand("specht", "Build the Specht module S(lambda) by vector enumeration");
  for (auto [cmd, args] : {std::pair{i, &irr}, std::pair{s, &spe}}) {
    cmd->add_option("--ell", args->ell, "Rank: an integer >= 2 or inf")->required();
    cmd->add_option("--charge", args->charge, "Multicharge k1,k2,...")->required();
    cmd->add_option("--shape", args->shape, "Multipartition, e.g. 3,1|2 (- for an empty component)")->required();
    cmd->add_option("--field", args->field, "q or p<P>")->capture_default_str();
    cmd->add_option("--out", args->out, "Write the module as canonical JSON");
    cmd->add_flag("--json", args->json_out, "Machine-readable output");
    cmd->add_flag("--allow-unverified", args->allow_unverified, "Export even if verification fails");
  }
  s->add_flag("--allow-nonsimple", spe.allow_nonsimple, "Experimental: accept shapes whose Garnir elements have lower-order terms");

  WitnessArgs wit;
  auto* w = app.add_subcommand("witness", "Build and certify a non-split module in the non-semisimple case");
  w->add_option("--kind", wit.kind, "auto, boundary, repeat, ss2fail or ss1fail")->capture_default_str();
  w->add_option("--ell", wit.ell, "Rank: an integer >= 2 or inf")->required();
  w->add_option("--charge", wit.charge, "Multicharge k1,k2,...")->required();
  w->add_option("--n", wit.n, "Number of strands")->required();
  w->add_option("--field", wit.field, "q or p<P>")->capture_default_str();
  w->add_option("--out", wit.out, "Write the certificate as canonical JSON");
  w->add_flag("--json", wit.json_out, "Machine-readable output");
  w->add_flag("--allow-unverified", wit.allow_unverified, "Export even if the module fails verification");

  std::string module_path;
  bool verify_json = false;
  auto* v = app.add_subcommand("verify", "Check a serialized representation against the defining relations");
  v->add_option("--module", module_path, "Representation or witness certificate JSON")->required();
  v->add_flag("--json", verify_json, "Machine-readable output");

  SweepArgs sw;
  auto* g = app.add_subcommand("sweep", "Criterion plus construction over a grid; JSON lines");
  g->add_option("--ell", sw.ells, "Ranks, comma separated (inf allowed)")->capture_default_str();
  g->add_option("--levels", sw.levels, "Levels, e.g. 1,2")->capture_default_str();
  g->add_option("--n", sw.ns, "Strand counts, e.g. 2-6")->capture_default_str();
  g->add_option("--fields", sw.fields, "Fields, e.g. q,p5,p7")->capture_default_str();
  g->add_option("--charges", sw.charges, "Explicit charge tuples separated by ';' (default: all with entries in I)");
  g->add_option("--max-inf-charge", sw.max_infinite_charge, "Charge range 0..M used for ell = inf")->capture_default_str();
  g->add_option("--threads", sw.threads, "Worker threads")->capture_default_str();
  g->add_option("--out", sw.out, "Write JSON lines to a file");

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "Residue grids, standard tableaux, residue sequences");
  e->add_option("what", en.what, "grid, tableaux or residues")->required();
  e->add_option("--ell", en.ell, "Rank: an integer >= 2 or inf")->required();
  e->add_option("--charge", en.charge, "Multicharge k1,k2,...")->required();
  e->add_option("--shape", en.shape, "Multipartition (grid, tableaux)");
  e->add_option("--n", en.n, "Number of strands (residues)");
  e->add_flag("--json", en.json_out, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kError;
  }

  try {
    if (*c) return cmd_check(check);
    if (*i) return cmd_irreducible(irr);
    if (*s) return cmd_specht(spe);
    if (*w) return cmd_witness(wit);
    if (*v) return cmd_verify(module_path, verify_json);
    if (*g) return cmd_sweep(sw);
    if (*e) return cmd_enumerate(en);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kError;
  }
  return kError;
}
