// Command-line front end: generate posets, build the order and join/rank
// categories, verify schemoid conditions, and dump schemoid algebras.
//
// Exit codes: 0 pass/success, 1 verification failure (witness JSON on
// stdout), 2 malformed input or parameters, 3 tilde precondition failure
// (report on stderr), 4 inconclusive lemma verification.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schemoid/json_io.hpp"

namespace {

using namespace schemoid;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInconclusive = 4;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorKind::BadInput, "cannot open output file '" + out_path + "'");
  out << text;
}

json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadInput, "cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

std::vector<int> parse_lengths(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw Error(ErrorKind::BadInput, "bad --lengths value");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw Error(ErrorKind::BadInput, "--lengths must be nonempty");
  return out;
}

DifferenceOpCandidate delta_from_flag(const FinitePoset& p, const std::string& flag) {
  if (flag == "setdiff") return set_difference_delta(p);
  if (flag == "bruhat") return bruhat_delta(p);
  if (flag.rfind("file:", 0) == 0) return delta_from_json(p, load_json(flag.substr(5)));
  throw Error(ErrorKind::BadInput, "--delta must be setdiff, bruhat, or file:<path>");
}

struct Options {
  std::string kind, construction, what, ring;
  std::string poset_path, instance_path, partition_path, complex_path, sc_path;
  std::string delta = "setdiff";
  std::string out, format = "json";
  int n = 0, k = 0, q = 2;
  std::string lengths;
  std::uint64_t max_nodes = kDefaultNodeCap;
  std::size_t max_elements = 4096;
};

int cmd_gen(const Options& opt) {
  FinitePoset p = [&] {
    if (opt.kind == "boolean") return boolean_lattice(opt.n);
    if (opt.kind == "chain-product") return chain_product(parse_lengths(opt.lengths));
    if (opt.kind == "subspace") return subspace_lattice(opt.n, opt.q);
    if (opt.kind == "bruhat") return bruhat_order(opt.n);
    if (opt.kind == "face-poset") {
      if (opt.complex_path.empty())
        throw Error(ErrorKind::BadInput, "face-poset needs --complex");
      return face_poset(complex_from_json(load_json(opt.complex_path)));
    }
    if (opt.kind == "uniform-matroid") return uniform_matroid_flats(opt.k, opt.n);
    throw Error(ErrorKind::BadInput, "unknown generator '" + opt.kind + "'");
  }();
  if (p.size() > opt.max_elements)
    throw Error(ErrorKind::SizeCap, "poset has " + std::to_string(p.size()) +
                    " elements, over --max-elements " + std::to_string(opt.max_elements));
  write_output(poset_to_json(p).dump(2) + "\n", opt.out);
  return kExitOk;
}

int cmd_build(const Options& opt) {
  if (opt.poset_path.empty()) throw Error(ErrorKind::BadInput, "build needs --poset");
  FinitePoset p = poset_from_json(load_json(opt.poset_path));
  if (opt.construction == "cp") {
    const auto cand = delta_from_flag(p, opt.delta);
    const auto inst = build_cp(p, cand);
    write_output(instance_to_json(inst).dump(2) + "\n", opt.out);
    return kExitOk;
  }
  if (opt.construction == "tilde") {
    const auto pre = check_tilde_preconditions(p);
    if (!pre.passed()) {
      std::cerr << tilde_report_to_json(p, pre).dump(2) << "\n";
      return kExitPrecondition;
    }
    const auto inst = build_tilde(RankedPoset::make(std::move(p)));
    write_output(instance_to_json(inst).dump(2) + "\n", opt.out);
    return kExitOk;
  }
  throw Error(ErrorKind::BadInput, "construction must be cp or tilde");
}

int cmd_verify(const Options& opt) {
  if (opt.what == "schemoid") {
    if (opt.instance_path.empty()) throw Error(ErrorKind::BadInput, "needs --instance");
    const auto inst = instance_from_json(load_json(opt.instance_path));
    const auto report = verify_schemoid(inst);
    std::cout << schemoid_report_to_json(inst, report).dump(2) << "\n";
    return report.ok ? kExitOk : kExitFail;
  }
  if (opt.what == "diffop") {
    if (opt.poset_path.empty()) throw Error(ErrorKind::BadInput, "needs --poset");
    const FinitePoset p = poset_from_json(load_json(opt.poset_path));
    const auto report = verify_difference_op(p, delta_from_flag(p, opt.delta));
    std::cout << diffop_report_to_json(p, report).dump(2) << "\n";
    return report.ok ? kExitOk : kExitFail;
  }
  if (opt.what == "scheme") {
    if (opt.partition_path.empty()) throw Error(ErrorKind::BadInput, "needs --partition");
    const auto part = partition_from_json(load_json(opt.partition_path));
    const auto report = verify_association_scheme(part);
    std::cout << scheme_report_to_json(part, report).dump(2) << "\n";
    return report.passed() ? kExitOk : kExitFail;
  }
  if (opt.what == "lemma") {
    if (opt.instance_path.empty()) throw Error(ErrorKind::BadInput, "needs --instance");
    const auto inst = instance_from_json(load_json(opt.instance_path));
    const auto report = verify_via_lemma(inst, opt.max_nodes);
    std::cout << lemma_report_to_json(inst, report).dump(2) << "\n";
    if (report.status == LemmaStatus::Pass) return kExitOk;
    if (report.status == LemmaStatus::Fail) return kExitFail;
    return kExitInconclusive;
  }
  throw Error(ErrorKind::BadInput, "verify target must be schemoid, diffop, scheme, or lemma");
}

int cmd_algebra(const Options& opt) {
  if (opt.instance_path.empty()) throw Error(ErrorKind::BadInput, "needs --instance");
  const auto inst = instance_from_json(load_json(opt.instance_path));
  const auto report = verify_schemoid(inst);
  if (!report.ok) {
    std::cout << schemoid_report_to_json(inst, report).dump(2) << "\n";
    return kExitFail;
  }
  const auto sc = schemoid_algebra(inst);
  if (opt.format == "json")
    write_output(sc_to_json(sc).dump(2) + "\n", opt.out);
  else if (opt.format == "csv")
    write_output(sc_to_csv(sc), opt.out);
  else
    throw Error(ErrorKind::BadInput, "--format must be json or csv");
  return kExitOk;
}

int cmd_check_iso(const Options& opt) {
  if (opt.sc_path.empty()) throw Error(ErrorKind::BadInput, "needs --sc");
  const auto sc = sc_from_json(load_json(opt.sc_path));
  const RingTable ring = [&] {
    if (opt.ring == "squarefree") return squarefree_quotient_ring(opt.n);
    if (opt.ring == "nilcoxeter") return nilcoxeter_ring(opt.n);
    if (opt.ring == "stanley-reisner") {
      if (opt.complex_path.empty())
        throw Error(ErrorKind::BadInput, "stanley-reisner needs --complex");
      return stanley_reisner_sq_ring(complex_from_json(load_json(opt.complex_path)));
    }
    if (opt.ring == "rp") {
      if (opt.poset_path.empty()) throw Error(ErrorKind::BadInput, "rp needs --poset");
      return rp_ring(RankedPoset::make(poset_from_json(load_json(opt.poset_path))));
    }
    throw Error(ErrorKind::BadInput,
                "--ring must be squarefree, nilcoxeter, stanley-reisner, or rp");
  }();
  const auto report = table_isomorphic_by_name(sc, ring);
  const std::string text = iso_report_to_json(sc, ring, report).dump(2) + "\n";
  std::cout << text;
  if (!opt.out.empty()) write_output(text, opt.out);
  return report.ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"schemoid: finite categories from posets, schemoid verification, "
               "and schemoid algebras"};
  app.require_subcommand(1);
  Options opt;

  auto* gen = app.add_subcommand("gen", "generate a poset and write it as JSON");
  gen->add_option("kind", opt.kind,
                  "boolean | chain-product | subspace | bruhat | face-poset | uniform-matroid")
      ->required();
  gen->add_option("--n", opt.n, "size parameter");
  gen->add_option("--k", opt.k, "matroid rank (uniform-matroid)");
  gen->add_option("--q", opt.q, "field size (subspace; only 2)");
  gen->add_option("--lengths", opt.lengths, "comma-separated chain lengths (chain-product)");
  gen->add_option("--complex", opt.complex_path, "simplicial complex JSON (face-poset)");
  gen->add_option("--max-elements", opt.max_elements,
                  "refuse to emit posets larger than this (default 4096)");
  gen->add_option("--out", opt.out, "output file (default stdout)");

  auto* build = app.add_subcommand("build", "build a labeled category from a poset");
  build->add_option("construction", opt.construction, "cp | tilde")->required();
  build->add_option("--poset", opt.poset_path, "poset JSON file")->required();
  build->add_option("--delta", opt.delta, "setdiff | bruhat | file:<path> (cp only)");
  build->add_option("--out", opt.out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a verification");
  verify->add_option("what", opt.what, "schemoid | diffop | scheme | lemma")->required();
  verify->add_option("--instance", opt.instance_path, "instance JSON (schemoid, lemma)");
  verify->add_option("--poset", opt.poset_path, "poset JSON (diffop)");
  verify->add_option("--delta", opt.delta, "setdiff | bruhat | file:<path> (diffop)");
  verify->add_option("--partition", opt.partition_path, "partition JSON (scheme)");
  verify->add_option("--max-nodes", opt.max_nodes,
                     "functor-search node cap (lemma; default 10^7)");

  auto* algebra = app.add_subcommand("algebra", "dump schemoid-algebra structure constants");
  algebra->add_option("--instance", opt.instance_path, "instance JSON")->required();
  algebra->add_option("--format", opt.format, "json | csv");
  algebra->add_option("--out", opt.out, "output file (default stdout)");

  auto* iso = app.add_subcommand("check-iso", "compare structure constants with a reference ring");
  iso->add_option("--sc", opt.sc_path, "structure-constant JSON")->required();
  iso->add_option("--ring", opt.ring, "squarefree | nilcoxeter | stanley-reisner | rp")
      ->required();
  iso->add_option("--n", opt.n, "ring size parameter");
  iso->add_option("--complex", opt.complex_path, "simplicial complex JSON");
  iso->add_option("--poset", opt.poset_path, "poset JSON");
  iso->add_option("--out", opt.out, "also write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(opt);
    if (build->parsed()) return cmd_build(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (algebra->parsed()) return cmd_algebra(opt);
    if (iso->parsed()) return cmd_check_iso(opt);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::PreconditionFailed ? kExitPrecondition : kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
