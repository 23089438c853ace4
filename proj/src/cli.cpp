#include "tablog/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tablog/graph.hpp"
#include "tablog/logcontain.hpp"
#include "tablog/morphism.hpp"
#include "tablog/pathdecomp.hpp"
#include "tablog/poset.hpp"
#include "tablog/reduction.hpp"
#include "tablog/tree_solver.hpp"

namespace tablog {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

// Result of one command. The decision determines the exit code.
class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void set(std::string key, std::string value) { fields_.emplace_back(std::move(key), std::move(value)); }
  void witness(std::string path) { witnesses_.push_back(std::move(path)); }
  void integrity(std::string s) { integrity_ = std::move(s); }

  int finish(std::ostream& out, int code) const {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    out << "command: " << command_ << '\n';
    for (const auto& [k, v] : fields_) out << k << ": " << v << '\n';
    for (const auto& w : witnesses_) out << "witness: " << w << '\n';
    if (!integrity_.empty()) out << "integrity: " << integrity_ << '\n';
    out << "decision: " << (code == kExitYes ? "yes" : code == kExitNo ? "no" : "error") << '\n';
    out << "time_ms: " << static_cast<long long>(ms) << '\n';
    return code;
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<std::string> witnesses_;
  std::string integrity_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Options {
  std::string first, second, third;
  std::string method = "auto";
  std::string witness, output, verify;
  std::string source_up, target_up;
  bool rooted = false;
  bool surjective = false;
  bool no_surjective = false;
  unsigned jobs = 1;
};

int cmd_poset_info(const Options& o, RunReport& r, std::ostream& out, bool full) {
  Poset p = load_poset(read_file(o.first));
  r.set("elements", std::to_string(p.size()));
  r.set("covers", std::to_string(p.cover_count()));
  if (full) {
    r.set("depth", std::to_string(p.depth()));
    auto root = root_of(p);
    r.set("rooted", yes_no(root.has_value()));
    if (root) r.set("root", p.name(*root));
    r.set("tree", yes_no(is_tree(p)));
    r.set("minimal", join(minimal_elements(p).names()));
    r.set("maximal", join(maximal_elements(p).names()));
  } else {
    r.set("valid", "yes");
  }
  return r.finish(out, kExitYes);
}

int cmd_pmorph_check(const Options& o, RunReport& r, std::ostream& out) {
  Poset p = load_poset(read_file(o.first));
  Poset q = load_poset(read_file(o.second));
  if (!o.source_up.empty()) p = induced_upset(p, p.index_of(o.source_up)).poset;
  if (!o.target_up.empty()) q = induced_upset(q, q.index_of(o.target_up)).poset;
  ElementMap h = load_map(read_file(o.third), p.names(), q.names());
  Verdict v = verify_pmorphism(p, q, h, !o.no_surjective);
  r.set("surjective_required", yes_no(!o.no_surjective));
  if (!v) r.set("violation", v.violation);
  return r.finish(out, v ? kExitYes : kExitNo);
}

int cmd_spmorph(const Options& o, RunReport& r, std::ostream& out) {
  Poset p = load_poset(read_file(o.first));
  Poset q = load_poset(read_file(o.second));
  const bool tree = is_tree(p);
  std::string method = o.method;
  if (method == "auto") method = tree ? "tree" : "brute";
  if (method == "tree" && !tree) throw ValidationError("--method tree needs a tree source poset");
  r.set("method", method);
  auto h = method == "tree" ? tree_spmorph(p, q) : spmorph_brute(p, q);
  if (h && !o.witness.empty()) {
    if (auto v = verify_pmorphism(p, q, *h, true); !v) {
      throw IntegrityError("witness fails verification: " + v.violation);
    }
    write_file(o.witness, write_map(*h, p.names(), q.names()));
    r.witness(o.witness);
    r.integrity("ok");
  }
  return r.finish(out, h ? kExitYes : kExitNo);
}

int cmd_logcontain(const Options& o, RunReport& r, std::ostream& out) {
  Poset p = load_poset(read_file(o.first));
  Poset q = load_poset(read_file(o.second));
  if (p.empty() || q.empty()) throw ValidationError("logcontain needs nonempty posets");
  std::string method = o.method;
  if (method == "auto") method = is_tree(p) ? "tree" : "brute";
  if (method == "tree" && !is_tree(p)) throw ValidationError("--method tree needs a tree source poset");
  r.set("method", method);
  LogContainResult res = method == "tree" ? tree_logcontain(p, q) : logcontain(p, q, {o.jobs});
  if (res.uncovered) r.set("uncovered", q.name(*res.uncovered));
  if (res.contained) {
    for (const auto& w : res.witnesses) {
      const auto& m = w.morphism;
      if (auto v = verify_pmorphism(m.source.poset, m.target.poset, m.map, true); !v) {
        throw IntegrityError("witness fails verification: " + v.violation);
      }
    }
    r.integrity("ok");
    r.set("witnesses", std::to_string(res.witnesses.size()));
  }
  if (res.contained && !o.witness.empty()) {
    fs::create_directories(o.witness);
    for (std::size_t i = 0; i < res.witnesses.size(); ++i) {
      const auto& m = res.witnesses[i].morphism;
      std::ostringstream text;
      text << "# up(" << p.name(m.source_root) << ") onto up(" << q.name(m.target_root) << ")\n"
           << "# check: pmorph check P Q THIS --source-up " << p.name(m.source_root)
           << " --target-up " << q.name(m.target_root) << '\n'
           << write_map(m.map, m.source.poset.names(), m.target.poset.names());
      fs::path path = fs::path(o.witness) / ("minimal_" + std::to_string(i) + ".map");
      write_file(path, text.str());
      r.witness(path.string() + " " + p.name(m.source_root) + " " + q.name(m.target_root));
    }
  }
  return r.finish(out, res.contained ? kExitYes : kExitNo);
}

int cmd_lshom(const Options& o, RunReport& r, std::ostream& out) {
  Graph g = load_graph(read_file(o.first));
  Graph h = load_graph(read_file(o.second));
  r.set("surjective_required", yes_no(o.surjective));
  if (!o.verify.empty()) {
    ElementMap m = load_map(read_file(o.verify), g.names(), h.names());
    Verdict v = verify_lshom(g, h, m, o.surjective);
    if (!v) r.set("violation", v.violation);
    return r.finish(out, v ? kExitYes : kExitNo);
  }
  auto m = lshom_brute(g, h, o.surjective);
  if (m && !o.witness.empty()) {
    if (auto v = verify_lshom(g, h, *m, o.surjective); !v) {
      throw IntegrityError("witness fails verification: " + v.violation);
    }
    write_file(o.witness, write_map(*m, g.names(), h.names()));
    r.witness(o.witness);
    r.integrity("ok");
  }
  return r.finish(out, m ? kExitYes : kExitNo);
}

int cmd_pos(const Options& o, RunReport& r, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(read_file(o.first));
  PosConstruction pos = build_pos(g, o.rooted);
  if (pos.degenerate) err << "warning: graph has no vertices; the construction is degenerate\n";
  r.set("elements", std::to_string(pos.poset.size()));
  r.set("covers", std::to_string(pos.poset.cover_count()));
  r.set("depth", std::to_string(pos.poset.depth()));
  r.set("rooted", yes_no(o.rooted));
  if (!o.output.empty()) {
    write_file(o.output, write_poset(pos.poset));
    r.set("output", o.output);
  }
  return r.finish(out, kExitYes);
}

int cmd_theorem3(const Options& o, RunReport& r, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(read_file(o.first));
  Graph h = load_graph(read_file(o.second));
  CorrespondenceReport c = theorem3_check(g, h, o.rooted);
  r.set("lshom", yes_no(c.lshom()));
  r.set("spmorph", yes_no(c.spmorph()));
  r.set("agree", yes_no(c.agree()));
  if (!c.agree()) {
    err << "error: graph and poset decisions disagree\n";
    return r.finish(out, kExitError);
  }
  return r.finish(out, c.lshom() ? kExitYes : kExitNo);
}

int cmd_pathdecomp(const Options& o, RunReport& r, std::ostream& out) {
  Graph g = load_graph(read_file(o.first));
  PathDecomposition d = load_decomposition(read_file(o.second), g.names());
  TransformedDecomposition t = transform_pathdecomp(g, d, o.rooted);
  Verdict v = validate_decomposition(cover_graph(t.pos.poset), t.decomposition);
  if (!v) throw IntegrityError("transformed decomposition is invalid: " + v.violation);
  r.set("input_width", std::to_string(t.source_width));
  r.set("output_width", std::to_string(t.width));
  r.set("bound", std::to_string(t.bound));
  r.set("bags", std::to_string(t.decomposition.bags.size()));
  r.integrity("ok");
  if (!o.output.empty()) {
    write_file(o.output, write_decomposition(t.decomposition, t.pos.poset.names()));
    r.set("output", o.output);
  }
  return r.finish(out, kExitYes);
}

int cmd_qt_dump(const Options& o, RunReport& r, std::ostream& out) {
  Poset t = load_poset(read_file(o.first));
  Poset q = load_poset(read_file(o.second));
  std::string dump = dump_qt(compute_qt(t, q));
  if (!o.output.empty()) {
    write_file(o.output, dump);
    r.set("output", o.output);
  } else {
    out << dump;
  }
  return r.finish(out, kExitYes);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tabular logic containment and surjective p-morphism toolkit", "tablog"};
  app.require_subcommand(1);
  Options o;

  auto* poset = app.add_subcommand("poset", "Inspect a poset file")->require_subcommand(1);
  auto* info = poset->add_subcommand("info", "Print size, depth and structure");
  info->add_option("file", o.first)->required();
  auto* validate = poset->add_subcommand("validate", "Check that a poset file loads");
  validate->add_option("file", o.first)->required();

  auto* pmorph = app.add_subcommand("pmorph", "p-morphism utilities")->require_subcommand(1);
  auto* check = pmorph->add_subcommand("check", "Verify a map file as a p-morphism");
  check->add_option("source", o.first)->required();
  check->add_option("target", o.second)->required();
  check->add_option("map", o.third)->required();
  check->add_flag("--no-surjective", o.no_surjective, "Do not require surjectivity");
  check->add_option("--source-up", o.source_up, "Restrict the source to this element's upset");
  check->add_option("--target-up", o.target_up, "Restrict the target to this element's upset");

  auto* spmorph = app.add_subcommand("spmorph", "Decide a surjective p-morphism source -> target");
  spmorph->add_option("source", o.first)->required();
  spmorph->add_option("target", o.second)->required();
  spmorph->add_option("--method", o.method)->check(CLI::IsMember({"auto", "brute", "tree"}));
  spmorph->add_option("--witness", o.witness, "Write the witness map here");

  auto* logc = app.add_subcommand("logcontain", "Decide L(source) contained in L(target)");
  logc->add_option("source", o.first)->required();
  logc->add_option("target", o.second)->required();
  logc->add_option("--method", o.method)->check(CLI::IsMember({"auto", "brute", "tree"}));
  logc->add_option("--witness", o.witness, "Directory for per-minimal-element witness maps");
  logc->add_option("--jobs", o.jobs, "Threads for independent subproblems")->check(CLI::PositiveNumber);

  auto* lshom = app.add_subcommand("lshom", "Decide a locally surjective homomorphism G -> H");
  lshom->add_option("source", o.first)->required();
  lshom->add_option("target", o.second)->required();
  lshom->add_flag("--surjective", o.surjective, "Also require surjectivity");
  lshom->add_option("--witness", o.witness, "Write the witness map here");
  lshom->add_option("--verify", o.verify, "Verify this map instead of searching");

  auto* pos = app.add_subcommand("pos", "Build Pos(G) or Pos_bot(G)");
  pos->add_option("graph", o.first)->required();
  pos->add_flag("--rooted", o.rooted, "Add the bottom element");
  pos->add_option("-o,--output", o.output, "Write the poset here");

  auto* thm = app.add_subcommand("theorem3", "Compare LSHom(G,H) with SPMorph(Pos(G),Pos(H))");
  thm->add_option("source", o.first)->required();
  thm->add_option("target", o.second)->required();
  thm->add_flag("--rooted", o.rooted, "Use the rooted construction");

  auto* pd = app.add_subcommand("pathdecomp", "Lift a path decomposition of G to Pos(G)");
  pd->add_option("graph", o.first)->required();
  pd->add_option("decomposition", o.second)->required();
  pd->add_flag("--rooted", o.rooted, "Use the rooted construction");
  pd->add_option("-o,--output", o.output, "Write the decomposition here");

  auto* qt = app.add_subcommand("qt", "Tree solver tables")->require_subcommand(1);
  auto* dump = qt->add_subcommand("dump", "Print Q_t for every tree element");
  dump->add_option("tree", o.first)->required();
  dump->add_option("target", o.second)->required();
  dump->add_option("-o,--output", o.output, "Write the table here");

  std::string echo = join(args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  RunReport report(echo);
  try {
    if (info->parsed()) return cmd_poset_info(o, report, out, true);
    if (validate->parsed()) return cmd_poset_info(o, report, out, false);
    if (check->parsed()) return cmd_pmorph_check(o, report, out);
    if (spmorph->parsed()) return cmd_spmorph(o, report, out);
    if (logc->parsed()) return cmd_logcontain(o, report, out);
    if (lshom->parsed()) return cmd_lshom(o, report, out);
    if (pos->parsed()) return cmd_pos(o, report, out, err);
    if (thm->parsed()) return cmd_theorem3(o, report, out, err);
    if (pd->parsed()) return cmd_pathdecomp(o, report, out);
    if (dump->parsed()) return cmd_qt_dump(o, report, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return report.finish(out, kExitError);
  }
  return kExitError;
}

}  // namespace tablog
