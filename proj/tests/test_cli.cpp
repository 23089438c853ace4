#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "tablog/cli.hpp"

using namespace tablog;
using namespace tablog::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;

  bool has(const std::string& line) const { return out.find(line + "\n") != std::string::npos; }
  std::vector<std::string> values(const std::string& key) const {
    std::vector<std::string> found;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);)
      if (line.rfind(key + ": ", 0) == 0) found.push_back(line.substr(key.size() + 2));
    return found;
  }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return data_path(name); }

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("tablog_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("poset info and validate") {
  Run fig = run({"poset", "info", data("pos_bot_path2_fig1.poset")});
  CHECK(fig.code == kExitYes);
  CHECK(fig.has("elements: 18"));
  CHECK(fig.has("depth: 5"));
  CHECK(fig.has("rooted: yes"));
  CHECK(fig.has("root: BOT"));
  CHECK(fig.has("tree: no"));
  CHECK(fig.has("decision: yes"));

  Run c3 = run({"poset", "info", data("chain3.poset")});
  CHECK(c3.has("depth: 3"));
  CHECK(c3.has("tree: yes"));

  Run cyc = run({"poset", "validate", data("cycle.poset")});
  CHECK(cyc.code == kExitError);
  CHECK(cyc.err.find("cycle") != std::string::npos);
  CHECK(cyc.has("decision: error"));

  CHECK(run({"poset", "info", data("missing.poset")}).code == kExitError);
  CHECK(run({"poset"}).code == kExitError);
  CHECK(run({"bogus"}).code == kExitError);
}

TEST_CASE("pos, spmorph and witnesses") {
  TempDir tmp;
  Run p = run({"pos", data("path2.graph"), "-o", tmp / "p.poset"});
  CHECK(p.has("elements: 17"));
  CHECK(run({"pos", data("path2.graph"), "--rooted"}).has("elements: 18"));
  CHECK(run({"pos", data("k4.graph")}).has("elements: 28"));
  run({"pos", data("k2.graph"), "-o", tmp / "k.poset"});

  Run yes = run({"spmorph", tmp / "p.poset", tmp / "k.poset", "--witness", tmp / "pk.map"});
  CHECK(yes.code == kExitYes);
  CHECK(yes.has("integrity: ok"));
  CHECK(run({"pmorph", "check", tmp / "p.poset", tmp / "k.poset", tmp / "pk.map"}).code == kExitYes);

  CHECK(run({"spmorph", data("chain2.poset"), data("chain3.poset")}).code == kExitNo);

  Run tree = run({"spmorph", data("chain3.poset"), data("chain3.poset"), "--witness", tmp / "c.map"});
  CHECK(tree.code == kExitYes);
  CHECK(tree.has("method: tree"));
  CHECK(run({"pmorph", "check", data("chain3.poset"), data("chain3.poset"), tmp / "c.map"}).code == kExitYes);

  CHECK(run({"spmorph", tmp / "p.poset", tmp / "k.poset", "--method", "tree"}).code == kExitError);
  CHECK(run({"spmorph", tmp / "p.poset", tmp / "k.poset", "--method", "fast"}).code == kExitError);

  Run bad = run({"pmorph", "check", data("chain2.poset"), data("chain2.poset"), tmp / "c.map"});
  CHECK(bad.code == kExitError);
}

TEST_CASE("pmorph check reports violations") {
  TempDir tmp;
  {
    std::ofstream(tmp / "flat.map") << "m x x\nm y x\nm z x\n";
  }
  Run r = run({"pmorph", "check", data("chain3.poset"), data("chain3.poset"), tmp / "flat.map"});
  CHECK(r.code == kExitNo);
  CHECK(r.values("violation").size() == 1);
  Run loose = run({"pmorph", "check", data("chain3.poset"), data("chain3.poset"), tmp / "flat.map",
                   "--no-surjective"});
  CHECK(loose.code == kExitNo);
}

TEST_CASE("logcontain witnesses re-verify") {
  TempDir tmp;
  const std::string fig = data("pos_bot_path2_fig1.poset");
  for (const std::string& jobs : {"1", "3"}) {
    Run r = run({"logcontain", fig, fig, "--witness", tmp / ("w" + jobs), "--jobs", jobs});
    CHECK(r.code == kExitYes);
    auto ws = r.values("witness");
    REQUIRE(ws.size() == 1);
    for (const auto& w : ws) {
      std::istringstream in(w);
      std::string path, x, y;
      in >> path >> x >> y;
      CHECK(run({"pmorph", "check", fig, fig, path, "--source-up", x, "--target-up", y}).code == kExitYes);
    }
  }
  Run anti = run({"logcontain", data("chain3.poset"), data("fork.poset"), "--witness", tmp / "f"});
  CHECK(anti.code == kExitNo);
  CHECK(run({"logcontain", data("chain3.poset"), data("chain2.poset")}).code == kExitYes);
  Run no = run({"logcontain", data("chain2.poset"), data("chain3.poset")});
  CHECK(no.code == kExitNo);
  CHECK(no.has("uncovered: x"));
}

TEST_CASE("lshom") {
  TempDir tmp;
  CHECK(run({"lshom", data("path2.graph"), data("path2.graph")}).code == kExitYes);
  CHECK(run({"lshom", data("k3.graph"), data("path2.graph")}).code == kExitNo);
  Run r = run({"lshom", data("path2.graph"), data("k2.graph"), "--surjective", "--witness", tmp / "g.map"});
  CHECK(r.code == kExitYes);
  CHECK(run({"lshom", data("path2.graph"), data("k2.graph"), "--surjective", "--verify", tmp / "g.map"}).code ==
        kExitYes);
}

TEST_CASE("theorem3 and pathdecomp") {
  Run a = run({"theorem3", data("path2.graph"), data("k2.graph")});
  CHECK(a.code == kExitYes);
  CHECK(a.has("agree: yes"));
  Run b = run({"theorem3", data("k3.graph"), data("path2.graph"), "--rooted"});
  CHECK(b.code == kExitNo);
  CHECK(b.has("agree: yes"));

  TempDir tmp;
  Run d = run({"pathdecomp", data("path2.graph"), data("path2.decomp"), "-o", tmp / "out.decomp"});
  CHECK(d.code == kExitYes);
  CHECK(d.has("input_width: 1"));
  CHECK(d.has("bound: 10"));
  CHECK(fs::exists(tmp / "out.decomp"));
  CHECK(run({"pathdecomp", data("path2.graph"), data("path2.decomp"), "--rooted"}).has("bound: 11"));
  CHECK(run({"pathdecomp", data("k2.graph"), data("k2.decomp")}).has("bags: 3"));
  CHECK(run({"pathdecomp", data("path2.graph"), data("k2.decomp")}).code == kExitError);
}

TEST_CASE("qt dump") {
  Run r = run({"qt", "dump", data("fork.poset"), data("chain2.poset")});
  CHECK(r.code == kExitYes);
  CHECK(r.has("qt r : a b"));
  CHECK(r.has("qt a : b"));
}
