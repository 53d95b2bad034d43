// Runs the acceptance criteria against the built CLIs and prints one
// PASS/FAIL line per criterion. Exit status is 0 iff every line passes.
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtt/parser.h"
#include "mtt/syntax.h"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

std::string quote(const std::string &s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'')
      q += "'\\''";
    else
      q += c;
  }
  return q + "'";
}

Run run(const std::string &cmd) {
  Run r;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> mtt_files(const fs::path &dir) {
  std::vector<fs::path> files;
  for (const auto &e : fs::directory_iterator(dir))
    if (e.path().extension() == ".mtt") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string &why) {
    if (ok) detail = why;
    ok = false;
  }
};

/// Reports whose id starts with `prefix`; every one must pass with at
/// least `min_instances` instances.
void expect_laws(Outcome &o, const Json &reports, const std::string &prefix,
                 std::size_t min_instances, std::size_t expected_count = 0) {
  std::size_t seen = 0;
  for (const auto &r : reports) {
    std::string id = r["law"];
    if (id.compare(0, prefix.size(), prefix) != 0) continue;
    ++seen;
    if (!r["passed"].get<bool>()) o.fail(id + " failed: " + r["counterexample"].dump());
    if (r["instances"].get<std::size_t>() < min_instances)
      o.fail(id + " ran " + r["instances"].dump() + " instances");
  }
  if (seen == 0) o.fail("no laws under " + prefix);
  if (expected_count && seen != expected_count)
    o.fail("expected " + std::to_string(expected_count) + " laws under " + prefix +
           ", found " + std::to_string(seen));
}

// Random J motives over Bool and Nat. A motive is rendered twice: once with
// the bound names a, b, q and once at a literal point with refl.
struct Motive {
  int kind = 0;
  std::vector<Motive> kids;
};

Motive random_motive(std::mt19937_64 &rng, bool over_bool, int depth) {
  int kinds = over_bool ? 9 : 8;
  int limit = depth > 0 ? kinds : 4;
  Motive m;
  m.kind = static_cast<int>(rng() % limit);
  if (m.kind == 7 && !over_bool) m.kind = 8;
  if (m.kind >= 4 && m.kind <= 6) {
    m.kids.push_back(random_motive(rng, over_bool, depth - 1));
    if (m.kind == 4) m.kids.push_back(random_motive(rng, over_bool, depth - 1));
  }
  return m;
}

struct Names {
  std::string carrier, a, b, q;
};

std::string type_of(const Motive &m, const Names &n) {
  switch (m.kind) {
    case 0: return "Bool";
    case 1: return "Nat";
    case 2: return "Id " + n.carrier + " " + n.a + " " + n.b;
    case 3: return "Id " + n.carrier + " " + n.b + " " + n.a;
    case 4: return "(s : " + type_of(m.kids[0], n) + ") * (" + type_of(m.kids[1], n) + ")";
    case 5: return "Nat -> " + type_of(m.kids[0], n);
    case 6: return "Id " + n.carrier + " " + n.a + " " + n.b + " -> " + type_of(m.kids[0], n);
    case 7: return "El (if " + n.a + " then #bool else #pi #bool (_. #bool))";
    default: return "Id (Id " + n.carrier + " " + n.a + " " + n.b + ") " + n.q + " " + n.q;
  }
}

std::string beta_of(const Motive &m, const std::string &carrier, const std::string &a) {
  bool over_bool = carrier == "Bool";
  switch (m.kind) {
    case 0:
      return over_bool ? "(if " + a + " then false else true)"
                       : "(natrec " + a + " true (k ih. if ih then false else true))";
    case 1:
      return over_bool ? "(if " + a + " then 1 else 0)"
                       : "(natrec " + a + " " + a + " (k ih. succ ih))";
    case 2:
    case 3: return "(refl " + a + ")";
    case 4: return "(" + beta_of(m.kids[0], carrier, a) + ", " + beta_of(m.kids[1], carrier, a) + ")";
    case 5: return "(\\n. " + beta_of(m.kids[0], carrier, a) + ")";
    case 6: return "(\\r. " + beta_of(m.kids[0], carrier, a) + ")";
    case 7:
      return "(if [c. El (if c then #bool else #pi #bool (_. #bool))] " + a +
             " then true else (\\x. x))";
    default: return "(refl (refl " + a + "))";
  }
}

std::string j_program(std::mt19937_64 &rng) {
  bool over_bool = rng() % 2 == 0;
  std::string carrier = over_bool ? "Bool" : "Nat";
  std::string v = over_bool ? (rng() % 2 ? "true" : "false") : std::to_string(rng() % 6);
  Motive m = random_motive(rng, over_bool, 2);
  std::string path = "(refl " + v + " : Id " + carrier + " " + v + " " + v + ")";
  std::string at_v = type_of(m, Names{carrier, v, v, path});
  std::ostringstream s;
  s << "def j : " << at_v << " :=\n  J (a b q. " << type_of(m, Names{carrier, "a", "b", "q"})
    << ") (a. " << beta_of(m, carrier, "a") << ") " << path << "\n";
  s << "def beta : Id (" << at_v << ") j " << beta_of(m, carrier, v) << " := refl j\n";
  return s.str();
}

void print_line(int n, const std::string &what, const Outcome &o) {
  std::cout << (o.ok ? "PASS" : "FAIL") << "  " << n << ". " << what;
  if (!o.ok) std::cout << ": " << o.detail;
  std::cout << "\n";
}

}  // namespace

int main() {
  const std::string mtt = MTT_BIN;
  const fs::path corpus = MTT_CORPUS_DIR;
  const std::vector<std::string> mutants = {MTT_MUTANT_MONUS, MTT_MUTANT_MIN};

  Json reports = Json::array();
  std::string laws_error;
  {
    Run r = run("env -u MTT_SEED " + quote(mtt) + " laws 2>/dev/null");
    try {
      reports = Json::parse(r.out);
      if (r.status != 0) laws_error = "mtt laws exited " + std::to_string(r.status);
    } catch (const std::exception &e) {
      laws_error = std::string("unreadable law report: ") + e.what();
    }
  }
  auto with_laws = [&](const std::function<void(Outcome &)> &body) {
    Outcome o;
    if (reports.empty()) o.fail(laws_error.empty() ? "no law reports" : laws_error);
    else body(o);
    return o;
  };

  std::vector<Outcome> results;

  results.push_back(with_laws([&](Outcome &o) { expect_laws(o, reports, "groupoid.", 1000, 6); }));

  results.push_back(with_laws([&](Outcome &o) {
    expect_laws(o, reports, "babs.", 1000);
    expect_laws(o, reports, "upto.", 1000);
    expect_laws(o, reports, "from.", 1000);
  }));

  results.push_back(with_laws([&](Outcome &o) {
    for (const char *former : {"const", "Sigma", "Pi", "Sum", "W", "Id"})
      expect_laws(o, reports, std::string("tap.idp.") + former, 500, 1);
    expect_laws(o, reports, "tap.lift_idp", 500, 1);
    expect_laws(o, reports, "tap.snd_idp", 500, 1);
  }));

  {
    Outcome o = with_laws([&](Outcome &o) { expect_laws(o, reports, "j.refl", 200, 1); });
    fs::path dir = fs::temp_directory_path() / "mtt_acceptance_j";
    fs::create_directories(dir);
    std::mt19937_64 rng(20261017);
    for (int k = 0; k < 200 && o.ok; ++k) {
      fs::path file = dir / ("j_" + std::to_string(k) + ".mtt");
      std::string program = j_program(rng);
      std::ofstream(file) << program;
      Run r = run(quote(mtt) + " check " + quote(file.string()) + " 2>&1");
      if (r.status != 0) o.fail("program " + std::to_string(k) + " rejected: " + r.out + program);
    }
    fs::remove_all(dir);
    results.push_back(o);
  }

  results.push_back(with_laws([&](Outcome &o) {
    expect_laws(o, reports, "funext.shape", 500, 1);
    expect_laws(o, reports, "funext.endpoints", 500, 1);
    expect_laws(o, reports, "funext.epsilon", 500, 1);
    expect_laws(o, reports, "funext.eta", 500, 1);
    expect_laws(o, reports, "funext.interpolants", 500, 1);
    expect_laws(o, reports, "funext.k0_id", 1, 1);
  }));

  results.push_back(with_laws([&](Outcome &o) {
    expect_laws(o, reports, "universe.idp", 200, 1);
    expect_laws(o, reports, "universe.bool", 200, 1);
    expect_laws(o, reports, "universe.pi", 200, 1);
    expect_laws(o, reports, "universe.eq", 200, 1);
    expect_laws(o, reports, "universe.constructor_change", 1, 1);
  }));

  {
    Outcome o;
    Run r = run(quote(mtt) + " laws --ring integers --filter degeneracy 2>&1");
    try {
      Json j = Json::parse(r.out);
      if (r.status != 0) o.fail("integers: " + r.out);
      expect_laws(o, j, "degeneracy.step", 1, 1);
    } catch (const std::exception &e) {
      o.fail(std::string("integers: unreadable report: ") + e.what());
    }
    std::size_t candidates = 0;
    for (const auto &f : mtt_files(corpus / "bad")) {
      if (slurp(f).find(": Id Bool true false :=") == std::string::npos) continue;
      ++candidates;
      Run c = run(quote(mtt) + " check " + quote(f.string()) + " 2>&1");
      if (c.status != 1) o.fail(f.filename().string() + " was not rejected");
    }
    if (candidates == 0) o.fail("no bad programs of type Id Bool true false");
    results.push_back(o);
  }

  {
    Outcome o;
    for (const auto &bin : mutants) {
      Run r = run(quote(bin) + " laws --filter groupoid,babs,upto,from 2>&1");
      std::string name = fs::path(bin).filename().string();
      if (r.status != 1) {
        o.fail(name + " exited " + std::to_string(r.status));
        continue;
      }
      try {
        bool caught = false;
        for (const auto &rep : Json::parse(r.out))
          if (!rep["passed"].get<bool>() && !rep["counterexample"].is_null()) caught = true;
        if (!caught) o.fail(name + " reported no counterexample");
      } catch (const std::exception &e) {
        o.fail(name + ": unreadable report: " + e.what());
      }
    }
    results.push_back(o);
  }

  {
    Outcome o;
    auto good = mtt_files(corpus / "good");
    auto bad = mtt_files(corpus / "bad");
    if (good.size() < 30) o.fail("only " + std::to_string(good.size()) + " good programs");
    if (bad.size() < 10) o.fail("only " + std::to_string(bad.size()) + " bad programs");
    std::string all;
    for (const auto &f : good) {
      std::string text = slurp(f);
      all += text;
      Run r = run(quote(mtt) + " check " + quote(f.string()) + " 2>&1");
      if (r.status != 0) o.fail(f.filename().string() + ": " + r.out);
      try {
        auto defs = mtt::parse_program(text);
        std::string printed;
        for (const auto &d : defs) printed += mtt::print(d) + "\n";
        auto again = mtt::parse_program(printed);
        bool same = again.size() == defs.size();
        for (std::size_t k = 0; same && k < defs.size(); ++k) {
          same = again[k].name == defs[k].name && mtt::same_syntax(*again[k].body, *defs[k].body);
          if (same && defs[k].type)
            same = again[k].type && mtt::same_syntax(*again[k].type, *defs[k].type);
        }
        if (!same) o.fail(f.filename().string() + " does not round-trip");
      } catch (const std::exception &e) {
        o.fail(f.filename().string() + ": " + e.what());
      }
    }
    const std::regex spanned(R"(:\d+:\d+: )");
    for (const auto &f : bad) {
      Run r = run(quote(mtt) + " check " + quote(f.string()) + " 2>&1");
      if (r.status != 1 || !std::regex_search(r.out, spanned))
        o.fail(f.filename().string() + " did not fail with a spanned error");
    }
    for (const char *former : {"Bool", "Nat", "Unit", "Empty", "R", "->", " * ", " + ", "W (",
                               "Id ", "J (", "funext", "#bool", "#pi", "#eq", "El ", "case",
                               "natrec", "wrec", "absurd", "sup ", "fst", "snd", "inr"})
      if (all.find(former) == std::string::npos)
        o.fail(std::string("no good program uses ") + former);
    results.push_back(o);
  }

  const char *names[] = {
      "groupoid laws on piecewise paths",
      "babs / upto / from laws",
      "transport along idp is the identity for every former",
      "J computes on refl (API and surface programs)",
      "funext shape, endpoints, epsilon, eta, interpolants, K0",
      "universe transport coherence and constructor changes",
      "degeneracy under integers and rationals",
      "mutant builds are caught with counterexamples",
      "surface corpus checks, fails with spans, round-trips",
  };
  bool all_ok = true;
  for (std::size_t k = 0; k < results.size(); ++k) {
    print_line(static_cast<int>(k + 1), names[k], results[k]);
    all_ok = all_ok && results[k].ok;
  }
  return all_ok ? 0 : 1;
}
