#pragma once

// Command-line front end. Every subcommand reads a graph JSON file ("-" for
// stdin), prints a single JSON object on stdout, and keeps diagnostics on
// stderr. Exit codes: 0 ok, 1 parse/usage error, 2 oracle disagreement (with
// a minimized counterexample dumped to stderr).

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcrigid/balance.hpp"
#include "lcrigid/count.hpp"
#include "lcrigid/cover.hpp"
#include "lcrigid/generators.hpp"
#include "lcrigid/graph.hpp"
#include "lcrigid/io.hpp"
#include "lcrigid/pebble.hpp"
#include "lcrigid/random_graphs.hpp"
#include "lcrigid/realization.hpp"

namespace lcrigid {

namespace detail {

inline LoopedSimpleGraph loadGraph(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return parseGraph(buf.str());
}

// Greedy shrink: drop elements, then isolated vertices, while the failure
// predicate keeps holding.
template <typename Pred>
LoopedSimpleGraph minimizeCounterexample(LoopedSimpleGraph g, Pred&& fails) {
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (Element e : g.allElements()) {
      LoopedSimpleGraph candidate = g.deleteElements(ElementSet({e}));
      if (fails(candidate)) {
        g = std::move(candidate);
        shrunk = true;
        break;
      }
    }
  }
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (int v = 0; v < g.vertexCount(); ++v) {
      if (!g.neighbors(v).empty() || g.loopsAt(v) > 0) continue;
      LoopedSimpleGraph candidate = g.deleteVertices({v});
      if (fails(candidate)) {
        g = std::move(candidate);
        shrunk = true;
        break;
      }
    }
  }
  return g;
}

struct VerifyOutcome {
  int pebble = 0;
  int brute = 0;
  int restricted = 0;
  int numeric = 0;
  int minCoverValue = 0;
  bool coverAdmissible = false;
  bool ok = false;
};

inline VerifyOutcome crossCheck(const LoopedSimpleGraph& g, std::uint64_t numericSeed,
                                int bound) {
  VerifyOutcome o;
  o.pebble = pebbleRank(g);
  o.brute = rankBruteForce(g, g.allElements(), bound).rank;
  o.restricted = rankBruteForceRestricted(g, g.allElements(), bound).rank;
  o.numeric = numericRank(g, numericSeed, 3);
  const MinCoverResult mc = minCover(g, bound);
  o.minCoverValue = mc.value;
  o.coverAdmissible =
      isAdmissibleThin(g, mc.cover, 1) && coverValue(mc.cover) == mc.value;
  o.ok = o.pebble == o.brute && o.pebble == o.restricted && o.pebble == o.numeric &&
         o.pebble == o.minCoverValue && o.coverAdmissible;
  return o;
}

inline nlohmann::json outcomeJson(const LoopedSimpleGraph& g, const VerifyOutcome& o) {
  return nlohmann::json{{"graph", graphToJson(g)},
                        {"pebble", o.pebble},
                        {"brute", o.brute},
                        {"restricted", o.restricted},
                        {"numeric", o.numeric},
                        {"min_cover", o.minCoverValue},
                        {"cover_admissible", o.coverAdmissible}};
}

}  // namespace detail

inline int runCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                  std::ostream& err) {
  CLI::App app{"rank and rigidity of looped simple graphs as linearly constrained "
               "plane frameworks"};
  app.require_subcommand(1);

  std::string file = "-";
  bool withBrute = false, withNumeric = false, withCertificate = false;
  std::uint64_t seed = 1;
  int trials = 3;
  int bound = 12;
  std::uint64_t shuffleSeed = 0;

  auto* rankCmd = app.add_subcommand("rank", "rank of E ∪ L via the pebble game");
  rankCmd->add_option("file", file, "graph JSON file, - for stdin")->required();
  rankCmd->add_flag("--brute", withBrute, "also run the partition-minimum oracle");
  rankCmd->add_flag("--numeric", withNumeric, "also run the rigidity-matrix rank");
  rankCmd->add_flag("--certificate", withCertificate, "include certificates in the output");
  rankCmd->add_option("--seed", seed, "seed for --numeric");
  rankCmd->add_option("--trials", trials, "trials for --numeric");
  rankCmd->add_option("--bound", bound, "element bound for --brute");
  rankCmd->add_option("--shuffle", shuffleSeed, "offer elements in seeded shuffled order");

  auto* rigidCmd = app.add_subcommand("rigid", "spanning-tight-subgraph rigidity test");
  rigidCmd->add_option("file", file)->required();

  auto* indepCmd =
      app.add_subcommand("independent", "is E ∪ L independent (graded-sparse)?");
  indepCmd->add_option("file", file)->required();
  indepCmd->add_flag("--brute", withBrute, "use the exhaustive subset oracle");

  auto* coverCmd = app.add_subcommand("cover", "minimizing admissible 1-thin cover");
  coverCmd->add_option("file", file)->required();
  bool exact = false;
  coverCmd->add_flag("--exact", exact, "exact minimization (the only mode)");
  coverCmd->add_option("--bound", bound, "element bound for the search");

  auto* balancedCmd = app.add_subcommand("balanced", "k-balancedness check");
  balancedCmd->add_option("file", file)->required();
  int k = 0;
  balancedCmd->add_option("-k,--k", k, "balance parameter")->required();

  auto* matrixCmd = app.add_subcommand("matrix-rank", "randomized rigidity-matrix rank");
  matrixCmd->add_option("file", file)->required();
  matrixCmd->add_option("--seed", seed, "realization seed");
  matrixCmd->add_option("--trials", trials, "number of random realizations");
  std::string dumpPath;
  matrixCmd->add_option("--dump-matrix", dumpPath, "write the first realization's matrix CSV here");

  auto* genCmd = app.add_subcommand("gen", "emit a named example graph");
  std::string genName;
  genCmd->add_option("name", genName, "kn | figure1-left | figure1-middle | figure1-right | ring-of-k5")
      ->required();
  int genN = 0;
  genCmd->add_option("n", genN, "vertex count (kn only)");
  int genLoops = 0;
  genCmd->add_option("--loops", genLoops, "one loop on each of the first n vertices (kn only)");
  bool asDot = false;
  genCmd->add_flag("--dot", asDot, "emit DOT instead of JSON");

  auto* verifyCmd = app.add_subcommand("verify", "cross-oracle random test suite");
  int maxN = 6, maxElements = 10, samples = 200;
  verifyCmd->add_option("--max-n", maxN, "max vertices per sample");
  verifyCmd->add_option("--max-elements", maxElements, "max elements per sample");
  verifyCmd->add_option("--samples", samples, "number of sampled graphs");
  verifyCmd->add_option("--seed", seed, "sampling seed");

  std::vector<const char*> argv;
  argv.push_back("lcrigid");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(rankCmd)) {
      const LoopedSimpleGraph g = detail::loadGraph(file, in);
      std::vector<Element> order = g.allElements().items();
      if (rankCmd->count("--shuffle") > 0) {
        std::mt19937_64 rng(shuffleSeed);
        std::shuffle(order.begin(), order.end(), rng);
      }
      const PebbleRun run = runPebbleGame(g, order);
      nlohmann::json doc{{"rank", run.rank}};
      if (withCertificate) doc["certificate"] = elementSetToJson(g, run.basis);
      bool disagree = false;
      if (withBrute) {
        const RankCertificate cert = rankBruteForce(g, g.allElements(), bound);
        doc["brute_rank"] = cert.rank;
        if (withCertificate) doc["brute_certificate"] = certificateToJson(g, cert);
        disagree = disagree || cert.rank != run.rank;
      }
      if (withNumeric) {
        const int nr = numericRank(g, seed, trials);
        doc["numeric_rank"] = nr;
        disagree = disagree || nr != run.rank;
      }
      out << doc.dump() << "\n";
      if (disagree) {
        const auto fails = [&](const LoopedSimpleGraph& h) {
          const int p = pebbleRank(h);
          if (withBrute && h.elementCount() <= bound &&
              rankBruteForce(h, h.allElements(), bound).rank != p)
            return true;
          return withNumeric && numericRank(h, seed, trials) != p;
        };
        err << "oracle disagreement; minimized counterexample:\n"
            << graphToJson(detail::minimizeCounterexample(g, fails)).dump() << "\n";
        return 2;
      }
      return 0;
    }

    if (app.got_subcommand(rigidCmd)) {
      const LoopedSimpleGraph g = detail::loadGraph(file, in);
      const auto tight = tightSpanningSubgraph(g);
      nlohmann::json doc{{"rigid", tight.has_value()}};
      doc["tight_subgraph"] = tight ? elementSetToJson(g, *tight) : nlohmann::json(nullptr);
      out << doc.dump() << "\n";
      return 0;
    }

    if (app.got_subcommand(indepCmd)) {
      const LoopedSimpleGraph g = detail::loadGraph(file, in);
      const bool independent = withBrute ? isGradedSparse(g)
                                         : pebbleRank(g) == g.elementCount();
      out << nlohmann::json{{"independent", independent}}.dump() << "\n";
      return 0;
    }

    if (app.got_subcommand(coverCmd)) {
      const LoopedSimpleGraph g = detail::loadGraph(file, in);
      const MinCoverResult mc = minCover(g, bound);
      out << nlohmann::json{{"value", mc.value}, {"cover", coverToJson(g, mc.cover)}}.dump()
          << "\n";
      return 0;
    }

    if (app.got_subcommand(balancedCmd)) {
      const LoopedSimpleGraph g = detail::loadGraph(file, in);
      out << balanceReportToJson(g, isKBalanced(g, k)).dump() << "\n";
      return 0;
    }

    if (app.got_subcommand(matrixCmd)) {
      const LoopedSimpleGraph g = detail::loadGraph(file, in);
      if (!dumpPath.empty()) {
        std::mt19937_64 rng(seed);
        const RigidityMatrix m = buildMatrix(g, Realization::random(g, rng));
        std::ofstream dump(dumpPath);
        if (!dump) throw std::invalid_argument("cannot open '" + dumpPath + "'");
        dump << matrixCsv(m);
      }
      out << nlohmann::json{{"numeric_rank", numericRank(g, seed, trials)}}.dump() << "\n";
      return 0;
    }

    if (app.got_subcommand(genCmd)) {
      LoopedSimpleGraph g;
      if (genName == "kn") {
        if (genN <= 0) throw std::invalid_argument("gen kn: give a positive vertex count");
        g = genCompleteWithLoops(genN, genLoops);
      } else if (genName == "figure1-left") {
        g = genFigure1Left();
      } else if (genName == "figure1-middle") {
        g = genFigure1Middle();
      } else if (genName == "figure1-right") {
        g = genFigure1Right();
      } else if (genName == "ring-of-k5") {
        g = genRingOfK5();
      } else {
        throw std::invalid_argument("unknown generator '" + genName + "'");
      }
      if (asDot)
        out << toDot(g);
      else
        out << serializeGraph(g) << "\n";
      return 0;
    }

    if (app.got_subcommand(verifyCmd)) {
      std::mt19937_64 rng(seed);
      for (int i = 0; i < samples; ++i) {
        const LoopedSimpleGraph g = randomLoopedGraph(rng, maxN, maxElements);
        const std::uint64_t numericSeed = rng();
        const detail::VerifyOutcome o = detail::crossCheck(g, numericSeed, bound);
        if (!o.ok) {
          const auto fails = [&](const LoopedSimpleGraph& h) {
            return !detail::crossCheck(h, numericSeed, bound).ok;
          };
          const LoopedSimpleGraph small = detail::minimizeCounterexample(g, fails);
          err << "oracle disagreement; minimized counterexample:\n"
              << detail::outcomeJson(small, detail::crossCheck(small, numericSeed, bound))
                     .dump()
              << "\n";
          out << nlohmann::json{{"samples", samples}, {"passed", i}, {"failed", 1}}.dump()
              << "\n";
          return 2;
        }
      }
      out << nlohmann::json{{"samples", samples}, {"passed", samples}, {"failed", 0}}.dump()
          << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace lcrigid
