// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when a criterion fails unexpectedly or an --expect-fail criterion passes.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "gincs/combinatorics.hpp"
#include "gincs/graph.hpp"
#include "gincs/hilbert.hpp"
#include "gincs/models.hpp"
#include "gincs/multigrading.hpp"
#include "oracles.hpp"

using namespace gincs;

namespace {

constexpr std::uint64_t kSeed = 1;
constexpr int kSamples = 3;
constexpr std::uint32_t kSecondPrime = 1000003;

// Shared between criteria 1, 2, 3 and 8.
struct GraphRun {
  Graph graph;
  int m;
  Ideal ideal;
  std::optional<MonomialIdeal> gin;
};
std::vector<GraphRun> graph_runs;

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) notes << "; ";
      notes << what;
      ok = false;
    }
  }
};

std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> out;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) out.push_back(Graph::from_mask(n, mask));
  return out;
}

std::string describe(const Graph& g) {
  std::string out = "n=" + std::to_string(g.n()) + " {";
  for (const auto& [a, b] : g.edges()) out += " " + std::to_string(a) + std::to_string(b);
  return out + " }";
}

std::string fixture(const std::string& name) { return std::string(GINCS_FIXTURE_DIR) + "/" + name; }

void criterion_1(Check& c) {
  int matched = 0;
  for (int m : {2, 3}) {
    for (const Graph& g : all_graphs(4)) {
      const Ideal ideal = binomial_edge_ideal(g, m);
      const GinReport r = multigraded_gin(ideal, TermOrder::degrevlex(), 2, kSeed);
      const MonomialIdeal predicted = predict_gin_generators(g, m);
      graph_runs.push_back({g, m, ideal, r.gin});
      if (!r.stable) {
        c.expect(false, "unstable gin for m=" + std::to_string(m) + " mask " + describe(g));
        continue;
      }
      // the prediction is also rebuilt from connected subsets directly
      const MonomialIdeal oracle_ideal(ideal.ring_ptr(), [&] {
        std::vector<Monomial> gens;
        for (const auto& e : oracle::predicted_gin(g, m, ideal.ring())) gens.emplace_back(e);
        return gens;
      }());
      const bool ok = *r.gin == predicted && predicted == oracle_ideal;
      c.expect(ok, "mismatch for m=" + std::to_string(m) + " on " + describe(g));
      matched += ok;
    }
  }
  c.notes << (c.ok ? "" : "; ") << matched << "/128 graphs match";
}

void criterion_2(Check& c) {
  int good = 0;
  for (const GraphRun& run : graph_runs) {
    if (!run.gin) {
      c.expect(false, "no stable gin for " + describe(run.graph));
      continue;
    }
    const bool ok = is_radical_monomial(*run.gin) && is_borel_fixed(*run.gin);
    c.expect(ok, "not radical Borel-fixed: " + describe(run.graph));
    good += ok;
  }
  c.notes << (c.ok ? "" : "; ") << good << "/" << graph_runs.size() << " gins squarefree and Borel-fixed";
}

void criterion_3(Check& c) {
  int gins = 0;
  for (const GraphRun& run : graph_runs) {
    if (!run.gin || !in_brad(*run.gin)) {
      c.expect(false, "gin outside Brad for " + describe(run.graph));
      continue;
    }
    const BoundedMonomialIdeal i = psi_inverse(*run.gin);
    bool bounded = i.bounds() == std::vector<int>(run.graph.n(), run.m);
    for (const auto& e : i.gens())
      for (int a : e) bounded = bounded && a <= run.m;
    c.expect(bounded, "exponent bound broken for " + describe(run.graph));
    c.expect(psi(i, run.gin->ring_ptr()) == *run.gin, "psi(psi^-1 J) != J for " + describe(run.graph));
    c.expect(verify_jande(i, *run.gin), "K identity fails for " + describe(run.graph));
    ++gins;
  }
  std::mt19937_64 rng(2024);
  int roundtrips = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    std::vector<int> bounds(n);
    for (int& b : bounds) b = 1 + static_cast<int>(rng() % 3);
    std::vector<std::vector<int>> gens;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < count; ++k) gens.push_back(oracle::random_exponents(rng, bounds));
    const BoundedMonomialIdeal i(bounds, gens);
    const RingPtr s = make_ring(RingConfig{bounds, kDefaultPrime});
    const MonomialIdeal j = psi(i, s);
    const bool ok = in_brad(j) && psi_inverse(j) == i && verify_jande(i, j);
    c.expect(ok, "random roundtrip fails on " + i.render());
    roundtrips += ok;
  }
  c.notes << (c.ok ? "" : "; ") << gins << " gins, " << roundtrips << "/200 random roundtrips";
}

bool not_cs_with_witness(const CsVerdict& v) {
  return v.status == CsStatus::not_cs && v.witness && !is_radical_monomial(*v.witness);
}

void criterion_4(Check& c) {
  const Ideal obstruction = hypergraph_minor_ideal(obstruction_hypergraph(3, 1, 5), 3);
  c.expect(not_cs_with_witness(check_cs(obstruction, TermOrder::degrevlex(), kSamples, kSeed)),
           "(a) obstruction(3,1,5) not reported NOT_CS");
  const Ideal rows = binomial_edge_ideal(Graph(4, {{1, 2}, {3, 4}}), 2, kDefaultPrime, Grading::rows);
  c.expect(not_cs_with_witness(check_cs(rows, TermOrder::degrevlex(), kSamples, kSeed)),
           "(b) row grading of two edges not reported NOT_CS");
  const Hypergraph four_triples(6, 3, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}, {2, 4, 6}});
  const CsVerdict first = check_cs(hypergraph_minor_ideal(four_triples, 3, kDefaultPrime), TermOrder::degrevlex(), kSamples, kSeed);
  const CsVerdict second = check_cs(hypergraph_minor_ideal(four_triples, 3, kSecondPrime), TermOrder::degrevlex(), kSamples, kSeed);
  c.expect(not_cs_with_witness(first), "(c) NOT_CS missing over 32003");
  c.expect(not_cs_with_witness(second), "(c) NOT_CS missing over 1000003");
  c.expect(first.status == second.status, "(c) primes disagree");
  if (c.ok) c.notes << "(a) (b) (c) NOT_CS, (c) consistent over 32003 and 1000003";
}

void criterion_5(Check& c) {
  const Ideal i = hypergraph_minor_ideal(Hypergraph(5, 3, {{1, 2, 3}, {3, 4, 5}}), 3);
  const CsVerdict v = check_cs(i, TermOrder::degrevlex(), kSamples, kSeed);
  c.expect(v.status == CsStatus::cs_certified, "got " + to_string(v.status));
  if (c.ok) c.notes << "CS_CERTIFIED";
}

void criterion_6(Check& c) {
  int cases = 0;
  for (int n = 2; n <= 4; ++n)
    for (const Graph& g : all_graphs(n))
      for (int m : {2, 3})
        for (const TermOrder& order : {TermOrder::lex(), TermOrder::degrevlex()}) {
          const Ideal full = minors_ideal(m, n, 2);
          const auto family = connected_subsets(g);
          const Ideal j = degree_family_ideal(full, family, order);
          c.expect(ideals_equal(j, binomial_edge_ideal(g, m), order), "ideal differs on " + describe(g));
          std::vector<Monomial> leads;
          for (const auto& subset : family)
            for (const Polynomial& f : component_basis(full, subset, order)) leads.push_back(f.leading_term(order).monomial);
          const MonomialIdeal from_components(full.ring_ptr(), std::move(leads));
          c.expect(initial_ideal(j, order) == from_components, "initial ideal differs on " + describe(g));
          ++cases;
        }
  if (c.ok) c.notes << cases << " cases";
}

void criterion_7(Check& c) {
  const GenericMatrix x(3, 3);
  auto c2 = [&](int j, int k) {
    std::vector<Polynomial> out;
    for (const auto& r : subsets_of_size(3, 2)) out.push_back(minor(x, {r, {std::min(j, k), std::max(j, k)}}));
    return out;
  };
  auto times_column = [&](const std::vector<Polynomial>& minors, int col) {
    std::vector<Polynomial> out;
    for (const Polynomial& p : minors)
      for (int i = 1; i <= 3; ++i) out.push_back(p * x.entry_poly(i, col));
    return out;
  };
  int products = 0;
  const int labelings[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  for (const auto& [j, k, l] : labelings) {
    std::vector<Polynomial> gens = times_column(c2(l, k), j);
    const auto more = times_column(c2(j, l), k);
    gens.insert(gens.end(), more.begin(), more.end());
    const Ideal target(x.ring(), gens);
    for (const Polynomial& f : times_column(c2(j, k), l)) {
      c.expect(ideal_membership(f, target, TermOrder::degrevlex()), "product outside for labeling " +
                                                                       std::to_string(j) + std::to_string(k) +
                                                                       std::to_string(l));
      ++products;
    }
  }
  if (c.ok) c.notes << products << " products over 6 labelings";
}

void criterion_8(Check& c) {
  std::vector<Ideal> ideals;
  for (const GraphRun& run : graph_runs) ideals.push_back(run.ideal);
  ideals.push_back(hypergraph_minor_ideal(Hypergraph(5, 3, {{1, 2, 3}, {3, 4, 5}}), 3));
  std::uint64_t seed = 77;
  for (const Ideal& i : ideals) {
    const KPolynomial lex = k_polynomial(i, TermOrder::lex());
    const KPolynomial drl = k_polynomial(i, TermOrder::degrevlex());
    const KPolynomial moved = k_polynomial(apply_block_change(i, BlockChange::random(i.ring_ptr(), seed++)),
                                           TermOrder::degrevlex());
    c.expect(lex == drl && drl == moved, "K differs across orders or coordinates");
  }
  std::mt19937_64 rng(8);
  int pairs = 0;
  while (pairs < 20) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int m = 2 + static_cast<int>(rng() % 2);
    std::vector<int> side(n);
    for (int& s : side) s = static_cast<int>(rng() % 2);
    std::vector<std::pair<int, int>> left, right;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        if (rng() % 2 || side[a - 1] != side[b - 1]) continue;
        (side[a - 1] ? right : left).emplace_back(a, b);
      }
    if (left.empty() || right.empty()) continue;
    const Ideal i = binomial_edge_ideal(Graph(n, left), m);
    const Ideal j(i.ring_ptr(), binomial_edge_ideal(Graph(n, right), m).gens());
    c.expect(k_multiplicativity_check(i, j, TermOrder::degrevlex()), "multiplicativity fails");
    ++pairs;
  }
  if (c.ok) c.notes << ideals.size() << " ideals, " << pairs << " disjoint pairs";
}

bool classify_agrees(Check& c, const std::string& name, const Hypergraph& h, int m) {
  const ClassifyReport report = classify_hypergraph(h, m);
  if (report.verdict == Classification::unknown) return false;
  const CsVerdict v = check_cs(hypergraph_minor_ideal(h, m), TermOrder::degrevlex(), kSamples, kSeed);
  const bool says_not_cs = report.verdict == Classification::not_cs_by_cycle;
  c.expect(v.status != CsStatus::inconclusive, name + ": check_cs inconclusive");
  c.expect(says_not_cs == (v.status == CsStatus::not_cs),
           name + ": classify " + to_string(report.verdict) + " vs check_cs " + to_string(v.status));
  return true;
}

void criterion_9(Check& c) {
  int decisive = 0;
  for (const auto& entry : std::filesystem::directory_iterator(GINCS_FIXTURE_DIR)) {
    const std::string name = entry.path().filename().string();
    if (name == "single_det.txt" || name == "four_triples.txt") continue;
    const Hypergraph h = read_hypergraph_file(entry.path().string());
    decisive += classify_agrees(c, name, h, h.s());
  }
  const Hypergraph minors = read_hypergraph_file(fixture("clusters_14.txt"));
  c.expect(classify_hypergraph(minors, 3).verdict == Classification::cs_by_forest, "clusters_14 not CS_BY_FOREST");
  for (const auto& [m, t, n] : {std::tuple{3, 1, 5}, std::tuple{3, 2, 7}, std::tuple{3, 3, 9},
                                std::tuple{4, 1, 7}}) {
    const Hypergraph h = obstruction_hypergraph(m, t, n);
    const std::string name = "obstruction(" + std::to_string(m) + "," + std::to_string(t) + "," + std::to_string(n) + ")";
    c.expect(classify_hypergraph(h, m).verdict == Classification::not_cs_by_cycle, name + " not NOT_CS_BY_CYCLE");
    decisive += classify_agrees(c, name, h, m);
  }
  for (const auto& [n, s, m] : {std::tuple{4, 2, 2}, std::tuple{4, 2, 3}, std::tuple{5, 2, 3}, std::tuple{4, 3, 3},
                                std::tuple{5, 3, 3}, std::tuple{5, 4, 4}, std::tuple{3, 3, 4}}) {
    const Hypergraph h = Hypergraph::complete(n, s);
    const std::string name = "complete(" + std::to_string(n) + "," + std::to_string(s) + "), m=" + std::to_string(m);
    c.expect(classify_hypergraph(h, m).verdict == Classification::cs_maximal_minors, name + " not CS_MAXIMAL_MINORS");
    decisive += classify_agrees(c, name, h, m);
  }
  const Hypergraph four_triples = read_hypergraph_file(fixture("four_triples.txt"));
  const ClassifyReport r = classify_hypergraph(four_triples, 3);
  c.expect(r.verdict == Classification::unknown,
           "four_triples: expected UNKNOWN, got " + to_string(r.verdict) +
               " (its four minors form a regular sequence whose supports carry a non-constant label cycle)");
  decisive += classify_agrees(c, "four_triples.txt", four_triples, 3);
  c.notes << (c.ok ? "" : "; ") << decisive << " decisive verdicts checked";
}

void criterion_10(Check& c) {
  const GenericMatrix x(3, 7);
  const std::vector<Polynomial> gens{minor(x, {{1, 2, 3}, {1, 2, 3}}), minor(x, {{1, 2, 3}, {3, 4, 5}}),
                                     minor(x, {{1, 2, 3}, {5, 6, 7}})};
  c.expect(lead_coprime_regular_sequence(gens, TermOrder::lex()), "leading terms not pairwise coprime");
  const int codim = codimension(initial_ideal(Ideal(x.ring(), gens), TermOrder::lex()));
  c.expect(codim == 3, "codimension " + std::to_string(codim));
  if (c.ok) c.notes << "lead coprime, codimension 3";
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--expect-fail" && k + 1 < argc) {
      expect_fail.insert(std::atoi(argv[++k]));
    } else {
      std::cerr << "usage: gincs_acceptance [--expect-fail N]...\n";
      return 2;
    }
  }

  const std::vector<std::function<void(Check&)>> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                          criterion_5, criterion_6, criterion_7, criterion_8,
                                                          criterion_9, criterion_10};
  int unexpected = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k](c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool expected = expect_fail.contains(id);
    std::cout << "criterion " << id << ": " << (c.ok ? "PASS" : "FAIL") << " (" << std::fixed
              << std::setprecision(2) << seconds << " s) " << c.notes.str();
    if (expected) std::cout << (c.ok ? " [expected FAIL, unexpectedly passed]" : " [expected FAIL]");
    std::cout << "\n" << std::flush;
    if (c.ok == expected) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
