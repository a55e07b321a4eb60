#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gincs/errors.hpp"
#include "gincs/models.hpp"
#include "gincs/parse.hpp"

namespace gincs::cli {

namespace {

struct Instance {
  Json description;
  Ideal ideal;
};

Deadline deadline_for(const RunConfig& config) {
  return Deadline::after(std::chrono::milliseconds(static_cast<std::int64_t>(config.timeout_s * 1000)));
}

int sources(const RunConfig& c) {
  return !c.graph_file.empty() + !c.hypergraph_file.empty() + !c.gens_file.empty() + (c.all_graphs > 0);
}

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  parts.erase(std::remove_if(parts.begin(), parts.end(),
                             [](const std::string& p) { return p.find_first_not_of(" \t") == std::string::npos; }),
              parts.end());
  return parts;
}

std::optional<RingConfig> ring_from_flags(const RunConfig& c, std::uint32_t prime) {
  if (!c.blocks.empty()) return RingConfig{c.blocks, prime};
  if (c.cols > 0 && c.rows > 0) return RingConfig::uniform(c.cols, c.rows, prime);
  return std::nullopt;
}

int graph_rows(const RunConfig& c) { return c.rows > 0 ? c.rows : 2; }

std::vector<Instance> load_instances(const RunConfig& c, std::uint32_t prime) {
  const Grading grading = parse_grading(c.grading);
  std::vector<Instance> out;
  if (c.all_graphs > 0) {
    const int n = c.all_graphs;
    const int pairs = n * (n - 1) / 2;
    if (pairs > 20) throw std::invalid_argument("--all-graphs supports at most 7 vertices");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = Graph::from_mask(n, mask);
      out.push_back({Json{{"kind", "graph"}, {"mask", mask}, {"graph", to_json(g.as_hypergraph())}},
                     binomial_edge_ideal(g, graph_rows(c), prime, grading)});
    }
  } else if (!c.graph_file.empty()) {
    const Graph g = read_graph_file(c.graph_file);
    out.push_back({Json{{"kind", "graph"}, {"path", c.graph_file}, {"graph", to_json(g.as_hypergraph())}},
                   binomial_edge_ideal(g, graph_rows(c), prime, grading)});
  } else if (!c.hypergraph_file.empty()) {
    const Hypergraph h = read_hypergraph_file(c.hypergraph_file);
    const int m = c.rows > 0 ? c.rows : h.s();
    out.push_back({Json{{"kind", "hypergraph"}, {"path", c.hypergraph_file}, {"hypergraph", to_json(h)}},
                   hypergraph_minor_ideal(h, m, prime, grading)});
  } else {
    RunConfig with_prime = c;
    with_prime.prime = prime;
    Ideal ideal = read_gens_file(c.gens_file, with_prime);
    Json gens = Json::array();
    for (const Polynomial& f : ideal.gens()) gens.push_back(f.render());
    out.push_back({Json{{"kind", "gens"}, {"path", c.gens_file}, {"blocks", ideal.ring().config().blocks},
                        {"generators", std::move(gens)}},
                   std::move(ideal)});
  }
  return out;
}

// Runs `job` over the instances on a small worker pool; results keep
// instance order.
template <typename Job>
std::vector<Json> run_all(const std::vector<Instance>& instances, Job job) {
  std::vector<Json> results(instances.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), instances.size()));
  if (workers == 1) {
    for (std::size_t k = 0; k < instances.size(); ++k) results[k] = job(instances[k]);
    return results;
  }
  std::vector<std::future<void>> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < instances.size(); k += workers) results[k] = job(instances[k]);
    }));
  for (auto& f : pool) f.get();
  return results;
}

Json single_or_list(const RunConfig& c, std::vector<Json> items) {
  if (c.all_graphs > 0) return Json{{"instances", std::move(items)}};
  return std::move(items.front());
}

void require_one_source(const RunConfig& c) {
  if (sources(c) != 1) throw std::invalid_argument("give exactly one of --graph, --hypergraph, --gens, --all-graphs");
}

int worst(int a, int b) {
  auto rank = [](int code) {
    switch (code) {
      case kExitOk: return 0;
      case kExitNotCs: return 1;
      default: return 2;
    }
  };
  return rank(a) >= rank(b) ? a : b;
}

int exit_for(CsStatus s) {
  switch (s) {
    case CsStatus::cs_certified: return kExitOk;
    case CsStatus::not_cs: return kExitNotCs;
    case CsStatus::inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

MonomialIdeal parse_monomial_ideal(const std::string& text, const RingPtr& ring) {
  std::vector<Monomial> gens;
  for (const std::string& part : split_top_level(text)) {
    const Polynomial f = parse_polynomial(part, ring);
    if (f.size() != 1) throw std::invalid_argument("'" + part + "' is not a monomial");
    gens.push_back(f.terms().front().monomial);
  }
  return MonomialIdeal(ring, std::move(gens));
}

}  // namespace

void RunConfig::validate() const {
  if (!is_prime(prime) || prime == 2 || prime >= (1u << 31)) throw std::invalid_argument("--prime must be an odd prime below 2^31");
  if (cross_check_prime) {
    if (!is_prime(*cross_check_prime) || *cross_check_prime == 2 || *cross_check_prime >= (1u << 31))
      throw std::invalid_argument("--cross-check-prime must be an odd prime below 2^31");
    if (*cross_check_prime == prime) throw std::invalid_argument("--cross-check-prime must differ from --prime");
  }
  TermOrder::parse(order);
  parse_grading(grading);
  if (samples < 1) throw std::invalid_argument("--samples must be positive");
  if (timeout_s <= 0) throw std::invalid_argument("--timeout must be positive");
  if (rows < 0 || cols < 0) throw std::invalid_argument("--rows and --cols must be non-negative");
  if (all_graphs < 0) throw std::invalid_argument("--all-graphs must be non-negative");
  if (sources(*this) > 1) throw std::invalid_argument("give at most one of --graph, --hypergraph, --gens, --all-graphs");
  if (!blocks.empty()) RingConfig{blocks, prime}.validate();
}

Json RunConfig::to_json() const {
  auto opt = [](const std::string& s) { return s.empty() ? Json(nullptr) : Json(s); };
  return Json{{"graph", opt(graph_file)},
              {"hypergraph", opt(hypergraph_file)},
              {"gens", opt(gens_file)},
              {"all_graphs", all_graphs > 0 ? Json(all_graphs) : Json(nullptr)},
              {"rows", rows > 0 ? Json(rows) : Json(nullptr)},
              {"cols", cols > 0 ? Json(cols) : Json(nullptr)},
              {"blocks", blocks.empty() ? Json(nullptr) : Json(blocks)},
              {"prime", prime},
              {"cross_check_prime", cross_check_prime ? Json(*cross_check_prime) : Json(nullptr)},
              {"order", TermOrder::parse(order).name()},
              {"grading", grading},
              {"samples", samples},
              {"seed", seed},
              {"timeout_s", timeout_s},
              {"verify", verify},
              {"inverse", inverse},
              {"t_ideal", opt(t_ideal)},
              {"s_ideal", opt(s_ideal)}};
}

Ideal read_gens_file(const std::string& path, const RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::optional<RingConfig> ring_config = ring_from_flags(config, config.prime);
  std::vector<std::pair<int, std::string>> lines;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "blocks") {
      std::vector<int> blocks;
      for (int b; ls >> b;) blocks.push_back(b);
      if (!ring_config) ring_config = RingConfig{blocks, config.prime};
      continue;
    }
    lines.emplace_back(line_no, line);
  }
  if (!ring_config) {
    std::vector<int> blocks;
    static const std::regex var(R"(x\[\s*(\d+)\s*,\s*(\d+)\s*\])");
    for (const auto& [no, text] : lines)
      for (std::sregex_iterator it(text.begin(), text.end(), var), end; it != end; ++it) {
        const int row = std::stoi((*it)[1]);
        const int col = std::stoi((*it)[2]);
        if (col < 1 || row < 1) throw std::invalid_argument(path + ":" + std::to_string(no) + ": bad variable index");
        if (static_cast<int>(blocks.size()) < col) blocks.resize(col, 1);
        blocks[col - 1] = std::max(blocks[col - 1], row);
      }
    if (blocks.empty()) throw std::invalid_argument(path + ": no variables and no ring given");
    ring_config = RingConfig{blocks, config.prime};
  }
  const RingPtr ring = make_ring(*ring_config);
  std::vector<Polynomial> gens;
  for (const auto& [no, text] : lines) {
    try {
      gens.push_back(parse_polynomial(text, ring));
    } catch (const std::exception& e) {
      throw std::invalid_argument(path + ":" + std::to_string(no) + ": " + e.what());
    }
  }
  return Ideal(ring, std::move(gens));
}

Outcome cmd_gin(const RunConfig& c) {
  require_one_source(c);
  const TermOrder order = TermOrder::parse(c.order);
  const Deadline deadline = deadline_for(c);
  const auto instances = load_instances(c, c.prime);
  int code = kExitOk;
  int stable = 0;
  auto items = run_all(instances, [&](const Instance& inst) {
    const GinReport r = multigraded_gin(inst.ideal, order, c.samples, c.seed, deadline);
    return Json{{"instance", inst.description}, {"report", to_json(r)}};
  });
  for (const Json& item : items) {
    if (item["report"]["stable"].get<bool>()) ++stable;
    else code = kExitInconclusive;
  }
  Outcome out{single_or_list(c, std::move(items)), code, {}};
  out.summary = std::to_string(stable) + "/" + std::to_string(instances.size()) + " instances with a stable gin";
  return out;
}

Outcome cmd_check_cs(const RunConfig& c) {
  require_one_source(c);
  const TermOrder order = TermOrder::parse(c.order);
  const Deadline deadline = deadline_for(c);
  const auto instances = load_instances(c, c.prime);
  std::vector<Instance> cross;
  if (c.cross_check_prime) cross = load_instances(c, *c.cross_check_prime);

  std::vector<Instance> indexed;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    Instance inst = instances[k];
    inst.description["index"] = k;
    indexed.push_back(std::move(inst));
  }
  auto items = run_all(indexed, [&](const Instance& inst) {
    const CsVerdict v = check_cs(inst.ideal, order, c.samples, c.seed, deadline);
    Json item{{"instance", inst.description}, {"status", to_string(v.status)}, {"exit", exit_for(v.status)},
              {"verdict", to_json(v)}};
    if (c.cross_check_prime) {
      const std::size_t k = inst.description["index"].get<std::size_t>();
      const CsVerdict w = check_cs(cross[k].ideal, order, c.samples, c.seed, deadline);
      item["cross_check"] = to_json(w);
      item["consistent"] = w.status == v.status;
    }
    item["instance"].erase("index");
    return item;
  });
  int code = kExitOk;
  int counts[3] = {0, 0, 0};
  for (const Json& item : items) {
    int e = item["exit"].get<int>();
    if (item.contains("consistent") && !item["consistent"].get<bool>()) e = kExitInconclusive;
    ++counts[e == kExitOk ? 0 : e == kExitNotCs ? 1 : 2];
    code = worst(code, e);
  }
  Outcome out{single_or_list(c, std::move(items)), code, {}};
  if (instances.size() == 1) {
    out.summary = out.result["status"].get<std::string>();
    if (out.result.contains("consistent"))
      out.summary += out.result["consistent"].get<bool>() ? " (consistent across primes)" : " (primes disagree)";
  } else {
    out.summary = std::to_string(counts[0]) + " CS_CERTIFIED, " + std::to_string(counts[1]) + " NOT_CS, " +
                  std::to_string(counts[2]) + " INCONCLUSIVE";
  }
  return out;
}

Outcome cmd_predict(const RunConfig& c) {
  if (c.graph_file.empty() == (c.all_graphs == 0)) throw std::invalid_argument("predict needs --graph or --all-graphs");
  if (c.verify && c.grading != "columns") throw std::invalid_argument("predict --verify needs column grading");
  const int m = graph_rows(c);
  const TermOrder order = TermOrder::parse(c.order);
  const Deadline deadline = deadline_for(c);
  std::vector<Graph> graphs;
  if (c.all_graphs > 0) {
    const int pairs = c.all_graphs * (c.all_graphs - 1) / 2;
    if (pairs > 20) throw std::invalid_argument("--all-graphs supports at most 7 vertices");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
      graphs.push_back(Graph::from_mask(c.all_graphs, mask));
  } else {
    graphs.push_back(read_graph_file(c.graph_file));
  }
  std::vector<Instance> instances;
  for (const Graph& g : graphs)
    instances.push_back({Json{{"kind", "graph"}, {"graph", to_json(g.as_hypergraph())}},
                         binomial_edge_ideal(g, m, c.prime)});
  if (c.all_graphs == 0) instances.front().description["path"] = c.graph_file;

  int code = kExitOk;
  int matches = 0;
  auto items = run_all(instances, [&](const Instance& inst) {
    const auto& edges = inst.description["graph"]["edges"];
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : edges) pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    const Graph g(inst.description["graph"]["n"].get<int>(), std::move(pairs));
    const MonomialIdeal predicted = predict_gin_generators(g, m, c.prime);
    Json item{{"instance", inst.description}, {"rows", m}, {"predicted", to_json(predicted)}};
    if (c.verify) {
      const GinReport r = multigraded_gin(inst.ideal, order, c.samples, c.seed, deadline);
      item["gin"] = to_json(r);
      item["match"] = !r.stable ? "UNSTABLE" : *r.gin == predicted ? "MATCH" : "MISMATCH";
    }
    return item;
  });
  bool mismatch = false;
  for (const Json& item : items) {
    if (!item.contains("match")) continue;
    const std::string verdict = item["match"];
    if (verdict == "MATCH") ++matches;
    else if (verdict == "MISMATCH") mismatch = true;
    else code = kExitInconclusive;
  }
  if (mismatch) code = kExitMismatch;
  Outcome out{single_or_list(c, std::move(items)), code, {}};
  if (c.verify) out.summary = std::to_string(matches) + "/" + std::to_string(instances.size()) + " MATCH";
  else if (c.all_graphs == 0) out.summary = out.result["predicted"]["rendered"];
  else out.summary = std::to_string(instances.size()) + " predictions";
  return out;
}

Outcome cmd_classify(const RunConfig& c) {
  if (c.hypergraph_file.empty()) throw std::invalid_argument("classify needs --hypergraph");
  const Hypergraph h = read_hypergraph_file(c.hypergraph_file);
  const int m = c.rows > 0 ? c.rows : h.s();
  const Deadline deadline = deadline_for(c);
  const ClassifyReport report = classify_hypergraph(h, m, c.prime, deadline);
  Outcome out;
  out.result = Json{{"instance", Json{{"kind", "hypergraph"}, {"path", c.hypergraph_file}, {"hypergraph", to_json(h)}}},
                    {"rows", m}};
  out.result["classification"] = to_json(report);
  out.summary = to_string(report.verdict);
  if (c.verify) {
    const bool decisive = report.verdict != Classification::unknown;
    const CsVerdict v =
        check_cs(hypergraph_minor_ideal(h, m, c.prime), TermOrder::parse(c.order), c.samples, c.seed, deadline);
    std::optional<bool> agrees;
    if (decisive && v.status != CsStatus::inconclusive)
      agrees = (report.verdict == Classification::not_cs_by_cycle) == (v.status == CsStatus::not_cs);
    out.result["verification"] = Json{{"check_cs", to_json(v)}, {"decisive", decisive},
                                      {"agrees", agrees ? Json(*agrees) : Json(nullptr)}};
    out.summary += ", check_cs " + to_string(v.status);
    if (agrees && !*agrees) out.exit_code = kExitMismatch;
  }
  return out;
}

Outcome cmd_kpoly(const RunConfig& c) {
  require_one_source(c);
  const TermOrder order = TermOrder::parse(c.order);
  const Deadline deadline = deadline_for(c);
  const auto instances = load_instances(c, c.prime);
  auto items = run_all(instances, [&](const Instance& inst) {
    const MonomialIdeal in = initial_ideal(inst.ideal, order, deadline);
    return Json{{"instance", inst.description}, {"initial_ideal", to_json(in)},
                {"k_polynomial", to_json(k_polynomial_monomial(in))}};
  });
  Outcome out{single_or_list(c, std::move(items)), kExitOk, {}};
  out.summary = c.all_graphs > 0 ? std::to_string(instances.size()) + " K-polynomials"
                                 : out.result["k_polynomial"]["rendered"].get<std::string>();
  return out;
}

Outcome cmd_psi(const RunConfig& c) {
  Outcome out;
  if (!c.inverse) {
    if (c.t_ideal.empty()) throw std::invalid_argument("psi needs --t-ideal (or --inverse with --s-ideal)");
    if (c.blocks.empty()) throw std::invalid_argument("psi needs --bounds");
    const int n = static_cast<int>(c.blocks.size());
    std::vector<std::vector<int>> gens;
    for (const std::string& part : split_top_level(c.t_ideal)) gens.push_back(parse_t_monomial(part, n));
    const BoundedMonomialIdeal i(c.blocks, std::move(gens));
    const RingPtr s = make_ring(RingConfig{c.blocks, c.prime});
    const MonomialIdeal j = psi(i, s);
    const bool roundtrip = psi_inverse(j) == i;
    const bool jande = verify_jande(i, j);
    out.result = Json{{"t_ideal", to_json(i)},
                      {"psi", to_json(j)},
                      {"in_brad", in_brad(j)},
                      {"roundtrip", roundtrip},
                      {"k_of_t_ideal", to_json(k_polynomial_of_ideal(i))},
                      {"k_of_quotient", to_json(k_polynomial_monomial(j))},
                      {"jande", jande}};
    out.exit_code = roundtrip && jande ? kExitOk : kExitMismatch;
    out.summary = "psi" + i.render() + " = " + j.render() + (roundtrip ? ", roundtrip OK" : ", roundtrip FAILED");
    return out;
  }
  if (c.s_ideal.empty()) throw std::invalid_argument("psi --inverse needs --s-ideal");
  const auto ring_config = ring_from_flags(c, c.prime);
  if (!ring_config) throw std::invalid_argument("psi --inverse needs --blocks or --cols with --rows");
  const RingPtr ring = make_ring(*ring_config);
  const MonomialIdeal j = parse_monomial_ideal(c.s_ideal, ring);
  const bool radical = is_radical_monomial(j);
  const bool borel = radical && is_borel_fixed(j);
  out.result = Json{{"s_ideal", to_json(j)}, {"radical", radical}, {"borel_fixed", radical ? Json(borel) : Json(nullptr)},
                    {"in_brad", borel}};
  if (!borel) {
    out.exit_code = kExitNotBrad;
    out.summary = j.render() + " is not in Brad(S)";
    return out;
  }
  const BoundedMonomialIdeal i = psi_inverse(j);
  const bool roundtrip = psi(i, ring) == j;
  const bool jande = verify_jande(i, j);
  out.result["psi_inverse"] = to_json(i);
  out.result["roundtrip"] = roundtrip;
  out.result["k_of_t_ideal"] = to_json(k_polynomial_of_ideal(i));
  out.result["k_of_quotient"] = to_json(k_polynomial_monomial(j));
  out.result["jande"] = jande;
  out.exit_code = roundtrip && jande ? kExitOk : kExitMismatch;
  out.summary = "psi^-1" + j.render() + " = " + i.render();
  return out;
}

}  // namespace gincs::cli
