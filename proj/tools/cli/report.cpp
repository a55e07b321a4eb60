#include "report.hpp"

namespace gincs::cli {

Json to_json(const Monomial& m, const Ring& ring) {
  Json out = Json::array();
  for (int v : m.support()) {
    const Variable x = ring.variable(v);
    for (int e = 0; e < m[v]; ++e) out.push_back({x.row, x.col});
  }
  return out;
}

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const Monomial& g : ideal.gens()) gens.push_back(to_json(g, ideal.ring()));
  return Json{{"rendered", ideal.render()}, {"generators", std::move(gens)}};
}

Json to_json(const KPolynomial& k) {
  Json terms = Json::array();
  for (const auto& [e, c] : k.terms()) terms.push_back(Json{{"exponents", e}, {"coeff", c}});
  return Json{{"rendered", k.render()}, {"terms", std::move(terms)}};
}

Json to_json(const BoundedMonomialIdeal& ideal) {
  return Json{{"rendered", ideal.render()}, {"bounds", ideal.bounds()}, {"generators", ideal.gens()}};
}

Json to_json(const GinReport& report) {
  Json samples = Json::array();
  for (int k = 0; k < report.samples(); ++k) {
    const MonomialIdeal& in = report.per_sample[k];
    samples.push_back(Json{{"seed", report.sample_seeds[k]},
                           {"complete", static_cast<bool>(report.complete[k])},
                           {"squarefree", is_radical_monomial(in)},
                           {"initial_ideal", to_json(in)}});
  }
  Json out{{"prime", report.prime}, {"order", report.order}, {"seed", report.seed}, {"stable", report.stable}};
  if (report.gin) {
    out["gin"] = to_json(*report.gin);
    out["gin_squarefree"] = is_radical_monomial(*report.gin);
    out["gin_borel_fixed"] = is_radical_monomial(*report.gin) ? Json(is_borel_fixed(*report.gin)) : Json(nullptr);
  } else {
    out["gin"] = nullptr;
  }
  out["samples"] = std::move(samples);
  return out;
}

Json to_json(const CsVerdict& verdict) {
  Json out{{"status", to_string(verdict.status)}, {"prime", verdict.prime}};
  out["reason"] = verdict.reason.empty() ? Json(nullptr) : Json(verdict.reason);
  out["witness_seed"] = verdict.witness_seed ? Json(*verdict.witness_seed) : Json(nullptr);
  out["witness"] = verdict.witness ? to_json(*verdict.witness) : Json(nullptr);
  out["witness_complete"] = verdict.witness ? Json(verdict.witness_complete) : Json(nullptr);
  out["gin"] = to_json(verdict.report);
  return out;
}

Json to_json(const LabelCycle& cycle) { return Json{{"vertices", cycle.vertices}, {"labels", cycle.labels}}; }

Json to_json(const ForestTrace& trace) {
  Json steps = Json::array();
  for (const ForestStep& s : trace.steps)
    steps.push_back(Json{{"clique", s.clique},
                         {"shared_vertex", s.shared_vertex ? Json(*s.shared_vertex) : Json(nullptr)}});
  return Json{{"steps", std::move(steps)}, {"base", trace.base}};
}

Json to_json(const ClassifyReport& report) {
  Json out{{"classification", to_string(report.verdict)}, {"reason", report.reason}};
  out["forest"] = report.forest ? to_json(*report.forest) : Json(nullptr);
  out["label_cycle"] = report.cycle ? to_json(*report.cycle) : Json(nullptr);
  if (report.regular_sequence) {
    const auto& c = *report.regular_sequence;
    out["regular_sequence"] = Json{{"generators", c.generators},
                                   {"lead_coprime", c.lead_coprime},
                                   {"codimension", c.codimension ? Json(*c.codimension) : Json(nullptr)},
                                   {"certified", c.certified}};
  } else {
    out["regular_sequence"] = nullptr;
  }
  return out;
}

Json to_json(const Hypergraph& h) { return Json{{"n", h.n()}, {"s", h.s()}, {"edges", h.edges()}}; }

}  // namespace gincs::cli
