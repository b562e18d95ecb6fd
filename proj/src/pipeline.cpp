#include "knotvol/pipeline.hpp"

#include <sstream>

#include "json.hpp"
#include "knotvol/errors.hpp"
#include "knotvol/seifert.hpp"

namespace knotvol {

using nlohmann::json;
using nlohmann::ordered_json;

PipelineResult run_pipeline(const Diagram& d, const PipelineOptions& opts) {
  PipelineResult out;
  out.reduction = reduce(d);
  if (!out.reduction.record) return out;
  const ReductionRecord& rec = *out.reduction.record;
  out.link = augment(rec);
  AugmentedLink improved = improve(*out.link, rec);
  out.bounds = report(rec, *out.link, improved);
  if (opts.improve) out.improved = improved;
  for (const auto& s : surgery_instructions(out.final_link(), opts.target))
    if (opts.keep_zero_loops || !s.trivial()) out.surgery.push_back(s);
  out.roundtrip = verify_roundtrip(rec, out.final_link(), opts.target);
  if (rec.genus == 1) out.genus_one = classify_genus_one(rec.reduced);
  return out;
}

namespace {

ordered_json circles_json(const SeifertDecomposition& s) {
  ordered_json out = ordered_json::array();
  for (const auto& c : s.circles)
    out.push_back({{"id", c.id}, {"edges", c.edges}, {"depth", c.depth}, {"orientation", c.orientation}});
  return out;
}

ordered_json graph_json(const SeifertGraph& g) {
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"crossing", e.crossing}, {"circles", e.circles}, {"sign", e.sign}, {"nested", e.nested}});
  return {{"vertices", g.num_vertices()}, {"valency", g.valency}, {"edges", edges}};
}

ordered_json arcs_json(const ArcDecomposition& a) {
  ordered_json arcs = ordered_json::array();
  for (const auto& arc : a.arcs)
    arcs.push_back({{"arc", arc.id + 1},
                    {"bands", arc.bands()},
                    {"crossings", arc.crossings},
                    {"signs", arc.signs},
                    {"from", arc.start_vertex},
                    {"to", arc.end_vertex}});
  ordered_json ni = ordered_json::object();
  for (auto [i, n] : a.valency_counts) ni[std::to_string(i)] = n;
  return {{"N", a.fat_count()}, {"N_i", ni}, {"A", a.arc_count()}, {"arcs", arcs}};
}

ordered_json outcome_json(const NonHyperbolicOutcome& o) {
  return {{"kind", o.kind == NonHyperbolicOutcome::Kind::Unknot ? "unknot" : "torus_2k"},
          {"k", o.k},
          {"description", o.describe()}};
}

ordered_json record_json(const ReductionRecord& rec) {
  ordered_json ledger = ordered_json::array();
  for (const auto& e : rec.ledger)
    ledger.push_back({{"arc", e.arc + 1},
                      {"bands", e.bands},
                      {"crossings", e.crossings},
                      {"signs_K", e.signs_k},
                      {"signs_K'", e.signs_kprime},
                      {"kept", e.kept},
                      {"epsilon", e.epsilon},
                      {"n'", e.n_prime},
                      {"n", e.n},
                      {"insurance", e.insurance}});
  ordered_json out = {{"input", rec.input.to_pd()},
                      {"alternating", rec.alternating.to_pd()},
                      {"reduced", rec.reduced.to_pd()},
                      {"reduced_input", rec.reduced_input.to_pd()},
                      {"K0", rec.k0.to_pd()},
                      {"genus", rec.genus},
                      {"arcs", arcs_json(rec.arcs)},
                      {"ledger", ledger},
                      {"insurance_arc", nullptr},
                      {"provenance", rec.provenance}};
  if (rec.insurance_arc) out["insurance_arc"] = *rec.insurance_arc + 1;
  return out;
}

ordered_json surgery_array(const std::vector<SurgeryInstruction>& s) {
  ordered_json out = ordered_json::array();
  for (const auto& i : s)
    out.push_back({{"component", i.component + 1},
                   {"arc", i.arc + 1},
                   {"n", i.n},
                   {"coefficient", i.coefficient()},
                   {"trivial", i.trivial()},
                   {"target", to_string(i.target)}});
  return out;
}

ordered_json bounds_object(const BoundsReport& r) {
  ordered_json ni = ordered_json::object();
  for (auto [i, n] : r.N_i) ni[std::to_string(i)] = n;
  return {{"g", r.g},
          {"N", r.N},
          {"N_i", ni},
          {"A", r.A},
          {"crossings_K0", r.crossings_k0},
          {"crossings_L", r.crossings_l},
          {"crossings_L_improved", r.crossings_l_improved},
          {"bound_4g_minus_2", r.bound_4g_minus_2},
          {"bound_6g_minus_1", r.bound_6g_minus_1},
          {"bound_6A_plus_1", r.bound_6A_plus_1},
          {"bound_36g", r.bound_36g},
          {"bound_5A_plus_2", r.bound_5A_plus_2},
          {"bound_30g", r.bound_30g},
          {"V0", r.v0},
          {"volume_bound_raw", r.volume_bound_raw},
          {"volume_bound_crude", r.volume_bound_crude},
          {"volume_bound_linear", r.volume_bound_linear},
          {"volume_bound_genus", r.volume_bound_genus}};
}

}  // namespace

std::string analysis_json(const Diagram& d) {
  auto g = seifert_graph(d);
  ordered_json out = {{"name", d.name()},
                      {"pd", d.to_pd()},
                      {"crossings", d.num_crossings()},
                      {"components", d.num_components()},
                      {"writhe", writhe(d)},
                      {"alternating", is_alternating(d)},
                      {"seifert_circles", g.num_vertices()},
                      {"genus", nullptr},
                      {"circles", circles_json(g.circles)},
                      {"graph", graph_json(g)}};
  if (d.num_components() == 1) out["genus"] = canonical_genus(d);
  return out.dump(2);
}

std::string reduction_json(const ReductionRecord& rec) { return record_json(rec).dump(2); }

std::string surgery_json(const std::vector<SurgeryInstruction>& s) { return surgery_array(s).dump(2); }

std::string bounds_json(const BoundsReport& r) { return bounds_object(r).dump(2); }

std::string pipeline_json(const PipelineResult& r, const PipelineOptions& opts) {
  ordered_json out;
  out["name"] = r.reduction.input.name();
  out["input"] = r.reduction.input.to_pd();
  out["provenance"] = r.reduction.provenance;
  if (r.reduction.outcome) {
    out["outcome"] = outcome_json(*r.reduction.outcome);
    out["reduced"] = r.reduction.reduced.to_pd();
    return out.dump(2);
  }
  out["outcome"] = "hyperbolic";
  out["record"] = record_json(*r.reduction.record);
  out["link"] = r.link->diagram.to_pd();
  out["link_improved"] = r.improved ? ordered_json(r.improved->diagram.to_pd()) : ordered_json(nullptr);
  out["target"] = to_string(opts.target);
  out["surgery"] = surgery_array(r.surgery);
  out["roundtrip"] = r.roundtrip;
  out["bounds"] = bounds_object(*r.bounds);
  if (r.genus_one)
    out["genus_one"] = {{"class", r.genus_one->describe()}, {"signs", r.genus_one->signs},
                        {"diagnostics", r.genus_one->diagnostics}};
  return out.dump(2);
}

std::string bounds_csv_header() {
  return "name,status,g,N,A,crossings_K0,crossings_L,crossings_L_improved,bound_4g_minus_2,bound_6g_minus_1,"
         "bound_6A_plus_1,bound_36g,bound_5A_plus_2,bound_30g,volume_bound_raw,volume_bound_linear,roundtrip,"
         "detail";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

}  // namespace

std::string bounds_csv_row(const std::string& name, const PipelineResult& r) {
  std::ostringstream os;
  os << csv_field(name) << ",";
  if (r.reduction.outcome) {
    os << "DEGENERATE,,,,,,,,,,,,,,,," << csv_field(r.reduction.outcome->describe());
    return os.str();
  }
  const auto& b = *r.bounds;
  os << (b.all_pass() ? "PASS" : "FAIL") << "," << b.g << "," << b.N << "," << b.A << "," << b.crossings_k0 << ","
     << b.crossings_l << "," << b.crossings_l_improved << "," << b.bound_4g_minus_2 << "," << b.bound_6g_minus_1
     << "," << b.bound_6A_plus_1 << "," << b.bound_36g << "," << b.bound_5A_plus_2 << "," << b.bound_30g << ",";
  os.precision(10);
  os << b.volume_bound_raw << "," << b.volume_bound_linear << "," << r.roundtrip << ",";
  if (r.genus_one) os << csv_field(r.genus_one->describe());
  return os.str();
}

std::string error_csv_row(const std::string& name, const std::string& message) {
  return csv_field(name) + ",ERROR,,,,,,,,,,,,,,,," + csv_field(message);
}

}  // namespace knotvol
