#include <nlohmann/json.hpp>

#include "schubert/errors.hpp"
#include "schubert/structure_constants.hpp"

namespace schubert {

namespace {

using Json = nlohmann::ordered_json;

Json word(const Permutation &w) { return std::vector<int>(w.word().begin(), w.word().end()); }

Permutation permutation_of(const Json &j) { return Permutation(j.get<std::vector<int>>()); }

Json shape(const TwoRow &lambda) { return Json::array({lambda.m1, lambda.m2}); }

TwoRow shape_of(const Json &j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

Json config_json(const ScanConfig &config) {
  Json out;
  out["kind"] = config.kind;
  out["n2"] = Json::array({config.n2_min, config.n2_max});
  out["k_range"] =
      config.k_range ? Json::array({config.k_range->first, config.k_range->second}) : Json(nullptr);
  out["k_offsets"] = config.k_offsets;
  out["m1_max"] = config.m1_max;
  out["filter"] = std::string(to_string(config.filter));
  out["w"] = config.w;
  out["lambda"] = config.lambda;
  return out;
}

ScanConfig config_of(const Json &j) {
  ScanConfig config;
  config.kind = j.at("kind").get<std::string>();
  config.n2_min = j.at("n2").at(0).get<int>();
  config.n2_max = j.at("n2").at(1).get<int>();
  if (!j.at("k_range").is_null())
    config.k_range = std::pair{j.at("k_range").at(0).get<int>(), j.at("k_range").at(1).get<int>()};
  config.k_offsets = j.at("k_offsets").get<std::vector<int>>();
  config.m1_max = j.at("m1_max").get<int>();
  config.filter = parse_filter(j.at("filter").get<std::string>());
  config.w = j.at("w").get<std::vector<int>>();
  config.lambda = j.at("lambda").get<std::vector<int>>();
  return config;
}

} // namespace

std::string to_json(const ScanReport &report, int indent) {
  Json cells = Json::array();
  for (const auto &cell : report.cells) {
    Json argmax = Json::array();
    for (const auto &v : cell.argmax)
      argmax.push_back(word(v));
    cells.push_back({{"w", word(cell.w)},
                     {"n2", cell.n2},
                     {"k", cell.k},
                     {"lambda", shape(cell.lambda)},
                     {"num_terms", cell.num_terms},
                     {"max_coeff", cell.max_coeff},
                     {"bound", cell.bound},
                     {"argmax", std::move(argmax)}});
  }
  Json violations = Json::array();
  for (const auto &v : report.violations)
    violations.push_back({{"w", word(v.w)},
                          {"n2", v.n2},
                          {"k", v.k},
                          {"lambda", shape(v.lambda)},
                          {"v", word(v.v)},
                          {"coeff", v.coeff},
                          {"bound", v.bound},
                          {"witness", v.witness}});
  Json doc;
  doc["cells"] = std::move(cells);
  doc["violations"] = std::move(violations);
  doc["global_max"] = report.global_max;
  doc["config"] = config_json(report.config);
  doc["flags"] = {{"k_equals_n2_bound_relaxed", report.k_equals_n2_bound_relaxed}};
  doc["timing"] = {{"seconds", report.seconds}};
  return doc.dump(indent);
}

ScanReport scan_report_from_json(std::string_view text) {
  try {
    const auto doc = Json::parse(text);
    ScanReport report;
    for (const auto &c : doc.at("cells")) {
      CellResult cell{permutation_of(c.at("w")),
                      c.at("n2").get<int>(),
                      c.at("k").get<int>(),
                      shape_of(c.at("lambda")),
                      c.at("num_terms").get<std::size_t>(),
                      c.at("max_coeff").get<Coefficient>(),
                      c.at("bound").get<Coefficient>(),
                      {}};
      for (const auto &v : c.at("argmax"))
        cell.argmax.push_back(permutation_of(v));
      report.cells.push_back(std::move(cell));
    }
    for (const auto &v : doc.at("violations"))
      report.violations.push_back({permutation_of(v.at("w")), v.at("n2").get<int>(),
                                   v.at("k").get<int>(), shape_of(v.at("lambda")),
                                   permutation_of(v.at("v")), v.at("coeff").get<Coefficient>(),
                                   v.at("bound").get<Coefficient>(),
                                   v.at("witness").get<std::vector<std::string>>()});
    report.global_max = doc.at("global_max").get<Coefficient>();
    report.config = config_of(doc.at("config"));
    report.k_equals_n2_bound_relaxed = doc.at("flags").at("k_equals_n2_bound_relaxed").get<bool>();
    if (doc.contains("timing"))
      report.seconds = doc.at("timing").value("seconds", 0.0);
    return report;
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(std::string("bad scan report: ") + e.what());
  }
}

std::string expansion_to_json(const Permutation &w, int k, const Partition &lambda,
                              const SchubertExpansion &expansion, int indent) {
  Json terms = Json::array();
  for (const auto &[v, c] : expansion.terms())
    terms.push_back({{"v", word(v)}, {"coeff", c}});
  Json doc;
  doc["w"] = word(w);
  doc["k"] = k;
  doc["lambda"] = Json::array({lambda[0], lambda[1]});
  doc["terms"] = std::move(terms);
  return doc.dump(indent);
}

} // namespace schubert
