#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rss/report_json.hpp"
#include "rss/rss.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolations = 2;
constexpr int kExitEmptyAnswer = 3;

struct Options {
  std::vector<std::string> inputs;
  std::string output = "json";
  std::string anchorPredicate;
  bool assertedOnly = false;
  bool deltaOnly = false;
  std::string series;
  std::string factor;
  std::string situation;
  bool immediate = false;
  std::string today;
  int cqId = 0;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

rss::Graph loadInputs(const std::vector<std::string>& paths) {
  rss::Graph merged;
  for (const std::string& path : paths) {
    rss::Graph g = rss::parseTurtle(readFile(path));
    merged = rss::mergeGraphs(merged, g);
  }
  return merged;
}

// Accepts either a full IRI or a CURIE resolvable against the built-in
// namespaces and the prefixes of the loaded documents.
rss::Term resolveIriArg(const std::string& arg, const rss::Graph& graph) {
  if (arg.find("://") != std::string::npos) return rss::Term::iri(arg);
  return rss::vocab::resolveCurie(arg, graph.prefixes());
}

rss::ValidatorOptions validatorOptions(const Options& opts, const rss::Graph& graph) {
  rss::ValidatorOptions v;
  v.materializeFirst = !opts.assertedOnly;
  if (!opts.anchorPredicate.empty())
    v.anchors.datePredicate = resolveIriArg(opts.anchorPredicate, graph);
  return v;
}

int cmdValidate(const Options& opts) {
  rss::Graph graph = loadInputs(opts.inputs);
  rss::ValidationReport report = rss::validate(graph, validatorOptions(opts, graph));
  if (opts.output == "turtle") {
    rss::Graph materialized = opts.assertedOnly ? graph : rss::withInferences(graph);
    rss::Graph constructed = rss::checkLocalConsistency(materialized).constructed;
    constructed.addPrefix("rss", rss::vocab::ns::rss);
    std::cout << rss::serializeTurtle(constructed);
  } else if (opts.output == "text") {
    for (const rss::Finding& f : report.findings) {
      std::cout << rss::severityName(f.severity) << " " << f.code << " "
                << rss::json_io::termString(f.focus) << ": " << f.message << "\n";
    }
    std::cout << (report.conforms ? "conforms" : "does not conform") << "\n";
  } else {
    std::cout << rss::json_io::reportJson(report).dump(2) << "\n";
  }
  return report.conforms ? kExitOk : kExitViolations;
}

int cmdInfer(const Options& opts) {
  rss::Graph graph = loadInputs(opts.inputs);
  rss::InferenceDelta delta = rss::materialize(graph);
  rss::Graph out;
  for (const auto& [prefix, ns] : graph.prefixes()) out.addPrefix(prefix, ns);
  for (const auto& [prefix, ns] : rss::vocab::namespaces()) out.addPrefix(prefix, ns);
  if (!opts.deltaOnly)
    for (const rss::Triple& t : graph.triples()) out.insert(t);
  for (const rss::Triple& t : delta.added) out.insert(t);
  std::cout << rss::serializeTurtle(out);
  return kExitOk;
}

rss::Instant todayOrDefault(const Options& opts) {
  if (!opts.today.empty()) return rss::temporal::parseDate(opts.today);
  std::time_t now = std::time(nullptr);
  std::tm tm = *std::gmtime(&now);
  return rss::Instant{tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday};
}

int cmdCq(const Options& opts) {
  using nlohmann::ordered_json;
  namespace jio = rss::json_io;
  rss::Graph asserted = loadInputs(opts.inputs);
  rss::Graph graph = opts.assertedOnly ? asserted : rss::withInferences(asserted);
  if (opts.series.empty()) throw std::runtime_error("--series is required for cq");
  rss::Term series = resolveIriArg(opts.series, asserted);

  rss::AnchorConfig anchors;
  if (!opts.anchorPredicate.empty())
    anchors.datePredicate = resolveIriArg(opts.anchorPredicate, asserted);
  rss::SeriesView view = rss::buildSeriesView(graph, series, anchors);

  ordered_json answer;
  bool empty = false;
  auto termArray = [](const auto& terms) {
    ordered_json arr = ordered_json::array();
    for (const rss::Term& t : terms) arr.push_back(jio::termString(t));
    return arr;
  };
  switch (opts.cqId) {
    case 1: {
      auto members = rss::cq1Members(view);
      answer = termArray(members);
      empty = members.empty();
      break;
    }
    case 2: {
      rss::PeriodAnswer pa = rss::cq2TimePeriod(view);
      answer = ordered_json::object();
      if (pa.estimated) answer["estimated"] = jio::periodJson(*pa.estimated);
      if (pa.measured) answer["measured"] = jio::assessmentJson(*pa.measured);
      empty = !pa.estimated && !pa.measured;
      break;
    }
    case 3:
      answer = rss::temporal::formatDate(rss::cq3NextScheduled(view, todayOrDefault(opts)));
      break;
    case 4: {
      auto factors = rss::cq4UnifyingFactors(view);
      answer = termArray(factors);
      empty = factors.empty();
      break;
    }
    case 5: {
      if (opts.factor.empty()) throw std::runtime_error("--factor is required for cq 5");
      rss::Term factor = resolveIriArg(opts.factor, asserted);
      answer = jio::validityJson(rss::cq5FactorValidity(view, factor));
      break;
    }
    case 6: {
      auto descriptions = rss::cq6UnifyingDescription(view);
      answer = termArray(descriptions);
      empty = descriptions.empty();
      break;
    }
    case 7:
    case 8: {
      if (opts.situation.empty()) throw std::runtime_error("--situation is required for cq 7/8");
      rss::Term situation = resolveIriArg(opts.situation, asserted);
      auto result = opts.cqId == 7 ? rss::cq7Next(graph, situation, opts.immediate)
                                   : rss::cq8Previous(graph, situation, opts.immediate);
      answer = termArray(result);
      empty = result.empty();
      break;
    }
    default:
      throw std::runtime_error("cq id must be between 1 and 8");
  }
  std::cout << jio::answerEnvelope(opts.cqId, series, std::move(answer)).dump(2) << "\n";
  return empty ? kExitEmptyAnswer : kExitOk;
}

int cmdReport(const Options& opts) {
  using nlohmann::ordered_json;
  namespace jio = rss::json_io;
  rss::Graph asserted = loadInputs(opts.inputs);
  rss::Graph graph = opts.assertedOnly ? asserted : rss::withInferences(asserted);
  rss::ValidatorOptions vopts = validatorOptions(opts, asserted);
  rss::ValidationReport report = rss::validate(asserted, vopts);

  ordered_json out = ordered_json::array();
  for (const rss::Term& seriesTerm : rss::allSeries(graph)) {
    rss::SeriesView view = rss::buildSeriesView(graph, seriesTerm, vopts.anchors);
    ordered_json j;
    j["series"] = jio::termString(seriesTerm);
    ordered_json members = ordered_json::array();
    for (const rss::Term& m : view.members) members.push_back(jio::termString(m));
    j["members"] = members;

    ordered_json cqs = ordered_json::object();
    ordered_json factors = ordered_json::array();
    for (const rss::Term& f : rss::cq4UnifyingFactors(view)) factors.push_back(jio::termString(f));
    ordered_json descriptions = ordered_json::array();
    for (const rss::Term& d : rss::cq6UnifyingDescription(view))
      descriptions.push_back(jio::termString(d));
    cqs["cq1_members"] = members;
    rss::PeriodAnswer pa = rss::cq2TimePeriod(view);
    ordered_json period = ordered_json::object();
    if (pa.estimated) period["estimated"] = jio::periodJson(*pa.estimated);
    if (pa.measured) period["measured"] = jio::assessmentJson(*pa.measured);
    cqs["cq2_time_period"] = period;
    try {
      cqs["cq3_next_scheduled"] =
          rss::temporal::formatDate(rss::cq3NextScheduled(view, todayOrDefault(opts)));
    } catch (const std::exception&) {
      cqs["cq3_next_scheduled"] = nullptr;
    }
    cqs["cq4_unifying_factors"] = factors;
    ordered_json validity = ordered_json::object();
    for (const rss::Term& f : view.unifyingFactors)
      validity[jio::termString(f)] = jio::validityJson(rss::cq5FactorValidity(view, f));
    cqs["cq5_factor_validity"] = validity;
    cqs["cq6_descriptions"] = descriptions;
    ordered_json nexts = ordered_json::object(), prevs = ordered_json::object();
    for (const rss::Term& m : view.members) {
      ordered_json n = ordered_json::array(), p = ordered_json::array();
      for (const rss::Term& t : rss::cq7Next(graph, m, true)) n.push_back(jio::termString(t));
      for (const rss::Term& t : rss::cq8Previous(graph, m, true)) p.push_back(jio::termString(t));
      nexts[jio::termString(m)] = n;
      prevs[jio::termString(m)] = p;
    }
    cqs["cq7_immediate_next"] = nexts;
    cqs["cq8_immediate_previous"] = prevs;
    j["cq"] = cqs;

    ordered_json findings = ordered_json::array();
    for (const rss::Finding& f : report.findings)
      if (f.focus == seriesTerm) findings.push_back(jio::findingJson(f));
    j["findings"] = findings;
    out.push_back(std::move(j));
  }
  ordered_json doc;
  doc["conforms"] = report.conforms;
  doc["series"] = out;
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recurrent situation series toolkit: parse, infer, validate, and query"};
  app.require_subcommand(1);
  Options opts;

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("inputs", opts.inputs, "Turtle input files")->required();
    cmd->add_option("--anchor-predicate", opts.anchorPredicate,
                    "predicate carrying member start dates (IRI or CURIE)");
    cmd->add_option("--output", opts.output, "output format")
        ->check(CLI::IsMember({"json", "turtle", "text"}));
    cmd->add_flag("--asserted-only", opts.assertedOnly, "skip rule materialization");
  };

  CLI::App* validate = app.add_subcommand("validate", "check pattern constraints");
  addCommon(validate);
  CLI::App* infer = app.add_subcommand("infer", "materialize entailments as Turtle");
  addCommon(infer);
  infer->add_flag("--delta-only", opts.deltaOnly, "emit only the derived triples");
  CLI::App* cq = app.add_subcommand("cq", "answer a competency question");
  cq->add_option("id", opts.cqId, "competency question id (1-8)")->required();
  addCommon(cq);
  cq->add_option("--series", opts.series, "series IRI or CURIE");
  cq->add_option("--factor", opts.factor, "unifying factor (cq 5)");
  cq->add_option("--situation", opts.situation, "situation (cq 7/8)");
  cq->add_flag("--immediate", opts.immediate, "immediate links only (cq 7/8)");
  cq->add_option("--today", opts.today, "reference date YYYY-MM-DD (cq 3)");
  CLI::App* reportCmd = app.add_subcommand("report", "combined per-series JSON report");
  addCommon(reportCmd);
  reportCmd->add_option("--today", opts.today, "reference date YYYY-MM-DD");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmdValidate(opts);
    if (infer->parsed()) return cmdInfer(opts);
    if (cq->parsed()) return cmdCq(opts);
    if (reportCmd->parsed()) return cmdReport(opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
