#include "mps/json_io.hpp"

#include "mps/errors.hpp"

namespace mps {

namespace {

Json cause_to_json(const Market& market, const StepCause& cause) {
  Json out;
  switch (cause.kind) {
    case StepCause::Kind::CapClose:
      out["kind"] = "cap_close";
      out["object"] = market.objects[cause.object].id;
      break;
    case StepCause::Kind::MinSatisfied:
      out["kind"] = "min_satisfied";
      out["object"] = market.objects[cause.object].id;
      break;
    case StepCause::Kind::GlobalMin:
      out["kind"] = "global_min";
      break;
    case StepCause::Kind::Horizon:
      out["kind"] = "horizon";
      break;
    case StepCause::Kind::RowBound:
      out["kind"] = "row_bound";
      out["row"] = cause.row;
      break;
    case StepCause::Kind::CellSaturated:
      out["kind"] = "cell_saturated";
      out["agent"] = market.agent_ids[cause.agent];
      out["object"] = market.objects[cause.object].id;
      break;
  }
  return out;
}

}  // namespace

Json market_to_json(const Market& market) {
  Json objects = Json::array();
  for (const auto& spec : market.objects)
    objects.push_back({{"id", spec.id}, {"min", spec.min}, {"cap", spec.cap}});
  Json agents = Json::array();
  for (int i = 0; i < market.num_agents(); ++i) {
    Json prefs = Json::array();
    for (int j : market.prefs[i]) prefs.push_back(market.objects[j].id);
    agents.push_back({{"id", market.agent_ids[i]}, {"prefs", prefs}});
  }
  return {{"d", market.demand}, {"objects", objects}, {"agents", agents}};
}

Json allocation_to_json(const Market& market, const RandomAllocation& mu) {
  Json rows = Json::array();
  for (int i = 0; i < mu.agents(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < mu.objects(); ++j) row.push_back(format_rat(mu.at(i, j)));
    rows.push_back(row);
  }
  Json agents = Json::array();
  for (const auto& id : market.agent_ids) agents.push_back(id);
  Json objects = Json::array();
  for (const auto& spec : market.objects) objects.push_back(spec.id);
  return {{"agents", agents}, {"objects", objects}, {"allocation", rows}};
}

RandomAllocation allocation_from_json(const Market& market, const Json& doc) {
  const Json& rows = doc.contains("allocation") ? doc.at("allocation") : doc;
  if (static_cast<int>(rows.size()) != market.num_agents())
    throw ParseError("allocation: row count mismatch");
  RandomAllocation mu(market.num_agents(), market.num_objects());
  for (int i = 0; i < market.num_agents(); ++i) {
    if (static_cast<int>(rows[i].size()) != market.num_objects())
      throw ParseError("allocation: column count mismatch");
    for (int j = 0; j < market.num_objects(); ++j)
      mu.at(i, j) = parse_rat(rows[i][j].get<std::string>());
  }
  return mu;
}

Json assignment_to_json(const Market& market, const DeterministicAllocation& alloc) {
  Json out;
  for (int i = 0; i < alloc.agents(); ++i) {
    Json given = Json::array();
    for (int j = 0; j < alloc.objects(); ++j)
      if (alloc.at(i, j)) given.push_back(market.objects[j].id);
    out[market.agent_ids[i]] = given;
  }
  return out;
}

Json system_to_json(const Market& market, const ConstraintSystem& system) {
  Json rows = Json::array();
  for (const Constraint& row : system.rows) {
    Json terms = Json::array();
    for (const Term& term : row.terms)
      terms.push_back({{"agent", market.agent_ids[term.agent]},
                       {"object", market.objects[term.object].id},
                       {"coeff", format_rat(term.coeff)}});
    rows.push_back({{"label", row.label}, {"terms", terms}, {"bound", format_rat(row.bound)}});
  }
  return {{"rows", rows}};
}

Json trace_to_json(const Market& market, const EatingTrace& trace) {
  Json steps = Json::array();
  for (const StepRecord& step : trace.steps) {
    Json available = Json::array();
    for (int j : step.available) available.push_back(market.objects[j].id);
    Json deficient = Json::array();
    for (int j : step.deficient) deficient.push_back(market.objects[j].id);
    Json eating;
    for (int i = 0; i < market.num_agents(); ++i)
      if (step.eating[i] >= 0) eating[market.agent_ids[i]] = market.objects[step.eating[i]].id;
    Json causes = Json::array();
    for (const StepCause& cause : step.causes) causes.push_back(cause_to_json(market, cause));
    steps.push_back({{"start", format_rat(step.start)},
                     {"end", format_rat(step.end)},
                     {"available", available},
                     {"deficient", deficient},
                     {"eating", eating},
                     {"causes", causes}});
  }
  Json out;
  out["steps"] = steps;
  if (trace.tau) out["tau"] = format_rat(*trace.tau);
  Json closing;
  for (int j = 0; j < market.num_objects(); ++j)
    closing[market.objects[j].id] = format_rat(trace.closing_times[j]);
  out["closing_times"] = closing;
  return out;
}

Json lottery_to_json(const Market& market, const Lottery& lottery) {
  Json parts = Json::array();
  for (const LotteryPart& part : lottery.parts)
    parts.push_back({{"weight", format_rat(part.weight)},
                     {"assignment", assignment_to_json(market, part.alloc)}});
  return {{"parts", parts}};
}

Json report_to_json(const Market& market, const std::string& property, const AuditReport& report) {
  Json out;
  out["property"] = property;
  out["pass"] = report.pass;
  if (!report.detail.empty()) out["detail"] = report.detail;
  if (report.envy) {
    out["witness"] = {{"agent", market.agent_ids[report.envy->agent]},
                      {"envies", market.agent_ids[report.envy->other]}};
  }
  if (report.misreport) {
    Json prefs = Json::array();
    for (int j : report.misreport->misreport) prefs.push_back(market.objects[j].id);
    Json truthful = Json::array(), lied = Json::array();
    for (const Rat& v : report.misreport->truthful_row) truthful.push_back(format_rat(v));
    for (const Rat& v : report.misreport->misreport_row) lied.push_back(format_rat(v));
    out["witness"] = {{"agent", market.agent_ids[report.misreport->agent]},
                      {"misreport", prefs},
                      {"truthful_row", truthful},
                      {"misreport_row", lied}};
  }
  if (report.permutation) {
    Json pi = Json::array();
    for (int i : *report.permutation) pi.push_back(market.agent_ids[i]);
    out["witness"] = {{"permutation", pi}};
  }
  return out;
}

}  // namespace mps
