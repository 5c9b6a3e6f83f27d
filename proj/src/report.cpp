#include "basecraft/report.hpp"

namespace basecraft {

namespace {

Json label_json(const LabelledDomain &d, Point p) {
  Json a = Json::array();
  for (auto x : d.labels[p])
    a.push_back(x);
  return a;
}

} // namespace

Json to_json(const BaseSizeResult &r, const LabelledDomain *domain) {
  Json j;
  j["lo"] = r.lo;
  j["hi"] = r.hi;
  j["exact"] = r.exact ? Json(r.lo) : Json(nullptr);
  j["lower_bound_kind"] = lower_kind_name(r.lo_kind);
  j["budget_exceeded"] = r.budget_exceeded;
  j["nodes"] = r.nodes;
  Json cert;
  cert["points"] = r.hi_cert.points;
  cert["verified"] = r.hi_cert.verified;
  if (domain) {
    Json labels = Json::array();
    for (auto p : r.hi_cert.points)
      labels.push_back(label_json(*domain, p));
    cert["labels"] = labels;
  }
  j["base"] = cert;
  return j;
}

Json to_json(const QReport &q) {
  Json j;
  j["c"] = q.c;
  j["degree"] = q.degree;
  j["exact"] = q.exact;
  Json rows = Json::array();
  for (const auto &r : q.rows) {
    Json row;
    row["representative"] = r.rep.cycles();
    row["prime"] = r.prime;
    row["class_size"] = str(r.class_size);
    row["fixed_points"] = r.fixed_points;
    row["fpr"] = str(r.fpr);
    row["contribution"] = str(r.contribution);
    rows.push_back(row);
  }
  j["classes"] = rows;
  j["total"] = str(q.total);
  j["total_approx"] = q.total.get_d();
  j["certifies_b_at_most_c"] = q.certifies();
  return j;
}

Json to_json(const McEstimate &m) {
  Json j;
  j["samples"] = m.samples;
  j["hits"] = m.hits;
  j["p_hat"] = m.p_hat;
  j["interval"] = {m.lo, m.hi};
  return j;
}

Json to_json(const NoRegularOrbitCertificate &c) {
  Json j;
  Json reps = Json::array(), sizes = Json::array();
  for (const auto &r : c.reps)
    reps.push_back(r.cycles());
  for (const auto &s : c.sizes)
    sizes.push_back(str(s));
  j["reps"] = reps;
  j["sizes"] = sizes;
  j["slack"] = str(c.slack);
  return j;
}

Json to_json(const DoubleCosetOutcome &d) {
  Json j;
  j["certificate"] = d.certificate ? to_json(*d.certificate) : Json(nullptr);
  j["regular_rep"] = d.regular_rep ? Json(d.regular_rep->cycles()) : Json(nullptr);
  j["complete_decomposition"] = d.complete_decomposition;
  j["double_cosets_found"] = d.reps.size();
  return j;
}

Json to_json(const ProductVerdict &v) {
  Json j;
  j["distinguishing_number"] = v.dP;
  j["c"] = v.c;
  j["regular_orbits"] = str(v.reg);
  j["b_at_most_c"] = v.at_most_c;
  j["wreath_bound"] = v.bound;
  return j;
}

Json to_json(const CaseRecord &c) {
  Json j;
  j["id"] = c.id;
  j["suite"] = c.suite;
  j["group"] = c.group;
  j["subgroup"] = c.subgroup;
  j["expected_b"] = c.expected_b;
  j["degree"] = c.degree ? Json(c.degree) : Json(nullptr);
  j["status"] = status_name(c.status);
  j["realized"] = c.realized_extension;
  j["row"] = c.citation;
  if (!c.gap.empty())
    j["gap"] = c.gap;
  return j;
}

Json registry_json(const std::string &suite) {
  Json a = Json::array();
  for (const auto *c : suite_cases(suite))
    a.push_back(to_json(*c));
  return a;
}

NoRegularOrbitCertificate certificate_from_json(const Json &j, std::size_t degree) {
  NoRegularOrbitCertificate c;
  for (const auto &r : j.at("reps"))
    c.reps.push_back(Perm::parse(r.get<std::string>(), degree));
  for (const auto &s : j.at("sizes"))
    c.sizes.emplace_back(s.get<std::string>());
  c.slack = BigInt(j.at("slack").get<std::string>());
  return c;
}

BaseCertificate base_certificate_from_json(const Json &j) {
  BaseCertificate c;
  c.points = j.at("points").get<std::vector<Point>>();
  c.verified = j.value("verified", false);
  return c;
}

Json envelope(const std::string &command, Json input, Json result,
              const Json *meta) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["input"] = std::move(input);
  j["result"] = std::move(result);
  if (meta)
    j["meta"] = *meta;
  return j;
}

} // namespace basecraft
