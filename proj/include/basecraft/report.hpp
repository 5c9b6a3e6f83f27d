#pragma once

#include "basecraft/catalog.hpp"
#include "basecraft/prodaction.hpp"

#include <json.hpp>

namespace basecraft {

using Json = nlohmann::ordered_json;

// Bumped whenever a field is renamed or removed.
inline constexpr const char *kReportSchema = "basecraft-report/1";

// Big integers are decimal strings, rationals "p/q" strings.
Json to_json(const BaseSizeResult &r, const LabelledDomain *domain = nullptr);
Json to_json(const QReport &q);
Json to_json(const McEstimate &m);
Json to_json(const NoRegularOrbitCertificate &c);
Json to_json(const DoubleCosetOutcome &d);
Json to_json(const ProductVerdict &v);
Json to_json(const CaseRecord &c);

Json registry_json(const std::string &suite = "all");

NoRegularOrbitCertificate certificate_from_json(const Json &j, std::size_t degree);
BaseCertificate base_certificate_from_json(const Json &j);

// {schema, command, input, result[, meta]}
Json envelope(const std::string &command, Json input, Json result,
              const Json *meta = nullptr);

} // namespace basecraft
