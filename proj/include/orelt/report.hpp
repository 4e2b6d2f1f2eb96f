#pragma once

#include <optional>
#include <string>

#include "orelt/gog.hpp"
#include "orelt/presentation.hpp"
#include "orelt/probes.hpp"

namespace orelt {

// Deterministic structured-text report plus the "proven negative" flag the
// command-line frontend maps to its exit code. Field order is stable; no
// timing lines are emitted, so identical inputs give identical bytes.
struct ReportResult {
  std::string text;
  bool negative = false;
};

ReportResult reportClassify(const OneRelatorPresentation& p, int whiteheadCap);
ReportResult reportWordProblem(const OneRelatorPresentation& p, const Word& u,
                               const std::optional<Word>& v);
ReportResult reportMinimize(int rank, const Word& w,
                            const std::vector<std::string>& names, int whiteheadCap);
ReportResult reportPrimitive(int rank, const Word& w,
                             const std::vector<std::string>& names, int whiteheadCap);
ReportResult reportOrder(const OneRelatorPresentation& p, const Word& w, int bound,
                         int quotientDegreeCap);
ReportResult reportQuotients(const Presentation& p, const std::optional<Word>& w,
                             int maxDegree, int quotientDegreeCap);
ReportResult reportMalnormal(const OneRelatorPresentation& p, const Word& x,
                             const SearchBounds& bounds);
ReportResult reportTMember(const OneRelatorPresentation& p, const Word& w,
                           const SearchBounds& bounds, int maxQuotientDegree);
ReportResult reportGogValidate(const GraphOfGroups& g, int quotientDegreeCap);
ReportResult reportGogPi1(const GraphOfGroups& g);
ReportResult reportGogVerify(const GraphOfGroups& g, const Presentation& target,
                             const TietzeCertificate& cert);
ReportResult reportHarnessEnds(int rank, int maxRootLength, int exponent);

}  // namespace orelt
