#pragma once

#include <string>

namespace orelt {

// Three-valued outcome for semi-decision procedures. ProvenTrue and
// ProvenFalse always travel with an independently checkable certificate;
// Unknown records the exhausted bound.
enum class Status { ProvenTrue, ProvenFalse, Unknown };

inline const char* statusName(Status s) {
  switch (s) {
    case Status::ProvenTrue: return "proven-true";
    case Status::ProvenFalse: return "proven-false";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

}  // namespace orelt
