// Machine-readable serialization of pairing reports: JSON (self-contained,
// field elements as coefficient lists plus modulus) and CSV (one row per
// instance and check).
#pragma once

#include <string>

#include "swp/pairing.hpp"

namespace swp {

// Canonical JSON for a whole verification run; independent of worker
// count and wall clock, so identical configurations serialize identically.
std::string report_json(const RangeSummary& sum);

// Header "instance,check,pass" and one row per (instance, check).
std::string report_csv(const RangeSummary& sum);

// JSON dossier for a single instance.
std::string instance_json(const PairingReport& rep);

}  // namespace swp
