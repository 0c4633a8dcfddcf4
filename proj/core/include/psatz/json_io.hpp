#pragma once

#include <string>
#include <string_view>

#include "psatz/certificates.hpp"
#include "psatz/cones.hpp"
#include "psatz/gns.hpp"
#include "psatz/moment_sequence.hpp"

namespace psatz {

// JSON text forms of the kernel types. Schemas:
//   Polynomial      {"dim": d, "terms": [{"exp": [e1..ed], "num": n, "den": m}]}
//   MomentSequence  {"dim": d, "max_degree": N, "values": [{"exp": [...], "num": n, "den": m}]}
//   AtomicMeasure   {"dim": d, "atoms": [{"point": ["a/b", ...], "weight": "a/b"}]}
//   ConeSpec        {"kind": "preordering", "f": [poly...], "g": [poly...]}
//   Certificate     {"variant": ..., "target": poly, "generators": [poly...],
//                    "multipliers": [poly...],
//                    "terms": [{"coeff": "a/b", "exponents": [...], "multiplier_index": j}],
//                    "extra": {...}}
//   ExtractionResult mirrors AtomicMeasure plus "residual" and "flat".
// num/den are emitted as JSON integers when they fit in 64 bits and as
// decimal strings otherwise; readers accept both. All parsers throw
// std::invalid_argument on malformed input.

std::string to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& text);

std::string to_json(const MomentSequence& s);
MomentSequence moment_sequence_from_json(const std::string& text);

std::string to_json(const AtomicMeasure& m);
AtomicMeasure atomic_measure_from_json(const std::string& text);

std::string to_json(const ConeSpec& c);
ConeSpec cone_spec_from_json(const std::string& text);

std::string to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

std::string to_json(const ExtractionResult& r);

std::string_view kind_name(CertificateKind kind);
std::string_view kind_name(ConeKind kind);

}  // namespace psatz
