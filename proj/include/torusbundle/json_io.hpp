// json_io.hpp — JSON parsing of problem instances and serialization of
// instances and classification reports.  The wire schema is
//   {"A": {"m", "d", "components": [[[int]]]},
//    "V": {"basis": [[scalar-string]]}, "U": {"basis": [[scalar-string]]}}
// with V and U optional; report JSON mirrors ClassificationReport fields.
#pragma once

#include "torusbundle/classify.hpp"

#include <string>

namespace torusbundle {

/**
 * Parses and validates an instance document.  Throws MalformedInputError
 * for bad JSON (with byte location), schema violations, or shape/
 * integrality failures, and DegenerateStructureError for period bases
 * meeting their conjugate.
 */
ProblemInstance parse_instance(const std::string& text);

/** Reads the file and parses it; an unreadable file is malformed input. */
ProblemInstance load_instance(const std::string& path);

/** Serializes an instance in the wire schema (2-space indent). */
std::string instance_to_json(const ProblemInstance& inst);

/** Serializes a report; deterministic, 2-space indent. */
std::string report_to_json(const ClassificationReport& rep);

/** Parses report JSON produced by report_to_json back into the struct. */
ClassificationReport report_from_json(const std::string& text);

/** The pencil subobject alone, as a JSON document. */
std::string pencil_to_json(const PfaffianPencilReport& pencil);

/** The cohomology and deformation subobjects alone, as a JSON document. */
std::string invariants_to_json(const CohomologyReport& cohomology, const DeformationReport& deformation);

} // namespace torusbundle
