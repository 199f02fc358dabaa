// render.hpp — deterministic rendering of classification reports as JSON
// or as a human-readable trace that walks the verdict condition by
// condition.
#pragma once

#include "torusbundle/classify.hpp"

#include <string>

namespace torusbundle {

enum class RenderFormat { Json, Text };

/** Accepts "json" or "text"; throws MalformedInputError otherwise. */
RenderFormat render_format_from_string(const std::string& text);

std::string render_report(const ClassificationReport& rep, RenderFormat format);

std::string render_report_text(const ClassificationReport& rep);

/** The pencil lines of the text trace. */
std::string render_pencil_text(const PfaffianPencilReport& pencil);

/** The cohomology and deformation lines of the text trace. */
std::string render_invariants_text(const CohomologyReport& cohomology, const DeformationReport& deformation);

} // namespace torusbundle
