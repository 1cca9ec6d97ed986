#pragma once

#include <string>

#include "cases.hpp"
#include "criteria.hpp"
#include "extensions.hpp"
#include "numbertheory.hpp"

namespace galois {

// Text renderings for terminal output. Criterion and case reports already
// know how to print themselves; the overloads here exist so every wire type
// has one entry point.
std::string render_text(const Verdict& v);
std::string render_text(const CriterionReport& r);
std::string render_text(const CaseReport& r);
std::string render_text(const ExtensionDescriptor& e);
std::string render_text(const SpecializationResult& s);
std::string render_text(const PrimeCensus& c);
std::string render_text(const PermGroup& g);

}  // namespace galois
