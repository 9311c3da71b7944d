#pragma once

#include <string>

#include "json.hpp"

#include "spa/groebner.hpp"
#include "spa/presentation.hpp"
#include "spa/problem.hpp"
#include "spa/resolution.hpp"
#include "spa/syzygy.hpp"

namespace spa {

using Json = nlohmann::ordered_json;

/// Array of rendered components.
Json element_json(const FreeModule& L, const ModuleElement& x);

Json check_json(const Problem& p);
Json gb_json(const Problem& p, const GroebnerRun& run);
Json mingens_json(const Problem& p, const GroebnerRun& run, bool early_stop);
Json minpres_json(const MinimizedPresentation& mp);
/// Rows are widened to one column per input element, zero inputs included.
Json syz_json(const Problem& p, const GroebnerRun& run, const std::vector<SyzygyGenerator>& rows);
Json resolve_json(const Resolution& R, const ValidationReport* verified);

std::string check_text(const Problem& p);
std::string gb_text(const Problem& p, const GroebnerRun& run);
std::string mingens_text(const Problem& p, const GroebnerRun& run);
std::string minpres_text(const MinimizedPresentation& mp);
std::string syz_text(const Problem& p, const GroebnerRun& run,
                     const std::vector<SyzygyGenerator>& rows);
std::string betti_text(const BettiTable& table);
std::string resolve_text(const Resolution& R);

}  // namespace spa
