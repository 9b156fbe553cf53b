#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hbstrata/admissibility.hpp"
#include "hbstrata/incidence.hpp"
#include "hbstrata/labels.hpp"
#include "hbstrata/limit_classifier.hpp"

namespace hbstrata {

enum class Format { Table, Json, Csv, Dot };

/// Throws ParseError for anything but table/json/csv/dot.
Format parse_format(std::string_view text);

// JSON documents share one layout:
//   {"query": {...}, "results": [...], "meta": {"genus": g, "paper_cases": [...], ...}}
// and every outcome object carries "case", "component", "graded_degrees",
// "hnt_limit", "strictly_polystable" and "feasible_set". DOT is only
// meaningful for incidence tables; other renderers reject it.

std::string render_strata(const std::vector<AdmissibleStratum>& strata, Int rank, Int degree,
                          const Genus& genus, Format format);

std::string render_fixed(const std::vector<FixedComponentLabel>& labels, Int rank, Int degree,
                         const Genus& genus, Format format);

std::string render_outcome(const ClassifierInput& input, const InvariantRange& range,
                           const LimitOutcome& outcome, Format format);

/// CSV header: "stratum,invariant,case,component,hnt_limit".
std::string render_table(const IncidenceTable& table, Format format);

}  // namespace hbstrata
