#include "hbstrata/serialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hbstrata/error.hpp"

namespace hbstrata {

namespace {

using Json = nlohmann::ordered_json;

// Left-aligned columns separated by two spaces.
std::string layout(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out += line + '\n';
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + '\n';
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Json feasible_json(const InvariantRange& range) {
  Json arr = Json::array();
  if (range.case_family == CaseFamily::Case3_flag) {
    for (bool f : range.feasible_flags) arr.push_back(f);
  } else {
    for (Int v : range.feasible_integers) arr.push_back(v);
  }
  return arr;
}

std::string feasible_text(const InvariantRange& range) {
  std::string out = "{";
  bool first = true;
  auto add = [&](const std::string& s) {
    if (!first) out += ',';
    out += s;
    first = false;
  };
  if (range.case_family == CaseFamily::Case3_flag) {
    for (bool f : range.feasible_flags) add(f ? "true" : "false");
  } else {
    for (Int v : range.feasible_integers) add(std::to_string(v));
  }
  return out + "}";
}

Json invariant_json(const Invariant& inv) {
  auto slope = [](const Rational& v) -> Json {
    if (v.is_integer()) return v.numerator();
    return v.to_string();
  };
  if (auto* i = std::get_if<SlopeI>(&inv)) return slope(i->value);
  if (auto* n = std::get_if<SlopeN>(&inv)) return slope(n->value);
  if (auto* a = std::get_if<Aligned>(&inv)) return a->value;
  return nullptr;
}

Json outcome_json(const LimitOutcome& o, const InvariantRange& range) {
  Json j;
  j["case"] = std::string(to_string(o.case_tag));
  j["component"] = to_string(o.component);
  j["graded_degrees"] = o.graded_degrees;
  j["hnt_limit"] = o.hnt_limit.to_string();
  j["strictly_polystable"] = o.strictly_polystable;
  j["feasible_set"] = feasible_json(range);
  return j;
}

Json mu_vector_json(const AdmissibleStratum& s) {
  Json arr = Json::array();
  for (const auto& m : s.mu_vector) arr.push_back(m.to_string());
  return arr;
}

Json meta_json(const Genus& genus, const std::set<CaseTag>& cases) {
  Json meta;
  meta["genus"] = genus.value();
  Json tags = Json::array();
  for (CaseTag t : cases) tags.push_back(std::string(to_string(t)));
  meta["paper_cases"] = tags;
  // Feasible invariant values are not certified to be realized by a Higgs bundle.
  meta["realizability"] = "assumed";
  return meta;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void no_dot(const char* what) {
  throw Error(ErrorKind::ParseError, std::string("dot output is only available for incidence tables, not ") + what);
}

std::string family_text(const AdmissibleStratum& s) {
  return s.rank() == 3 ? std::string(to_string(case_family_of(s))) : std::string("none");
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "table") return Format::Table;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "dot") return Format::Dot;
  throw Error(ErrorKind::ParseError, "unknown format '" + std::string(text) + "'");
}

std::string render_strata(const std::vector<AdmissibleStratum>& strata, Int rank, Int degree,
                          const Genus& genus, Format format) {
  auto feasible_of = [](const AdmissibleStratum& s) {
    return s.rank() == 3 ? invariant_range(s) : InvariantRange{};
  };
  switch (format) {
    case Format::Json: {
      Json doc;
      doc["query"] = {{"command", "strata"}, {"rank", rank}, {"degree", degree}, {"genus", genus.value()}};
      Json results = Json::array();
      for (const auto& s : strata) {
        Json j;
        j["stratum"] = s.hn.to_string();
        j["mu_vector"] = mu_vector_json(s);
        j["case_family"] = family_text(s);
        j["feasible_set"] = feasible_json(feasible_of(s));
        results.push_back(std::move(j));
      }
      doc["results"] = std::move(results);
      doc["meta"] = meta_json(genus, {});
      return dump(doc);
    }
    case Format::Csv: {
      std::string out = csv_line({"stratum", "mu_vector", "case_family", "feasible_set"});
      for (const auto& s : strata) {
        std::string mus;
        for (const auto& m : s.mu_vector) mus += (mus.empty() ? "" : " ") + m.to_string();
        out += csv_line({s.hn.to_string(), mus, family_text(s), feasible_text(feasible_of(s))});
      }
      return out;
    }
    case Format::Table: {
      std::vector<std::vector<std::string>> rows{{"stratum", "mu_vector", "family", "feasible"}};
      for (const auto& s : strata) {
        std::string mus = "(";
        for (std::size_t i = 0; i < s.mu_vector.size(); ++i) mus += (i ? "," : "") + s.mu_vector[i].to_string();
        rows.push_back({s.hn.to_string(), mus + ")", family_text(s), feasible_text(feasible_of(s))});
      }
      return layout(rows);
    }
    case Format::Dot:
      no_dot("strata listings");
  }
  return {};
}

std::string render_fixed(const std::vector<FixedComponentLabel>& labels, Int rank, Int degree,
                         const Genus& genus, Format format) {
  switch (format) {
    case Format::Json: {
      Json doc;
      doc["query"] = {{"command", "fixed"}, {"rank", rank}, {"degree", degree}, {"genus", genus.value()}};
      Json results = Json::array();
      for (const auto& l : labels) results.push_back({{"component", to_string(l)}});
      doc["results"] = std::move(results);
      doc["meta"] = meta_json(genus, {});
      return dump(doc);
    }
    case Format::Csv: {
      std::string out = csv_line({"component"});
      for (const auto& l : labels) out += csv_line({to_string(l)});
      return out;
    }
    case Format::Table: {
      std::vector<std::vector<std::string>> rows{{"component"}};
      for (const auto& l : labels) rows.push_back({to_string(l)});
      return layout(rows);
    }
    case Format::Dot:
      no_dot("fixed component listings");
  }
  return {};
}

std::string render_outcome(const ClassifierInput& input, const InvariantRange& range,
                           const LimitOutcome& o, Format format) {
  const auto& s = input.stratum;
  switch (format) {
    case Format::Json: {
      Json doc;
      Json inv = invariant_json(input.invariant);
      doc["query"] = {{"command", "limit"},        {"genus", s.genus.value()},
                      {"degree", s.degree()},      {"hn", s.hn.to_string()},
                      {"invariant", inv}};
      doc["results"] = Json::array({outcome_json(o, range)});
      doc["meta"] = meta_json(s.genus, {o.case_tag});
      return dump(doc);
    }
    case Format::Csv:
      return csv_line({"stratum", "invariant", "case", "component", "hnt_limit"}) +
             csv_line({s.hn.to_string(), to_string(input.invariant), std::string(to_string(o.case_tag)),
                       to_string(o.component), o.hnt_limit.to_string()});
    case Format::Table: {
      std::string gd;
      for (Int x : o.graded_degrees) gd += (gd.empty() ? "" : ",") + std::to_string(x);
      std::vector<std::vector<std::string>> rows{
          {"stratum", s.hn.to_string()},
          {"invariant", to_string(input.invariant)},
          {"case", std::string(to_string(o.case_tag))},
          {"component", to_string(o.component)},
          {"graded_degrees", gd},
          {"hnt_limit", o.hnt_limit.to_string()},
          {"strictly_polystable", o.strictly_polystable ? "true" : "false"},
          {"feasible_set", feasible_text(range)},
      };
      return layout(rows);
    }
    case Format::Dot:
      no_dot("single limits");
  }
  return {};
}

std::string render_table(const IncidenceTable& t, Format format) {
  switch (format) {
    case Format::Json: {
      Json doc;
      doc["query"] = {{"command", "incidence"}, {"rank", t.rank}, {"degree", t.degree}, {"genus", t.genus.value()}};
      Json results = Json::array();
      std::set<CaseTag> cases;
      for (const auto& row : t.rows) {
        Json r;
        r["stratum"] = row.stratum.hn.to_string();
        r["case_family"] = family_text(row.stratum);
        r["feasible_set"] = feasible_json(row.range);
        Json outs = Json::array();
        for (const auto& e : row.entries) {
          Json o;
          o["invariant"] = invariant_json(e.invariant);
          o.update(outcome_json(e.outcome, row.range));
          outs.push_back(std::move(o));
          cases.insert(e.outcome.case_tag);
        }
        r["outcomes"] = std::move(outs);
        results.push_back(std::move(r));
      }
      doc["results"] = std::move(results);
      Json meta = meta_json(t.genus, cases);
      Json index;
      for (const auto& [lbl, strata] : t.bb_index) {
        Json arr = Json::array();
        for (const auto& hn : strata) arr.push_back(hn.to_string());
        index[to_string(lbl)] = std::move(arr);
      }
      meta["bb_index"] = std::move(index);
      doc["meta"] = std::move(meta);
      return dump(doc);
    }
    case Format::Csv: {
      std::string out = csv_line({"stratum", "invariant", "case", "component", "hnt_limit"});
      for (const auto& row : t.rows) {
        for (const auto& e : row.entries) {
          out += csv_line({row.stratum.hn.to_string(), to_string(e.invariant),
                           std::string(to_string(e.outcome.case_tag)), to_string(e.outcome.component),
                           e.outcome.hnt_limit.to_string()});
        }
      }
      return out;
    }
    case Format::Dot: {
      std::ostringstream os;
      os << "digraph incidence {\n  rankdir=LR;\n";
      os << "  label=" << dot_quote("rank " + std::to_string(t.rank) + ", degree " + std::to_string(t.degree) +
                                    ", genus " + std::to_string(t.genus.value()))
         << ";\n";
      std::map<FixedComponentLabel, std::size_t> bb_ids;
      for (const auto& [lbl, strata] : t.bb_index) {
        std::size_t id = bb_ids.size();
        bb_ids[lbl] = id;
        os << "  b" << id << " [shape=ellipse, label=" << dot_quote(to_string(lbl)) << "];\n";
      }
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        os << "  s" << i << " [shape=box, label=" << dot_quote(t.rows[i].stratum.hn.to_string()) << "];\n";
      }
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        std::map<std::size_t, std::set<std::string>> edges;
        for (const auto& e : t.rows[i].entries) {
          edges[bb_ids.at(e.outcome.component)].insert(std::string(to_string(e.outcome.case_tag)));
        }
        for (const auto& [target, tags] : edges) {
          std::string lab;
          for (const auto& tag : tags) lab += (lab.empty() ? "" : " ") + tag;
          os << "  s" << i << " -> b" << target << " [label=" << dot_quote(lab) << "];\n";
        }
      }
      os << "}\n";
      return os.str();
    }
    case Format::Table: {
      std::ostringstream os;
      os << "# rank " << t.rank << ", degree " << t.degree << ", genus " << t.genus.value() << "\n";
      std::vector<std::vector<std::string>> rows{
          {"stratum", "family", "invariant", "case", "component", "hnt_limit"}};
      for (const auto& row : t.rows) {
        for (const auto& e : row.entries) {
          rows.push_back({row.stratum.hn.to_string(), family_text(row.stratum), to_string(e.invariant),
                          std::string(to_string(e.outcome.case_tag)), to_string(e.outcome.component),
                          e.outcome.hnt_limit.to_string()});
        }
      }
      os << layout(rows);
      return os.str();
    }
  }
  return {};
}

}  // namespace hbstrata
