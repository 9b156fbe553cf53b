#include "cli.hpp"

#include <charconv>

#include "hbstrata/admissibility.hpp"
#include "hbstrata/error.hpp"
#include "hbstrata/fixed_points.hpp"
#include "hbstrata/incidence.hpp"
#include "hbstrata/limit_classifier.hpp"
#include "hbstrata/verify.hpp"

namespace hbstrata::cli {

namespace {

struct UsageError {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError{message};
}

Int require_degree(const RunConfig& c) {
  require(c.degree.has_value(), "--degree is required for this command");
  return *c.degree;
}

void require_rank(const RunConfig& c) {
  require(c.rank == 2 || c.rank == 3, "--rank must be 2 or 3, got " + std::to_string(c.rank));
}

Invariant parse_invariant(const std::string& text, CaseFamily family) {
  if (family == CaseFamily::Case3_flag) {
    require(text == "true" || text == "false", "--inv must be true or false when mu2 = mu, got '" + text + "'");
    return Aligned{text == "true"};
  }
  Int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  require(ec == std::errc() && ptr == text.data() + text.size(),
          "--inv must be an integer degree for this stratum, got '" + text + "'");
  if (family == CaseFamily::Case1_I) return SlopeI{Rational(v)};
  return SlopeN{Rational(v)};
}

std::string run_limit(const RunConfig& c, const Genus& genus) {
  require(c.hn.has_value(), "--hn is required for limit");
  const HNType hn = HNType::parse(*c.hn);
  if (c.degree && *c.degree != hn.total_degree()) {
    throw Error(ErrorKind::DegreeMismatch, "--degree " + std::to_string(*c.degree) + " but --hn has degree " +
                                               std::to_string(hn.total_degree()));
  }
  const AdmissibleStratum stratum = validate(hn, genus);
  InvariantRange range;
  Invariant inv = NotApplicable{};
  if (stratum.rank() == 3 && !hn.is_semistable()) {
    range = invariant_range(stratum);
    require(c.invariant.has_value(),
            std::string("--inv is required: this stratum needs ") +
                (range.case_family == CaseFamily::Case3_flag ? "an alignment flag (true/false)"
                                                             : std::string("the degree of ") +
                                                                   (range.case_family == CaseFamily::Case1_I ? "I" : "N")));
    inv = parse_invariant(*c.invariant, range.case_family);
  } else if (c.invariant) {
    throw Error(ErrorKind::CaseFamilyMismatch, "--inv given but " + hn.to_string() + " takes no invariant");
  }
  ClassifierInput input{stratum, inv};
  return render_outcome(input, range, classify(input), c.format);
}

}  // namespace

RunResult run(const RunConfig& c) {
  RunResult r;
  try {
    if (c.command == Command::Verify) {
      require(c.genus_min >= 2 && c.genus_min <= c.genus_max, "--gmin/--gmax must satisfy 2 <= gmin <= gmax");
      require(c.degree_min <= c.degree_max, "--dmin must not exceed --dmax");
      auto results = verify::run_all({c.genus_min, c.genus_max, c.degree_min, c.degree_max});
      int passed = 0;
      for (const auto& res : results) {
        r.output += verify::format_result(res) + "\n";
        passed += res.passed ? 1 : 0;
      }
      r.output += std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed\n";
      r.exit_status = passed == static_cast<int>(results.size()) ? kExitOk : kExitFailure;
      return r;
    }

    require(c.genus >= 2, "--genus must be >= 2, got " + std::to_string(c.genus));
    const Genus genus(c.genus);
    switch (c.command) {
      case Command::Strata: {
        require_rank(c);
        const Int d = require_degree(c);
        r.output = render_strata(enumerate_strata(c.rank, d, genus), c.rank, d, genus, c.format);
        break;
      }
      case Command::Fixed: {
        require_rank(c);
        const Int d = require_degree(c);
        r.output = render_fixed(enumerate_fixed_components(c.rank, d, genus), c.rank, d, genus, c.format);
        break;
      }
      case Command::Limit:
        r.output = run_limit(c, genus);
        break;
      case Command::Incidence: {
        require_rank(c);
        const Int d = require_degree(c);
        r.output = render_table(build_table(c.rank, d, genus), c.format);
        break;
      }
      case Command::Verify:
        break;
    }
  } catch (const UsageError& e) {
    r.exit_status = kExitUsage;
    r.error = "usage error: " + e.message;
  } catch (const Error& e) {
    r.exit_status = kExitFailure;
    r.error = std::string("error: ") + e.what();
  }
  return r;
}

}  // namespace hbstrata::cli
