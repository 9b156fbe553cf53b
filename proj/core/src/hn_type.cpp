#include "hbstrata/hn_type.hpp"

#include <algorithm>
#include <charconv>

#include "hbstrata/error.hpp"

namespace hbstrata {

Genus::Genus(Int g) : g_(g) {
  if (g < 2) throw Error(ErrorKind::ParseError, "genus must be >= 2, got " + std::to_string(g));
}

Rational slope(Int rank, Int degree) {
  if (rank <= 0) throw Error(ErrorKind::ZeroRank, "slope needs a positive rank");
  return Rational(degree, rank);
}

HNType::HNType(std::vector<HNStep> steps) {
  if (steps.empty()) throw Error(ErrorKind::InvalidHNType, "empty HN type");
  for (const auto& s : steps) {
    if (s.rank <= 0) throw Error(ErrorKind::ZeroRank, "HN step with non-positive rank");
    if (!steps_.empty() && steps_.back().slope() == s.slope()) {
      steps_.back().rank += s.rank;
      steps_.back().degree += s.degree;
      continue;
    }
    if (!steps_.empty() && steps_.back().slope() < s.slope()) {
      throw Error(ErrorKind::InvalidHNType, "slopes must be non-increasing");
    }
    steps_.push_back(s);
  }
  for (const auto& s : steps_) {
    total_rank_ += s.rank;
    total_degree_ += s.degree;
  }
}

HNType HNType::from_pieces(std::vector<HNStep> pieces) {
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const HNStep& a, const HNStep& b) { return a.slope() > b.slope(); });
  return HNType(std::move(pieces));
}

namespace {

Int parse_int_or_throw(std::string_view s, std::string_view whole) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorKind::ParseError, "bad HN type text '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

HNType HNType::parse(std::string_view text) {
  std::vector<HNStep> steps;
  std::string_view rest = text;
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::ParseError, "bad HN type text '" + std::string(text) + "'");
    }
    steps.push_back({parse_int_or_throw(item.substr(0, colon), text),
                     parse_int_or_throw(item.substr(colon + 1), text)});
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return HNType(std::move(steps));
}

std::vector<Rational> HNType::slope_vector() const {
  std::vector<Rational> out;
  for (const auto& s : steps_) {
    for (Int i = 0; i < s.rank; ++i) out.push_back(s.slope());
  }
  return out;
}

std::string HNType::to_string() const {
  std::string out;
  for (const auto& s : steps_) {
    if (!out.empty()) out += ',';
    out += std::to_string(s.rank) + ":" + std::to_string(s.degree);
  }
  return out;
}

Rational HNPolygon::height_at(Int rank) const {
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    auto [r0, d0] = vertices[i - 1];
    auto [r1, d1] = vertices[i];
    if (rank <= r1) return Rational(d0) + Rational(d1 - d0, r1 - r0) * Rational(rank - r0);
  }
  throw Error(ErrorKind::MismatchedEndpoints, "rank beyond polygon");
}

HNPolygon polygon_of(const HNType& hn) {
  HNPolygon p;
  p.vertices.emplace_back(0, 0);
  Int r = 0;
  Int d = 0;
  for (const auto& s : hn.steps()) {
    r += s.rank;
    d += s.degree;
    p.vertices.emplace_back(r, d);
  }
  return p;
}

bool dominates(const HNPolygon& p, const HNPolygon& q) {
  if (p.vertices.front() != q.vertices.front() || p.vertices.back() != q.vertices.back()) {
    throw Error(ErrorKind::MismatchedEndpoints, "polygons do not share endpoints");
  }
  for (Int k = 1; k < p.total_rank(); ++k) {
    if (p.height_at(k) < q.height_at(k)) return false;
  }
  return true;
}

Rational height_sum(const HNPolygon& p) {
  Rational sum;
  for (Int k = 1; k < p.total_rank(); ++k) sum += p.height_at(k);
  return sum;
}

}  // namespace hbstrata
