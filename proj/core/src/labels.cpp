#include "hbstrata/labels.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "hbstrata/error.hpp"

namespace hbstrata {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join(const std::vector<Int>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

[[noreturn]] void bad_label(std::string_view text) {
  throw Error(ErrorKind::ParseError, "bad component label '" + std::string(text) + "'");
}

std::vector<Int> split_ints(std::string_view s, char sep, std::string_view whole) {
  std::vector<Int> out;
  while (true) {
    auto pos = s.find(sep);
    auto item = s.substr(0, pos);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) bad_label(whole);
    out.push_back(v);
    if (pos == std::string_view::npos) break;
    s = s.substr(pos + 1);
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

label::PolystableSum make_polystable(std::vector<label::HodgeSummand> summands) {
  for (auto& s : summands) {
    // Hodge weights of a summand are only defined up to a common shift.
    if (!s.weights.empty()) {
      Int w0 = *std::min_element(s.weights.begin(), s.weights.end());
      for (auto& w : s.weights) w -= w0;
    }
  }
  std::sort(summands.begin(), summands.end(), [](const auto& a, const auto& b) {
    if (a.degrees.size() != b.degrees.size()) return a.degrees.size() > b.degrees.size();
    return a < b;
  });
  return label::PolystableSum{std::move(summands)};
}

std::string to_string(const FixedComponentLabel& l) {
  return std::visit(
      Overloaded{
          [](const label::Min&) { return std::string("min"); },
          [](const label::Rank2& x) { return "r2:" + std::to_string(x.d1); },
          [](const label::Type12& x) {
            return "t12:" + std::to_string(x.deg_sub) + "|" + std::to_string(x.deg_quot_pair);
          },
          [](const label::Type21& x) {
            return "t21:" + std::to_string(x.deg_sub_pair) + "|" + std::to_string(x.deg_quot);
          },
          [](const label::Type111& x) { return "t111:" + join({x.l1, x.l2, x.l3}, ','); },
          [](const label::PolystableSum& x) {
            std::string out = "poly:";
            for (std::size_t i = 0; i < x.summands.size(); ++i) {
              if (i) out += '+';
              out += "[" + join(x.summands[i].degrees, ',') + "]";
            }
            return out;
          },
      },
      l);
}

FixedComponentLabel parse_label(std::string_view text, Int rank, Int degree) {
  if (text == "min") return label::Min{rank, degree};
  if (starts_with(text, "r2:")) {
    auto v = split_ints(text.substr(3), ',', text);
    if (v.size() != 1) bad_label(text);
    return label::Rank2{v[0]};
  }
  if (starts_with(text, "t12:") || starts_with(text, "t21:")) {
    auto v = split_ints(text.substr(4), '|', text);
    if (v.size() != 2) bad_label(text);
    if (text[1] == '1') return label::Type12{v[0], v[1]};
    return label::Type21{v[0], v[1]};
  }
  if (starts_with(text, "t111:")) {
    auto v = split_ints(text.substr(5), ',', text);
    if (v.size() != 3) bad_label(text);
    return label::Type111{v[0], v[1], v[2]};
  }
  if (starts_with(text, "poly:")) {
    std::vector<label::HodgeSummand> summands;
    std::string_view rest = text.substr(5);
    while (!rest.empty()) {
      if (rest.front() != '[') bad_label(text);
      auto close = rest.find(']');
      if (close == std::string_view::npos) bad_label(text);
      label::HodgeSummand s;
      s.degrees = split_ints(rest.substr(1, close - 1), ',', text);
      s.weights.resize(s.degrees.size());
      std::iota(s.weights.begin(), s.weights.end(), Int{0});
      summands.push_back(std::move(s));
      rest = rest.substr(close + 1);
      if (!rest.empty()) {
        if (rest.front() != '+') bad_label(text);
        rest = rest.substr(1);
      }
    }
    if (summands.size() < 2) bad_label(text);
    return make_polystable(std::move(summands));
  }
  bad_label(text);
}

std::optional<Int> label_degree(const FixedComponentLabel& l) {
  return std::visit(
      Overloaded{
          [](const label::Min& x) -> std::optional<Int> { return x.degree; },
          [](const label::Rank2&) -> std::optional<Int> { return std::nullopt; },
          [](const label::Type12& x) -> std::optional<Int> { return x.deg_sub + x.deg_quot_pair; },
          [](const label::Type21& x) -> std::optional<Int> { return x.deg_sub_pair + x.deg_quot; },
          [](const label::Type111& x) -> std::optional<Int> { return x.l1 + x.l2 + x.l3; },
          [](const label::PolystableSum& x) -> std::optional<Int> {
            Int d = 0;
            for (const auto& s : x.summands) d = std::accumulate(s.degrees.begin(), s.degrees.end(), d);
            return d;
          },
      },
      l);
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Semistable: return "ss";
    case CaseTag::Rank2Unstable: return "rk2";
    case CaseTag::C1_1: return "1.1";
    case CaseTag::C1_2: return "1.2";
    case CaseTag::C1_3: return "1.3";
    case CaseTag::C1_4: return "1.4";
    case CaseTag::C2_1: return "2.1";
    case CaseTag::C2_2: return "2.2";
    case CaseTag::C2_3: return "2.3";
    case CaseTag::C2_4: return "2.4";
    case CaseTag::C3_1: return "3.1";
    case CaseTag::C3_2: return "3.2";
  }
  return "?";
}

std::optional<CaseTag> parse_case_tag(std::string_view text) {
  for (CaseTag t : kAllCaseTags) {
    if (to_string(t) == text) return t;
  }
  return std::nullopt;
}

bool is_strictly_polystable_case(CaseTag tag) {
  return tag == CaseTag::C1_2 || tag == CaseTag::C2_2 || tag == CaseTag::C3_2;
}

}  // namespace hbstrata
