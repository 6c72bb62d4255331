#include "runperm/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace runperm {

RunPattern RunPattern::canonicalize(std::vector<Run> raw) {
  RunPattern out;
  for (const Run& r : raw) {
    if (r.length == 0) continue;
    if (!out.runs_.empty() && out.runs_.back().direction == r.direction) {
      out.runs_.back().length += r.length;
    } else {
      out.runs_.push_back(r);
    }
    out.total_ += r.length;
  }
  return out;
}

RunPattern RunPattern::alternating(const std::vector<std::uint32_t>& lengths) {
  std::vector<Run> raw;
  raw.reserve(lengths.size());
  Direction d = Direction::Up;
  for (std::uint32_t len : lengths) {
    raw.push_back({d, len});
    d = opposite(d);
  }
  return canonicalize(std::move(raw));
}

std::vector<Direction> RunPattern::direction_word() const {
  std::vector<Direction> word;
  word.reserve(total_);
  for (const Run& r : runs_) word.insert(word.end(), r.length, r.direction);
  return word;
}

std::vector<std::int64_t> RunPattern::encode() const {
  std::vector<std::int64_t> code;
  code.reserve(runs_.size());
  for (const Run& r : runs_) {
    const auto len = static_cast<std::int64_t>(r.length);
    code.push_back(r.direction == Direction::Up ? len : -len);
  }
  return code;
}

std::vector<Boundary> boundaries(const RunPattern& p) {
  const auto& runs = p.runs();
  std::vector<Boundary> out;
  out.reserve(runs.size() + 1);
  if (runs.empty()) {
    out.push_back({0, BoundaryKind::Valley, 0});
    return out;
  }
  out.push_back({0, runs.front().direction == Direction::Down ? BoundaryKind::Peak : BoundaryKind::Valley, 0});
  std::uint32_t pos = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    pos += runs[i].length;
    out.push_back({pos, runs[i].direction == Direction::Up ? BoundaryKind::Peak : BoundaryKind::Valley, i + 1});
  }
  return out;
}

RunPattern flip(const RunPattern& p) {
  std::vector<Run> runs = p.runs();
  for (Run& r : runs) r.direction = opposite(r.direction);
  return RunPattern::canonicalize(std::move(runs));
}

RunPattern reverse(const RunPattern& p) {
  std::vector<Run> runs(p.runs().rbegin(), p.runs().rend());
  for (Run& r : runs) r.direction = opposite(r.direction);
  return RunPattern::canonicalize(std::move(runs));
}

std::vector<RunPattern> symmetry_orbit(const RunPattern& p) {
  std::vector<RunPattern> orbit{p, flip(p), reverse(p), reverse(flip(p))};
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

PatternKey canonical_key(const RunPattern& p) {
  PatternKey best = p.encode();
  for (const RunPattern& q : {flip(p), reverse(p), reverse(flip(p))}) {
    best = std::min(best, q.encode());
  }
  return best;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

RunPattern parse_pattern(std::string_view text) {
  text = trim(text);
  if (text.empty()) return {};

  std::vector<Run> raw;
  int signed_fields = 0;
  int unsigned_fields = 0;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    std::string_view field = trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (field.empty()) throw std::invalid_argument("empty field in pattern '" + std::string(text) + "'");

    Direction dir = raw.empty() || raw.back().direction == Direction::Down ? Direction::Up : Direction::Down;
    if (field.front() == '+' || field.front() == '-') {
      dir = field.front() == '+' ? Direction::Up : Direction::Down;
      field.remove_prefix(1);
      ++signed_fields;
    } else {
      ++unsigned_fields;
    }
    std::uint32_t len = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), len);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw std::invalid_argument("bad run length '" + std::string(field) + "' in pattern");
    }
    raw.push_back({dir, len});

    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (signed_fields > 0 && unsigned_fields > 0) {
    throw std::invalid_argument("pattern mixes signed and unsigned run lengths");
  }
  return RunPattern::canonicalize(std::move(raw));
}

std::string format_pattern(const RunPattern& p) {
  std::string out;
  for (const Run& r : p.runs()) {
    if (!out.empty()) out += ',';
    out += r.direction == Direction::Up ? '+' : '-';
    out += std::to_string(r.length);
  }
  return out;
}

}  // namespace runperm
