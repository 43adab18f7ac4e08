#include "wszeged/envelope.hpp"

#include <algorithm>
#include <map>

namespace wsz {

namespace {

void merge_tags(std::vector<Structure>& into, const std::vector<Structure>& from) {
  into.insert(into.end(), from.begin(), from.end());
  std::sort(into.begin(), into.end());
  into.erase(std::unique(into.begin(), into.end()), into.end());
}

// Is `b` redundant between `a` and `c` (slopes strictly decreasing a > b > c)?
// True when c overtakes a no later than b does.
bool redundant(const AffineCost& a, const AffineCost& b, const AffineCost& c) {
  // x(a,c) <= x(a,b)  <=>  (c.b - a.b)/(a.s - c.s) <= (b.b - a.b)/(a.s - b.s)
  const __int128 lhs = (static_cast<__int128>(c.intercept) - a.intercept) * (static_cast<__int128>(a.slope) - b.slope);
  const __int128 rhs = (static_cast<__int128>(b.intercept) - a.intercept) * (static_cast<__int128>(a.slope) - c.slope);
  return lhs <= rhs;
}

} // namespace

CostEnvelope CostEnvelope::single(AffineCost line, Structure tag, Int domain_start) {
  CostEnvelope e;
  e.domain_start_ = domain_start;
  e.pieces_.push_back({Rational(domain_start), line, {std::move(tag)}});
  return e;
}

CostEnvelope CostEnvelope::lower_envelope(std::vector<TaggedLine> lines, Int domain_start) {
  CostEnvelope e;
  e.domain_start_ = domain_start;
  if (lines.empty()) return e;

  // Merge identical lines, then keep the lowest line per slope.
  std::map<std::pair<Int, Int>, std::vector<Structure>> unique;
  for (auto& l : lines) merge_tags(unique[{l.line.slope, l.line.intercept}], l.tags);
  std::vector<TaggedLine> sorted;
  for (auto& [key, tags] : unique) {
    if (!sorted.empty() && sorted.back().line.slope == key.first) continue; // higher intercept
    sorted.push_back({{key.first, key.second}, std::move(tags)});
  }
  // Slopes descending: the minimum over the real line visits them in order.
  std::reverse(sorted.begin(), sorted.end());

  std::vector<TaggedLine> hull;
  for (auto& l : sorted) {
    while (hull.size() >= 2 && redundant(hull[hull.size() - 2].line, hull.back().line, l.line))
      hull.pop_back();
    hull.push_back(std::move(l));
  }

  // Clip to [domain_start, inf): drop pieces that end at or before the start.
  const Rational start(domain_start);
  std::size_t first = 0;
  while (first + 1 < hull.size() && intersection(hull[first].line, hull[first + 1].line) <= start)
    ++first;
  e.pieces_.push_back({start, hull[first].line, std::move(hull[first].tags)});
  for (std::size_t i = first + 1; i < hull.size(); ++i) {
    const Rational x = intersection(hull[i - 1].line, hull[i].line);
    e.pieces_.push_back({x, hull[i].line, std::move(hull[i].tags)});
  }
  return e;
}

Int CostEnvelope::at(Int n) const {
  if (pieces_.empty()) throw DomainError("empty cost envelope");
  if (n < domain_start_) throw DomainError("evaluation below the envelope domain");
  return pieces_[piece_index(Rational(n))].line.at(n);
}

std::size_t CostEnvelope::piece_index(const Rational& n) const {
  // Last piece whose start is <= n.
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), n,
                             [](const Rational& x, const EnvelopePiece& p) { return x < p.start; });
  return it == pieces_.begin() ? 0 : static_cast<std::size_t>(it - pieces_.begin()) - 1;
}

std::vector<Structure> CostEnvelope::argmin_at(Int n) const {
  const Rational x(n);
  const std::size_t i = piece_index(x);
  std::vector<Structure> out = pieces_[i].argmin;
  if (i > 0 && pieces_[i].start == x) merge_tags(out, pieces_[i - 1].argmin);
  return out;
}

CostEnvelope CostEnvelope::restricted(Int start) const {
  if (start < domain_start_) throw DomainError("restriction must shrink the domain");
  CostEnvelope e;
  e.domain_start_ = start;
  const Rational s(start);
  const std::size_t first = pieces_.empty() ? 0 : piece_index(s);
  for (std::size_t i = first; i < pieces_.size(); ++i) {
    e.pieces_.push_back(pieces_[i]);
    if (i == first) e.pieces_.back().start = s;
  }
  return e;
}

CostEnvelope CostEnvelope::plus(const AffineCost& line) const {
  CostEnvelope e = *this;
  for (auto& p : e.pieces_) p.line = p.line + line;
  return e;
}

CostEnvelope CostEnvelope::plus(const CostEnvelope& g, std::size_t appended_part) const {
  const Int start = std::max(domain_start_, g.domain_start_);
  const CostEnvelope a = restricted(start);
  const CostEnvelope b = g.restricted(start);
  CostEnvelope e;
  e.domain_start_ = start;
  std::size_t i = 0;
  std::size_t j = 0;
  Rational cursor(start);
  for (;;) {
    std::vector<Structure> tags = a.pieces_[i].argmin;
    if (appended_part != 0)
      for (auto& t : tags) {
        t.insert(std::upper_bound(t.begin(), t.end(), appended_part), appended_part);
      }
    const AffineCost line = a.pieces_[i].line + b.pieces_[j].line;
    if (!e.pieces_.empty() && e.pieces_.back().line == line) merge_tags(e.pieces_.back().argmin, tags);
    else e.pieces_.push_back({cursor, line, std::move(tags)});

    const bool a_more = i + 1 < a.pieces_.size();
    const bool b_more = j + 1 < b.pieces_.size();
    if (!a_more && !b_more) break;
    if (a_more && (!b_more || a.pieces_[i + 1].start <= b.pieces_[j + 1].start)) {
      cursor = a.pieces_[i + 1].start;
      if (b_more && b.pieces_[j + 1].start == cursor) ++j;
      ++i;
    } else {
      cursor = b.pieces_[j + 1].start;
      ++j;
    }
  }
  return e;
}

void CostEnvelope::collect(std::vector<TaggedLine>& out) const {
  for (const auto& p : pieces_) out.push_back({p.line, p.argmin});
}

bool CostEnvelope::under_line(const AffineCost& line) const {
  if (pieces_.empty()) return false;
  for (const auto& p : pieces_)
    if (compare_at(line, p.start, p.line) <= 0) return false;
  // Past the last breakpoint only the asymptotic slope matters.
  return line.slope >= pieces_.back().line.slope;
}

} // namespace wsz
