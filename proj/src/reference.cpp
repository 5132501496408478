#include "yangian/reference.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace yangian {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '{' && c != '}') out += c;
  return out;
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + sep.size();
  }
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace

std::vector<GaussianRational> expand_set_shorthand(std::string_view text) {
  const std::string body = strip(text);
  std::set<GaussianRational> out;
  std::optional<Rational> previous;
  if (body.empty()) return {};
  for (const auto& item : split(body, ",")) {
    if (item.empty()) throw Error("empty item in set shorthand '" + std::string(text) + "'");
    struct Mark {
      Rational value;
      bool hat;
    };
    std::vector<Mark> chain;
    auto parts = split(item, "..");
    const bool continues = parts.front().empty() || parts.front().front() == '^';
    if (continues) {
      if (!previous)
        throw Error("range continuation without a preceding value in '" + std::string(text) + "'");
      chain.push_back({*previous, false});
      if (parts.front().empty()) parts.erase(parts.begin());
    }
    for (const auto& p : parts) {
      if (p.empty()) throw Error("empty range bound in '" + std::string(text) + "'");
      const bool hat = p.front() == '^';
      chain.push_back({parse_rational(hat ? p.substr(1) : p), hat});
    }
    const Rational lo = chain.front().value;
    const Rational hi = chain.back().value;
    std::set<Rational> hats;
    for (std::size_t k = 0; k < chain.size(); ++k) {
      if (k > 0 && chain[k].value < chain[k - 1].value)
        throw Error("decreasing range in '" + std::string(text) + "'");
      if (!is_integer(chain[k].value - lo))
        throw Error("range bounds differ by a non-integer in '" + std::string(text) + "'");
      if (chain[k].hat) hats.insert(chain[k].value);
    }
    for (Rational x = lo; x <= hi; x += 1)
      if (!hats.count(x)) out.insert(GaussianRational(x));
    previous = hi;
  }
  return {out.begin(), out.end()};
}

std::vector<ReferenceEntry> reference_table(const LieType& type) {
  switch (type.family) {
    case Family::E:
      if (type.rank == 6)
        return {{1, 1, "1,4"}, {1, 2, "5/2,9/2"}, {1, 3, "3/2,7/2,9/2"}, {1, 4, "2,3,4,5"},
                {1, 5, "5/2,7/2,11/2"}, {1, 6, "3,6"}, {2, 2, "1,3,4,6"}, {2, 3, "2,3,4,5"},
                {2, 4, "3/2,5/2,7/2,9/2,11/2"}, {2, 5, "2,3,4,5"}, {2, 6, "5/2,9/2"},
                {3, 3, "1,2,3,4,5"}, {3, 4, "3/2,5/2,7/2,9/2,11/2"}, {3, 5, "2,3,4,5,6"},
                {3, 6, "5/2,7/2,11/2"}, {4, 4, "1,2,3,4,5,6"}, {4, 5, "3/2,5/2,7/2,9/2,11/2"},
                {4, 6, "2,3,4,5"}, {5, 5, "1,2,3,4,5"}, {5, 6, "3/2,7/2,9/2"}, {6, 6, "1,4"}};
      if (type.rank == 7)
        return {{1, 1, "1,4,6,9"}, {1, 2, "5/2,9/2,11/2,15/2"}, {1, 3, "3/2,7/2..13/2,17/2"},
                {1, 4, "2..8"}, {1, 5, "5/2..15/2"}, {1, 6, "3,4,6,7"}, {1, 7, "7/2,13/2"},
                {2, 2, "1,3..7,9"}, {2, 3, "2..8"}, {2, 4, "3/2..17/2"}, {2, 5, "2..8"},
                {2, 6, "5/2..15/2"}, {2, 7, "3,5,7"}, {3, 3, "1..9"}, {3, 4, "3/2..17/2"},
                {3, 5, "2..8"}, {3, 6, "5/2..15/2"}, {3, 7, "3,4,6,7"}, {4, 4, "1..9"},
                {4, 5, "3/2,..17/2"}, {4, 6, "2..8"}, {4, 7, "5/2..15/2"}, {5, 5, "1..9"},
                {5, 6, "3/2..17/2"}, {5, 7, "2,4,5,6,8"}, {6, 6, "1,2,4,5,6,8,9"},
                {6, 7, "3/2,9/2,11/2,17/2"}, {7, 7, "1,5,9"}};
      return {{1, 1, "1,4,6,7,9,10,12,15"}, {1, 2, "5/2..^7/2..^25/2..27/2"},
              {1, 3, "3/2..^27/2..29/2"}, {1, 4, "2..14"}, {1, 5, "5/2..27/2"}, {1, 6, "3..13"},
              {1, 7, "7/2..^11/2..^21/2..25/2"}, {1, 8, "4,7,9,12"}, {2, 2, "1..^2..^14..15"},
              {2, 3, "2..14"}, {2, 4, "3/2..29/2"}, {2, 5, "2..14"}, {2, 6, "5/2..27/2"},
              {2, 7, "3..13"}, {2, 8, "7/2,11/2,15/2,17/2,21/2,25/2"}, {3, 3, "1..15"},
              {3, 4, "3/2..29/2"}, {3, 5, "2..14"}, {3, 6, "5/2..27/2"}, {3, 7, "3..13"},
              {3, 8, "7/2..^11/2..^21/2..25/2"}, {4, 4, "1..15"}, {4, 5, "3/2..29/2"},
              {4, 6, "2..14"}, {4, 7, "5/2..27/2"}, {4, 8, "3..13"}, {5, 5, "1..15"},
              {5, 6, "3/2..29/2"}, {5, 7, "2..14"}, {5, 8, "5/2..^7/2..^25/2..27/2"},
              {6, 6, "1..15"}, {6, 7, "3/2,^7/2..^15/2..^25/2..29/2"}, {6, 8, "2,5..^8..11,14"},
              {7, 7, "1,2,5..^8..11,14,15"}, {7, 8, "3/2,11/2,13/2,19/2,21/2,29/2"},
              {8, 8, "1,6,10,15"}};
    case Family::F:
      // S(2,1) and S(4,3) are printed as references to S(1,2) and S(3,4).
      return {{1, 1, "1,4,5,8"}, {1, 2, "2..7"}, {1, 3, "2..7"}, {1, 4, "5/2,7/2,11/2,13/2"},
              {2, 1, "2..7"}, {2, 2, "1..8"}, {2, 3, "1..8"}, {2, 4, "3/2..15/2"},
              {3, 1, "3,4,6,7"}, {3, 2, "2..^4..8"}, {3, 3, "1..9"},
              {3, 4, "3/2..^5/2..^15/2..17/2"}, {4, 1, "7/2,13/2"}, {4, 2, "5/2,9/2,11/2,15/2"},
              {4, 3, "3/2..^5/2..^15/2..17/2"}, {4, 4, "1,4,6,9"}};
    case Family::G:
      return {{1, 1, "3,4,5,6"}, {1, 2, "1/2,3/2,5/2,7/2,9/2"}, {2, 1, "9/2,13/2"},
              {2, 2, "1,3,4,6"}};
    default:
      return {};
  }
}

std::vector<GaussianRational> closed_form_set(const LieType& type, Node b1, Node b2) {
  const int l = type.rank;
  if (b1 < 1 || b1 > l || b2 < 1 || b2 > l) throw Error("node out of range");
  const Rational half = make_rational(1, 2);
  std::set<Rational> s;
  auto step_range = [&](int lo, int hi, int step) {
    for (int x = lo; x <= hi; x += step) s.insert(Rational(x));
  };
  switch (type.family) {
    case Family::A:
      for (int k = 1; k <= std::min(b1, l - b2 + 1); ++k) s.insert(half * std::abs(b2 - b1) + k);
      break;
    case Family::B:
      if (b1 < l && b2 < l) {
        for (int r = 0; r < std::min(b1, b2); ++r) {
          s.insert(Rational(std::abs(b1 - b2) + 2 + 2 * r));
          s.insert(Rational(2 * l - (b1 + b2) + 1 + 2 * r));
        }
      } else if (b1 == l && b2 < l) {
        for (int r = 0; r < b2; ++r) s.insert(Rational(l - b2 + 2 + 2 * r));
      } else if (b1 < l && b2 == l) {
        for (int r = 0; r < b1; ++r) {
          s.insert(Rational(l - b1 + 1 + r));
          s.insert(Rational(l - b1 + r));
        }
      } else {
        step_range(1, 2 * l - 1, 2);
      }
      break;
    case Family::C:
      if (b1 < l && b2 < l) {
        for (int r = 0; r < std::min(b1, b2); ++r) {
          s.insert(half * std::abs(b1 - b2) + 1 + r);
          s.insert(Rational(l + 2 + r) - half * (b1 + b2));
        }
      } else if (b1 == l && b2 < l) {
        for (int r = 0; r < b2; ++r) {
          s.insert(half * (l - b2 + 1) + 1 + r);
          s.insert(half * (l - b2 - 1) + 1 + r);
        }
      } else if (b1 < l && b2 == l) {
        for (int r = 0; r < b1; ++r) s.insert(half * (l - b1 + 1) + 2 + r);
      } else {
        step_range(2, l + 1, 1);
      }
      break;
    case Family::D: {
      const int parity = l % 2;
      const bool spin1 = b1 >= l - 1, spin2 = b2 >= l - 1;
      if (!spin1 && !spin2) {
        for (int r = 0; r < std::min(b1, b2); ++r) {
          s.insert(half * std::abs(b1 - b2) + 1 + r);
          s.insert(Rational(l + r) - half * (b1 + b2));
        }
      } else if (spin1 != spin2) {
        const int b = spin1 ? b2 : b1;
        for (int r = 0; r < b; ++r) s.insert(half * (l - 1 - b) + 1 + r);
      } else if (b1 != b2) {
        step_range(2, l - 2 + parity, 2);
      } else {
        step_range(1, l - 1 - parity, 2);
      }
      break;
    }
    default:
      throw Error("closed forms exist for classical families only, not " + type.name());
  }
  std::vector<GaussianRational> out;
  for (const auto& q : s) out.emplace_back(q);
  return out;
}

std::optional<std::vector<GaussianRational>> reference_set(const LieType& type, Node b1, Node b2) {
  if (b1 < 1 || b1 > type.rank || b2 < 1 || b2 > type.rank) throw Error("node out of range");
  switch (type.family) {
    case Family::E:
    case Family::F:
    case Family::G: {
      const bool symmetric = type.family == Family::E;
      for (const auto& e : reference_table(type)) {
        if ((e.b1 == b1 && e.b2 == b2) || (symmetric && e.b1 == b2 && e.b2 == b1))
          return expand_set_shorthand(e.shorthand);
      }
      return std::nullopt;
    }
    default:
      return closed_form_set(type, b1, b2);
  }
}

}  // namespace yangian
