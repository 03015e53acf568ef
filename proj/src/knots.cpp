#include "twistspin/knots.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "twistspin/error.hpp"

namespace twistspin {

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  offset += b;
  return s.substr(b, e - b);
}

struct Token {
  std::string text;
  std::size_t column;  // 1-based within the line
};

std::vector<Token> split_ws(std::string_view s, std::size_t base_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    out.push_back({std::string(s.substr(start, i - start)), base_column + start});
  }
  return out;
}

bool valid_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string upper(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

}  // namespace

GroupPresentation parse_presentation(std::string_view text) {
  std::vector<std::string> names;
  std::optional<std::size_t> gens_line;
  std::map<int, std::int64_t> weights;
  std::optional<std::size_t> weights_line;
  std::vector<FreeWord> relators;
  std::optional<FreeWord> longitude;
  std::size_t longitude_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t col0 = 0;
    std::string_view body = trim(line, col0);
    if (body.empty()) continue;
    const auto colon = body.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(line_no, col0 + 1, "expected 'key: value'");
    std::size_t key_offset = col0;
    const std::string key(trim(body.substr(0, colon), key_offset));
    const std::size_t value_column = col0 + colon + 2;  // 1-based, just after ':'
    const std::string_view value = body.substr(colon + 1);

    if (key == "gens") {
      if (gens_line) throw ParseError(line_no, col0 + 1, "duplicate 'gens' line");
      gens_line = line_no;
      for (const auto& tok : split_ws(value, value_column)) {
        if (!valid_name(tok.text))
          throw ParseError(line_no, tok.column, "invalid generator name '" + tok.text + "'");
        for (const auto& existing : names) {
          if (existing == tok.text)
            throw ParseError(line_no, tok.column, "duplicate generator name '" + tok.text + "'");
          if (upper(existing) == tok.text || upper(tok.text) == existing)
            throw ParseError(line_no, tok.column,
                             "generator name '" + tok.text + "' clashes with the inverse of '" +
                                 existing + "'");
        }
        names.push_back(tok.text);
      }
      if (names.empty()) throw ParseError(line_no, value_column, "no generators");
      continue;
    }
    if (!gens_line) throw ParseError(line_no, col0 + 1, "'gens' must come first");

    if (key == "weights") {
      if (weights_line) throw ParseError(line_no, col0 + 1, "duplicate 'weights' line");
      weights_line = line_no;
      for (const auto& tok : split_ws(value, value_column)) {
        const auto eq = tok.text.find('=');
        if (eq == std::string::npos)
          throw ParseError(line_no, tok.column, "expected name=weight");
        const std::string name = tok.text.substr(0, eq);
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
          throw ParseError(line_no, tok.column, "weight for unknown generator '" + name + "'");
        const int g = static_cast<int>(it - names.begin()) + 1;
        if (weights.count(g))
          throw ParseError(line_no, tok.column, "duplicate weight for '" + name + "'");
        const std::string num = tok.text.substr(eq + 1);
        try {
          std::size_t used = 0;
          weights[g] = std::stoll(num, &used);
          if (used != num.size()) throw std::invalid_argument(num);
        } catch (const std::exception&) {
          throw ParseError(line_no, tok.column + eq + 1, "bad weight '" + num + "'");
        }
      }
      continue;
    }

    if (key == "rel" || key == "longitude") {
      std::size_t word_col = value_column - 1;
      const std::string_view word_text = trim(value, word_col);
      FreeWord w;
      try {
        w = parse_word(word_text, names);
      } catch (const ParseError& e) {
        throw ParseError(line_no, word_col + e.column(), e.detail());
      }
      if (key == "rel") {
        if (word_text.empty()) throw ParseError(line_no, value_column, "empty relator");
        relators.push_back(std::move(w));
      } else {
        if (longitude) throw ParseError(line_no, col0 + 1, "duplicate 'longitude' line");
        longitude = std::move(w);
        longitude_line = line_no;
      }
      continue;
    }
    throw ParseError(line_no, col0 + 1, "unknown key '" + key + "'");
  }

  if (!gens_line) throw ParseError(line_no, 1, "missing 'gens' line");
  if (!weights_line) throw ParseError(*gens_line, 1, "missing 'weights' line");
  for (std::size_t g = 1; g <= names.size(); ++g)
    if (!weights.count(static_cast<int>(g)))
      throw ParseError(*weights_line, 1, "missing weight for '" + names[g - 1] + "'");

  AbelianizationWeights wts(weights);
  if (longitude && wts.degree(*longitude) != 0)
    throw ParseError(longitude_line, 1,
                     "longitude has abelianized weight " +
                         std::to_string(wts.degree(*longitude)) + ", expected 0");
  return GroupPresentation(std::move(names), std::move(relators), std::move(wts),
                           std::move(longitude));
}

// ---------------------------------------------------------------------------
// Braids

int BraidWord::writhe() const {
  int w = 0;
  for (int l : letters) w += l > 0 ? 1 : -1;
  return w;
}

std::vector<int> BraidWord::permutation() const {
  // at[pos] = strand currently at position pos
  std::vector<int> at(static_cast<std::size_t>(strand_count));
  std::iota(at.begin(), at.end(), 0);
  for (int l : letters) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> perm(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos)
    perm[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  return perm;
}

bool BraidWord::closes_to_knot() const {
  const auto perm = permutation();
  int k = 0, length = 0;
  do {
    k = perm[static_cast<std::size_t>(k)];
    ++length;
  } while (k != 0);
  return length == strand_count;
}

BraidWord parse_braid(std::string_view text) {
  std::size_t col = 0;
  std::string_view body = trim(text, col);
  const auto colon = body.find(':');
  if (body.empty() || (body[0] != 'B' && body[0] != 'b') || colon == std::string_view::npos)
    throw ParseError(1, col + 1, "expected 'B<n>: <letters>'");
  BraidWord b;
  const std::string count(body.substr(1, colon - 1));
  try {
    std::size_t used = 0;
    b.strand_count = std::stoi(count, &used);
    if (used != count.size()) throw std::invalid_argument(count);
  } catch (const std::exception&) {
    throw ParseError(1, col + 2, "bad strand count '" + count + "'");
  }
  if (b.strand_count < 2) throw ParseError(1, col + 2, "braids need at least 2 strands");

  for (const auto& tok : split_ws(body.substr(colon + 1), col + colon + 2)) {
    std::string t = tok.text;
    if (t.size() < 2 || (t[0] != 's' && t[0] != 'S'))
      throw ParseError(1, tok.column, "expected a letter 's<i>', got '" + t + "'");
    const int base_sign = t[0] == 'S' ? -1 : 1;
    std::int64_t exponent = 1;
    if (auto caret = t.find('^'); caret != std::string::npos) {
      try {
        std::size_t used = 0;
        exponent = std::stoll(t.substr(caret + 1), &used);
        if (used != t.size() - caret - 1) throw std::invalid_argument(t);
      } catch (const std::exception&) {
        throw ParseError(1, tok.column + caret + 1, "bad exponent in '" + t + "'");
      }
      t.resize(caret);
    }
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(t.substr(1), &used);
      if (used != t.size() - 1) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw ParseError(1, tok.column + 1, "bad generator index in '" + tok.text + "'");
    }
    if (index < 1 || index >= b.strand_count)
      throw ParseError(1, tok.column + 1,
                       "generator index out of range for B" + std::to_string(b.strand_count));
    const int sign = exponent < 0 ? -base_sign : base_sign;
    for (std::int64_t k = 0; k < (exponent < 0 ? -exponent : exponent); ++k)
      b.letters.push_back(sign * index);
  }
  return b;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

struct Crossing {
  int over = 0;
  int in = 0;
  int out = 0;
  int sign = 1;
};

}  // namespace

// Strands run downward. sigma_i (sign +1): the strand at position i+1 passes
// over to position i. Its inverse: the strand at position i passes over to
// i+1. At a crossing of sign e the under-arc changes from `in` to
// out = over^e in over^-e.
GroupPresentation braid_to_presentation(const BraidWord& b) {
  if (b.strand_count < 2) throw DomainError("braids need at least 2 strands");
  for (int l : b.letters)
    if (l == 0 || std::abs(l) >= b.strand_count)
      throw DomainError("braid letter out of range");
  if (!b.closes_to_knot())
    throw DomainError("braid closure is a multi-component link, not a knot");

  const auto n = static_cast<std::size_t>(b.strand_count);
  UnionFind arcs;
  std::vector<int> arc_at(n), strand_at(n);
  for (std::size_t k = 0; k < n; ++k) {
    arc_at[k] = arcs.add();
    strand_at[k] = static_cast<int>(k);
  }
  std::vector<Crossing> crossings;
  // Conjugators met by each strand while passing under, in order.
  std::vector<std::vector<std::pair<int, int>>> under_passes(n);

  for (int l : b.letters) {
    const auto left = static_cast<std::size_t>(std::abs(l) - 1);
    const auto right = left + 1;
    const int sign = l > 0 ? 1 : -1;
    const std::size_t over_pos = sign > 0 ? right : left;
    const std::size_t under_pos = sign > 0 ? left : right;
    Crossing c;
    c.over = arc_at[over_pos];
    c.in = arc_at[under_pos];
    c.out = arcs.add();
    c.sign = sign;
    crossings.push_back(c);
    under_passes[static_cast<std::size_t>(strand_at[under_pos])].emplace_back(c.over, sign);
    // Over strand moves to the under position's slot and vice versa.
    const int over_strand = strand_at[over_pos];
    const int under_strand = strand_at[under_pos];
    arc_at[under_pos] = c.over;
    strand_at[under_pos] = over_strand;
    arc_at[over_pos] = c.out;
    strand_at[over_pos] = under_strand;
  }
  // Closure: bottom arc at position k continues as the top arc at k.
  for (std::size_t k = 0; k < n; ++k) arcs.unite(arc_at[k], static_cast<int>(k));

  std::map<int, int> label;  // union-find root -> generator index
  for (int a = 0; a < static_cast<int>(arcs.parent.size()); ++a) {
    const int root = arcs.find(a);
    if (!label.count(root)) label.emplace(root, static_cast<int>(label.size()) + 1);
  }
  auto gen = [&](int arc, int sign = 1) {
    return FreeWord::generator(label.at(arcs.find(arc)), sign);
  };

  std::vector<FreeWord> relators;
  for (const auto& c : crossings) {
    const FreeWord conj = gen(c.over, c.sign);
    FreeWord r = conj * gen(c.in) * conj.inverse() * gen(c.out, -1);
    if (!r.is_identity()) relators.push_back(std::move(r));
  }

  // Follow the closure from strand 0; the final arc equals L x1 L^-1 with
  // L = g_k ... g_1, so L commutes with x1.
  const auto perm = b.permutation();
  std::vector<std::pair<int, int>> along;
  int strand = 0;
  do {
    const auto& passes = under_passes[static_cast<std::size_t>(strand)];
    along.insert(along.end(), passes.begin(), passes.end());
    strand = perm[static_cast<std::size_t>(strand)];
  } while (strand != 0);
  FreeWord longitude;
  for (auto it = along.rbegin(); it != along.rend(); ++it)
    longitude = longitude * gen(it->first, it->second);
  longitude = longitude * FreeWord::generator(1).power(-b.writhe());

  const int count = static_cast<int>(label.size());
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) names.push_back("x" + std::to_string(i));
  return GroupPresentation(std::move(names), std::move(relators),
                           AbelianizationWeights::uniform(count), std::move(longitude));
}

BraidWord torus_knot_braid(int p, int q) {
  if (p < 2 || q < 1 || std::gcd(p, q) != 1)
    throw DomainError("torus knot braid needs p >= 2, q >= 1 and gcd(p, q) = 1");
  BraidWord b;
  b.strand_count = p;
  for (int k = 0; k < q; ++k)
    for (int i = 1; i < p; ++i) b.letters.push_back(i);
  return b;
}

TorusKnot torus_knot(int p, int q) {
  if (p < 2 || q < 2) throw DomainError("torus knot needs p, q >= 2");
  if (std::gcd(p, q) != 1)
    throw DomainError("torus knot needs coprime (p, q), got (" + std::to_string(p) + ", " +
                      std::to_string(q) + ")");
  const FreeWord u = FreeWord::generator(1);
  const FreeWord v = FreeWord::generator(2);
  GroupPresentation pres({"u", "v"}, {u.power(p) * v.power(-q)},
                         AbelianizationWeights({{1, q}, {2, p}}));
  using LP = LaurentPolynomial;
  const LP numerator = LP::t_power_minus_one(std::int64_t{p} * q) * LP::t_power_minus_one(1);
  const LP denominator = LP::t_power_minus_one(p) * LP::t_power_minus_one(q);
  const LP delta = normalize_up_to_units(exact_quotient(numerator, denominator).to_integer());
  return {std::move(pres), delta};
}

}  // namespace twistspin
