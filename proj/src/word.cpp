#include "liftcover/word.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "liftcover/error.hpp"

namespace liftcover {

namespace {

void require_genus(std::size_t genus) {
  if (genus == 0) throw Error(ErrorCode::InvalidArgument, "genus must be at least 1");
}

void require_valid(const Generator& g, std::size_t genus) {
  if (!g.valid_for(genus)) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index out of range: " + g.name() + " at genus " + std::to_string(genus));
  }
}

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }
bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

}  // namespace

bool Generator::valid_for(std::size_t genus) const {
  switch (kind) {
    case CurveKind::A:
    case CurveKind::B: return index >= 1 && index <= genus;
    case CurveKind::C: return index >= 1 && index + 1 <= genus;
    case CurveKind::Iota: return index == 0;
  }
  return false;
}

std::string Generator::name() const {
  switch (kind) {
    case CurveKind::A: return "a" + std::to_string(index);
    case CurveKind::B: return "b" + std::to_string(index);
    case CurveKind::C: return "c" + std::to_string(index);
    case CurveKind::Iota: return "iota";
  }
  return "?";
}

std::vector<Generator> lickorish_generators(std::size_t genus) {
  require_genus(genus);
  std::vector<Generator> out;
  for (std::size_t i = 1; i <= genus; ++i) out.push_back(Generator::a(i));
  for (std::size_t i = 1; i <= genus; ++i) out.push_back(Generator::b(i));
  for (std::size_t i = 1; i < genus; ++i) out.push_back(Generator::c(i));
  return out;
}

MCGWord::MCGWord(std::size_t genus, std::vector<Letter> letters) : genus_(genus) {
  require_genus(genus);
  letters_.reserve(letters.size());
  for (const Letter& l : letters) append(l.generator, l.exponent);
}

MCGWord& MCGWord::append(Generator generator, std::int64_t exponent) {
  require_valid(generator, genus_);
  if (exponent != 0) letters_.push_back({generator, exponent});
  return *this;
}

MCGWord MCGWord::inverse() const {
  MCGWord out(genus_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    if (it->exponent == std::numeric_limits<std::int64_t>::min()) {
      throw Error(ErrorCode::InvalidArgument, "exponent cannot be negated");
    }
    out.letters_.push_back({it->generator, -it->exponent});
  }
  return out;
}

MCGWord concat(const MCGWord& u, const MCGWord& v) {
  if (u.genus() != v.genus()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot concatenate words of different genus");
  }
  MCGWord out = u;
  out.letters_.insert(out.letters_.end(), v.letters_.begin(), v.letters_.end());
  return out;
}

MCGWord parse_word(std::string_view text, std::size_t genus) {
  require_genus(genus);
  MCGWord word(genus);
  std::size_t pos = 0;
  const std::size_t n = text.size();

  auto parse_int = [&](bool allow_sign, std::size_t& at) -> std::int64_t {
    const std::size_t start = at;
    if (allow_sign && at < n && (text[at] == '-' || text[at] == '+')) ++at;
    const std::size_t digits = at;
    while (at < n && is_digit(text[at])) ++at;
    if (at == digits) throw ParseError(at, "expected digits");
    std::string_view number = text.substr(start, at - start);
    if (!number.empty() && number.front() == '+') number.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
    if (ec != std::errc() || ptr != number.data() + number.size()) {
      throw ParseError(start, "integer out of range");
    }
    return value;
  };

  while (true) {
    while (pos < n && is_space(text[pos])) ++pos;
    if (pos >= n) break;

    const std::size_t token_start = pos;
    Generator gen;
    if (text.substr(pos, 4) == "iota") {
      gen = Generator::iota();
      pos += 4;
    } else {
      const char ch = text[pos];
      if (ch == 'a') gen.kind = CurveKind::A;
      else if (ch == 'b') gen.kind = CurveKind::B;
      else if (ch == 'c') gen.kind = CurveKind::C;
      else throw ParseError(pos, std::string("unexpected character '") + ch + "'");
      ++pos;
      const std::int64_t index = parse_int(false, pos);
      if (index <= 0) throw ParseError(token_start + 1, "curve index must be positive");
      gen.index = static_cast<std::size_t>(index);
    }

    std::int64_t exponent = 1;
    if (pos < n && text[pos] == '^') {
      ++pos;
      exponent = parse_int(true, pos);
    }
    if (pos < n && !is_space(text[pos])) {
      throw ParseError(pos, std::string("unexpected character '") + text[pos] + "'");
    }
    word.append(gen, exponent);
  }
  return word;
}

std::string format_word(const MCGWord& word) {
  std::string out;
  for (const Letter& l : word.letters()) {
    if (!out.empty()) out += ' ';
    out += l.generator.name();
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

}  // namespace liftcover
