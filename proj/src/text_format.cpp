#include "orbitcalc/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

namespace orbitcalc {

namespace {

[[noreturn]] void fail(const std::string& what, std::string_view token) {
  throw Error(ErrorCode::kParse, what + ": '" + std::string(token) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    if (ec == std::errc::result_out_of_range) fail("integer out of range", token);
    fail("bad integer in " + std::string(context), token);
  }
  return value;
}

// Splits on commas and whitespace, dropping empty pieces.
std::vector<std::string_view> tokens(std::string_view body) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  const auto sep = [](char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c));
  };
  while (i < body.size()) {
    while (i < body.size() && sep(body[i])) ++i;
    std::size_t j = i;
    while (j < body.size() && !sep(body[j])) ++j;
    if (j > i) out.push_back(body.substr(i, j - i));
    i = j;
  }
  return out;
}

// "b" or "b^a", with optional spaces around '^' already removed.
PartPower parse_power(std::string_view token) {
  const auto caret = token.find('^');
  if (caret == std::string_view::npos) return {parse_int(token, "part"), 1};
  return {parse_int(token.substr(0, caret), "part"),
          parse_int(token.substr(caret + 1), "exponent")};
}

std::string strip_caret_spaces(std::string_view body) {
  std::string out;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(body[i]))) {
      std::size_t j = i;
      while (j < body.size() && std::isspace(static_cast<unsigned char>(body[j]))) ++j;
      const bool before_caret = j < body.size() && body[j] == '^';
      const bool after_caret = !out.empty() && out.back() == '^';
      if (!before_caret && !after_caret) out += ' ';
      i = j - 1;
      continue;
    }
    out += body[i];
  }
  return out;
}

std::string_view unwrap(std::string_view text, char open, char close,
                        const char* what) {
  text = trim(text);
  if (text.size() < 2 || text.front() != open || text.back() != close) {
    fail(std::string("expected ") + what + " enclosed in " + open + close, text);
  }
  return text.substr(1, text.size() - 2);
}

}  // namespace

Partition parse_partition(std::string_view text) {
  const std::string body = strip_caret_spaces(unwrap(text, '[', ']', "partition"));
  std::vector<int> parts;
  for (auto tok : tokens(body)) {
    const PartPower pw = parse_power(tok);
    if (pw.part <= 0) fail("parts must be positive", tok);
    if (pw.multiplicity <= 0) fail("exponents must be positive", tok);
    if (!parts.empty() && pw.part > parts.back()) {
      fail("parts must be weakly decreasing", tok);
    }
    if (parts.size() + static_cast<std::size_t>(pw.multiplicity) > 1000000) {
      fail("partition too long", tok);
    }
    parts.insert(parts.end(), static_cast<std::size_t>(pw.multiplicity), pw.part);
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

GroupType parse_group(std::string_view text) {
  text = trim(text);
  if (text.empty()) fail("empty group", text);
  Family family{};
  switch (std::toupper(static_cast<unsigned char>(text.front()))) {
    case 'B': family = Family::B; break;
    case 'C': family = Family::C; break;
    case 'D': family = Family::D; break;
    default: fail("group family must be B, C or D", text);
  }
  const int rank = parse_int(text.substr(1), "group rank");
  if (rank < 0) fail("negative rank", text);
  return make_group(family, rank);
}

ArthurPartitionData parse_parameter(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    fail("parameter must look like C6:{3^3,2^2}", text);
  }
  const GroupType group = parse_group(text.substr(0, colon));
  const std::string_view rest = trim(text.substr(colon + 1));
  if (!rest.empty() && rest.front() == '[') {
    return ArthurPartitionData::from_partition(group, parse_partition(rest));
  }
  const std::string body = strip_caret_spaces(unwrap(rest, '{', '}', "factors"));
  std::vector<ArthurFactor> factors;
  for (auto tok : tokens(body)) {
    const PartPower pw = parse_power(tok);
    factors.push_back({pw.multiplicity, pw.part});
  }
  return ArthurPartitionData::validate(group, std::move(factors));
}

Family parse_source_family(std::string_view text) {
  std::string s(trim(text));
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s == "b" || s == "soodd") return Family::B;
  if (s == "c" || s == "sp") return Family::C;
  if (s == "d" || s == "soeven") return Family::D;
  fail("unknown eta source (use B|C|D or soOdd|sp|soEven)", text);
}

}  // namespace orbitcalc
