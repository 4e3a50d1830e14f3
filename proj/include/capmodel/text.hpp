#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace capmodel {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

inline std::string trim(std::string_view s) {
  const char* ws = " \t\r\n";
  std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

// Validates that `s` is well-formed UTF-8 (no overlong forms, no surrogates,
// codepoints <= U+10FFFF).
inline bool is_valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t len;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (len == 2 && cp < 0x80) return false;
    if (len == 3 && cp < 0x800) return false;
    if (len == 4 && cp < 0x10000) return false;
    if (cp > 0x10FFFF) return false;
    if (cp >= 0xD800 && cp <= 0xDFFF) return false;
    i += len;
  }
  return true;
}

namespace detail {

// Decodes one UTF-8 codepoint at s[i]; advances i. Invalid bytes decode as
// U+FFFD and advance by one (loaders reject invalid encodings up front, this
// keeps the normalizer total).
inline std::uint32_t decode_utf8(std::string_view s, std::size_t& i) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 0x80) {
    ++i;
    return c;
  }
  std::size_t len = (c & 0xE0) == 0xC0 ? 2 : (c & 0xF0) == 0xE0 ? 3 : (c & 0xF8) == 0xF0 ? 4 : 0;
  if (len == 0 || i + len > s.size()) {
    ++i;
    return 0xFFFD;
  }
  std::uint32_t cp = c & (0xFF >> (len + 1));
  for (std::size_t k = 1; k < len; ++k) {
    unsigned char cc = static_cast<unsigned char>(s[i + k]);
    if ((cc & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (cc & 0x3F);
  }
  i += len;
  return cp;
}

// Latin-1 Supplement letters and the common Latin Extended-A ones mapped to
// their unaccented ASCII base. Returns nullptr for codepoints not covered,
// which then pass through unchanged.
inline const char* strip_diacritic(std::uint32_t cp) {
  switch (cp) {
    case 0xC0: case 0xC1: case 0xC2: case 0xC3: case 0xC4: case 0xC5:
    case 0xE0: case 0xE1: case 0xE2: case 0xE3: case 0xE4: case 0xE5: return "a";
    case 0xC6: case 0xE6: return "ae";
    case 0xC7: case 0xE7: return "c";
    case 0xC8: case 0xC9: case 0xCA: case 0xCB:
    case 0xE8: case 0xE9: case 0xEA: case 0xEB: return "e";
    case 0xCC: case 0xCD: case 0xCE: case 0xCF:
    case 0xEC: case 0xED: case 0xEE: case 0xEF: return "i";
    case 0xD0: case 0xF0: return "d";
    case 0xD1: case 0xF1: return "n";
    case 0xD2: case 0xD3: case 0xD4: case 0xD5: case 0xD6: case 0xD8:
    case 0xF2: case 0xF3: case 0xF4: case 0xF5: case 0xF6: case 0xF8: return "o";
    case 0xD9: case 0xDA: case 0xDB: case 0xDC:
    case 0xF9: case 0xFA: case 0xFB: case 0xFC: return "u";
    case 0xDD: case 0xFD: case 0xFF: case 0x178: return "y";
    case 0xDF: return "ss";
    case 0x152: case 0x153: return "oe";
    case 0x141: case 0x142: return "l";
    case 0x160: case 0x161: case 0x15E: case 0x15F: return "s";
    case 0x17D: case 0x17E: case 0x179: case 0x17A: case 0x17B: case 0x17C: return "z";
    case 0x106: case 0x107: case 0x10C: case 0x10D: return "c";
    case 0x100: case 0x101: case 0x102: case 0x103: case 0x104: case 0x105: return "a";
    case 0x112: case 0x113: case 0x118: case 0x119: case 0x11A: case 0x11B: return "e";
    case 0x11E: case 0x11F: return "g";
    case 0x130: case 0x131: case 0x128: case 0x129: case 0x12A: case 0x12B: return "i";
    case 0x143: case 0x144: case 0x147: case 0x148: return "n";
    case 0x150: case 0x151: case 0x14C: case 0x14D: return "o";
    case 0x154: case 0x155: case 0x158: case 0x159: return "r";
    case 0x164: case 0x165: return "t";
    case 0x16A: case 0x16B: case 0x16E: case 0x16F: case 0x170: case 0x171: return "u";
    default: return nullptr;
  }
}

}  // namespace detail

inline const std::vector<std::string>& default_suffix_stoplist() {
  static const std::vector<std::string> list = {
      "s p a", "spa", "s r l", "srl", "s r l s", "s n c", "snc", "s a s", "sas",
      "s c a r l", "scarl", "s c r l", "inc", "ltd", "llc", "plc", "gmbh", "co ltd",
  };
  return list;
}

// Deterministic canonical form for an organization name: case-folded,
// diacritics stripped, punctuation collapsed to single spaces, trailing
// legal-form suffix tokens removed, whitespace trimmed. Total function;
// empty output is flagged by the loader as a validation warning.
inline std::string normalize_institution_name(
    std::string_view raw,
    const std::vector<std::string>& suffix_stoplist = default_suffix_stoplist()) {
  std::string flat;
  flat.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    std::uint32_t cp = detail::decode_utf8(raw, i);
    if (cp < 0x80) {
      char c = static_cast<char>(cp);
      if (std::isalnum(static_cast<unsigned char>(c)))
        flat.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      else
        flat.push_back(' ');
    } else if (const char* rep = detail::strip_diacritic(cp)) {
      flat += rep;
    } else {
      // Unknown non-ASCII letter: re-encode verbatim so the map stays
      // idempotent for scripts the table does not cover.
      if (cp < 0x800) {
        flat.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        flat.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
      } else if (cp < 0x10000) {
        flat.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        flat.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        flat.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
      } else {
        flat.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        flat.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        flat.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        flat.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
      }
    }
  }

  std::vector<std::string> tokens;
  for (const auto& t : split(flat, ' '))
    if (!t.empty()) tokens.push_back(t);

  // Strip trailing stop-phrases repeatedly so one pass reaches a fixed point.
  bool stripped = true;
  while (stripped && !tokens.empty()) {
    stripped = false;
    for (const auto& phrase : suffix_stoplist) {
      std::vector<std::string> pt;
      for (const auto& t : split(phrase, ' '))
        if (!t.empty()) pt.push_back(t);
      if (pt.empty() || pt.size() > tokens.size()) continue;
      if (std::equal(pt.begin(), pt.end(), tokens.end() - pt.size())) {
        tokens.resize(tokens.size() - pt.size());
        stripped = true;
        break;
      }
    }
  }

  std::string out;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (k) out.push_back(' ');
    out += tokens[k];
  }
  return out;
}

}  // namespace capmodel
