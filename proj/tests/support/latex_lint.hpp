#pragma once

#include <cctype>
#include <set>
#include <string>

namespace ramid::testing {

/// Grammar-level check of a rendered display equation: balanced braces,
/// matched \left/\right pairs, only known macros, \frac with two groups
/// and \sqrt with one. Returns an empty string when clean, else a reason.
inline std::string lint_latex(const std::string& s) {
  static const std::set<std::string> known{"sqrt", "frac", "left", "right"};
  int braces = 0;
  int lr = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '{') ++braces;
    if (c == '}' && --braces < 0) return "unbalanced '}' at " + std::to_string(i);
    if (c != '\\') continue;
    std::size_t j = i + 1;
    while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
    const std::string name = s.substr(i + 1, j - i - 1);
    if (!known.count(name)) return "unknown macro '\\" + name + "'";
    if (name == "left" || name == "right") {
      if (j >= s.size() || (s[j] != '(' && s[j] != ')')) return "\\" + name + " without delimiter";
      lr += name == "left" ? 1 : -1;
      if (lr < 0) return "\\right before \\left";
    }
    auto groups_follow = [&](int n) {
      std::size_t k = j;
      for (int g = 0; g < n; ++g) {
        if (k >= s.size() || s[k] != '{') return false;
        int depth = 0;
        do {
          if (s[k] == '{') ++depth;
          if (s[k] == '}') --depth;
          ++k;
        } while (k < s.size() && depth > 0);
        if (depth != 0) return false;
      }
      return true;
    };
    if (name == "frac" && !groups_follow(2)) return "\\frac needs two groups";
    if (name == "sqrt" && !groups_follow(1)) return "\\sqrt needs a group";
    i = j - 1;
  }
  if (braces != 0) return "unbalanced '{'";
  if (lr != 0) return "unmatched \\left";
  return {};
}

}  // namespace ramid::testing
