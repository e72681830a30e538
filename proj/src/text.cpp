#include "autoseq/text.hpp"

namespace autoseq {

std::string strip_comment_lines(std::string_view text) {
  while (!text.empty() && text.front() == '#') {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) return {};
    text.remove_prefix(nl + 1);
  }
  return std::string(text);
}

}  // namespace autoseq
