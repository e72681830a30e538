#ifndef AUTOSEQ_TEXT_HPP
#define AUTOSEQ_TEXT_HPP

#include <string>
#include <string_view>

namespace autoseq {

inline constexpr std::string_view kVersion = "0.1.0";

/// Drops leading lines that start with '#' (output-file header lines).
std::string strip_comment_lines(std::string_view text);

}  // namespace autoseq

#endif  // AUTOSEQ_TEXT_HPP
