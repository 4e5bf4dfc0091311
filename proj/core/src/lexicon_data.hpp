#pragma once

#include <span>
#include <string_view>

namespace ontoforge::nlp::detail {

struct ClosedWord {
  std::string_view word;
  std::string_view tag;
};

/// Open-class entry; `tags` is a space-separated ambiguity class, most likely
/// reading first.
struct OpenWord {
  std::string_view word;
  std::string_view tags;
};

std::span<const ClosedWord> closed_class_words();
std::span<const OpenWord> open_class_words();
std::span<const std::string_view> modal_words();

}  // namespace ontoforge::nlp::detail
