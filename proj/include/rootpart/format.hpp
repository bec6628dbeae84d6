#pragma once

// Text form of partitions: comma-separated parts in weakly decreasing order,
// a caret marking the root part, e.g. "4,4,2,^2,2,2". The empty partition
// prints as "(empty)"; the parser also accepts an empty string. Image pairs
// append the residue as " r=N".

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bijections.hpp"
#include "involutions.hpp"
#include "partition.hpp"

namespace rootpart {

namespace detail {

inline std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

struct PartList {
  std::vector<int> parts;
  int root_index = -1;
};

inline PartList parse_part_list(const std::string& text) {
  PartList out;
  const std::string trimmed = trim(text);
  if (trimmed.empty() || trimmed == "(empty)") return out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = trimmed.find(',', pos);
    std::string token = trim(
        trimmed.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    bool rooted = false;
    if (!token.empty() && token.front() == '^') {
      rooted = true;
      token = trim(token.substr(1));
    }
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("partition text: bad part \"" + token + "\"");
    if (token.size() > 9)
      throw std::invalid_argument("partition text: part out of range");
    if (rooted) {
      if (out.root_index >= 0)
        throw std::invalid_argument("partition text: more than one root");
      out.root_index = static_cast<int>(out.parts.size());
    }
    out.parts.push_back(std::stoi(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

inline Partition parse_partition(const std::string& text) {
  const auto list = detail::parse_part_list(text);
  if (list.root_index >= 0)
    throw std::invalid_argument("partition text: unexpected root marker");
  return Partition(list.parts);
}

inline RootedPartition parse_rooted(const std::string& text) {
  const auto list = detail::parse_part_list(text);
  if (list.root_index < 0)
    throw std::invalid_argument("partition text: missing root marker");
  const int value = list.parts[static_cast<std::size_t>(list.root_index)];
  int ordinal = 0;
  for (int i = 0; i <= list.root_index; ++i)
    if (list.parts[static_cast<std::size_t>(i)] == value) ++ordinal;
  return RootedPartition(Partition(list.parts), value, ordinal);
}

// plain when no caret is present, rooted otherwise
inline QElement parse_q_element(const std::string& text) {
  const auto list = detail::parse_part_list(text);
  if (list.root_index < 0) return QElement::plain(Partition(list.parts));
  return QElement::rooted(parse_rooted(text));
}

inline TotientImage parse_image(const std::string& text) {
  const std::size_t marker = text.rfind(" r=");
  if (marker == std::string::npos)
    throw std::invalid_argument("image text: missing \" r=\" residue suffix");
  const std::string residue_text = detail::trim(text.substr(marker + 3));
  if (residue_text.empty() ||
      residue_text.find_first_not_of("0123456789") != std::string::npos ||
      residue_text.size() > 9)
    throw std::invalid_argument("image text: bad residue \"" + residue_text + "\"");
  return {parse_rooted(text.substr(0, marker)), std::stoi(residue_text)};
}

inline std::string format_partition(const Partition& lambda) {
  if (lambda.empty()) return "(empty)";
  std::string out;
  for (const int part : lambda.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(part);
  }
  return out;
}

inline std::string format_rooted(const RootedPartition& rho) {
  std::string out;
  int seen = 0;
  for (const int part : rho.base().parts()) {
    if (!out.empty()) out += ',';
    if (part == rho.root_value() && ++seen == rho.root_ordinal()) out += '^';
    out += std::to_string(part);
  }
  return out;
}

inline std::string format_image(const TotientImage& image) {
  return format_rooted(image.rooted) + " r=" + std::to_string(image.residue);
}

inline std::string format_q_element(const QElement& q) {
  return q.is_plain() ? "plain " + format_partition(q.plain_partition())
                      : "rooted " + format_rooted(q.rooted_partition());
}

}  // namespace rootpart
