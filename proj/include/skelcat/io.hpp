#ifndef SKELCAT_IO_HPP_
#define SKELCAT_IO_HPP_

#include <string>

#include "skelcat/coeq.hpp"
#include "skelcat/fincat.hpp"
#include "skelcat/presentation.hpp"

namespace skelcat {

/// Thrown for malformed files (JSON syntax or wrong shape); distinct from
/// category-law validation failures.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

RawCategory parse_category_text(const std::string& text);
RawCategory load_raw_category(const std::string& path);
FinCat load_category(const std::string& path);  // throws on invalid laws

std::string category_to_json(const FinCat& cat);
void save_category(const FinCat& cat, const std::string& path);

/// Functor file: {"source": <path>, "target": <path>,
///                "objects": {...}, "arrows": {...}}.
/// Identity arrows are mapped implicitly. Paths are resolved relative to the
/// functor file's directory.
Functor load_functor(const std::string& path);

std::string to_dot(const FinCat& cat);
std::string to_dot(const QuotientCat& q, int max_len, Budget& budget);

std::string presentation_to_text(const Presentation& p);

}  // namespace skelcat

#endif  // SKELCAT_IO_HPP_
