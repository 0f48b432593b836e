#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "packsep/packed.hpp"
#include "packsep/separator.hpp"

namespace packsep {

/// Version stamped into every result file; readers reject other versions.
inline constexpr int kResultFormatVersion = 1;

class ResultFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ResultKind { Separator, Tree };

/// Result files are JSON objects tagged with "format" and "version".
std::string separator_to_json(const SeparatorResult& result, const SeparatorConfig& cfg, std::size_t n);
SeparatorResult separator_from_json(const std::string& text);

std::string tree_to_json(const SeparatorTreeNode& root, const SeparatorConfig& cfg, std::size_t n,
                         std::size_t leaf_size);
std::unique_ptr<SeparatorTreeNode> tree_from_json(const std::string& text);

/// Kind and c_bal recorded in a result file.
struct ResultHeader {
    ResultKind kind = ResultKind::Separator;
    int c_bal = 0;
    std::size_t n = 0;
};
ResultHeader read_result_header(const std::string& text);

std::string packedness_to_json(const PackednessEstimate& estimate, std::size_t n);

}  // namespace packsep
