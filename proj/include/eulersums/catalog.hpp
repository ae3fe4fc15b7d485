#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "eulersums/identity.hpp"

namespace eulersums {

/// Ordered identity list with unique ids.
///
/// File format: one record per line, fields separated by '|':
///   id | lhs | rhs | source | expected
/// `lhs` is a SumSpec or SumCombination, `rhs` a ZetaExpr, `source` one of
/// published/literature/derived, `expected` one of must_pass/adjudicate.
/// Blank lines and lines starting with '#' are ignored; "@version N" declares the format version.
class Catalog {
public:
    Catalog() = default;

    const std::vector<Identity>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }
    int version() const noexcept { return version_; }

    /// Throws Error on a duplicate id.
    void add(Identity identity);
    /// Appends every entry of `other`; duplicate ids are an error.
    void merge(const Catalog& other);

    const Identity* find(std::string_view id) const;
    /// Throws Error naming the id when absent.
    const Identity& at(std::string_view id) const;

    /// Entries whose id matches any pattern ('*' and '?' wildcards). Catalog order is kept.
    Catalog select(const std::vector<std::string>& patterns) const;

private:
    std::vector<Identity> entries_;
    int version_ = 1;

    friend Catalog parse_catalog(std::string_view text, const std::string& origin);
};

/// Throws ParseError-derived Error with "<origin>:<line>" context.
Catalog parse_catalog(std::string_view text, const std::string& origin);

Catalog load_catalog_file(const std::filesystem::path& path);

/// The catalog compiled into the library.
const Catalog& builtin_catalog();

std::string format_catalog_line(const Identity& identity);

/// Shell-style match supporting '*' and '?'.
bool wildcard_match(std::string_view pattern, std::string_view text);

} // namespace eulersums
