#include "eulersums/catalog.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "eulersums/error.hpp"

namespace eulersums {

namespace detail {
extern const std::string_view kBuiltinCatalog;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool valid_id(std::string_view id) {
    if (id.empty()) {
        return false;
    }
    for (char c : id) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) {
            return false;
        }
    }
    return true;
}

} // namespace

void Catalog::add(Identity identity) {
    if (find(identity.id) != nullptr) {
        throw Error("duplicate identity id '" + identity.id + "'");
    }
    entries_.push_back(std::move(identity));
}

void Catalog::merge(const Catalog& other) {
    for (const auto& e : other.entries_) {
        add(e);
    }
}

const Identity* Catalog::find(std::string_view id) const {
    for (const auto& e : entries_) {
        if (e.id == id) {
            return &e;
        }
    }
    return nullptr;
}

const Identity& Catalog::at(std::string_view id) const {
    if (const Identity* e = find(id)) {
        return *e;
    }
    throw Error("unknown identity id '" + std::string(id) + "'");
}

Catalog Catalog::select(const std::vector<std::string>& patterns) const {
    Catalog out;
    out.version_ = version_;
    for (const auto& e : entries_) {
        for (const auto& p : patterns) {
            if (wildcard_match(p, e.id)) {
                out.entries_.push_back(e);
                break;
            }
        }
    }
    return out;
}

Catalog parse_catalog(std::string_view text, const std::string& origin) {
    Catalog catalog;
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view raw = text.substr(begin, end - begin);
        begin = end + 1;
        ++line_no;
        const std::string where = origin + ":" + std::to_string(line_no);
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (line.substr(0, 8) == "@version") {
            try {
                catalog.version_ = std::stoi(std::string(trim(line.substr(8))));
            } catch (const std::exception&) {
                throw Error(where + ": malformed version line");
            }
            if (catalog.version_ != 1) {
                throw Error(where + ": unsupported catalog version " + std::to_string(catalog.version_));
            }
            continue;
        }
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t bar = line.find('|', start);
            fields.push_back(trim(line.substr(start, bar == std::string_view::npos ? bar : bar - start)));
            if (bar == std::string_view::npos) {
                break;
            }
            start = bar + 1;
        }
        if (fields.size() != 5) {
            throw Error(where + ": expected 5 '|'-separated fields, found " + std::to_string(fields.size()));
        }
        Identity identity;
        try {
            identity.id = std::string(fields[0]);
            if (!valid_id(identity.id)) {
                throw Error("invalid id '" + identity.id + "'");
            }
            identity.lhs = parse_sum_combination(fields[1]);
            identity.rhs = parse_zeta_expr(fields[2]);
            identity.source = parse_source(fields[3]);
            identity.expected = parse_expectation(fields[4]);
            catalog.add(std::move(identity));
        } catch (const Error& e) {
            throw Error(where + ": " + e.what());
        }
    }
    return catalog;
}

Catalog load_catalog_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open catalog file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_catalog(buffer.str(), path.string());
}

const Catalog& builtin_catalog() {
    static const Catalog catalog = parse_catalog(detail::kBuiltinCatalog, "builtin");
    return catalog;
}

std::string format_catalog_line(const Identity& identity) {
    return identity.id + " | " + identity.lhs.to_string() + " | " + identity.rhs.to_string() + " | " +
           to_string(identity.source) + " | " + to_string(identity.expected);
}

bool wildcard_match(std::string_view pattern, std::string_view text) {
    std::size_t p = 0;
    std::size_t t = 0;
    std::size_t star = std::string_view::npos;
    std::size_t mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') {
        ++p;
    }
    return p == pattern.size();
}

} // namespace eulersums
