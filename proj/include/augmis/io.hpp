#pragma once

#include "augmis/graph.hpp"
#include "augmis/irreducible.hpp"

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>

namespace augmis {

/// Malformed input; line() is 1-based (0 when no line applies).
class FormatError : public std::runtime_error {
public:
    FormatError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/// Reads `p edge <n> <m>` followed by m lines `e <u> <v>` (1-based ids);
/// lines starting with `c` and blank lines are ignored.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);
/// Header, then edges ascending by (u, v), LF line endings.
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

/// `# ` header lines (n_max, filters, census) and one `<n> <hex> # ...` line
/// per entry.
void write_catalog(std::ostream& out, const Catalog& cat);
Catalog read_catalog(std::istream& in);

/// $AUGMIS_CATALOG_DIR, or empty when unset.
std::filesystem::path catalog_cache_dir();
std::string catalog_file_name(int p, int n_max);

/// Catalog for filters catalog_filters(p) up to n_max vertices. Kept in
/// memory per (p, n_max); with a cache directory the file there is read if
/// present and written after building otherwise.
std::shared_ptr<const Catalog> load_or_build_catalog(int p, int n_max);

} // namespace augmis
