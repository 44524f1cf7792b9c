#include "augmis/io.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <utility>

namespace augmis {

FormatError::FormatError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Parses one non-negative integer token; throws on junk.
long long number(std::istringstream& in, int line, const char* what) {
    std::string tok;
    if (!(in >> tok)) throw FormatError(line, std::string("missing ") + what);
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size() || v < 0) throw FormatError(line, std::string("bad ") + what + " '" + tok + "'");
    return v;
}

void no_trailing(std::istringstream& in, int line) {
    std::string extra;
    if (in >> extra) throw FormatError(line, "unexpected token '" + extra + "'");
}

} // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line) || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            if (n >= 0) throw FormatError(line_no, "second problem line");
            std::string kind;
            ls >> kind;
            if (kind != "edge") throw FormatError(line_no, "expected 'p edge <n> <m>'");
            n = number(ls, line_no, "vertex count");
            m = number(ls, line_no, "edge count");
            no_trailing(ls, line_no);
            if (n > 1'000'000) throw FormatError(line_no, "vertex count too large");
        } else if (tag == "e") {
            if (n < 0) throw FormatError(line_no, "edge before problem line");
            long long u = number(ls, line_no, "vertex id"), v = number(ls, line_no, "vertex id");
            no_trailing(ls, line_no);
            if (u < 1 || v < 1 || u > n || v > n) throw FormatError(line_no, "vertex id out of range");
            if (u == v) throw FormatError(line_no, "self-loop");
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw FormatError(line_no, "unknown line type '" + tag + "'");
        }
    }
    if (n < 0) throw FormatError(line_no, "missing problem line");
    if (static_cast<long long>(edges.size()) != m)
        throw FormatError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    Graph g(static_cast<int>(n), edges);
    if (static_cast<long long>(g.size()) != m) throw FormatError(line_no, "duplicate edges");
    return g;
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(0, "cannot open " + path.string());
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

void write_catalog(std::ostream& out, const Catalog& cat) {
    out << "# augmis catalog\n";
    out << "# n_max " << cat.max_vertices << '\n';
    out << "# filters";
    for (std::size_t i = 0; i < cat.filters.size(); ++i) out << (i ? "," : " ") << cat.filters[i].name();
    out << '\n';
    out << "# census";
    for (auto [n, count] : cat.census()) out << ' ' << n << ':' << count;
    out << '\n';
    for (const auto& e : cat.entries) {
        const auto& h = e.graph;
        out << h.order() << ' ' << to_hex(e.code) << " # w=" << h.white().size() << " b=" << h.black().size()
            << " e=" << h.graph().size() << '\n';
    }
}

Catalog read_catalog(std::istream& in) {
    Catalog cat;
    std::string line;
    int line_no = 0;
    bool have_n_max = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank(line)) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string key;
            ls >> key;
            if (key == "n_max") {
                cat.max_vertices = static_cast<int>(number(ls, line_no, "n_max"));
                have_n_max = true;
            } else if (key == "filters") {
                std::string rest;
                std::getline(ls, rest);
                try {
                    cat.filters = Pattern::parse_list(rest);
                } catch (const std::exception& ex) {
                    throw FormatError(line_no, ex.what());
                }
            }
            continue;
        }
        std::istringstream ls(line.substr(0, line.find('#')));
        const long long n = number(ls, line_no, "vertex count");
        std::string hex;
        if (!(ls >> hex)) throw FormatError(line_no, "missing code");
        no_trailing(ls, line_no);
        CatalogEntry entry;
        try {
            entry.code = from_hex(hex);
            entry.graph = decode_colored(entry.code);
        } catch (const std::exception& ex) {
            throw FormatError(line_no, ex.what());
        }
        if (entry.graph.order() != n) throw FormatError(line_no, "vertex count does not match code");
        if (!is_irreducible(entry.graph)) throw FormatError(line_no, "entry is not irreducible");
        if (!cat.entries.empty()) {
            const auto& prev = cat.entries.back();
            if (std::pair(prev.graph.order(), prev.code) >= std::pair(entry.graph.order(), entry.code))
                throw FormatError(line_no, "entries out of order");
        }
        cat.entries.push_back(std::move(entry));
    }
    if (!have_n_max) throw FormatError(line_no, "missing n_max header");
    return cat;
}

std::filesystem::path catalog_cache_dir() {
    const char* dir = std::getenv("AUGMIS_CATALOG_DIR");
    return dir && *dir ? std::filesystem::path(dir) : std::filesystem::path();
}

std::string catalog_file_name(int p, int n_max) {
    return "catalog_p" + std::to_string(p) + "_n" + std::to_string(n_max) + ".txt";
}

std::shared_ptr<const Catalog> load_or_build_catalog(int p, int n_max) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const Catalog>> memo;
    std::lock_guard lock(mu);
    auto& slot = memo[{p, n_max}];
    if (slot) return slot;

    const auto dir = catalog_cache_dir();
    const auto file = dir.empty() ? dir : dir / catalog_file_name(p, n_max);
    if (!file.empty() && std::filesystem::exists(file)) {
        std::ifstream in(file, std::ios::binary);
        Catalog cat = read_catalog(in);
        const auto want = catalog_filters(p);
        bool same = cat.max_vertices == n_max && cat.filters.size() == want.size();
        for (std::size_t i = 0; same && i < want.size(); ++i) same = cat.filters[i].name() == want[i].name();
        if (!same) throw FormatError(0, file.string() + ": header does not match p and n_max");
        slot = std::make_shared<const Catalog>(std::move(cat));
        return slot;
    }
    auto cat = std::make_shared<const Catalog>(enumerate_irreducible(n_max, catalog_filters(p)));
    if (!file.empty()) {
        std::filesystem::create_directories(dir);
        const auto tmp = file.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary);
            write_catalog(out, *cat);
        }
        std::filesystem::rename(tmp, file);
    }
    slot = cat;
    return slot;
}

} // namespace augmis
