#include <algorithm>
#include <charconv>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "fedgnn/errors.hpp"
#include "fedgnn/graph.hpp"

namespace fedgnn {

namespace {

void write_bytes(std::ofstream& out, const void* p, std::size_t n) {
    out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

void read_bytes(std::ifstream& in, void* p, std::size_t n, const char* what) {
    in.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n) {
        throw ParseError(std::string(what) + ": truncated file");
    }
}

std::ifstream open_in(const std::string& path, bool binary) {
    std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
    if (!in) throw ParseError("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path, bool binary) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    return out;
}

void check_magic(std::ifstream& in, const char* magic, const std::string& path) {
    char buf[4];
    read_bytes(in, buf, 4, path.c_str());
    if (std::memcmp(buf, magic, 4) != 0) {
        throw ParseError(path + ": bad magic, expected " + magic);
    }
}

}  // namespace

std::vector<Edge> read_edge_file(const std::string& path) {
    std::ifstream in = open_in(path, false);
    std::vector<Edge> edges;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const char* begin = line.data();
        const char* end = begin + line.size();
        NodeId u = 0, v = 0;
        auto r1 = std::from_chars(begin, end, u);
        if (r1.ec != std::errc{} || r1.ptr == end || *r1.ptr != ' ') {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected 'src dst'");
        }
        auto r2 = std::from_chars(r1.ptr + 1, end, v);
        if (r2.ec != std::errc{}) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected 'src dst'");
        }
        edges.push_back({u, v});
    }
    return edges;
}

void write_edge_file(const std::string& path, const std::vector<Edge>& edges) {
    std::ofstream out = open_out(path, false);
    for (const Edge& e : edges) {
        out << e.src << ' ' << e.dst << '\n';
    }
}

Matrix read_feature_file(const std::string& path) {
    std::ifstream in = open_in(path, true);
    check_magic(in, "FGNF", path);
    std::uint64_t n = 0, dim = 0;
    read_bytes(in, &n, 8, "feature header");
    read_bytes(in, &dim, 8, "feature header");
    Matrix m(n, dim);
    std::vector<float> row(dim);
    for (std::uint64_t i = 0; i < n; ++i) {
        read_bytes(in, row.data(), dim * 4, "feature rows");
        for (std::uint64_t j = 0; j < dim; ++j) m.at(i, j) = row[j];
    }
    return m;
}

void write_feature_file(const std::string& path, const Matrix& features) {
    std::ofstream out = open_out(path, true);
    write_bytes(out, "FGNF", 4);
    std::uint64_t n = features.rows, dim = features.cols;
    write_bytes(out, &n, 8);
    write_bytes(out, &dim, 8);
    std::vector<float> row(dim);
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = 0; j < dim; ++j) {
            row[j] = static_cast<float>(features.at(i, j));
        }
        write_bytes(out, row.data(), dim * 4);
    }
}

std::vector<std::uint32_t> read_label_file(const std::string& path) {
    std::ifstream in = open_in(path, true);
    check_magic(in, "FGNL", path);
    std::uint64_t n = 0;
    read_bytes(in, &n, 8, "label header");
    std::vector<std::uint32_t> labels(n);
    if (n > 0) read_bytes(in, labels.data(), n * 4, "labels");
    return labels;
}

void write_label_file(const std::string& path,
                      const std::vector<std::uint32_t>& labels) {
    std::ofstream out = open_out(path, true);
    write_bytes(out, "FGNL", 4);
    std::uint64_t n = labels.size();
    write_bytes(out, &n, 8);
    if (n > 0) write_bytes(out, labels.data(), n * 4);
}

std::vector<NodeId> read_mask_file(const std::string& path) {
    std::ifstream in = open_in(path, true);
    check_magic(in, "FGNM", path);
    std::uint64_t n = 0;
    read_bytes(in, &n, 8, "mask header");
    std::vector<NodeId> ids(n);
    if (n > 0) read_bytes(in, ids.data(), n * 8, "mask ids");
    return ids;
}

void write_mask_file(const std::string& path, const std::vector<NodeId>& ids) {
    std::ofstream out = open_out(path, true);
    write_bytes(out, "FGNM", 4);
    std::uint64_t n = ids.size();
    write_bytes(out, &n, 8);
    if (n > 0) write_bytes(out, ids.data(), n * 8);
}

Graph load_graph(const std::string& edge_path, const std::string& feature_path,
                 const std::string& label_path,
                 const std::string& train_mask_path,
                 const std::string& test_mask_path, bool symmetrize) {
    Graph g;
    g.edges = read_edge_file(edge_path);
    g.features = read_feature_file(feature_path);
    g.labels = read_label_file(label_path);
    g.train_mask = read_mask_file(train_mask_path);
    g.test_mask = read_mask_file(test_mask_path);
    g.num_nodes = g.features.rows;
    if (g.labels.size() != g.num_nodes) {
        throw ValidationError("label file has " + std::to_string(g.labels.size()) +
                              " entries, features have " +
                              std::to_string(g.num_nodes) + " rows");
    }
    if (symmetrize) {
        std::vector<Edge> sym = g.edges;
        for (const Edge& e : g.edges) sym.push_back({e.dst, e.src});
        std::sort(sym.begin(), sym.end(), [](const Edge& a, const Edge& b) {
            return a.src < b.src || (a.src == b.src && a.dst < b.dst);
        });
        sym.erase(std::unique(sym.begin(), sym.end()), sym.end());
        g.edges = std::move(sym);
    }
    std::sort(g.train_mask.begin(), g.train_mask.end());
    std::sort(g.test_mask.begin(), g.test_mask.end());
    g.validate();
    g.build_adjacency();
    return g;
}

Graph load_dataset(const std::string& dir, bool symmetrize) {
    namespace fs = std::filesystem;
    fs::path d(dir);
    return load_graph((d / "edges.txt").string(), (d / "features.bin").string(),
                      (d / "labels.bin").string(),
                      (d / "train_mask.bin").string(),
                      (d / "test_mask.bin").string(), symmetrize);
}

void write_dataset(const Graph& g, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    fs::path d(dir);
    write_edge_file((d / "edges.txt").string(), g.edges);
    write_feature_file((d / "features.bin").string(), g.features);
    write_label_file((d / "labels.bin").string(), g.labels);
    write_mask_file((d / "train_mask.bin").string(), g.train_mask);
    write_mask_file((d / "test_mask.bin").string(), g.test_mask);
}

PartitionAssignment read_assignment(const std::string& path,
                                    std::uint64_t num_nodes) {
    std::ifstream in = open_in(path, false);
    PartitionAssignment a;
    a.part_of.assign(num_nodes, 0);
    std::vector<bool> seen(num_nodes, false);
    std::string line;
    std::uint64_t lineno = 0;
    std::uint32_t max_part = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const char* begin = line.data();
        const char* end = begin + line.size();
        NodeId node = 0;
        std::uint32_t part = 0;
        auto r1 = std::from_chars(begin, end, node);
        if (r1.ec != std::errc{} || r1.ptr == end || *r1.ptr != ' ') {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected 'node part'");
        }
        auto r2 = std::from_chars(r1.ptr + 1, end, part);
        if (r2.ec != std::errc{}) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected 'node part'");
        }
        if (node >= num_nodes) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": node id out of range");
        }
        a.part_of[node] = part;
        seen[node] = true;
        max_part = std::max(max_part, part);
    }
    for (std::uint64_t u = 0; u < num_nodes; ++u) {
        if (!seen[u]) {
            throw ValidationError(path + ": node " + std::to_string(u) +
                                  " unassigned");
        }
    }
    a.num_parts = max_part + 1;
    a.validate(num_nodes);
    return a;
}

void write_assignment(const std::string& path, const PartitionAssignment& a) {
    std::ofstream out = open_out(path, false);
    for (std::uint64_t u = 0; u < a.part_of.size(); ++u) {
        out << u << ' ' << a.part_of[u] << '\n';
    }
}

}  // namespace fedgnn
