#pragma once

#include "bipart/class_spec.hpp"
#include "bipart/graph.hpp"
#include "bipart/verifier.hpp"

#include <iosfwd>
#include <string>

namespace bipart::io {

/// Edge-list text format: '#' comment lines, a "n m" header, then one
/// "u v" line per edge with 0 <= u < v < n.  Duplicates are rejected.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

/// Partition edge-list variant: the same header and edge lines, grouped
/// under one "# template i" comment per template.  Plain edge-list readers
/// recover the host graph.
void write_partition_edge_list(std::ostream& out, const Partition& p);

struct PartitionFile {
    Partition partition;
    ClassSpec spec;
};

/// Canonical JSON interchange:
///   {"host": {"n": ..., "edges": [[u,v],...]},
///    "forbidden": ["2K2", ...],
///    "templates": [{"edges": [[u,v],...]}, ...]}
/// Writers emit lexicographically sorted edges; readers accept any order.
std::string partition_to_json(const Partition& p, const ClassSpec& spec);
PartitionFile partition_from_json(const std::string& text);
PartitionFile read_partition_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// DOT export with one color per template (fixed palette, cycled).
void write_partition_dot(std::ostream& out, const Partition& p);

std::string verify_report_to_json(const VerifyReport& report);

} // namespace bipart::io
