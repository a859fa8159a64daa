#pragma once

#include <string>
#include <vector>

#include "msemi/multiop.hpp"

namespace msemi {

/// The on-disk table format: an optional name, the ordered label list, and an
/// n x n array of label arrays.  Canonical form sorts every cell by element
/// index and serializes the fields in the order name / elements / table.
struct TableDocument {
  std::string name;  // empty = absent
  std::vector<std::string> elements;
  std::vector<std::vector<std::vector<std::string>>> table;
};

TableDocument parse_table_document(const std::string& json_text);
std::string serialize(const TableDocument& doc);

TableDocument to_document(const MultiOp& m, std::string name = "");
MultiOp to_multiop(const TableDocument& doc);

/// File helpers; "-" reads stdin / writes stdout.
MultiOp load_multiop(const std::string& path);
void save_multiop(const MultiOp& m, const std::string& path, std::string name = "");

}  // namespace msemi
