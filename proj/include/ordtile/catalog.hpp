#ifndef ORDTILE_CATALOG_HPP
#define ORDTILE_CATALOG_HPP

#include "graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ordtile {

using Catalog = std::vector<std::pair<std::string, OrderedGraph>>;

// The six shipped patterns: one per classification case plus K2 and the
// no-Property-A remainder pattern B23. Mirrors the files under catalog/.
Catalog default_catalog();

}

#endif
