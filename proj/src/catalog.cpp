#include "ordtile/catalog.hpp"

namespace ordtile {

Catalog default_catalog()
{
    Catalog c;
    c.emplace_back("K2", OrderedGraph{2, {{1, 2}}});
    c.emplace_back("213", OrderedGraph{3, {{1, 2}, {1, 3}}});
    c.emplace_back("A14", OrderedGraph{4, {{1, 4}}});
    c.emplace_back("B23", OrderedGraph{5, {{2, 3}}});
    c.emplace_back("C6", OrderedGraph{6, {{1, 5}, {2, 5}}});
    c.emplace_back("D6", OrderedGraph{6, {{2, 5}}});
    return c;
}

}
