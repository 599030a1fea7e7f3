#pragma once

#include <span>
#include <string>

namespace treeramsey {

// Every closed formula, bound rule, and construction the library applies
// carries a stable statement id so results can be traced to the exact
// mathematical fact used. The catalog below pairs each id with a short
// rendering of the statement itself.
struct Citation {
    const char* id;
    const char* statement;
};

std::span<const Citation> citation_catalog();

// Returns nullptr when the id is unknown.
const Citation* find_citation(const std::string& id);

}  // namespace treeramsey
