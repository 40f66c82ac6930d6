#ifndef UMLAB_VERIFY_HPP
#define UMLAB_VERIFY_HPP

#include "umlab/jsonio.hpp"

#include <string>
#include <vector>

namespace umlab::verify {

// Independent re-check of an emitted certificate: every stored inequality is
// recomputed from the exact data in the document, through the numeric
// primitives only — not through the construction pipelines.
struct Report {
    std::string kind;
    bool ok = false;
    std::vector<std::string> violations;
};

Report check_document(const io::json& document);

} // namespace umlab::verify

#endif
