#include "ringlat/errors.hpp"

namespace ringlat {

const char* errc_name(errc c) {
    switch (c) {
        case errc::bad_dimensions: return "BadDimensions";
        case errc::non_commutative: return "NonCommutative";
        case errc::non_associative: return "NonAssociative";
        case errc::bad_unit: return "BadUnit";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::node_budget_exceeded: return "NodeBudgetExceeded";
        case errc::ambient_mismatch: return "AmbientMismatch";
        case errc::not_shared_ideal: return "NotSharedIdeal";
        case errc::not_free: return "NotFree";
        case errc::not_maximal: return "NotMaximal";
        case errc::not_comparable: return "NotComparable";
        case errc::not_minimal: return "NotMinimal";
        case errc::not_local: return "NotLocal";
        case errc::classification_contradiction: return "ClassificationContradiction";
        case errc::unknown_name: return "UnknownName";
        case errc::bad_input: return "BadInput";
    }
    return "Unknown";
}

void fail(errc code, const std::string& msg, std::array<long long, 3> args) {
    throw error(code, std::string(errc_name(code)) + ": " + msg, args);
}

}  // namespace ringlat
