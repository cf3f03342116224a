#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace ringlat {

enum class errc {
    bad_dimensions,
    non_commutative,
    non_associative,
    bad_unit,
    cap_exceeded,
    node_budget_exceeded,
    ambient_mismatch,
    not_shared_ideal,
    not_free,
    not_maximal,
    not_comparable,
    not_minimal,
    not_local,
    classification_contradiction,
    unknown_name,
    bad_input,
};

const char* errc_name(errc c);

// Carries a machine-readable code plus up to three witness indices
// (basis indices, node indices, partial counts) alongside the message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what,
          std::array<long long, 3> args = {-1, -1, -1})
        : std::runtime_error(what), code_(code), args_(args) {}

    errc code() const { return code_; }
    long long arg(int i) const { return args_[static_cast<size_t>(i)]; }

private:
    errc code_;
    std::array<long long, 3> args_;
};

[[noreturn]] void fail(errc code, const std::string& msg,
                       std::array<long long, 3> args = {-1, -1, -1});

}  // namespace ringlat
