#pragma once

#include <iosfwd>

#include "ringlat/corpus.hpp"

namespace ringlat {

// A parsed ring-spec document: an extension plus optional expectations.
struct RingSpec {
    std::string name;
    Extension ext;
    Expect expect;
    bool has_expect = false;
};

// Parses the JSON document; throws ringlat::error (BadInput) with a
// line:column position on malformed input, and the usual validation errors
// on bad ring data.
RingSpec parse_ring_spec(const std::string& json_text, const Caps& caps = Caps{});
RingSpec load_ring_spec(const std::string& path, const Caps& caps = Caps{});

// Deterministic serialization; parsing it back yields an identical
// extension (same table contents, same subring).
std::string serialize_ring_spec(const RingSpec& spec);

}  // namespace ringlat
