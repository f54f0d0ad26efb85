#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pantslab/pants_graph.hpp"

namespace pantslab {

/// Relabelling-invariant key: key(G1) == key(G2) iff G1 and G2 are
/// isomorphic as multigraphs with leaves.  Keys are printable and stable
/// across runs; treat them as opaque version-stamped identifiers.
struct CanonicalForm {
    std::string key;

    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_key(const PantsGraph& g);

bool isomorphic(const PantsGraph& a, const PantsGraph& b);

struct CapExceeded : std::runtime_error {
    std::size_t cap;
    explicit CapExceeded(const std::string& what, std::size_t cap_) : std::runtime_error(what), cap(cap_) {}
};

/// Default class cap for enumeration (~20k), overridable via the
/// PANTSLAB_CAP_CLASSES environment variable.
std::size_t default_class_cap();

struct EnumerationResult {
    std::vector<PantsGraph> reps;  // one representative per class, sorted by key
    std::vector<CanonicalForm> keys;
};

/// All isomorphism classes of pants graphs with the given genus and
/// puncture count.  Requires 3g-3+n >= 1; throws CapExceeded if any stratum
/// visited during generation grows past the cap.
EnumerationResult enumerate_classes(int genus, int punctures,
                                    std::size_t cap = default_class_cap());

/// Relabels vertices and half-edges by the given permutations (tests use
/// this to probe key invariance).
PantsGraph relabel(const PantsGraph& g, const std::vector<int>& vertex_perm,
                   const std::vector<int>& half_perm);

}  // namespace pantslab
