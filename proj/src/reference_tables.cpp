#include "bohrlab/reference_tables.hpp"

#include <array>
#include <stdexcept>

namespace bohrlab {

namespace {

// Published 6-digit radii on the grid m = 0.1, ..., 1.0, 1.25, stored
// verbatim. One printed value ("0.0.347564" in the h2 table) is read as
// 0.347564; solving confirms that reading.
//
// Two rows are flagged: the published h2 and h4 values labeled m = 1.25
// solve their own equations at m = 1.24 (to within 5e-8) but not at 1.25,
// where the true roots are 0.0308954 (h2) and 0.1143020 (h4). The values
// are kept verbatim so comparisons report the discrepancy instead of
// hiding it.
constexpr const char* kMislabeledNote =
    "published value matches the m = 1.24 root, not m = 1.25";

constexpr std::array<ReferenceEntry, 11> kH1 = {{
    {0.1, 0.438485, nullptr},
    {0.2, 0.387786, nullptr},
    {0.3, 0.343722, nullptr},
    {0.4, 0.304054, nullptr},
    {0.5, 0.267404, nullptr},
    {0.6, 0.23283, nullptr},
    {0.7, 0.19963, nullptr},
    {0.8, 0.167229, nullptr},
    {0.9, 0.135111, nullptr},
    {1.0, 0.102764, nullptr},
    {1.25, 0.0167782, nullptr},
}};

constexpr std::array<ReferenceEntry, 11> kH2 = {{
    {0.1, 0.546723, nullptr},
    {0.2, 0.487374, nullptr},
    {0.3, 0.435926, nullptr},
    {0.4, 0.389886, nullptr},
    {0.5, 0.347564, nullptr},
    {0.6, 0.307711, nullptr},
    {0.7, 0.269313, nullptr},
    {0.8, 0.231445, nullptr},
    {0.9, 0.193148, nullptr},
    {1.0, 0.153247, nullptr},
    {1.25, 0.0371406, kMislabeledNote},
}};

constexpr std::array<ReferenceEntry, 11> kH3 = {{
    {0.1, 0.426832, nullptr},
    {0.2, 0.372123, nullptr},
    {0.3, 0.327085, nullptr},
    {0.4, 0.287924, nullptr},
    {0.5, 0.252589, nullptr},
    {0.6, 0.2198, nullptr},
    {0.7, 0.18866, nullptr},
    {0.8, 0.158469, nullptr},
    {0.9, 0.128614, nullptr},
    {1.0, 0.0984794, nullptr},
    {1.25, 0.0166108, nullptr},
}};

constexpr std::array<ReferenceEntry, 11> kH4 = {{
    {0.1, 0.802472, nullptr},
    {0.2, 0.696255, nullptr},
    {0.3, 0.619712, nullptr},
    {0.4, 0.558217, nullptr},
    {0.5, 0.505494, nullptr},
    {0.6, 0.458107, nullptr},
    {0.7, 0.413815, nullptr},
    {0.8, 0.370862, nullptr},
    {0.9, 0.327549, nullptr},
    {1.0, 0.281757, nullptr},
    {1.25, 0.125838, kMislabeledNote},
}};

}  // namespace

std::span<const ReferenceEntry> reference_radii(FunctionalKind kind) {
    switch (kind) {
        case FunctionalKind::H1_BohrRogosinski: return kH1;
        case FunctionalKind::H2_Area: return kH2;
        case FunctionalKind::H3_Jacobian: return kH3;
        case FunctionalKind::H4_Refined: return kH4;
    }
    throw std::logic_error("reference_radii: bad FunctionalKind");
}

}  // namespace bohrlab
