#pragma once

// Seeded randomized property suites exercising the telescope calculus end to
// end: functor laws, retraction onto the last stage, homotopy coherence, the
// pairing, the shift equivalence and Morse reduction.

#include "telhom/genrandom.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace telhom {

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::size_t runs = 25;
    std::size_t stages = 3;
    std::size_t top_degree = 3;
    std::size_t max_block = 3;
};

struct SuiteResult {
    std::string name;
    std::size_t runs = 0;
    std::size_t failures = 0;
    std::string detail;   // first failing seed and what broke
    bool ok() const { return failures == 0; }
};

SuiteResult verify_identity(const VerifyOptions& opt);
SuiteResult verify_retraction(const VerifyOptions& opt);
SuiteResult verify_functoriality(const VerifyOptions& opt);
SuiteResult verify_homotopy(const VerifyOptions& opt);
SuiteResult verify_product(const VerifyOptions& opt);
SuiteResult verify_shift(const VerifyOptions& opt);
SuiteResult verify_morse(const VerifyOptions& opt);

std::vector<SuiteResult> verify_all(const VerifyOptions& opt);

} // namespace telhom
