#include "sheafloc/verify.hpp"

#include "sheafloc/render.hpp"
#include "sheafloc/space_homology.hpp"

#include <sstream>
#include <stdexcept>

namespace sheafloc {

VerifyReport run_verify(const VerifyOptions& opts, const ShiftFunction& closed) {
    if (opts.l_range < 0 || opts.lprime_range < 0) throw std::invalid_argument("verify ranges must be non-negative");
    VerifyReport report;
    auto record = [&](const std::string& what) {
        ++report.mismatches;
        if (!report.first_counterexample) report.first_counterexample = what;
    };

    for (unsigned n = 0; n <= opts.max_c2; ++n) {
        for (const auto& [alpha, beta] : enumerate_pairs(n)) {
            for (std::int64_t l = -opts.l_range; l <= opts.l_range; ++l) {
                for (std::int64_t lp = -opts.lprime_range; lp <= opts.lprime_range; ++lp) {
                    const ShiftInput in{alpha, beta, l, lp};
                    const unsigned expected = closed(in);
                    for (const auto& w : opts.triples) {
                        ++report.cases;
                        const unsigned got = shift_oracle(in, w);
                        if (got != expected) {
                            std::ostringstream os;
                            os << "shift mismatch at " << to_string(in) << " W=(" << w.w1() << ',' << w.w2() << ','
                               << w.w3() << "): closed=" << expected << " oracle=" << got;
                            record(os.str());
                        }
                    }
                }
            }
        }
    }

    for (unsigned n = 0; n <= opts.max_c2; ++n) {
        for (const auto& alpha : enumerate_partitions(n)) {
            ++report.cases;
            GradedDims expected = GradedDims::unit();
            for (unsigned m : alpha.multiplicities()) {
                if (m != 0) expected = tensor(expected, macdonald_sym(m, kEllipticCurve));
            }
            const GradedDims got = betti_sym_component(alpha, {});
            if (got != expected) {
                record("symmetric product mismatch at alpha=" + to_exponent_string(alpha) +
                       ": decomposition=" + to_polynomial_string(got) +
                       " generating function=" + to_polynomial_string(expected));
            }
        }
    }
    return report;
}

}  // namespace sheafloc
