#include "fockbench/counterexample.hpp"

#include <cmath>
#include <vector>

namespace fockbench {

SeqSpec counterexample_lambda_sq_spec() {
    SeqSpec s;
    s.coeff = 1;
    s.n_exp = -2;
    s.base = 1;
    s.fact_exp = 1;
    return s;
}

double counterexample_lambda(int n) {
    if (n < 1) throw Error("counterexample lambda is indexed from n = 1");
    double lgamma_n = std::lgamma(static_cast<double>(n));  // log (n-1)!
    return std::exp(0.5 * (lgamma_n - std::log(static_cast<double>(n))));
}

FockVector<std::complex<double>> counterexample_truncate(int d, int n_max) {
    if (d < 1) throw Error("counterexample truncation needs d >= 1");
    if (n_max < 0) n_max = d;
    if (n_max < d)
        throw Error("workspace too small: counterexample truncation needs n_max >= d");
    Workspace ws{d, n_max};
    FockVector<std::complex<double>> phi(ws);
    for (int n = 1; n <= d; ++n) {
        std::vector<int> counts(d, 0);
        counts[n - 1] = n;  // the monomial e_n^n
        double coeff = counterexample_lambda(n) /
                       std::exp(std::lgamma(static_cast<double>(n) + 1.0));
        phi.add_term(OccupationIndex(std::move(counts)), {coeff, 0.0});
    }
    return phi;
}

}  // namespace fockbench
