#ifndef FOCKBENCH_COUNTEREXAMPLE_HPP
#define FOCKBENCH_COUNTEREXAMPLE_HPP

#include <complex>

#include "fockbench/fock_vector.hpp"
#include "fockbench/seq_spec.hpp"

namespace fockbench {

/// |lambda_n|^2 = (n-1)!/n, i.e. fact(n)^1 * n^-2: the canonical choice
/// that puts the shifted terms |lambda_n|^2/(n-1)! at exactly 1/n.
SeqSpec counterexample_lambda_sq_spec();

/// lambda_n = sqrt((n-1)!/n), taken real positive (phases are irrelevant to
/// every norm involved).
double counterexample_lambda(int n);

/// Grade-n truncation of Phi = sum_{n>=1} lambda_n e_n^n / n! in a
/// d-dimensional float workspace: the grade-n component is the single key
/// n*delta_n with coefficient lambda_n/n!, so ||Phi_n||^2 = 1/n^2 while the
/// square-root number energy grows like the harmonic sum.
FockVector<std::complex<double>> counterexample_truncate(int d, int n_max = -1);

}  // namespace fockbench

#endif
