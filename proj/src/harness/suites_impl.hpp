#pragma once

#include "dunkl/harness/config.hpp"
#include "dunkl/harness/report.hpp"

namespace dunkl::harness::detail {

void suite_plancherel(const SuiteConfig&, SuiteReport&);
void suite_inversion(const SuiteConfig&, SuiteReport&);
void suite_kernel_bound(const SuiteConfig&, SuiteReport&);
void suite_dunkl_derivative(const SuiteConfig&, SuiteReport&);
void suite_heat(const SuiteConfig&, SuiteReport&);
void suite_translation_decay(const SuiteConfig&, SuiteReport&);
void suite_almost_ortho(const SuiteConfig&, SuiteReport&);
void suite_support_lemma(const SuiteConfig&, SuiteReport&);
void suite_decomposition(const SuiteConfig&, SuiteReport&);
void suite_kernel_probe(const SuiteConfig&, SuiteReport&);
void suite_decay_slope(const SuiteConfig&, SuiteReport&);
void suite_subordination(const SuiteConfig&, SuiteReport&);
void suite_maximal_domination(const SuiteConfig&, SuiteReport&);
void suite_paraproduct_bound(const SuiteConfig&, SuiteReport&);
void suite_kato_ponce(const SuiteConfig&, SuiteReport&);
void suite_kato_ponce_split(const SuiteConfig&, SuiteReport&);

}  // namespace dunkl::harness::detail
